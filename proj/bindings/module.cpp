#include "riesz/certificate.hpp"
#include "riesz/errors.hpp"
#include "riesz/partial_inverse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace riesz;

namespace {

// Rationals cross the boundary as fractions.Fraction (ints and "num/den"
// strings are accepted on the way in).
Rat rat_from_py(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj))
        return parse_rat(py::str(obj).cast<std::string>());
    if (py::isinstance<py::str>(obj))
        return parse_rat(obj.cast<std::string>());
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return Rat(Int(py::str(obj.attr("numerator")).cast<std::string>()),
                   Int(py::str(obj.attr("denominator")).cast<std::string>()));
    throw py::type_error("expected int, \"num/den\" string, or Fraction");
}

py::object rat_to_py(const Rat& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(numerator(r).str())),
                    py::int_(py::str(denominator(r).str())));
}

Element element_from_py(const py::sequence& seq) {
    std::vector<Rat> coords;
    coords.reserve(py::len(seq));
    for (const auto& item : seq) coords.push_back(rat_from_py(item));
    return Element(std::move(coords));
}

py::list element_to_py(const Element& v) {
    py::list out;
    for (const Rat& x : v) out.append(rat_to_py(x));
    return out;
}

std::vector<std::vector<int>> lists_from_py(const py::sequence& seq) {
    std::vector<std::vector<int>> out;
    for (const auto& part : seq) out.push_back(part.cast<std::vector<int>>());
    return out;
}

Partition partition_from_py(std::size_t dim, const py::sequence& atoms) {
    return Partition(dim, lists_from_py(atoms));
}

std::vector<Rat> rats_from_py(const py::sequence& seq) {
    std::vector<Rat> out;
    for (const auto& item : seq) out.push_back(rat_from_py(item));
    return out;
}

py::list masks_to_py(const std::vector<Mask>& masks) {
    py::list out;
    for (const Mask& m : masks) out.append(m.to_string());
    return out;
}

py::list checks_to_py(const std::vector<Check>& checks) {
    py::list out;
    for (const Check& c : checks) {
        py::dict d;
        d["name"] = c.name;
        d["scope"] = c.scope;
        d["pass"] = c.pass;
        if (!c.pass) d["witness"] = c.witness;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(rieszkit, m) {
    m.doc() = "exact finite-dimensional vector-lattice toolkit: Hahn-Jordan "
              "decomposition of charges, conditional expectation operators, "
              "functional representation, partial inverses";

    py::register_exception<riesz::error>(m, "RieszError");

    // lattice layer
    m.def("sup_inf", [](const py::sequence& a, const py::sequence& b) {
        Element x = element_from_py(a), y = element_from_py(b);
        return py::make_tuple(element_to_py(sup(x, y)), element_to_py(inf(x, y)));
    });
    m.def("sign_parts", [](const py::sequence& a) {
        auto p = sign_parts(element_from_py(a));
        return py::make_tuple(element_to_py(p.pos), element_to_py(p.neg), element_to_py(p.abs));
    });
    m.def("multiply", [](const py::sequence& a, const py::sequence& b) {
        return element_to_py(element_from_py(a) * element_from_py(b));
    });
    m.def("band_mask", [](const py::sequence& a) {
        return band_mask(element_from_py(a)).to_string();
    });
    m.def("mask_meet", [](const std::string& p, const std::string& q) {
        return meet(Mask::from_string(p), Mask::from_string(q)).to_string();
    });
    m.def("mask_join", [](const std::string& p, const std::string& q) {
        return join(Mask::from_string(p), Mask::from_string(q)).to_string();
    });
    m.def("mask_complement", [](const std::string& p) {
        return complement(Mask::from_string(p)).to_string();
    });

    py::class_<Partition>(m, "Partition")
        .def(py::init([](std::size_t dim, const py::sequence& atoms) {
                 return partition_from_py(dim, atoms);
             }),
             py::arg("dim"), py::arg("atoms"))
        .def_static("singletons", &Partition::singletons)
        .def_property_readonly("dim", &Partition::dim)
        .def_property_readonly("atoms", [](const Partition& p) { return p.atoms(); })
        .def("members",
             [](const Partition& p, std::size_t bound) { return masks_to_py(p.members(bound)); },
             py::arg("bound") = 20)
        .def("is_member",
             [](const Partition& p, const std::string& mask) {
                 return p.is_member(Mask::from_string(mask));
             })
        .def("refines", &Partition::refines);

    py::class_<Expectation>(m, "Expectation")
        .def(py::init([](std::size_t dim, const py::sequence& blocks, const py::sequence& weights) {
                 return Expectation(partition_from_py(dim, blocks), rats_from_py(weights));
             }),
             py::arg("dim"), py::arg("blocks"), py::arg("weights"))
        .def_property_readonly("dim", &Expectation::dim)
        .def("apply",
             [](const Expectation& T, const py::sequence& f) {
                 return element_to_py(T.apply(element_from_py(f)));
             })
        .def("in_range",
             [](const Expectation& T, const py::sequence& f) {
                 return T.in_range(element_from_py(f));
             })
        .def("norm1",
             [](const Expectation& T, const py::sequence& f) {
                 return element_to_py(T.norm1(element_from_py(f)));
             })
        .def("norm2_squared",
             [](const Expectation& T, const py::sequence& f) {
                 return element_to_py(T.norm2_squared(element_from_py(f)));
             })
        .def("holder", [](const Expectation& T, const py::sequence& f, const py::sequence& g) {
            auto h = T.holder(element_from_py(f), element_from_py(g));
            return py::make_tuple(h.holds, element_to_py(h.lhs_squared), element_to_py(h.rhs));
        });

    py::class_<Charge>(m, "Charge")
        .def(py::init([](const Partition& algebra, const Partition& g_blocks,
                         const py::sequence& values) {
                 return Charge(algebra, g_blocks, rats_from_py(values));
             }),
             py::arg("algebra"), py::arg("g_blocks"), py::arg("atom_values"))
        .def_static("from_density",
                    [](const Expectation& T, const py::sequence& f, const Partition& B) {
                        return Charge::from_density(T, element_from_py(f), B);
                    })
        .def_property_readonly("atom_count", &Charge::atom_count)
        .def("evaluate",
             [](const Charge& c, const std::string& p) {
                 return element_to_py(c.evaluate(Mask::from_string(p)));
             })
        .def("charge_supremum",
             [](const Charge& c, const std::string& q) {
                 return element_to_py(c.charge_supremum(Mask::from_string(q)));
             })
        .def("maximal_member",
             [](const Charge& c, const std::string& q, const py::handle& theta) {
                 return c.maximal_member(Mask::from_string(q), rat_from_py(theta)).to_string();
             },
             py::arg("q"), py::arg("theta") = py::int_(2))
        .def("positive_piece",
             [](const Charge& c, const std::string& q) {
                 return c.positive_piece(Mask::from_string(q)).to_string();
             })
        .def("strongly_negative_witness",
             [](const Charge& c, const std::string& p) {
                 return c.strongly_negative_witness(Mask::from_string(p)).to_string();
             })
        .def("negative_part_witness",
             [](const Charge& c, const std::string& q) {
                 return c.negative_part_witness(Mask::from_string(q)).to_string();
             })
        .def("hahn_jordan", [](const Charge& c) { return c.hahn_jordan().to_string(); })
        .def("brute_force_hahn",
             [](const Charge& c, std::size_t bound) {
                 return masks_to_py(c.brute_force_hahn(bound));
             },
             py::arg("bound") = 12);

    // partial inverse layer
    m.def("canonical_inverse", [](const py::sequence& g) {
        return element_to_py(canonical_inverse(element_from_py(g)));
    });
    m.def("spectral_masks", [](const py::sequence& f, int depth) {
        Ladder lad = spectral_masks(element_from_py(f), depth);
        py::list cells;
        for (const auto& [level, mask] : lad.cells)
            cells.append(py::make_tuple(py::int_(py::str(level.str())), mask.to_string()));
        py::dict d;
        d["depth"] = lad.depth;
        d["cells"] = cells;
        d["truncation"] = py::int_(py::str(lad.truncation.str()));
        d["support"] = lad.support.to_string();
        return d;
    });
    m.def("dyadic_bounds", [](const py::sequence& f, int depth) {
        auto [lo, hi] = dyadic_bounds(element_from_py(f), depth);
        return py::make_tuple(element_to_py(lo), element_to_py(hi));
    });
    m.def("spectral_inverse", [](const py::sequence& f, int depth) {
        return element_to_py(spectral_inverse(element_from_py(f), depth));
    });
    m.def("spectral_inverse_upper", [](const py::sequence& f, int depth) {
        return element_to_py(spectral_inverse_upper(element_from_py(f), depth));
    });

    py::class_<Functional>(m, "Functional")
        .def_static("density",
                    [](const Expectation& T, const py::sequence& y) {
                        return Functional::density(T, element_from_py(y));
                    })
        .def_static("matrix",
                    [](const Expectation& T, const py::sequence& rows) {
                        std::vector<std::vector<Rat>> m_;
                        for (const auto& row : rows)
                            m_.push_back(rats_from_py(row.cast<py::sequence>()));
                        return Functional::matrix(T, std::move(m_));
                    })
        .def("evaluate",
             [](const Functional& f, const py::sequence& g) {
                 return element_to_py(f.evaluate(element_from_py(g)));
             })
        .def("exact_represent",
             [](const Functional& f) { return element_to_py(f.exact_represent()); })
        .def("norm_squared", [](const Functional& f) { return element_to_py(f.norm_squared()); })
        .def("positive_component",
             [](const Functional& f) { return f.positive_component().to_string(); })
        .def("dyadic_represent", [](const Functional& f, int depth) {
            return element_to_py(f.dyadic_represent(depth));
        });

    m.def("bijection_report", [](const Expectation& T, const py::sequence& y) {
        return checks_to_py(bijection_report(T, element_from_py(y)));
    });

    // instance / certificate layer
    m.def("run_from_json",
          [](const std::string& command, const std::string& bytes, int depth, bool oracle) {
              Instance inst = parse_instance(bytes);
              RunOptions opts;
              if (depth > 0) opts.depth = depth;
              if (oracle) opts.oracle = true;
              Certificate cert;
              if (command == "decompose") cert = run_decompose(inst, opts);
              else if (command == "represent") cert = run_represent(inst, opts);
              else if (command == "invert") cert = run_invert(inst, opts);
              else if (command == "verify") cert = run_verify(inst, opts);
              else throw precondition_error("unknown command '" + command + "'");
              return cert.to_json().dump(2);
          },
          py::arg("command"), py::arg("bytes"), py::arg("depth") = 0, py::arg("oracle") = false);
    m.def("selftest", [](std::uint64_t seed, std::uint64_t trials) {
        return run_selftest(seed, trials).to_json().dump(2);
    });
}
