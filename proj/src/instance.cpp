#include "riesz/instance.hpp"
#include "riesz/errors.hpp"

#include <json.hpp>

#include <set>

namespace riesz {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg, const std::string& path) {
    throw parse_error(msg, path);
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key())) fail("unknown field '" + it.key() + "'", path);
}

Rat rat_at(const json& j, const std::string& path) {
    if (!j.is_string()) fail("rational must be a \"num/den\" string", path);
    try {
        return parse_rat(j.get<std::string>());
    } catch (const error& e) {
        fail(e.what(), path);
    }
}

std::vector<Rat> rat_array(const json& j, std::size_t expect, const std::string& path) {
    if (!j.is_array() || j.size() != expect)
        fail("expected an array of " + std::to_string(expect) + " rationals", path);
    std::vector<Rat> out(expect);
    for (std::size_t i = 0; i < expect; ++i)
        out[i] = rat_at(j[i], path + "/" + std::to_string(i));
    return out;
}

std::vector<std::vector<int>> index_lists(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail("expected a nonempty array of index lists", path);
    std::vector<std::vector<int>> out;
    for (std::size_t b = 0; b < j.size(); ++b) {
        const json& part = j[b];
        std::string here = path + "/" + std::to_string(b);
        if (!part.is_array() || part.empty()) fail("expected a nonempty index list", here);
        std::vector<int> ids;
        for (std::size_t k = 0; k < part.size(); ++k) {
            if (!part[k].is_number_integer())
                fail("expected an integer index", here + "/" + std::to_string(k));
            ids.push_back(part[k].get<int>());
        }
        out.push_back(std::move(ids));
    }
    return out;
}

Partition partition_at(const json& j, std::size_t dim, const std::string& path) {
    auto lists = index_lists(j, path);
    try {
        return Partition(dim, lists);
    } catch (const error& e) {
        fail(e.what(), path);
    }
}

} // namespace

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Instance parse_instance(const std::string& bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what(), "/");
    }
    if (!root.is_object()) fail("instance must be a JSON object", "/");
    reject_unknown(root,
                   {"dimension", "weights", "expectationPartition", "algebraAtoms", "charge",
                    "density", "functional", "options"},
                   "/");

    Instance inst;
    inst.digest = content_digest(bytes);

    if (!root.contains("dimension") || !root["dimension"].is_number_integer() ||
        root["dimension"].get<long long>() <= 0)
        fail("dimension must be a positive integer", "/dimension");
    inst.dimension = root["dimension"].get<std::size_t>();

    if (!root.contains("weights")) fail("missing weights", "/weights");
    inst.weights = rat_array(root["weights"], inst.dimension, "/weights");
    for (std::size_t i = 0; i < inst.weights.size(); ++i)
        if (inst.weights[i] <= 0)
            fail("weights must be strictly positive", "/weights/" + std::to_string(i));

    if (!root.contains("expectationPartition")) fail("missing partition", "/expectationPartition");
    Partition blocks = partition_at(root["expectationPartition"], inst.dimension,
                                    "/expectationPartition");
    inst.expectation_partition = blocks.atoms();

    if (!root.contains("algebraAtoms")) fail("missing algebra atoms", "/algebraAtoms");
    Partition algebra = partition_at(root["algebraAtoms"], inst.dimension, "/algebraAtoms");
    inst.algebra_atoms = algebra.atoms();
    if (!algebra.refines(blocks))
        fail("algebra atoms must refine the expectation partition", "/algebraAtoms");

    if (root.contains("charge")) {
        const json& ch = root["charge"];
        inst.charge_values = rat_array(ch, algebra.atom_count(), "/charge");
    }
    if (root.contains("density"))
        inst.density = Element(rat_array(root["density"], inst.dimension, "/density"));

    if (root.contains("functional")) {
        const json& fn = root["functional"];
        if (!fn.is_object() || !fn.contains("type") || !fn["type"].is_string())
            fail("functional needs a \"type\"", "/functional");
        Instance::FunctionalSpec spec;
        std::string type = fn["type"].get<std::string>();
        if (type == "density") {
            reject_unknown(fn, {"type", "y"}, "/functional");
            if (!fn.contains("y")) fail("density functional needs \"y\"", "/functional/y");
            spec.is_density = true;
            spec.y = Element(rat_array(fn["y"], inst.dimension, "/functional/y"));
        } else if (type == "matrix") {
            reject_unknown(fn, {"type", "rows"}, "/functional");
            if (!fn.contains("rows") || !fn["rows"].is_array() ||
                fn["rows"].size() != inst.dimension)
                fail("matrix functional needs n rows", "/functional/rows");
            spec.is_density = false;
            for (std::size_t r = 0; r < inst.dimension; ++r)
                spec.rows.push_back(rat_array(fn["rows"][r], inst.dimension,
                                              "/functional/rows/" + std::to_string(r)));
        } else {
            fail("functional type must be \"density\" or \"matrix\"", "/functional/type");
        }
        inst.functional = std::move(spec);
    }

    if (root.contains("options")) {
        const json& opt = root["options"];
        if (!opt.is_object()) fail("options must be an object", "/options");
        reject_unknown(opt, {"theta", "depth", "oracle"}, "/options");
        if (opt.contains("theta")) {
            inst.options.theta = rat_at(opt["theta"], "/options/theta");
            if (inst.options.theta <= 1) fail("theta must exceed 1", "/options/theta");
        }
        if (opt.contains("depth")) {
            if (!opt["depth"].is_number_integer() || opt["depth"].get<int>() < 1)
                fail("depth must be a positive integer", "/options/depth");
            inst.options.depth = opt["depth"].get<int>();
        }
        if (opt.contains("oracle")) {
            if (!opt["oracle"].is_boolean()) fail("oracle must be a boolean", "/options/oracle");
            inst.options.oracle = opt["oracle"].get<bool>();
        }
    }

    // Cross-field checks that need the assembled pieces.
    if (inst.charge_values) {
        try {
            (void)inst.charge();
        } catch (const error& e) {
            fail(e.what(), "/charge");
        }
    }
    return inst;
}

Expectation Instance::expectation() const {
    return Expectation(Partition(dimension, expectation_partition), weights);
}

Partition Instance::algebra() const {
    return Partition(dimension, algebra_atoms);
}

Charge Instance::charge() const {
    if (charge_values)
        return Charge(algebra(), Partition(dimension, expectation_partition), *charge_values);
    if (density) return Charge::from_density(expectation(), *density, algebra());
    throw precondition_error("instance carries neither charge values nor a density");
}

Functional Instance::make_functional() const {
    if (!functional) throw precondition_error("instance carries no functional");
    if (functional->is_density) return Functional::density(expectation(), functional->y);
    return Functional::matrix(expectation(), functional->rows);
}

} // namespace riesz
