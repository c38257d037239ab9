#include "riesz/certificate.hpp"
#include "riesz/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw riesz::precondition_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const riesz::Certificate& cert, bool as_json, double seconds) {
    if (as_json) {
        std::cout << cert.to_json().dump(2) << "\n";
    } else {
        std::cout << cert.pretty();
        std::cerr << "elapsed: " << seconds << "s\n";
    }
    return cert.all_passed() ? kExitPass : kExitCheckFailure;
}

struct FileArgs {
    std::string path;
    std::string theta;
    int depth = 0;
    bool oracle = false;
    std::size_t oracle_bound = 12;
    bool json = false;
};

riesz::RunOptions to_options(const FileArgs& a, bool force_oracle_flag) {
    riesz::RunOptions o;
    if (!a.theta.empty()) o.theta = riesz::parse_rat(a.theta);
    if (a.depth > 0) o.depth = a.depth;
    if (force_oracle_flag && a.oracle) o.oracle = true;
    o.oracle_bound = a.oracle_bound;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vector-lattice decomposition and representation toolkit"};
    app.require_subcommand(1);

    FileArgs dec, rep, inv, ver;
    std::uint64_t seed = 42, trials = 100;
    bool selftest_json = false;

    auto* cmd_dec = app.add_subcommand("decompose", "Hahn-Jordan decomposition of the charge");
    cmd_dec->add_option("file", dec.path, "instance file")->required();
    cmd_dec->add_option("--theta", dec.theta, "domination factor, rational > 1");
    cmd_dec->add_flag("--oracle", dec.oracle, "run exhaustive enumeration checks");
    cmd_dec->add_option("--oracle-bound", dec.oracle_bound, "atom bound for enumeration");
    cmd_dec->add_flag("--json", dec.json, "emit the certificate as JSON");

    auto* cmd_rep = app.add_subcommand("represent", "representation of the functional");
    cmd_rep->add_option("file", rep.path, "instance file")->required();
    cmd_rep->add_option("--depth", rep.depth, "dyadic depth (>= 1)");
    cmd_rep->add_flag("--oracle", rep.oracle, "run exhaustive enumeration checks");
    cmd_rep->add_option("--oracle-bound", rep.oracle_bound, "atom bound for enumeration");
    cmd_rep->add_flag("--json", rep.json, "emit the certificate as JSON");

    auto* cmd_inv = app.add_subcommand("invert", "canonical partial inverse of the density");
    cmd_inv->add_option("file", inv.path, "instance file")->required();
    cmd_inv->add_option("--depth", inv.depth, "dyadic depth (>= 1)");
    cmd_inv->add_flag("--json", inv.json, "emit the certificate as JSON");

    auto* cmd_ver = app.add_subcommand("verify", "every check applicable to the instance");
    cmd_ver->add_option("file", ver.path, "instance file")->required();
    cmd_ver->add_option("--theta", ver.theta, "domination factor, rational > 1");
    cmd_ver->add_option("--depth", ver.depth, "dyadic depth (>= 1)");
    cmd_ver->add_flag("--oracle", ver.oracle, "run exhaustive enumeration checks");
    cmd_ver->add_option("--oracle-bound", ver.oracle_bound, "atom bound for enumeration");
    cmd_ver->add_flag("--json", ver.json, "emit the certificate as JSON");

    auto* cmd_self = app.add_subcommand("selftest", "randomized property campaign");
    cmd_self->add_option("--seed", seed, "RNG seed");
    cmd_self->add_option("--trials", trials, "number of trials (>= 1)");
    cmd_self->add_flag("--json", selftest_json, "emit the certificate as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInputError;
    }

    try {
        auto started = std::chrono::steady_clock::now();
        auto seconds = [&] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                .count();
        };
        if (cmd_dec->parsed()) {
            riesz::Instance inst = riesz::parse_instance(read_file(dec.path));
            return emit(riesz::run_decompose(inst, to_options(dec, true)), dec.json, seconds());
        }
        if (cmd_rep->parsed()) {
            riesz::Instance inst = riesz::parse_instance(read_file(rep.path));
            return emit(riesz::run_represent(inst, to_options(rep, true)), rep.json, seconds());
        }
        if (cmd_inv->parsed()) {
            riesz::Instance inst = riesz::parse_instance(read_file(inv.path));
            return emit(riesz::run_invert(inst, to_options(inv, false)), inv.json, seconds());
        }
        if (cmd_ver->parsed()) {
            riesz::Instance inst = riesz::parse_instance(read_file(ver.path));
            return emit(riesz::run_verify(inst, to_options(ver, true)), ver.json, seconds());
        }
        if (cmd_self->parsed()) {
            if (trials < 1) {
                std::cerr << "trials must be at least 1\n";
                return kExitInputError;
            }
            return emit(riesz::run_selftest(seed, trials), selftest_json, seconds());
        }
    } catch (const riesz::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const riesz::precondition_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const riesz::bound_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const riesz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitInputError;
}
