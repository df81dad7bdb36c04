// ymodt — classes of graph/configuration hypersurface complements modulo
// the torus class, with a finite-field point-counting cross-check.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ymodt/cli.hpp"

namespace {

void add_input_options(CLI::App* cmd, ymodt::CliOptions& opt) {
    cmd->add_option("--builder", opt.builder,
                    "builder expression, e.g. \"C 5\", \"K 3 3\", \"Whats 4\", \"octahedron\"");
    cmd->add_option("--edges", opt.edges_path, "edge-list file: `u v [label]` per line");
    cmd->add_option("--matrix", opt.matrix_path, "matrix JSON file: {\"rows\": [[..]], \"labels\": [..]}");
    cmd->add_flag("--json", opt.json_out, "machine-readable output");
}

std::vector<ymodt::i64> parse_primes(const std::string& s) {
    std::vector<ymodt::i64> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ymodt::i64 p = std::stoll(tok);
        if (!ymodt::is_supported_prime(p))
            throw CLI::ValidationError("--primes", "supported primes are 3,5,7,11,13");
        out.push_back(p);
    }
    if (out.empty()) throw CLI::ValidationError("--primes", "no primes given");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classes of graph/configuration hypersurface complements mod the torus class"};
    app.require_subcommand(1);

    ymodt::CliOptions opt;
    if (const char* env = std::getenv("YMODT_BUDGET")) opt.budget = std::atoll(env);
    std::string primes_arg;

    auto* c_class = app.add_subcommand("class", "compute [Y] and [Ytorus] mod T");
    add_input_options(c_class, opt);
    c_class->add_flag("--trace", opt.trace, "print the rule trace");

    auto* c_count = app.add_subcommand("count", "finite-field point counts");
    add_input_options(c_count, opt);
    c_count->add_option("--primes", primes_arg, "comma-separated primes (default 3,5,7)");
    c_count->add_option("--budget", opt.budget, "evaluation budget");

    auto* c_verify = app.add_subcommand("verify", "engine vs point-count congruences plus CRT");
    add_input_options(c_verify, opt);
    c_verify->add_option("--primes", primes_arg, "comma-separated primes (default 3,5,7)");
    c_verify->add_option("--budget", opt.budget, "evaluation budget");
    c_verify->add_option("--bound", opt.bound, "CRT reconstruction bound (default 50)");

    auto* c_table = app.add_subcommand("table", "recompute the reference example table");
    c_table->add_flag("--json", opt.json_out, "machine-readable output");

    auto* c_fat = app.add_subcommand("fatnexus", "nexi and fat-nexus witness of the simplified graph");
    add_input_options(c_fat, opt);

    bool dual_flag = false;
    auto* c_mat = app.add_subcommand("matroid", "bases, rank, connectivity, uniform signature");
    add_input_options(c_mat, opt);
    c_mat->add_flag("--dual", dual_flag, "report the dual matroid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (!primes_arg.empty()) opt.primes = parse_primes(primes_arg);
        if (c_class->parsed()) return ymodt::cmd_class(opt, std::cout);
        if (c_count->parsed()) return ymodt::cmd_count(opt, std::cout);
        if (c_verify->parsed()) return ymodt::cmd_verify(opt, std::cout);
        if (c_table->parsed()) return ymodt::cmd_table(opt, std::cout);
        if (c_fat->parsed()) return ymodt::cmd_fatnexus(opt, std::cout);
        if (c_mat->parsed()) return ymodt::cmd_matroid(opt, dual_flag, std::cout);
    } catch (const ymodt::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
