#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxplus/errors.hpp"
#include "maxplus/io.hpp"

namespace {

void emit(const maxplus::io::Report& report, bool json) {
    if (json)
        std::cout << report.dump(2) << '\n';
    else
        maxplus::io::print_human(report, std::cout);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact max-plus (tropical) matrix calculator"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> files;
    bool json = false;
    int brute_cap = 7;
    bool urank_oracle = false;
    long max_steps = -1;
    int oracle_len = -1;
    int trace = 10;

    auto* spectral = app.add_subcommand(
        "spectral", "cycle mean, critical graph, cyclicities, eigenbasis");
    spectral->add_option("file", file, "matrix file ('-' for stdin)")->required();
    spectral->add_flag("--json", json, "structured JSON output");

    auto* ranks = app.add_subcommand("ranks", "column/row/tropical/symmetrized ranks");
    ranks->add_option("file", file, "matrix file ('-' for stdin)")->required();
    ranks->add_option("--brute-max", brute_cap,
                      "size cap for the brute-force ranks (default 7)");
    ranks->add_flag("--json", json, "structured JSON output");

    auto* urank = app.add_subcommand("urank", "ultimate rank of a matrix");
    urank->add_option("file", file, "matrix file ('-' for stdin)")->required();
    urank->add_flag("--oracle", urank_oracle,
                    "cross-check through the projective power orbit");
    urank->add_option("--max-steps", max_steps,
                      "orbit step bound (default n^4 + n^2)");
    urank->add_flag("--json", json, "structured JSON output");

    auto* semigroup = app.add_subcommand(
        "semigroup", "decide whether the generated semigroup has maximal ultimate rank");
    semigroup->add_option("files", files, "generator matrix files")
        ->required()
        ->expected(-1);
    auto* oracle_opt = semigroup->add_option(
        "--oracle", oracle_len,
        "verify by enumerating products up to a length (default n+1)");
    oracle_opt->expected(0, 1);
    semigroup->add_flag("--json", json, "structured JSON output");

    auto* powers = app.add_subcommand("powers", "projective power orbit and rank trace");
    powers->add_option("file", file, "matrix file ('-' for stdin)")->required();
    powers->add_option("--max-steps", max_steps,
                       "orbit step bound (default n^4 + n^2)");
    powers->add_option("--trace", trace, "rank-trace length (default 10)");
    powers->add_flag("--json", json, "structured JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectral->parsed()) {
            emit(maxplus::io::report_spectral(maxplus::io::read_matrix_file(file)), json);
        } else if (ranks->parsed()) {
            emit(maxplus::io::report_ranks(maxplus::io::read_matrix_file(file), brute_cap),
                 json);
        } else if (urank->parsed()) {
            emit(maxplus::io::report_urank(maxplus::io::read_matrix_file(file),
                                           urank_oracle, max_steps),
                 json);
        } else if (semigroup->parsed()) {
            std::vector<maxplus::Matrix> gens;
            gens.reserve(files.size());
            for (const std::string& f : files)
                gens.push_back(maxplus::io::read_matrix_file(f));
            std::optional<int> oracle;
            if (oracle_opt->count()) oracle = oracle_len; // -1 keeps the default n+1
            emit(maxplus::io::report_semigroup(gens, oracle), json);
        } else if (powers->parsed()) {
            emit(maxplus::io::report_powers(maxplus::io::read_matrix_file(file),
                                            max_steps, trace),
                 json);
        }
    } catch (const maxplus::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const maxplus::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
