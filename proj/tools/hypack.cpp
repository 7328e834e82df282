#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hypack/curve.hpp"
#include "hypack/tables.hpp"
#include "hypack/verify.hpp"

// hypack: reproduce the optimal ball and horoball packing data of the
// {inf,q,r,inf} Coxeter cells.
//
//   hypack table <inball|distances|horoball-one|horoball-two>
//   hypack curve --q Q --r R [--samples N] --out PATH
//   hypack verify [--tol X] [--format text|json]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

int main(int argc, char** argv) {
    CLI::App app{"ball and horoball packings of simply truncated Coxeter cells"};
    app.require_subcommand(1);

    std::string table_name;
    CLI::App* table = app.add_subcommand("table", "print one of the result tables");
    table->add_option("name", table_name, "inball | distances | horoball-one | horoball-two")
        ->required();

    int q = 0, r = 0, samples = 100;
    std::string out_path;
    CLI::App* curve = app.add_subcommand("curve", "export the two-horoball density curve");
    curve->add_option("--q", q, "first parameter")->required();
    curve->add_option("--r", r, "second parameter")->required();
    curve->add_option("--samples", samples, "number of samples, >= 2")->default_val(100);
    curve->add_option("--out", out_path, "output CSV path")->required();

    double tol = 2e-5;
    std::string format = "text";
    CLI::App* verify = app.add_subcommand("verify", "recompute the embedded reference data");
    verify->add_option("--tol", tol, "absolute tolerance")->default_val(2e-5);
    verify->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) {
            try {
                hypack::render_table(std::cout, table_name);
            } catch (const std::invalid_argument& e) {
                std::cerr << "hypack: " << e.what() << "\n";
                return 2;
            }
            return 0;
        }
        if (*curve) {
            const hypack::TilingParams params(q, r);
            if (!params.two_ideal_vertices()) {
                std::cerr << "hypack: curve requires a cell with two ideal vertices "
                             "((3,6), (4,4) or (6,3))\n";
                return 2;
            }
            const auto rows = hypack::sample_density_curve(params, samples);
            if (rows.size() == 1)
                std::cerr << "hypack: feasible interval degenerates to a point, "
                             "writing a single row\n";
            std::ofstream os(out_path, std::ios::binary);
            if (!os)
                throw std::runtime_error("cannot open " + out_path + " for writing");
            hypack::write_curve_csv(os, rows);
            if (!os.good())
                throw std::runtime_error("write failed for " + out_path);
            return 0;
        }
        if (*verify) {
            const hypack::Report rep = hypack::run_verify(tol);
            if (format == "json")
                hypack::write_report_json(std::cout, rep);
            else
                hypack::write_report_text(std::cout, rep);
            return rep.all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "hypack: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hypack: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
