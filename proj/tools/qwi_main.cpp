#include "qwi/commands.hpp"
#include "qwi/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

struct CliState {
    qwi::RunConfig cfg;
    std::string output_path;
    double emin = 0.0, emax = 0.0;
    CLI::App* sub = nullptr;
};

void add_common_options(CLI::App* sub, CliState& st, bool default_json) {
    sub->add_option("--input", st.cfg.input_path, "input document path")->required();
    auto* lo = sub->add_option("--emin", st.emin, "lower edge of the energy window");
    auto* hi = sub->add_option("--emax", st.emax, "upper edge of the energy window");
    lo->needs(hi);
    hi->needs(lo);
    sub->add_option("--grid", st.cfg.grid, "number of energy grid points")
        ->check(CLI::Range(2, 10'000'000));
    sub->add_option("--tol", st.cfg.tol, "agreement tolerance for checks")
        ->check(CLI::PositiveNumber);
    const std::map<std::string, qwi::Method> methods{
        {"transfer", qwi::Method::transfer},
        {"impedance", qwi::Method::impedance},
        {"both", qwi::Method::both}};
    sub->add_option("--method", st.cfg.method, "formalism selector")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    const std::map<std::string, qwi::OutputFormat> formats{
        {"csv", qwi::OutputFormat::csv}, {"json", qwi::OutputFormat::json}};
    if (default_json) st.cfg.format = qwi::OutputFormat::json;
    sub->add_option("--format", st.cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--verify", st.cfg.verify,
                  "cross-check results against the brute-force oracle");
    sub->add_option("--output", st.output_path, "output file (default: stdout)");
    // fault-injection hooks for the test harness; hidden from --help
    sub->add_flag("--inject-det-break", st.cfg.inject_det_break)->group("");
    sub->add_flag("--corrupt-residual", st.cfg.corrupt_residual)->group("");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D quantum scattering on piecewise-constant potentials: "
                 "transfer/scattering/impedance matrices, periodic cascades "
                 "and comb surface levels"};
    app.require_subcommand(1);

    std::map<std::string, CliState> states;
    states["spectrum"].sub = app.add_subcommand(
        "spectrum", "scan transmission/reflection over an energy grid");
    states["tamm"].sub =
        app.add_subcommand("tamm", "solve bound and surface levels of a comb");
    states["convert"].sub = app.add_subcommand(
        "convert", "convert one matrix between T, S and Z representations");
    states["validate"].sub = app.add_subcommand(
        "validate", "run the invariant suite on a profile or comb document");

    for (auto& [name, st] : states)
        add_common_options(st.sub, st, name == "convert");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? qwi::exit_ok : qwi::exit_input_error;
    }

    for (auto& [name, st] : states) {
        if (!st.sub->parsed()) continue;
        if (st.sub->count("--emin") > 0) {
            st.cfg.E_min = st.emin;
            st.cfg.E_max = st.emax;
            st.cfg.has_range = true;
        }

        std::ofstream file_out;
        if (!st.output_path.empty()) {
            file_out.open(st.output_path);
            if (!file_out) {
                std::cerr << "error: cannot open output file: " << st.output_path
                          << "\n";
                return qwi::exit_input_error;
            }
        }
        std::ostream& out = file_out.is_open() ? file_out : std::cout;

        try {
            if (name == "spectrum") return qwi::cmd_spectrum(st.cfg, out, std::cerr);
            if (name == "tamm") return qwi::cmd_tamm(st.cfg, out, std::cerr);
            if (name == "convert") return qwi::cmd_convert(st.cfg, out, std::cerr);
            return qwi::cmd_validate(st.cfg, out, std::cerr);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return qwi::exit_input_error;
        }
    }
    return qwi::exit_input_error; // unreachable: a subcommand is required
}
