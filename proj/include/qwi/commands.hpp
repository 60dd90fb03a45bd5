#ifndef QWI_COMMANDS_HPP
#define QWI_COMMANDS_HPP

#include "qwi/dirac_comb.hpp"
#include "qwi/matrices.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qwi {

// Exit-code contract shared by every command:
//   0 success, 1 validation failure, 2 input/config error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation_failure = 1;
inline constexpr int exit_input_error = 2;

enum class OutputFormat { csv, json };
enum class Method { transfer, impedance, both };

struct RunConfig {
    std::string input_path;
    double E_min = 0.0;
    double E_max = 0.0;
    bool has_range = false;
    int grid = 200;
    double tol = 1e-8;
    OutputFormat format = OutputFormat::csv;
    Method method = Method::transfer;
    bool verify = false;

    // test hooks, deliberately undocumented in --help
    bool inject_det_break = false;
    bool corrupt_residual = false;
};

struct SpectrumRow {
    double E = 0.0;
    double transmission = 0.0;
    double reflection = 0.0;
    double unitarity_defect = 0.0;
    cplx chi{0.0};
    bool in_gap = false;
    double method_discrepancy = 0.0; // populated when method == both
};

// Each command reads its input document, writes the report to `out` and
// human-facing notes (warnings, grid nudges) to `err`, and returns the exit
// code.  The CLI main is a thin argv adapter over these.
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tamm(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Spectrum evaluation without the I/O wrapper (used by tests and validate).
std::vector<SpectrumRow> evaluate_spectrum(const PotentialProfile& p,
                                           const RunConfig& cfg,
                                           std::ostream& err);

// Shortest decimal that round-trips a double (17 significant digits max).
std::string format_double(double v);

// Energies equal to any potential level in the profile are singular for the
// wavenumber maps; the grid builder moves them by 1e-12 relative and reports
// each nudge on `err`.
std::vector<double> build_energy_grid(const PotentialProfile& p, double lo,
                                      double hi, int n, std::ostream& err);

} // namespace qwi

#endif
