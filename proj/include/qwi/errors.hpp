#ifndef QWI_ERRORS_HPP
#define QWI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwi {

// Every failure mode carries a tag so callers (and the CLI exit-code mapping)
// can react without string matching.
enum class errc {
    singular_input,        // operation undefined at this energy (z = 0, k = 0)
    resonance_singularity, // T11 = 0: transmission resonance / bound state condition
    bound_state_pole,      // Z = -z_lead: reflection map pole
    impedance_mismatch,    // composing matrices whose connecting leads differ
    non_unimodular,        // det != 1 where a unimodular matrix is required
    out_of_range,          // energy/window outside the supported regime
    parse_error,           // malformed input document
    semantic_error,        // well-formed input violating a model rule
    config_error,          // bad run configuration (flags, grids, ranges)
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Parse errors keep line/column when the underlying reader provides them.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line = -1, int column = -1)
        : error(errc::parse_error, what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace qwi

#endif
