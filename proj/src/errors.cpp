#include "qwi/errors.hpp"

namespace qwi {

const char* errc_name(errc c) {
    switch (c) {
    case errc::singular_input: return "singular_input";
    case errc::resonance_singularity: return "resonance_singularity";
    case errc::bound_state_pole: return "bound_state_pole";
    case errc::impedance_mismatch: return "impedance_mismatch";
    case errc::non_unimodular: return "non_unimodular";
    case errc::out_of_range: return "out_of_range";
    case errc::parse_error: return "parse_error";
    case errc::semantic_error: return "semantic_error";
    case errc::config_error: return "config_error";
    }
    return "unknown";
}

} // namespace qwi
