#ifndef QWI_POTENTIAL_HPP
#define QWI_POTENTIAL_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qwi {

using cplx = std::complex<double>;

struct UnitSystem {
    double hbar = 1.0;
    double mass = 1.0;
};

bool units_valid(const UnitSystem& u);

// k = sqrt(2m(E-U))/hbar on the principal branch: real >= 0 above the
// potential, +i kappa below it.  Never negative-real or negative-imaginary.
cplx wavenumber(double E, double U, const UnitSystem& u = {});

// z = hbar k / m = sqrt(2(E-U)/m); zero exactly when E == U.
cplx characteristic_impedance(double E, double U, const UnitSystem& u = {});

struct Lead {
    double U = 0.0;
};

struct Segment {
    double length = 0.0;
    double U = 0.0;
};

// A zero-range barrier of strength alpha sitting on a segment boundary.
// Boundary numbering: 0 is the left-lead edge, n is the right-lead edge
// for a profile with n segments.  The wavefunction derivative jumps by
// (2 m alpha / hbar^2) psi across it.
struct DeltaBarrier {
    double strength = 0.0;
    std::size_t position_index = 0;
};

struct PotentialProfile {
    UnitSystem units;
    Lead left_lead;
    Lead right_lead;
    std::vector<Segment> segments;
    std::vector<DeltaBarrier> deltas; // sorted by position_index, unique

    std::size_t boundary_count() const { return segments.size() + 1; }
    double total_length() const;
    // Largest |U| appearing anywhere; used for tolerance scaling.
    double potential_scale() const;
    bool has_symmetric_leads() const { return left_lead.U == right_lead.U; }
};

// Checks segment lengths, delta placement and units; throws semantic_error.
void validate_profile(const PotentialProfile& p);

struct ParseResult {
    PotentialProfile profile;
    std::vector<std::string> warnings; // e.g. merged same-boundary deltas
};

// Reads the JSON profile document (see README for the schema).  Zero-strength
// deltas are dropped; deltas sharing a boundary are merged with a warning.
ParseResult parse_profile(const std::string& text);
ParseResult parse_profile_file(const std::string& path);

std::string serialize_profile(const PotentialProfile& p);

} // namespace qwi

#endif
