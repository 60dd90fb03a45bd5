#include "qwi/impedance.hpp"
#include "qwi/errors.hpp"

#include <cmath>
#include <vector>

namespace qwi {

cplx impedance_from_amplitudes(cplx a_plus, cplx a_minus, cplx z) {
    return z * (a_plus - a_minus) / (a_plus + a_minus);
}

cplx propagate_uniform(cplx Z_far, cplx z0, cplx gamma, double d) {
    const cplx ch = std::cosh(gamma * d);
    const cplx sh = std::sinh(gamma * d);
    // poles (wavefunction nodes) surface as non-finite values and are the
    // caller's business; throwing here would break residual scans
    return z0 * (Z_far * ch - z0 * sh) / (z0 * ch - Z_far * sh);
}

cplx delta_jump(cplx Z_right, double alpha, const UnitSystem& u) {
    // looking-left impedance jumps by 2 i alpha / hbar across the barrier,
    // independent of the surrounding medium
    return Z_right + cplx(0.0, 2.0 * alpha / u.hbar);
}

cplx apply_impedance_matrix(const ImpedanceMatrix& zm, cplx Z_load) {
    const Matrix2& Z = zm.m;
    return zm.z_left * (Z.a11 * zm.z_right - Z.a12 * Z_load) /
           (Z.a21 * zm.z_right - Z.a22 * Z_load);
}

cplx reflection_from_impedance(cplx Z, cplx z_lead) {
    if (Z == -z_lead)
        throw error(errc::bound_state_pole,
                    "reflection_from_impedance: Z = -z_lead, reflection map pole");
    return (z_lead - Z) / (z_lead + Z);
}

cplx impedance_from_reflection(cplx rho, cplx z_lead) {
    if (rho == cplx(-1.0))
        throw error(errc::bound_state_pole,
                    "impedance_from_reflection: rho = -1, impedance diverges");
    return z_lead * (1.0 - rho) / (1.0 + rho);
}

cplx profile_input_impedance(const PotentialProfile& p, double E) {
    const std::size_t n = p.segments.size();
    std::vector<cplx> k(n + 2), z(n + 2);
    k[0] = wavenumber(E, p.left_lead.U, p.units);
    z[0] = characteristic_impedance(E, p.left_lead.U, p.units);
    for (std::size_t j = 0; j < n; ++j) {
        k[j + 1] = wavenumber(E, p.segments[j].U, p.units);
        z[j + 1] = characteristic_impedance(E, p.segments[j].U, p.units);
    }
    k[n + 1] = wavenumber(E, p.right_lead.U, p.units);
    z[n + 1] = characteristic_impedance(E, p.right_lead.U, p.units);

    // termination: outgoing wave only in the right lead
    cplx Z = z[n + 1];

    // walk right to left; Z is continuous across plain interfaces, jumps at
    // deltas, and winds through each uniform segment
    for (std::size_t b = n + 1; b-- > 0;) {
        for (std::size_t di = p.deltas.size(); di-- > 0;) {
            if (p.deltas[di].position_index == b)
                Z = delta_jump(Z, p.deltas[di].strength, p.units);
        }
        if (b > 0) {
            const cplx gamma = cplx(0.0, 1.0) * k[b];
            Z = propagate_uniform(Z, z[b], gamma, p.segments[b - 1].length);
        }
    }

    if (!std::isfinite(Z.real()) || !std::isfinite(Z.imag()))
        throw error(errc::singular_input,
                    "profile_input_impedance: impedance pole (wavefunction node) at "
                    "this energy; nudge the grid");
    return Z;
}

} // namespace qwi
