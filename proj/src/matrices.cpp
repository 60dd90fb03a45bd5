#include "qwi/matrices.hpp"
#include "qwi/errors.hpp"

#include <cmath>
#include <string>

namespace qwi {

Matrix2 interface_matrix(cplx z1, cplx z2) {
    if (z1 == cplx(0.0))
        throw error(errc::singular_input,
                    "interface_matrix: left medium has zero impedance (E equals its potential)");
    const cplx r = z2 / z1;
    const cplx p = 0.5 * (1.0 + r);
    const cplx q = 0.5 * (1.0 - r);
    return {p, q, q, p};
}

Matrix2 propagation_matrix(cplx k, double d) {
    const cplx ph = cplx(0.0, 1.0) * k * d;
    return {std::exp(-ph), 0.0, 0.0, std::exp(ph)};
}

Matrix2 delta_matrix(double alpha, cplx k, const UnitSystem& u) {
    if (k == cplx(0.0))
        throw error(errc::singular_input,
                    "delta_matrix: zero wavenumber (E equals the local potential)");
    const cplx omega = u.mass * alpha / (u.hbar * u.hbar * k);
    const cplx i_omega = cplx(0.0, 1.0) * omega;
    return {1.0 + i_omega, i_omega, -i_omega, 1.0 - i_omega};
}

TransferMatrix rect_barrier_transfer(double E, double U_b, double L,
                                     const UnitSystem& u) {
    if (E == 0.0)
        throw error(errc::singular_input, "rect_barrier_transfer: E = 0 (zero lead wavenumber)");
    if (E == U_b)
        throw error(errc::singular_input,
                    "rect_barrier_transfer: E equals the barrier top; nudge the energy");
    const cplx k0 = wavenumber(E, 0.0, u);
    // kappa is real below the barrier top and +i k_b above it; the same
    // closed form covers both regimes through the complex branch
    const cplx kappa = std::sqrt(cplx(2.0 * u.mass * (U_b - E), 0.0)) / u.hbar;
    const cplx bm = (kappa * kappa - k0 * k0) / (2.0 * k0 * kappa);
    const cplx bp = (kappa * kappa + k0 * k0) / (2.0 * k0 * kappa);
    const cplx ch = std::cosh(kappa * L);
    const cplx sh = std::sinh(kappa * L);
    const cplx I(0.0, 1.0);
    TransferMatrix t;
    t.m = {ch + I * bm * sh, I * bp * sh, -I * bp * sh, ch - I * bm * sh};
    t.z_left = t.z_right = characteristic_impedance(E, 0.0, u);
    return t;
}

ImpedanceMatrix rect_barrier_impedance_matrix(double E, double U_b, double L,
                                              const UnitSystem& u) {
    return impedance_from_transfer(rect_barrier_transfer(E, U_b, L, u));
}

ImpedanceMatrix impedance_from_transfer(const TransferMatrix& t) {
    const Matrix2& T = t.m;
    ImpedanceMatrix z;
    z.m = {0.5 * (T.a11 - T.a21 + T.a12 - T.a22),
           0.5 * (-T.a11 + T.a21 + T.a12 - T.a22),
           0.5 * (T.a11 + T.a21 + T.a12 + T.a22),
           0.5 * (-T.a11 - T.a21 + T.a12 + T.a22)};
    z.z_left = t.z_left;
    z.z_right = t.z_right;
    return z;
}

TransferMatrix transfer_from_impedance(const ImpedanceMatrix& z) {
    const Matrix2& Z = z.m;
    TransferMatrix t;
    t.m = {0.5 * (Z.a11 + Z.a21 - Z.a12 - Z.a22),
           0.5 * (Z.a11 + Z.a21 + Z.a12 + Z.a22),
           0.5 * (-Z.a11 + Z.a21 + Z.a12 - Z.a22),
           0.5 * (-Z.a11 + Z.a21 - Z.a12 + Z.a22)};
    t.z_left = z.z_left;
    t.z_right = z.z_right;
    return t;
}

ScatteringMatrix scattering_from_transfer(const TransferMatrix& t) {
    const Matrix2& T = t.m;
    if (T.a11 == cplx(0.0))
        throw error(errc::resonance_singularity,
                    "scattering_from_transfer: T11 = 0 (transmission pole / bound state)");
    ScatteringMatrix s;
    s.m = {1.0 / T.a11, -T.a12 / T.a11, T.a21 / T.a11,
           T.a22 - T.a12 * T.a21 / T.a11};
    s.z_left = t.z_left;
    s.z_right = t.z_right;
    return s;
}

TransferMatrix transfer_from_scattering(const ScatteringMatrix& s) {
    const Matrix2& S = s.m;
    if (S.a11 == cplx(0.0))
        throw error(errc::resonance_singularity,
                    "transfer_from_scattering: S11 = 0 (zero transmission)");
    TransferMatrix t;
    t.m = {1.0 / S.a11, -S.a12 / S.a11, S.a21 / S.a11,
           S.a22 - S.a12 * S.a21 / S.a11};
    t.z_left = s.z_left;
    t.z_right = s.z_right;
    return t;
}

Amplitudes rt_from_transfer(const TransferMatrix& t) {
    if (t.m.a11 == cplx(0.0))
        throw error(errc::resonance_singularity,
                    "rt_from_transfer: T11 = 0 (transmission pole / bound state)");
    return {t.m.a21 / t.m.a11, 1.0 / t.m.a11};
}

FluxCoefficients flux_coefficients(const TransferMatrix& t) {
    if (t.z_left.real() == 0.0)
        throw error(errc::singular_input,
                    "flux_coefficients: left lead is evanescent, incident flux undefined");
    const Amplitudes a = rt_from_transfer(t);
    FluxCoefficients f;
    f.T = std::norm(a.t) * t.z_right.real() / t.z_left.real();
    f.R = std::norm(a.r);
    f.defect = std::abs(f.T + f.R - 1.0);
    return f;
}

TransferMatrix compose(const TransferMatrix& left, const TransferMatrix& right) {
    if (left.z_right != right.z_left)
        throw error(errc::impedance_mismatch,
                    "compose: connecting media differ between the two factors");
    TransferMatrix out;
    out.m = left.m * right.m;
    out.z_left = left.z_left;
    out.z_right = right.z_right;
    return out;
}

TransferMatrix profile_transfer(const PotentialProfile& p, double E) {
    const std::size_t n = p.segments.size();
    // media 0..n+1: left lead, segments, right lead
    std::vector<cplx> k(n + 2), z(n + 2);
    k[0] = wavenumber(E, p.left_lead.U, p.units);
    z[0] = characteristic_impedance(E, p.left_lead.U, p.units);
    for (std::size_t j = 0; j < n; ++j) {
        k[j + 1] = wavenumber(E, p.segments[j].U, p.units);
        z[j + 1] = characteristic_impedance(E, p.segments[j].U, p.units);
    }
    k[n + 1] = wavenumber(E, p.right_lead.U, p.units);
    z[n + 1] = characteristic_impedance(E, p.right_lead.U, p.units);

    for (std::size_t j = 0; j <= n + 1; ++j)
        if (z[j] == cplx(0.0))
            throw error(errc::singular_input,
                        "profile_transfer: E equals the potential of medium " +
                            std::to_string(j) + "; nudge the energy");

    Matrix2 T = Matrix2::identity();
    std::size_t di = 0;
    for (std::size_t b = 0; b <= n; ++b) {
        // a delta sitting on boundary b acts in the medium left of it,
        // before the step to the next medium
        while (di < p.deltas.size() && p.deltas[di].position_index == b) {
            T = T * delta_matrix(p.deltas[di].strength, k[b], p.units);
            ++di;
        }
        T = T * interface_matrix(z[b], z[b + 1]);
        if (b < n) T = T * propagation_matrix(k[b + 1], p.segments[b].length);
    }

    TransferMatrix out;
    out.m = T;
    out.z_left = z[0];
    out.z_right = z[n + 1];
    return out;
}

} // namespace qwi
