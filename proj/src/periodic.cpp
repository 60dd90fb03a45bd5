#include "qwi/periodic.hpp"
#include "qwi/errors.hpp"
#include "qwi/impedance.hpp"

#include <cmath>

namespace qwi {

cplx chebyshev_U(int n, cplx x) {
    if (n < -1) return -chebyshev_U(-n - 2, x);
    if (n == -1) return cplx(0.0);
    cplx prev(0.0), cur(1.0);
    for (int i = 0; i < n; ++i) {
        const cplx next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx chebyshev_U_closed(int n, cplx x) {
    const cplx lambda = std::acos(x);
    const cplx s = std::sin(lambda);
    if (s == cplx(0.0)) {
        // x = +-1: limit value (n+1) x^n
        const double sign = (x.real() < 0.0 && (n & 1)) ? -1.0 : 1.0;
        return cplx(sign * (n + 1));
    }
    return std::sin(double(n + 1) * lambda) / s;
}

BlochParameter bloch_parameter(const Matrix2& cell) {
    BlochParameter b;
    b.chi = 0.5 * cell.trace();
    b.lambda = std::acos(b.chi);
    return b;
}

namespace {

void require_unimodular(const Matrix2& m, double tol, const char* who) {
    if (std::abs(m.det() - cplx(1.0)) > tol)
        throw error(errc::non_unimodular,
                    std::string(who) + ": cell determinant differs from 1 "
                                       "beyond tolerance");
}

void require_closed_cell(const TransferMatrix& t, const char* who) {
    if (t.z_left != t.z_right)
        throw error(errc::impedance_mismatch,
                    std::string(who) + ": cell must start and end in the same medium");
}

} // namespace

Matrix2 matrix_power_chebyshev(const Matrix2& cell, unsigned n, double det_tol) {
    require_unimodular(cell, det_tol, "matrix_power_chebyshev");
    if (n == 0) return Matrix2::identity();
    const cplx chi = 0.5 * cell.trace();
    const cplx u1 = chebyshev_U(int(n) - 1, chi);
    const cplx u2 = chebyshev_U(int(n) - 2, chi);
    return cell * u1 - Matrix2::identity() * u2;
}

Amplitudes rt_n_cells(const TransferMatrix& cell, unsigned n) {
    require_closed_cell(cell, "rt_n_cells");
    require_unimodular(cell.m, 1e-10, "rt_n_cells");
    const cplx chi = 0.5 * cell.m.trace();
    const cplx u1 = chebyshev_U(int(n) - 1, chi);
    const cplx u2 = chebyshev_U(int(n) - 2, chi);
    const cplx den = cell.m.a11 * u1 - u2;
    if (den == cplx(0.0))
        throw error(errc::resonance_singularity,
                    "rt_n_cells: cascade transmission pole");
    return {cell.m.a21 * u1 / den, 1.0 / den};
}

cplx input_impedance_n_cells(const CellSpec& cell, unsigned n, cplx Z_load) {
    require_closed_cell(cell.transfer, "input_impedance_n_cells");
    require_unimodular(cell.transfer.m, 1e-10, "input_impedance_n_cells");
    const cplx chi = 0.5 * cell.transfer.m.trace();
    const cplx u1 = chebyshev_U(int(n) - 1, chi);
    const cplx u2 = chebyshev_U(int(n) - 2, chi);
    // T -> Z is entrywise linear, so the cascade impedance matrix follows
    // from T^N = T U_{n-1} - I U_{n-2} without forming the power:
    // Z(I) = [[0,-1],[1,0]].
    const Matrix2 z1 = impedance_from_transfer(cell.transfer).m;
    ImpedanceMatrix zn;
    zn.m = {z1.a11 * u1, z1.a12 * u1 + u2, z1.a21 * u1 - u2, z1.a22 * u1};
    zn.z_left = zn.z_right = cell.z_edge();
    return apply_impedance_matrix(zn, Z_load);
}

cplx eigen_residual_cascade(const CellSpec& cell, const AffixSpec& affix,
                            unsigned n, const UnitSystem& u) {
    require_closed_cell(cell.transfer, "eigen_residual_cascade");
    require_unimodular(cell.transfer.m, 1e-10, "eigen_residual_cascade");

    const cplx z0 = cell.z_edge();
    const cplx zL = affix.z_left_lead;
    const cplx zR = affix.z_right_lead;
    const cplx gamma = cplx(0.0, 1.0) * (u.mass * z0 / u.hbar); // i k_edge

    // left side: decaying-to-the-left lead solution (Z = -z_L at the lead
    // edge) carried rightward through the full left flight
    const double w = affix.l_left + cell.period;
    const cplx chw = std::cosh(gamma * w);
    const cplx shw = std::sinh(gamma * w);
    const cplx lhs_n = z0 * shw - zL * chw;
    const cplx lhs_d = z0 * chw - zL * shw;

    // right side: outgoing (decaying) termination Z = +z_R carried leftward
    // through the right flight to the block face
    const cplx chr = std::cosh(gamma * affix.l_right);
    const cplx shr = std::sinh(gamma * affix.l_right);
    const cplx a_t = z0 * chr - zR * shr;
    const cplx b_t = zR * chr - z0 * shr;

    // and then through the N-cell block in closed form
    const cplx chi = 0.5 * cell.transfer.m.trace();
    const cplx u1 = chebyshev_U(int(n) - 1, chi);
    const cplx u2 = chebyshev_U(int(n) - 2, chi);
    const Matrix2 z1 = impedance_from_transfer(cell.transfer).m;
    const cplx rhs_n = z1.a11 * u1 * a_t - (z1.a12 * u1 + u2) * b_t;
    const cplx rhs_d = (z1.a21 * u1 - u2) * a_t - z1.a22 * u1 * b_t;

    // matching condition cross-multiplied: no denominators survive, so the
    // residual is finite everywhere; normalize to keep it O(1)
    const cplx p = lhs_n * rhs_d;
    const cplx q = rhs_n * lhs_d;
    const double scale = std::abs(p) + std::abs(q) + 1e-300;
    return (p - q) / scale;
}

} // namespace qwi
