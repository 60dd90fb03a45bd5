#ifndef QWI_PERIODIC_HPP
#define QWI_PERIODIC_HPP

#include "qwi/matrices.hpp"

namespace qwi {

// Chebyshev polynomial of the second kind by the three-term recurrence
// U_{n+1} = 2 x U_n - U_{n-1}, U_{-1} = 0, U_0 = 1.  Negative n follows the
// reflection U_{-n} = -U_{n-2}, so U_{-1} = 0 and U_{-2} = -1 are valid.
cplx chebyshev_U(int n, cplx x);

// Same quantity through sin((n+1) lambda)/sin(lambda) with lambda = acos(x);
// used to cross-check the recurrence, including for |x| > 1.
cplx chebyshev_U_closed(int n, cplx x);

// Bloch characterization of a unit cell: chi = Tr(T)/2 and the phase
// lambda = acos(chi) on the principal branch.  |chi| <= 1 marks a pass
// band (real lambda); |chi| > 1 a gap (complex lambda, growing/decaying
// Bloch factors).
struct BlochParameter {
    cplx chi;
    cplx lambda;
};
BlochParameter bloch_parameter(const Matrix2& cell);

// One period of a periodic region: its transfer matrix plus the spatial
// period.  The cell must start and end in the same medium (z_left == z_right)
// and have unit determinant.
struct CellSpec {
    TransferMatrix transfer;
    double period = 0.0;

    cplx z_edge() const { return transfer.z_left; }
};

// Closed-form N-th power of a unimodular matrix:
//   T^N = T U_{N-1}(chi) - I U_{N-2}(chi).
// Verifies |det - 1| <= det_tol first and throws non_unimodular otherwise.
Matrix2 matrix_power_chebyshev(const Matrix2& cell, unsigned n,
                               double det_tol = 1e-10);

// Reflection/transmission of an N-cell cascade straight from the single-cell
// entries, without forming the matrix power:
//   t_N = 1/(T11 U_{N-1} - U_{N-2}),  r_N = T21 U_{N-1} / (T11 U_{N-1} - U_{N-2}).
Amplitudes rt_n_cells(const TransferMatrix& cell, unsigned n);

// Input impedance at the left face of an N-cell cascade terminated by
// Z_load at its right face, using the cell's impedance-matrix entries and
// the same Chebyshev pair.  Matches iterating the single-cell map N times.
cplx input_impedance_n_cells(const CellSpec& cell, unsigned n, cplx Z_load);

// Finite periodic structure embedded between half-infinite leads:
//   left lead | flight (period + l_left) | N cells | flight l_right | right lead
// The flights are in the cell-edge medium.  One period-length flight ahead
// of the first cell is always present; l_left and l_right are the extra
// spacers beyond that.  (A cell that ends in a flight, like a barrier-at-
// the-left-edge cell, then produces a left/right symmetric structure at
// l_left = l_right = 0.)  z_*_lead are the lead impedances at the energy
// under test.
struct AffixSpec {
    double l_left = 0.0;
    double l_right = 0.0;
    cplx z_left_lead{0.0};
    cplx z_right_lead{0.0};
};

// Bound/surface-state residual of the embedded cascade at the energy the
// cell and affix were built for.  Denominators are fully cleared, so the
// function is finite everywhere; its zeros are the eigenenergies.  In a
// classically forbidden outer region the residual is purely imaginary up
// to rounding.  The result is normalized to keep magnitudes O(1).
// n = 0 degrades gracefully to a plain well of the combined spacer width.
cplx eigen_residual_cascade(const CellSpec& cell, const AffixSpec& affix,
                            unsigned n, const UnitSystem& u = {});

} // namespace qwi

#endif
