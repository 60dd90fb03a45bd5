#ifndef QWI_MATRICES_HPP
#define QWI_MATRICES_HPP

#include "qwi/matrix2.hpp"
#include "qwi/potential.hpp"

namespace qwi {

// All three formalisms share the same wrapper shape: the 2x2 block plus the
// characteristic impedances of the media the matrix connects.  Carrying the
// impedances lets compose() detect mismatched joins instead of silently
// producing garbage.

struct TransferMatrix {
    Matrix2 m;
    cplx z_left{0.0};
    cplx z_right{0.0};
};

struct ScatteringMatrix {
    Matrix2 m; // rows/cols ordered (left, right) ports
    cplx z_left{0.0};
    cplx z_right{0.0};
};

struct ImpedanceMatrix {
    Matrix2 m;
    cplx z_left{0.0};
    cplx z_right{0.0};
};

// --- elementary factories -------------------------------------------------

// Step between media of impedance z1 (left) and z2 (right); det = z2/z1.
Matrix2 interface_matrix(cplx z1, cplx z2);

// Free flight over distance d at wavenumber k, written for amplitudes
// referenced to the segment edges: diag(exp(-ikd), exp(+ikd)).
Matrix2 propagation_matrix(cplx k, double d);

// Zero-range barrier of strength alpha inside a medium of wavenumber k.
Matrix2 delta_matrix(double alpha, cplx k, const UnitSystem& u = {});

// Closed-form transfer matrix of a rectangular barrier of height U_b and
// width L embedded in zero-potential leads, evaluated at energy E.  Valid
// both below and above the barrier top; throws singular_input at E == 0 or
// E == U_b.
TransferMatrix rect_barrier_transfer(double E, double U_b, double L,
                                     const UnitSystem& u = {});

// Same element in the impedance formalism (det-1 normalization).
ImpedanceMatrix rect_barrier_impedance_matrix(double E, double U_b, double L,
                                              const UnitSystem& u = {});

// --- conversions ----------------------------------------------------------

ImpedanceMatrix impedance_from_transfer(const TransferMatrix& t);
TransferMatrix transfer_from_impedance(const ImpedanceMatrix& z);

ScatteringMatrix scattering_from_transfer(const TransferMatrix& t);
TransferMatrix transfer_from_scattering(const ScatteringMatrix& s);

struct Amplitudes {
    cplx r; // reflection, left incidence
    cplx t; // transmission, left incidence
};

// r = T21/T11, t = 1/T11; throws resonance_singularity at T11 == 0.
Amplitudes rt_from_transfer(const TransferMatrix& t);

// Power coefficients including the flux factor for unequal leads:
// T_flux = |t|^2 Re(z_R)/Re(z_L), R = |r|^2.
struct FluxCoefficients {
    double T = 0.0;
    double R = 0.0;
    double defect = 0.0; // |T + R - 1|
};
FluxCoefficients flux_coefficients(const TransferMatrix& t);

// --- composition ----------------------------------------------------------

// left * right in cascade order: the result maps the state right of `right`
// to the state left of `left`.  Throws impedance_mismatch unless
// left.z_right == right.z_left bitwise.
TransferMatrix compose(const TransferMatrix& left, const TransferMatrix& right);

// --- whole-profile assembly ----------------------------------------------

// Transfer matrix of the full profile at energy E: interfaces, segment
// flights and delta barriers in left-to-right order.
TransferMatrix profile_transfer(const PotentialProfile& p, double E);

} // namespace qwi

#endif
