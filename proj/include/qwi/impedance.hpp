#ifndef QWI_IMPEDANCE_HPP
#define QWI_IMPEDANCE_HPP

#include "qwi/matrices.hpp"
#include "qwi/potential.hpp"

namespace qwi {

// Local wave impedance Z(x) = (hbar / i m) psi'(x) / psi(x).  For a pure
// right-mover it equals +z of the medium; a pure left-mover gives -z.

// Z from modal amplitudes at a point: z (a_plus - a_minus)/(a_plus + a_minus).
cplx impedance_from_amplitudes(cplx a_plus, cplx a_minus, cplx z);

// Pull Z backwards through a uniform stretch of length d with medium
// impedance z0.  gamma = i k is the propagation constant.
cplx propagate_uniform(cplx Z_far, cplx z0, cplx gamma, double d);

// Jump across a zero-range barrier, looking right: Z_left = Z_right + 2 i alpha / hbar.
cplx delta_jump(cplx Z_right, double alpha, const UnitSystem& u = {});

// Mobius action of an impedance matrix: given the load impedance seen at the
// far (right) side, return the input impedance at the near (left) side.
// Invariant under scalar rescaling of zm.m.  Lead impedances must be supplied
// because the matrix is normalized to the media it connects.
cplx apply_impedance_matrix(const ImpedanceMatrix& zm, cplx Z_load);

// Reflection coefficient of a load Z against a lead of impedance z_lead and
// its inverse.  impedance_from_reflection throws bound_state_pole at rho = -1
// territory (Z = -z_lead) where the map degenerates.
cplx reflection_from_impedance(cplx Z, cplx z_lead);
cplx impedance_from_reflection(cplx rho, cplx z_lead);

// Input impedance of the full profile at energy E, looking right from the
// left lead edge, with the right lead itself as the termination (Z = z_R).
cplx profile_input_impedance(const PotentialProfile& p, double E);

} // namespace qwi

#endif
