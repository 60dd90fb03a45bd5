#ifndef QWI_DIRAC_COMB_HPP
#define QWI_DIRAC_COMB_HPP

#include "qwi/matrices.hpp"
#include "qwi/periodic.hpp"
#include "qwi/rootscan.hpp"

#include <string>
#include <vector>

namespace qwi {

// Finite comb of N equal zero-range barriers, spacing l, strength alpha,
// carved into a flat interior at U = 0 and clamped by half-infinite walls
// of height U_E on both sides:
//
//   wall U_E | l | delta, l | ... | delta, l | wall U_E
//              \------- N cells of (delta, flight l) ------/
//
// Bound levels live in (0, U_E).  Levels falling inside a gap of the
// infinite comb's band structure are surface-localized (Tamm) states.
struct CombSpec {
    double alpha = 0.0;
    double l = 1.0;
    unsigned n_cells = 1;
    double U_E = 10.0;
    UnitSystem units;
};

void validate_comb(const CombSpec& spec);

// Equivalent explicit profile (walls become leads at U_E), e.g. for the
// brute-force solver or the generic cascade residual.
PotentialProfile comb_profile(const CombSpec& spec);

// One period (delta then flight l) at energy E, in the interior medium.
TransferMatrix comb_cell_transfer(const CombSpec& spec, double E);
ImpedanceMatrix comb_cell_impedance_matrix(const CombSpec& spec, double E);

// Half-trace of the cell: cos(k l) + Omega sin(k l), Omega = m alpha/(hbar^2 k).
double comb_chi(const CombSpec& spec, double E);

// Two independent single-valued residuals whose zeros on (0, U_E) are the
// bound levels of the finite comb.  Both are real on the whole interval.
//
// "impedance" clears every denominator through the Chebyshev pair
// U_{N-1}, U_N of chi, so it is finite everywhere:
//   U_{N-1} * 2 (Omega - q) - U_N * ((1 - q^2) sin xi - 2 q cos xi),
// with xi = k l and q = sqrt((U_E - E)/E).
double tamm_residual_impedance(const CombSpec& spec, double E);

// "cot" keeps the cot((N+1) lambda) factor of the compact eigencondition,
// so it has poles inside bands (handled by the scanner) and is undefined on
// the measure-zero set sin(xi) = 0; roots there are rejected.
double tamm_residual_cot(const CombSpec& spec, double E);

enum class TammForm { impedance, cot };

// All residual roots in (0, U_E) for one form, pole-filtered.
std::vector<double> tamm_roots(const CombSpec& spec, TammForm form,
                               const RootScanOptions& opt = {9000});

struct TammLevel {
    double energy = 0.0;
    double chi = 0.0;        // band-structure half-trace at this level
    bool in_gap = false;     // |chi| > 1: surface-localized
    double residual = 0.0;   // residual value at the reported root
    double form_discrepancy = 0.0; // |E_impedance - E_cot| when both ran
};

struct TammSolution {
    std::vector<TammLevel> levels;         // every bound level found
    std::vector<TammLevel> surface_states; // the in-gap subset
    std::string method;                    // "impedance", "cot" or "both"
};

// Solve the comb with one or both residual forms.  With "both", the root
// lists are matched pairwise and the per-level discrepancy recorded; a count
// mismatch throws semantic_error since it means a scanner artifact.
TammSolution solve_tamm(const CombSpec& spec, const std::string& method = "both",
                        const RootScanOptions& opt = {9000});

// Formalism-free checker: propagates (psi, psi') across an arbitrary profile
// in real arithmetic and roots psi'_R + kappa_R psi_R.  Both leads must sit
// above the scan window.  Used to validate the comb solvers.
double bound_state_mismatch(const PotentialProfile& p, double E);
std::vector<double> bound_states_bruteforce(const PotentialProfile& p,
                                            double E_lo, double E_hi,
                                            const RootScanOptions& opt = {9000});

} // namespace qwi

#endif
