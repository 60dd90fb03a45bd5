#include "qwi/dirac_comb.hpp"
#include "qwi/errors.hpp"

#include <cmath>
#include <limits>

namespace qwi {

void validate_comb(const CombSpec& spec) {
    if (!units_valid(spec.units))
        throw error(errc::semantic_error, "comb: hbar and mass must be finite and positive");
    if (!std::isfinite(spec.alpha))
        throw error(errc::semantic_error, "comb: delta strength must be finite");
    if (!(spec.l > 0.0) || !std::isfinite(spec.l))
        throw error(errc::semantic_error, "comb: spacing must be positive");
    if (spec.n_cells < 1)
        throw error(errc::semantic_error, "comb: need at least one cell");
    if (!(spec.U_E > 0.0) || !std::isfinite(spec.U_E))
        throw error(errc::semantic_error, "comb: wall height must be positive");
}

PotentialProfile comb_profile(const CombSpec& spec) {
    validate_comb(spec);
    PotentialProfile p;
    p.units = spec.units;
    p.left_lead.U = spec.U_E;
    p.right_lead.U = spec.U_E;
    p.segments.push_back({spec.l, 0.0});
    for (unsigned i = 0; i < spec.n_cells; ++i) {
        if (spec.alpha != 0.0)
            p.deltas.push_back({spec.alpha, p.segments.size()});
        p.segments.push_back({spec.l, 0.0});
    }
    return p;
}

namespace {

void require_interior_energy(double E, const char* who) {
    if (!(E > 0.0))
        throw error(errc::out_of_range,
                    std::string(who) + ": comb interior is at U = 0, need E > 0");
}

struct CombLocals {
    double k0, xi, omega, q;
};

CombLocals comb_locals(const CombSpec& spec, double E) {
    CombLocals c;
    c.k0 = std::sqrt(2.0 * spec.units.mass * E) / spec.units.hbar;
    c.xi = c.k0 * spec.l;
    c.omega = spec.units.mass * spec.alpha /
              (spec.units.hbar * spec.units.hbar * c.k0);
    c.q = (E < spec.U_E) ? std::sqrt((spec.U_E - E) / E)
                         : -std::sqrt((E - spec.U_E) / E); // unused above the walls
    return c;
}

void require_window(const CombSpec& spec, double E, const char* who) {
    require_interior_energy(E, who);
    if (!(E < spec.U_E))
        throw error(errc::out_of_range,
                    std::string(who) + ": bound levels live below the wall height");
}

} // namespace

TransferMatrix comb_cell_transfer(const CombSpec& spec, double E) {
    validate_comb(spec);
    require_interior_energy(E, "comb_cell_transfer");
    const cplx k0 = wavenumber(E, 0.0, spec.units);
    TransferMatrix t;
    t.m = delta_matrix(spec.alpha, k0, spec.units) * propagation_matrix(k0, spec.l);
    t.z_left = t.z_right = characteristic_impedance(E, 0.0, spec.units);
    return t;
}

ImpedanceMatrix comb_cell_impedance_matrix(const CombSpec& spec, double E) {
    return impedance_from_transfer(comb_cell_transfer(spec, E));
}

double comb_chi(const CombSpec& spec, double E) {
    require_interior_energy(E, "comb_chi");
    const CombLocals c = comb_locals(spec, E);
    return std::cos(c.xi) + c.omega * std::sin(c.xi);
}

namespace {

// real-valued Chebyshev pair U_{n-1}, U_n by the recurrence; |chi| > 1 is
// fine, the recurrence does not care about the band edge
void cheb_pair(double chi, unsigned n, double& u_nm1, double& u_n) {
    double prev = 0.0, cur = 1.0; // U_{-1}, U_0
    for (unsigned i = 0; i < n; ++i) {
        const double next = 2.0 * chi * cur - prev;
        prev = cur;
        cur = next;
    }
    u_nm1 = prev;
    u_n = cur;
}

} // namespace

double tamm_residual_impedance(const CombSpec& spec, double E) {
    require_window(spec, E, "tamm_residual_impedance");
    const CombLocals c = comb_locals(spec, E);
    const double chi = std::cos(c.xi) + c.omega * std::sin(c.xi);
    double u_nm1, u_n;
    cheb_pair(chi, spec.n_cells, u_nm1, u_n);
    // the eigencondition cos(lambda) - sin(lambda) cot((N+1) lambda) =
    // [(1-q^2) sin(xi) - 2 q cos(xi)] / (2 (Omega - q)) with its left side
    // rewritten as U_{N-1}/U_N and everything cross-multiplied: entire in E
    return u_nm1 * 2.0 * (c.omega - c.q) -
           u_n * ((1.0 - c.q * c.q) * std::sin(c.xi) - 2.0 * c.q * std::cos(c.xi));
}

double tamm_residual_cot(const CombSpec& spec, double E) {
    require_window(spec, E, "tamm_residual_cot");
    const CombLocals c = comb_locals(spec, E);
    const double chi = std::cos(c.xi) + c.omega * std::sin(c.xi);
    const cplx lambda = std::acos(cplx(chi, 0.0));
    const cplx s_np1 = std::sin(double(spec.n_cells + 1) * lambda);
    if (std::abs(s_np1) < 1e-13)
        return std::numeric_limits<double>::infinity(); // cot pole
    const cplx cot = std::cos(double(spec.n_cells + 1) * lambda) / s_np1;
    const cplx sl = std::sin(lambda);
    const double f = (c.q - c.omega) * std::sin(c.xi);
    // half-cleared compact eigencondition; real both in bands (lambda real)
    // and in gaps (lambda on the boundary lines of the acos branch)
    const cplx val = 2.0 * cot * sl * f - (sl * sl - f * f);
    return val.real();
}

std::vector<double> tamm_roots(const CombSpec& spec, TammForm form,
                               const RootScanOptions& opt) {
    validate_comb(spec);
    const double lo = 1e-4 * spec.U_E;
    const double hi = spec.U_E * (1.0 - 1e-7);
    const auto f = [&](double E) {
        return form == TammForm::impedance ? tamm_residual_impedance(spec, E)
                                           : tamm_residual_cot(spec, E);
    };
    std::vector<double> roots = scan_roots(f, lo, hi, opt);
    if (form == TammForm::cot) {
        // the compact form divides by sin(xi); a simultaneous zero of
        // sin(xi) and sin(lambda) fakes a root there, so that set is
        // excluded from its domain
        std::erase_if(roots, [&](double E) {
            const CombLocals c = comb_locals(spec, E);
            return std::abs(std::sin(c.xi)) < 1e-9;
        });
    }
    return roots;
}

TammSolution solve_tamm(const CombSpec& spec, const std::string& method,
                        const RootScanOptions& opt) {
    validate_comb(spec);
    if (method != "impedance" && method != "cot" && method != "both")
        throw error(errc::config_error,
                    "solve_tamm: method must be impedance, cot or both");

    std::vector<double> primary, secondary;
    if (method == "cot") {
        primary = tamm_roots(spec, TammForm::cot, opt);
    } else {
        primary = tamm_roots(spec, TammForm::impedance, opt);
    }
    if (method == "both") {
        secondary = tamm_roots(spec, TammForm::cot, opt);
        if (secondary.size() != primary.size())
            throw error(errc::semantic_error,
                        "solve_tamm: residual forms disagree on the number of "
                        "levels (" + std::to_string(primary.size()) + " vs " +
                            std::to_string(secondary.size()) + ")");
    }

    TammSolution sol;
    sol.method = method;
    for (std::size_t i = 0; i < primary.size(); ++i) {
        TammLevel lv;
        lv.energy = primary[i];
        lv.chi = comb_chi(spec, lv.energy);
        lv.in_gap = std::abs(lv.chi) > 1.0;
        lv.residual = method == "cot" ? tamm_residual_cot(spec, lv.energy)
                                      : tamm_residual_impedance(spec, lv.energy);
        if (method == "both")
            lv.form_discrepancy = std::abs(primary[i] - secondary[i]);
        sol.levels.push_back(lv);
        if (lv.in_gap) sol.surface_states.push_back(lv);
    }
    return sol;
}

double bound_state_mismatch(const PotentialProfile& p, double E) {
    const double UL = p.left_lead.U, UR = p.right_lead.U;
    if (!(E < UL) || !(E < UR))
        throw error(errc::out_of_range,
                    "bound_state_mismatch: E must lie below both lead potentials");
    const double m = p.units.mass, hbar = p.units.hbar;
    const double kapL = std::sqrt(2.0 * m * (UL - E)) / hbar;
    const double kapR = std::sqrt(2.0 * m * (UR - E)) / hbar;

    // propagate (psi, psi') left to right, starting from the solution that
    // grows out of the left lead
    double psi = 1.0, dpsi = kapL;
    std::size_t di = 0;
    const auto deltas_at = [&](std::size_t b) {
        while (di < p.deltas.size() && p.deltas[di].position_index == b) {
            dpsi += 2.0 * m * p.deltas[di].strength / (hbar * hbar) * psi;
            ++di;
        }
    };
    for (std::size_t s = 0; s < p.segments.size(); ++s) {
        deltas_at(s);
        const double L = p.segments[s].length;
        const double dU = E - p.segments[s].U;
        double npsi, ndpsi;
        if (dU > 0.0) {
            const double k = std::sqrt(2.0 * m * dU) / hbar;
            npsi = psi * std::cos(k * L) + dpsi * std::sin(k * L) / k;
            ndpsi = -psi * k * std::sin(k * L) + dpsi * std::cos(k * L);
        } else if (dU < 0.0) {
            const double kap = std::sqrt(-2.0 * m * dU) / hbar;
            npsi = psi * std::cosh(kap * L) + dpsi * std::sinh(kap * L) / kap;
            ndpsi = psi * kap * std::sinh(kap * L) + dpsi * std::cosh(kap * L);
        } else {
            npsi = psi + dpsi * L;
            ndpsi = dpsi;
        }
        psi = npsi;
        dpsi = ndpsi;
        // keep magnitudes in range on deeply evanescent stretches; positive
        // rescaling preserves the mismatch sign, which is all the scanner needs
        const double scale = std::max(std::abs(psi), std::abs(dpsi));
        if (scale > 1e100) {
            psi /= scale;
            dpsi /= scale;
        }
    }
    deltas_at(p.segments.size());

    // a bound state continues as pure decay on the right: psi' = -kappa psi
    const double raw = dpsi + kapR * psi;
    const double norm = std::abs(dpsi) + std::abs(kapR * psi) + 1e-300;
    return raw / norm;
}

std::vector<double> bound_states_bruteforce(const PotentialProfile& p,
                                            double E_lo, double E_hi,
                                            const RootScanOptions& opt) {
    validate_profile(p);
    if (!(E_hi <= p.left_lead.U) || !(E_hi <= p.right_lead.U))
        throw error(errc::out_of_range,
                    "bound_states_bruteforce: scan window must stay below both leads");
    return scan_roots([&](double E) { return bound_state_mismatch(p, E); },
                      E_lo, E_hi, opt);
}

} // namespace qwi
