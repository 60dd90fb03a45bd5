// Release gate. Each numbered line below is a hard requirement checked at
// full stated tolerance; the build is not releasable while any line says FAIL.

#include "qwi/dirac_comb.hpp"
#include "qwi/errors.hpp"
#include "qwi/impedance.hpp"
#include "qwi/matrices.hpp"
#include "qwi/periodic.hpp"
#include "qwi/rootscan.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace qwi;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s [%s]\n", ok ? "PASS" : "FAIL", idx, name,
                detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------- 1 and 2

PotentialProfile random_profile(std::mt19937& rng) {
    std::uniform_real_distribution<double> lead(-1.0, 1.0);
    std::uniform_real_distribution<double> length(0.05, 0.7);
    std::uniform_real_distribution<double> du(-2.0, 2.5);
    std::uniform_real_distribution<double> strength(-2.0, 2.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> count(1, 5);

    PotentialProfile p;
    p.left_lead.U = p.right_lead.U = lead(rng);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        if (coin(rng) < 0.3) {
            const double a = strength(rng);
            if (!p.deltas.empty() &&
                p.deltas.back().position_index == p.segments.size())
                p.deltas.back().strength += a;
            else
                p.deltas.push_back({a, p.segments.size()});
        } else {
            p.segments.push_back({length(rng), p.left_lead.U + du(rng)});
        }
    }
    return p;
}

void criteria_1_2() {
    std::mt19937 rng(20260823u);
    double worst_flux = 0.0, worst_det = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const PotentialProfile p = random_profile(rng);
        for (int i = 0; i < 50; ++i) {
            const double E = p.left_lead.U + 0.5 + (6.0 - 0.5) * double(i) / 49.0;
            const TransferMatrix t = profile_transfer(p, E);
            const FluxCoefficients f = flux_coefficients(t);
            worst_flux = std::max(worst_flux, f.defect);
            worst_det = std::max(worst_det, std::abs(t.m.det() - cplx(1.0)));
        }
    }

    // each interface factor separately carries det = z2/z1
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    double worst_iface = 0.0;
    for (int i = 0; i < 200; ++i) {
        const cplx z1(comp(rng) + 2.0, comp(rng));
        const cplx z2(comp(rng) + 2.0, comp(rng));
        worst_iface = std::max(
            worst_iface, std::abs(interface_matrix(z1, z2).det() - z2 / z1));
    }

    report(1, "flux conservation on random equal-lead profiles",
           worst_flux < 1e-10,
           "worst |T+R-1| = " + fmt(worst_flux) + " over 200 profiles x 50 energies");
    report(2, "transfer unimodularity and interface determinants",
           worst_det < 1e-10 && worst_iface < 1e-12,
           "worst |det-1| = " + fmt(worst_det) +
               ", worst interface det error = " + fmt(worst_iface));
}

// --------------------------------------------------------------------- 3

void criterion_3() {
    std::mt19937 rng(97u);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        TransferMatrix t;
        do {
            t.m.a11 = {comp(rng), comp(rng)};
        } while (std::abs(t.m.a11) < 0.1);
        t.m.a12 = {comp(rng), comp(rng)};
        t.m.a21 = {comp(rng), comp(rng)};
        t.m.a22 = (cplx(1.0) + t.m.a12 * t.m.a21) / t.m.a11;
        t.z_left = t.z_right = cplx(1.0);

        const TransferMatrix ts = transfer_from_scattering(scattering_from_transfer(t));
        const TransferMatrix tz = transfer_from_impedance(impedance_from_transfer(t));
        worst = std::max({worst, max_abs_diff(t.m, ts.m), max_abs_diff(t.m, tz.m)});
    }
    report(3, "T<->S and T<->Z round trips on random unimodular matrices",
           worst < 1e-12, "worst entry error = " + fmt(worst) + " over 1000 matrices");
}

// ------------------------------------------------------------------ 4 and 5

struct CellKind {
    const char* name;
    std::function<CellSpec(double)> make;
    // right-to-left single-cell impedance iteration for criterion 5
    std::function<cplx(double, cplx)> iterate;
};

CellSpec dirac_cell(double alpha, double l, double E) {
    const cplx k = wavenumber(E, 0.0);
    CellSpec c;
    c.transfer.m = delta_matrix(alpha, k) * propagation_matrix(k, l);
    c.transfer.z_left = c.transfer.z_right = characteristic_impedance(E, 0.0);
    c.period = l;
    return c;
}

CellSpec rect_cell(double U_b, double w, double gap, double E) {
    const cplx k0 = wavenumber(E, 0.0);
    CellSpec c;
    c.transfer.m = rect_barrier_transfer(E, U_b, w).m * propagation_matrix(k0, gap);
    c.transfer.z_left = c.transfer.z_right = characteristic_impedance(E, 0.0);
    c.period = w + gap;
    return c;
}

std::vector<double> pick_band_gap_energies(const std::function<CellSpec(double)>& make,
                                           int n_band, int n_gap) {
    std::vector<double> band, gap;
    for (int i = 1; i < 12000; ++i) {
        const double E = 0.02 + (3.0 - 0.02) * double(i) / 12000.0;
        const double chi = (0.5 * make(E).transfer.m.trace()).real();
        const double a = std::abs(chi);
        if (a < 0.97) band.push_back(E);
        else if (a > 1.0005 && a < 1.01) gap.push_back(E);
    }
    std::vector<double> out;
    for (int i = 0; i < n_band && !band.empty(); ++i)
        out.push_back(band[std::size_t(i) * (band.size() - 1) / std::size_t(n_band - 1)]);
    for (int i = 0; i < n_gap && !gap.empty(); ++i)
        out.push_back(gap[std::size_t(i) * (gap.size() - 1) / std::size_t(n_gap - 1)]);
    return out;
}

void criteria_4_5() {
    const std::vector<unsigned> ns{1, 2, 3, 5, 10, 32, 64};

    std::vector<CellKind> kinds;
    kinds.push_back({"dirac",
                     [](double E) { return dirac_cell(0.12, 1.0, E); },
                     [](double E, cplx Z) {
                         const cplx k = wavenumber(E, 0.0);
                         const cplx z0 = characteristic_impedance(E, 0.0);
                         Z = propagate_uniform(Z, z0, cplx(0, 1) * k, 1.0);
                         return delta_jump(Z, 0.12);
                     }});
    kinds.push_back({"rect",
                     [](double E) { return rect_cell(0.3, 0.45, 0.8, E); },
                     [](double E, cplx Z) {
                         const cplx k0 = wavenumber(E, 0.0);
                         const cplx z0 = characteristic_impedance(E, 0.0);
                         const cplx kb = wavenumber(E, 0.3);
                         const cplx zb = characteristic_impedance(E, 0.3);
                         Z = propagate_uniform(Z, z0, cplx(0, 1) * k0, 0.8);
                         return propagate_uniform(Z, zb, cplx(0, 1) * kb, 0.45);
                     }});

    double worst_pow = 0.0, worst_imp = 0.0;
    bool sampled_ok = true;
    std::string sample_note;

    for (const auto& kind : kinds) {
        const std::vector<double> energies = pick_band_gap_energies(kind.make, 30, 20);
        if (energies.size() != 50) {
            sampled_ok = false;
            sample_note = std::string(" (") + kind.name + ": found only " +
                          std::to_string(energies.size()) + " of 50 samples)";
        }
        for (double E : energies) {
            const CellSpec cell = kind.make(E);
            for (unsigned n : ns) {
                const Matrix2 closed = matrix_power_chebyshev(cell.transfer.m, n);
                const Matrix2 brute = matrix_power(cell.transfer.m, n);
                worst_pow = std::max(worst_pow, max_abs_diff(closed, brute));

                for (const cplx load : {cell.z_edge(), cplx(0.8, -0.3)}) {
                    cplx it = load;
                    for (unsigned i = 0; i < n; ++i) it = kind.iterate(E, it);
                    const cplx cf = input_impedance_n_cells(cell, n, load);
                    worst_imp = std::max(worst_imp, std::abs(cf - it));
                }
            }
        }
    }

    // strong barriers blow up fast in gaps, so the head-to-head power check
    // for them stays at short cascades
    for (int i = 0; i < 50; ++i) {
        const double E = 0.05 + (9.5 - 0.05) * double(i) / 49.0;
        const CellSpec cell = dirac_cell(-2.0, 1.0, E);
        for (unsigned n : {1u, 2u, 3u, 5u, 10u}) {
            const Matrix2 closed = matrix_power_chebyshev(cell.transfer.m, n);
            const Matrix2 brute = matrix_power(cell.transfer.m, n);
            worst_pow = std::max(worst_pow, max_abs_diff(closed, brute));
        }
    }

    report(4, "Chebyshev cascade power vs repeated multiplication",
           worst_pow < 1e-9 && sampled_ok,
           "worst entry error = " + fmt(worst_pow) + sample_note);
    report(5, "closed-form cascade impedance vs iterated single-cell map",
           worst_imp < 1e-10 && sampled_ok,
           "worst impedance error = " + fmt(worst_imp) + sample_note);
}

// --------------------------------------------------------------------- 6

void criterion_6() {
    const double U_b = 5.0, L = 1.2;
    double worst_T = 0.0, worst_t2 = 0.0, worst_Z = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double E = U_b * double(i) / 101.0; // strictly below the top
        const cplx z0 = characteristic_impedance(E, 0.0);
        const cplx zb = characteristic_impedance(E, U_b);
        const cplx kb = wavenumber(E, U_b);
        const Matrix2 composed = interface_matrix(z0, zb) *
                                 propagation_matrix(kb, L) *
                                 interface_matrix(zb, z0);
        const TransferMatrix closed = rect_barrier_transfer(E, U_b, L);
        worst_T = std::max(worst_T, max_abs_diff(composed, closed.m));

        const double k0r = std::sqrt(2.0 * E);
        const double kap = std::sqrt(2.0 * (U_b - E));
        const double sh = std::sinh(kap * L), ch = std::cosh(kap * L);
        const double bp = (kap * kap + k0r * k0r) / (2.0 * k0r * kap);
        const double textbook = 1.0 / (1.0 + bp * bp * sh * sh);
        TransferMatrix tc;
        tc.m = composed;
        tc.z_left = tc.z_right = z0;
        worst_t2 = std::max(worst_t2,
                            std::abs(std::norm(rt_from_transfer(tc).t) - textbook));

        // tabulated impedance-matrix entries, scaled form
        const cplx scal(0.0, -kap / k0r);
        const Matrix2 zm = impedance_from_transfer(tc).m * scal;
        const Matrix2 table = {cplx((kap / k0r) * (kap / k0r) * sh, 0.0),
                               cplx(0.0, (kap / k0r) * ch),
                               cplx(0.0, -(kap / k0r) * ch), cplx(sh, 0.0)};
        worst_Z = std::max(worst_Z, max_abs_diff(zm, table));
    }
    report(6, "rectangular barrier closed forms vs composed factors",
           worst_T < 1e-12 && worst_t2 < 1e-12 && worst_Z < 1e-12,
           "T err = " + fmt(worst_T) + ", |t|^2 err = " + fmt(worst_t2) +
               ", Z err = " + fmt(worst_Z) + " on 100 energies");
}

// ------------------------------------------------------------------ 7 and 9

struct ComboResult {
    CombSpec spec;
    std::vector<double> imp, cot, brute;
};

std::vector<ComboResult> run_comb_grid() {
    std::vector<ComboResult> results;
    for (unsigned n : {2u, 3u, 5u}) {
        for (double alpha : {-2.0, -1.0, 1.0, 2.0}) {
            for (double l : {0.5, 1.0}) {
                for (double U_E : {5.0, 10.0}) {
                    ComboResult r;
                    r.spec.alpha = alpha;
                    r.spec.l = l;
                    r.spec.n_cells = n;
                    r.spec.U_E = U_E;
                    r.imp = tamm_roots(r.spec, TammForm::impedance);
                    r.cot = tamm_roots(r.spec, TammForm::cot);
                    r.brute = bound_states_bruteforce(comb_profile(r.spec),
                                                      1e-4 * U_E,
                                                      U_E * (1.0 - 1e-7));
                    results.push_back(std::move(r));
                }
            }
        }
    }
    return results;
}

void criterion_7(const std::vector<ComboResult>& combos) {
    bool counts_ok = true;
    double worst = 0.0;
    int total_levels = 0;
    for (const auto& r : combos) {
        if (r.imp.size() != r.cot.size() || r.imp.size() != r.brute.size()) {
            counts_ok = false;
            continue;
        }
        total_levels += int(r.imp.size());
        for (std::size_t i = 0; i < r.imp.size(); ++i)
            worst = std::max({worst, std::abs(r.imp[i] - r.cot[i]),
                              std::abs(r.imp[i] - r.brute[i]),
                              std::abs(r.cot[i] - r.brute[i])});
    }
    report(7, "triple agreement of comb eigenvalue methods",
           counts_ok && worst < 1e-8,
           std::string(counts_ok ? "counts match" : "COUNT MISMATCH") +
               ", worst pairwise gap = " + fmt(worst) + " over " +
               std::to_string(combos.size()) + " combos / " +
               std::to_string(total_levels) + " levels");
}

// every surface level must sit in a spectral gap of the infinite comb
void criterion_9(const std::vector<ComboResult>& combos) {
    bool gap_ok = true;
    int n_surface = 0;
    double closest = 1e9;
    for (const auto& r : combos) {
        const TammSolution sol = solve_tamm(r.spec, "impedance");
        for (const auto& lv : sol.surface_states) {
            ++n_surface;
            const double k0 = std::sqrt(2.0 * lv.energy);
            const double chi = std::cos(k0 * r.spec.l) +
                               (r.spec.alpha / k0) * std::sin(k0 * r.spec.l);
            if (!(std::abs(chi) > 1.0)) gap_ok = false;
            closest = std::min(closest, std::abs(chi));
        }
    }
    report(9, "surface levels satisfy |cos xi + Omega sin xi| > 1", gap_ok,
           std::to_string(n_surface) + " surface levels, min |half trace| = " +
               fmt(closest));
}

// --------------------------------------------------------------------- 8

void criterion_8() {
    // single attractive delta on a free line
    PotentialProfile pd;
    pd.deltas.push_back({-2.0, 0});
    const std::vector<double> delta_roots = bound_states_bruteforce(pd, -3.5, -0.1);
    const bool delta_ok =
        delta_roots.size() == 1 && std::abs(delta_roots[0] + 2.0) < 1e-10;

    // finite square well vs its textbook transcendental equations
    const double W = 2.0, U_E = 10.0;
    PotentialProfile pw;
    pw.left_lead.U = pw.right_lead.U = U_E;
    pw.segments.push_back({W, 0.0});
    const std::vector<double> well = bound_states_bruteforce(pw, 1e-3, U_E - 1e-5);

    const auto even_f = [&](double E) {
        const double k = std::sqrt(2.0 * E), kap = std::sqrt(2.0 * (U_E - E));
        return k * std::tan(k * W / 2.0) - kap;
    };
    const auto odd_f = [&](double E) {
        const double k = std::sqrt(2.0 * E), kap = std::sqrt(2.0 * (U_E - E));
        return k / std::tan(k * W / 2.0) + kap;
    };
    std::vector<double> textbook = scan_roots(even_f, 1e-3, U_E - 1e-5);
    for (double r : scan_roots(odd_f, 1e-3, U_E - 1e-5)) textbook.push_back(r);
    std::sort(textbook.begin(), textbook.end());

    bool well_ok = well.size() == textbook.size() && !well.empty();
    double worst_well = 0.0;
    if (well_ok)
        for (std::size_t i = 0; i < well.size(); ++i)
            worst_well = std::max(worst_well, std::abs(well[i] - textbook[i]));
    well_ok = well_ok && worst_well < 1e-8;

    // switching the comb off leaves no surface states
    CombSpec off;
    off.alpha = 0.0;
    off.l = 1.0;
    off.n_cells = 3;
    off.U_E = 10.0;
    const bool off_ok = solve_tamm(off, "impedance").surface_states.empty();

    report(8, "analytic limits: delta level, square well, switched-off comb",
           delta_ok && well_ok && off_ok,
           "delta E err = " +
               fmt(delta_roots.size() == 1 ? std::abs(delta_roots[0] + 2.0) : 1.0) +
               ", well err = " + fmt(worst_well) + " over " +
               std::to_string(well.size()) + " levels, surface count at alpha=0: " +
               std::to_string(solve_tamm(off, "impedance").surface_states.size()));
}

// -------------------------------------------------------------------- 10

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, std::string* sout = nullptr) {
    const std::string out_path = "/tmp/qwi_acceptance_stdout.txt";
    const std::string cmd = std::string(QWI_CLI_PATH) + " " + args + " > " +
                            out_path + " 2> /tmp/qwi_acceptance_stderr.txt";
    const int rc = std::system(cmd.c_str());
    if (sout) *sout = slurp_file(out_path);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void criterion_10() {
    bool validate_ok = true;
    std::string bad;
    for (const char* name : {"barrier.json", "well.json", "comb5.json",
                             "comb_n3.json", "free_delta.json"}) {
        const int rc =
            run_cli(std::string("validate --input ") + QWI_PROFILE_DIR + "/" + name);
        if (rc != 0) {
            validate_ok = false;
            bad = name;
        }
    }

    // csv and json must carry the same numbers
    const std::string base = std::string("spectrum --input ") + QWI_PROFILE_DIR +
                             "/barrier.json --emin 0.25 --emax 4.75 --grid 25";
    std::string csv_text, json_text;
    bool formats_ok = run_cli(base + " --format csv", &csv_text) == 0 &&
                      run_cli(base + " --format json", &json_text) == 0;
    double worst_fmt = 0.0;
    if (formats_ok) {
        const json doc = json::parse(json_text);
        std::istringstream lines(csv_text);
        std::string line;
        std::getline(lines, line);
        std::size_t i = 0;
        const char* keys[] = {"E", "T", "R", "unitarity_defect", "chi_re", "chi_im"};
        while (std::getline(lines, line) && i < doc.at("rows").size()) {
            std::istringstream cells(line);
            std::string cell;
            int col = 0;
            while (std::getline(cells, cell, ',') && col < 6) {
                const double a = std::strtod(cell.c_str(), nullptr);
                const double b = doc.at("rows")[i].at(keys[col]).get<double>();
                worst_fmt = std::max(worst_fmt, std::abs(a - b));
                if (a != b) formats_ok = false;
                ++col;
            }
            ++i;
        }
        if (i != doc.at("rows").size()) formats_ok = false;
    }

    // repeated runs must be byte-identical
    std::string a1, a2, b1, b2;
    const std::string comb_args = std::string("spectrum --input ") + QWI_PROFILE_DIR +
                                  "/comb5.json --emin 0.2 --emax 8 --grid 60";
    const std::string tamm_args =
        std::string("tamm --input ") + QWI_PROFILE_DIR + "/comb_n3.json --verify";
    const bool det_ok = run_cli(comb_args, &a1) == 0 && run_cli(comb_args, &a2) == 0 &&
                        run_cli(tamm_args, &b1) == 0 && run_cli(tamm_args, &b2) == 0 &&
                        a1 == a2 && b1 == b2 && !a1.empty() && !b1.empty();

    report(10, "CLI contract: validate green, format parity, determinism",
           validate_ok && formats_ok && det_ok,
           std::string("validate ") + (validate_ok ? "ok" : ("failed on " + bad)) +
               ", csv/json number gap = " + fmt(worst_fmt) + ", determinism " +
               (det_ok ? "ok" : "BROKEN"));
}

} // namespace

int main() {
    criteria_1_2();
    criterion_3();
    criteria_4_5();
    criterion_6();
    const std::vector<ComboResult> combos = run_comb_grid();
    criterion_7(combos);
    criterion_8();
    criterion_9(combos);
    criterion_10();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failing\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria green\n");
    return 0;
}
