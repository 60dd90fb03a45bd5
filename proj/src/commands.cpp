#include "qwi/commands.hpp"
#include "qwi/errors.hpp"
#include "qwi/impedance.hpp"
#include "qwi/periodic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

using nlohmann::json;

namespace qwi {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[48];
    // shortest decimal that parses back to the same double
    for (int p = 1; p <= 17; ++p) {
        std::snprintf(buf, sizeof buf, "%.*g", p, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> build_energy_grid(const PotentialProfile& p, double lo,
                                      double hi, int n, std::ostream& err) {
    if (!(lo < hi))
        throw error(errc::config_error, "energy grid: need emin < emax");
    if (n < 2) throw error(errc::config_error, "energy grid: need at least 2 points");

    std::vector<double> levels{p.left_lead.U, p.right_lead.U};
    for (const auto& s : p.segments) levels.push_back(s.U);

    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        double E = lo + (hi - lo) * double(i) / double(n - 1);
        for (double U : levels) {
            if (E == U) {
                const double nudged = E + 1e-12 * std::max(1.0, std::abs(E));
                err << "note: grid energy " << format_double(E)
                    << " coincides with a potential level; nudged to "
                    << format_double(nudged) << "\n";
                E = nudged;
                break;
            }
        }
        grid[i] = E;
    }
    return grid;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::config_error, "cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_doc(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw qwi::parse_error(e.what());
    }
}

bool is_comb_doc(const json& doc) { return doc.is_object() && doc.contains("comb"); }

double num_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw qwi::parse_error(where + ": missing required field '" + key + "'");
    if (!obj.at(key).is_number())
        throw qwi::parse_error(where + ": field '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

CombSpec parse_comb_doc(const json& doc) {
    CombSpec spec;
    if (doc.contains("units")) {
        const auto& u = doc.at("units");
        spec.units.hbar = num_field(u, "hbar", "units");
        spec.units.mass = num_field(u, "mass", "units");
    }
    const auto& c = doc.at("comb");
    spec.alpha = num_field(c, "alpha", "comb");
    spec.l = num_field(c, "spacing", "comb");
    const double cells = num_field(c, "cells", "comb");
    if (cells < 1.0 || cells != std::floor(cells) || cells > 1e6)
        throw qwi::parse_error("comb: cells must be a positive integer");
    spec.n_cells = unsigned(cells);
    spec.U_E = num_field(c, "wall_height", "comb");
    validate_comb(spec);
    return spec;
}

// impedance-formalism scattering point: the impedance walk gives the
// reflection directly; the transmitted amplitude follows from the scalar
// amplitude transport psi_near = psi_far (cosh(g d) - (Z/z) sinh(g d))
// through each segment (psi itself is continuous at interfaces and deltas)
struct ImpedancePoint {
    cplx r, t;
    double T = 0.0, R = 0.0;
};

ImpedancePoint impedance_point(const PotentialProfile& p, double E) {
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
    for (std::size_t j = 0; j < n + 2; ++j)
        if (z[j] == cplx(0.0))
            throw error(errc::singular_input,
                        "impedance walk: E equals a potential level; nudge the grid");

    cplx Z = z[n + 1]; // outgoing termination
    cplx F = 1.0;      // psi(left edge) / psi(right edge)
    for (std::size_t b = n + 1; b-- > 0;) {
        for (std::size_t di = p.deltas.size(); di-- > 0;)
            if (p.deltas[di].position_index == b)
                Z = delta_jump(Z, p.deltas[di].strength, p.units);
        if (b > 0) {
            const cplx gamma = cplx(0.0, 1.0) * k[b];
            const double d = p.segments[b - 1].length;
            F *= std::cosh(gamma * d) - (Z / z[b]) * std::sinh(gamma * d);
            Z = propagate_uniform(Z, z[b], gamma, d);
        }
    }
    if (!std::isfinite(Z.real()) || !std::isfinite(Z.imag()))
        throw error(errc::singular_input,
                    "impedance walk: impedance pole (wavefunction node); nudge the grid");

    ImpedancePoint pt;
    pt.r = reflection_from_impedance(Z, z[0]);
    pt.t = (1.0 + pt.r) / F;
    pt.R = std::norm(pt.r);
    if (z[0].real() == 0.0)
        throw error(errc::singular_input,
                    "impedance walk: left lead is evanescent, incident flux undefined");
    pt.T = std::norm(pt.t) * z[n + 1].real() / z[0].real();
    return pt;
}

SpectrumRow spectrum_point(const PotentialProfile& p, double E, Method method) {
    SpectrumRow row;
    row.E = E;

    // band-structure diagnostics always come from the transfer matrix
    const TransferMatrix tm = profile_transfer(p, E);
    row.chi = 0.5 * tm.m.trace();
    row.in_gap = std::abs(row.chi.real()) > 1.0;

    if (method != Method::impedance) {
        const FluxCoefficients fc = flux_coefficients(tm);
        row.transmission = fc.T;
        row.reflection = fc.R;
        row.unitarity_defect = fc.defect;
    }
    if (method != Method::transfer) {
        const ImpedancePoint ip = impedance_point(p, E);
        if (method == Method::impedance) {
            row.transmission = ip.T;
            row.reflection = ip.R;
            row.unitarity_defect = std::abs(ip.T + ip.R - 1.0);
        } else {
            row.method_discrepancy = std::max(std::abs(row.transmission - ip.T),
                                              std::abs(row.reflection - ip.R));
        }
    }
    return row;
}

const char* method_name(Method m) {
    switch (m) {
    case Method::transfer: return "transfer";
    case Method::impedance: return "impedance";
    case Method::both: return "both";
    }
    return "?";
}

json cplx_json(cplx v) { return json::array({v.real(), v.imag()}); }

json matrix_json(const Matrix2& m) {
    return json::array({json::array({cplx_json(m.a11), cplx_json(m.a12)}),
                        json::array({cplx_json(m.a21), cplx_json(m.a22)})});
}

cplx cplx_field(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw qwi::parse_error(where + ": complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Matrix2 matrix_field(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
        j[0].size() != 2 || j[1].size() != 2)
        throw qwi::parse_error(where + ": matrices are 2x2 arrays of [re, im] pairs");
    return {cplx_field(j[0][0], where), cplx_field(j[0][1], where),
            cplx_field(j[1][0], where), cplx_field(j[1][1], where)};
}

int input_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return exit_input_error;
}

} // namespace

std::vector<SpectrumRow> evaluate_spectrum(const PotentialProfile& p,
                                           const RunConfig& cfg,
                                           std::ostream& err) {
    if (!cfg.has_range)
        throw error(errc::config_error, "spectrum: --emin and --emax are required");
    const std::vector<double> grid =
        build_energy_grid(p, cfg.E_min, cfg.E_max, cfg.grid, err);

    std::vector<SpectrumRow> rows;
    rows.reserve(grid.size());
    for (double E : grid) {
        try {
            rows.push_back(spectrum_point(p, E, cfg.method));
        } catch (const error& e) {
            if (e.code() != errc::singular_input) throw;
            // wavefunction-node pole on the grid: perturb the energy once
            const double nudged = E * (1.0 + 1e-9) + 1e-12;
            err << "note: singular point at E = " << format_double(E)
                << " (" << e.what() << "); re-evaluated at "
                << format_double(nudged) << "\n";
            rows.push_back(spectrum_point(p, nudged, cfg.method));
        }
    }
    return rows;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    PotentialProfile profile;
    try {
        const ParseResult pr = parse_profile_file(cfg.input_path);
        for (const auto& w : pr.warnings) err << "warning: " << w << "\n";
        profile = pr.profile;
    } catch (const error& e) {
        return input_error(err, e.what());
    }

    std::vector<SpectrumRow> rows;
    try {
        rows = evaluate_spectrum(profile, cfg, err);
    } catch (const error& e) {
        return input_error(err, e.what());
    }

    const bool both = cfg.method == Method::both;
    if (cfg.format == OutputFormat::csv) {
        out << "E,T,R,unitarity_defect,chi_re,chi_im,in_gap";
        if (both) out << ",method_discrepancy";
        out << "\n";
        for (const auto& r : rows) {
            out << format_double(r.E) << ',' << format_double(r.transmission)
                << ',' << format_double(r.reflection) << ','
                << format_double(r.unitarity_defect) << ','
                << format_double(r.chi.real()) << ','
                << format_double(r.chi.imag()) << ',' << (r.in_gap ? 1 : 0);
            if (both) out << ',' << format_double(r.method_discrepancy);
            out << "\n";
        }
    } else {
        json doc;
        doc["command"] = "spectrum";
        doc["method"] = method_name(cfg.method);
        json jrows = json::array();
        for (const auto& r : rows) {
            json jr;
            jr["E"] = r.E;
            jr["T"] = r.transmission;
            jr["R"] = r.reflection;
            jr["unitarity_defect"] = r.unitarity_defect;
            jr["chi_re"] = r.chi.real();
            jr["chi_im"] = r.chi.imag();
            jr["in_gap"] = r.in_gap;
            if (both) jr["method_discrepancy"] = r.method_discrepancy;
            jrows.push_back(std::move(jr));
        }
        doc["rows"] = std::move(jrows);
        out << doc.dump(2) << "\n";
    }

    if (both) {
        double worst = 0.0;
        for (const auto& r : rows) worst = std::max(worst, r.method_discrepancy);
        if (worst > cfg.tol) {
            err << "error: cross-method discrepancy " << format_double(worst)
                << " exceeds tolerance " << format_double(cfg.tol) << "\n";
            return exit_validation_failure;
        }
    }
    return exit_ok;
}

int cmd_tamm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CombSpec spec;
    try {
        const json doc = parse_json_doc(slurp(cfg.input_path));
        if (!is_comb_doc(doc))
            throw error(errc::semantic_error,
                        "tamm needs a comb document (object with a 'comb' field)");
        spec = parse_comb_doc(doc);
    } catch (const error& e) {
        return input_error(err, e.what());
    }

    double lo = 1e-4 * spec.U_E;
    double hi = spec.U_E * (1.0 - 1e-7);
    if (cfg.has_range) {
        if (!(cfg.E_min >= 0.0) || !(cfg.E_max <= spec.U_E) ||
            !(cfg.E_min < cfg.E_max))
            return input_error(err, "tamm: energy range must lie inside (0, wall_height)");
        lo = std::max(lo, cfg.E_min);
        hi = std::min(hi, cfg.E_max);
    }

    const std::string method = cfg.method == Method::transfer ? "cot"
                               : cfg.method == Method::impedance ? "impedance"
                                                                 : "both";
    TammSolution sol;
    try {
        sol = solve_tamm(spec, method);
    } catch (const error& e) {
        return input_error(err, e.what());
    }
    std::erase_if(sol.levels,
                  [&](const TammLevel& lv) { return lv.energy < lo || lv.energy > hi; });
    if (cfg.corrupt_residual) {
        // test hook: shift every level so a --verify run must fail
        for (auto& lv : sol.levels) lv.energy += 1e-3 * spec.U_E;
    }

    std::vector<double> oracle;
    bool verify_ok = true;
    std::vector<double> oracle_diff(sol.levels.size(), 0.0);
    std::vector<double> oracle_match(sol.levels.size(), 0.0);
    if (cfg.verify) {
        try {
            oracle = bound_states_bruteforce(comb_profile(spec), lo, hi);
        } catch (const error& e) {
            return input_error(err, e.what());
        }
        if (oracle.size() != sol.levels.size()) {
            err << "error: level count mismatch: solver found "
                << sol.levels.size() << ", brute-force scan found "
                << oracle.size() << "\n";
            verify_ok = false;
        }
        for (std::size_t i = 0; i < sol.levels.size(); ++i) {
            // compare against the nearest oracle root so a count mismatch
            // still yields a readable table
            double best = std::numeric_limits<double>::infinity();
            double match = 0.0;
            for (double e0 : oracle) {
                if (std::abs(e0 - sol.levels[i].energy) < best) {
                    best = std::abs(e0 - sol.levels[i].energy);
                    match = e0;
                }
            }
            oracle_diff[i] = best;
            oracle_match[i] = match;
            if (!(best <= cfg.tol)) verify_ok = false;
        }
    }

    if (cfg.format == OutputFormat::csv) {
        out << "E,chi,in_gap,residual,form_discrepancy";
        if (cfg.verify) out << ",oracle_E,oracle_diff";
        out << "\n";
        for (std::size_t i = 0; i < sol.levels.size(); ++i) {
            const auto& lv = sol.levels[i];
            out << format_double(lv.energy) << ',' << format_double(lv.chi)
                << ',' << (lv.in_gap ? 1 : 0) << ','
                << format_double(lv.residual) << ','
                << format_double(lv.form_discrepancy);
            if (cfg.verify)
                out << ',' << format_double(oracle_match[i]) << ','
                    << format_double(oracle_diff[i]);
            out << "\n";
        }
    } else {
        json doc;
        doc["command"] = "tamm";
        doc["method"] = sol.method;
        json jl = json::array();
        for (std::size_t i = 0; i < sol.levels.size(); ++i) {
            const auto& lv = sol.levels[i];
            json j;
            j["E"] = lv.energy;
            j["chi"] = lv.chi;
            j["in_gap"] = lv.in_gap;
            j["residual"] = lv.residual;
            j["form_discrepancy"] = lv.form_discrepancy;
            if (cfg.verify) {
                j["oracle_E"] = oracle_match[i];
                j["oracle_diff"] = oracle_diff[i];
            }
            jl.push_back(std::move(j));
        }
        doc["levels"] = std::move(jl);
        std::size_t surface = 0;
        for (const auto& lv : sol.levels)
            if (lv.in_gap) ++surface;
        doc["surface_count"] = surface;
        out << doc.dump(2) << "\n";
    }

    if (cfg.verify && !verify_ok) {
        err << "error: solver levels disagree with the brute-force oracle\n";
        return exit_validation_failure;
    }
    return exit_ok;
}

int cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.format == OutputFormat::csv)
        return input_error(err, "convert emits a JSON matrix document; use --format json");

    json doc;
    std::string type;
    TransferMatrix t;
    try {
        doc = parse_json_doc(slurp(cfg.input_path));
        if (!doc.is_object() || !doc.contains("type") || !doc.contains("matrix"))
            throw qwi::parse_error(
                "convert input needs fields: type (T|S|Z), matrix, z_left, z_right");
        type = doc.at("type").get<std::string>();
        Matrix2 m = matrix_field(doc.at("matrix"), "matrix");
        const cplx zl = cplx_field(doc.at("z_left"), "z_left");
        const cplx zr = cplx_field(doc.at("z_right"), "z_right");
        if (type == "T") {
            t = TransferMatrix{m, zl, zr};
        } else if (type == "S") {
            t = transfer_from_scattering(ScatteringMatrix{m, zl, zr});
        } else if (type == "Z") {
            t = transfer_from_impedance(ImpedanceMatrix{m, zl, zr});
        } else {
            throw qwi::parse_error("type must be one of T, S, Z");
        }
    } catch (const error& e) {
        if (e.code() == errc::resonance_singularity)
            return input_error(err, std::string(e.what()) +
                                        " (this matrix sits exactly on a "
                                        "transmission zero, where the transfer "
                                        "representation does not exist)");
        return input_error(err, e.what());
    }

    try {
        const ScatteringMatrix s = scattering_from_transfer(t);
        const ImpedanceMatrix z = impedance_from_transfer(t);
        const Amplitudes a = rt_from_transfer(t);
        json outdoc;
        outdoc["command"] = "convert";
        outdoc["input_type"] = type;
        outdoc["z_left"] = cplx_json(t.z_left);
        outdoc["z_right"] = cplx_json(t.z_right);
        outdoc["transfer"] = {{"matrix", matrix_json(t.m)},
                              {"det", cplx_json(t.m.det())}};
        outdoc["scattering"] = {{"matrix", matrix_json(s.m)},
                                {"det", cplx_json(s.m.det())}};
        outdoc["impedance"] = {{"matrix", matrix_json(z.m)},
                               {"det", cplx_json(z.m.det())}};
        outdoc["amplitudes"] = {{"r", cplx_json(a.r)}, {"t", cplx_json(a.t)}};
        out << outdoc.dump(2) << "\n";
    } catch (const error& e) {
        if (e.code() == errc::resonance_singularity)
            return input_error(err, std::string(e.what()) +
                                        " (T11 = 0 marks a transmission pole: the "
                                        "bound-state condition; no scattering "
                                        "representation exists at this point)");
        return input_error(err, e.what());
    }
    return exit_ok;
}

namespace {

struct InvariantResult {
    std::string name;
    bool pass = true;
    double worst = 0.0;
    double threshold = 0.0;
};

void emit_report(const std::vector<InvariantResult>& res, OutputFormat fmt,
                 std::ostream& out) {
    if (fmt == OutputFormat::csv) {
        out << "invariant,status,worst,threshold\n";
        for (const auto& r : res)
            out << r.name << ',' << (r.pass ? "pass" : "fail") << ','
                << format_double(r.worst) << ',' << format_double(r.threshold)
                << "\n";
    } else {
        json doc;
        doc["command"] = "validate";
        json arr = json::array();
        for (const auto& r : res)
            arr.push_back({{"invariant", r.name},
                           {"pass", r.pass},
                           {"worst", r.worst},
                           {"threshold", r.threshold}});
        doc["invariants"] = std::move(arr);
        out << doc.dump(2) << "\n";
    }
}

std::vector<InvariantResult> validate_profile_doc(const PotentialProfile& p,
                                                  const RunConfig& cfg,
                                                  std::ostream& err) {
    RunConfig local = cfg;
    if (!local.has_range) {
        // deterministic default window: comfortably propagating in both leads
        const double base = std::max(p.left_lead.U, p.right_lead.U);
        local.E_min = base + 0.5;
        local.E_max = base + 6.0;
        local.has_range = true;
        local.grid = std::min(local.grid, 60);
    }
    const std::vector<double> grid =
        build_energy_grid(p, local.E_min, local.E_max, local.grid, err);

    InvariantResult flux{"flux_conservation", true, 0.0, cfg.tol};
    InvariantResult det{"unimodularity", true, 0.0, cfg.tol};
    InvariantResult round{"conversion_roundtrip", true, 0.0, 1e-11};
    InvariantResult cross{"cross_formalism_TR", true, 0.0, cfg.tol};
    InvariantResult refl{"impedance_reflection_match", true, 0.0, cfg.tol};

    for (double E : grid) {
        TransferMatrix tm;
        try {
            tm = profile_transfer(p, E);
        } catch (const error& e) {
            if (e.code() != errc::singular_input) throw;
            E = E * (1.0 + 1e-9) + 1e-12;
            err << "note: singular grid point; re-evaluated at "
                << format_double(E) << "\n";
            tm = profile_transfer(p, E);
        }
        if (cfg.inject_det_break) tm.m.a11 *= 1.0 + 1e-6; // test hook

        const FluxCoefficients fc = flux_coefficients(tm);
        flux.worst = std::max(flux.worst, fc.defect);

        const cplx expected_det =
            p.has_symmetric_leads() ? cplx(1.0) : tm.z_right / tm.z_left;
        det.worst = std::max(det.worst,
                             std::abs(tm.m.det() - expected_det) / std::abs(expected_det));

        if (tm.m.a11 != cplx(0.0)) {
            const TransferMatrix ts =
                transfer_from_scattering(scattering_from_transfer(tm));
            round.worst = std::max(round.worst, max_abs_diff(tm.m, ts.m));
        }
        const TransferMatrix tz = transfer_from_impedance(impedance_from_transfer(tm));
        round.worst = std::max(round.worst, max_abs_diff(tm.m, tz.m));

        const ImpedancePoint ip = impedance_point(p, E);
        cross.worst = std::max({cross.worst, std::abs(fc.T - ip.T),
                                std::abs(fc.R - ip.R)});
        const Amplitudes a = rt_from_transfer(tm);
        refl.worst = std::max(refl.worst, std::abs(a.r - ip.r));
    }

    std::vector<InvariantResult> res{flux, det, round, cross, refl};
    for (auto& r : res) r.pass = r.worst <= r.threshold;
    return res;
}

std::vector<InvariantResult> validate_comb_doc(const CombSpec& spec,
                                               const RunConfig& cfg) {
    InvariantResult cell_det{"cell_unimodularity", true, 0.0, 1e-12};
    InvariantResult forms{"tamm_form_agreement", true, 0.0,
                          std::max(cfg.tol, 1e-8)};
    InvariantResult brute{"tamm_brute_force_match", true, 0.0,
                          std::max(cfg.tol, 1e-8)};
    InvariantResult gap{"surface_gap_consistency", true, 0.0, 0.0};

    for (int i = 1; i <= 20; ++i) {
        const double E = spec.U_E * double(i) / 21.0;
        Matrix2 cell = comb_cell_transfer(spec, E).m;
        if (cfg.inject_det_break) cell.a11 *= 1.0 + 1e-6; // test hook
        cell_det.worst = std::max(cell_det.worst, std::abs(cell.det() - cplx(1.0)));
    }

    const std::vector<double> r_imp = tamm_roots(spec, TammForm::impedance);
    const std::vector<double> r_cot = tamm_roots(spec, TammForm::cot);
    if (r_imp.size() != r_cot.size()) {
        forms.pass = false;
        forms.worst = std::numeric_limits<double>::infinity();
    } else {
        for (std::size_t i = 0; i < r_imp.size(); ++i)
            forms.worst = std::max(forms.worst, std::abs(r_imp[i] - r_cot[i]));
    }

    const std::vector<double> r_brute = bound_states_bruteforce(
        comb_profile(spec), 1e-4 * spec.U_E, spec.U_E * (1.0 - 1e-7));
    if (r_brute.size() != r_imp.size()) {
        brute.pass = false;
        brute.worst = std::numeric_limits<double>::infinity();
    } else {
        for (std::size_t i = 0; i < r_imp.size(); ++i)
            brute.worst = std::max(brute.worst, std::abs(r_imp[i] - r_brute[i]));
    }

    const TammSolution sol = solve_tamm(spec, "impedance");
    for (const auto& lv : sol.surface_states)
        if (!(std::abs(lv.chi) > 1.0)) gap.pass = false;
    for (const auto& lv : sol.levels)
        if (lv.in_gap != (std::abs(lv.chi) > 1.0)) gap.pass = false;

    std::vector<InvariantResult> res{cell_det, forms, brute, gap};
    if (res[0].worst > res[0].threshold) res[0].pass = false;
    if (forms.pass) res[1].pass = forms.worst <= forms.threshold;
    if (brute.pass) res[2].pass = brute.worst <= brute.threshold;
    return res;
}

} // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<InvariantResult> res;
    try {
        const json doc = parse_json_doc(slurp(cfg.input_path));
        if (is_comb_doc(doc)) {
            res = validate_comb_doc(parse_comb_doc(doc), cfg);
        } else {
            const ParseResult pr = parse_profile(doc.dump());
            for (const auto& w : pr.warnings) err << "warning: " << w << "\n";
            res = validate_profile_doc(pr.profile, cfg, err);
        }
    } catch (const error& e) {
        return input_error(err, e.what());
    }

    emit_report(res, cfg.format, out);
    bool all_pass = true;
    for (const auto& r : res)
        if (!r.pass) {
            err << "error: invariant failed: " << r.name << "\n";
            all_pass = false;
        }
    return all_pass ? exit_ok : exit_validation_failure;
}

} // namespace qwi
