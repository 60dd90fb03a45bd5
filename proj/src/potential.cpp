#include "qwi/potential.hpp"
#include "qwi/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace qwi {

bool units_valid(const UnitSystem& u) {
    return std::isfinite(u.hbar) && std::isfinite(u.mass) && u.hbar > 0.0 &&
           u.mass > 0.0;
}

cplx wavenumber(double E, double U, const UnitSystem& u) {
    // principal branch: sqrt of a negative real (with +0 imaginary part)
    // lands on the positive imaginary axis, so k is either >= 0 real or
    // +i kappa, never in the lower half plane
    return std::sqrt(cplx(2.0 * u.mass * (E - U), 0.0)) / u.hbar;
}

cplx characteristic_impedance(double E, double U, const UnitSystem& u) {
    return u.hbar * wavenumber(E, U, u) / u.mass;
}

double PotentialProfile::total_length() const {
    double L = 0.0;
    for (const auto& s : segments) L += s.length;
    return L;
}

double PotentialProfile::potential_scale() const {
    double m = std::max(std::abs(left_lead.U), std::abs(right_lead.U));
    for (const auto& s : segments) m = std::max(m, std::abs(s.U));
    return m;
}

void validate_profile(const PotentialProfile& p) {
    if (!units_valid(p.units))
        throw error(errc::semantic_error, "units: hbar and mass must be finite and positive");
    if (!std::isfinite(p.left_lead.U) || !std::isfinite(p.right_lead.U))
        throw error(errc::semantic_error, "lead potentials must be finite");
    for (std::size_t i = 0; i < p.segments.size(); ++i) {
        const auto& s = p.segments[i];
        if (!std::isfinite(s.length) || s.length <= 0.0)
            throw error(errc::semantic_error,
                        "segment " + std::to_string(i) + ": length must be positive");
        if (!std::isfinite(s.U))
            throw error(errc::semantic_error,
                        "segment " + std::to_string(i) + ": potential must be finite");
    }
    std::size_t prev = 0;
    bool first = true;
    for (const auto& d : p.deltas) {
        if (!std::isfinite(d.strength))
            throw error(errc::semantic_error, "delta strength must be finite");
        if (d.position_index > p.segments.size())
            throw error(errc::semantic_error,
                        "delta boundary index " + std::to_string(d.position_index) +
                            " out of range (profile has " +
                            std::to_string(p.boundary_count()) + " boundaries)");
        if (!first && d.position_index <= prev)
            throw error(errc::semantic_error,
                        "delta list must be sorted by boundary with unique entries");
        prev = d.position_index;
        first = false;
    }
}

namespace {

[[noreturn]] void rethrow_with_position(const std::string& text,
                                        const json::parse_error& e) {
    // nlohmann reports a byte offset; translate it to line/column so the
    // message points at the problem in the user's file
    int line = 1, col = 1;
    const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << e.what();
    throw parse_error(os.str(), line, col);
}

double require_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw parse_error(where + ": missing required field '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw parse_error(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

} // namespace

ParseResult parse_profile(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        rethrow_with_position(text, e);
    }
    if (!doc.is_object())
        throw parse_error("profile document must be a JSON object");

    ParseResult result;
    PotentialProfile& p = result.profile;

    if (doc.contains("units")) {
        const auto& u = doc.at("units");
        if (!u.is_object()) throw parse_error("units must be an object");
        p.units.hbar = require_number(u, "hbar", "units");
        p.units.mass = require_number(u, "mass", "units");
    }
    if (!doc.contains("left_lead") || !doc.contains("right_lead"))
        throw parse_error("profile needs both left_lead and right_lead");
    p.left_lead.U = require_number(doc.at("left_lead"), "U", "left_lead");
    p.right_lead.U = require_number(doc.at("right_lead"), "U", "right_lead");

    if (doc.contains("elements")) {
        const auto& elems = doc.at("elements");
        if (!elems.is_array()) throw parse_error("elements must be an array");
        std::size_t idx = 0;
        for (const auto& e : elems) {
            const std::string where = "elements[" + std::to_string(idx) + "]";
            ++idx;
            if (!e.is_object() || e.size() != 1)
                throw parse_error(where + ": each element is an object with exactly one "
                                          "of 'segment' or 'delta'");
            if (e.contains("segment")) {
                const auto& s = e.at("segment");
                Segment seg;
                seg.length = require_number(s, "length", where + ".segment");
                seg.U = require_number(s, "U", where + ".segment");
                p.segments.push_back(seg);
            } else if (e.contains("delta")) {
                const auto& d = e.at("delta");
                DeltaBarrier db;
                db.strength = require_number(d, "alpha", where + ".delta");
                db.position_index = p.segments.size(); // boundary reached so far
                p.deltas.push_back(db);
            } else {
                throw parse_error(where + ": unknown element type '" +
                                  e.begin().key() + "'");
            }
        }
    }

    // normalize deltas: merge same-boundary entries, drop exact zeros
    std::vector<DeltaBarrier> merged;
    for (const auto& d : p.deltas) {
        if (!merged.empty() && merged.back().position_index == d.position_index) {
            merged.back().strength += d.strength;
            result.warnings.push_back(
                "merged delta barriers sharing boundary " +
                std::to_string(d.position_index));
        } else {
            merged.push_back(d);
        }
    }
    std::erase_if(merged, [&](const DeltaBarrier& d) {
        if (d.strength == 0.0) {
            result.warnings.push_back("dropped zero-strength delta at boundary " +
                                      std::to_string(d.position_index));
            return true;
        }
        return false;
    });
    p.deltas = std::move(merged);

    validate_profile(p);
    return result;
}

ParseResult parse_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::config_error, "cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

std::string serialize_profile(const PotentialProfile& p) {
    json doc;
    doc["units"] = {{"hbar", p.units.hbar}, {"mass", p.units.mass}};
    doc["left_lead"] = {{"U", p.left_lead.U}};
    doc["right_lead"] = {{"U", p.right_lead.U}};
    json elems = json::array();
    // interleave deltas back at their boundaries
    std::size_t di = 0;
    for (std::size_t b = 0; b <= p.segments.size(); ++b) {
        while (di < p.deltas.size() && p.deltas[di].position_index == b) {
            elems.push_back({{"delta", {{"alpha", p.deltas[di].strength}}}});
            ++di;
        }
        if (b < p.segments.size())
            elems.push_back({{"segment",
                              {{"length", p.segments[b].length}, {"U", p.segments[b].U}}}});
    }
    doc["elements"] = std::move(elems);
    return doc.dump(2) + "\n";
}

} // namespace qwi
