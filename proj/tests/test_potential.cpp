#include <doctest.h>

#include "qwi/errors.hpp"
#include "qwi/potential.hpp"

#include <cmath>

using namespace qwi;

TEST_CASE("wavenumber takes the principal branch on both sides of the potential") {
    // propagating: k real and positive
    const cplx k1 = wavenumber(2.0, 0.0);
    CHECK(k1.real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(k1.imag() == 0.0);

    // evanescent: k on the positive imaginary axis, never the negative one
    const cplx k2 = wavenumber(0.5, 2.0);
    CHECK(k2.real() == 0.0);
    CHECK(k2.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

    // exactly at the potential: k = 0
    CHECK(wavenumber(1.5, 1.5) == cplx(0.0));
}

TEST_CASE("characteristic impedance scales as sqrt(2(E-U)/m)") {
    const UnitSystem u{1.0, 2.0}; // heavier particle
    const cplx z = characteristic_impedance(3.0, 1.0, u);
    CHECK(z.real() == doctest::Approx(std::sqrt(2.0 * 2.0 / 2.0)).epsilon(1e-15));
    CHECK(z.imag() == 0.0);

    const cplx zb = characteristic_impedance(1.0, 3.0, u);
    CHECK(zb.real() == 0.0);
    CHECK(zb.imag() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("profile parsing reads segments and attaches deltas to boundaries") {
    const std::string doc = R"({
        "units": {"hbar": 1.0, "mass": 1.0},
        "left_lead": {"U": 0.5},
        "elements": [
            {"delta": {"alpha": -1.0}},
            {"segment": {"length": 2.0, "U": 3.0}},
            {"delta": {"alpha": 0.25}},
            {"segment": {"length": 1.0, "U": -1.0}}
        ],
        "right_lead": {"U": 0.0}
    })";
    const ParseResult pr = parse_profile(doc);
    CHECK(pr.warnings.empty());
    const PotentialProfile& p = pr.profile;
    CHECK(p.left_lead.U == 0.5);
    CHECK(p.right_lead.U == 0.0);
    REQUIRE(p.segments.size() == 2);
    CHECK(p.segments[0].length == 2.0);
    CHECK(p.segments[1].U == -1.0);
    REQUIRE(p.deltas.size() == 2);
    CHECK(p.deltas[0].position_index == 0); // before the first segment
    CHECK(p.deltas[1].position_index == 1); // between the segments
    CHECK(p.deltas[1].strength == 0.25);
    CHECK(p.total_length() == 3.0);
    CHECK(p.potential_scale() == 3.0);
    CHECK_FALSE(p.has_symmetric_leads());
}

TEST_CASE("same-boundary deltas merge and zero-strength deltas vanish, with warnings") {
    const std::string doc = R"({
        "left_lead": {"U": 0.0},
        "elements": [
            {"segment": {"length": 1.0, "U": 1.0}},
            {"delta": {"alpha": 0.5}},
            {"delta": {"alpha": 0.25}},
            {"segment": {"length": 1.0, "U": 0.0}},
            {"delta": {"alpha": 0.0}}
        ],
        "right_lead": {"U": 0.0}
    })";
    const ParseResult pr = parse_profile(doc);
    REQUIRE(pr.profile.deltas.size() == 1);
    CHECK(pr.profile.deltas[0].strength == 0.75);
    CHECK(pr.profile.deltas[0].position_index == 1);
    CHECK(pr.warnings.size() == 2);
}

TEST_CASE("malformed documents raise parse errors with location info") {
    try {
        parse_profile("{\n  \"left_lead\": {\"U\": oops}\n}");
        FAIL("expected a parse error");
    } catch (const qwi::parse_error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(parse_profile("[1, 2, 3]"), qwi::parse_error);
    CHECK_THROWS_AS(parse_profile("{\"left_lead\": {\"U\": 0}}"), qwi::parse_error);
    CHECK_THROWS_AS(
        parse_profile(R"({"left_lead": {"U": 0}, "right_lead": {"U": 0},
                          "elements": [{"gizmo": {}}]})"),
        qwi::parse_error);
}

TEST_CASE("semantic validation rejects nonphysical profiles") {
    PotentialProfile p;
    p.segments.push_back({-1.0, 0.0});
    CHECK_THROWS_AS(validate_profile(p), qwi::error);

    PotentialProfile q;
    q.segments.push_back({1.0, 0.0});
    q.deltas.push_back({1.0, 5}); // boundary index past the end
    CHECK_THROWS_AS(validate_profile(q), qwi::error);

    PotentialProfile r;
    r.units.hbar = 0.0;
    CHECK_THROWS_AS(validate_profile(r), qwi::error);
}

TEST_CASE("serialization round-trips a profile exactly") {
    const std::string doc = R"({
        "units": {"hbar": 0.5, "mass": 2.0},
        "left_lead": {"U": -0.25},
        "elements": [
            {"delta": {"alpha": 1.5}},
            {"segment": {"length": 0.75, "U": 2.0}},
            {"delta": {"alpha": -0.5}}
        ],
        "right_lead": {"U": 0.125}
    })";
    const PotentialProfile p = parse_profile(doc).profile;
    const PotentialProfile q = parse_profile(serialize_profile(p)).profile;
    CHECK(q.units.hbar == p.units.hbar);
    CHECK(q.left_lead.U == p.left_lead.U);
    CHECK(q.right_lead.U == p.right_lead.U);
    REQUIRE(q.segments.size() == p.segments.size());
    CHECK(q.segments[0].length == p.segments[0].length);
    REQUIRE(q.deltas.size() == p.deltas.size());
    CHECK(q.deltas[0].position_index == p.deltas[0].position_index);
    CHECK(q.deltas[1].strength == p.deltas[1].strength);
}
