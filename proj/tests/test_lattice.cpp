// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>

#include "latticeq/errors.hpp"
#include "latticeq/lattice.hpp"

using latticeq::Coordinate3;
using latticeq::DirectLatticeSpec;
using latticeq::LatticeSpec;
using latticeq::PlanarLatticeSpec;
using latticeq::Plane;
using latticeq::Rational;

namespace {

DirectLatticeSpec axis_spec() {
    const Rational one(1), zero(0);
    return DirectLatticeSpec{"axes",
                             {{one, zero, zero},
                              {-one, zero, zero},
                              {zero, one, zero},
                              {zero, -one, zero},
                              {zero, zero, one},
                              {zero, zero, -one}}};
}

}  // namespace

TEST_CASE("builtin fcc displacement pairs") {
    const auto fcc = latticeq::builtin_fcc(Rational(1));
    const Rational h(1, 2);
    CHECK(fcc.delta_a == std::vector<Rational>{h, -h, -h, h});
    CHECK(fcc.delta_b == std::vector<Rational>{h, h, -h, -h});

    const auto scaled = latticeq::builtin_fcc(Rational(2));
    CHECK(scaled.delta_a == std::vector<Rational>{1, -1, -1, 1});

    CHECK_THROWS_AS(latticeq::builtin_fcc(Rational(0)), latticeq::InvalidSpecError);
    CHECK_THROWS_AS(latticeq::builtin_fcc(Rational(-1)), latticeq::InvalidSpecError);
}

TEST_CASE("builtin cubic-diag displacement pairs") {
    const auto cubic = latticeq::builtin_cubic_diag(Rational(1));
    CHECK(cubic.delta_a == std::vector<Rational>{1, 1, 0, -1, -1, -1, 0, 1});
    CHECK(cubic.delta_b == std::vector<Rational>{0, 1, 1, 1, 0, -1, -1, -1});
    CHECK(cubic.delta_a[0] == Rational(1));
    CHECK(cubic.delta_b[0] == Rational(0));

    const auto tripled = latticeq::builtin_cubic_diag(Rational(3));
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(tripled.delta_a[k] == cubic.delta_a[k] * Rational(3));
        CHECK(tripled.delta_b[k] == cubic.delta_b[k] * Rational(3));
    }

    CHECK_THROWS_AS(latticeq::builtin_cubic_diag(Rational(0)), latticeq::InvalidSpecError);
}

TEST_CASE("validate finds all violations") {
    for (const char* d : {"1", "1/2", "7/5"}) {
        CHECK(latticeq::validate(latticeq::builtin_fcc(Rational::from_string(d))).empty());
        CHECK(latticeq::validate(latticeq::builtin_cubic_diag(Rational::from_string(d))).empty());
    }

    const PlanarLatticeSpec dup{"dup", Rational(1), {1, 1}, {0, 0}};
    const auto dup_violations = latticeq::validate(dup);
    REQUIRE(dup_violations.size() == 1);
    CHECK(dup_violations[0].find("duplicate") != std::string::npos);

    const PlanarLatticeSpec with_zero{"zero-pair", Rational(1), {1, 0}, {0, 0}};
    const auto zero_violations = latticeq::validate(with_zero);
    REQUIRE(zero_violations.size() == 1);
    CHECK(zero_violations[0].find("zero displacement") != std::string::npos);

    const PlanarLatticeSpec mismatch{"mismatch", Rational(1), {1, 0, 1}, {0, 1}};
    CHECK(latticeq::validate(mismatch).size() == 1);

    DirectLatticeSpec direct = axis_spec();
    direct.directions.push_back(latticeq::origin3());
    direct.directions.push_back(direct.directions[0]);
    const auto direct_violations = latticeq::validate(direct);
    CHECK(direct_violations.size() == 2);

    CHECK_THROWS_AS(latticeq::require_valid(LatticeSpec(dup)), latticeq::InvalidSpecError);
    try {
        latticeq::require_valid(LatticeSpec(dup));
    } catch (const latticeq::InvalidSpecError& e) {
        CHECK(e.violations() == dup_violations);
    }
}

TEST_CASE("degrees of freedom") {
    CHECK(latticeq::degrees_of_freedom(latticeq::builtin_fcc(Rational(1))) == 12);
    CHECK(latticeq::degrees_of_freedom(latticeq::builtin_cubic_diag(Rational(1))) == 18);
    CHECK(latticeq::degrees_of_freedom(axis_spec()) == 6);

    // Distinctness is scale-invariant.
    for (const char* d : {"2", "1/2", "7/5", "3"}) {
        CHECK(latticeq::degrees_of_freedom(latticeq::builtin_cubic_diag(Rational::from_string(d))) == 18);
        CHECK(latticeq::degrees_of_freedom(latticeq::builtin_fcc(Rational::from_string(d))) == 12);
    }

    const PlanarLatticeSpec dup{"dup", Rational(1), {1, 1}, {0, 0}};
    CHECK_THROWS_AS(latticeq::degrees_of_freedom(dup), latticeq::InvalidSpecError);
}

TEST_CASE("fcc displacements all have squared length d^2/2") {
    for (const char* d_text : {"1", "3/2"}) {
        const Rational d = Rational::from_string(d_text);
        const auto displacements = latticeq::displacement_set(latticeq::builtin_fcc(d));
        REQUIRE(displacements.size() == 12);
        for (const auto& v : displacements) CHECK(v.squared_norm() == d * d / Rational(2));
    }
}

TEST_CASE("cubic-diag plane placement duplicates exactly the six axis vectors") {
    const auto cubic = latticeq::builtin_cubic_diag(Rational(1));
    std::map<Coordinate3, int> counts;
    for (Plane plane : latticeq::kAllPlanes) {
        for (std::size_t k = 0; k < cubic.pair_count(); ++k) {
            ++counts[latticeq::planar_displacement(cubic, plane, k)];
        }
    }
    int doubled = 0, single = 0;
    for (const auto& [v, count] : counts) {
        if (count == 2) {
            ++doubled;
            // Doubly placed vectors are the +-axis unit vectors.
            CHECK(v.squared_norm() == Rational(1));
        } else {
            CHECK(count == 1);
            ++single;
            CHECK(v.squared_norm() == Rational(2));
        }
    }
    CHECK(doubled == 6);
    CHECK(single == 12);
    CHECK(counts.size() == 18);
}

TEST_CASE("plane placement follows the coordinate-update cases") {
    const auto cubic = latticeq::builtin_cubic_diag(Rational(1));
    // Pair 2 is (0, 1): in the zx plane the x component takes delta_b.
    CHECK(latticeq::planar_displacement(cubic, Plane::zx, 2) ==
          Coordinate3{Rational(1), Rational(0), Rational(0)});
    CHECK(latticeq::planar_displacement(cubic, Plane::yz, 0) ==
          Coordinate3{Rational(0), Rational(1), Rational(0)});

    const auto fcc = latticeq::builtin_fcc(Rational(1));
    CHECK(latticeq::planar_displacement(fcc, Plane::xy, 0) ==
          Coordinate3{Rational(1, 2), Rational(1, 2), Rational(0)});
}

TEST_CASE("lattice spec JSON round trip") {
    const LatticeSpec fcc(latticeq::builtin_fcc(Rational(1)));
    const auto fcc_doc = latticeq::lattice_to_json(fcc);
    const LatticeSpec fcc_back = latticeq::lattice_from_json(fcc_doc);
    CHECK(fcc_back.is_planar());
    CHECK(fcc_back.planar().delta_a == fcc.planar().delta_a);
    CHECK(fcc_back.planar().delta_b == fcc.planar().delta_b);
    CHECK(fcc_back.planar().bond_scale == Rational(1));
    CHECK(fcc_back.name() == "fcc");

    const LatticeSpec axes(axis_spec());
    const LatticeSpec axes_back = latticeq::lattice_from_json(latticeq::lattice_to_json(axes));
    CHECK(!axes_back.is_planar());
    CHECK(axes_back.direct().directions == axes.direct().directions);
}

TEST_CASE("lattice spec JSON rejects malformed documents") {
    using nlohmann::json;
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse("[]")), latticeq::SpecParseError);
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse(R"({"name":"x"})")),
                    latticeq::SpecParseError);
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse(
                        R"({"name":"x","kind":"hex","directions":[]})")),
                    latticeq::SpecParseError);
    // Unknown keys are rejected, including keys of the other kind.
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse(
                        R"({"name":"x","kind":"direct","directions":[["1","0","0"],["0","1","0"]],"d":"1"})")),
                    latticeq::SpecParseError);
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse(
                        R"({"name":"x","kind":"planar","d":"1","delta_a":["1","0"],"delta_b":["0","1"],"extra":1})")),
                    latticeq::SpecParseError);
    // Rationals must be strings in "p/q" form.
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse(
                        R"({"name":"x","kind":"planar","d":"1","delta_a":[1,0],"delta_b":["0","1"]})")),
                    latticeq::SpecParseError);
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse(
                        R"({"name":"x","kind":"planar","d":"1.5","delta_a":["1","0"],"delta_b":["0","1"]})")),
                    latticeq::SpecParseError);
    // Direction entries must be triples.
    CHECK_THROWS_AS(latticeq::lattice_from_json(json::parse(
                        R"({"name":"x","kind":"direct","directions":[["1","0"]]})")),
                    latticeq::SpecParseError);

    CHECK_THROWS_AS(latticeq::load_lattice_file("/nonexistent/path.json"), latticeq::SpecParseError);
}
