// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "latticeq/geometry.hpp"
#include "latticeq/rational.hpp"

namespace latticeq {

/// The three orthogonal turn planes. A planar lattice applies the same
/// in-plane displacement pairs to each of them.
enum class Plane { yz, zx, xy };

inline const char* plane_label(Plane p) {
    switch (p) {
        case Plane::yz: return "yz";
        case Plane::zx: return "zx";
        case Plane::xy: return "xy";
    }
    return "?";
}

inline constexpr std::array<Plane, 3> kAllPlanes = {Plane::yz, Plane::zx, Plane::xy};

/// Turn geometry given as K in-plane displacement pairs (delta_a[k],
/// delta_b[k]), applied to all three orthogonal planes:
///   yz: (0, a, b)    zx: (b, 0, a)    xy: (a, b, 0)
struct PlanarLatticeSpec {
    std::string name;
    Rational bond_scale;  // d > 0
    std::vector<Rational> delta_a;
    std::vector<Rational> delta_b;

    std::size_t pair_count() const { return delta_a.size(); }
};

/// Turn geometry given directly as N distinct nonzero 3D displacements.
struct DirectLatticeSpec {
    std::string name;
    std::vector<Coordinate3> directions;
};

/// Exactly one of the two spec kinds.
class LatticeSpec {
public:
    LatticeSpec(PlanarLatticeSpec spec) : spec_(std::move(spec)) {}  // NOLINT: implicit by intent
    LatticeSpec(DirectLatticeSpec spec) : spec_(std::move(spec)) {}  // NOLINT: implicit by intent

    bool is_planar() const { return std::holds_alternative<PlanarLatticeSpec>(spec_); }
    const PlanarLatticeSpec& planar() const { return std::get<PlanarLatticeSpec>(spec_); }
    const DirectLatticeSpec& direct() const { return std::get<DirectLatticeSpec>(spec_); }

    const std::string& name() const {
        return is_planar() ? planar().name : direct().name;
    }

private:
    std::variant<PlanarLatticeSpec, DirectLatticeSpec> spec_;
};

/// FCC turn set: four in-plane pairs of (+-d/2, +-d/2), counter-clockwise.
/// 12 distinct directions overall, all of squared length d^2/2.
PlanarLatticeSpec builtin_fcc(const Rational& d);

/// Cubic lattice with in-plane diagonals: eight pairs stepping around the
/// unit square counter-clockwise from (d, 0). 18 distinct directions overall.
PlanarLatticeSpec builtin_cubic_diag(const Rational& d);

/// All invariant violations of a spec (duplicate directions, zero direction,
/// length mismatch, ...). Empty result means the spec is valid. Violations are
/// data, not faults: this never throws.
std::vector<std::string> validate(const LatticeSpec& spec);

/// Throws InvalidSpecError listing every violation when the spec is invalid.
void require_valid(const LatticeSpec& spec);

/// The 3D displacement for pair k of a planar spec placed in a plane.
Coordinate3 planar_displacement(const PlanarLatticeSpec& spec, Plane plane, std::size_t k);

/// Deduplicated direction set of a spec, canonically sorted. For planar specs
/// these are the 3K plane-placed displacements with duplicates removed.
std::vector<Coordinate3> displacement_set(const LatticeSpec& spec);

/// Count of distinct 3D displacements. Requires a valid spec.
int degrees_of_freedom(const LatticeSpec& spec);

/// Lattice spec file schema (all rationals as "p/q" or integer strings;
/// unknown keys rejected):
///   {"name": str, "kind": "planar", "d": "p/q", "delta_a": [...], "delta_b": [...]}
///   {"name": str, "kind": "direct", "directions": [["p/q","p/q","p/q"], ...]}
LatticeSpec lattice_from_json(const nlohmann::json& doc);
nlohmann::ordered_json lattice_to_json(const LatticeSpec& spec);

/// Reads and parses a spec file. Throws SpecParseError on I/O or JSON
/// problems; the result is not yet validated.
LatticeSpec load_lattice_file(const std::string& path);

}  // namespace latticeq
