// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latticeq/lattice.hpp"
#include "latticeq/multilinear.hpp"

namespace latticeq {

/// Wire layout of one turn field. Within a field, direction bits come first
/// (q1 leftmost), then the plane bits when present.
struct BitfieldLayout {
    int direction_bits = 0;
    int plane_bits = 0;  // 2 for planar encodings, 0 for direct
    std::vector<std::uint32_t> invalid_direction_states;  // padded states >= K
    std::vector<std::uint32_t> invalid_plane_states;      // {0} for planar, {} for direct

    int width() const { return direction_bits + plane_bits; }
};

nlohmann::ordered_json layout_to_json(const BitfieldLayout& layout);

/// The exact coefficient vectors of a spec's displacement components, in
/// basis-matrix column order. Planar specs have (c_da, c_db); direct specs
/// additionally have c_dc.
struct CoefficientSet {
    std::vector<Rational> c_da;
    std::vector<Rational> c_db;
    std::optional<std::vector<Rational>> c_dc;
};

/// A compiled turn: per-axis displacement polynomials over the turn's qubit
/// variables plus the bitfield layout. Evaluating (dx, dy, dz) at any valid
/// state yields a member of the lattice's direction set; invalid states are
/// flagged by the decoder, not by the polynomials.
class TurnEncoding {
public:
    const std::string& lattice_name() const { return lattice_name_; }
    bool planar() const { return layout_.plane_bits > 0; }

    int direction_qubits() const { return layout_.direction_bits; }
    int plane_qubits() const { return layout_.plane_bits; }
    int variable_count() const { return layout_.width(); }
    const BitfieldLayout& layout() const { return layout_; }

    const MultilinearPolynomial& dx() const { return dx_; }
    const MultilinearPolynomial& dy() const { return dy_; }
    const MultilinearPolynomial& dz() const { return dz_; }

    /// In-plane displacement polynomials over the direction qubits only.
    /// Present for planar encodings.
    const std::optional<MultilinearPolynomial>& da() const { return da_; }
    const std::optional<MultilinearPolynomial>& db() const { return db_; }

    std::uint64_t valid_state_count() const { return valid_state_count_; }

    /// Deduplicated, canonically sorted direction set of the source lattice.
    const std::vector<Coordinate3>& direction_set() const { return direction_set_; }

    bool direction_state_valid(std::uint32_t state) const;
    static bool plane_state_valid(std::uint32_t plane_state) { return plane_state != 0; }

private:
    friend TurnEncoding encode_planar(const PlanarLatticeSpec& spec);
    friend TurnEncoding encode_direct(const DirectLatticeSpec& spec);

    TurnEncoding(std::string name, BitfieldLayout layout, MultilinearPolynomial dx,
                 MultilinearPolynomial dy, MultilinearPolynomial dz)
        : lattice_name_(std::move(name)), layout_(std::move(layout)),
          dx_(std::move(dx)), dy_(std::move(dy)), dz_(std::move(dz)) {}

    std::string lattice_name_;
    BitfieldLayout layout_;
    MultilinearPolynomial dx_, dy_, dz_;
    std::optional<MultilinearPolynomial> da_, db_;
    std::uint64_t valid_state_count_ = 0;
    std::vector<Coordinate3> direction_set_;
};

/// Compiles a planar spec: solves the in-plane displacement pairs into
/// polynomials over k = ceil(log2 K) direction qubits, then composes them
/// with the two-qubit plane selectors
///   S_yz = (1-q_{k+1}) q_{k+2},  S_zx = q_{k+1} (1-q_{k+2}),  S_xy = q_{k+1} q_{k+2}
/// into dx = S_xy da + S_zx db, dy = S_yz da + S_xy db, dz = S_zx da + S_yz db.
/// Plane state 00 selects nothing and is a hard invalid marker.
TurnEncoding encode_planar(const PlanarLatticeSpec& spec);

/// Compiles a direct spec: dx, dy, dz are solved componentwise over
/// ceil(log2 N) qubits; states >= N are invalid padding.
TurnEncoding encode_direct(const DirectLatticeSpec& spec);

/// Dispatch on the spec kind.
TurnEncoding encode(const LatticeSpec& spec);

/// The exact coefficient vectors (basis-matrix column order) without building
/// the full encoding.
CoefficientSet coefficients(const LatticeSpec& spec);

/// Qubit cost of an encoding: per-turn width, and total for an m-bead chain.
struct QubitBudget {
    int per_turn = 0;

    long long total(int bead_count) const { return static_cast<long long>(per_turn) * (bead_count - 1); }
};

/// Throws InvalidArgumentError when bead_count < 2.
QubitBudget qubit_budget(const LatticeSpec& spec, int bead_count);

nlohmann::ordered_json encoding_to_json(const TurnEncoding& enc, const CoefficientSet& coeffs);

/// Plain-text rendering: coefficient vectors and polynomials in canonical
/// form, one per line.
std::string encoding_to_text(const TurnEncoding& enc, const CoefficientSet& coeffs);

}  // namespace latticeq
