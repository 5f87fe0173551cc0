// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latticeq/encoder.hpp"
#include "latticeq/geometry.hpp"

namespace latticeq {

/// Result of decoding one turn field. Invalid turns carry a reason and a zero
/// displacement (decoding continues; validity is data, not a fault).
struct TurnDecode {
    bool valid = false;
    std::string reason;                  // empty when valid
    std::optional<Plane> plane;          // selected plane; nullopt for direct encodings or plane 00
    Coordinate3 displacement = origin3();
};

struct TurnRecord {
    std::string bits;
    TurnDecode decode;
};

/// An ordered chain of bead coordinates plus the decoded turn records.
/// self_avoiding is meaningful only when valid.
struct Conformation {
    std::vector<Coordinate3> beads;
    std::vector<TurnRecord> turns;
    bool valid = false;
    bool self_avoiding = false;
};

/// A chain bitstring split into fixed-width turn fields. The leftmost field is
/// the bead1 -> bead2 turn; within a field direction bits precede plane bits,
/// q1 (and the first plane qubit) leftmost.
struct ChainBitstring {
    std::string bits;
    int turn_count = 0;
    int field_width = 0;

    /// Validates length and characters. Throws FormatError naming the expected
    /// length or the offending field.
    static ChainBitstring parse(std::string_view bits, int bead_count, const BitfieldLayout& layout);

    std::string_view field(int i) const {
        return std::string_view(bits).substr(static_cast<std::size_t>(i) * field_width, field_width);
    }
};

/// Decodes one turn field by evaluating the encoding's displacement
/// polynomials at the field's assignment. Throws FormatError on width or
/// character problems.
TurnDecode decode_turn(const TurnEncoding& enc, std::string_view field);

/// Decodes a whole chain. Beads accumulate from `origin`; invalid turns
/// contribute zero displacement and mark the conformation invalid.
Conformation decode_chain(const TurnEncoding& enc, std::string_view bits, int bead_count,
                          const Coordinate3& origin = origin3());

/// True iff all bead coordinates are pairwise distinct (exact comparison).
/// Throws ContractError when called on an invalid conformation.
bool self_avoiding(const Conformation& c);

/// Exact-sort distinctness check shared by self-avoidance and censuses.
bool pairwise_distinct(std::vector<Coordinate3> points);

/// Standard XYZ text ("C x y z" per bead, decimal coordinates). Throws
/// ContractError when called on an invalid conformation.
std::string export_xyz(const Conformation& c);

/// {"beads": [...], "valid": .., "self_avoiding": .., "turns": [...]}
nlohmann::ordered_json conformation_to_json(const Conformation& c);

}  // namespace latticeq
