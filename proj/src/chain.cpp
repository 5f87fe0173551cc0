// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "latticeq/chain.hpp"

#include <algorithm>

#include "latticeq/errors.hpp"

namespace latticeq {

namespace {

std::uint32_t parse_bits_msb_first(std::string_view bits) {
    std::uint32_t value = 0;
    for (char c : bits) value = (value << 1) | (c == '1' ? 1u : 0u);
    return value;
}

void check_binary(std::string_view bits, int field_width) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            const std::size_t field = field_width > 0 ? i / static_cast<std::size_t>(field_width) : 0;
            throw FormatError(std::string("bitstring contains non-binary character '") + bits[i] +
                              "' at position " + std::to_string(i) + " (field " + std::to_string(field) + ")");
        }
    }
}

}  // namespace

ChainBitstring ChainBitstring::parse(std::string_view bits, int bead_count, const BitfieldLayout& layout) {
    if (bead_count < 1) {
        throw InvalidArgumentError("bead count must be at least 1, got " + std::to_string(bead_count));
    }
    const int width = layout.width();
    const int turns = bead_count - 1;
    const std::size_t expected = static_cast<std::size_t>(width) * turns;
    if (bits.size() != expected) {
        throw FormatError("bitstring has " + std::to_string(bits.size()) + " bits, expected " +
                          std::to_string(expected) + " (" + std::to_string(turns) + " turns of width " +
                          std::to_string(width) + ")");
    }
    check_binary(bits, width);
    return ChainBitstring{std::string(bits), turns, width};
}

TurnDecode decode_turn(const TurnEncoding& enc, std::string_view field) {
    const auto& layout = enc.layout();
    if (static_cast<int>(field.size()) != layout.width()) {
        throw FormatError("turn field has " + std::to_string(field.size()) + " bits, expected " +
                          std::to_string(layout.width()));
    }
    check_binary(field, layout.width());

    const std::uint32_t direction_state = parse_bits_msb_first(field.substr(0, layout.direction_bits));
    std::uint32_t varmask = 0;
    for (int i = 0; i < layout.width(); ++i) {
        if (field[i] == '1') varmask |= std::uint32_t(1) << i;
    }

    TurnDecode out;
    if (layout.plane_bits > 0) {
        const std::uint32_t plane_state = parse_bits_msb_first(field.substr(layout.direction_bits));
        switch (plane_state) {
            case 1: out.plane = Plane::yz; break;
            case 2: out.plane = Plane::zx; break;
            case 3: out.plane = Plane::xy; break;
            default: break;
        }
        if (!TurnEncoding::plane_state_valid(plane_state)) {
            out.reason = "plane-unselected";
            return out;
        }
    }
    if (!enc.direction_state_valid(direction_state)) {
        out.reason = "padded-direction";
        return out;
    }

    out.valid = true;
    out.displacement = {enc.dx().evaluate_mask(varmask), enc.dy().evaluate_mask(varmask),
                        enc.dz().evaluate_mask(varmask)};
    return out;
}

Conformation decode_chain(const TurnEncoding& enc, std::string_view bits, int bead_count,
                          const Coordinate3& origin) {
    const ChainBitstring parsed = ChainBitstring::parse(bits, bead_count, enc.layout());

    Conformation chain;
    chain.valid = true;
    chain.beads.reserve(bead_count);
    chain.beads.push_back(origin);
    for (int t = 0; t < parsed.turn_count; ++t) {
        TurnRecord record{std::string(parsed.field(t)), decode_turn(enc, parsed.field(t))};
        chain.valid = chain.valid && record.decode.valid;
        chain.beads.push_back(chain.beads.back() + record.decode.displacement);
        chain.turns.push_back(std::move(record));
    }
    chain.self_avoiding = chain.valid && pairwise_distinct(chain.beads);
    return chain;
}

bool pairwise_distinct(std::vector<Coordinate3> points) {
    std::sort(points.begin(), points.end());
    return std::adjacent_find(points.begin(), points.end()) == points.end();
}

bool self_avoiding(const Conformation& c) {
    if (!c.valid) throw ContractError("self-avoidance is undefined for invalid conformations");
    return pairwise_distinct(c.beads);
}

std::string export_xyz(const Conformation& c) {
    if (!c.valid) throw ContractError("cannot export an invalid conformation to XYZ");
    std::string out = std::to_string(c.beads.size()) + "\n";
    out += "latticeq conformation\n";
    for (const auto& bead : c.beads) {
        out += "C " + to_decimal_string(bead.x) + " " + to_decimal_string(bead.y) + " " +
               to_decimal_string(bead.z) + "\n";
    }
    return out;
}

nlohmann::ordered_json conformation_to_json(const Conformation& c) {
    nlohmann::ordered_json doc;
    auto beads = nlohmann::ordered_json::array();
    for (const auto& b : c.beads) beads.push_back({b.x.str(), b.y.str(), b.z.str()});
    doc["beads"] = std::move(beads);
    doc["valid"] = c.valid;
    doc["self_avoiding"] = c.self_avoiding;
    auto turns = nlohmann::ordered_json::array();
    for (const auto& t : c.turns) {
        nlohmann::ordered_json turn;
        turn["bits"] = t.bits;
        if (t.decode.plane) {
            turn["plane"] = plane_label(*t.decode.plane);
        } else {
            turn["plane"] = nullptr;
        }
        if (t.decode.valid) {
            const auto& d = t.decode.displacement;
            turn["displacement"] = {d.x.str(), d.y.str(), d.z.str()};
        } else {
            turn["displacement"] = nullptr;
        }
        turns.push_back(std::move(turn));
    }
    doc["turns"] = std::move(turns);
    return doc;
}

}  // namespace latticeq
