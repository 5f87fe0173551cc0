// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "latticeq/encoder.hpp"

#include <algorithm>

#include "latticeq/errors.hpp"

namespace latticeq {

namespace {

int qubits_for(std::size_t options) {
    int k = 0;
    while ((std::size_t(1) << k) < options) ++k;
    return std::max(k, 1);  // a 1-option set would still occupy one qubit
}

/// Pads a value vector with zeros up to 2^k entries. States at or beyond the
/// original length are invalid; their solve values are unobservable through
/// the decoder, so zero keeps the polynomials sparse.
std::vector<Rational> pad_to_power(const std::vector<Rational>& values, int k) {
    std::vector<Rational> padded = values;
    padded.resize(std::size_t(1) << k, Rational(0));
    return padded;
}

std::vector<std::uint32_t> padded_states(std::size_t count, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = static_cast<std::uint32_t>(count); s < (std::uint32_t(1) << k); ++s) {
        out.push_back(s);
    }
    return out;
}

struct PlaneSelectors {
    MultilinearPolynomial yz, zx, xy;
};

PlaneSelectors plane_selectors(int variable_count, int first_plane_qubit) {
    const auto q4 = MultilinearPolynomial::variable(variable_count, first_plane_qubit);
    const auto q5 = MultilinearPolynomial::variable(variable_count, first_plane_qubit + 1);
    const auto one = MultilinearPolynomial::constant(variable_count, Rational(1));
    return {
        (one - q4) * q5,  // plane state 01
        q4 * (one - q5),  // plane state 10
        q4 * q5,          // plane state 11
    };
}

}  // namespace

bool TurnEncoding::direction_state_valid(std::uint32_t state) const {
    return !std::binary_search(layout_.invalid_direction_states.begin(),
                               layout_.invalid_direction_states.end(), state);
}

TurnEncoding encode_planar(const PlanarLatticeSpec& spec) {
    const LatticeSpec wrapped(spec);
    require_valid(wrapped);

    const std::size_t pair_count = spec.pair_count();
    const int k = qubits_for(pair_count);
    const int vars = k + 2;

    const MultilinearPolynomial da = poly_from_values(k, pad_to_power(spec.delta_a, k));
    const MultilinearPolynomial db = poly_from_values(k, pad_to_power(spec.delta_b, k));
    const MultilinearPolynomial da_lifted = da.with_variable_count(vars);
    const MultilinearPolynomial db_lifted = db.with_variable_count(vars);

    const PlaneSelectors sel = plane_selectors(vars, k + 1);

    BitfieldLayout layout;
    layout.direction_bits = k;
    layout.plane_bits = 2;
    layout.invalid_direction_states = padded_states(pair_count, k);
    layout.invalid_plane_states = {0};

    TurnEncoding enc(spec.name, std::move(layout),
                     sel.xy * da_lifted + sel.zx * db_lifted,
                     sel.yz * da_lifted + sel.xy * db_lifted,
                     sel.zx * da_lifted + sel.yz * db_lifted);
    enc.da_ = da;
    enc.db_ = db;
    enc.valid_state_count_ = static_cast<std::uint64_t>(pair_count) * 3;
    enc.direction_set_ = displacement_set(wrapped);
    return enc;
}

TurnEncoding encode_direct(const DirectLatticeSpec& spec) {
    const LatticeSpec wrapped(spec);
    require_valid(wrapped);

    const std::size_t n = spec.directions.size();
    const int k = qubits_for(n);

    std::vector<Rational> xs, ys, zs;
    for (const auto& v : spec.directions) {
        xs.push_back(v.x);
        ys.push_back(v.y);
        zs.push_back(v.z);
    }

    BitfieldLayout layout;
    layout.direction_bits = k;
    layout.plane_bits = 0;
    layout.invalid_direction_states = padded_states(n, k);
    layout.invalid_plane_states = {};

    TurnEncoding enc(spec.name, std::move(layout),
                     poly_from_values(k, pad_to_power(xs, k)),
                     poly_from_values(k, pad_to_power(ys, k)),
                     poly_from_values(k, pad_to_power(zs, k)));
    enc.valid_state_count_ = n;
    enc.direction_set_ = displacement_set(wrapped);
    return enc;
}

TurnEncoding encode(const LatticeSpec& spec) {
    return spec.is_planar() ? encode_planar(spec.planar()) : encode_direct(spec.direct());
}

CoefficientSet coefficients(const LatticeSpec& spec) {
    require_valid(spec);
    CoefficientSet out;
    if (spec.is_planar()) {
        const auto& p = spec.planar();
        const int k = qubits_for(p.pair_count());
        out.c_da = solve_coefficients(k, pad_to_power(p.delta_a, k));
        out.c_db = solve_coefficients(k, pad_to_power(p.delta_b, k));
    } else {
        const auto& d = spec.direct();
        const int k = qubits_for(d.directions.size());
        std::vector<Rational> xs, ys, zs;
        for (const auto& v : d.directions) {
            xs.push_back(v.x);
            ys.push_back(v.y);
            zs.push_back(v.z);
        }
        out.c_da = solve_coefficients(k, pad_to_power(xs, k));
        out.c_db = solve_coefficients(k, pad_to_power(ys, k));
        out.c_dc = solve_coefficients(k, pad_to_power(zs, k));
    }
    return out;
}

QubitBudget qubit_budget(const LatticeSpec& spec, int bead_count) {
    if (bead_count < 2) {
        throw InvalidArgumentError("bead count must be at least 2, got " + std::to_string(bead_count));
    }
    require_valid(spec);
    if (spec.is_planar()) {
        return QubitBudget{qubits_for(spec.planar().pair_count()) + 2};
    }
    return QubitBudget{qubits_for(spec.direct().directions.size())};
}

nlohmann::ordered_json layout_to_json(const BitfieldLayout& layout) {
    nlohmann::ordered_json doc;
    doc["direction_bits"] = layout.direction_bits;
    doc["plane_bits"] = layout.plane_bits;
    doc["bit_order"] = "direction_then_plane";
    doc["invalid_direction_states"] = layout.invalid_direction_states;
    doc["invalid_plane_states"] = layout.invalid_plane_states;
    return doc;
}

namespace {

nlohmann::ordered_json rationals_to_json(const std::vector<Rational>& values) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

std::string rationals_to_text(const std::vector<Rational>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].str();
    }
    return out + "]";
}

}  // namespace

nlohmann::ordered_json encoding_to_json(const TurnEncoding& enc, const CoefficientSet& coeffs) {
    nlohmann::ordered_json doc;
    doc["lattice"] = enc.lattice_name();
    doc["kind"] = enc.planar() ? "planar" : "direct";
    doc["layout"] = layout_to_json(enc.layout());
    doc["per_turn_qubits"] = enc.variable_count();
    doc["valid_state_count"] = enc.valid_state_count();
    doc["c_da"] = rationals_to_json(coeffs.c_da);
    doc["c_db"] = rationals_to_json(coeffs.c_db);
    if (coeffs.c_dc) doc["c_dc"] = rationals_to_json(*coeffs.c_dc);
    if (enc.da()) doc["da"] = enc.da()->str();
    if (enc.db()) doc["db"] = enc.db()->str();
    doc["dx"] = enc.dx().str();
    doc["dy"] = enc.dy().str();
    doc["dz"] = enc.dz().str();
    return doc;
}

std::string encoding_to_text(const TurnEncoding& enc, const CoefficientSet& coeffs) {
    std::string out;
    out += "lattice: " + enc.lattice_name() + "\n";
    out += std::string("kind: ") + (enc.planar() ? "planar" : "direct") + "\n";
    out += "per_turn_qubits: " + std::to_string(enc.variable_count()) +
           " (direction " + std::to_string(enc.direction_qubits()) +
           ", plane " + std::to_string(enc.plane_qubits()) + ")\n";
    out += "valid_states: " + std::to_string(enc.valid_state_count()) + " of " +
           std::to_string(std::uint64_t(1) << enc.variable_count()) + "\n";
    out += "c_da = " + rationals_to_text(coeffs.c_da) + "\n";
    out += "c_db = " + rationals_to_text(coeffs.c_db) + "\n";
    if (coeffs.c_dc) out += "c_dc = " + rationals_to_text(*coeffs.c_dc) + "\n";
    if (enc.da()) out += "da = " + enc.da()->str() + "\n";
    if (enc.db()) out += "db = " + enc.db()->str() + "\n";
    out += "dx = " + enc.dx().str() + "\n";
    out += "dy = " + enc.dy().str() + "\n";
    out += "dz = " + enc.dz().str() + "\n";
    out += "layout: direction_bits=" + std::to_string(enc.layout().direction_bits) +
           " plane_bits=" + std::to_string(enc.layout().plane_bits) + " order=direction_then_plane\n";
    return out;
}

}  // namespace latticeq
