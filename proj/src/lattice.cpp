// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "latticeq/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "latticeq/errors.hpp"

namespace latticeq {

namespace {

void require_positive_bond(const Rational& d) {
    if (d.sign() <= 0) {
        throw InvalidSpecError("bond scale d must be positive, got " + d.str());
    }
}

}  // namespace

PlanarLatticeSpec builtin_fcc(const Rational& d) {
    require_positive_bond(d);
    const Rational h = d / Rational(2);
    return PlanarLatticeSpec{
        "fcc",
        d,
        {h, -h, -h, h},
        {h, h, -h, -h},
    };
}

PlanarLatticeSpec builtin_cubic_diag(const Rational& d) {
    require_positive_bond(d);
    const Rational z(0);
    return PlanarLatticeSpec{
        "cubic-diag",
        d,
        {d, d, z, -d, -d, -d, z, d},
        {z, d, d, d, z, -d, -d, -d},
    };
}

std::vector<std::string> validate(const LatticeSpec& spec) {
    std::vector<std::string> violations;
    if (spec.is_planar()) {
        const auto& p = spec.planar();
        if (p.bond_scale.sign() <= 0) {
            violations.push_back("bond scale d must be positive, got " + p.bond_scale.str());
        }
        if (p.delta_a.size() != p.delta_b.size()) {
            violations.push_back("delta_a has " + std::to_string(p.delta_a.size()) +
                                 " entries but delta_b has " + std::to_string(p.delta_b.size()));
        } else {
            if (p.pair_count() < 2) {
                violations.push_back("planar spec needs at least 2 displacement pairs, got " +
                                     std::to_string(p.pair_count()));
            }
            std::set<std::pair<std::string, std::string>> seen;
            for (std::size_t k = 0; k < p.pair_count(); ++k) {
                if (p.delta_a[k].is_zero() && p.delta_b[k].is_zero()) {
                    violations.push_back("pair " + std::to_string(k) + " is the zero displacement (0, 0)");
                }
                if (!seen.emplace(p.delta_a[k].str(), p.delta_b[k].str()).second) {
                    violations.push_back("duplicate displacement pair (" + p.delta_a[k].str() + ", " +
                                         p.delta_b[k].str() + ") at index " + std::to_string(k));
                }
            }
        }
    } else {
        const auto& d = spec.direct();
        if (d.directions.size() < 2) {
            violations.push_back("direct spec needs at least 2 directions, got " +
                                 std::to_string(d.directions.size()));
        }
        std::set<Coordinate3> seen;
        for (std::size_t k = 0; k < d.directions.size(); ++k) {
            const auto& v = d.directions[k];
            if (v.is_zero()) {
                violations.push_back("direction " + std::to_string(k) + " is the zero vector");
            }
            if (!seen.insert(v).second) {
                violations.push_back("duplicate direction " + v.str() + " at index " + std::to_string(k));
            }
        }
    }
    return violations;
}

void require_valid(const LatticeSpec& spec) {
    auto violations = validate(spec);
    if (violations.empty()) return;
    std::string message = "invalid lattice spec \"" + spec.name() + "\":";
    for (const auto& v : violations) message += "\n  - " + v;
    throw InvalidSpecError(message, std::move(violations));
}

Coordinate3 planar_displacement(const PlanarLatticeSpec& spec, Plane plane, std::size_t k) {
    const Rational zero(0);
    const Rational& a = spec.delta_a.at(k);
    const Rational& b = spec.delta_b.at(k);
    switch (plane) {
        case Plane::yz: return {zero, a, b};
        case Plane::zx: return {b, zero, a};
        case Plane::xy: return {a, b, zero};
    }
    throw Error("unreachable plane");
}

std::vector<Coordinate3> displacement_set(const LatticeSpec& spec) {
    std::set<Coordinate3> out;
    if (spec.is_planar()) {
        const auto& p = spec.planar();
        for (Plane plane : kAllPlanes) {
            for (std::size_t k = 0; k < p.pair_count(); ++k) {
                out.insert(planar_displacement(p, plane, k));
            }
        }
    } else {
        out.insert(spec.direct().directions.begin(), spec.direct().directions.end());
    }
    return {out.begin(), out.end()};
}

int degrees_of_freedom(const LatticeSpec& spec) {
    require_valid(spec);
    if (!spec.is_planar()) return static_cast<int>(spec.direct().directions.size());
    return static_cast<int>(displacement_set(spec).size());
}

namespace {

Rational rational_field(const nlohmann::json& v, const std::string& context) {
    if (!v.is_string()) throw SpecParseError(context + " must be a rational string like \"1/2\"");
    return Rational::from_string(v.get<std::string>());
}

void reject_unknown_keys(const nlohmann::json& doc, const std::set<std::string>& allowed) {
    for (const auto& item : doc.items()) {
        if (!allowed.contains(item.key())) {
            throw SpecParseError("unknown key \"" + item.key() + "\" in lattice spec");
        }
    }
}

const nlohmann::json& required_key(const nlohmann::json& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw SpecParseError("lattice spec is missing required key \"" + key + "\"");
    return *it;
}

}  // namespace

LatticeSpec lattice_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw SpecParseError("lattice spec must be a JSON object");
    const auto& name_v = required_key(doc, "name");
    if (!name_v.is_string()) throw SpecParseError("\"name\" must be a string");
    const auto& kind_v = required_key(doc, "kind");
    if (!kind_v.is_string()) throw SpecParseError("\"kind\" must be \"planar\" or \"direct\"");
    const std::string kind = kind_v.get<std::string>();

    if (kind == "planar") {
        reject_unknown_keys(doc, {"name", "kind", "d", "delta_a", "delta_b"});
        PlanarLatticeSpec spec;
        spec.name = name_v.get<std::string>();
        spec.bond_scale = rational_field(required_key(doc, "d"), "\"d\"");
        for (const char* key : {"delta_a", "delta_b"}) {
            const auto& arr = required_key(doc, key);
            if (!arr.is_array()) throw SpecParseError(std::string("\"") + key + "\" must be an array");
            auto& target = std::string(key) == "delta_a" ? spec.delta_a : spec.delta_b;
            for (const auto& v : arr) target.push_back(rational_field(v, std::string("\"") + key + "\" entry"));
        }
        return spec;
    }
    if (kind == "direct") {
        reject_unknown_keys(doc, {"name", "kind", "directions"});
        DirectLatticeSpec spec;
        spec.name = name_v.get<std::string>();
        const auto& arr = required_key(doc, "directions");
        if (!arr.is_array()) throw SpecParseError("\"directions\" must be an array of triples");
        for (const auto& v : arr) {
            if (!v.is_array() || v.size() != 3) {
                throw SpecParseError("each direction must be a 3-element array of rational strings");
            }
            spec.directions.push_back({rational_field(v[0], "direction x"),
                                       rational_field(v[1], "direction y"),
                                       rational_field(v[2], "direction z")});
        }
        return spec;
    }
    throw SpecParseError("unknown lattice kind \"" + kind + "\" (expected \"planar\" or \"direct\")");
}

nlohmann::ordered_json lattice_to_json(const LatticeSpec& spec) {
    nlohmann::ordered_json doc;
    doc["name"] = spec.name();
    if (spec.is_planar()) {
        const auto& p = spec.planar();
        doc["kind"] = "planar";
        doc["d"] = p.bond_scale.str();
        auto da = nlohmann::ordered_json::array();
        auto db = nlohmann::ordered_json::array();
        for (const auto& v : p.delta_a) da.push_back(v.str());
        for (const auto& v : p.delta_b) db.push_back(v.str());
        doc["delta_a"] = std::move(da);
        doc["delta_b"] = std::move(db);
    } else {
        doc["kind"] = "direct";
        auto dirs = nlohmann::ordered_json::array();
        for (const auto& v : spec.direct().directions) {
            dirs.push_back({v.x.str(), v.y.str(), v.z.str()});
        }
        doc["directions"] = std::move(dirs);
    }
    return doc;
}

LatticeSpec load_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open lattice spec file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecParseError("lattice spec file " + path + " is not valid JSON: " + e.what());
    }
    return lattice_from_json(doc);
}

}  // namespace latticeq
