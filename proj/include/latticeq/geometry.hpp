// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "latticeq/rational.hpp"

namespace latticeq {

/// A point or displacement on the lattice: exact rational components,
/// comparable for equality with zero tolerance.
struct Coordinate3 {
    Rational x, y, z;

    friend bool operator==(const Coordinate3& a, const Coordinate3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Coordinate3& a, const Coordinate3& b) { return !(a == b); }

    /// Total order for canonical sorting and map keys.
    friend bool operator<(const Coordinate3& a, const Coordinate3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    friend Coordinate3 operator+(const Coordinate3& a, const Coordinate3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Coordinate3 operator-(const Coordinate3& a, const Coordinate3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    Rational squared_norm() const { return x * x + y * y + z * z; }

    /// "(x, y, z)" with canonical rational components.
    std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

inline Coordinate3 origin3() { return {Rational(0), Rational(0), Rational(0)}; }

}  // namespace latticeq
