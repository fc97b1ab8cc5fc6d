#pragma once

#include "hq/qpoly.hpp"
#include "hq/quat.hpp"

#include <optional>
#include <utility>

namespace hq {

// Two-dimensional real subspace of H spanned by b1, b2.
struct PlaneH {
    Quat b1, b2;

    Quat at(const Rat& u, const Rat& v) const { return u * b1 + v * b2; }
    bool contains(const Quat& q) const;
    // (u, v) with q = u b1 + v b2, or nullopt if q is not in the plane.
    std::optional<std::pair<Rat, Rat>> coordinates(const Quat& q) const;

    friend bool operator==(const PlaneH&, const PlaneH&) = default;
};

// Scales q to a primitive integer vector whose first nonzero coordinate is positive.
Quat primitive_direction(const Quat& q);

// Rank of a list of quaternions as vectors in R^4.
std::size_t real_rank(const std::vector<Quat>& vs);

// Solution plane of a p = p b for equivalent non-real a, b.
// Throws NotEquivalent if a and b are not equivalent and RealInput if a is real.
PlaneH plane(const Quat& a, const Quat& b);

enum class SylvesterKind { Unique, Affine, None, AllOfH };

// Solutions of a q - q b = delta: particular + plane (Affine), particular
// alone (Unique), every quaternion (AllOfH, only for a = b real and delta = 0),
// or nothing (None).
struct SylvesterSolution {
    SylvesterKind kind = SylvesterKind::None;
    Quat particular;
    std::optional<PlaneH> plane;
    // For the equivalent case: the two sides of the solvability identity
    // conj(a) delta = delta b, kept for reporting.
    Quat lhs, rhs;
};

SylvesterSolution solve_sylvester(const Quat& a, const Quat& b, const Quat& delta);

// a q - q b
inline Quat sylvester_apply(const Quat& a, const Quat& b, const Quat& q) { return a * q - q * b; }

// (L_a f)^er(b) from the values of f at a and b alone, for a, b not
// equivalent. Throws EquivalentNodes otherwise.
Quat backshift_value(const QPoly& f, const Quat& a, const Quat& b);

const char* to_string(SylvesterKind kind);

}  // namespace hq
