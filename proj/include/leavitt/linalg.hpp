#pragma once

// Exact linear algebra over the built-in rings. Fields (Q, Z/p) use
// Gauss-Jordan elimination; Z and composite Z/n use a column Hermite
// reduction, so every answer is exact. Product rings split componentwise.

#include <cstddef>
#include <optional>
#include <vector>

#include "leavitt/rings.hpp"

namespace leavitt::linalg {

using Vector = std::vector<RingValue>;
using Matrix = std::vector<Vector>;  // row-major

Vector zero_vector(const RingDescriptor& ring, std::size_t n);
Vector add(const Vector& a, const Vector& b);
Vector scale(const RingValue& c, const Vector& v);
bool is_zero(const Vector& v);

/// Some x (length `cols`) with a * x = b, or nullopt when none exists.
std::optional<Vector> solve(const RingDescriptor& ring, const Matrix& a, const Vector& b, std::size_t cols);

/// Coefficients expressing `target` in the span of `generators`.
std::optional<Vector> express(const RingDescriptor& ring, const std::vector<Vector>& generators, const Vector& target);

bool in_span(const RingDescriptor& ring, const std::vector<Vector>& generators, const Vector& target);

/// Every target lies in span(generators).
bool span_contains(const RingDescriptor& ring, const std::vector<Vector>& generators, const std::vector<Vector>& targets);

bool span_equal(const RingDescriptor& ring, const std::vector<Vector>& a, const std::vector<Vector>& b);

/// Rank of a list of rational vectors.
std::size_t rank(std::vector<std::vector<Rational>> rows);

}  // namespace leavitt::linalg
