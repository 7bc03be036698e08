#pragma once

#include <vector>

#include "shimura/linalg.hpp"

namespace shimura {

/// All integer vectors x with (x + shift)^T G (x + shift) == value, for a
/// symmetric positive definite rational G. Exact arithmetic throughout:
/// G is decomposed as a sum of rational squares (no floating point), the
/// search box is bounded level by level and every candidate is checked
/// exactly, so the result is complete. Output is deterministic.
std::vector<Vec4z> enumerate_quadric(const Mat4q& G, const Vec4q& shift, const Rat& value);

// Convenience: integer vectors x with x^T G x == value.
std::vector<Vec4z> enumerate_norm(const Mat4q& G, const Rat& value);

}  // namespace shimura
