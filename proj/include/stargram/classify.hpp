#pragma once

// Star detection, the perfection test, rotational/reflective symmetry
// orders from the edge matrix, and the per-path / per-anagram
// classification procedures.

#include "stargram/types.hpp"

#include <cstdint>
#include <optional>

namespace stargram {

/// A path is a star path exactly when no step has magnitude 1.
bool is_star_path(const StepVector& steps);

/// Constant step S with |S| > 1, absent otherwise.
std::optional<int> is_perfect_path(const StepVector& steps);

/// N/K for the smallest circular column shift K that recovers the matrix.
/// K always divides N; 1 means no rotational symmetry.
int rotational_order(const EdgeMatrix& edges);

/// Number of reflection axes fixing the shape. Axis c maps node m to
/// (c - m) mod N; nodes on the axis (2m = c mod N) must satisfy
/// e_1m = -e_2m, every other column must equal the negated re-sorted
/// column of its mirror image.
int reflective_order(const EdgeMatrix& edges);

/// Star/perfection short-circuits, then the symmetry tests. N >= 5.
Classification classify_path(const Path& path);

/// Classifies every enumerated path and keeps the greatest class; ties are
/// broken by maximal O_rot + O_ref, then by taking the later path in
/// enumeration order. Propagates PathCountCapError when a cap is given.
Classification classify_anagram(const AnagramPair& pair,
                                std::optional<std::uint64_t> cap = std::nullopt);

}  // namespace stargram
