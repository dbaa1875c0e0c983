#pragma once

// Brute-force enumeration of all unicursal star polygons of a given length,
// deduplicated up to plane rotation and classified by symmetry.

#include "stargram/types.hpp"

#include <cstdint>
#include <vector>

namespace stargram {

struct ShapeCensusOptions {
    // Fixing p_0 = 0 cuts the permutation space by a factor of N; canonical
    // keys absorb the residual multiplicity. Enumerating unfixed is kept as
    // a correctness oracle for small N.
    bool fix_first_node = true;
    unsigned jobs = 1;
};

struct StarShape {
    EdgeMatrix key;        // canonical (least-shift) edge matrix
    Path representative;   // one path realizing the shape
    StarClass star_class;  // asymmetric, symmetric, or perfect
    int o_rot = 1;
    int o_ref = 0;
};

struct ShapeCensus {
    int n = 0;
    std::uint64_t asymmetric = 0;
    std::uint64_t symmetric = 0;
    std::uint64_t perfect = 0;
    std::vector<StarShape> shapes;  // sorted by key

    std::uint64_t total() const { return asymmetric + symmetric + perfect; }
};

/// Enumerates star paths, maps each to its canonical shape key,
/// deduplicates, and classifies every unique shape. 5 <= N <= 12.
ShapeCensus enumerate_star_shapes(int n, const ShapeCensusOptions& options = {});

/// Canonical key of a star path's shape. Throws NotAStarError otherwise.
EdgeMatrix shape_of(const Path& path);

}  // namespace stargram
