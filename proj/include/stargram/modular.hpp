#pragma once

// Coprimality, valid perfect-star edge lengths, the constant-step path
// constructor, and modular inverses in the step range.

#include "stargram/types.hpp"

#include <set>

namespace stargram {

bool is_coprime(long long a, long long b);

/// Edge lengths L with 2 <= L < N/2 and gcd(L, N) = 1; exactly the lengths
/// for which a constant-step path of length N visits every node once.
std::set<int> valid_perfect_edge_lengths(int n);

/// Constant-step path p_0 = start, p_{k+1} = (p_k + s) mod N.
/// Throws InvalidEdgeLengthError when |s| is out of [2, N/2) or the walk
/// revisits a node (which happens exactly when gcd(|s|, N) > 1).
Path perfect_path(int n, int step, int start);

/// The unique inverse in the step range (-N/2, N/2] with inv * s = 1 (mod N),
/// computed by extended Euclid. Equals the constant step of the reversed
/// perfect path.
int modular_inverse(int step, int n);

}  // namespace stargram
