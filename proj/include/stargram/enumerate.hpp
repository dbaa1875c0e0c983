#pragma once

// Path enumeration for anagram pairs with repeated letters, exact path
// counting, path reversal, and the autostar self-pair search.

#include "stargram/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace stargram {

/// All paths realizing a pair, in deterministic order (lexicographically
/// increasing path vectors: candidate nodes for each repeated letter are
/// tried in increasing index order while scanning the second word left to
/// right).
struct PathSet {
    std::vector<Path> paths;
    std::uint64_t count = 0;
};

/// Product of w_r! over repeated letters, computed exactly.
/// Throws PathCountOverflowError past 64 bits.
std::uint64_t count_paths(const AnagramPair& pair);

/// Same product but saturating at UINT64_MAX instead of throwing; the cap
/// checks use this so oversized words are skipped, not fatal.
std::uint64_t count_paths_saturating(const AnagramPair& pair);

/// Throws PathCountCapError before allocating anything when the path count
/// exceeds the cap.
PathSet enumerate_paths(const AnagramPair& pair,
                        std::optional<std::uint64_t> cap = std::nullopt);

/// Streaming variant: invokes visit for each path in enumeration order.
void for_each_path(const AnagramPair& pair, const std::function<void(const Path&)>& visit,
                   std::optional<std::uint64_t> cap = std::nullopt);

/// Inverse permutation: reverse[p[k]] = k. An involution.
Path reverse_path(const Path& path);

/// Paths of the self-pair (word, word). Words without repeated letters yield
/// only the identity path.
PathSet autostar_paths(const std::string& word, std::uint64_t cap);

}  // namespace stargram
