#include "stargram/enumerate.hpp"

#include "stargram/path_math.hpp"

#include <array>
#include <algorithm>

namespace stargram {

namespace {

std::array<int, 26> letter_counts(const std::string& word) {
    std::array<int, 26> counts{};
    for (char c : word) counts[static_cast<std::size_t>(c - 'A')]++;
    return counts;
}

std::uint64_t multiset_path_count(const std::string& word, bool saturate) {
    std::uint64_t product = 1;
    for (int count : letter_counts(word)) {
        for (int f = 2; f <= count; ++f) {
            std::uint64_t next = 0;
            if (__builtin_mul_overflow(product, static_cast<std::uint64_t>(f), &next)) {
                if (saturate) return UINT64_MAX;
                throw PathCountOverflowError("path count exceeds 64 bits for " + word);
            }
            product = next;
        }
    }
    return product;
}

}  // namespace

std::uint64_t count_paths(const AnagramPair& pair) {
    return multiset_path_count(pair.first, /*saturate=*/false);
}

std::uint64_t count_paths_saturating(const AnagramPair& pair) {
    return multiset_path_count(pair.first, /*saturate=*/true);
}

void for_each_path(const AnagramPair& pair, const std::function<void(const Path&)>& visit,
                   std::optional<std::uint64_t> cap) {
    if (cap) {
        const std::uint64_t count = count_paths_saturating(pair);
        if (count > *cap) throw PathCountCapError(count, *cap);
    }
    const int n = pair.size();

    // Node indices of each letter in the first word, in increasing order.
    std::array<std::vector<int>, 26> positions;
    for (int k = 0; k < n; ++k)
        positions[static_cast<std::size_t>(pair.first[static_cast<std::size_t>(k)] - 'A')]
            .push_back(k);

    Path path(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto descend = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            visit(path);
            return;
        }
        const auto letter =
            static_cast<std::size_t>(pair.second[static_cast<std::size_t>(depth)] - 'A');
        for (int node : positions[letter]) {
            if (used[static_cast<std::size_t>(node)]) continue;
            used[static_cast<std::size_t>(node)] = true;
            path[depth] = node;
            self(self, depth + 1);
            used[static_cast<std::size_t>(node)] = false;
        }
    };
    descend(descend, 0);
}

PathSet enumerate_paths(const AnagramPair& pair, std::optional<std::uint64_t> cap) {
    PathSet set;
    for_each_path(pair, [&](const Path& p) { set.paths.push_back(p); }, cap);
    set.count = set.paths.size();
    return set;
}

Path reverse_path(const Path& path) {
    if (!is_permutation_path(path))
        throw InvalidPathError("cannot reverse: not a permutation path");
    Path reversed(path.size());
    for (Eigen::Index k = 0; k < path.size(); ++k) reversed[path[k]] = static_cast<int>(k);
    return reversed;
}

PathSet autostar_paths(const std::string& word, std::uint64_t cap) {
    if (word.size() < 5) throw WordTooShortError("autostar search requires N >= 5");
    return enumerate_paths(AnagramPair(word, word), cap);
}

}  // namespace stargram
