#include "stargram/classify.hpp"

#include "stargram/enumerate.hpp"
#include "stargram/path_math.hpp"

namespace stargram {

bool is_star_path(const StepVector& steps) {
    return (steps.array().abs() != 1).all();
}

std::optional<int> is_perfect_path(const StepVector& steps) {
    if (steps.size() == 0) return std::nullopt;
    const int s = steps[0];
    if (std::abs(s) <= 1) return std::nullopt;
    if ((steps.array() == s).all()) return s;
    return std::nullopt;
}

int rotational_order(const EdgeMatrix& edges) {
    const int n = static_cast<int>(edges.cols());
    for (int k = 1; k < n; ++k)
        if (shift_columns(edges, k) == edges) return n / k;
    return 1;
}

int reflective_order(const EdgeMatrix& edges) {
    const int n = static_cast<int>(edges.cols());
    int axes = 0;
    for (int c = 0; c < n; ++c) {
        bool holds = true;
        for (int m = 0; m < n && holds; ++m) {
            const int mirror = ((c - m) % n + n) % n;
            if (mirror == m)
                holds = edges(0, m) == -edges(1, m);
            else
                holds = edges(0, m) == -edges(1, mirror) && edges(1, m) == -edges(0, mirror);
        }
        if (holds) ++axes;
    }
    return axes;
}

Classification classify_path(const Path& path) {
    if (path.size() < 5) throw WordTooShortError("star classification requires N >= 5");
    const int n = static_cast<int>(path.size());

    Classification result;
    result.path = path;
    const StepVector steps = path_steps(path);

    if (!is_star_path(steps)) return result;  // non-star, orders undetermined

    if (auto step = is_perfect_path(steps)) {
        result.star_class = StarClass::Perfect;
        result.o_rot = n;
        result.o_ref = n;
        result.perfect_step = *step;
        return result;
    }

    const EdgeMatrix edges = edge_matrix(path);
    result.o_rot = rotational_order(edges);
    result.o_ref = reflective_order(edges);
    result.star_class = (*result.o_rot + *result.o_ref > 1) ? StarClass::Symmetric
                                                            : StarClass::Asymmetric;
    return result;
}

Classification classify_anagram(const AnagramPair& pair, std::optional<std::uint64_t> cap) {
    if (pair.size() < 5) throw WordTooShortError("star classification requires N >= 5");

    std::optional<Classification> best;
    for_each_path(
        pair,
        [&](const Path& path) {
            Classification current = classify_path(path);
            if (!best || current.star_class > best->star_class ||
                (current.star_class == best->star_class &&
                 current.symmetry_sum() >= best->symmetry_sum()))
                best = std::move(current);
        },
        cap);
    return *best;  // every pair has at least one path
}

}  // namespace stargram
