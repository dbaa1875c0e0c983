#pragma once

// Pure integer arithmetic on paths around a letter circle: differences,
// normalized steps, step application, and the per-node edge matrix with
// canonical rotation keys. Everything here is a total function of its
// arguments and safe to call concurrently.

#include "stargram/types.hpp"

#include <algorithm>
#include <vector>

namespace stargram {

inline bool is_permutation_path(const Path& path) {
    const Eigen::Index n = path.size();
    if (n < 2) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Eigen::Index k = 0; k < n; ++k) {
        const int v = path[k];
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

/// d_n = p_{n+1} - p_n with the wrap term d_{N-1} = p_0 - p_{N-1}.
inline DiffVector path_differences(const Path& path) {
    if (!is_permutation_path(path))
        throw InvalidPathError("path is not a permutation of 0..N-1");
    const Eigen::Index n = path.size();
    DiffVector diffs(n);
    for (Eigen::Index k = 0; k < n; ++k)
        diffs[k] = path[(k + 1) % n] - path[k];
    return diffs;
}

/// Maps raw differences to unambiguous steps in (-N/2, N/2]:
/// keep |d| < N/2, send |d| = N/2 to +N/2, and otherwise wrap by +-N.
inline StepVector steps_from_diffs(const DiffVector& diffs, int n) {
    StepVector steps(diffs.size());
    for (Eigen::Index k = 0; k < diffs.size(); ++k) {
        const int d = diffs[k];
        if (d == 0) throw InvalidPathError("zero difference: path revisits a node");
        if (d <= -n || d >= n)
            throw InvalidPathError("difference out of range for word length");
        const int mag2 = 2 * std::abs(d);  // doubled to stay in integers
        if (mag2 < n)
            steps[k] = d;
        else if (mag2 == n)
            steps[k] = n / 2;  // diameter fixed positive
        else
            steps[k] = d > 0 ? d - n : d + n;
    }
    return steps;
}

inline StepVector path_steps(const Path& path) {
    return steps_from_diffs(path_differences(path), static_cast<int>(path.size()));
}

/// Walks p_0 = start, p_{k+1} = (p_k + s_k) mod N. The output need not be a
/// permutation; callers that require one validate (the perfect-star
/// constructor relies on revisits to flag invalid edge lengths).
inline Path apply_steps(int start, const StepVector& steps) {
    const int n = static_cast<int>(steps.size());
    Path path(n);
    int node = start;
    for (int k = 0; k < n; ++k) {
        path[k] = node;
        node = ((node + steps[k]) % n + n) % n;
    }
    return path;
}

/// Column n holds the two steps incident to node n: the departing step s_k
/// (where p_k = n) and the negated arriving step -s_{k-1}, sorted ascending.
/// Diameter steps are coded as 0 so negation stays unambiguous.
inline EdgeMatrix edge_matrix(const Path& path) {
    if (!is_permutation_path(path) || path.size() < 3)
        throw InvalidPathError("edge matrix requires a permutation path with N >= 3");
    const int n = static_cast<int>(path.size());
    const StepVector steps = path_steps(path);
    auto code = [n](int s) { return 2 * std::abs(s) == n ? 0 : s; };
    EdgeMatrix edges(2, n);
    for (int k = 0; k < n; ++k) {
        const int node = path[k];
        const int out = code(steps[k]);
        const int back = code(-steps[(k + n - 1) % n]);
        edges(0, node) = std::min(out, back);
        edges(1, node) = std::max(out, back);
    }
    return edges;
}

/// Columns rotated left by k: result.col(j) = E.col((j + k) mod N).
inline EdgeMatrix shift_columns(const EdgeMatrix& edges, int k) {
    const int n = static_cast<int>(edges.cols());
    EdgeMatrix shifted(2, n);
    for (int j = 0; j < n; ++j) shifted.col(j) = edges.col((j + k) % n);
    return shifted;
}

/// Lexicographic order on columns left to right, first row before second.
/// Matches Eigen's column-major layout, so raw data compare suffices.
inline bool edge_matrix_less(const EdgeMatrix& a, const EdgeMatrix& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
}

/// Least matrix among all N circular column shifts. Two paths get equal keys
/// exactly when their shapes coincide up to a rotation in the plane.
inline EdgeMatrix canonical_shape_key(const EdgeMatrix& edges) {
    const int n = static_cast<int>(edges.cols());
    EdgeMatrix best = edges;
    for (int k = 1; k < n; ++k) {
        EdgeMatrix candidate = shift_columns(edges, k);
        if (edge_matrix_less(candidate, best)) best = candidate;
    }
    return best;
}

}  // namespace stargram
