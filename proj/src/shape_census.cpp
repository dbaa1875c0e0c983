#include "stargram/shape_census.hpp"

#include "stargram/classify.hpp"
#include "stargram/path_math.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

namespace stargram {

namespace {

struct KeyLess {
    bool operator()(const EdgeMatrix& a, const EdgeMatrix& b) const {
        return edge_matrix_less(a, b);
    }
};

using ShapeMap = std::map<EdgeMatrix, Path, KeyLess>;

// Depth-first walk over permutations with on-the-fly star pruning: any
// prefix step of magnitude 1 kills the whole subtree.
void collect_star_shapes(int n, int first, int second, ShapeMap& out) {
    std::vector<int> path(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    path[0] = first;
    used[static_cast<std::size_t>(first)] = true;

    auto step_of = [n](int from, int to) {
        int d = to - from;
        const int mag2 = 2 * std::abs(d);
        if (mag2 < n) return d;
        if (mag2 == n) return n / 2;
        return d > 0 ? d - n : d + n;
    };
    auto is_star_step = [&](int from, int to) { return std::abs(step_of(from, to)) != 1; };

    auto descend = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (!is_star_step(path[static_cast<std::size_t>(n - 1)], path[0])) return;
            Path p = Eigen::Map<const Path>(path.data(), n);
            EdgeMatrix key = canonical_shape_key(edge_matrix(p));
            out.emplace(std::move(key), std::move(p));
            return;
        }
        const int lo = depth == 1 && second >= 0 ? second : 0;
        const int hi = depth == 1 && second >= 0 ? second + 1 : n;
        for (int node = lo; node < hi; ++node) {
            if (used[static_cast<std::size_t>(node)]) continue;
            if (!is_star_step(path[static_cast<std::size_t>(depth - 1)], node)) continue;
            used[static_cast<std::size_t>(node)] = true;
            path[static_cast<std::size_t>(depth)] = node;
            self(self, depth + 1);
            used[static_cast<std::size_t>(node)] = false;
        }
    };
    descend(descend, 1);
}

}  // namespace

ShapeCensus enumerate_star_shapes(int n, const ShapeCensusOptions& options) {
    if (n < 5 || n > 12) throw std::out_of_range("shape census supports 5 <= N <= 12");

    const std::vector<int> starts = [&] {
        std::vector<int> s;
        for (int k = 0; k < (options.fix_first_node ? 1 : n); ++k) s.push_back(k);
        return s;
    }();

    ShapeMap shapes;
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        for (int start : starts) collect_star_shapes(n, start, -1, shapes);
    } else {
        // Partition by the second node; merge the per-worker maps at the end.
        std::vector<std::pair<int, int>> units;
        for (int start : starts)
            for (int second = 0; second < n; ++second)
                if (second != start) units.emplace_back(start, second);
        std::vector<ShapeMap> partials(units.size());
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (std::size_t u = cursor.fetch_add(1); u < units.size(); u = cursor.fetch_add(1))
                collect_star_shapes(n, units[u].first, units[u].second, partials[u]);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (auto& partial : partials) shapes.merge(partial);
    }

    ShapeCensus census;
    census.n = n;
    census.shapes.reserve(shapes.size());
    for (const auto& [key, representative] : shapes) {
        StarShape shape;
        shape.key = key;
        shape.representative = representative;
        shape.o_rot = rotational_order(key);
        shape.o_ref = reflective_order(key);
        if (shape.o_rot == n) {
            shape.star_class = StarClass::Perfect;
            census.perfect++;
        } else if (shape.o_rot + shape.o_ref > 1) {
            shape.star_class = StarClass::Symmetric;
            census.symmetric++;
        } else {
            shape.star_class = StarClass::Asymmetric;
            census.asymmetric++;
        }
        census.shapes.push_back(std::move(shape));
    }
    return census;
}

EdgeMatrix shape_of(const Path& path) {
    if (!is_star_path(path_steps(path))) throw NotAStarError("path has a step of magnitude 1");
    return canonical_shape_key(edge_matrix(path));
}

}  // namespace stargram
