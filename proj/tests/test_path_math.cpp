#include "stargram/path_math.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace stargram;
using testutil::make_edges;
using testutil::make_path;
using testutil::make_vec;

TEST_CASE("path differences of known paths") {
    CHECK(path_differences(make_path({4, 1, 3, 0, 2})) == make_vec({-3, 2, -3, 2, 2}));
    CHECK(path_differences(make_path({3, 1, 7, 5, 2, 4, 0, 6})) ==
          make_vec({-2, 6, -2, -3, 2, -4, 6, -3}));
    CHECK(path_differences(make_path({0, 1})) == make_vec({1, -1}));
}

TEST_CASE("path differences rejects non-permutations") {
    CHECK_THROWS_AS(path_differences(make_path({0, 0, 1})), InvalidPathError);
    CHECK_THROWS_AS(path_differences(make_path({1, 2, 3})), InvalidPathError);
    CHECK_THROWS_AS(path_differences(make_path({0, 2})), InvalidPathError);
    CHECK_THROWS_AS(path_differences(Path(1)), InvalidPathError);
}

TEST_CASE("steps from diffs applies the four-case wrap") {
    CHECK(steps_from_diffs(make_vec({-3, 2, -3, 2, 2}), 5) == make_vec({2, 2, 2, 2, 2}));
    CHECK(steps_from_diffs(make_vec({-1, -3, 2, -4, 1, -2, 4, 3}), 8) ==
          make_vec({-1, -3, 2, 4, 1, -2, 4, 3}));
    // both diameters map to the positive half turn
    CHECK(steps_from_diffs(make_vec({4, -4}), 8) == make_vec({4, 4}));
    CHECK_THROWS_AS(steps_from_diffs(make_vec({0, 1}), 5), InvalidPathError);
    CHECK_THROWS_AS(steps_from_diffs(make_vec({5, 1}), 5), InvalidPathError);
}

TEST_CASE("steps of the eight-letter table") {
    CHECK(path_steps(make_path({3, 1, 7, 5, 2, 4, 0, 6})) ==
          make_vec({-2, -2, -2, -3, 2, 4, -2, -3}));
    CHECK(path_steps(make_path({7, 6, 3, 5, 1, 2, 0, 4})) ==
          make_vec({-1, -3, 2, 4, 1, -2, 4, 3}));
}

TEST_CASE("apply steps reconstructs paths") {
    CHECK(apply_steps(4, make_vec({2, 2, 2, 2, 2})) == make_path({4, 1, 3, 0, 2}));
    CHECK(apply_steps(0, make_vec({2, 2, 2, 2, 2})) == make_path({0, 2, 4, 1, 3}));
    const Path ringtone = make_path({3, 1, 7, 5, 2, 4, 0, 6});
    CHECK(apply_steps(3, path_steps(ringtone)) == ringtone);
}

TEST_CASE("edge matrix of the displayed eight-letter example") {
    const Path deanship = make_path({7, 6, 3, 5, 1, 2, 0, 4});
    const EdgeMatrix expected = make_edges(
        {{0, 2}, {0, 1}, {-2, -1}, {2, 3}, {0, 3}, {-2, 0}, {-3, 1}, {-3, -1}});
    CHECK(edge_matrix(deanship) == expected);

    SUBCASE("traversing the path backwards leaves the matrix unchanged") {
        CHECK(edge_matrix(deanship.reverse().eval()) == expected);
    }
    SUBCASE("the inverse permutation is a different shape entirely") {
        // Inverting the permutation swaps the roles of the two words and
        // generally changes the polygon; only traversal direction is free.
        Path inverse(deanship.size());
        for (Eigen::Index k = 0; k < deanship.size(); ++k)
            inverse[deanship[k]] = static_cast<int>(k);
        CHECK(edge_matrix(inverse) != expected);
    }
}

TEST_CASE("edge matrix of a pentagram is constant") {
    const EdgeMatrix edges = edge_matrix(make_path({0, 2, 4, 1, 3}));
    for (Eigen::Index c = 0; c < edges.cols(); ++c) {
        CHECK(edges(0, c) == -2);
        CHECK(edges(1, c) == 2);
    }
}

TEST_CASE("edge matrix requires N >= 3") {
    CHECK_THROWS_AS(edge_matrix(make_path({0, 1})), InvalidPathError);
}

TEST_CASE("canonical shape key") {
    const Path deanship = make_path({7, 6, 3, 5, 1, 2, 0, 4});
    const EdgeMatrix edges = edge_matrix(deanship);
    const EdgeMatrix key = canonical_shape_key(edges);

    SUBCASE("shift-invariant input maps to itself") {
        const EdgeMatrix constant = edge_matrix(make_path({0, 2, 4, 1, 3}));
        CHECK(canonical_shape_key(constant) == constant);
    }
    SUBCASE("every column shift shares the key") {
        for (int k = 0; k < 8; ++k) CHECK(canonical_shape_key(shift_columns(edges, k)) == key);
    }
    SUBCASE("relabeling nodes is a plane rotation") {
        for (int c = 1; c < 8; ++c) {
            Path relabeled(8);
            for (Eigen::Index k = 0; k < 8; ++k) relabeled[k] = (deanship[k] + c) % 8;
            CHECK(canonical_shape_key(edge_matrix(relabeled)) == key);
        }
    }
}

namespace {

void check_path_laws(const Path& p) {
    const int n = static_cast<int>(p.size());
    const StepVector steps = path_steps(p);

    // round trip
    CHECK(apply_steps(p[0], steps) == p);
    // range: -N/2 < s <= N/2, never zero, +N/2 only for even N
    for (Eigen::Index k = 0; k < steps.size(); ++k) {
        CHECK(steps[k] != 0);
        CHECK(2 * steps[k] > -n);
        CHECK(2 * steps[k] <= n);
        if (2 * steps[k] == n) CHECK(n % 2 == 0);
    }
    // the closed walk returns to its start
    CHECK(steps.sum() % n == 0);

    if (n >= 3) {
        // direction invariance: the backwards traversal draws the same chords
        CHECK(edge_matrix(p.reverse().eval()) == edge_matrix(p));
        // relabeling by +c shifts the columns by c
        const EdgeMatrix edges = edge_matrix(p);
        for (int c = 1; c < n; ++c) {
            Path relabeled(n);
            for (Eigen::Index k = 0; k < n; ++k) relabeled[k] = (p[k] + c) % n;
            CHECK(edge_matrix(relabeled) == shift_columns(edges, n - c));
        }
    }
}

}  // namespace

TEST_CASE("path laws hold exhaustively for N <= 7") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> values(static_cast<std::size_t>(n));
        std::iota(values.begin(), values.end(), 0);
        do {
            check_path_laws(Eigen::Map<const Path>(values.data(), n));
        } while (std::next_permutation(values.begin(), values.end()));
    }
}

TEST_CASE("path laws hold for random larger paths") {
    std::mt19937 rng(20260808);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 2);
        check_path_laws(testutil::random_permutation(n, rng));
    }
}
