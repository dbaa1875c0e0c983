#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace stargram {

/// Traversal of a letter circle: entry k is the node visited at position k.
/// A valid path is a permutation of {0, ..., N-1}.
using Path = Eigen::VectorXi;

/// Raw circular differences d_n = p_{n+1} - p_n (with wrap term p_0 - p_{N-1}).
using DiffVector = Eigen::VectorXi;

/// Normalized signed steps, each in (-N/2, N/2] with the diameter fixed
/// positive. Step magnitudes are the chord lengths of the polygon.
using StepVector = Eigen::VectorXi;

/// 2xN matrix; column n holds the two sorted signed steps incident to node n.
/// Diameter steps (magnitude N/2, even N only) are coded as 0.
using EdgeMatrix = Eigen::Matrix2Xi;

/// Anagram classes in increasing order of symmetry.
enum class StarClass { NonStar, Asymmetric, Symmetric, Perfect };

const char* to_string(StarClass c);
std::optional<StarClass> star_class_from_string(const std::string& s);

/// Result of classifying a path or an anagram. Symmetry orders are absent
/// for non-stars; they convert to -1 only at the CLI/report boundary.
struct Classification {
    StarClass star_class = StarClass::NonStar;
    std::optional<int> o_rot;
    std::optional<int> o_ref;
    Path path;
    std::optional<int> perfect_step;  // signed constant step S, |S| = edge length

    bool is_star() const { return star_class != StarClass::NonStar; }

    // Tie-break sum used by the anagram classification procedure;
    // undetermined orders count as -1 each.
    int symmetry_sum() const {
        return o_rot.value_or(-1) + o_ref.value_or(-1);
    }
};

struct InvalidPathError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAnAnagramError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WordTooShortError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAStarError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidEdgeLengthError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoInverseError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PathCountOverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Raised when an enumeration would exceed the configured path cap.
struct PathCountCapError : std::runtime_error {
    PathCountCapError(std::uint64_t count, std::uint64_t cap);
    std::uint64_t count;  // saturated at UINT64_MAX when the product overflows
    std::uint64_t cap;
};

/// Ordered pair of words over A-Z with identical letter multisets.
/// (first, second) and (second, first) are distinct anagrams; self-pairs
/// are allowed and drive the autostar search.
struct AnagramPair {
    AnagramPair(std::string first_word, std::string second_word);

    std::string first;
    std::string second;

    int size() const { return static_cast<int>(first.size()); }
};

}  // namespace stargram
