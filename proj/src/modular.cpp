#include "stargram/modular.hpp"

#include "stargram/path_math.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace stargram {

bool is_coprime(long long a, long long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("is_coprime requires positive integers");
    return std::gcd(a, b) == 1;
}

std::set<int> valid_perfect_edge_lengths(int n) {
    if (n < 5) throw std::invalid_argument("perfect stars require N >= 5");
    std::set<int> lengths;
    for (int len = 2; 2 * len < n; ++len)
        if (std::gcd(len, n) == 1) lengths.insert(len);
    return lengths;
}

Path perfect_path(int n, int step, int start) {
    const int len = std::abs(step);
    if (len < 2 || 2 * len >= n)
        throw InvalidEdgeLengthError("edge length " + std::to_string(len) +
                                     " out of [2, N/2) for N = " + std::to_string(n));
    if (start < 0 || start >= n) throw std::out_of_range("start node out of range");
    Path path = apply_steps(start, StepVector::Constant(n, step));
    if (!is_permutation_path(path))
        throw InvalidEdgeLengthError("step " + std::to_string(step) + " revisits a node for N = " +
                                     std::to_string(n) + "; length shares a factor with N");
    return path;
}

namespace {

// gcd(a, b) plus x, y with a*x + b*y = gcd.
long long extended_euclid(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1 = 0, y1 = 0;
    const long long g = extended_euclid(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

int modular_inverse(int step, int n) {
    if (n < 2) throw std::invalid_argument("modulus must be >= 2");
    const long long a = ((static_cast<long long>(step) % n) + n) % n;
    long long x = 0, y = 0;
    if (extended_euclid(a, n, x, y) != 1)
        throw NoInverseError("no inverse: " + std::to_string(step) + " shares a factor with " +
                             std::to_string(n));
    long long inv = ((x % n) + n) % n;  // in [0, N)
    if (2 * inv > n) inv -= n;          // into the step range (-N/2, N/2]
    return static_cast<int>(inv);
}

}  // namespace stargram
