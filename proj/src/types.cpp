#include "stargram/types.hpp"

#include <algorithm>

namespace stargram {

const char* to_string(StarClass c) {
    switch (c) {
        case StarClass::NonStar: return "non-star";
        case StarClass::Asymmetric: return "asymmetric";
        case StarClass::Symmetric: return "symmetric";
        case StarClass::Perfect: return "perfect";
    }
    return "?";
}

std::optional<StarClass> star_class_from_string(const std::string& s) {
    if (s == "non-star") return StarClass::NonStar;
    if (s == "asymmetric") return StarClass::Asymmetric;
    if (s == "symmetric") return StarClass::Symmetric;
    if (s == "perfect") return StarClass::Perfect;
    return std::nullopt;
}

PathCountCapError::PathCountCapError(std::uint64_t count_, std::uint64_t cap_)
    : std::runtime_error("path count " + std::to_string(count_) + " exceeds cap " +
                         std::to_string(cap_)),
      count(count_),
      cap(cap_) {}

AnagramPair::AnagramPair(std::string first_word, std::string second_word)
    : first(std::move(first_word)), second(std::move(second_word)) {
    if (first.size() != second.size())
        throw NotAnAnagramError("words differ in length: " + first + " / " + second);
    auto upper_only = [](const std::string& w) {
        return std::all_of(w.begin(), w.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
    };
    if (first.empty() || !upper_only(first) || !upper_only(second))
        throw NotAnAnagramError("words must be nonempty and uppercase A-Z");
    std::string a = first, b = second;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw NotAnAnagramError("letter multisets differ: " + first + " / " + second);
}

}  // namespace stargram
