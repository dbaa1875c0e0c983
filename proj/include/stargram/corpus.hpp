#pragma once

// Wordlist ingestion, anagram discovery, the full-corpus star census with
// shape clustering, the autostar search, and report serialization.

#include "stargram/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stargram {

struct WordList {
    std::vector<std::string> words;  // normalized, deduplicated, sorted
    std::string source;              // path or label, metadata only
};

/// One word per line, any common line ending. Words are uppercased, accents
/// folded to base letters, and anything still outside A-Z drops the word.
/// Throws on an unreadable stream or when nothing survives normalization.
WordList load_wordlist(std::istream& input, std::string source = "");
WordList load_wordlist_file(const std::string& path);

/// All ordered pairs (w1, w2), w1 != w2, sharing a letter multiset; sorted
/// lexicographically by first word then second.
std::vector<AnagramPair> find_anagrams(const WordList& list);

struct ScanConfig {
    std::uint64_t path_cap = 3'000'000;  // per-word ceiling on enumerated paths
    unsigned jobs = 1;
    bool autostars = true;
};

struct StarRecord {
    std::string first;
    std::string second;
    Classification result;
    StepVector steps;
    EdgeMatrix shape_key;  // canonical key of the selected path's shape
};

struct AutostarRecord {
    std::string word;
    Classification result;
    StepVector steps;
    std::vector<int> perfect_edge_lengths;  // every |S| over all perfect paths
};

struct ExcludedWord {
    std::string word;
    // Saturated products are stored as absent rather than a bogus number.
    std::optional<std::uint64_t> path_count;
};

struct CorpusReport {
    std::string source;
    std::uint64_t word_count = 0;
    std::uint64_t anagram_count = 0;
    std::uint64_t path_cap = 0;
    bool autostars_enabled = true;

    std::vector<StarRecord> stars;  // sorted by (first, second)
    std::vector<std::pair<std::string, std::string>> excluded_pairs;

    std::vector<AutostarRecord> autostars;  // sorted by word
    std::vector<ExcludedWord> autostar_excluded;

    // Symmetric stars whose reversed pair fails to be symmetric or perfect.
    // Empirically always empty; reported prominently if ever hit.
    std::vector<std::pair<std::string, std::string>> conjecture_counterexamples;

    std::uint64_t star_count() const { return stars.size(); }
    double star_fraction() const {
        return anagram_count == 0 ? 0.0
                                  : static_cast<double>(star_count()) /
                                        static_cast<double>(anagram_count);
    }
};

/// Classifies every anagram, buckets stars by length and class, clusters by
/// canonical shape key, and runs the autostar search. Deterministic for any
/// jobs width.
CorpusReport scan(const WordList& list, const ScanConfig& config = {});

/// Autostar inventory only (words with repeated letters, N >= 5).
void find_autostars(const WordList& list, std::uint64_t cap, CorpusReport& report,
                    unsigned jobs = 1);

/// Structured report: length -> class -> cluster -> member pairs.
/// Lossless round trip with import_report_json.
std::string export_report_json(const CorpusReport& report);
CorpusReport import_report_json(const std::string& text);

/// Flat export, one row per star:
/// first,second,n,class,o_rot,o_ref,edge_length,cluster_key
std::string export_report_csv(const CorpusReport& report);

/// Compact text form of a canonical key: columns "e1:e2" joined by "|".
std::string shape_key_string(const EdgeMatrix& key);
EdgeMatrix shape_key_from_string(const std::string& text);

}  // namespace stargram
