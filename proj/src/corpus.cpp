#include "stargram/corpus.hpp"

#include "stargram/classify.hpp"
#include "stargram/enumerate.hpp"
#include "stargram/path_math.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace stargram {

namespace {

// ---------------------------------------------------------------------------
// Normalization

// Base-letter folds for Latin-1 supplement (U+00C0..U+00FF). Null = drop.
const char* const kLatin1Fold[0x40] = {
    "A", "A", "A", "A", "A", "A", "AE", "C", "E", "E", "E", "E", "I", "I", "I", "I",
    "D", "N", "O", "O", "O", "O", "O", nullptr, "O", "U", "U", "U", "U", "Y", "TH", "SS",
    "A", "A", "A", "A", "A", "A", "AE", "C", "E", "E", "E", "E", "I", "I", "I", "I",
    "D", "N", "O", "O", "O", "O", "O", nullptr, "O", "U", "U", "U", "U", "Y", "TH", "Y",
};

// Base-letter folds for Latin Extended-A (U+0100..U+017F).
const char* const kLatinExtAFold[0x80] = {
    "A", "A", "A", "A", "A", "A", "C", "C", "C", "C", "C", "C", "C", "C", "D", "D",
    "D", "D", "E", "E", "E", "E", "E", "E", "E", "E", "E", "E", "G", "G", "G", "G",
    "G", "G", "G", "G", "H", "H", "H", "H", "I", "I", "I", "I", "I", "I", "I", "I",
    "I", "I", "IJ", "IJ", "J", "J", "K", "K", "K", "L", "L", "L", "L", "L", "L", "L",
    "L", "L", "L", "N", "N", "N", "N", "N", "N", "N", "N", "N", "O", "O", "O", "O",
    "O", "O", "OE", "OE", "R", "R", "R", "R", "R", "R", "S", "S", "S", "S", "S", "S",
    "S", "S", "T", "T", "T", "T", "T", "T", "U", "U", "U", "U", "U", "U", "U", "U",
    "U", "U", "U", "U", "W", "W", "Y", "Y", "Y", "Z", "Z", "Z", "Z", "Z", "Z", "S",
};

const char* fold_code_point(char32_t cp) {
    if (cp >= 0xC0 && cp <= 0xFF) return kLatin1Fold[cp - 0xC0];
    if (cp >= 0x100 && cp <= 0x17F) return kLatinExtAFold[cp - 0x100];
    return nullptr;
}

// Decodes one UTF-8 code point; returns false on malformed input.
bool next_code_point(const std::string& s, std::size_t& i, char32_t& cp) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    int extra = 0;
    if (b0 < 0x80) {
        cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
        cp = b0 & 0x1F;
        extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
        cp = b0 & 0x0F;
        extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
        cp = b0 & 0x07;
        extra = 3;
    } else {
        return false;
    }
    for (int k = 1; k <= extra; ++k) {
        if (i + static_cast<std::size_t>(k) >= s.size()) return false;
        const unsigned char bk = byte(i + static_cast<std::size_t>(k));
        if ((bk & 0xC0) != 0x80) return false;
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += static_cast<std::size_t>(extra) + 1;
    return true;
}

// Uppercase A-Z with accents folded, or absent when any character does not
// reduce to a plain letter.
std::optional<std::string> normalize_word(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        char32_t cp = 0;
        if (!next_code_point(raw, i, cp)) return std::nullopt;
        if (cp >= 'A' && cp <= 'Z') {
            out.push_back(static_cast<char>(cp));
        } else if (cp >= 'a' && cp <= 'z') {
            out.push_back(static_cast<char>(cp - 'a' + 'A'));
        } else if (const char* folded = fold_code_point(cp)) {
            out += folded;
        } else {
            return std::nullopt;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

bool has_repeated_letter(const std::string& word) {
    std::array<int, 26> counts{};
    for (char c : word)
        if (++counts[static_cast<std::size_t>(c - 'A')] > 1) return true;
    return false;
}

// Claims indices from a shared cursor so results land in a preallocated
// slot per index; the merge order never depends on thread scheduling.
void parallel_for_index(std::size_t count, unsigned jobs,
                        const std::function<void(std::size_t)>& work) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    auto run = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1)) work(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

}  // namespace

WordList load_wordlist(std::istream& input, std::string source) {
    if (!input) throw std::runtime_error("unreadable wordlist: " + source);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(input, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t");
        if (auto word = normalize_word(line.substr(begin, end - begin + 1)))
            words.push_back(std::move(*word));
    }
    if (input.bad()) throw std::runtime_error("read error in wordlist: " + source);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.empty()) throw std::runtime_error("wordlist is empty after normalization: " + source);
    return WordList{std::move(words), std::move(source)};
}

WordList load_wordlist_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open wordlist: " + path);
    return load_wordlist(in, path);
}

std::vector<AnagramPair> find_anagrams(const WordList& list) {
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& word : list.words) {
        std::string key = word;
        std::sort(key.begin(), key.end());
        groups[std::move(key)].push_back(word);
    }
    std::vector<AnagramPair> pairs;
    for (const auto& [key, members] : groups) {
        (void)key;
        for (const auto& w1 : members)
            for (const auto& w2 : members)
                if (w1 != w2) pairs.emplace_back(w1, w2);
    }
    std::sort(pairs.begin(), pairs.end(), [](const AnagramPair& a, const AnagramPair& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    return pairs;
}

namespace {

StarRecord make_star_record(std::string first, std::string second, Classification result) {
    StarRecord record;
    record.first = std::move(first);
    record.second = std::move(second);
    record.steps = path_steps(result.path);
    record.shape_key = canonical_shape_key(edge_matrix(result.path));
    record.result = std::move(result);
    return record;
}

}  // namespace

void find_autostars(const WordList& list, std::uint64_t cap, CorpusReport& report,
                    unsigned jobs) {
    std::vector<const std::string*> eligible;
    for (const auto& word : list.words)
        if (word.size() >= 5 && has_repeated_letter(word)) eligible.push_back(&word);

    struct Outcome {
        std::optional<AutostarRecord> autostar;
        std::optional<ExcludedWord> excluded;
    };
    std::vector<Outcome> outcomes(eligible.size());

    parallel_for_index(eligible.size(), jobs, [&](std::size_t i) {
        const std::string& word = *eligible[i];
        const AnagramPair self(word, word);
        const std::uint64_t count = count_paths_saturating(self);
        if (count > cap) {
            outcomes[i].excluded = ExcludedWord{
                word, count == UINT64_MAX ? std::nullopt : std::optional<std::uint64_t>(count)};
            return;
        }
        std::optional<Classification> best;
        std::vector<int> perfect_lengths;
        for_each_path(self, [&](const Path& path) {
            Classification current = classify_path(path);
            if (current.perfect_step) {
                const int len = std::abs(*current.perfect_step);
                if (std::find(perfect_lengths.begin(), perfect_lengths.end(), len) ==
                    perfect_lengths.end())
                    perfect_lengths.push_back(len);
            }
            if (!best || current.star_class > best->star_class ||
                (current.star_class == best->star_class &&
                 current.symmetry_sum() >= best->symmetry_sum()))
                best = std::move(current);
        });
        if (best && best->is_star()) {
            std::sort(perfect_lengths.begin(), perfect_lengths.end());
            AutostarRecord record;
            record.word = word;
            record.steps = path_steps(best->path);
            record.result = std::move(*best);
            record.perfect_edge_lengths = std::move(perfect_lengths);
            outcomes[i].autostar = std::move(record);
        }
    });

    for (auto& outcome : outcomes) {
        if (outcome.autostar) report.autostars.push_back(std::move(*outcome.autostar));
        if (outcome.excluded) report.autostar_excluded.push_back(std::move(*outcome.excluded));
    }
}

CorpusReport scan(const WordList& list, const ScanConfig& config) {
    CorpusReport report;
    report.source = list.source;
    report.word_count = list.words.size();
    report.path_cap = config.path_cap;
    report.autostars_enabled = config.autostars;

    const std::vector<AnagramPair> pairs = find_anagrams(list);
    report.anagram_count = pairs.size();

    struct Outcome {
        std::optional<Classification> result;
        bool capped = false;
    };
    std::vector<Outcome> outcomes(pairs.size());
    parallel_for_index(pairs.size(), config.jobs, [&](std::size_t i) {
        if (pairs[i].size() < 5) return;  // too short to be a star
        try {
            outcomes[i].result = classify_anagram(pairs[i], config.path_cap);
        } catch (const PathCountCapError&) {
            outcomes[i].capped = true;
        }
    });

    std::map<std::pair<std::string, std::string>, StarClass> class_by_pair;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (outcomes[i].capped) {
            report.excluded_pairs.emplace_back(pairs[i].first, pairs[i].second);
            continue;
        }
        if (!outcomes[i].result) continue;
        class_by_pair[{pairs[i].first, pairs[i].second}] = outcomes[i].result->star_class;
        if (outcomes[i].result->is_star())
            report.stars.push_back(make_star_record(pairs[i].first, pairs[i].second,
                                                    std::move(*outcomes[i].result)));
    }

    for (const auto& star : report.stars) {
        if (star.result.star_class != StarClass::Symmetric) continue;
        const auto reversed = class_by_pair.find({star.second, star.first});
        if (reversed == class_by_pair.end() || (reversed->second != StarClass::Symmetric &&
                                                reversed->second != StarClass::Perfect))
            report.conjecture_counterexamples.emplace_back(star.first, star.second);
    }

    if (config.autostars) find_autostars(list, config.path_cap, report, config.jobs);
    return report;
}

// ---------------------------------------------------------------------------
// Serialization

std::string shape_key_string(const EdgeMatrix& key) {
    std::string out;
    for (Eigen::Index c = 0; c < key.cols(); ++c) {
        if (c) out += '|';
        out += std::to_string(key(0, c)) + ':' + std::to_string(key(1, c));
    }
    return out;
}

EdgeMatrix shape_key_from_string(const std::string& text) {
    std::vector<std::pair<int, int>> cols;
    std::stringstream stream(text);
    std::string column;
    while (std::getline(stream, column, '|')) {
        const auto sep = column.find(':');
        if (sep == std::string::npos) throw std::invalid_argument("bad shape key: " + text);
        cols.emplace_back(std::stoi(column.substr(0, sep)), std::stoi(column.substr(sep + 1)));
    }
    EdgeMatrix key(2, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        key(0, static_cast<Eigen::Index>(c)) = cols[c].first;
        key(1, static_cast<Eigen::Index>(c)) = cols[c].second;
    }
    return key;
}

namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXi& v) {
    json arr = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(v[k]);
    return arr;
}

Eigen::VectorXi vector_from_json(const json& arr) {
    Eigen::VectorXi v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t k = 0; k < arr.size(); ++k) v[static_cast<Eigen::Index>(k)] = arr[k];
    return v;
}

json member_to_json(const StarRecord& star) {
    json member;
    member["first"] = star.first;
    member["second"] = star.second;
    member["path"] = vector_to_json(star.result.path);
    member["steps"] = vector_to_json(star.steps);
    member["o_rot"] = star.result.o_rot.value_or(-1);
    member["o_ref"] = star.result.o_ref.value_or(-1);
    if (star.result.perfect_step) member["step"] = *star.result.perfect_step;
    return member;
}

json autostar_to_json(const AutostarRecord& record) {
    json entry;
    entry["word"] = record.word;
    entry["n"] = record.word.size();
    entry["class"] = to_string(record.result.star_class);
    entry["path"] = vector_to_json(record.result.path);
    entry["steps"] = vector_to_json(record.steps);
    entry["o_rot"] = record.result.o_rot.value_or(-1);
    entry["o_ref"] = record.result.o_ref.value_or(-1);
    if (record.result.perfect_step) entry["step"] = *record.result.perfect_step;
    entry["perfect_edge_lengths"] = record.perfect_edge_lengths;
    return entry;
}

}  // namespace

std::string export_report_json(const CorpusReport& report) {
    // length -> class -> cluster -> members, everything sorted for
    // byte-identical output across runs and jobs widths.
    std::map<int, std::map<StarClass, std::map<std::string, std::vector<const StarRecord*>>,
                           std::greater<>>>
        hierarchy;
    for (const auto& star : report.stars)
        hierarchy[static_cast<int>(star.first.size())][star.result.star_class]
                 [shape_key_string(star.shape_key)]
                     .push_back(&star);

    json doc;
    doc["source"] = report.source;
    doc["word_count"] = report.word_count;
    doc["anagram_count"] = report.anagram_count;
    doc["path_cap"] = report.path_cap;
    doc["star_count"] = report.star_count();
    doc["star_fraction"] = report.star_fraction();

    json lengths = json::array();
    for (const auto& [n, classes] : hierarchy) {
        json length_entry;
        length_entry["n"] = n;
        json class_array = json::array();
        for (const auto& [cls, clusters] : classes) {
            json class_entry;
            class_entry["class"] = to_string(cls);
            std::size_t count = 0;
            json cluster_array = json::array();
            for (const auto& [key, members] : clusters) {
                json cluster_entry;
                cluster_entry["key"] = key;
                json member_array = json::array();
                for (const StarRecord* star : members) member_array.push_back(member_to_json(*star));
                count += members.size();
                cluster_entry["members"] = std::move(member_array);
                cluster_array.push_back(std::move(cluster_entry));
            }
            class_entry["count"] = count;
            class_entry["clusters"] = std::move(cluster_array);
            class_array.push_back(std::move(class_entry));
        }
        length_entry["classes"] = std::move(class_array);
        lengths.push_back(std::move(length_entry));
    }
    doc["lengths"] = std::move(lengths);

    json excluded_pairs = json::array();
    for (const auto& [w1, w2] : report.excluded_pairs)
        excluded_pairs.push_back(json{{"first", w1}, {"second", w2}});
    doc["excluded_pairs"] = std::move(excluded_pairs);

    json autostars;
    autostars["enabled"] = report.autostars_enabled;
    json words = json::array();
    for (const auto& record : report.autostars) words.push_back(autostar_to_json(record));
    autostars["count"] = report.autostars.size();
    autostars["words"] = std::move(words);
    json excluded = json::array();
    for (const auto& entry : report.autostar_excluded) {
        json e;
        e["word"] = entry.word;
        if (entry.path_count)
            e["path_count"] = *entry.path_count;
        else
            e["path_count"] = nullptr;
        excluded.push_back(std::move(e));
    }
    autostars["excluded"] = std::move(excluded);
    doc["autostars"] = std::move(autostars);

    json counterexamples = json::array();
    for (const auto& [w1, w2] : report.conjecture_counterexamples)
        counterexamples.push_back(json{{"first", w1}, {"second", w2}});
    doc["conjecture_counterexamples"] = std::move(counterexamples);

    return doc.dump(2) + "\n";
}

CorpusReport import_report_json(const std::string& text) {
    const json doc = json::parse(text);
    CorpusReport report;
    report.source = doc.at("source").get<std::string>();
    report.word_count = doc.at("word_count").get<std::uint64_t>();
    report.anagram_count = doc.at("anagram_count").get<std::uint64_t>();
    report.path_cap = doc.at("path_cap").get<std::uint64_t>();

    for (const auto& length_entry : doc.at("lengths")) {
        for (const auto& class_entry : length_entry.at("classes")) {
            const auto cls = star_class_from_string(class_entry.at("class").get<std::string>());
            if (!cls) throw std::invalid_argument("unknown class in report");
            for (const auto& cluster_entry : class_entry.at("clusters")) {
                const EdgeMatrix key =
                    shape_key_from_string(cluster_entry.at("key").get<std::string>());
                for (const auto& member : cluster_entry.at("members")) {
                    StarRecord star;
                    star.first = member.at("first").get<std::string>();
                    star.second = member.at("second").get<std::string>();
                    star.result.star_class = *cls;
                    star.result.path = vector_from_json(member.at("path"));
                    star.steps = vector_from_json(member.at("steps"));
                    const int o_rot = member.at("o_rot").get<int>();
                    const int o_ref = member.at("o_ref").get<int>();
                    if (o_rot >= 0) star.result.o_rot = o_rot;
                    if (o_ref >= 0) star.result.o_ref = o_ref;
                    if (member.contains("step")) star.result.perfect_step = member.at("step").get<int>();
                    star.shape_key = key;
                    report.stars.push_back(std::move(star));
                }
            }
        }
    }
    std::sort(report.stars.begin(), report.stars.end(),
              [](const StarRecord& a, const StarRecord& b) {
                  return std::tie(a.first, a.second) < std::tie(b.first, b.second);
              });

    for (const auto& entry : doc.at("excluded_pairs"))
        report.excluded_pairs.emplace_back(entry.at("first").get<std::string>(),
                                           entry.at("second").get<std::string>());

    const auto& autostars = doc.at("autostars");
    report.autostars_enabled = autostars.at("enabled").get<bool>();
    for (const auto& entry : autostars.at("words")) {
        AutostarRecord record;
        record.word = entry.at("word").get<std::string>();
        const auto cls = star_class_from_string(entry.at("class").get<std::string>());
        if (!cls) throw std::invalid_argument("unknown class in report");
        record.result.star_class = *cls;
        record.result.path = vector_from_json(entry.at("path"));
        record.steps = vector_from_json(entry.at("steps"));
        const int o_rot = entry.at("o_rot").get<int>();
        const int o_ref = entry.at("o_ref").get<int>();
        if (o_rot >= 0) record.result.o_rot = o_rot;
        if (o_ref >= 0) record.result.o_ref = o_ref;
        if (entry.contains("step")) record.result.perfect_step = entry.at("step").get<int>();
        record.perfect_edge_lengths = entry.at("perfect_edge_lengths").get<std::vector<int>>();
        report.autostars.push_back(std::move(record));
    }
    for (const auto& entry : autostars.at("excluded")) {
        ExcludedWord word;
        word.word = entry.at("word").get<std::string>();
        if (!entry.at("path_count").is_null())
            word.path_count = entry.at("path_count").get<std::uint64_t>();
        report.autostar_excluded.push_back(std::move(word));
    }

    for (const auto& entry : doc.at("conjecture_counterexamples"))
        report.conjecture_counterexamples.emplace_back(entry.at("first").get<std::string>(),
                                                       entry.at("second").get<std::string>());
    return report;
}

std::string export_report_csv(const CorpusReport& report) {
    std::string out = "first,second,n,class,o_rot,o_ref,edge_length,cluster_key\n";
    for (const auto& star : report.stars) {
        out += star.first + ',' + star.second + ',' + std::to_string(star.first.size()) + ',' +
               to_string(star.result.star_class) + ',' +
               std::to_string(star.result.o_rot.value_or(-1)) + ',' +
               std::to_string(star.result.o_ref.value_or(-1)) + ',';
        if (star.result.perfect_step) out += std::to_string(std::abs(*star.result.perfect_step));
        out += ',' + shape_key_string(star.shape_key) + '\n';
    }
    return out;
}

}  // namespace stargram
