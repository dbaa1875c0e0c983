// Command-line driver: classify single anagrams, census polygon shapes,
// scan wordlists, search autostars, and render figures.

#include "stargram/classify.hpp"
#include "stargram/corpus.hpp"
#include "stargram/enumerate.hpp"
#include "stargram/path_math.hpp"
#include "stargram/render_svg.hpp"
#include "stargram/shape_census.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace {

using namespace stargram;

// Words typed on the command line go through the same normalization as
// wordlist entries.
std::string normalize_cli_word(const std::string& raw) {
    std::stringstream stream(raw);
    WordList list = load_wordlist(stream, "argument");
    if (list.words.size() != 1) throw std::runtime_error("not a single word: " + raw);
    return list.words.front();
}

std::string join_ints(const Eigen::VectorXi& v) {
    std::string out = "[";
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(v[k]);
    }
    return out + "]";
}

void print_classification(const Classification& result) {
    std::cout << "class: " << to_string(result.star_class) << "\n"
              << "o_rot: " << result.o_rot.value_or(-1) << "\n"
              << "o_ref: " << result.o_ref.value_or(-1) << "\n"
              << "path:  " << join_ints(result.path) << "\n"
              << "steps: " << join_ints(path_steps(result.path)) << "\n";
    if (result.perfect_step)
        std::cout << "S: " << *result.perfect_step << "  L: " << std::abs(*result.perfect_step)
                  << "\n";
}

void print_histogram(const CorpusReport& report) {
    // Per-length bars split by class, with cluster counts alongside.
    std::map<int, std::map<StarClass, std::pair<std::size_t, std::set<std::string>>>> table;
    for (const auto& star : report.stars) {
        auto& cell = table[static_cast<int>(star.first.size())][star.result.star_class];
        cell.first++;
        cell.second.insert(shape_key_string(star.shape_key));
    }
    std::cout << "\n  N  class       stars  clusters\n";
    for (const auto& [n, classes] : table)
        for (auto it = classes.rbegin(); it != classes.rend(); ++it)
            std::cout << std::setw(3) << n << "  " << std::left << std::setw(10)
                      << to_string(it->first) << std::right << std::setw(7) << it->second.first
                      << std::setw(10) << it->second.second.size() << "\n";
    std::cout << "\nanagrams: " << report.anagram_count << "\nstars:    " << report.star_count()
              << "  (" << std::fixed << std::setprecision(2) << 100.0 * report.star_fraction()
              << "% of anagrams)\n";
    if (report.autostars_enabled) {
        std::size_t symmetric = 0, perfect = 0;
        for (const auto& a : report.autostars) {
            symmetric += a.result.star_class == StarClass::Symmetric;
            perfect += a.result.star_class == StarClass::Perfect;
        }
        std::cout << "autostars: " << report.autostars.size() << "  (symmetric " << symmetric
                  << ", perfect " << perfect << ", cap-excluded "
                  << report.autostar_excluded.size() << ")\n";
    }
    if (report.conjecture_counterexamples.empty()) {
        std::cout << "symmetric-star reversal check: no counterexamples\n";
    } else {
        std::cout << "*** symmetric-star reversal check FAILED for "
                  << report.conjecture_counterexamples.size() << " pair(s):\n";
        for (const auto& [w1, w2] : report.conjecture_counterexamples)
            std::cout << "***   " << w1 << " -> " << w2 << "\n";
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star anagram detection, classification, and rendering"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t cap = 3'000'000;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--cap", cap, "path-count ceiling per word")->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    // classify
    std::string word1, word2;
    auto* cmd_classify = app.add_subcommand("classify", "classify an anagram pair");
    cmd_classify->add_option("first", word1)->required();
    cmd_classify->add_option("second", word2)->required();

    // scan
    std::string wordlist_path, out_dir = "stargram-report", format = "both";
    bool no_autostars = false;
    auto* cmd_scan = app.add_subcommand("scan", "census a wordlist for star anagrams");
    cmd_scan->add_option("wordlist", wordlist_path, "text file, one word per line")->required();
    cmd_scan->add_option("--out", out_dir, "report output directory");
    cmd_scan->add_option("--format", format, "structured | tabular | both")
        ->check(CLI::IsMember({"structured", "tabular", "both"}));
    cmd_scan->add_flag("--no-autostars", no_autostars, "skip the autostar search");

    // shapes
    int shapes_n = 0;
    auto* cmd_shapes = app.add_subcommand("shapes", "count unique star polygons for a length");
    cmd_shapes->add_option("N", shapes_n, "word length (5..12)")->required();

    // autostars
    std::string autostar_list;
    auto* cmd_autostars = app.add_subcommand("autostars", "find words that star-anagram themselves");
    cmd_autostars->add_option("wordlist", autostar_list)->required();

    // render
    std::string render_w1, render_w2, render_out;
    bool render_steps = false, render_indices = false;
    auto* cmd_render = app.add_subcommand("render", "render one anagram figure as SVG");
    cmd_render->add_option("first", render_w1)->required();
    cmd_render->add_option("second", render_w2)->required();
    cmd_render->add_option("output", render_out, "output .svg path")->required();
    cmd_render->add_flag("--steps", render_steps, "label steps");
    cmd_render->add_flag("--indices", render_indices, "label node indices");

    // gallery
    std::string gallery_report, gallery_out;
    auto* cmd_gallery = app.add_subcommand("gallery", "render every star in a structured report");
    cmd_gallery->add_option("report", gallery_report, "report.json from scan")->required();
    cmd_gallery->add_option("outdir", gallery_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
    }

    try {
        if (*cmd_classify) {
            const AnagramPair pair(normalize_cli_word(word1), normalize_cli_word(word2));
            const Classification result = classify_anagram(pair, cap);
            print_classification(result);
            return result.is_star() ? 0 : 1;
        }

        if (*cmd_scan) {
            const WordList list = load_wordlist_file(wordlist_path);
            ScanConfig config;
            config.path_cap = cap;
            config.jobs = jobs;
            config.autostars = !no_autostars;
            const CorpusReport report = scan(list, config);
            std::filesystem::create_directories(out_dir);
            if (format != "tabular")
                write_text_file(std::filesystem::path(out_dir) / "report.json",
                                export_report_json(report));
            if (format != "structured")
                write_text_file(std::filesystem::path(out_dir) / "report.csv",
                                export_report_csv(report));
            print_histogram(report);
            std::cout << "reports written to " << out_dir << "\n";
            return 0;
        }

        if (*cmd_shapes) {
            if (shapes_n < 5 || shapes_n > 12) {
                std::cerr << "shapes: N must be in 5..12\n";
                return 2;
            }
            ShapeCensusOptions options;
            options.jobs = jobs;
            const ShapeCensus census = enumerate_star_shapes(shapes_n, options);
            std::cout << "  N  asymmetric  symmetric  perfect  total\n"
                      << std::setw(3) << census.n << std::setw(12) << census.asymmetric
                      << std::setw(11) << census.symmetric << std::setw(9) << census.perfect
                      << std::setw(7) << census.total() << "\n";
            return 0;
        }

        if (*cmd_autostars) {
            const WordList list = load_wordlist_file(autostar_list);
            CorpusReport report;
            report.source = list.source;
            report.word_count = list.words.size();
            report.path_cap = cap;
            find_autostars(list, cap, report);
            for (const auto& record : report.autostars) {
                std::cout << record.word << ": " << to_string(record.result.star_class)
                          << ", o_rot=" << record.result.o_rot.value_or(-1)
                          << ", o_ref=" << record.result.o_ref.value_or(-1);
                if (!record.perfect_edge_lengths.empty()) {
                    std::cout << ", edge lengths {";
                    for (std::size_t k = 0; k < record.perfect_edge_lengths.size(); ++k)
                        std::cout << (k ? "," : "") << record.perfect_edge_lengths[k];
                    std::cout << "}";
                }
                std::cout << "\n";
            }
            std::cout << report.autostars.size() << " autostars, "
                      << report.autostar_excluded.size() << " cap-excluded word(s)\n";
            for (const auto& excluded : report.autostar_excluded)
                std::cout << "excluded: " << excluded.word << "\n";
            return 0;
        }

        if (*cmd_render) {
            FigureSpec spec{AnagramPair(normalize_cli_word(render_w1), normalize_cli_word(render_w2)),
                            Path{},
                            {}};
            spec.options.show_steps = render_steps;
            spec.options.show_node_indices = render_indices;
            if (spec.pair.size() >= 5) {
                spec.path = classify_anagram(spec.pair, cap).path;
            } else {
                spec.path = enumerate_paths(spec.pair, cap).paths.front();
            }
            write_text_file(render_out, render_polygon(spec));
            std::cout << "wrote " << render_out << "\n";
            return 0;
        }

        if (*cmd_gallery) {
            std::ifstream in(gallery_report, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open report: " + gallery_report);
            std::stringstream buffer;
            buffer << in.rdbuf();
            const CorpusReport report = import_report_json(buffer.str());
            render_gallery(report, gallery_out);
            std::cout << "gallery written to " << gallery_out << "\n";
            return 0;
        }
    } catch (const NotAnAnagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const WordTooShortError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
