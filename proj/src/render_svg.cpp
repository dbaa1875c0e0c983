#include "stargram/render_svg.hpp"

#include "stargram/path_math.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <iomanip>

namespace stargram {

namespace {

struct Point {
    double x;
    double y;
};

// SVG y grows downward, so the circle position subtracts the sine.
Point node_position(int node, int n, double cx, double cy, double radius) {
    const double angle =
        (90.0 - 360.0 * node / n) * std::numbers::pi / 180.0;
    return {cx + radius * std::cos(angle), cy - radius * std::sin(angle)};
}

// Enough digits that parsed-back chord lengths agree to ~1e-12 relative.
std::string fmt(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(10) << value;
    return out.str();
}

}  // namespace

std::string render_polygon(const FigureSpec& spec) {
    const int n = spec.pair.size();
    if (spec.path.size() != n) throw InvalidPathError("path length does not match word length");
    if (!is_permutation_path(spec.path))
        throw InvalidPathError("figure path is not a permutation");

    const double radius = spec.options.radius;
    const double margin = 3.2 * spec.options.font_size;
    const double cx = radius + margin;
    const double cy = radius + margin;
    const double size = 2.0 * (radius + margin);
    const double caption_space = 1.8 * spec.options.font_size;

    std::ostringstream svg;
    svg << std::fixed << std::setprecision(4);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
        << fmt(size + caption_space) << "\" viewBox=\"0 0 " << fmt(size) << " "
        << fmt(size + caption_space) << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <circle class=\"ring\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
        << fmt(radius) << "\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n";

    // Chords between consecutive path nodes, closing edge included.
    for (int k = 0; k < n; ++k) {
        const Point a = node_position(spec.path[k], n, cx, cy, radius);
        const Point b = node_position(spec.path[(k + 1) % n], n, cx, cy, radius);
        svg << "  <line class=\"chord\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y)
            << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
            << "\" stroke=\"#1f3a93\" stroke-width=\"2\"/>\n";
    }

    for (int node = 0; node < n; ++node) {
        const Point p = node_position(node, n, cx, cy, radius);
        svg << "  <circle class=\"node\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
            << "\" r=\"4\" fill=\"#222\"/>\n";
        const Point label = node_position(node, n, cx, cy, radius + 0.9 * spec.options.font_size);
        svg << "  <text class=\"letter\" x=\"" << fmt(label.x) << "\" y=\"" << fmt(label.y)
            << "\" font-size=\"" << fmt(spec.options.font_size)
            << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
            << spec.pair.first[static_cast<std::size_t>(node)] << "</text>\n";
        if (spec.options.show_node_indices) {
            const Point idx =
                node_position(node, n, cx, cy, radius + 2.0 * spec.options.font_size);
            svg << "  <text class=\"index\" x=\"" << fmt(idx.x) << "\" y=\"" << fmt(idx.y)
                << "\" font-size=\"" << fmt(0.7 * spec.options.font_size)
                << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#888\">" << node
                << "</text>\n";
        }
    }

    if (spec.options.show_steps) {
        const StepVector steps = path_steps(spec.path);
        for (int k = 0; k < n; ++k) {
            const Point a = node_position(spec.path[k], n, cx, cy, radius);
            const Point b = node_position(spec.path[(k + 1) % n], n, cx, cy, radius);
            // Nudged toward the center so labels stay off the chord.
            const double mx = 0.5 * (a.x + b.x) + 0.06 * (cx - 0.5 * (a.x + b.x));
            const double my = 0.5 * (a.y + b.y) + 0.06 * (cy - 0.5 * (a.y + b.y));
            svg << "  <text class=\"step\" x=\"" << fmt(mx) << "\" y=\"" << fmt(my)
                << "\" font-size=\"" << fmt(0.8 * spec.options.font_size)
                << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#1f6fb2\">"
                << steps[k] << "</text>\n";
        }
    }

    const std::string caption = spec.options.caption.empty()
                                    ? spec.pair.first + " -> " + spec.pair.second
                                    : spec.options.caption;
    svg << "  <text class=\"caption\" x=\"" << fmt(cx) << "\" y=\"" << fmt(size + 0.8 * caption_space)
        << "\" font-size=\"" << fmt(spec.options.font_size)
        << "\" text-anchor=\"middle\">" << caption << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void render_gallery(const CorpusReport& report, const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    // length -> class -> key -> members, cluster indices assigned by key order.
    std::map<int, std::map<StarClass, std::map<std::string, std::vector<const StarRecord*>>,
                           std::greater<>>>
        hierarchy;
    for (const auto& star : report.stars)
        hierarchy[static_cast<int>(star.first.size())][star.result.star_class]
                 [shape_key_string(star.shape_key)]
                     .push_back(&star);

    std::ostringstream root_index;
    root_index << "<!DOCTYPE html>\n<html><head><title>star anagram gallery</title></head><body>\n"
               << "<h1>Star anagram gallery</h1>\n<ul>\n";

    for (const auto& [n, classes] : hierarchy) {
        const fs::path n_dir = out_dir / std::to_string(n);
        fs::create_directories(n_dir);
        std::ostringstream n_index;
        n_index << "<!DOCTYPE html>\n<html><head><title>N = " << n << "</title></head><body>\n"
                << "<h1>Star anagrams, N = " << n << "</h1>\n";
        for (const auto& [cls, clusters] : classes) {
            n_index << "<h2>" << to_string(cls) << "</h2>\n";
            int cluster_index = 0;
            for (const auto& [key, members] : clusters) {
                const fs::path cluster_dir =
                    n_dir / to_string(cls) / std::to_string(cluster_index);
                fs::create_directories(cluster_dir);
                n_index << "<h3>cluster " << cluster_index << " (" << key << ")</h3>\n";
                for (const StarRecord* star : members) {
                    FigureSpec spec{AnagramPair(star->first, star->second), star->result.path, {}};
                    const std::string name = star->first + "-" + star->second + ".svg";
                    write_file(cluster_dir / name, render_polygon(spec));
                    const fs::path rel =
                        fs::path(to_string(cls)) / std::to_string(cluster_index) / name;
                    n_index << "<div><img src=\"" << rel.generic_string()
                            << "\" width=\"220\"/><br/>" << star->first << " -> " << star->second
                            << "</div>\n";
                }
                ++cluster_index;
            }
        }
        n_index << "</body></html>\n";
        write_file(n_dir / "index.html", n_index.str());
        root_index << "<li><a href=\"" << n << "/index.html\">N = " << n << "</a></li>\n";
    }
    root_index << "</ul>\n</body></html>\n";
    write_file(out_dir / "index.html", root_index.str());
}

}  // namespace stargram
