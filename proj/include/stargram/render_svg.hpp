#pragma once

// SVG figures of unicursal polygons: letters on a circle, chords along the
// path, optional step and index labels, and batch galleries.

#include "stargram/corpus.hpp"
#include "stargram/types.hpp"

#include <filesystem>
#include <string>

namespace stargram {

struct FigureOptions {
    bool show_steps = false;
    bool show_node_indices = false;
    std::string caption;  // empty = "FIRST -> SECOND"
    double radius = 200.0;
    double font_size = 22.0;
};

struct FigureSpec {
    AnagramPair pair;
    Path path;
    FigureOptions options;
};

/// Node k sits at angle 90 - k*360/N degrees (node 0 on top, clockwise).
/// Chords connect consecutive path nodes, including the closing edge.
std::string render_polygon(const FigureSpec& spec);

/// One figure per star under <out>/<N>/<class>/<cluster-index>/, plus an
/// index page per length and a root index.
void render_gallery(const CorpusReport& report, const std::filesystem::path& out_dir);

}  // namespace stargram
