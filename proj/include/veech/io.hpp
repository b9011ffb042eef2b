#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "veech/orbit.hpp"
#include "veech/saddle.hpp"
#include "veech/surface.hpp"
#include "veech/teichcurve.hpp"

namespace veech {

// Surface files. Coordinates are written as four "p/q" coefficient strings,
// or as a single "p/q" when every coordinate is rational ("field": "rational").
std::string surface_to_json(const TranslationSurface& s);
// Throws std::invalid_argument on malformed input; the result is validated.
TranslationSurface surface_from_json(std::string_view text);

// orbit.json: N, letters, words, and r, t, j as 1-based image arrays, each on
// one line. Surfaces are not stored.
std::string orbit_to_json(const OrbitTable& t);
OrbitTable orbit_from_json(std::string_view text);

std::string teich_to_json(const CurveTopology& c);

// id, word, k, exact x and y, then length, x, y as floats with `digits`
// significant digits (at least 6).
std::string saddle_csv(const std::vector<SaddleClassRecord>& records, int digits = 6);
// solid, index, cusps, widths, nu2, nu3, genus, blocked; the four arithmetic
// solids.
std::string origami_table_csv();

// Decimal string of an element with `digits` significant digits, rounded
// from a certified enclosure.
std::string format_float(const Nf& a, int digits);

struct SvgOptions {
  double scale = 20;  // pixels per unit
  int precision = 3;  // decimals in coordinates
  bool edge_labels = true;
};
// Polygons are laid out as a net along a breadth-first spanning tree of the
// gluing graph, in label order; edges glued outside the tree carry matching
// labels. Segments are drawn in the coordinates of their polygon.
std::string render_svg(const TranslationSurface& s, const std::vector<TraceSegment>& segments = {},
                       const SvgOptions& opt = {});

std::string read_file(const std::string& path);      // throws std::runtime_error
void write_file(const std::string& path, std::string_view data);

}  // namespace veech
