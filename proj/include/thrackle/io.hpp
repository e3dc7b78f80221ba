#pragma once

// TMF text format and SVG/DOT/JSON emitters.
//
//   tmf 1
//   # comment
//   name <text>
//   darts <count>
//   node <id> vertex <vertex id> : <ccw darts>
//   node <id> crossing : <ccw darts>
//   node <id> point : <ccw darts>
//   edge <id> <tail> <head> : <darts from tail to head>
//   disc <id> <vertex cycle> : <darts with the disc on their right, in face order>
//   end
//
// Rotation lines start at the node's first dart, so parse(serialize(d))
// reproduces d dart for dart.

#include <string>
#include <string_view>

#include "thrackle/drawing.hpp"
#include "thrackle/enumerate.hpp"
#include "thrackle/verify.hpp"

namespace thrackle {

// Renumbers darts, nodes, vertices, edges and discs by the canonical
// traversal; the name is dropped. Isomorphic drawings give equal results.
Drawing canonical_relabel(const Drawing& d);

std::string to_tmf(const Drawing& d, bool canonical = false);

// Errors: ParseError (malformed text, truncated file, inconsistent tables).
Drawing parse_tmf(std::string_view text);

// Field-by-field equality, including dart numbering and edge directions.
bool identical(const Drawing& a, const Drawing& b);

std::string to_svg(const Drawing& d);
std::string to_dot(const Drawing& d);
std::string to_json(const Drawing& d);

std::string report_text(const VerdictReport& r);
std::string report_json(const VerdictReport& r);

// Summary written next to the per-rep TMF files; file_names[i] names reps[i].
std::string census_json(const Census& c, const std::vector<std::string>& file_names);

}  // namespace thrackle
