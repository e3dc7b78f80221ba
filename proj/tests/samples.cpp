#include "samples.hpp"

using namespace thrackle;

namespace samples {

Drawing annular_six_vertices() {
  DrawingSpec s;
  s.vertex_count = 6;
  s.edges = {{0, 2}, {2, 1}, {1, 0}, {1, 3}, {5, 4}, {1, 4}};
  s.routes = {{0, 2, 1}, {3}, {4}, {5, 0}, {4, 5, 3, 1}, {2}};
  s.crossings = {{0, 3, -1}, {0, 4, 1}, {0, 5, 1}, {1, 4, -1}, {2, 4, 1}, {3, 4, 1}};
  s.rotation = {{}, {{2, true}, {3, true}, {1, false}, {5, true}}, {}, {}, {}, {}};
  Drawing d = assemble_drawing(s);
  const CornerSpec corners[] = {
      {0, 0, {0, true}}, {1, 0, {2, true}}, {3, 0, {3, false}},
      {5, 0, {4, true}}, {2, 1, {0, false}}, {4, 1, {5, false}},
  };
  Drawing out = attach_scaffold(d, corners);
  out.name = "annular-six-vertices";
  return out;
}

Drawing non_alternating_path() {
  DrawingSpec s;
  s.vertex_count = 5;
  s.edges = {{0, 1}, {4, 3}, {1, 2}};
  s.routes = {{0}, {0, 1}, {1}};
  s.crossings = {{0, 1, 1}, {1, 2, -1}};
  Drawing d = assemble_drawing(s);
  const CornerSpec corners[] = {
      {0, 0, {0, true}}, {1, 0, {2, true}}, {4, 0, {1, true}},
      {2, 1, {2, false}}, {3, 1, {1, false}},
  };
  Drawing out = attach_scaffold(d, corners);
  out.name = "non-alternating-path";
  return out;
}

Drawing seven_cycle(int which) {
  DrawingSpec s;
  s.vertex_count = 7;
  s.edges = {{1, 3}, {3, 0}, {0, 2}, {2, 4}, {1, 5}, {4, 6}, {6, 5}};
  if (which == 0) s.routes = {{2, 3, 0, 1}};
  else s.routes = {{0, 1, 2, 3}};
  const std::vector<std::vector<int>> rest = {
      {4, 6, 5, 7}, {10, 8, 9, 0}, {1, 4, 12, 11}, {13, 8, 5, 11}, {6, 9, 13, 2}, {3, 10, 7, 12}};
  s.routes.insert(s.routes.end(), rest.begin(), rest.end());
  s.crossings = {{0, 2, -1}, {0, 3, 1},  {0, 5, 1},  {0, 6, -1}, {1, 3, -1}, {1, 4, -1}, {1, 5, 1},
                 {1, 6, -1}, {2, 4, 1},  {2, 5, -1}, {2, 6, 1},  {3, 4, 1},  {3, 6, 1},  {4, 5, 1}};
  Drawing d = assemble_drawing(s);
  d.name = which == 0 ? "seven-cycle-a" : "seven-cycle-b";
  return d;
}

Drawing eight_cycle(int which) {
  DrawingSpec s;
  s.vertex_count = 8;
  if (which == 0) {
    s.edges = {{0, 3}, {2, 4}, {3, 5}, {0, 4}, {1, 2}, {6, 5}, {1, 7}, {6, 7}};
    s.routes = {{2, 3, 4, 0, 1},     {0, 8, 7, 6, 5},     {10, 12, 11, 9, 5}, {15, 14, 16, 13, 9},
                {17, 18, 13, 10, 1}, {17, 14, 19, 2, 6},  {15, 19, 3, 7, 11}, {18, 16, 4, 8, 12}};
    s.crossings = {{0, 1, -1}, {0, 4, 1},  {0, 5, -1}, {0, 6, -1}, {0, 7, -1}, {1, 2, 1},  {1, 5, 1},
                   {1, 6, 1},  {1, 7, 1},  {2, 3, -1}, {2, 4, -1}, {2, 6, 1},  {2, 7, 1},  {3, 4, -1},
                   {3, 5, -1}, {3, 6, -1}, {3, 7, -1}, {4, 5, -1}, {4, 7, -1}, {5, 6, 1}};
  } else if (which == 1) {
    // The source drawing's last two edges also cross twice next to their
    // common end; that bigon is removed here.
    s.edges = {{0, 3}, {2, 4}, {3, 5}, {0, 4}, {1, 2}, {6, 5}, {1, 7}, {6, 7}};
    s.routes = {{2, 3, 4, 0, 1},     {0, 8, 7, 6, 5},     {10, 9, 5, 12, 11}, {15, 14, 16, 13, 9},
                {17, 18, 13, 10, 1}, {17, 14, 19, 2, 6},  {15, 19, 3, 7, 11}, {18, 16, 4, 8, 12}};
    s.crossings = {{0, 1, -1}, {0, 4, 1},  {0, 5, -1}, {0, 6, -1}, {0, 7, -1}, {1, 2, 1},  {1, 5, 1},
                   {1, 6, 1},  {1, 7, 1},  {2, 3, -1}, {2, 4, -1}, {2, 6, 1},  {2, 7, 1},  {3, 4, -1},
                   {3, 5, -1}, {3, 6, -1}, {3, 7, -1}, {4, 5, -1}, {4, 7, -1}, {5, 6, 1}};
  } else {
    s.edges = {{0, 3}, {2, 4}, {3, 5}, {0, 4}, {1, 2}, {1, 7}, {6, 5}, {6, 7}};
    s.routes = {{4, 3, 2, 0, 1},     {0, 7, 6, 8, 5},    {10, 9, 5, 12, 11}, {16, 15, 14, 13, 9},
                {17, 18, 13, 10, 1}, {14, 2, 19, 6, 11}, {17, 15, 3, 19, 7}, {18, 16, 4, 8, 12}};
    s.crossings = {{0, 1, -1}, {0, 4, 1},  {0, 5, -1}, {0, 6, -1}, {0, 7, -1}, {1, 2, 1},  {1, 5, 1},
                   {1, 6, 1},  {1, 7, 1},  {2, 3, -1}, {2, 4, -1}, {2, 5, -1}, {2, 7, -1}, {3, 4, -1},
                   {3, 5, -1}, {3, 6, -1}, {3, 7, -1}, {4, 6, 1},  {4, 7, 1},  {5, 6, 1}};
  }
  Drawing d = assemble_drawing(s);
  d.name = "eight-cycle-" + std::to_string(which);
  return d;
}

}  // namespace samples
