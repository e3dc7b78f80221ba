#pragma once

// Drawings of graphs on the sphere, stored as planarized maps.
//
// Every crossing of two edges is a degree-4 node of the map; every graph
// vertex is a node; each edge of the map ("segment") belongs to exactly one
// graph edge or to one scaffold circle. A scaffold materializes the discs of
// a T_d structure: disc k is a face of the map bounded by a closed chain of
// scaffold segments that passes through every graph vertex assigned to k.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thrackle/map.hpp"

namespace thrackle {

enum class NodeKind : std::uint8_t { Vertex, Crossing, ScaffoldPoint };

struct GraphEdge {
  int tail = -1;
  int head = -1;
  // Darts traversed from tail to head; darts[0] sits at the tail node, and
  // each later dart leaves the crossing reached by the previous one.
  std::vector<Dart> darts;
};

// Segment label of a scaffold segment on the circle of disc k.
constexpr int scaffold_label(int disc) { return -1 - disc; }
constexpr int disc_of_label(int label) { return -1 - label; }

class Drawing {
 public:
  CombinatorialMap map;
  std::vector<NodeKind> kind;        // per node
  std::vector<int> vertex_id;        // per node; -1 for non-vertices
  std::vector<NodeId> vertex_node;   // per graph vertex
  std::vector<int> segment;          // per map edge: graph edge, or scaffold_label(k)
  std::vector<std::uint8_t> disc_side;  // per dart: 1 iff the face on its right is a disc
  std::vector<GraphEdge> edges;
  int disc_count = 0;  // 0 = no scaffold
  std::string name;

  int vertex_count() const { return static_cast<int>(vertex_node.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_scaffold() const { return disc_count > 0; }

  int segment_of(Dart d) const { return segment[d >> 1]; }
  bool is_scaffold_dart(Dart d) const { return segment_of(d) < 0; }
  int crossing_count() const;

  // Graph degree of a vertex (scaffold darts excluded).
  int graph_degree(int v) const;

  // Disc of a vertex, or -1 when the vertex is not on a circle.
  int disc_of_vertex(int v) const;

  // Graph edges at a vertex in counterclockwise order, as darts at its node.
  std::vector<Dart> edge_darts_at(int v) const;

  // Index of the graph edge (and direction) of the dart leaving a vertex.
  int edge_of_dart(Dart d) const { return segment_of(d); }

  // Drawing with the scaffold removed (vertex and edge ids preserved).
  Drawing bare() const;
};

// Rebuilds `edges` from node kinds, vertex ids and segment labels. Edge
// tails are chosen so that edge i runs from edges[i].tail when given as a
// hint (hint may be empty, then the lower-numbered end is the tail).
void trace_edges(Drawing& d, std::span<const std::pair<int, int>> endpoint_hint = {});

// Full structural check; throws InvalidDrawing with a reason.
void check_structure(const Drawing& d);

struct ThrackleReport {
  struct Violation {
    int e = -1, f = -1;
    int meets = 0;
  };
  bool ok = false;
  std::vector<Violation> violations;
  int crossing_total = 0;
};

ThrackleReport validate_thrackle(const Drawing& d);

// C(m,2) - sum C(deg v, 2). Errors: NotAThrackle.
int crossing_count_formula(const Drawing& d);

struct DirectedEdge {
  int edge = -1;
  bool reversed = false;  // false = tail to head
};

// +1 iff the outgoing dart of `second` immediately follows that of `first`
// in the counterclockwise rotation at the crossing. Errors: EdgesDontCrossHere.
int crossing_sign(const Drawing& d, NodeId crossing, DirectedEdge first, DirectedEdge second);

// The crossing node of two edges, or kNoNode.
NodeId crossing_of(const Drawing& d, int e, int f);

// Vertex sequence of a cycle drawing, following edge order; edge i joins
// cycle[i] to cycle[i+1]. Errors: NotACycle. `edge_order` receives the edge
// ids in the same order, each paired with whether it is traversed backwards.
std::vector<int> cycle_vertices(const Drawing& d, std::vector<DirectedEdge>* edge_order = nullptr);

// Errors: NotACycle.
bool is_alternating(const Drawing& d);

// The same condition on any thrackle drawing: for every edge e and every
// two-path fg vertex-disjoint from e, e crosses f and g with opposite signs
// (f and g directed along the path).
bool alternation_holds(const Drawing& d);

// ---------------------------------------------------------------------------
// Editing through MapBuilder. Node tags hold the vertex id (>= 0) or one of
// the constants below; edge tags hold the segment label; dart flags hold
// disc_side.

inline constexpr std::int32_t kCrossingTag = -1;
inline constexpr std::int32_t kScaffoldPointTag = -2;

MapBuilder to_builder(const Drawing& d);

// Compacts a builder into a drawing. Vertex ids, graph edge ids and disc
// ids are renumbered in increasing order of their old values. When
// `orientation` is given, orientation[e] = (tail, head) in old vertex ids
// for old edge e, and traced edges follow it.
Drawing from_builder(const MapBuilder& b, std::span<const std::pair<int, int>> orientation = {});

// ---------------------------------------------------------------------------
// Construction from crossing data

struct EdgeIncidence {
  int edge = -1;
  bool at_tail = true;
};

struct DrawingSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // (tail, head)
  // Crossing ids met along each edge from tail to head.
  std::vector<std::vector<int>> routes;
  // Per crossing id: {e, f, crossing_sign of e and f directed tail to head}.
  std::vector<std::array<int, 3>> crossings;
  // Counterclockwise incidences per vertex; may be left empty for
  // vertices of degree at most 2.
  std::vector<std::vector<EdgeIncidence>> rotation;
};

// Nodes are the vertices 0..n-1 followed by the crossings in id order.
// The genus is not checked. Errors: InvalidDrawing, Disconnected.
Drawing assemble_drawing(const DrawingSpec& spec);

// Dart of an edge at one of its ends.
Dart incidence_dart(const Drawing& d, EdgeIncidence inc);

// ---------------------------------------------------------------------------
// Scaffolds

struct DiscSpec {
  int face = -1;  // face index (face_index numbering) of the bare drawing
  // Corners on that face, one per vertex: the dart of the face walk whose
  // preceding corner is used (the corner just clockwise of the dart).
  std::vector<Dart> corners;
};

// Builds the scaffolded drawing whose discs touch the given corners. Corners
// of one disc must be on its face, at distinct vertices; discs sharing a
// face must not interleave. Errors: NoScaffold.
Drawing attach_scaffold(const Drawing& bare, std::span<const DiscSpec> discs);

// Disc corners given by the dart bounding each corner on its
// counterclockwise side. Errors: NoScaffold.
struct CornerSpec {
  int vertex = -1;
  int disc = -1;
  EdgeIncidence before;
};
Drawing attach_scaffold(const Drawing& bare, std::span<const CornerSpec> corners);

// View of the scaffold of a drawing.
struct Scaffold {
  int d = 0;
  std::vector<std::vector<int>> circles;  // vertex ids in counterclockwise circle order
  std::vector<int> disc_faces;            // face index of each disc interior
  std::vector<int> assignment;            // vertex -> disc
};

Scaffold scaffold_of(const Drawing& d);

// All scaffolds with the minimal number d <= d_max of discs, one drawing
// per isotopy class of scaffolded drawing. Empty when none exists.
std::vector<Drawing> classify_td(const Drawing& bare, int d_max);

// Smallest d <= d_max with a T_d structure, or 0 when there is none.
int minimal_class(const Drawing& bare, int d_max);

// All scaffolded drawings with exactly d discs (all corner choices).
std::vector<Drawing> scaffolds_with(const Drawing& bare, int d);

// ---------------------------------------------------------------------------
// Codes

// Node colors: vertex 0, crossing 1, scaffold point 2. Segment colors enter
// through dart colors (graph segment vs circle segment, disc side).
std::vector<std::uint32_t> dart_colors(const Drawing& d);

// Orientation-preserving canonical code (scaffold included when present).
std::vector<std::uint32_t> drawing_code(const Drawing& d);
std::vector<std::uint32_t> mirror_drawing_code(const Drawing& d);
// Smaller of code and mirror code.
std::vector<std::uint32_t> achiral_code(const Drawing& d);

Drawing mirror(const Drawing& d);

// ---------------------------------------------------------------------------
// Words

enum class TurnSign : std::int8_t { None = 0, Plus = 1, Minus = -1, Ambiguous = 2 };

struct Word {
  std::vector<int> letters;
  std::vector<TurnSign> signs;  // empty when unsigned
  bool cyclic = true;

  std::string str() const;
  friend bool operator==(const Word&, const Word&) = default;
};

// Parses "b-c+a-b+c-a+" or "aabab"; letters a,b,c,... Errors: ParseError.
Word parse_word(std::string_view text, bool cyclic = true);

// Word of a walk given as a vertex sequence; when walk.front() == walk.back()
// the walk is a closed cycle and the repeated vertex appears once.
// Errors: WalkNotInGraph, NoScaffold.
Word word_of(const Drawing& d, std::span<const int> walk, bool signed_word);

// Turn sign of the path t_in -> v -> t_out, with darts at v's node.
TurnSign turn_sign(const Drawing& d, Dart t_in, Dart t_out);

// Cyclic words compared up to rotation and reversal (reversal flips signs);
// relabel also allows any permutation of letters.
bool words_equivalent(const Word& a, const Word& b, bool relabel);

enum class WordPattern {
  NoTwoDiscSquares,
  NoTripleRepeat,
  AnnularOddForm,
  PantsAbcPower,
  NoCabaBaca,
  AlternatingSigns,
};

// True iff every word satisfies the pattern; NoTwoDiscSquares is judged
// across all words together.
bool word_form_check(std::span<const Word> words, WordPattern pattern);
bool word_form_check(const Word& word, WordPattern pattern);

// (p, r) with word = a^{2p} (ba)^r b up to rotation, reversal and renaming.
std::optional<std::pair<int, int>> annular_form(const Word& w);
// m with word = (abc)^m up to rotation, reversal and renaming.
std::optional<int> abc_power(const Word& w);

}  // namespace thrackle
