#pragma once

// Combinatorial maps on oriented surfaces.
//
// A map is a set of darts (half-edges) with two permutations: the edge
// pairing, fixed to 2i <-> 2i+1, and the rotation, whose cycles list the
// darts around each node in counterclockwise order. Faces are the orbits
// of the face permutation d -> rotation(pairing(d)); the face of dart d is
// the face lying on the right of d when travelling along it, and it is also
// the face containing the corner (angular sector) just clockwise of d.

#include <climits>
#include <cstdint>
#include <span>
#include <vector>

namespace thrackle {

using Dart = std::int32_t;
using NodeId = std::int32_t;

inline constexpr Dart kNoDart = -1;
inline constexpr NodeId kNoNode = -1;

constexpr Dart mate(Dart d) noexcept { return d ^ 1; }

class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  int dart_count() const noexcept { return static_cast<int>(next_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }
  int node_count() const noexcept { return static_cast<int>(first_.size()); }

  Dart next_ccw(Dart d) const { return next_[d]; }
  Dart prev_ccw(Dart d) const { return prev_[d]; }
  NodeId node_of(Dart d) const { return node_[d]; }
  Dart node_dart(NodeId v) const { return first_[v]; }
  int degree(NodeId v) const;

  // Next dart along the face on the right of d.
  Dart face_next(Dart d) const { return next_[mate(d)]; }

  // Darts around v in counterclockwise order, starting at node_dart(v).
  std::vector<Dart> darts_at(NodeId v) const;

  std::span<const Dart> rotation() const noexcept { return next_; }

  // Trusted constructor from a rotation permutation; node ids follow the
  // order of first appearance of each cycle when scanning darts 0,1,2,...
  // Throws MalformedPermutation if `next_ccw` is not a permutation of even
  // size. Connectivity is not checked here.
  static CombinatorialMap from_rotation(std::vector<Dart> next_ccw);

  // Same map with every rotation reversed (the mirror image).
  CombinatorialMap mirrored() const;

  // Relabels darts: dart d becomes perm[d]. perm must respect the pairing
  // (perm[mate(d)] == mate(perm[d])).
  CombinatorialMap relabeled(std::span<const Dart> perm) const;

  bool connected() const;

  friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
    return a.next_ == b.next_;
  }

 private:
  friend class MapBuilder;
  friend CombinatorialMap build_map(const std::vector<std::vector<Dart>>&, int);

  // Node v is the rotation cycle containing firsts[v].
  static CombinatorialMap assemble(std::vector<Dart> next_ccw, const std::vector<Dart>& firsts);

  std::vector<Dart> next_;
  std::vector<Dart> prev_;
  std::vector<NodeId> node_;
  std::vector<Dart> first_;
};

// Validated construction from explicit rotation cycles (one per node, in
// counterclockwise order). Node i is rotation_cycles[i].
// Errors: MalformedPermutation, Disconnected.
CombinatorialMap build_map(const std::vector<std::vector<Dart>>& rotation_cycles, int dart_count);

struct FaceStructure {
  std::vector<std::vector<Dart>> faces;
  std::vector<int> face_of;  // dart -> face index
  int euler_characteristic = 0;
  int genus = 0;
};

FaceStructure faces(const CombinatorialMap& map);

// Face index of every dart, faces numbered by smallest dart.
std::vector<int> face_index(const CombinatorialMap& map, int* face_count = nullptr);

int genus(const CombinatorialMap& map);

// ---------------------------------------------------------------------------
// Canonical codes

// Per-node colors plus optional per-face colors (indexed like face_index()).
struct Marks {
  std::vector<std::uint32_t> node_color;
  std::vector<std::uint32_t> face_color;
};

struct CanonicalCode {
  std::vector<std::uint32_t> code;
  std::vector<std::uint32_t> mirror_code;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

// Result of canonicalizing one orientation of a colored map.
struct CanonicalForm {
  std::vector<std::uint32_t> code;
  Dart root = kNoDart;
  // relabel[d] is the canonical label of dart d; pairing is preserved.
  std::vector<Dart> relabel;
};

// Canonical form of a map whose darts carry colors. The code is the
// lexicographically least traversal code over every root dart whose
// (color, node degree, face length) key is minimal; mirror traverses the
// reversed rotation.
CanonicalForm canonical_form(const CombinatorialMap& map, std::span<const std::uint32_t> dart_color,
                             bool mirror = false);

// Traversal code from a single root, as used inside canonical_form.
std::vector<std::uint32_t> rooted_code(const CombinatorialMap& map,
                                       std::span<const std::uint32_t> dart_color, Dart root,
                                       bool mirror = false);

// True iff the traversal from `root` yields the canonical code among all
// roots in `candidates` (ties count as canonical). Aborts comparisons early.
// With include_mirror, the mirrored traversals (colored by mirror_color,
// default dart_color) compete as well.
bool is_canonical_root(const CombinatorialMap& map, std::span<const std::uint32_t> dart_color,
                       Dart root, std::span<const Dart> candidates, bool include_mirror,
                       std::span<const std::uint32_t> mirror_color = {});

CanonicalCode canonical_code(const CombinatorialMap& map, const Marks& marks);

// ---------------------------------------------------------------------------
// Mutable map used by every local rewrite.
//
// Darts and edges are never renumbered while editing; deleted darts become
// dead slots and build() compacts. Each edge carries an integer tag, each
// dart a flag byte and each node a tag; new edges created by split_edge
// inherit the tag and flags of the edge they were split from.

struct Corner {
  NodeId node = kNoNode;
  // New dart goes immediately clockwise of `before` (i.e. between
  // prev_ccw(before) and before). kNoDart for a node without darts.
  Dart before = kNoDart;
};

class MapBuilder {
 public:
  MapBuilder() = default;
  explicit MapBuilder(const CombinatorialMap& map);

  int dart_capacity() const noexcept { return static_cast<int>(next_.size()); }
  int node_capacity() const noexcept { return static_cast<int>(first_.size()); }

  bool dart_alive(Dart d) const { return node_[d] != kNoNode; }
  bool node_alive(NodeId v) const { return node_tag_[v] != kDeadNode; }

  Dart next_ccw(Dart d) const { return next_[d]; }
  Dart prev_ccw(Dart d) const { return prev_[d]; }
  NodeId node_of(Dart d) const { return node_[d]; }
  Dart node_dart(NodeId v) const { return first_[v]; }
  Dart face_next(Dart d) const { return next_[mate(d)]; }
  int degree(NodeId v) const;

  std::int32_t edge_tag(Dart d) const { return edge_tag_[d >> 1]; }
  void set_edge_tag(Dart d, std::int32_t tag) { edge_tag_[d >> 1] = tag; }
  std::uint8_t dart_flag(Dart d) const { return flag_[d]; }
  void set_dart_flag(Dart d, std::uint8_t f) { flag_[d] = f; }
  std::int32_t node_tag(NodeId v) const { return node_tag_[v]; }
  void set_node_tag(NodeId v, std::int32_t tag) { node_tag_[v] = tag; }

  NodeId add_node(std::int32_t tag = 0);

  // Adds an edge between two corners; returns the dart at a.node (its mate
  // sits at b.node). When a and b are the same node and corner, the loop
  // is inserted with the returned dart clockwise-first.
  Dart add_edge(Corner a, Corner b, std::int32_t tag = 0);

  // Inserts a new node in the middle of the edge of d. d keeps its node;
  // mate(d) moves to the new node; a new pair continues to the far end.
  // Returns the new node; the new dart at it pointing away from d's node
  // is next_ccw(mate(d)).
  NodeId split_edge(Dart d, std::int32_t node_tag = 0);

  void remove_edge(Dart d);
  void remove_node(NodeId v);  // must have no darts

  // Dissolves a degree-2 node whose two darts lie on different edges. The
  // edge of `keep` (a dart at v) survives: `keep` moves into the rotation
  // slot of the other edge's far dart, which is deleted with its pair.
  void smooth(NodeId v, Dart keep);

  void reverse_rotations();

  // Compacts into an immutable map; optional maps old->new ids
  // (kNoDart / kNoNode for dead entries). Node order is preserved.
  CombinatorialMap build(std::vector<Dart>* dart_map = nullptr,
                         std::vector<NodeId>* node_map = nullptr) const;

  static constexpr std::int32_t kDeadNode = INT32_MIN;

 private:
  void unlink(Dart d);
  void link_before(Dart d, Corner c);

  std::vector<Dart> next_, prev_;
  std::vector<NodeId> node_;
  std::vector<std::uint8_t> flag_;
  std::vector<std::int32_t> edge_tag_;
  std::vector<Dart> first_;
  std::vector<std::int32_t> node_tag_;
};

}  // namespace thrackle
