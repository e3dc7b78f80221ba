#pragma once

// Built-in drawings and exhaustive generation of thrackled cycles.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thrackle/drawing.hpp"

namespace thrackle {

// Vertex i of the regular n-gon joined to vertex i + (n-1)/2, with the T_1
// scaffold on the outer face. Errors: EvenN.
Drawing standard_musquash(int n, bool with_scaffold = true);

// The six-cycle on three discs (one outer boundary, two holes).
Drawing pants_six_cycle();

struct MusquashCertificate {
  std::vector<int> order;  // k_1..k_{n-3} for e_0
  bool verdict = false;
};

// Errors: NotACycle.
MusquashCertificate is_musquash(const Drawing& d);

enum class ClassConstraint { None = 0, T1 = 1, T2 = 2, T3 = 3 };
enum class MirrorMode { Chiral, Achiral };

struct Census {
  int n = 0;
  ClassConstraint constraint = ClassConstraint::None;
  MirrorMode mode = MirrorMode::Achiral;
  std::vector<Drawing> reps;                 // sorted by code
  std::vector<std::vector<std::uint32_t>> codes;
  std::vector<std::vector<int>> reid_classes;  // indices into reps
  bool grouped = false;
};

struct EnumerateOptions {
  int threads = 0;          // 0: THRACKLE_THREADS or hardware concurrency
  std::int64_t node_limit = 0;  // 0: unlimited; ResourceLimit when exceeded
  bool group_reidemeister = true;
};

// Thrackled n-cycles up to isotopy (scaffolded isotopy under a class
// constraint). Errors: ResourceLimit.
Census enumerate_cycles(int n, ClassConstraint constraint, MirrorMode mode, const EnumerateOptions& opt = {});

// Brute force over crossing orders and signs; n <= 6. Errors: ResourceLimit.
Census oracle_enumerate(int n, MirrorMode mode = MirrorMode::Chiral);

enum class SmallShape { Theta, Dumbbell, Figure8 };

struct SmallGraphCensus {
  SmallShape shape = SmallShape::Theta;
  int size_limit = 0;
  ClassConstraint constraint = ClassConstraint::T3;
  std::vector<Drawing> hits;
  std::int64_t explored = 0;   // partial drawings visited
  std::vector<std::string> graphs;  // descriptions of the graphs searched
};

// Extends scaffolded drawings of six-cycles (and triangles for the
// dumbbell) by paths and cycles until the shape is complete.
SmallGraphCensus search_small_graphs(SmallShape shape, int size_limit, ClassConstraint constraint);

// Number of worker threads (THRACKLE_THREADS caps it).
int worker_threads(int requested = 0);

}  // namespace thrackle
