#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcond/exact.hpp"
#include "gcond/plane_graph.hpp"

namespace gcond {

class NoMatchings : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SuperpositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A perfect matching as its sorted edge list.
struct Matching {
  std::vector<EdgeKey> edges;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

// All perfect matchings in lexicographic order of their sorted edge lists.
std::vector<Matching> enumerate_matchings(const PlaneBipartiteGraph& g);

// Sum over perfect matchings of the product of edge weights. Edges of weight
// zero are skipped since they cannot contribute.
RingElem weighted_sum(const PlaneBipartiteGraph& g);

// Number of perfect matchings, ignoring weights. Prunes branches in which an
// uncovered vertex has lost all its available neighbors.
BigInt count_matchings(const PlaneBipartiteGraph& g);

// Weight of a single matching.
RingElem matching_weight(const PlaneBipartiteGraph& g, const Matching& m);

// M(G - {u,v}) / M(G) as an exact rational.
RingElem placement_probability(const PlaneBipartiteGraph& g, int u, int v);

// Overlay of two matchings. Vertices covered once are marked, all others are
// covered twice.
class SuperpositionMultigraph {
 public:
  SuperpositionMultigraph(const PlaneBipartiteGraph& base, std::map<EdgeKey, int> multiplicity,
                          VertexSet marks);

  const PlaneBipartiteGraph& base() const { return *base_; }
  const std::map<EdgeKey, int>& multiplicity() const { return mult_; }
  const VertexSet& marks() const { return marks_; }

  // Neighbors of a vertex in H, each listed once.
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const SuperpositionMultigraph& x, const SuperpositionMultigraph& y) {
    return x.mult_ == y.mult_ && x.marks_ == y.marks_;
  }

 private:
  const PlaneBipartiteGraph* base_;
  std::map<EdgeKey, int> mult_;
  VertexSet marks_;
  std::map<int, std::vector<int>> adj_;
};

SuperpositionMultigraph superimpose(const PlaneBipartiteGraph& g, const Matching& m1,
                                    const Matching& m2, const VertexSet& marks);

struct Decomposition {
  std::vector<std::vector<int>> cycles;  // closed vertex sequences, first vertex not repeated
  std::vector<EdgeKey> doubled;
  std::vector<std::vector<int>> paths;   // vertex sequences from mark to mark
};

Decomposition decompose(const SuperpositionMultigraph& h);

// A way to split H into a matching of G - first_deleted and a matching of
// G - second_deleted. The two sets partition the marks.
struct SplitMode {
  std::string label;
  VertexSet first_deleted;
  VertexSet second_deleted;
};

std::vector<std::pair<Matching, Matching>> repartition(const SuperpositionMultigraph& h,
                                                       const SplitMode& mode);

// Number of pairs repartition would return: 0, or 2^k for k cycles.
BigInt repartition_count(const SuperpositionMultigraph& h, const SplitMode& mode);

// Product of edge weights of H with multiplicity.
RingElem superposition_weight(const SuperpositionMultigraph& h);

}  // namespace gcond
