#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcond/exact.hpp"
#include "gcond/oracle.hpp"
#include "gcond/plane_graph.hpp"
#include "gcond/regions.hpp"

namespace gcond {

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A recurrence produced a non-exact quotient or a check that must hold failed.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------- bilinear identities

// Anchor subsets as bitmasks over the quad positions: bit 0 = a, 1 = b, 2 = c, 3 = d.
struct DeletionPair {
  unsigned first;
  unsigned second;
};

// W(first) W(second) of the left side equals the sum over the two right terms.
struct BilinearForm {
  DeletionPair lhs;
  std::array<DeletionPair, 2> rhs;
};

const BilinearForm& bilinear_form(AnchorPattern p);
VertexSet quad_subset(const AnchorQuad& q, unsigned mask);
std::string quad_subset_name(unsigned mask);

struct IdentityReport {
  AnchorPattern pattern = AnchorPattern::ACBD;
  std::vector<std::pair<std::string, RingElem>> terms;  // e.g. "W(G-{a,b})"
  RingElem lhs, rhs;
  bool holds = false;
};

IdentityReport verify_bilinear(const PlaneBipartiteGraph& g, const AnchorQuad& quad);

// Split modes of the pattern's left side and its two right terms.
struct PatternModes {
  SplitMode lhs;
  std::array<SplitMode, 2> rhs;
};
PatternModes pattern_modes(AnchorPattern p, const AnchorQuad& quad);

// Superposition check of a bilinear identity: every superposition H of a
// left-side pair has exactly one feasible right-side split, both sides yield
// the same set of H with 2^k pairs each, and the weighted totals agree.
struct MechanicsReport {
  AnchorPattern pattern = AnchorPattern::ACBD;
  std::size_t distinct_h = 0;
  BigInt lhs_pairs, rhs_pairs;
  RingElem lhs_total, rhs_total;  // sums of 2^k w(H)
  IdentityReport products;
  bool holds = false;
};

MechanicsReport verify_superposition(const PlaneBipartiteGraph& g, const AnchorQuad& quad);

struct AltCycleReport {
  std::array<int, 4> face{};
  RingElem alternating;  // 2 M(G - abcd) / M(G)
  RingElem predicted;    // 2 (p(ab) p(cd) + p(bc) p(da))
  bool holds = false;
};

AltCycleReport verify_alternating_cycle(const PlaneBipartiteGraph& g, int face_index);
// A declared 4-face nearest the centroid of the vertices, or -1.
int central_four_face(const PlaneBipartiteGraph& g);

// ---------------------------------------------------------------- recurrence solvers

enum class Method { Oracle, Recurrence, Formula };
std::string to_string(Method m);

struct RecursionStats {
  std::size_t memo_size = 0;
  std::size_t base_case_hits = 0;
};

struct CountReport {
  RegionSpec region;
  RingElem value;
  Method method = Method::Recurrence;
  RecursionStats stats;
};

CountReport aztec_rec(int n);
CountReport holey_rect_rec(int n, int a, int b);
CountReport weighted_aztec_rec(const AztecDiamond& diamond);

struct FortressRow {
  int k = 0;
  RingElem a;  // A_{2k+1}
  RingElem b;  // B_{2k+1}
  RingElem c;  // C_{2k}
};
std::vector<FortressRow> fortress_rec(int k_max);

CountReport macmahon_rec(int r, int s, int t);
CountReport tcpp_rec(int r, int t);

// ---------------------------------------------------------------- identity checks

struct RelationCheck {
  bool applicable = false;
  RingElem lhs, rhs;
  bool holds = false;
};

struct PpRelationsReport {
  RelationCheck first;          // P(r+2,s,t)P(r,s,t) relation
  RelationCheck second;         // P(r,s,t+1)P(r,s,t) relation
  RelationCheck limit_plain;    // with N(r-1,s,t)
  RelationCheck limit_shifted;  // with N(r-1,s,t+1)
};

PpRelationsReport verify_pp_relations(int r, int s, int t);

struct PythagoreanReport {
  RingElem t1, t2, t3;
  bool holds = false;
  // The same relation as a four-anchor identity; absent when the anchors
  // share no face.
  std::optional<IdentityReport> bilinear;
};

PythagoreanReport verify_pythagorean(int n);

struct Domino {
  Cell a, b;
};

struct PlacementReport {
  // T(A_n - D), T(A_{n-2} - D), T(A_{n-1} - D_up), _down, _left, _right
  std::array<RingElem, 6> counts;
  bool counts_hold = false;
  RingElem prob_lhs, prob_rhs;
  bool probabilities_hold = false;
};

bool placement_admissible(int n, const Domino& d);
std::vector<Domino> admissible_dominoes(int n);
PlacementReport verify_placement_recurrence(int n, const Domino& d);

struct FibonacciReport {
  IdentityReport bilinear;
  RingElem lhs, rhs;  // closed-form sides
  bool holds = false;
};

AnchorQuad fibonacci_quad(int n, int i, int j);
FibonacciReport verify_fibonacci_identity(int n, int i, int j);

}  // namespace gcond
