#include "gcond/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace gcond {

namespace {

// Backtracking over perfect matchings. Branches on the lowest-index uncovered
// vertex and tries its neighbors in ascending order, so leaves are visited in
// lexicographic order of sorted edge lists.
class MatchingSearch {
 public:
  MatchingSearch(const PlaneBipartiteGraph& g, bool skip_zero, bool prune)
      : g_(g), covered_(g.vertex_count(), false), prune_(prune) {
    usable_.resize(g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k)
      usable_[k] = !(skip_zero && g.edges()[k].weight.is_zero());
    free_deg_.assign(g.vertex_count(), 0);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (const auto& inc : g.incident(static_cast<int>(i)))
        if (usable_[static_cast<std::size_t>(inc.edge)]) ++free_deg_[i];
  }

  // Calls leaf(chosen edge indices) for every perfect matching.
  template <class Leaf>
  void run(Leaf&& leaf) {
    if (g_.color_count(0) != g_.color_count(1)) return;
    if (prune_)
      for (int d : free_deg_)
        if (d == 0) return;
    recurse(0, leaf);
  }

 private:
  template <class Leaf>
  void recurse(std::size_t from, Leaf& leaf) {
    while (from < covered_.size() && covered_[from]) ++from;
    if (from == covered_.size()) {
      leaf(chosen_);
      return;
    }
    const int u = static_cast<int>(from);
    for (const auto& inc : g_.incident(u)) {
      if (!usable_[static_cast<std::size_t>(inc.edge)] || covered_[static_cast<std::size_t>(inc.vertex)])
        continue;
      bool ok = cover_pair(u, inc.vertex, true);
      chosen_.push_back(inc.edge);
      if (ok || !prune_) recurse(from + 1, leaf);
      chosen_.pop_back();
      cover_pair(u, inc.vertex, false);
    }
  }

  // Covers (or uncovers) u and v and maintains the free degrees of their
  // neighbors. Returns false when an uncovered vertex is left with no free edge.
  bool cover_pair(int u, int v, bool on) {
    covered_[static_cast<std::size_t>(u)] = on;
    covered_[static_cast<std::size_t>(v)] = on;
    bool ok = true;
    for (int x : {u, v})
      for (const auto& inc : g_.incident(x)) {
        if (!usable_[static_cast<std::size_t>(inc.edge)]) continue;
        int& d = free_deg_[static_cast<std::size_t>(inc.vertex)];
        d += on ? -1 : 1;
        if (on && d == 0 && !covered_[static_cast<std::size_t>(inc.vertex)]) ok = false;
      }
    return ok;
  }

  const PlaneBipartiteGraph& g_;
  std::vector<bool> covered_;
  std::vector<bool> usable_;
  std::vector<int> free_deg_;
  std::vector<int> chosen_;
  bool prune_;
};

Kind weight_kind(const PlaneBipartiteGraph& g) {
  Kind k = Kind::Integer;
  for (const auto& e : g.edges()) k = common_kind(k, e.weight.kind());
  return k;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const PlaneBipartiteGraph& g) {
  std::vector<Matching> out;
  MatchingSearch search(g, false, false);
  search.run([&](const std::vector<int>& chosen) {
    Matching m;
    for (int k : chosen) {
      const Edge& e = g.edges()[static_cast<std::size_t>(k)];
      m.edges.push_back({e.u, e.v});
    }
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_matchings(const PlaneBipartiteGraph& g) {
  std::uint64_t n = 0;
  MatchingSearch search(g, false, true);
  search.run([&](const std::vector<int>&) { ++n; });
  return BigInt(static_cast<unsigned long>(n));
}

RingElem weighted_sum(const PlaneBipartiteGraph& g) {
  const Kind kind = weight_kind(g);
  if (kind == Kind::Integer && g.unit_weights()) return RingElem(count_matchings(g));
  RingElem total = RingElem::zero_of(kind);
  MatchingSearch search(g, true, true);
  search.run([&](const std::vector<int>& chosen) {
    RingElem prod = RingElem::one_of(kind);
    for (int k : chosen) prod *= g.edges()[static_cast<std::size_t>(k)].weight;
    total += prod;
  });
  return total;
}

RingElem matching_weight(const PlaneBipartiteGraph& g, const Matching& m) {
  RingElem prod = RingElem::one_of(weight_kind(g));
  for (const auto& [u, v] : m.edges) prod *= g.weight(u, v);
  return prod;
}

RingElem placement_probability(const PlaneBipartiteGraph& g, int u, int v) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || !g.has_edge(u, v))
    throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  BigInt total = count_matchings(g);
  if (total == 0) throw NoMatchings("graph has no perfect matching");
  BigInt with = count_matchings(delete_vertices(g, {u, v}));
  return RingElem::rational(with, total);
}

// ---------------------------------------------------------------- superposition

SuperpositionMultigraph::SuperpositionMultigraph(const PlaneBipartiteGraph& base,
                                                 std::map<EdgeKey, int> multiplicity, VertexSet marks)
    : base_(&base), mult_(std::move(multiplicity)), marks_(std::move(marks)) {
  std::map<int, int> degree;
  for (const auto& [e, m] : mult_) {
    if (m < 1 || m > 2) throw SuperpositionError("edge multiplicity must be 1 or 2");
    if (!base.has_edge(e.first, e.second)) throw SuperpositionError("edge not in base graph");
    degree[e.first] += m;
    degree[e.second] += m;
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
  for (const auto& v : base.vertices()) {
    int want = marks_.count(v.id) ? 1 : 2;
    if (degree[v.id] != want)
      throw SuperpositionError("vertex " + std::to_string(v.id) + " has degree " +
                               std::to_string(degree[v.id]) + ", expected " + std::to_string(want));
  }
  for (int m : marks_)
    if (!base.has_vertex(m)) throw SuperpositionError("mark is not a vertex of the base graph");
  for (auto& [v, list] : adj_) std::sort(list.begin(), list.end());
}

std::vector<int> SuperpositionMultigraph::neighbors(int v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? std::vector<int>{} : it->second;
}

SuperpositionMultigraph superimpose(const PlaneBipartiteGraph& g, const Matching& m1,
                                    const Matching& m2, const VertexSet& marks) {
  std::map<EdgeKey, int> mult;
  for (const auto& e : m1.edges) ++mult[edge_key(e.first, e.second)];
  for (const auto& e : m2.edges) ++mult[edge_key(e.first, e.second)];
  return SuperpositionMultigraph(g, std::move(mult), marks);
}

Decomposition decompose(const SuperpositionMultigraph& h) {
  Decomposition d;
  std::set<int> seen;
  for (const auto& [e, m] : h.multiplicity())
    if (m == 2) {
      d.doubled.push_back(e);
      seen.insert(e.first);
      seen.insert(e.second);
    }
  auto walk = [&](int start) {
    std::vector<int> seq{start};
    seen.insert(start);
    int prev = -1, cur = start;
    for (;;) {
      std::optional<int> next;
      for (int w : h.neighbors(cur))
        if (w != prev && !seen.count(w)) {
          next = w;
          break;
        }
      if (!next) break;
      prev = cur;
      cur = *next;
      seen.insert(cur);
      seq.push_back(cur);
    }
    return seq;
  };
  for (int m : h.marks()) {
    if (seen.count(m)) continue;
    auto path = walk(m);
    if (!h.marks().count(path.back()) || path.size() < 2)
      throw SuperpositionError("path from a mark does not end at a mark");
    d.paths.push_back(std::move(path));
  }
  for (const auto& v : h.base().vertices()) {
    if (seen.count(v.id)) continue;
    auto cyc = walk(v.id);
    if (cyc.size() < 4 || cyc.size() % 2 != 0) throw SuperpositionError("malformed cycle");
    d.cycles.push_back(std::move(cyc));
  }
  return d;
}

namespace {

// For each path, which side gets the first edge (0 = first matching).
std::optional<std::vector<int>> path_sides(const Decomposition& d, const SplitMode& mode) {
  std::vector<int> sides;
  for (const auto& p : d.paths) {
    // An endpoint deleted from the first graph is covered by the second matching.
    auto side_at = [&](int x) -> int {
      if (mode.first_deleted.count(x)) return 1;
      if (mode.second_deleted.count(x)) return 0;
      throw SuperpositionError("split mode does not cover mark " + std::to_string(x));
    };
    int s0 = side_at(p.front());
    std::size_t edges = p.size() - 1;
    int s_last = (edges % 2 == 1) ? s0 : 1 - s0;
    if (side_at(p.back()) != s_last) return std::nullopt;
    sides.push_back(s0);
  }
  return sides;
}

void check_mode(const SuperpositionMultigraph& h, const SplitMode& mode) {
  VertexSet all = mode.first_deleted;
  for (int x : mode.second_deleted)
    if (!all.insert(x).second) throw SuperpositionError("split mode sets overlap");
  if (all != h.marks()) throw SuperpositionError("split mode sets must partition the marks");
}

}  // namespace

BigInt repartition_count(const SuperpositionMultigraph& h, const SplitMode& mode) {
  check_mode(h, mode);
  Decomposition d = decompose(h);
  if (!path_sides(d, mode)) return 0;
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(d.cycles.size());
  return r;
}

std::vector<std::pair<Matching, Matching>> repartition(const SuperpositionMultigraph& h,
                                                       const SplitMode& mode) {
  check_mode(h, mode);
  Decomposition d = decompose(h);
  auto sides = path_sides(d, mode);
  if (!sides) return {};
  Matching base1, base2;
  for (const auto& e : d.doubled) {
    base1.edges.push_back(e);
    base2.edges.push_back(e);
  }
  auto alternate = [](const std::vector<int>& seq, bool closed, int first_side, Matching& m1,
                      Matching& m2) {
    std::size_t n = closed ? seq.size() : seq.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      EdgeKey e = edge_key(seq[i], seq[(i + 1) % seq.size()]);
      ((static_cast<int>(i % 2) == first_side) ? m1 : m2).edges.push_back(e);
    }
  };
  for (std::size_t p = 0; p < d.paths.size(); ++p) alternate(d.paths[p], false, (*sides)[p], base1, base2);

  std::vector<std::pair<Matching, Matching>> out;
  const std::size_t k = d.cycles.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Matching m1 = base1, m2 = base2;
    for (std::size_t c = 0; c < k; ++c) alternate(d.cycles[c], true, static_cast<int>((mask >> c) & 1u), m1, m2);
    std::sort(m1.edges.begin(), m1.edges.end());
    std::sort(m2.edges.begin(), m2.edges.end());
    out.emplace_back(std::move(m1), std::move(m2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RingElem superposition_weight(const SuperpositionMultigraph& h) {
  Kind kind = Kind::Integer;
  for (const auto& e : h.base().edges()) kind = common_kind(kind, e.weight.kind());
  RingElem prod = RingElem::one_of(kind);
  for (const auto& [e, m] : h.multiplicity()) {
    const RingElem& w = h.base().weight(e.first, e.second);
    prod *= (m == 2 ? w * w : w);
  }
  return prod;
}

}  // namespace gcond
