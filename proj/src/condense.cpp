#include "gcond/condense.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gcond/formulas.hpp"

namespace gcond {

namespace {

constexpr unsigned A = 1, B = 2, C = 4, D = 8;

RingElem divide_or_flag(const RingElem& x, const RingElem& y, const std::string& where) {
  try {
    return exact_div(x, y);
  } catch (const InexactDivision& e) {
    throw IdentityViolation(where + ": " + e.what());
  }
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Recurrence: return "recurrence";
    case Method::Formula: return "formula";
  }
  return "?";
}

// ---------------------------------------------------------------- bilinear identities

const BilinearForm& bilinear_form(AnchorPattern p) {
  static const BilinearForm acbd{{0, A | B | C | D}, {{{A | B, C | D}, {A | D, B | C}}}};
  static const BilinearForm abcd{{A | D, B | C}, {{{0, A | B | C | D}, {A | C, B | D}}}};
  static const BilinearForm abc_d{{B, A | C | D}, {{{A, B | C | D}, {C, A | B | D}}}};
  static const BilinearForm all4{{A | C, B | D}, {{{A | B, C | D}, {A | D, B | C}}}};
  switch (p) {
    case AnchorPattern::ACBD: return acbd;
    case AnchorPattern::ABCD: return abcd;
    case AnchorPattern::ABC_D: return abc_d;
    case AnchorPattern::ALL4: return all4;
  }
  return acbd;
}

VertexSet quad_subset(const AnchorQuad& q, unsigned mask) {
  VertexSet s;
  if (mask & A) s.insert(q.a);
  if (mask & B) s.insert(q.b);
  if (mask & C) s.insert(q.c);
  if (mask & D) s.insert(q.d);
  return s;
}

std::string quad_subset_name(unsigned mask) {
  if (mask == 0) return "W(G)";
  std::string s = "W(G-{";
  bool first = true;
  for (unsigned bit = 0; bit < 4; ++bit)
    if (mask & (1u << bit)) {
      if (!first) s += ",";
      s += static_cast<char>('a' + bit);
      first = false;
    }
  return s + "})";
}

IdentityReport verify_bilinear(const PlaneBipartiteGraph& g, const AnchorQuad& quad) {
  IdentityReport rep;
  rep.pattern = classify_anchors(g, quad);
  const BilinearForm& form = bilinear_form(rep.pattern);
  std::map<unsigned, RingElem> value;
  auto w = [&](unsigned mask) -> const RingElem& {
    auto it = value.find(mask);
    if (it == value.end()) {
      it = value.emplace(mask, weighted_sum(delete_vertices(g, quad_subset(quad, mask)))).first;
      rep.terms.emplace_back(quad_subset_name(mask), it->second);
    }
    return it->second;
  };
  rep.lhs = w(form.lhs.first) * w(form.lhs.second);
  rep.rhs = w(form.rhs[0].first) * w(form.rhs[0].second) + w(form.rhs[1].first) * w(form.rhs[1].second);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

PatternModes pattern_modes(AnchorPattern p, const AnchorQuad& quad) {
  const BilinearForm& f = bilinear_form(p);
  auto mode = [&](const DeletionPair& dp) {
    return SplitMode{quad_subset_name(dp.first) + "*" + quad_subset_name(dp.second), quad_subset(quad, dp.first),
                     quad_subset(quad, dp.second)};
  };
  return {mode(f.lhs), {mode(f.rhs[0]), mode(f.rhs[1])}};
}

MechanicsReport verify_superposition(const PlaneBipartiteGraph& g, const AnchorQuad& quad) {
  MechanicsReport rep;
  rep.products = verify_bilinear(g, quad);
  rep.pattern = rep.products.pattern;
  PatternModes modes = pattern_modes(rep.pattern, quad);
  const VertexSet marks = quad_subset(quad, A | B | C | D);

  using Key = std::map<EdgeKey, int>;
  // Superpositions produced by one product of matching sets, with multiplicity.
  auto collect = [&](const SplitMode& m, std::map<Key, BigInt>& into) -> BigInt {
    auto first = enumerate_matchings(delete_vertices(g, m.first_deleted));
    auto second = enumerate_matchings(delete_vertices(g, m.second_deleted));
    for (const auto& m1 : first)
      for (const auto& m2 : second) into[superimpose(g, m1, m2, marks).multiplicity()] += 1;
    return BigInt(static_cast<unsigned long>(first.size())) * BigInt(static_cast<unsigned long>(second.size()));
  };

  std::map<Key, BigInt> left, right;
  rep.lhs_pairs = collect(modes.lhs, left);
  rep.rhs_pairs = collect(modes.rhs[0], right) + collect(modes.rhs[1], right);
  rep.distinct_h = left.size();

  bool ok = left.size() == right.size();
  Kind kind = Kind::Integer;
  for (const auto& e : g.edges()) kind = common_kind(kind, e.weight.kind());
  rep.lhs_total = RingElem::zero_of(kind);
  rep.rhs_total = RingElem::zero_of(kind);
  for (const auto& [key, count] : left) {
    SuperpositionMultigraph h(g, key, marks);
    BigInt ways = repartition_count(h, modes.lhs);
    BigInt r0 = repartition_count(h, modes.rhs[0]);
    BigInt r1 = repartition_count(h, modes.rhs[1]);
    if (ways != count || ways == 0) ok = false;
    if ((r0 == 0) == (r1 == 0)) ok = false;  // exactly one split is feasible
    if (r0 + r1 != ways) ok = false;
    auto it = right.find(key);
    if (it == right.end() || it->second != ways) ok = false;
    rep.lhs_total += RingElem(ways) * superposition_weight(h);
  }
  for (const auto& [key, count] : right) {
    SuperpositionMultigraph h(g, key, marks);
    rep.rhs_total += RingElem(count) * superposition_weight(h);
  }
  ok = ok && rep.lhs_total == rep.products.lhs && rep.rhs_total == rep.products.rhs;
  rep.holds = ok && rep.products.holds;
  return rep;
}

// ---------------------------------------------------------------- alternating cycle

int central_four_face(const PlaneBipartiteGraph& g) {
  const auto& faces = g.faces();
  const long nv = static_cast<long>(g.vertex_count());
  if (nv == 0) return -1;
  long sx = 0, sy = 0;
  for (const auto& v : g.vertices()) {
    sx += v.x;
    sy += v.y;
  }
  int best = -1;
  long long best_d = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].size() != 4) continue;
    long fx = 0, fy = 0;
    for (int id : faces[f]) {
      fx += g.vertex(id).x;
      fy += g.vertex(id).y;
    }
    long long dx = static_cast<long long>(fx) * nv - 4LL * sx;
    long long dy = static_cast<long long>(fy) * nv - 4LL * sy;
    long long d = dx * dx + dy * dy;
    if (best < 0 || d < best_d) {
      best = static_cast<int>(f);
      best_d = d;
    }
  }
  return best;
}

AltCycleReport verify_alternating_cycle(const PlaneBipartiteGraph& g, int face_index) {
  if (face_index < 0 || face_index >= static_cast<int>(g.faces().size()))
    throw std::invalid_argument("face index " + std::to_string(face_index) + " is not declared");
  const Face& f = g.faces()[static_cast<std::size_t>(face_index)];
  if (f.size() != 4) throw std::invalid_argument("face " + std::to_string(face_index) + " is not a 4-cycle");
  AltCycleReport rep;
  std::copy(f.begin(), f.end(), rep.face.begin());
  const auto [a, b, c, d] = rep.face;
  BigInt total = count_matchings(g);
  if (total == 0) throw NoMatchings("graph has no perfect matching");
  BigInt rest = count_matchings(delete_vertices(g, {a, b, c, d}));
  rep.alternating = RingElem::rational(2 * rest, total);
  rep.predicted = RingElem(BigRat(2)) * (placement_probability(g, a, b) * placement_probability(g, c, d) +
                                         placement_probability(g, b, c) * placement_probability(g, d, a));
  rep.holds = rep.alternating == rep.predicted;
  return rep;
}

// ---------------------------------------------------------------- Aztec diamonds

CountReport aztec_rec(int n) {
  if (n < 0) throw std::invalid_argument("aztec_rec needs n >= 0");
  CountReport rep{RegionSpec{Family::AztecDiamond, {n}, Weighting::Unit}, RingElem(1), Method::Recurrence, {}};
  RingElem prev(1), cur(2);
  rep.stats.base_case_hits = n == 0 ? 1 : 2;
  for (int k = 2; k <= n; ++k) {
    RingElem next = divide_or_flag(RingElem(2) * cur * cur, prev, "aztec_rec");
    prev = cur;
    cur = next;
  }
  rep.value = n == 0 ? prev : cur;
  rep.stats.memo_size = static_cast<std::size_t>(n) + 1;
  return rep;
}

namespace {

class HoleyRectangleSolver {
 public:
  RingElem solve(int n, int a, int b) {
    if (a < 0 || b < 0 || a > n || b > n)
      throw RegionError("hole (" + std::to_string(a) + "," + std::to_string(b) + ") is outside R_" + std::to_string(n));
    auto key = std::make_tuple(n, a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RingElem v = compute(n, a, b);
    memo_.emplace(key, v);
    return v;
  }

  RecursionStats stats() const { return {memo_.size(), base_hits_}; }

 private:
  RingElem diamond(int n) { return aztec_rec(n).value; }

  RingElem compute(int n, int a, int b) {
    if (n <= 2) {
      ++base_hits_;
      return RingElem(count_matchings(aztec_rectangle(n, std::pair{a, b})));
    }
    if (b == n) b = 0;  // reflection b -> n - b
    if (b == 0) {
      if (a == 0) a = n;  // reflection a -> n - a
      RingElem upper = a == n ? RingElem(0) : solve(n - 1, a, 0);
      RingElem num = (upper + solve(n - 1, a - 1, 0)) * diamond(n);
      return divide_or_flag(num, diamond(n - 1), "holey_rect_rec boundary hole");
    }
    if (a == 0 || a == n) {
      // The squares along the hole's side are forced; what remains is A_n.
      return diamond(n);
    }
    RingElem num = solve(n - 1, a, b - 1) * solve(n - 1, a - 1, b) + solve(n - 1, a, b) * solve(n - 1, a - 1, b - 1);
    return divide_or_flag(num, solve(n - 2, a - 1, b - 1), "holey_rect_rec interior hole");
  }

  std::map<std::tuple<int, int, int>, RingElem> memo_;
  std::size_t base_hits_ = 0;
};

}  // namespace

CountReport holey_rect_rec(int n, int a, int b) {
  if (n < 0) throw RegionError("rectangle order must be nonnegative");
  HoleyRectangleSolver solver;
  RingElem v = solver.solve(n, a, b);
  return {RegionSpec{Family::AztecRectangle, {n, a, b}, Weighting::Unit}, v, Method::Recurrence, solver.stats()};
}

namespace {

class WeightedDiamondSolver {
 public:
  explicit WeightedDiamondSolver(const AztecDiamond& d) : d_(d) {
    kind_ = Kind::Integer;
    for (const auto& e : d.graph.edges()) kind_ = common_kind(kind_, e.weight.kind());
  }

  RingElem solve(int cx, int cy, int m) {
    auto key = std::make_tuple(cx, cy, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RingElem v = compute(cx, cy, m);
    memo_.emplace(key, v);
    return v;
  }

  RecursionStats stats() const { return {memo_.size(), base_hits_}; }

 private:
  RingElem w(int x1, int y1, int x2, int y2) const {
    auto u = d_.vertex_at({x1, y1}), v = d_.vertex_at({x2, y2});
    return d_.graph.weight(*u, *v);
  }

  RingElem compute(int cx, int cy, int m) {
    if (m == 0) {
      ++base_hits_;
      return RingElem::one_of(kind_);
    }
    const int e = 2 * m - 1;
    RingElem t = w(cx - 1, cy + e, cx + 1, cy + e);
    RingElem b = w(cx - 1, cy - e, cx + 1, cy - e);
    RingElem l = w(cx - e, cy - 1, cx - e, cy + 1);
    RingElem r = w(cx + e, cy - 1, cx + e, cy + 1);
    if (m == 1) {
      ++base_hits_;
      return RingElem::one_of(kind_) * (t * b + l * r);
    }
    RingElem mid = solve(cx, cy, m - 2);
    if (mid.is_zero())
      throw NotApplicable("a central sub-diamond has zero weighted sum; use the oracle");
    RingElem num = l * r * solve(cx, cy + 2, m - 1) * solve(cx, cy - 2, m - 1) +
                   t * b * solve(cx - 2, cy, m - 1) * solve(cx + 2, cy, m - 1);
    return divide_or_flag(num, mid, "weighted_aztec_rec");
  }

  const AztecDiamond& d_;
  Kind kind_;
  std::map<std::tuple<int, int, int>, RingElem> memo_;
  std::size_t base_hits_ = 0;
};

}  // namespace

CountReport weighted_aztec_rec(const AztecDiamond& diamond) {
  WeightedDiamondSolver solver(diamond);
  RingElem v = solver.solve(0, 0, diamond.order);
  return {RegionSpec{Family::AztecDiamond, {diamond.order}, diamond.weighting}, v, Method::Recurrence,
          solver.stats()};
}

std::vector<FortressRow> fortress_rec(int k_max) {
  if (k_max < 1) throw std::invalid_argument("fortress_rec needs k_max >= 1");
  auto oracle = [](int n, Weighting w) {
    return RingElem(weighted_sum(aztec_diamond(n, w).graph).to_rational());
  };
  const RingElem quarter = RingElem::rational(1, 4), half = RingElem::rational(1, 2), two(BigRat(2));
  RingElem a_prev = oracle(1, Weighting::Fortress1);
  RingElem b_prev = oracle(1, Weighting::Fortress2);
  RingElem c_prev = oracle(0, Weighting::Fortress3);
  RingElem c = oracle(2, Weighting::Fortress3);
  std::vector<FortressRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) c = exact_div(quarter * a_prev * a_prev + b_prev * b_prev, c_prev);
    RingElem a = exact_div(two * c * c, a_prev);
    RingElem b = exact_div(half * c * c, b_prev);
    rows.push_back({k, a, b, c});
    a_prev = a;
    b_prev = b;
    c_prev = c;
  }
  return rows;
}

// ---------------------------------------------------------------- plane partitions

namespace {

class MacMahonSolver {
 public:
  RingElem solve(int r, int s, int t) {
    auto key = std::make_tuple(r, s, t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RingElem v = compute(r, s, t);
    memo_.emplace(key, v);
    return v;
  }
  RecursionStats stats() const { return {memo_.size(), base_hits_}; }

 private:
  RingElem compute(int r, int s, int t) {
    if (r == 0 || s == 0 || t == 0) {
      ++base_hits_;
      RingElem w = weighted_sum(hexagon_q(r, s, t));
      return divide_or_flag(w, RingElem::q_power(r * s * (s - 1) / 2), "macmahon_rec base");
    }
    RingElem num = RingElem::q_power(t) * solve(r - 1, s, t) * solve(r, s - 1, t) +
                   solve(r, s, t - 1) * solve(r - 1, s - 1, t + 1);
    return divide_or_flag(num, solve(r - 1, s - 1, t), "macmahon_rec");
  }

  std::map<std::tuple<int, int, int>, RingElem> memo_;
  std::size_t base_hits_ = 0;
};

class TcppSolver {
 public:
  RingElem solve(int r, int t) {
    auto key = std::make_pair(r, t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RingElem v = compute(r, t);
    memo_.emplace(key, v);
    return v;
  }
  RecursionStats stats() const { return {memo_.size(), base_hits_}; }

 private:
  RingElem compute(int r, int t) {
    if (t == 0 || r <= 1) {
      ++base_hits_;
      return RingElem(count_matchings(tcpp_region(r, t).graph));
    }
    RingElem prev = solve(r - 1, t);
    RingElem num = prev * prev + solve(r, t - 1) * solve(r - 2, t + 1);
    return divide_or_flag(num, solve(r - 2, t), "tcpp_rec");
  }

  std::map<std::pair<int, int>, RingElem> memo_;
  std::size_t base_hits_ = 0;
};

}  // namespace

CountReport macmahon_rec(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("macmahon_rec needs nonnegative box sides");
  MacMahonSolver solver;
  RingElem v = solver.solve(r, s, t);
  return {RegionSpec{Family::HexagonQ, {r, s, t}, Weighting::QDiagonal}, v, Method::Recurrence, solver.stats()};
}

CountReport tcpp_rec(int r, int t) {
  if (r < 0 || t < 0) throw std::invalid_argument("tcpp_rec needs nonnegative parameters");
  TcppSolver solver;
  RingElem v = solver.solve(r, t);
  return {RegionSpec{Family::TcppRegion, {r, t}, Weighting::Unit}, v, Method::Recurrence, solver.stats()};
}

PpRelationsReport verify_pp_relations(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("verify_pp_relations needs nonnegative indices");
  PpRelationsReport rep;
  auto P = [](int x, int y, int z) { return macmahon_P(x, y, z); };
  auto N = [](int x, int y, int z) { return macmahon_N(x, y, z); };
  auto finish = [](RelationCheck& c) { c.holds = c.lhs == c.rhs; };
  if (s >= 1 && t >= 1) {
    rep.first.applicable = true;
    rep.first.lhs = P(r + 2, s, t) * P(r, s, t);
    RingElem p = P(r + 1, s, t);
    rep.first.rhs = p * p - RingElem::q_power(r + 1) * P(r + 1, s - 1, t + 1) * P(r + 1, s + 1, t - 1);
    finish(rep.first);
  }
  if (r >= 1 && s >= 1) {
    rep.second.applicable = true;
    rep.second.lhs = P(r, s, t + 1) * P(r, s, t);
    rep.second.rhs = P(r + 1, s, t) * P(r - 1, s, t + 1) + RingElem::q_power(r) * P(r, s + 1, t) * P(r, s - 1, t + 1);
    finish(rep.second);

    RingElem lhs = N(r, s, t + 1) * N(r, s, t);
    RingElem tail = N(r, s + 1, t) * N(r, s - 1, t + 1);
    rep.limit_plain = {true, lhs, N(r + 1, s, t) * N(r - 1, s, t) + tail, false};
    rep.limit_shifted = {true, lhs, N(r + 1, s, t) * N(r - 1, s, t + 1) + tail, false};
    finish(rep.limit_plain);
    finish(rep.limit_shifted);
  }
  return rep;
}

// ---------------------------------------------------------------- trominoes

PythagoreanReport verify_pythagorean(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("verify_pythagorean needs an even n >= 2");
  PythagoreanReport rep;
  rep.t1 = RingElem(count_matchings(tromino_region(n, Tromino::T1)));
  rep.t2 = RingElem(count_matchings(tromino_region(n, Tromino::T2)));
  rep.t3 = RingElem(count_matchings(tromino_region(n, Tromino::T3)));
  PlaneBipartiteGraph base = tromino_base(n);
  if (base.anchor()) rep.bilinear = verify_bilinear(base, *base.anchor());
  rep.holds = rep.t1 * rep.t1 + rep.t2 * rep.t2 == rep.t3 * rep.t3;
  return rep;
}

// ---------------------------------------------------------------- placement

namespace {

bool in_diamond(const Cell& c, int m) { return m >= 0 && std::abs(c.x) + std::abs(c.y) <= 2 * m; }

bool is_domino(const Domino& d) {
  int dx = std::abs(d.a.x - d.b.x), dy = std::abs(d.a.y - d.b.y);
  return (dx == 2 && dy == 0) || (dx == 0 && dy == 2);
}

Domino shifted(const Domino& d, int dx, int dy) {
  return {{d.a.x + dx, d.a.y + dy}, {d.b.x + dx, d.b.y + dy}};
}

RingElem count_without(int m, const Domino& d) {
  AztecDiamond ad = aztec_diamond(m);
  auto u = ad.vertex_at(d.a), v = ad.vertex_at(d.b);
  if (!u || !v) throw NotApplicable("domino lies outside the order-" + std::to_string(m) + " diamond");
  return RingElem(count_matchings(delete_vertices(ad.graph, {*u, *v})));
}

}  // namespace

bool placement_admissible(int n, const Domino& d) {
  return n >= 3 && is_domino(d) && in_diamond(d.a, n - 2) && in_diamond(d.b, n - 2);
}

std::vector<Domino> admissible_dominoes(int n) {
  std::vector<Domino> out;
  if (n < 3) return out;
  AztecDiamond ad = aztec_diamond(n - 2);
  for (const auto& e : ad.graph.edges()) out.push_back({ad.cell_of(e.u), ad.cell_of(e.v)});
  return out;
}

PlacementReport verify_placement_recurrence(int n, const Domino& d) {
  if (n < 3) throw std::invalid_argument("placement recurrence needs n >= 3");
  if (!is_domino(d)) throw std::invalid_argument("cells do not form a domino");
  if (!in_diamond(d.a, n) || !in_diamond(d.b, n)) throw NotApplicable("domino lies outside A_n");
  if (!placement_admissible(n, d))
    throw NotApplicable("a shifted domino or the domino itself falls outside a smaller diamond");
  PlacementReport rep;
  rep.counts = {count_without(n, d),
                count_without(n - 2, d),
                count_without(n - 1, shifted(d, 0, 2)),
                count_without(n - 1, shifted(d, 0, -2)),
                count_without(n - 1, shifted(d, -2, 0)),
                count_without(n - 1, shifted(d, 2, 0))};
  const auto& c = rep.counts;
  rep.counts_hold = c[0] * c[1] == c[2] * c[3] + c[4] * c[5];

  auto prob = [](const RingElem& count, int m) {
    return RingElem::rational(count.integer(), aztec_formula(m).integer());
  };
  rep.prob_lhs = prob(c[0], n) * prob(c[1], n - 2);
  rep.prob_rhs = (prob(c[2], n - 1) * prob(c[3], n - 1) + prob(c[4], n - 1) * prob(c[5], n - 1)) *
                 RingElem::rational(1, 2);
  rep.probabilities_hold = rep.prob_lhs == rep.prob_rhs;
  return rep;
}

// ---------------------------------------------------------------- Fibonacci

AnchorQuad fibonacci_quad(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("fibonacci identity needs 1 <= i < j <= n");
  const int ci = i - 1, cj = j - 1;
  if ((j - i) % 2 == 1)
    return {grid_vertex(n, 1, ci), grid_vertex(n, 0, ci), grid_vertex(n, 0, cj), grid_vertex(n, 1, cj), 0};
  return {grid_vertex(n, 0, ci), grid_vertex(n, 0, cj), grid_vertex(n, 1, cj), grid_vertex(n, 1, ci), 0};
}

FibonacciReport verify_fibonacci_identity(int n, int i, int j) {
  AnchorQuad q = fibonacci_quad(n, i, j);
  FibonacciReport rep;
  rep.bilinear = verify_bilinear(grid(2, n), q);
  auto F = [](int k) { return fibonacci(k); };
  rep.lhs = F(n + 1) * F(j - i);
  RingElem sign = (j - i - 1) % 2 == 0 ? RingElem(1) : RingElem(-1);
  rep.rhs = F(n - i + 1) * F(j) + sign * F(i) * F(n - j + 1);
  rep.holds = rep.bilinear.holds && rep.lhs == rep.rhs;
  return rep;
}

}  // namespace gcond
