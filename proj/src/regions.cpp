#include "gcond/regions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "faces.hpp"

namespace gcond {

std::string to_string(Family f) {
  switch (f) {
    case Family::AztecDiamond: return "aztec";
    case Family::AztecRectangle: return "rect";
    case Family::HexagonQ: return "hex";
    case Family::TcppRegion: return "tcpp";
    case Family::Grid: return "grid";
    case Family::TrominoRegion: return "tromino";
    case Family::RectangleInAztec: return "rectembed";
  }
  return "?";
}

std::string to_string(Weighting w) {
  switch (w) {
    case Weighting::Unit: return "unit";
    case Weighting::Fortress1: return "fortress1";
    case Weighting::Fortress2: return "fortress2";
    case Weighting::Fortress3: return "fortress3";
    case Weighting::QDiagonal: return "q_diagonal";
    case Weighting::Custom: return "custom";
    case Weighting::ZeroOneEmbed: return "zero_one_embed";
  }
  return "?";
}

namespace {

int mod2(int x) { return ((x % 2) + 2) % 2; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<int> parse_ints(const std::string& s, std::size_t count, const std::string& spec) {
  auto parts = split(s, ',');
  if (parts.size() != count)
    throw RegionError("region '" + spec + "' needs " + std::to_string(count) + " comma-separated integers");
  std::vector<int> out;
  for (const auto& p : parts) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (p.empty() || used != p.size()) throw RegionError("region '" + spec + "': bad integer '" + p + "'");
    if (v < 0) throw RegionError("region '" + spec + "': parameters must be nonnegative");
    out.push_back(v);
  }
  return out;
}

// Assembles a graph from cells listed in id order, tracing faces from the
// doubled coordinates.
PlaneBipartiteGraph assemble(std::vector<Vertex> vs, std::vector<Edge> es,
                             std::optional<AnchorQuad> anchor = std::nullopt) {
  auto faces = detail::trace_faces(vs, es);
  return PlaneBipartiteGraph(std::move(vs), std::move(es), std::move(faces), anchor);
}

// Picks four roughly evenly spaced vertices on the unbounded face whose colors
// form a condensation pattern.
std::optional<AnchorQuad> spaced_anchor(const PlaneBipartiteGraph& g) {
  if (g.faces().empty()) return std::nullopt;
  std::vector<int> walk;
  for (int id : g.faces()[0])
    if (std::find(walk.begin(), walk.end(), id) == walk.end()) walk.push_back(id);
  const int len = static_cast<int>(walk.size());
  if (len < 4) return std::nullopt;
  for (int start = 0; start < len; ++start)
    for (int d1 = 0; d1 < 3; ++d1)
      for (int d2 = 0; d2 < 3; ++d2)
        for (int d3 = 0; d3 < 3; ++d3) {
          int p1 = len / 4 + d1 - 1, p2 = len / 2 + d2 - 1, p3 = 3 * len / 4 + d3 - 1;
          if (!(0 < p1 && p1 < p2 && p2 < p3 && p3 < len)) continue;
          auto at = [&](int p) { return walk[static_cast<std::size_t>((start + p) % len)]; };
          AnchorQuad q{at(0), at(p1), at(p2), at(p3), 0};
          try {
            classify_anchors(g, q);
            return q;
          } catch (const AnchorError&) {
          }
        }
  return std::nullopt;
}

RingElem fortress_weight(int n, Weighting w, Cell a, Cell b) {
  // The shared side of the two squares has lattice endpoints p and p'; exactly
  // one of them is the center of a fortress cell.
  std::array<std::pair<int, int>, 2> pts;
  if (a.y == b.y) {
    int xs = (a.x + b.x) / 4;
    pts = {{{xs, (a.y - 1) / 2}, {xs, (a.y + 1) / 2}}};
  } else {
    int ys = (a.y + b.y) / 4;
    pts = {{{(a.x - 1) / 2, ys}, {(a.x + 1) / 2, ys}}};
  }
  for (auto [px, py] : pts) {
    if (mod2(px + py) != mod2(n - 1) || std::abs(px) + std::abs(py) > n - 1) continue;
    bool even_class = mod2(px + n - 1) == 0;
    bool half = (w == Weighting::Fortress1) ? !even_class : even_class;
    return half ? RingElem::rational(1, 2) : RingElem(BigRat(1));
  }
  throw std::logic_error("fortress cell lookup failed");
}

AztecDiamond build_diamond(int n, Weighting label, const CellWeight& weight) {
  if (n < 0) throw RegionError("diamond order must be nonnegative");
  AztecDiamond d;
  d.order = n;
  d.weighting = label;
  std::vector<Cell> cells;
  for (int y = 2 * n - 1; y >= -(2 * n - 1); y -= 2)
    for (int x = -(2 * n - 1); x <= 2 * n - 1; x += 2)
      if (std::abs(x) + std::abs(y) <= 2 * n) cells.push_back({x, y});
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    vs.push_back({static_cast<int>(i), mod2((cells[i].x + cells[i].y) / 2), cells[i].x, cells[i].y});
    d.cells.emplace_back(cells[i], static_cast<int>(i));
  }
  std::sort(d.cells.begin(), d.cells.end());
  std::vector<Edge> es;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (Cell nb : {Cell{cells[i].x + 2, cells[i].y}, Cell{cells[i].x, cells[i].y - 2}})
      if (auto j = d.vertex_at(nb)) {
        Cell lo = std::min(cells[i], nb), hi = std::max(cells[i], nb);
        es.push_back({static_cast<int>(i), *j, weight(lo, hi)});
      }
  std::optional<AnchorQuad> anchor;
  if (n >= 1) {
    auto id = [&](int x, int y) { return *d.vertex_at({x, y}); };
    const int e = 2 * n - 1;
    d.corners = CornerEdges{edge_key(id(-1, e), id(1, e)), edge_key(id(-1, -e), id(1, -e)),
                            edge_key(id(-e, -1), id(-e, 1)), edge_key(id(e, -1), id(e, 1))};
    anchor = AnchorQuad{id(-1, e), id(e, 1), id(1, -e), id(-e, -1), 0};
  }
  d.graph = assemble(std::move(vs), std::move(es), anchor);
  return d;
}

}  // namespace

// ---------------------------------------------------------------- RegionSpec

RegionSpec RegionSpec::parse(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() < 2) throw RegionError("region '" + text + "' needs the form family:params");
  const std::string& fam = parts[0];
  RegionSpec spec;
  auto no_extra = [&](std::size_t n) {
    if (parts.size() > n) throw RegionError("region '" + text + "' has unexpected trailing fields");
  };
  if (fam == "aztec") {
    no_extra(3);
    spec.family = Family::AztecDiamond;
    spec.params = parse_ints(parts[1], 1, text);
    if (parts.size() == 3) {
      const std::string& w = parts[2];
      if (w == "fortress1") spec.weighting = Weighting::Fortress1;
      else if (w == "fortress2") spec.weighting = Weighting::Fortress2;
      else if (w == "fortress3") spec.weighting = Weighting::Fortress3;
      else if (w != "unit") throw RegionError("unknown diamond weighting '" + w + "'");
    }
  } else if (fam == "rect") {
    no_extra(3);
    spec.family = Family::AztecRectangle;
    if (parts.size() != 3) throw RegionError("region '" + text + "' needs rect:n:a,b");
    spec.params = parse_ints(parts[1], 1, text);
    auto hole = parse_ints(parts[2], 2, text);
    spec.params.insert(spec.params.end(), hole.begin(), hole.end());
  } else if (fam == "hex") {
    no_extra(2);
    spec.family = Family::HexagonQ;
    spec.params = parse_ints(parts[1], 3, text);
    spec.weighting = Weighting::QDiagonal;
  } else if (fam == "tcpp") {
    no_extra(2);
    spec.family = Family::TcppRegion;
    spec.params = parse_ints(parts[1], 2, text);
  } else if (fam == "grid") {
    no_extra(2);
    spec.family = Family::Grid;
    spec.params = parse_ints(parts[1], 2, text);
  } else if (fam == "tromino") {
    no_extra(3);
    spec.family = Family::TrominoRegion;
    if (parts.size() != 3) throw RegionError("region '" + text + "' needs tromino:n:t1|t2|t3");
    spec.params = parse_ints(parts[1], 1, text);
    const std::string& k = parts[2];
    if (k == "t1") spec.params.push_back(1);
    else if (k == "t2") spec.params.push_back(2);
    else if (k == "t3") spec.params.push_back(3);
    else throw RegionError("unknown tromino '" + k + "'");
  } else if (fam == "rectembed") {
    no_extra(2);
    spec.family = Family::RectangleInAztec;
    spec.params = parse_ints(parts[1], 2, text);
    spec.weighting = Weighting::ZeroOneEmbed;
  } else {
    throw RegionError("unknown region family '" + fam + "'");
  }
  return spec;
}

std::string RegionSpec::str() const {
  std::ostringstream os;
  auto list = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to && i < params.size(); ++i) os << (i > from ? "," : "") << params[i];
  };
  os << to_string(family) << ':';
  switch (family) {
    case Family::AztecDiamond:
      list(0, 1);
      if (weighting != Weighting::Unit) os << ':' << to_string(weighting);
      break;
    case Family::AztecRectangle:
      list(0, 1);
      os << ':';
      list(1, 3);
      break;
    case Family::TrominoRegion:
      list(0, 1);
      os << ":t" << (params.size() > 1 ? params[1] : 0);
      break;
    default: list(0, params.size());
  }
  return os.str();
}

// ---------------------------------------------------------------- Aztec diamond

std::optional<int> AztecDiamond::vertex_at(Cell c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), std::pair<Cell, int>{c, -1});
  if (it == cells.end() || it->first != c) return std::nullopt;
  return it->second;
}

Cell AztecDiamond::cell_of(int id) const {
  const Vertex& v = graph.vertex(id);
  return {v.x, v.y};
}

VertexSet AztecDiamond::subdiamond(int cx, int cy, int m) const {
  VertexSet out;
  if (m < 0) return out;
  for (const auto& [c, id] : cells)
    if (std::abs(c.x - cx) + std::abs(c.y - cy) <= 2 * m) out.insert(id);
  return out;
}

AztecDiamond aztec_diamond(int n, Weighting w) {
  switch (w) {
    case Weighting::Unit:
      return build_diamond(n, w, [](Cell, Cell) { return RingElem(1); });
    case Weighting::Fortress1:
    case Weighting::Fortress2:
      if (n % 2 != 1) throw RegionError(to_string(w) + " needs an odd diamond order");
      break;
    case Weighting::Fortress3:
      if (n % 2 != 0) throw RegionError("fortress3 needs an even diamond order");
      break;
    default:
      throw RegionError("weighting " + to_string(w) + " does not apply to a plain diamond");
  }
  return build_diamond(n, w, [n, w](Cell a, Cell b) { return fortress_weight(n, w, a, b); });
}

AztecDiamond aztec_diamond(int n, const CellWeight& weight) {
  return build_diamond(n, Weighting::Custom, weight);
}

// ---------------------------------------------------------------- Aztec rectangle

// Rectangle squares use coordinates (u, v) with u + v odd, 0 <= u <= 2n and
// 0 <= v <= 2n + 2; the plane position is x = u - v, y = u + v.
std::pair<int, int> rectangle_hole_position(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0 || a > n || b > n)
    throw RegionError("hole (" + std::to_string(a) + "," + std::to_string(b) + ") is outside R_" +
                      std::to_string(n));
  return {2 * b, 2 * a + 1};
}

namespace {

struct UV {
  int u, v;
  friend auto operator<=>(const UV&, const UV&) = default;
};

PlaneBipartiteGraph rectangle_graph(int n, const std::set<UV>& removed,
                                    std::map<UV, int>* ids_out = nullptr) {
  std::vector<UV> cells;
  for (int u = 0; u <= 2 * n; ++u)
    for (int v = 0; v <= 2 * n + 2; ++v)
      if (mod2(u + v) == 1 && !removed.count({u, v})) cells.push_back({u, v});
  std::sort(cells.begin(), cells.end(), [](const UV& p, const UV& q) {
    int py = p.u + p.v, qy = q.u + q.v;
    if (py != qy) return py > qy;
    return p.u - p.v < q.u - q.v;
  });
  std::map<UV, int> ids;
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    ids[cells[i]] = static_cast<int>(i);
    vs.push_back({static_cast<int>(i), mod2(cells[i].u), cells[i].u - cells[i].v, cells[i].u + cells[i].v});
  }
  std::vector<Edge> es;
  for (const auto& c : cells)
    for (UV nb : {UV{c.u + 1, c.v + 1}, UV{c.u + 1, c.v - 1}}) {
      auto it = ids.find(nb);
      if (it != ids.end()) es.push_back({ids[c], it->second, RingElem(1)});
    }
  if (ids_out) *ids_out = ids;
  return assemble(std::move(vs), std::move(es));
}

}  // namespace

PlaneBipartiteGraph aztec_rectangle(int n, std::optional<std::pair<int, int>> hole) {
  if (n < 0) throw RegionError("rectangle order must be nonnegative");
  std::set<UV> removed;
  if (hole) {
    auto [u, v] = rectangle_hole_position(n, hole->first, hole->second);
    removed.insert({u, v});
  }
  return rectangle_graph(n, removed);
}

// ---------------------------------------------------------------- trominoes

namespace {

// Rectangle order used for the tromino family, its center, and the four
// neighbors of the center in the order N, E, S, W.
struct TrominoFrame {
  int m;
  UV center;
  std::array<UV, 4> nesw;
};

TrominoFrame tromino_frame(int n) {
  if (n < 2 || n % 2 != 0) throw RegionError("tromino regions need an even n >= 2");
  int m = n - 1;
  UV c{m, m + 1};
  return {m, c, {UV{c.u + 1, c.v + 1}, UV{c.u + 1, c.v - 1}, UV{c.u - 1, c.v - 1}, UV{c.u - 1, c.v + 1}}};
}

}  // namespace

PlaneBipartiteGraph tromino_region(int n, Tromino which) {
  TrominoFrame f = tromino_frame(n);
  std::set<UV> removed{f.center, f.nesw[0]};
  switch (which) {
    case Tromino::T1: removed.insert(f.nesw[1]); break;  // north and east
    case Tromino::T2: removed.insert(f.nesw[3]); break;  // north and west
    case Tromino::T3: removed.insert(f.nesw[2]); break;  // north and south
  }
  return rectangle_graph(f.m, removed);
}

PlaneBipartiteGraph tromino_base(int n) {
  TrominoFrame f = tromino_frame(n);
  std::map<UV, int> ids;
  PlaneBipartiteGraph g = rectangle_graph(f.m, {f.center}, &ids);
  std::array<int, 4> q{};
  for (std::size_t k = 0; k < 4; ++k) q[k] = ids.at(f.nesw[k]);
  for (std::size_t fi = 0; fi < g.faces().size(); ++fi) {
    AnchorQuad quad{q[0], q[1], q[2], q[3], static_cast<int>(fi)};
    try {
      classify_anchors(g, quad);
      return g.with_anchor(quad);
    } catch (const AnchorError&) {
    }
  }
  return g;
}

// ---------------------------------------------------------------- hexagon

namespace {

// Unit triangles of the triangular lattice. R(i,j) has corners (i,j), (i+1,j),
// (i,j+1); L(i,j) has corners (i+1,j), (i+1,j+1), (i,j+1).
struct Tri {
  bool right;
  int i, j;
  friend auto operator<=>(const Tri&, const Tri&) = default;
};

int tri_x(const Tri& t) { return t.right ? 3 * t.i + 1 : 3 * t.i + 2; }
int tri_y(const Tri& t) { return t.right ? 3 * t.i + 6 * t.j + 3 : 3 * t.i + 6 * t.j + 6; }

std::set<Tri> hexagon_tris(int r, int s, int t) {
  auto inside = [&](int i, int j) { return -s <= i && i <= r && 0 <= j && j <= s + t && 0 <= i + j && i + j <= r + t; };
  std::set<Tri> out;
  for (int i = -s - 1; i <= r; ++i)
    for (int j = -1; j <= s + t; ++j) {
      if (inside(i, j) && inside(i + 1, j) && inside(i, j + 1)) out.insert({true, i, j});
      if (inside(i + 1, j) && inside(i + 1, j + 1) && inside(i, j + 1)) out.insert({false, i, j});
    }
  return out;
}

// Edges from R(i,j): to L(i-1,j) across a horizontal side (weighted q^j when
// q_weights), and to L(i,j-1), L(i,j) with weight 1.
PlaneBipartiteGraph triangle_graph(const std::set<Tri>& tris, bool q_weights) {
  std::vector<Tri> order(tris.begin(), tris.end());
  std::sort(order.begin(), order.end(), [](const Tri& a, const Tri& b) {
    if (tri_y(a) != tri_y(b)) return tri_y(a) < tri_y(b);
    return tri_x(a) < tri_x(b);
  });
  std::map<Tri, int> ids;
  std::vector<Vertex> vs;
  for (std::size_t k = 0; k < order.size(); ++k) {
    ids[order[k]] = static_cast<int>(k);
    vs.push_back({static_cast<int>(k), order[k].right ? 0 : 1, tri_x(order[k]), tri_y(order[k])});
  }
  std::vector<Edge> es;
  for (const Tri& t : order) {
    if (!t.right) continue;
    auto link = [&](Tri other, RingElem w) {
      auto it = ids.find(other);
      if (it != ids.end()) es.push_back({ids[t], it->second, std::move(w)});
    };
    RingElem one = q_weights ? RingElem::q_power(0) : RingElem(1);
    link({false, t.i - 1, t.j}, q_weights ? RingElem::q_power(t.j) : RingElem(1));
    link({false, t.i, t.j - 1}, one);
    link({false, t.i, t.j}, one);
  }
  return assemble(std::move(vs), std::move(es));
}

}  // namespace

PlaneBipartiteGraph hexagon_q(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0) throw RegionError("hexagon sides must be nonnegative");
  PlaneBipartiteGraph g = triangle_graph(hexagon_tris(r, s, t), true);
  return g.with_anchor(spaced_anchor(g));
}

// ---------------------------------------------------------------- TCPP

TcppRegion tcpp_region(int r, int t) {
  if (r < 0 || t < 0) throw RegionError("tcpp parameters must be nonnegative");
  std::set<Tri> half;
  // Keep the triangles strictly above the horizontal symmetry axis; the axis
  // row is forced into crossing rhombi and drops out.
  for (const Tri& tri : hexagon_tris(r, r, 2 * t))
    if (tri_y(tri) > 3 * r + 6 * t) half.insert(tri);
  // Forced rhombi along the two sides of length t.
  for (int j = r + t; j <= r + 2 * t - 1; ++j) {
    half.erase({true, -r, j});
    half.erase({false, -r, j});
  }
  for (int j = r - 1; j <= r + t - 2; ++j) {
    half.erase({false, r - 1, j});
    half.erase({true, r - 1, j + 1});
  }
  TcppRegion out;
  out.graph = triangle_graph(half, false);
  std::map<std::pair<int, int>, int> by_pos;
  for (const auto& v : out.graph.vertices()) by_pos[{v.x, v.y}] = v.id;
  for (const Tri& tri : half) {
    int id = by_pos.at({tri_x(tri), tri_y(tri)});
    if (tri.i == -r + 1) out.strips[0].insert(id);
    if (tri.j == r + 2 * t - 1) out.strips[1].insert(id);
    if ((tri.right && tri.i + tri.j == r + 2 * t - 1) || (!tri.right && tri.i + tri.j == r + 2 * t - 2))
      out.strips[2].insert(id);
    if (tri.i == r - 2) out.strips[3].insert(id);
  }
  return out;
}

// ---------------------------------------------------------------- grid

PlaneBipartiteGraph grid(int m, int n) {
  if (m < 1 || n < 1) throw RegionError("grid dimensions must be positive");
  std::vector<Vertex> vs;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) vs.push_back({grid_vertex(n, r, c), mod2(r + c), 2 * c + 1, 2 * (m - 1 - r) + 1});
  std::vector<Edge> es;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) es.push_back({grid_vertex(n, r, c), grid_vertex(n, r, c + 1), RingElem(1)});
      if (r + 1 < m) es.push_back({grid_vertex(n, r, c), grid_vertex(n, r + 1, c), RingElem(1)});
    }
  PlaneBipartiteGraph g = assemble(std::move(vs), std::move(es));
  if (m < 2 || n < 2) return g;
  // Corners clockwise from the top left, starting at the first corner that
  // gives a condensation pattern.
  std::array<int, 4> k{grid_vertex(n, 0, 0), grid_vertex(n, 0, n - 1), grid_vertex(n, m - 1, n - 1),
                       grid_vertex(n, m - 1, 0)};
  for (std::size_t s = 0; s < 4; ++s) {
    AnchorQuad q{k[s], k[(s + 1) % 4], k[(s + 2) % 4], k[(s + 3) % 4], 0};
    try {
      classify_anchors(g, q);
      return g.with_anchor(q);
    } catch (const AnchorError&) {
    }
  }
  return g;
}

// ---------------------------------------------------------------- rectangle in a diamond

namespace {

// Deterministic augmenting-path matching; returns partner ids or empty when
// no perfect matching exists.
std::optional<std::map<int, int>> find_perfect_matching(const PlaneBipartiteGraph& g) {
  std::map<int, int> mate;
  std::function<bool(int, std::set<int>&)> augment = [&](int u, std::set<int>& seen) {
    for (const auto& inc : g.incident(g.index_of(u))) {
      int w = g.vertices()[static_cast<std::size_t>(inc.vertex)].id;
      if (!seen.insert(w).second) continue;
      auto it = mate.find(w);
      if (it == mate.end() || augment(it->second, seen)) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };
  for (const auto& v : g.vertices()) {
    if (v.color != 0) continue;
    std::set<int> seen;
    if (!augment(v.id, seen)) return std::nullopt;
  }
  if (mate.size() != g.vertex_count()) return std::nullopt;
  return mate;
}

}  // namespace

RectangleEmbedding rectangle_in_aztec(int h, int w) {
  if (h < 1 || w < 1 || (h * w) % 2 != 0) throw RegionError("rectangle needs positive sides and even area");
  const int x0 = -w + 1 + (w % 2), y0 = -h + 1 + (h % 2);
  std::set<Cell> rect;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < h; ++j) rect.insert({x0 + 2 * i, y0 + 2 * j});
  int n = 0;
  for (const Cell& c : rect) n = std::max(n, (std::abs(c.x) + std::abs(c.y) + 1) / 2);
  for (;; ++n) {
    AztecDiamond unit = aztec_diamond(n);
    VertexSet inside;
    for (const Cell& c : rect) inside.insert(*unit.vertex_at(c));
    auto outside = delete_vertices(unit.graph, inside);
    auto mate = find_perfect_matching(outside);
    if (!mate) {
      if (n > h + w + 4) throw RegionError("no complement tiling found for the embedding");
      continue;
    }
    std::set<EdgeKey> dominoes;
    for (const auto& [a, b] : *mate) dominoes.insert(edge_key(a, b));
    auto weight = [&](Cell a, Cell b) {
      int ia = *unit.vertex_at(a), ib = *unit.vertex_at(b);
      bool keep = (rect.count(a) && rect.count(b)) || dominoes.count(edge_key(ia, ib));
      return RingElem(keep ? 1 : 0);
    };
    RectangleEmbedding out{h, w, build_diamond(n, Weighting::ZeroOneEmbed, weight)};
    return out;
  }
}

// ---------------------------------------------------------------- dispatch

PlaneBipartiteGraph build_region(const RegionSpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw RegionError("region " + to_string(spec.family) + " needs " + std::to_string(k) + " parameters");
  };
  switch (spec.family) {
    case Family::AztecDiamond: need(1); return aztec_diamond(p[0], spec.weighting).graph;
    case Family::AztecRectangle: need(3); return aztec_rectangle(p[0], std::pair{p[1], p[2]});
    case Family::HexagonQ: need(3); return hexagon_q(p[0], p[1], p[2]);
    case Family::TcppRegion: need(2); return tcpp_region(p[0], p[1]).graph;
    case Family::Grid: need(2); return grid(p[0], p[1]);
    case Family::TrominoRegion:
      need(2);
      if (p[1] < 1 || p[1] > 3) throw RegionError("tromino index must be 1, 2 or 3");
      return tromino_region(p[0], static_cast<Tromino>(p[1]));
    case Family::RectangleInAztec: need(2); return rectangle_in_aztec(p[0], p[1]).diamond.graph;
  }
  throw RegionError("unknown family");
}

}  // namespace gcond
