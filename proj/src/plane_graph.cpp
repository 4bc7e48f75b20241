#include "gcond/plane_graph.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "faces.hpp"

namespace gcond {

std::string to_string(AnchorPattern p) {
  switch (p) {
    case AnchorPattern::ACBD: return "ACBD";
    case AnchorPattern::ABCD: return "ABCD";
    case AnchorPattern::ABC_D: return "ABC_D";
    case AnchorPattern::ALL4: return "ALL4";
  }
  return "?";
}

PlaneBipartiteGraph::PlaneBipartiteGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                         std::vector<Face> faces, std::optional<AnchorQuad> anchor)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      anchor_(anchor) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex& v = vertices_[i];
    if (v.color != 0 && v.color != 1)
      throw GraphError("vertex " + std::to_string(v.id) + " has color outside {0,1}");
    if (!index_.emplace(v.id, static_cast<int>(i)).second)
      throw GraphError("duplicate vertex id " + std::to_string(v.id));
  }
  for (auto& e : edges_) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return EdgeKey{a.u, a.v} < EdgeKey{b.u, b.v};
  });
  adj_.assign(vertices_.size(), {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    auto iu = index_.find(e.u), iv = index_.find(e.v);
    if (iu == index_.end() || iv == index_.end())
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has an unknown endpoint");
    if (vertices_[static_cast<std::size_t>(iu->second)].color ==
        vertices_[static_cast<std::size_t>(iv->second)].color)
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " joins two vertices of the same color");
    if (!edge_index_.emplace(EdgeKey{e.u, e.v}, static_cast<int>(k)).second)
      throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    adj_[static_cast<std::size_t>(iu->second)].push_back({iv->second, static_cast<int>(k)});
    adj_[static_cast<std::size_t>(iv->second)].push_back({iu->second, static_cast<int>(k)});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.vertex < b.vertex; });
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& face = faces_[f];
    if (face.size() < 2) throw GraphError("face " + std::to_string(f) + " is too short");
    for (std::size_t i = 0; i < face.size(); ++i) {
      int u = face[i], v = face[(i + 1) % face.size()];
      if (!has_vertex(u)) throw GraphError("face " + std::to_string(f) + " names unknown vertex " + std::to_string(u));
      if (!has_edge(u, v))
        throw GraphError("face " + std::to_string(f) + " steps between non-adjacent vertices " +
                         std::to_string(u) + " and " + std::to_string(v));
    }
  }
  if (anchor_) {
    const AnchorQuad& q = *anchor_;
    if (q.face < 0 || q.face >= static_cast<int>(faces_.size()))
      throw AnchorError("anchor names face " + std::to_string(q.face) + " which is not declared");
    for (int id : {q.a, q.b, q.c, q.d})
      if (!has_vertex(id)) throw AnchorError("anchor names unknown vertex " + std::to_string(id));
  }
}

int PlaneBipartiteGraph::index_of(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw GraphError("unknown vertex " + std::to_string(id));
  return it->second;
}

std::optional<int> PlaneBipartiteGraph::edge_index(int u, int v) const {
  auto it = edge_index_.find(edge_key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

const RingElem& PlaneBipartiteGraph::weight(int u, int v) const {
  auto k = edge_index(u, v);
  if (!k) throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  return edges_[static_cast<std::size_t>(*k)].weight;
}

std::size_t PlaneBipartiteGraph::color_count(int color) const {
  return static_cast<std::size_t>(std::count_if(
      vertices_.begin(), vertices_.end(), [color](const Vertex& v) { return v.color == color; }));
}

bool PlaneBipartiteGraph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight.is_one(); });
}

std::vector<int> PlaneBipartiteGraph::vertex_ids() const {
  std::vector<int> ids;
  ids.reserve(vertices_.size());
  for (const auto& v : vertices_) ids.push_back(v.id);
  return ids;
}

PlaneBipartiteGraph PlaneBipartiteGraph::with_anchor(std::optional<AnchorQuad> quad) const {
  return PlaneBipartiteGraph(vertices_, edges_, faces_, quad);
}

PlaneBipartiteGraph PlaneBipartiteGraph::with_faces(std::vector<Face> faces) const {
  return PlaneBipartiteGraph(vertices_, edges_, std::move(faces), std::nullopt);
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw GraphParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

PlaneBipartiteGraph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::optional<AnchorQuad> anchor;
  std::map<int, int> color_of;
  std::set<EdgeKey> seen_edges;
  int anchor_line = 0;

  std::istringstream is{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    auto tok = split_ws(body);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "v") {
      if (tok.size() != 5) throw GraphParseError(line, "vertex line needs: v <id> <color> <x> <y>");
      Vertex v{to_int(tok[1], line), to_int(tok[2], line), to_int(tok[3], line), to_int(tok[4], line)};
      if (v.color != 0 && v.color != 1) throw GraphParseError(line, "color must be 0 or 1");
      if (!color_of.emplace(v.id, v.color).second)
        throw GraphParseError(line, "duplicate vertex id " + tok[1]);
      vertices.push_back(v);
    } else if (kind == "e") {
      if (tok.size() < 3) throw GraphParseError(line, "edge line needs: e <u> <v> [<weight>]");
      int u = to_int(tok[1], line), v = to_int(tok[2], line);
      auto cu = color_of.find(u), cv = color_of.find(v);
      if (cu == color_of.end() || cv == color_of.end())
        throw GraphParseError(line, "edge names an unknown vertex");
      if (u == v) throw GraphParseError(line, "self-loop");
      if (cu->second == cv->second) throw GraphParseError(line, "edge joins two vertices of the same color");
      if (!seen_edges.insert(edge_key(u, v)).second) throw GraphParseError(line, "duplicate edge");
      RingElem w(1);
      if (tok.size() > 3) {
        // The weight is the rest of the line, which may contain spaces.
        std::istringstream ls(body);
        std::string skip;
        ls >> skip >> skip >> skip;
        std::string rest;
        std::getline(ls, rest);
        try {
          w = RingElem::parse(rest);
        } catch (const RingParseError& err) {
          throw GraphParseError(line, err.what());
        }
      }
      edges.push_back({u, v, w});
    } else if (kind == "f") {
      Face f;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        int id = to_int(tok[i], line);
        if (!color_of.count(id)) throw GraphParseError(line, "face names unknown vertex " + tok[i]);
        f.push_back(id);
      }
      if (f.size() < 2) throw GraphParseError(line, "face needs at least two vertices");
      for (std::size_t i = 0; i < f.size(); ++i)
        if (!seen_edges.count(edge_key(f[i], f[(i + 1) % f.size()])))
          throw GraphParseError(line, "face steps between non-adjacent vertices");
      faces.push_back(std::move(f));
    } else if (kind == "anchor") {
      if (tok.size() != 6) throw GraphParseError(line, "anchor line needs: anchor <a> <b> <c> <d> <face>");
      if (anchor) throw GraphParseError(line, "second anchor line");
      anchor = AnchorQuad{to_int(tok[1], line), to_int(tok[2], line), to_int(tok[3], line),
                          to_int(tok[4], line), to_int(tok[5], line)};
      anchor_line = line;
    } else {
      throw GraphParseError(line, "unknown record '" + kind + "'");
    }
  }
  try {
    return PlaneBipartiteGraph(std::move(vertices), std::move(edges), std::move(faces), anchor);
  } catch (const AnchorError& err) {
    throw GraphParseError(anchor_line, err.what());
  }
}

std::string serialize_graph(const PlaneBipartiteGraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices()) os << "v " << v.id << ' ' << v.color << ' ' << v.x << ' ' << v.y << '\n';
  for (const auto& e : g.edges()) {
    os << "e " << e.u << ' ' << e.v;
    if (!(e.weight.kind() == Kind::Integer && e.weight.is_one())) os << ' ' << e.weight;
    os << '\n';
  }
  for (const auto& f : g.faces()) {
    os << 'f';
    for (int id : f) os << ' ' << id;
    os << '\n';
  }
  if (const auto& q = g.anchor())
    os << "anchor " << q->a << ' ' << q->b << ' ' << q->c << ' ' << q->d << ' ' << q->face << '\n';
  return os.str();
}

// ---------------------------------------------------------------- deletion

PlaneBipartiteGraph delete_vertices(const PlaneBipartiteGraph& g, const VertexSet& s) {
  for (int id : s)
    if (!g.has_vertex(id)) throw GraphError("cannot delete unknown vertex " + std::to_string(id));
  if (s.empty()) return g;
  std::vector<Vertex> vs;
  for (const auto& v : g.vertices())
    if (!s.count(v.id)) vs.push_back(v);
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (!s.count(e.u) && !s.count(e.v)) es.push_back(e);
  std::vector<Face> fs;
  std::vector<int> remap(g.faces().size(), -1);
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    const Face& face = g.faces()[f];
    if (std::none_of(face.begin(), face.end(), [&](int id) { return s.count(id) != 0; })) {
      remap[f] = static_cast<int>(fs.size());
      fs.push_back(face);
    }
  }
  std::optional<AnchorQuad> anchor;
  if (const auto& q = g.anchor()) {
    int nf = remap[static_cast<std::size_t>(q->face)];
    if (nf >= 0) anchor = AnchorQuad{q->a, q->b, q->c, q->d, nf};
  }
  return PlaneBipartiteGraph(std::move(vs), std::move(es), std::move(fs), anchor);
}

PlaneBipartiteGraph induced_subgraph(const PlaneBipartiteGraph& g, const VertexSet& keep) {
  VertexSet drop;
  for (const auto& v : g.vertices())
    if (!keep.count(v.id)) drop.insert(v.id);
  for (int id : keep)
    if (!g.has_vertex(id)) throw GraphError("cannot keep unknown vertex " + std::to_string(id));
  return delete_vertices(g, drop);
}

PlaneBipartiteGraph with_traced_faces(const PlaneBipartiteGraph& g) {
  return PlaneBipartiteGraph(g.vertices(), g.edges(), detail::trace_faces(g.vertices(), g.edges()));
}

// ---------------------------------------------------------------- anchors

namespace {

bool in_cyclic_order(const Face& face, const std::array<int, 4>& q) {
  std::array<std::size_t, 4> pos{};
  for (std::size_t k = 0; k < 4; ++k) {
    auto it = std::find(face.begin(), face.end(), q[k]);
    if (it == face.end()) return false;
    pos[k] = static_cast<std::size_t>(it - face.begin());
  }
  auto cyclic = [&](const std::array<std::size_t, 4>& p) {
    // p[0..3] increase cyclically: exactly one descent when read around.
    int descents = 0;
    for (std::size_t k = 0; k < 4; ++k)
      if (p[(k + 1) % 4] < p[k]) ++descents;
    return descents == 1;
  };
  std::array<std::size_t, 4> rev{pos[3], pos[2], pos[1], pos[0]};
  return cyclic(pos) || cyclic(rev);
}

}  // namespace

AnchorClass classify_anchor_quad(const PlaneBipartiteGraph& g, const AnchorQuad& quad) {
  std::array<int, 4> q{quad.a, quad.b, quad.c, quad.d};
  for (int id : q)
    if (!g.has_vertex(id)) throw AnchorError("anchor vertex " + std::to_string(id) + " not in graph");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (q[i] == q[j]) throw AnchorError("anchor vertices must be distinct");
  if (quad.face < 0 || quad.face >= static_cast<int>(g.faces().size()))
    throw AnchorError("anchor face " + std::to_string(quad.face) + " is not declared");
  if (!in_cyclic_order(g.faces()[static_cast<std::size_t>(quad.face)], q))
    throw AnchorError("anchors do not appear in cyclic order on the face");

  std::array<int, 4> col{};
  for (std::size_t k = 0; k < 4; ++k) col[k] = g.vertex(q[k]).color;
  const long n0 = static_cast<long>(g.color_count(0));
  const long n1 = static_cast<long>(g.color_count(1));

  // Try both choices of V1; the pattern is read against that choice.
  for (int v1 : {0, 1}) {
    std::array<bool, 4> in1{};
    for (std::size_t k = 0; k < 4; ++k) in1[k] = col[k] == v1;
    long imbalance = v1 == 0 ? n0 - n1 : n1 - n0;
    std::optional<AnchorPattern> p;
    long need = 0;
    if (in1[0] && !in1[1] && in1[2] && !in1[3]) p = AnchorPattern::ACBD, need = 0;
    else if (in1[0] && in1[1] && !in1[2] && !in1[3]) p = AnchorPattern::ABCD, need = 0;
    else if (in1[0] && in1[1] && in1[2] && !in1[3]) p = AnchorPattern::ABC_D, need = 1;
    else if (in1[0] && in1[1] && in1[2] && in1[3]) p = AnchorPattern::ALL4, need = 2;
    if (!p) continue;
    if (imbalance != need)
      throw AnchorError("pattern " + to_string(*p) + " needs |V1|-|V2| = " + std::to_string(need) +
                        " but the graph has " + std::to_string(imbalance));
    return {*p, v1};
  }
  throw AnchorError("anchor colors match no condensation pattern");
}

}  // namespace gcond
