#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcond/exact.hpp"

namespace gcond {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphParseError : public GraphError {
 public:
  GraphParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class AnchorError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct Vertex {
  int id = 0;
  int color = 0;
  int x = 0;
  int y = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Edges are stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  RingElem weight = RingElem(1);
  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeKey = std::pair<int, int>;
using Face = std::vector<int>;
using VertexSet = std::set<int>;

inline EdgeKey edge_key(int u, int v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

struct AnchorQuad {
  int a = 0, b = 0, c = 0, d = 0;
  int face = 0;
  friend bool operator==(const AnchorQuad&, const AnchorQuad&) = default;
};

enum class AnchorPattern { ACBD, ABCD, ABC_D, ALL4 };

std::string to_string(AnchorPattern p);

struct Incidence {
  int vertex;  // neighbor index
  int edge;    // edge index
};

class PlaneBipartiteGraph {
 public:
  PlaneBipartiteGraph() = default;
  PlaneBipartiteGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                      std::vector<Face> faces = {}, std::optional<AnchorQuad> anchor = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::optional<AnchorQuad>& anchor() const { return anchor_; }

  bool has_vertex(int id) const { return index_.count(id) != 0; }
  int index_of(int id) const;
  const Vertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(index_of(id))]; }
  const std::vector<Incidence>& incident(int index) const {
    return adj_[static_cast<std::size_t>(index)];
  }

  bool has_edge(int u, int v) const { return edge_index_.count(edge_key(u, v)) != 0; }
  std::optional<int> edge_index(int u, int v) const;
  const RingElem& weight(int u, int v) const;

  std::size_t color_count(int color) const;
  bool unit_weights() const;
  std::vector<int> vertex_ids() const;

  PlaneBipartiteGraph with_anchor(std::optional<AnchorQuad> quad) const;
  PlaneBipartiteGraph with_faces(std::vector<Face> faces) const;

  friend bool operator==(const PlaneBipartiteGraph& x, const PlaneBipartiteGraph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_ && x.faces_ == y.faces_ &&
           x.anchor_ == y.anchor_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::optional<AnchorQuad> anchor_;
  std::map<int, int> index_;
  std::map<EdgeKey, int> edge_index_;
  std::vector<std::vector<Incidence>> adj_;
};

PlaneBipartiteGraph parse_graph(std::string_view text);
std::string serialize_graph(const PlaneBipartiteGraph& g);

PlaneBipartiteGraph delete_vertices(const PlaneBipartiteGraph& g, const VertexSet& s);
PlaneBipartiteGraph induced_subgraph(const PlaneBipartiteGraph& g, const VertexSet& keep);
// Recomputes all faces from the vertex coordinates (straight-line drawing).
// Unbounded faces come first. Any anchor is dropped.
PlaneBipartiteGraph with_traced_faces(const PlaneBipartiteGraph& g);

// Color playing the role of V1 for the quad, plus the matched pattern.
struct AnchorClass {
  AnchorPattern pattern;
  int v1_color;
};

AnchorClass classify_anchor_quad(const PlaneBipartiteGraph& g, const AnchorQuad& quad);
inline AnchorPattern classify_anchors(const PlaneBipartiteGraph& g, const AnchorQuad& quad) {
  return classify_anchor_quad(g, quad).pattern;
}

}  // namespace gcond
