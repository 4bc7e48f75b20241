#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcond/exact.hpp"
#include "gcond/plane_graph.hpp"

namespace gcond {

class RegionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { AztecDiamond, AztecRectangle, HexagonQ, TcppRegion, Grid, TrominoRegion, RectangleInAztec };
enum class Weighting { Unit, Fortress1, Fortress2, Fortress3, QDiagonal, Custom, ZeroOneEmbed };

std::string to_string(Family f);
std::string to_string(Weighting w);

// A named parametric region. Parameters per family:
//   aztec n | rect n a b | hex r s t | tcpp r t | grid m n | tromino n k (k = 1..3) | rectembed h w
struct RegionSpec {
  Family family = Family::AztecDiamond;
  std::vector<int> params;
  Weighting weighting = Weighting::Unit;

  static RegionSpec parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

// Square centers in doubled coordinates: both coordinates odd.
struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CornerEdges {
  EdgeKey t, b, l, r;
};

struct AztecDiamond {
  int order = 0;
  Weighting weighting = Weighting::Unit;
  PlaneBipartiteGraph graph;
  std::optional<CornerEdges> corners;  // absent for order 0
  std::vector<std::pair<Cell, int>> cells;  // sorted by cell, with vertex id

  std::optional<int> vertex_at(Cell c) const;
  Cell cell_of(int id) const;
  // Vertices of the order-m sub-diamond centered at the lattice point (cx, cy),
  // given in doubled coordinates (both even).
  VertexSet subdiamond(int cx, int cy, int m) const;
  VertexSet top() const { return subdiamond(0, 2, order - 1); }
  VertexSet bottom() const { return subdiamond(0, -2, order - 1); }
  VertexSet left() const { return subdiamond(-2, 0, order - 1); }
  VertexSet right() const { return subdiamond(2, 0, order - 1); }
  VertexSet middle() const { return subdiamond(0, 0, order - 2); }
};

using CellWeight = std::function<RingElem(Cell, Cell)>;

AztecDiamond aztec_diamond(int n, Weighting w = Weighting::Unit);
AztecDiamond aztec_diamond(int n, const CellWeight& weight);

// The n-by-(n+1) Aztec rectangle with majority square (a, b) removed, or the
// full (unbalanced) region when hole is empty.
PlaneBipartiteGraph aztec_rectangle(int n, std::optional<std::pair<int, int>> hole);
// Lattice position of hole (a, b) in (u, v) rectangle coordinates.
std::pair<int, int> rectangle_hole_position(int n, int a, int b);

PlaneBipartiteGraph hexagon_q(int r, int s, int t);

struct TcppRegion {
  PlaneBipartiteGraph graph;
  std::array<VertexSet, 4> strips;  // 1 and 4 along the length-t sides, 2 and 3 along the others
};
TcppRegion tcpp_region(int r, int t);

PlaneBipartiteGraph grid(int m, int n);
inline int grid_vertex(int n, int row, int col) { return row * n + col; }

enum class Tromino { T1 = 1, T2 = 2, T3 = 3 };
PlaneBipartiteGraph tromino_region(int n, Tromino which);
// The rectangle of tromino_region with only the center removed; its anchor
// quad is the center's four neighbors on the face left by the center. No
// anchor is set when removing the center disconnects the rectangle (n = 2).
PlaneBipartiteGraph tromino_base(int n);

struct RectangleEmbedding {
  int h = 0, w = 0;
  AztecDiamond diamond;  // 0/1 weighted
};
RectangleEmbedding rectangle_in_aztec(int h, int w);

PlaneBipartiteGraph build_region(const RegionSpec& spec);

}  // namespace gcond
