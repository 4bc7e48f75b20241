#pragma once

#include <vector>

#include "gcond/plane_graph.hpp"

namespace gcond::detail {

// Faces of a straight-line drawing given by the vertex coordinates. Unbounded
// faces (one per connected component) come first, then bounded faces in trace
// order. Each face starts at its smallest vertex id.
std::vector<Face> trace_faces(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges);

}  // namespace gcond::detail
