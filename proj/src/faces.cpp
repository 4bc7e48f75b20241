#include "faces.hpp"

#include <algorithm>
#include <map>

namespace gcond::detail {

namespace {

struct Dir {
  long dx, dy;
};

int half(const Dir& d) { return (d.dy < 0 || (d.dy == 0 && d.dx < 0)) ? 1 : 0; }

// Counterclockwise angular order starting from the positive x axis.
bool ccw_less(const Dir& a, const Dir& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a.dx * b.dy - a.dy * b.dx > 0;
}

}  // namespace

std::vector<Face> trace_faces(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges) {
  const std::size_t n = vertices.size();
  std::map<int, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[vertices[i].id] = i;
  std::vector<std::vector<std::size_t>> rot(n);
  for (const auto& e : edges) {
    rot[idx.at(e.u)].push_back(idx.at(e.v));
    rot[idx.at(e.v)].push_back(idx.at(e.u));
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto dir = [&](std::size_t w) {
      return Dir{static_cast<long>(vertices[w].x) - vertices[v].x,
                 static_cast<long>(vertices[w].y) - vertices[v].y};
    };
    std::sort(rot[v].begin(), rot[v].end(),
              [&](std::size_t a, std::size_t b) { return ccw_less(dir(a), dir(b)); });
  }

  std::map<std::pair<std::size_t, std::size_t>, bool> used;
  std::vector<Face> outer, inner;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w : rot[u]) {
      if (used[{u, w}]) continue;
      Face walk;
      long area2 = 0;
      std::size_t a = u, b = w;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        walk.push_back(vertices[a].id);
        area2 += static_cast<long>(vertices[a].x) * vertices[b].y -
                 static_cast<long>(vertices[b].x) * vertices[a].y;
        // Next dart: the neighbor of b immediately clockwise from a.
        const auto& r = rot[b];
        auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), a) - r.begin());
        std::size_t c = r[(pos + r.size() - 1) % r.size()];
        a = b;
        b = c;
      }
      auto first = std::min_element(walk.begin(), walk.end());
      std::rotate(walk.begin(), first, walk.end());
      (area2 > 0 ? inner : outer).push_back(std::move(walk));
    }
  }
  outer.insert(outer.end(), inner.begin(), inner.end());
  return outer;
}

}  // namespace gcond::detail
