#include "quivermod/quiver.hpp"

#include <algorithm>
#include <set>

namespace quivermod {

Quiver::Quiver(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> seen;
  for (const auto& e : edges_) {
    if (!seen.insert(e.label).second) throw std::invalid_argument("duplicate edge label '" + e.label + "'");
    if (e.source >= vertices_.size() || e.target >= vertices_.size())
      throw std::invalid_argument("edge '" + e.label + "' has an endpoint outside the vertex set");
  }
}

std::size_t Quiver::edge_index(const std::string& label) const {
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].label == label) return k;
  throw std::out_of_range("unknown edge '" + label + "'");
}

bool Quiver::has_edge_loops() const {
  for (const auto& e : edges_)
    if (e.source == e.target) return true;
  return false;
}

DoubledQuiver double_quiver(const Quiver& q) {
  auto edges = q.edges();
  for (const auto& e : q.edges()) edges.push_back({e.label + "*", e.target, e.source});
  return {Quiver(q.vertices(), std::move(edges)), q.edges().size()};
}

std::string Path::label(const Quiver& q) const {
  if (edges.empty()) return "e" + q.vertices().label(vertex);
  std::string s;
  for (auto e : edges) s += q.edges()[e].label;
  return s;
}

std::vector<Path> enumerate_paths(const Quiver& q, int bound) {
  std::vector<Path> out;
  if (bound < 1) return out;
  std::vector<Path> layer;
  for (std::size_t i = 0; i < q.vertices().size(); ++i) layer.push_back({i, {}});
  for (int len = 0; len < bound && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (std::size_t e = 0; e < q.edges().size(); ++e) {
        if (q.edges()[e].source != p.target(q)) continue;
        Path ext{p.source(q), p.edges};
        ext.edges.push_back(e);
        next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end(), [](const Path& a, const Path& b) { return a.edges < b.edges; });
    layer = std::move(next);
  }
  return out;
}

int nilpotency_bound(const DimVector& v) { return v.total(); }

}  // namespace quivermod
