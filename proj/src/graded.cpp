#include "quivermod/graded.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace quivermod {

VertexSet::VertexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("vertex set must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate vertex label '" + l + "'");
}

std::size_t VertexSet::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool VertexSet::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("dimension vector entries must be nonnegative");
}

int DimVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string DimVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + std::to_string(entries_[i]);
  return s + ")";
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension vectors over different vertex sets");
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return DimVector(std::move(r));
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension vectors over different vertex sets");
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return DimVector(std::move(r));
}

bool dim_vector_le(const DimVector& u, const DimVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dimension vectors over different vertex sets");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

void require_same_vertices(const DimVector& u, const VertexSet& vs, const char* what) {
  if (u.size() != vs.size())
    throw std::invalid_argument(std::string(what) + ": dimension vector has " + std::to_string(u.size()) +
                                " entries, vertex set has " + std::to_string(vs.size()));
}

}  // namespace quivermod
