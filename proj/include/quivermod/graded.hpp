// Vertex sets and dimension vectors of I-graded spaces.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace quivermod {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws std::out_of_range for unknown labels.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Per-vertex dimensions (dim M_i), in vertex-set order.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> entries);
  DimVector(std::initializer_list<int> entries) : DimVector(std::vector<int>(entries)) {}
  static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int total() const;
  bool is_zero() const { return total() == 0; }
  std::string str() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend DimVector operator-(const DimVector& a, const DimVector& b);
  friend DimVector operator+(const DimVector& a, const DimVector& b);

 private:
  std::vector<int> entries_;
};

/// Componentwise u <= v. Throws std::invalid_argument on size mismatch.
bool dim_vector_le(const DimVector& u, const DimVector& v);

void require_same_vertices(const DimVector& u, const VertexSet& vs, const char* what);

}  // namespace quivermod
