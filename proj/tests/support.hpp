// Small builders shared by the test suites.
#pragma once

#include <initializer_list>
#include <memory>

#include "quivermod/correspondence.hpp"
#include "quivermod/quiver.hpp"

namespace quivermod::test {

inline Quiver a2_quiver() { return Quiver(VertexSet({"1", "2"}), {{"a", 0, 1}}); }

inline Quiver edgeless_quiver(std::size_t n = 1) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Quiver(VertexSet(labels), {});
}

template <class S>
AlgebraPtr<S> share(AlgebraPresentation<S> a) {
  return std::make_shared<const AlgebraPresentation<S>>(std::move(a));
}

template <class S>
AlgebraPtr<S> a2_preprojective(int bound, const FieldSpec& field) {
  return share(build_truncated_preprojective<S>(a2_quiver(), bound, field));
}

/// Row-major matrix over the field from integer entries.
template <class S>
Matrix<S> mat(const FieldSpec& field, Index rows, Index cols, std::initializer_list<int> entries) {
  Matrix<S> m(rows, cols);
  auto it = entries.begin();
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = make_scalar<S>(field, *it++);
  return m;
}

/// Framed point of an algebra from matrices keyed by basis label; other
/// non-idempotent elements act by zero.
template <class S>
FramedRepPoint<S> framed_point(AlgebraPtr<S> alg, DimVector d, DimVector v,
                               std::vector<std::pair<std::string, Matrix<S>>> action, std::vector<Matrix<S>> p) {
  const auto& a = *alg;
  std::vector<Matrix<S>> x(a.dimension());
  for (std::size_t b = 0; b < a.dimension(); ++b)
    x[b] = zero_matrix<S>(v[a.element(b).source], v[a.element(b).target]);
  for (std::size_t i = 0; i < a.vertices().size(); ++i) x[a.idempotent(i)] = identity_matrix<S>(a.field(), v[i]);
  for (auto& [label, m] : action) x.at(a.find(label)) = m;
  return {RepPoint<S>{alg, v, std::move(x)}, std::move(d), std::move(p)};
}

}  // namespace quivermod::test
