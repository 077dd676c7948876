// Finite-dimensional algebras over the vertex-idempotent algebra, presented by
// a bigraded basis and a dense table of structure constants, and the framed
// projective module A_D = D (x) A.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quivermod/graded.hpp"
#include "quivermod/linalg.hpp"

namespace quivermod {

/// A basis element b in e_source A e_target. `degree` is the path-length
/// grading when the algebra comes from a quiver; explicit presentations use
/// 0 for idempotents and 1 otherwise.
struct BasisElement {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

template <class S>
class AlgebraPresentation {
 public:
  AlgebraPresentation(FieldSpec field, VertexSet vertices, std::vector<BasisElement> basis,
                      std::vector<std::size_t> idempotents)
      : field_(field),
        vertices_(std::move(vertices)),
        basis_(std::move(basis)),
        idempotents_(std::move(idempotents)),
        constants_(basis_.size() * basis_.size() * basis_.size(), S(0)) {
    if (idempotents_.size() != vertices_.size())
      throw std::invalid_argument("one idempotent per vertex required");
    for (const auto& b : basis_)
      if (b.source >= vertices_.size() || b.target >= vertices_.size())
        throw std::invalid_argument("basis element '" + b.label + "' has an unknown vertex");
    for (auto e : idempotents_)
      if (e >= basis_.size()) throw std::invalid_argument("idempotent index out of range");
  }

  const FieldSpec& field() const { return field_; }
  const VertexSet& vertices() const { return vertices_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(std::size_t b) const { return basis_.at(b); }
  std::size_t idempotent(std::size_t vertex) const { return idempotents_.at(vertex); }
  const std::vector<std::size_t>& idempotents() const { return idempotents_; }
  bool is_idempotent_index(std::size_t b) const {
    for (auto e : idempotents_)
      if (e == b) return true;
    return false;
  }
  /// Index of the basis element with this label, or dimension() if absent.
  std::size_t find(const std::string& label) const {
    for (std::size_t b = 0; b < basis_.size(); ++b)
      if (basis_[b].label == label) return b;
    return basis_.size();
  }
  int max_degree() const {
    int d = 0;
    for (const auto& b : basis_) d = std::max(d, b.degree);
    return d;
  }

  /// c^k_{b,b'} where b * b' = sum_k c^k_{b,b'} k.
  const S& constant(std::size_t b, std::size_t b2, std::size_t k) const {
    return constants_[(b * basis_.size() + b2) * basis_.size() + k];
  }
  S& constant(std::size_t b, std::size_t b2, std::size_t k) {
    return constants_[(b * basis_.size() + b2) * basis_.size() + k];
  }

  RowVector<S> product(std::size_t b, std::size_t b2) const {
    RowVector<S> r(static_cast<Index>(basis_.size()));
    for (std::size_t k = 0; k < basis_.size(); ++k) r(static_cast<Index>(k)) = constant(b, b2, k);
    return r;
  }

  void set_product(std::size_t b, std::size_t b2, const RowVector<S>& value) {
    if (value.size() != static_cast<Index>(basis_.size()))
      throw std::invalid_argument("set_product: coordinate vector has the wrong length");
    for (std::size_t k = 0; k < basis_.size(); ++k) constant(b, b2, k) = value(static_cast<Index>(k));
  }

  /// Product of general elements given in basis coordinates.
  RowVector<S> multiply(const RowVector<S>& x, const RowVector<S>& y) const {
    const auto n = basis_.size();
    RowVector<S> r = RowVector<S>::Constant(static_cast<Index>(n), S(0));
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(x(static_cast<Index>(b)))) continue;
      for (std::size_t b2 = 0; b2 < n; ++b2) {
        if (is_zero(y(static_cast<Index>(b2)))) continue;
        const S f = x(static_cast<Index>(b)) * y(static_cast<Index>(b2));
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(constant(b, b2, k))) r(static_cast<Index>(k)) += f * constant(b, b2, k);
      }
    }
    return r;
  }

  RowVector<S> unit_vector(std::size_t b) const {
    RowVector<S> r = RowVector<S>::Constant(static_cast<Index>(basis_.size()), S(0));
    r(static_cast<Index>(b)) = make_scalar<S>(field_, 1);
    return r;
  }

 private:
  FieldSpec field_;
  VertexSet vertices_;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> idempotents_;
  std::vector<S> constants_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const AlgebraPresentation<S>>;

struct AxiomFailure {
  enum class Axiom { Idempotent, Unit, Bigrading, Associativity };
  Axiom axiom;
  std::vector<std::size_t> witness;  // basis indices
  std::string detail;
};

const char* axiom_name(AxiomFailure::Axiom a);

struct AlgebraValidation {
  std::vector<AxiomFailure> failures;

  bool ok() const { return failures.empty(); }
  bool has(AxiomFailure::Axiom a) const {
    for (const auto& f : failures)
      if (f.axiom == a) return true;
    return false;
  }
};

/// Checks orthogonal idempotents, the two-sided unit, bigrading and
/// associativity against the structure constants. Stops collecting witnesses
/// for an axiom after `max_witnesses`.
template <class S>
AlgebraValidation validate_algebra(const AlgebraPresentation<S>& a, std::size_t max_witnesses = 16) {
  using Ax = AxiomFailure::Axiom;
  AlgebraValidation report;
  const auto n = a.dimension();
  const auto nv = a.vertices().size();
  std::size_t counts[4] = {0, 0, 0, 0};
  auto fail = [&](Ax ax, std::vector<std::size_t> w, std::string detail) {
    if (counts[static_cast<int>(ax)]++ < max_witnesses)
      report.failures.push_back({ax, std::move(w), std::move(detail)});
  };
  auto label = [&](std::size_t b) { return a.element(b).label; };

  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      const auto ei = a.idempotent(i), ej = a.idempotent(j);
      const RowVector<S> expect =
          i == j ? a.unit_vector(ei) : RowVector<S>::Constant(static_cast<Index>(n), S(0));
      if (a.product(ei, ej) != expect)
        fail(Ax::Idempotent, {i, j}, label(ei) + "*" + label(ej) + (i == j ? " != " + label(ei) : " != 0"));
    }
  }

  RowVector<S> unit = RowVector<S>::Constant(static_cast<Index>(n), S(0));
  for (auto e : a.idempotents()) unit(static_cast<Index>(e)) += make_scalar<S>(a.field(), 1);
  for (std::size_t b = 0; b < n; ++b) {
    const auto eb = a.unit_vector(b);
    if (a.multiply(unit, eb) != eb) fail(Ax::Unit, {b}, "1*" + label(b) + " != " + label(b));
    if (a.multiply(eb, unit) != eb) fail(Ax::Unit, {b}, label(b) + "*1 != " + label(b));
  }

  for (std::size_t b = 0; b < n; ++b) {
    const auto& eb = a.element(b);
    if (a.product(a.idempotent(eb.source), b) != a.unit_vector(b))
      fail(Ax::Bigrading, {b}, "e_src*" + label(b) + " != " + label(b));
    if (a.product(b, a.idempotent(eb.target)) != a.unit_vector(b))
      fail(Ax::Bigrading, {b}, label(b) + "*e_tgt != " + label(b));
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      const auto& eb2 = a.element(b2);
      for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(a.constant(b, b2, k))) continue;
        const auto& ek = a.element(k);
        if (eb.target != eb2.source || ek.source != eb.source || ek.target != eb2.target) {
          fail(Ax::Bigrading, {b, b2, k}, label(b) + "*" + label(b2) + " has a component along " + label(k));
          break;
        }
      }
    }
  }

  // (b b') b'' = sum_k c^k_{bb'} k b''  versus  b (b' b'') = sum_k c^k_{b'b''} b k
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      const auto left_pair = a.product(b, b2);
      for (std::size_t b3 = 0; b3 < n; ++b3) {
        RowVector<S> lhs = RowVector<S>::Constant(static_cast<Index>(n), S(0));
        RowVector<S> rhs = lhs;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& c1 = left_pair(static_cast<Index>(k));
          if (!is_zero(c1)) lhs += c1 * a.product(k, b3);
          const auto& c2 = a.constant(b2, b3, k);
          if (!is_zero(c2)) rhs += c2 * a.product(b, k);
        }
        if (lhs != rhs)
          fail(Ax::Associativity, {b, b2, b3},
               "(" + label(b) + "*" + label(b2) + ")*" + label(b3) + " != " + label(b) + "*(" + label(b2) +
                   "*" + label(b3) + ")");
      }
    }
  }
  return report;
}

/// Basis indices of e_i A e_j.
template <class S>
std::vector<std::size_t> bigraded_component(const AlgebraPresentation<S>& a, std::size_t i, std::size_t j) {
  if (i >= a.vertices().size() || j >= a.vertices().size())
    throw std::out_of_range("bigraded_component: unknown vertex");
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < a.dimension(); ++b)
    if (a.element(b).source == i && a.element(b).target == j) out.push_back(b);
  return out;
}

/// Basis vector (slot at `vertex`, algebra element b in e_vertex A) of A_D.
struct FramedBasisElement {
  std::size_t vertex = 0;
  int slot = 0;
  std::size_t algebra_index = 0;
};

/// A_D = D (x) A as a right A-module, graded by the target of the algebra part.
template <class S>
struct FramedModule {
  AlgebraPtr<S> algebra;
  DimVector framing;
  /// graded_basis[j] lists the basis of (A_D)_j.
  std::vector<std::vector<FramedBasisElement>> graded_basis;
  /// action[b]: (A_D)_{src b} -> (A_D)_{tgt b}, rows indexed by graded_basis.
  std::vector<Matrix<S>> action;
  /// inclusion[i]: D_i -> (A_D)_i, slot s |-> (s, e_i).
  std::vector<Matrix<S>> inclusion;

  DimVector dims() const {
    std::vector<int> d;
    for (const auto& g : graded_basis) d.push_back(static_cast<int>(g.size()));
    return DimVector(std::move(d));
  }
  const FieldSpec& field() const { return algebra->field(); }
};

template <class S>
using FramedModulePtr = std::shared_ptr<const FramedModule<S>>;

/// Builds A_D and checks the module axiom (m b) b' = sum_k c^k m k on every
/// basis pair; throws std::logic_error if it fails.
template <class S>
FramedModule<S> build_framed_module(AlgebraPtr<S> algebra, const DimVector& d) {
  const auto& a = *algebra;
  const auto nv = a.vertices().size();
  require_same_vertices(d, a.vertices(), "build_framed_module");
  FramedModule<S> m;
  m.algebra = algebra;
  m.framing = d;
  m.graded_basis.resize(nv);
  // position[b][vertex][slot] -> row in graded_basis[tgt b]
  std::vector<std::vector<std::vector<Index>>> position(a.dimension(), std::vector<std::vector<Index>>(nv));
  for (std::size_t i = 0; i < nv; ++i) {
    for (int s = 0; s < d[i]; ++s) {
      for (std::size_t b = 0; b < a.dimension(); ++b) {
        const auto& eb = a.element(b);
        if (eb.source != i) continue;
        position[b][i].push_back(static_cast<Index>(m.graded_basis[eb.target].size()));
        m.graded_basis[eb.target].push_back({i, s, b});
      }
    }
  }
  const auto dims = m.dims();
  for (std::size_t c = 0; c < a.dimension(); ++c) {
    const auto& ec = a.element(c);
    Matrix<S> act = zero_matrix<S>(dims[ec.source], dims[ec.target]);
    for (Index row = 0; row < dims[ec.source]; ++row) {
      const auto& fb = m.graded_basis[ec.source][static_cast<std::size_t>(row)];
      for (std::size_t k = 0; k < a.dimension(); ++k) {
        const auto& coeff = a.constant(fb.algebra_index, c, k);
        if (is_zero(coeff)) continue;
        if (a.element(k).source != fb.vertex || a.element(k).target != ec.target)
          throw std::logic_error("build_framed_module: algebra violates the bigrading");
        act(row, position[k][fb.vertex][static_cast<std::size_t>(fb.slot)]) += coeff;
      }
    }
    m.action.push_back(bind_field(act, a.field()));
  }
  for (std::size_t i = 0; i < nv; ++i) {
    Matrix<S> inc = zero_matrix<S>(d[i], dims[i]);
    for (int s = 0; s < d[i]; ++s)
      inc(s, position[a.idempotent(i)][i][static_cast<std::size_t>(s)]) = make_scalar<S>(a.field(), 1);
    m.inclusion.push_back(std::move(inc));
  }

  for (std::size_t b = 0; b < a.dimension(); ++b) {
    for (std::size_t b2 = 0; b2 < a.dimension(); ++b2) {
      if (a.element(b).target != a.element(b2).source) continue;
      const auto& src = a.element(b).source;
      const auto& tgt = a.element(b2).target;
      Matrix<S> rhs = zero_matrix<S>(dims[src], dims[tgt]);
      for (std::size_t k = 0; k < a.dimension(); ++k) {
        if (is_zero(a.constant(b, b2, k))) continue;
        if (a.element(k).source != src || a.element(k).target != tgt)
          throw std::logic_error("build_framed_module: algebra violates the bigrading");
        rhs += a.constant(b, b2, k) * m.action[k];
      }
      if (m.action[b] * m.action[b2] != rhs)
        throw std::logic_error("build_framed_module: module axiom fails for (" + a.element(b).label + ", " +
                               a.element(b2).label + ")");
    }
  }
  return m;
}

}  // namespace quivermod
