// Points of the Grassmannian of quotient modules Gr*_A(M, v), stored by
// their kernel submodule S (per-vertex RREF blocks).
#pragma once

#include <string>
#include <vector>

#include "quivermod/algebra.hpp"
#include "quivermod/enumerate.hpp"
#include "quivermod/framed_reps.hpp"

namespace quivermod {

template <class S>
struct GradedSubspace {
  DimVector ambient;
  /// blocks[i]: basis of S_i as rows, RREF, full row rank.
  std::vector<Matrix<S>> blocks;
  std::vector<std::vector<Index>> pivots;

  /// Canonical subspace spanned by the given rows at each vertex.
  static GradedSubspace span(DimVector ambient, const std::vector<Matrix<S>>& rows, const FieldSpec& field) {
    if (rows.size() != ambient.size()) throw std::invalid_argument("GradedSubspace: one block per vertex required");
    GradedSubspace s;
    s.ambient = std::move(ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].cols() != s.ambient[i]) throw std::invalid_argument("GradedSubspace: block width mismatch");
      auto r = row_space(rows[i]);
      s.blocks.push_back(bind_field(r.matrix, field));
      s.pivots.push_back(std::move(r.pivots));
    }
    return s;
  }

  DimVector dims() const {
    std::vector<int> d;
    for (const auto& b : blocks) d.push_back(static_cast<int>(b.rows()));
    return DimVector(std::move(d));
  }

  /// Bit-exact canonical key (blocks are RREF and bound to the field).
  std::string key(const FieldSpec& field) const {
    std::string k;
    for (const auto& b : blocks) k += format_matrix(b, field) + ";";
    return k;
  }

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.ambient == b.ambient && same_matrices(a.blocks, b.blocks);
  }
};

/// S . b is contained in S for every basis element b of the algebra.
template <class S>
bool is_submodule(const GradedSubspace<S>& s, const FramedModule<S>& m) {
  if (s.ambient != m.dims()) throw std::invalid_argument("is_submodule: ambient dimensions differ");
  const auto& a = *m.algebra;
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    const auto& eb = a.element(b);
    if (s.blocks[eb.source].rows() == 0) continue;
    const Matrix<S> img = s.blocks[eb.source] * m.action[b];
    if (!rows_in_span<S>(img, s.blocks[eb.target], s.pivots[eb.target])) return false;
  }
  return true;
}

template <class S>
struct QuotientPoint {
  FramedModulePtr<S> module;
  GradedSubspace<S> kernel;

  DimVector dims() const { return module->dims() - kernel.dims(); }
  std::string key() const { return kernel.key(module->field()); }

  friend bool operator==(const QuotientPoint& a, const QuotientPoint& b) { return a.kernel == b.kernel; }
};

template <class S>
struct InducedRep {
  RepPoint<S> rep;
  /// projection[j]: M_j -> Q_j, quotient coordinates = non-pivot columns of the kernel block.
  std::vector<Matrix<S>> projection;
};

template <class S>
InducedRep<S> induced_quotient_rep(const QuotientPoint<S>& qp) {
  const auto& m = *qp.module;
  const auto& a = *m.algebra;
  const auto& field = a.field();
  const auto nv = a.vertices().size();
  const auto mdims = m.dims();
  const auto qdims = qp.dims();
  InducedRep<S> out;
  std::vector<std::vector<Index>> free_cols(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& block = qp.kernel.blocks[j];
    const auto& piv = qp.kernel.pivots[j];
    std::vector<Index> pivot_row(static_cast<std::size_t>(mdims[j]), -1);
    for (std::size_t r = 0; r < piv.size(); ++r) pivot_row[static_cast<std::size_t>(piv[r])] = static_cast<Index>(r);
    for (Index c = 0; c < mdims[j]; ++c)
      if (pivot_row[static_cast<std::size_t>(c)] < 0) free_cols[j].push_back(c);
    Matrix<S> proj = zero_matrix<S>(mdims[j], qdims[j]);
    for (std::size_t t = 0; t < free_cols[j].size(); ++t) {
      proj(free_cols[j][t], static_cast<Index>(t)) = make_scalar<S>(field, 1);
      for (std::size_t r = 0; r < piv.size(); ++r)
        proj(piv[r], static_cast<Index>(t)) = -block(static_cast<Index>(r), free_cols[j][t]);
    }
    out.projection.push_back(bind_field(proj, field));
  }
  std::vector<Matrix<S>> action;
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    const auto& eb = a.element(b);
    Matrix<S> x(qdims[eb.source], qdims[eb.target]);
    for (std::size_t t = 0; t < free_cols[eb.source].size(); ++t)
      x.row(static_cast<Index>(t)) = m.action[b].row(free_cols[eb.source][t]) * out.projection[eb.target];
    action.push_back(bind_field(x, field));
  }
  out.rep = RepPoint<S>{m.algebra, qdims, std::move(action)};
  return out;
}

/// Gaussian binomial [n choose k]_q.
BigInt gaussian_binomial(int n, int k, std::uint64_t q);

/// All k x n RREF matrices of rank k over F_p, ordered by pivot set
/// (lexicographic) and then by the free entries.
std::vector<Matrix<Fp>> enumerate_rref_matrices(int k, int n, std::uint32_t p);

namespace detail {

/// Visits the graded subspaces of the given dimensions by mixed-radix index.
template <class T, class Visit>
std::vector<T> for_each_graded_subspace(const DimVector& ambient, const DimVector& sdims, const FieldSpec& field,
                                        const EnumerationOptions& opts, Visit visit) {
  if (!field.is_finite()) throw std::invalid_argument("enumeration requires a finite field");
  if (ambient.size() != sdims.size() || !dim_vector_le(sdims, ambient))
    throw std::invalid_argument("subspace dimensions exceed the ambient dimensions");
  BigInt size = 1;
  for (std::size_t i = 0; i < ambient.size(); ++i) size *= gaussian_binomial(ambient[i], sdims[i], field.characteristic);
  if (size > opts.budget) throw BudgetExceeded("subspace enumeration", size, opts.budget);
  std::vector<std::vector<Matrix<Fp>>> choices;
  for (std::size_t i = 0; i < ambient.size(); ++i)
    choices.push_back(enumerate_rref_matrices(sdims[i], ambient[i], field.characteristic));
  return run_blocks<T>(static_cast<std::uint64_t>(size), opts.threads, [&](std::uint64_t index, auto& out) {
    GradedSubspace<Fp> s;
    s.ambient = ambient;
    s.blocks.resize(ambient.size());
    s.pivots.resize(ambient.size());
    for (std::size_t i = ambient.size(); i-- > 0;) {
      const auto radix = choices[i].size();
      s.blocks[i] = choices[i][static_cast<std::size_t>(index % radix)];
      index /= radix;
      s.pivots[i] = rref(s.blocks[i]).pivots;
    }
    visit(std::move(s), out);
  });
}

}  // namespace detail

inline std::vector<GradedSubspace<Fp>> enumerate_graded_subspaces(const DimVector& ambient, const DimVector& sdims,
                                                                  const FieldSpec& field,
                                                                  const EnumerationOptions& opts = {}) {
  return detail::for_each_graded_subspace<GradedSubspace<Fp>>(
      ambient, sdims, field, opts, [](GradedSubspace<Fp> s, auto& out) { out.push_back(std::move(s)); });
}

/// Quotient points of M of dimension v: graded subspaces of dimension
/// dim(M) - v that are submodules, optionally with nilpotent quotient.
inline std::vector<QuotientPoint<Fp>> enumerate_quotient_points(FramedModulePtr<Fp> m, const DimVector& v,
                                                                bool nilpotent_only = false,
                                                                const EnumerationOptions& opts = {}) {
  const auto mdims = m->dims();
  if (v.size() != mdims.size() || !dim_vector_le(v, mdims))
    throw std::invalid_argument("quotient dimension " + v.str() + " exceeds dim(M) = " + mdims.str());
  const ActionRecipe<Fp> recipe(*m->algebra);
  return detail::for_each_graded_subspace<QuotientPoint<Fp>>(
      mdims, mdims - v, m->field(), opts, [&](GradedSubspace<Fp> s, auto& out) {
        if (!is_submodule(s, *m)) return;
        QuotientPoint<Fp> qp{m, std::move(s)};
        if (nilpotent_only && !is_nilpotent(induced_quotient_rep(qp).rep, recipe)) return;
        out.push_back(std::move(qp));
      });
}

}  // namespace quivermod
