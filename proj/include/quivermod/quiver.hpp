// Quivers, truncated path algebras, double quivers and truncated preprojective
// algebras, all produced as AlgebraPresentations.
//
// Paths compose left to right: the path `pq` traverses p, then q. A right
// module therefore acts by v.(pq) = (v.p).q.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "quivermod/algebra.hpp"

namespace quivermod {

struct Edge {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(VertexSet vertices, std::vector<Edge> edges);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_index(const std::string& label) const;
  bool has_edge_loops() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
};

/// Double quiver: edges [0, arrows) are the original a, edge k + arrows is a*.
struct DoubledQuiver {
  Quiver quiver;
  std::size_t arrows = 0;
};

DoubledQuiver double_quiver(const Quiver& q);

/// A path: zero-length paths carry their vertex, others their edge chain.
struct Path {
  std::size_t vertex = 0;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
  std::size_t source(const Quiver& q) const { return edges.empty() ? vertex : q.edges()[edges.front()].source; }
  std::size_t target(const Quiver& q) const { return edges.empty() ? vertex : q.edges()[edges.back()].target; }
  std::string label(const Quiver& q) const;

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// All paths of length < bound, ordered by length, then source vertex for
/// length 0, then lexicographically by edge index.
std::vector<Path> enumerate_paths(const Quiver& q, int bound);

/// N = sum_i v_i: any nilpotent representation of dimension v is killed by
/// paths of length >= N.
int nilpotency_bound(const DimVector& v);

template <class S>
AlgebraPresentation<S> build_path_algebra_truncated(const Quiver& q, int bound, const FieldSpec& field) {
  if (bound < 1) throw std::invalid_argument("truncation bound must be at least 1");
  const auto paths = enumerate_paths(q, bound);
  std::map<Path, std::size_t> index;
  std::vector<BasisElement> basis;
  std::vector<std::size_t> idempotents(q.vertices().size());
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& p = paths[k];
    index.emplace(p, k);
    basis.push_back({p.label(q), p.source(q), p.target(q), static_cast<int>(p.length())});
    if (p.length() == 0) idempotents[p.vertex] = k;
  }
  AlgebraPresentation<S> alg(field, q.vertices(), std::move(basis), std::move(idempotents));
  const S one = make_scalar<S>(field, 1);
  for (std::size_t x = 0; x < paths.size(); ++x) {
    for (std::size_t y = 0; y < paths.size(); ++y) {
      const auto& p = paths[x];
      const auto& r = paths[y];
      if (p.target(q) != r.source(q)) continue;
      Path cat{p.source(q), p.edges};
      cat.edges.insert(cat.edges.end(), r.edges.begin(), r.edges.end());
      const auto it = index.find(cat);
      if (it != index.end()) alg.constant(x, y, it->second) = one;
    }
  }
  return alg;
}

/// Components e_i theta e_i of theta = sum_a (a a* - a* a), one vector per
/// vertex, in the basis of `alg` (a truncated path algebra of qbar).
template <class S>
std::vector<RowVector<S>> theta_components(const DoubledQuiver& qbar, const AlgebraPresentation<S>& alg) {
  const auto& edges = qbar.quiver.edges();
  const auto nv = qbar.quiver.vertices().size();
  std::vector<RowVector<S>> comps(nv, RowVector<S>::Constant(static_cast<Index>(alg.dimension()), S(0)));
  const S one = make_scalar<S>(alg.field(), 1);
  for (std::size_t a = 0; a < qbar.arrows; ++a) {
    const auto& e = edges[a];
    const auto& es = edges[a + qbar.arrows];
    const auto aas = alg.find(e.label + es.label);
    const auto asa = alg.find(es.label + e.label);
    if (aas == alg.dimension() || asa == alg.dimension())
      throw std::invalid_argument("theta_components: truncation too small to contain length-2 paths");
    comps[e.source](static_cast<Index>(aas)) += one;
    comps[e.target](static_cast<Index>(asa)) -= one;
  }
  for (auto& c : comps) c = bind_field(c, alg.field());
  return comps;
}

/// A quotient of a length-graded algebra by a homogeneous two-sided ideal.
template <class S>
struct IdealQuotient {
  AlgebraPresentation<S> algebra;
  /// kept[k] is the index in the original algebra of quotient basis element k.
  std::vector<std::size_t> kept;
  /// Per degree: the ideal piece I_n as RREF rows over all original coordinates.
  std::map<int, Rref<S>> ideal;

  Index ideal_rank(int degree) const {
    const auto it = ideal.find(degree);
    return it == ideal.end() ? 0 : it->second.rank();
  }

  /// Normal form of an original-algebra element, in quotient coordinates.
  RowVector<S> reduce(const RowVector<S>& x) const {
    RowVector<S> w = x;
    for (const auto& [deg, piece] : ideal) w = reduce_mod<S>(w, piece.matrix, piece.pivots);
    RowVector<S> out(static_cast<Index>(kept.size()));
    for (std::size_t k = 0; k < kept.size(); ++k) out(static_cast<Index>(k)) = w(static_cast<Index>(kept[k]));
    return out;
  }
};

/// Degreewise: I_n = span{ b g c } for basis elements b, c and generators g;
/// the quotient keeps the non-pivot coordinates of rref(I_n).
template <class S>
IdealQuotient<S> ideal_quotient(const AlgebraPresentation<S>& alg, const std::vector<RowVector<S>>& gens) {
  const auto n = alg.dimension();
  auto degree_of = [&](const RowVector<S>& x) {
    int deg = -1;
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(x(static_cast<Index>(k)))) continue;
      const int d = alg.element(k).degree;
      if (deg >= 0 && d != deg) throw std::invalid_argument("ideal generators must be homogeneous");
      deg = d;
    }
    return deg;
  };

  std::map<int, std::vector<RowVector<S>>> spans;
  for (const auto& g : gens) {
    if (g.size() != static_cast<Index>(n)) throw std::invalid_argument("generator has the wrong length");
    if (degree_of(g) < 0) continue;
    for (std::size_t c = 0; c < n; ++c) {
      const auto gc = alg.multiply(g, alg.unit_vector(c));
      if (is_zero_matrix(gc)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        auto bgc = alg.multiply(alg.unit_vector(b), gc);
        const int deg = degree_of(bgc);
        if (deg >= 0) spans[deg].push_back(std::move(bgc));
      }
    }
  }

  IdealQuotient<S> out{alg, {}, {}};
  std::vector<bool> killed(n, false);
  for (auto& [deg, rows] : spans) {
    Matrix<S> m(static_cast<Index>(rows.size()), static_cast<Index>(n));
    for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r];
    auto piece = row_space(m);
    piece.matrix = bind_field(piece.matrix, alg.field());
    for (auto p : piece.pivots) killed[static_cast<std::size_t>(p)] = true;
    out.ideal.emplace(deg, std::move(piece));
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!killed[k]) out.kept.push_back(k);

  std::vector<std::size_t> new_index(n, n);
  for (std::size_t k = 0; k < out.kept.size(); ++k) new_index[out.kept[k]] = k;
  std::vector<BasisElement> basis;
  for (auto k : out.kept) basis.push_back(alg.element(k));
  std::vector<std::size_t> idem;
  for (auto e : alg.idempotents()) {
    if (killed[e]) throw std::invalid_argument("ideal contains a vertex idempotent");
    idem.push_back(new_index[e]);
  }
  AlgebraPresentation<S> q(alg.field(), alg.vertices(), std::move(basis), std::move(idem));
  for (std::size_t x = 0; x < out.kept.size(); ++x)
    for (std::size_t y = 0; y < out.kept.size(); ++y)
      q.set_product(x, y, bind_field(out.reduce(alg.product(out.kept[x], out.kept[y])), alg.field()));
  out.algebra = std::move(q);
  return out;
}

template <class S>
AlgebraPresentation<S> quotient_by_two_sided_ideal(const AlgebraPresentation<S>& alg,
                                                   const std::vector<RowVector<S>>& gens) {
  return ideal_quotient(alg, gens).algebra;
}

/// Pi_0 / (Pi_0)_{>= bound} for the double of q.
template <class S>
AlgebraPresentation<S> build_truncated_preprojective(const Quiver& q, int bound, const FieldSpec& field) {
  if (q.has_edge_loops())
    throw std::invalid_argument("preprojective algebra requires a quiver without edge-loops");
  const auto qbar = double_quiver(q);
  auto path = build_path_algebra_truncated<S>(qbar.quiver, bound, field);
  if (bound <= 2 || qbar.arrows == 0) return path;
  return quotient_by_two_sided_ideal(path, theta_components(qbar, path));
}

}  // namespace quivermod
