// Framed representation points (x, p): right-module structures on an
// I-graded space V together with a graded framing p: D -> V, the gauge
// action of G_v = prod GL(v_i), stability by generation, and the
// equation-level checks for preprojective and nilpotent representations.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quivermod/algebra.hpp"
#include "quivermod/enumerate.hpp"
#include "quivermod/quiver.hpp"

namespace quivermod {

/// x(b): V_{src b} -> V_{tgt b} for every basis element b.
template <class S>
struct RepPoint {
  AlgebraPtr<S> algebra;
  DimVector dims;
  std::vector<Matrix<S>> action;

  friend bool operator==(const RepPoint& a, const RepPoint& b) {
    return a.dims == b.dims && same_matrices(a.action, b.action);
  }
};

template <class S>
struct FramedRepPoint {
  RepPoint<S> rep;
  DimVector framing;
  /// p[i]: D_i -> V_i.
  std::vector<Matrix<S>> p;

  const DimVector& dims() const { return rep.dims; }
  const AlgebraPresentation<S>& algebra() const { return *rep.algebra; }

  friend bool operator==(const FramedRepPoint& a, const FramedRepPoint& b) {
    return a.rep == b.rep && a.framing == b.framing && same_matrices(a.p, b.p);
  }
};

template <class S>
struct GaugeElement {
  std::vector<Matrix<S>> blocks;

  friend bool operator==(const GaugeElement& a, const GaugeElement& b) { return same_matrices(a.blocks, b.blocks); }
};

template <class S>
std::string describe(const FramedRepPoint<S>& fp) {
  const auto& a = fp.algebra();
  const auto& f = a.field();
  std::string s = "v=" + fp.dims().str() + " d=" + fp.framing.str() + " p={";
  for (std::size_t i = 0; i < fp.p.size(); ++i)
    s += (i ? "," : "") + a.vertices().label(i) + ":" + format_matrix(fp.p[i], f);
  s += "} x={";
  bool first = true;
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    if (a.is_idempotent_index(b)) continue;
    s += (first ? "" : ",") + a.element(b).label + ":" + format_matrix(fp.rep.action[b], f);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Generators: the action of a graded algebra is determined by its values on
// a generating set. Degree <= 1 non-idempotent elements are generators; a
// higher element k is rewritten as sum lambda * g * b' with deg g = 1.

template <class S>
class ActionRecipe {
 public:
  struct Term {
    S coeff;
    std::size_t left;
    std::size_t right;
  };

  explicit ActionRecipe(const AlgebraPresentation<S>& a) : terms_(a.dimension()) {
    const auto n = a.dimension();
    std::vector<std::size_t> order(n);
    for (std::size_t b = 0; b < n; ++b) order[b] = b;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return a.element(x).degree < a.element(y).degree; });
    std::vector<bool> known(n, false);
    for (auto e : a.idempotents()) known[e] = true;
    for (auto k : order) {
      if (known[k]) continue;
      const auto& ek = a.element(k);
      if (ek.degree >= 2) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t g = 0; g < n; ++g) {
          if (a.element(g).degree != 1 || a.is_idempotent_index(g) || !known[g]) continue;
          for (std::size_t r = 0; r < n; ++r)
            if (known[r] && a.element(r).degree == ek.degree - 1 && a.element(g).target == a.element(r).source)
              pairs.emplace_back(g, r);
        }
        if (!pairs.empty()) {
          Matrix<S> cols(static_cast<Index>(n), static_cast<Index>(pairs.size()));
          for (std::size_t c = 0; c < pairs.size(); ++c)
            cols.col(static_cast<Index>(c)) = a.product(pairs[c].first, pairs[c].second).transpose();
          const auto lambda = solve(cols, a.unit_vector(k).transpose());
          if (lambda) {
            for (std::size_t c = 0; c < pairs.size(); ++c)
              if (!is_zero((*lambda)(static_cast<Index>(c))))
                terms_[k].push_back({(*lambda)(static_cast<Index>(c)), pairs[c].first, pairs[c].second});
            derived_order_.push_back(k);
            known[k] = true;
            continue;
          }
        }
      }
      generators_.push_back(k);
      known[k] = true;
    }
    std::sort(generators_.begin(), generators_.end());
  }

  /// Basis indices whose action must be chosen freely.
  const std::vector<std::size_t>& generators() const { return generators_; }

  /// Fills in identity on idempotents and the derived elements; generator
  /// entries of `action` must already be set.
  void complete(const AlgebraPresentation<S>& a, const DimVector& dims, std::vector<Matrix<S>>& action) const {
    for (std::size_t i = 0; i < a.vertices().size(); ++i)
      action[a.idempotent(i)] = identity_matrix<S>(a.field(), dims[i]);
    for (auto k : derived_order_) {
      const auto& ek = a.element(k);
      Matrix<S> x = zero_matrix<S>(dims[ek.source], dims[ek.target]);
      for (const auto& t : terms_[k]) x += t.coeff * (action[t.left] * action[t.right]);
      action[k] = std::move(x);
    }
  }

 private:
  std::vector<std::vector<Term>> terms_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> derived_order_;
};

// ---------------------------------------------------------------------------

struct RepValidation {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks x(e_i) = id and x(b) x(b') = sum_k c^k x(k) for composable pairs.
template <class S>
RepValidation validate_rep(const RepPoint<S>& r, std::size_t max_failures = 16) {
  RepValidation out;
  const auto& a = *r.algebra;
  auto fail = [&](std::string s) {
    if (out.failures.size() < max_failures) out.failures.push_back(std::move(s));
  };
  auto full = [&] { return out.failures.size() >= max_failures; };
  if (r.dims.size() != a.vertices().size()) {
    fail("dimension vector does not match the vertex set");
    return out;
  }
  if (r.action.size() != a.dimension()) {
    fail("action must assign a matrix to every basis element");
    return out;
  }
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    const auto& eb = a.element(b);
    if (r.action[b].rows() != r.dims[eb.source] || r.action[b].cols() != r.dims[eb.target]) {
      fail("x(" + eb.label + ") has the wrong shape");
      return out;
    }
  }
  for (std::size_t i = 0; i < a.vertices().size(); ++i)
    if (!same_matrix(r.action[a.idempotent(i)], identity_matrix<S>(a.field(), r.dims[i])))
      fail("x(" + a.element(a.idempotent(i)).label + ") is not the identity");
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    for (std::size_t b2 = 0; b2 < a.dimension(); ++b2) {
      if (full()) return out;
      if (a.element(b).target != a.element(b2).source) continue;
      const auto src = a.element(b).source, tgt = a.element(b2).target;
      Matrix<S> rhs = zero_matrix<S>(r.dims[src], r.dims[tgt]);
      for (std::size_t k = 0; k < a.dimension(); ++k)
        if (!is_zero(a.constant(b, b2, k))) rhs += a.constant(b, b2, k) * r.action[k];
      if (r.action[b] * r.action[b2] != rhs)
        fail("x(" + a.element(b).label + "*" + a.element(b2).label + ") != x(" + a.element(b).label + ")x(" +
             a.element(b2).label + ")");
    }
  }
  return out;
}

/// Builds a RepPoint from matrices on the generators of `recipe`.
template <class S>
RepPoint<S> rep_from_generators(AlgebraPtr<S> algebra, const ActionRecipe<S>& recipe, const DimVector& dims,
                                std::vector<Matrix<S>> generator_action) {
  const auto& a = *algebra;
  if (generator_action.size() != recipe.generators().size())
    throw std::invalid_argument("rep_from_generators: one matrix per generator required");
  std::vector<Matrix<S>> action(a.dimension());
  for (std::size_t g = 0; g < recipe.generators().size(); ++g)
    action[recipe.generators()[g]] = std::move(generator_action[g]);
  recipe.complete(a, dims, action);
  return {std::move(algebra), dims, std::move(action)};
}

/// Rows: the images p_i(s) x(b) in V_j, indexed like the basis of (A_D)_j.
template <class S>
Matrix<S> generation_matrix(const FramedRepPoint<S>& fp, std::size_t j) {
  const auto& a = fp.algebra();
  std::vector<RowVector<S>> rows;
  for (std::size_t i = 0; i < a.vertices().size(); ++i)
    for (int s = 0; s < fp.framing[i]; ++s)
      for (std::size_t b = 0; b < a.dimension(); ++b)
        if (a.element(b).source == i && a.element(b).target == j)
          rows.push_back(fp.p[i].row(s) * fp.rep.action[b]);
  Matrix<S> m(static_cast<Index>(rows.size()), fp.dims()[j]);
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r];
  return m;
}

/// Image of p generates V: closure W_{k+1} = W_k + sum_b W_k x(b) from W_0 = im p.
template <class S>
bool is_stable(const FramedRepPoint<S>& fp) {
  const auto& a = fp.algebra();
  const auto nv = a.vertices().size();
  const auto& v = fp.dims();
  std::vector<Rref<S>> w(nv);
  int total = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    w[i] = row_space(fp.p[i]);
    total += static_cast<int>(w[i].rank());
  }
  for (int iter = 0; iter <= v.total() && total < v.total(); ++iter) {
    std::vector<Matrix<S>> grown(nv);
    for (std::size_t j = 0; j < nv; ++j) grown[j] = w[j].matrix;
    for (std::size_t b = 0; b < a.dimension(); ++b) {
      const auto& eb = a.element(b);
      if (a.is_idempotent_index(b) || w[eb.source].rank() == 0) continue;
      const Matrix<S> img = w[eb.source].matrix * fp.rep.action[b];
      Matrix<S> stacked(grown[eb.target].rows() + img.rows(), v[eb.target]);
      stacked << grown[eb.target], img;
      grown[eb.target] = std::move(stacked);
    }
    int next_total = 0;
    for (std::size_t j = 0; j < nv; ++j) {
      w[j] = row_space(grown[j]);
      next_total += static_cast<int>(w[j].rank());
    }
    if (next_total == total) break;
    total = next_total;
  }
  return total == v.total();
}

template <class S>
FramedRepPoint<S> gauge_act(const GaugeElement<S>& g, const FramedRepPoint<S>& fp) {
  const auto& a = fp.algebra();
  const auto nv = a.vertices().size();
  if (g.blocks.size() != nv) throw std::invalid_argument("gauge_act: one block per vertex required");
  for (std::size_t i = 0; i < nv; ++i)
    if (g.blocks[i].rows() != fp.dims()[i] || g.blocks[i].cols() != fp.dims()[i])
      throw std::invalid_argument("gauge_act: block shape does not match the dimension vector");
  std::vector<Matrix<S>> inv(nv);
  for (std::size_t i = 0; i < nv; ++i) inv[i] = inverse(g.blocks[i]);
  FramedRepPoint<S> out = fp;
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    const auto& eb = a.element(b);
    out.rep.action[b] = bind_field(inv[eb.source] * fp.rep.action[b] * g.blocks[eb.target], a.field());
  }
  for (std::size_t i = 0; i < nv; ++i) out.p[i] = bind_field(fp.p[i] * g.blocks[i], a.field());
  return out;
}

template <class S>
GaugeElement<S> identity_gauge(const FieldSpec& field, const DimVector& v) {
  GaugeElement<S> g;
  for (std::size_t i = 0; i < v.size(); ++i) g.blocks.push_back(identity_matrix<S>(field, v[i]));
  return g;
}

template <class S>
GaugeElement<S> compose(const GaugeElement<S>& first, const GaugeElement<S>& second) {
  GaugeElement<S> g;
  for (std::size_t i = 0; i < first.blocks.size(); ++i) g.blocks.push_back(first.blocks[i] * second.blocks[i]);
  return g;
}

template <class S>
GaugeElement<S> inverse(const GaugeElement<S>& g) {
  GaugeElement<S> out;
  for (const auto& b : g.blocks) out.blocks.push_back(inverse(b));
  return out;
}

/// The unique gamma with gauge_act(gamma, fp) == fp2, if it exists.
///
/// gamma_j is pinned down on the spanning vectors p_i(s) x(b) of V_j and the
/// candidate is accepted only if it is invertible and carries fp to fp2.
template <class S>
std::optional<GaugeElement<S>> orbit_equal(const FramedRepPoint<S>& fp, const FramedRepPoint<S>& fp2) {
  if (fp.dims() != fp2.dims() || fp.framing != fp2.framing)
    throw std::invalid_argument("orbit_equal: points have different dimension vectors");
  if (!is_stable(fp) || !is_stable(fp2)) throw std::invalid_argument("orbit_equal: unstable input");
  const auto& a = fp.algebra();
  GaugeElement<S> g;
  for (std::size_t j = 0; j < a.vertices().size(); ++j) {
    const auto src = generation_matrix(fp, j);
    const auto dst = generation_matrix(fp2, j);
    const auto independent = rref(src.transpose()).pivots;
    const auto n = fp.dims()[j];
    if (static_cast<Index>(independent.size()) != n) return std::nullopt;
    Matrix<S> src_sub(n, n), dst_sub(n, n);
    for (Index k = 0; k < n; ++k) {
      src_sub.row(k) = src.row(independent[static_cast<std::size_t>(k)]);
      dst_sub.row(k) = dst.row(independent[static_cast<std::size_t>(k)]);
    }
    Matrix<S> gamma = bind_field(inverse(src_sub) * dst_sub, a.field());
    if (!is_invertible(gamma) || src * gamma != dst) return std::nullopt;
    g.blocks.push_back(std::move(gamma));
  }
  if (!(gauge_act(g, fp) == fp2)) return std::nullopt;
  return g;
}

// ---------------------------------------------------------------------------
// Equation-level view: a representation of a quiver as one matrix per edge.

template <class S>
struct QuiverRep {
  DimVector dims;
  /// maps[e]: V_{source e} -> V_{target e}
  std::vector<Matrix<S>> maps;
};

/// Reads the edge matrices of `q` off a representation of an algebra built
/// from q (matched by edge label; edges killed by truncation act as zero).
template <class S>
QuiverRep<S> quiver_rep(const RepPoint<S>& r, const Quiver& q) {
  QuiverRep<S> out{r.dims, {}};
  for (const auto& e : q.edges()) {
    const auto b = r.algebra->find(e.label);
    if (b == r.algebra->dimension())
      out.maps.push_back(zero_matrix<S>(r.dims[e.source], r.dims[e.target]));
    else
      out.maps.push_back(r.action[b]);
  }
  return out;
}

/// At every vertex i: sum_{a: src a = i} x_a x_{a*} - sum_{a: tgt a = i} x_{a*} x_a = 0
/// (row-vector products, i.e. x_{a*} o x_a as maps).
template <class S>
bool check_preprojective_relation(const DoubledQuiver& qbar, const QuiverRep<S>& x) {
  const auto& edges = qbar.quiver.edges();
  const auto nv = qbar.quiver.vertices().size();
  if (x.maps.size() != edges.size()) throw std::invalid_argument("check_preprojective_relation: edge count mismatch");
  std::vector<Matrix<S>> sum(nv);
  for (std::size_t i = 0; i < nv; ++i) sum[i] = zero_matrix<S>(x.dims[i], x.dims[i]);
  for (std::size_t a = 0; a < qbar.arrows; ++a) {
    const auto& e = edges[a];
    sum[e.source] += x.maps[a] * x.maps[a + qbar.arrows];
    sum[e.target] -= x.maps[a + qbar.arrows] * x.maps[a];
  }
  for (const auto& m : sum)
    if (!is_zero_matrix(m)) return false;
  return true;
}

/// Per-step total dimensions of V^(0) = V, V^(k+1) = sum_a V^(k) x_a, until
/// the chain reaches 0 or stops shrinking.
template <class S>
std::vector<int> nilpotency_chain(const std::vector<Edge>& arrows, const QuiverRep<S>& x) {
  const auto nv = x.dims.size();
  std::vector<Matrix<S>> layer(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    layer[i] = zero_matrix<S>(x.dims[i], x.dims[i]);
    for (Index k = 0; k < x.dims[i]; ++k) layer[i](k, k) = S(1);
  }
  std::vector<int> chain{x.dims.total()};
  while (chain.back() > 0) {
    std::vector<Matrix<S>> next(nv);
    for (std::size_t i = 0; i < nv; ++i) next[i] = zero_matrix<S>(0, x.dims[i]);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const auto& e = arrows[a];
      if (layer[e.source].rows() == 0) continue;
      const Matrix<S> img = layer[e.source] * x.maps[a];
      Matrix<S> stacked(next[e.target].rows() + img.rows(), x.dims[e.target]);
      stacked << next[e.target], img;
      next[e.target] = std::move(stacked);
    }
    int total = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      layer[i] = row_space(next[i]).matrix;
      total += static_cast<int>(layer[i].rows());
    }
    if (total == chain.back()) break;
    chain.push_back(total);
  }
  return chain;
}

/// V^(N) = 0 for N = nilpotency_bound(dims).
template <class S>
bool is_nilpotent(const Quiver& q, const QuiverRep<S>& x) {
  const auto chain = nilpotency_chain(q.edges(), x);
  const auto n = static_cast<std::size_t>(nilpotency_bound(x.dims));
  return chain.back() == 0 && chain.size() - 1 <= n;
}

/// Nilpotency of an algebra representation, using the generators as arrows.
template <class S>
bool is_nilpotent(const RepPoint<S>& r, const ActionRecipe<S>& recipe) {
  const auto& a = *r.algebra;
  std::vector<Edge> arrows;
  QuiverRep<S> x{r.dims, {}};
  for (auto g : recipe.generators()) {
    arrows.push_back({a.element(g).label, a.element(g).source, a.element(g).target});
    x.maps.push_back(r.action[g]);
  }
  const auto chain = nilpotency_chain(arrows, x);
  return chain.back() == 0 && chain.size() - 1 <= static_cast<std::size_t>(nilpotency_bound(r.dims));
}

template <class S>
bool is_nilpotent(const RepPoint<S>& r) {
  return is_nilpotent(r, ActionRecipe<S>(*r.algebra));
}

// ---------------------------------------------------------------------------
// Random points (used by spot checks over any field).

template <class S, class Rng>
S random_scalar(const FieldSpec& field, Rng& rng, int height) {
  if (field.is_finite()) {
    std::uniform_int_distribution<std::int64_t> d(0, field.characteristic - 1);
    return make_scalar<S>(field, d(rng));
  }
  std::uniform_int_distribution<std::int64_t> num(-height, height);
  std::uniform_int_distribution<std::int64_t> den(1, height);
  return make_scalar<S>(field, num(rng)) / make_scalar<S>(field, den(rng));
}

template <class S, class Rng>
Matrix<S> random_matrix(const FieldSpec& field, Index rows, Index cols, Rng& rng, int height, double zero_rate = 0) {
  std::bernoulli_distribution zero(zero_rate);
  Matrix<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = zero(rng) ? make_scalar<S>(field, 0) : random_scalar<S>(field, rng, height);
  return m;
}

template <class S, class Rng>
GaugeElement<S> random_gauge(const FieldSpec& field, const DimVector& v, Rng& rng, int height = 5) {
  GaugeElement<S> g;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Matrix<S> m;
    do {
      m = random_matrix<S>(field, v[i], v[i], rng, height);
    } while (!is_invertible(m));
    g.blocks.push_back(std::move(m));
  }
  return g;
}

/// Rejection-samples a valid framed point; each generator entry is zero with
/// probability `zero_rate`, which makes relations such as x_a x_b = 0 likely
/// to hold. Returns nullopt after `attempts` failures.
template <class S, class Rng>
std::optional<FramedRepPoint<S>> random_stable_point(AlgebraPtr<S> algebra, const DimVector& d, const DimVector& v,
                                                     Rng& rng, int height = 4, double zero_rate = 0.5,
                                                     int attempts = 100000) {
  const auto& a = *algebra;
  const auto& f = a.field();
  const ActionRecipe<S> recipe(a);
  for (int t = 0; t < attempts; ++t) {
    std::vector<Matrix<S>> gens;
    for (auto g : recipe.generators())
      gens.push_back(random_matrix<S>(f, v[a.element(g).source], v[a.element(g).target], rng, height, zero_rate));
    FramedRepPoint<S> fp{rep_from_generators(algebra, recipe, v, std::move(gens)), d, {}};
    for (std::size_t i = 0; i < v.size(); ++i) fp.p.push_back(random_matrix<S>(f, d[i], v[i], rng, height, zero_rate / 2));
    if (validate_rep(fp.rep, 1).ok() && is_stable(fp)) return fp;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration over F_p.

struct FramedFilters {
  bool stable = true;
  bool nilpotent = false;
  /// When set, also require the preprojective relation for this double quiver.
  const DoubledQuiver* preprojective = nullptr;
};

/// Layout of the free entries of a framed point: generator matrices, then
/// the framing blocks, each row-major.
struct FramedSearchSpace {
  std::vector<std::pair<Index, Index>> generator_shapes;
  std::vector<std::pair<Index, Index>> framing_shapes;
  std::uint64_t entries = 0;
};

template <class S>
FramedSearchSpace framed_search_space(const AlgebraPresentation<S>& a, const ActionRecipe<S>& recipe,
                                      const DimVector& d, const DimVector& v) {
  FramedSearchSpace s;
  for (auto g : recipe.generators()) {
    s.generator_shapes.emplace_back(v[a.element(g).source], v[a.element(g).target]);
    s.entries += static_cast<std::uint64_t>(v[a.element(g).source] * v[a.element(g).target]);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.framing_shapes.emplace_back(d[i], v[i]);
    s.entries += static_cast<std::uint64_t>(d[i] * v[i]);
  }
  return s;
}

/// Every framed point over F_p passing validate_rep and the filters, in
/// lexicographic order of the entry tuple (first entry most significant).
inline std::vector<FramedRepPoint<Fp>> enumerate_framed_points(AlgebraPtr<Fp> algebra, const DimVector& d,
                                                               const DimVector& v, const FramedFilters& filters = {},
                                                               const EnumerationOptions& opts = {}) {
  const auto& a = *algebra;
  const auto& field = a.field();
  if (!field.is_finite()) throw std::invalid_argument("enumeration requires a finite field");
  require_same_vertices(d, a.vertices(), "enumerate_framed_points");
  require_same_vertices(v, a.vertices(), "enumerate_framed_points");
  const ActionRecipe<Fp> recipe(a);
  const auto space = framed_search_space(a, recipe, d, v);
  const std::uint64_t q = field.characteristic;
  const BigInt size = big_pow(q, space.entries);
  if (size > opts.budget) throw BudgetExceeded("framed-point enumeration", size, opts.budget);
  const auto total = static_cast<std::uint64_t>(size);

  return run_blocks<FramedRepPoint<Fp>>(total, opts.threads, [&](std::uint64_t index, auto& out) {
    std::vector<std::uint32_t> digits(space.entries);
    for (std::size_t k = space.entries; k-- > 0;) {
      digits[k] = static_cast<std::uint32_t>(index % q);
      index /= q;
    }
    std::size_t pos = 0;
    auto take = [&](Index rows, Index cols) {
      Matrix<Fp> m(rows, cols);
      for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) m(r, c) = Fp(digits[pos++], field.characteristic);
      return m;
    };
    std::vector<Matrix<Fp>> gens;
    for (auto [r, c] : space.generator_shapes) gens.push_back(take(r, c));
    FramedRepPoint<Fp> fp{rep_from_generators(algebra, recipe, v, std::move(gens)), d, {}};
    for (auto [r, c] : space.framing_shapes) fp.p.push_back(take(r, c));
    if (!validate_rep(fp.rep, 1).ok()) return;
    if (filters.preprojective &&
        !check_preprojective_relation(*filters.preprojective, quiver_rep(fp.rep, filters.preprojective->quiver)))
      return;
    if (filters.nilpotent && !is_nilpotent(fp.rep, recipe)) return;
    if (filters.stable && !is_stable(fp)) return;
    out.push_back(std::move(fp));
  });
}

}  // namespace quivermod
