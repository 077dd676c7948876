// Line-oriented instance files.
//
//   # comment
//   vertices: 1 2
//   edge: a 1 2
//   algebra: preprojective | path | explicit
//   truncation: auto | <positive integer>
//   d: 1 0
//   v: 1 1
//   field: Q | F<p>
//   nilpotent: true | false
//
// Explicit algebras list their basis and structure constants instead of edges:
//
//   basis: e1 1 1 0
//   basis: a 1 2
//   idempotent: 1 e1
//   mult: a b = c*2 + d - f
//
// Products with an idempotent on either side are implied; a `mult` line sets
// the full product of its two basis elements and overrides the implied value.
#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quivermod/correspondence.hpp"
#include "quivermod/quiver.hpp"

namespace quivermod {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A token and where it was found (1-based; line 0 refers to the whole file).
struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

enum class AlgebraKind { Path, Preprojective, Explicit };

const char* algebra_kind_name(AlgebraKind k);

struct InstanceFile {
  struct EdgeSpec {
    Located label, source, target;
  };
  struct BasisSpec {
    Located label, source, target;
    std::optional<int> degree;
  };
  struct Term {
    Located element;
    Located coefficient;  // text "1" when omitted
    bool negate = false;
  };
  struct MultSpec {
    Located left, right;
    std::vector<Term> terms;
  };
  struct IdempotentSpec {
    Located vertex, element;
  };

  std::vector<std::string> vertices;
  Located vertices_at;
  std::vector<EdgeSpec> edges;
  AlgebraKind algebra = AlgebraKind::Path;
  std::optional<int> truncation;  // nullopt: auto
  DimVector d;
  DimVector v;
  FieldSpec field;
  bool nilpotent = false;
  std::vector<BasisSpec> basis;
  std::vector<IdempotentSpec> idempotents;
  std::vector<MultSpec> mults;

  /// auto resolves to max(1, nilpotency_bound(v)).
  int resolved_truncation() const;
  Quiver quiver() const;
};

/// Syntax and reference checks (vertices, edge endpoints, field, dimension
/// vector lengths, basis labels). Throws ParseError.
InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance_file(const std::string& path);

namespace detail {
[[noreturn]] void fail_at(const Located& where, const std::string& message);
}

/// The algebra described by the file, and the double quiver when the algebra
/// is a truncated preprojective algebra.
template <class S>
struct BuiltAlgebra {
  AlgebraPtr<S> algebra;
  std::optional<DoubledQuiver> preprojective;
  int truncation = 0;
};

template <class S>
BuiltAlgebra<S> build_algebra(const InstanceFile& f) {
  BuiltAlgebra<S> out;
  if (f.algebra != AlgebraKind::Explicit) {
    const auto q = f.quiver();
    out.truncation = f.resolved_truncation();
    if (f.algebra == AlgebraKind::Path) {
      out.algebra = std::make_shared<const AlgebraPresentation<S>>(
          build_path_algebra_truncated<S>(q, out.truncation, f.field));
    } else {
      out.algebra = std::make_shared<const AlgebraPresentation<S>>(
          build_truncated_preprojective<S>(q, out.truncation, f.field));
      out.preprojective = double_quiver(q);
    }
    return out;
  }

  const VertexSet vs(f.vertices);
  std::vector<BasisElement> basis;
  for (const auto& b : f.basis) basis.push_back({b.label.text, vs.index_of(b.source.text), vs.index_of(b.target.text), 0});
  auto index_of = [&](const Located& label) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].label == label.text) return k;
    detail::fail_at(label, "unknown basis element '" + label.text + "'");
  };

  std::vector<std::optional<std::size_t>> idem(vs.size());
  for (const auto& e : f.idempotents) {
    const auto i = vs.index_of(e.vertex.text);
    const auto k = index_of(e.element);
    if (basis[k].source != i || basis[k].target != i)
      detail::fail_at(e.element, "idempotent '" + e.element.text + "' must lie in e_i A e_i for its vertex");
    if (idem[i]) detail::fail_at(e.vertex, "vertex '" + e.vertex.text + "' already has an idempotent");
    idem[i] = k;
  }
  std::vector<std::size_t> idempotents;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!idem[i]) {
      const auto k = std::find_if(basis.begin(), basis.end(),
                                  [&](const BasisElement& b) { return b.label == "e" + vs.label(i); });
      if (k == basis.end())
        detail::fail_at(f.vertices_at, "no idempotent for vertex '" + vs.label(i) + "' (add 'idempotent: " + vs.label(i) +
                                   " <label>' or a basis element e" + vs.label(i) + ")");
      idem[i] = static_cast<std::size_t>(k - basis.begin());
    }
    idempotents.push_back(*idem[i]);
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const bool is_idem = std::find(idempotents.begin(), idempotents.end(), k) != idempotents.end();
    basis[k].degree = f.basis[k].degree.value_or(is_idem ? 0 : 1);
  }

  AlgebraPresentation<S> alg(f.field, vs, basis, idempotents);
  const S one = make_scalar<S>(f.field, 1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].source == i) alg.constant(idempotents[i], k, k) = one;
      if (basis[k].target == i) alg.constant(k, idempotents[i], k) = one;
    }
  }
  for (const auto& m : f.mults) {
    const auto l = index_of(m.left);
    const auto r = index_of(m.right);
    RowVector<S> value = RowVector<S>::Constant(static_cast<Index>(basis.size()), make_scalar<S>(f.field, 0));
    for (const auto& t : m.terms) {
      S c;
      try {
        c = parse_scalar<S>(f.field, t.coefficient.text);
      } catch (const std::exception& e) {
        detail::fail_at(t.coefficient, e.what());
      }
      value(static_cast<Index>(index_of(t.element))) += t.negate ? -c : c;
    }
    alg.set_product(l, r, bind_field(value, f.field));
  }
  out.algebra = std::make_shared<const AlgebraPresentation<S>>(std::move(alg));
  return out;
}

template <class S>
Instance<S> build_instance(const InstanceFile& f, const BuiltAlgebra<S>& built) {
  return make_instance<S>(built.algebra, f.d, f.v, f.nilpotent, built.preprojective);
}

}  // namespace quivermod
