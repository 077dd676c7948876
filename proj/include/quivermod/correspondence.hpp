// The point-level bijection between stable framed representations modulo
// gauge and quotient modules of A_D:
//
//   (x, p)  |->  ker(A_D -> V, (s, b) |-> p(s) x(b))
//   A_D/S   |->  (induced action on A_D/S, D -> A_D -> A_D/S)
//
// plus exhaustive round-trip verification and point counting over F_p.
#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quivermod/framed_reps.hpp"
#include "quivermod/grassmannian.hpp"

namespace quivermod {

template <class S>
struct Instance {
  AlgebraPtr<S> algebra;
  DimVector d;
  DimVector v;
  bool nilpotent_only = false;
  /// Set when the algebra is a truncated preprojective algebra of this double quiver.
  std::optional<DoubledQuiver> preprojective;
  FramedModulePtr<S> module;
  std::vector<std::string> warnings;

  const FieldSpec& field() const { return algebra->field(); }
  std::string describe() const {
    return "d=" + d.str() + " v=" + v.str() + " field=" + field().name() + " dim(A)=" +
           std::to_string(algebra->dimension()) + " dim(A_D)=" + module->dims().str() +
           (nilpotent_only ? " nilpotent" : "");
  }
};

/// Requires v <= dim(A_D); records a warning when d <= v fails.
template <class S>
Instance<S> make_instance(AlgebraPtr<S> algebra, DimVector d, DimVector v, bool nilpotent_only = false,
                          std::optional<DoubledQuiver> preprojective = std::nullopt) {
  require_same_vertices(d, algebra->vertices(), "instance framing d");
  require_same_vertices(v, algebra->vertices(), "instance dimension v");
  Instance<S> inst{algebra, std::move(d), std::move(v), nilpotent_only, std::move(preprojective), nullptr, {}};
  inst.module = std::make_shared<const FramedModule<S>>(build_framed_module(algebra, inst.d));
  const auto md = inst.module->dims();
  if (!dim_vector_le(inst.v, md))
    throw std::invalid_argument("v = " + inst.v.str() + " is not <= dim(A_D) = " + md.str() +
                                "; no surjection A_D -> V exists");
  if (!dim_vector_le(inst.d, inst.v))
    inst.warnings.push_back("d = " + inst.d.str() + " is not <= v = " + inst.v.str() +
                            "; the framing cannot be injective");
  return inst;
}

template <class S>
QuotientPoint<S> rep_to_quotient(const FramedRepPoint<S>& fp, FramedModulePtr<S> m) {
  if (fp.framing != m->framing) throw std::invalid_argument("rep_to_quotient: framing dimensions differ");
  const auto& field = m->field();
  const auto md = m->dims();
  std::vector<Matrix<S>> kernels;
  for (std::size_t j = 0; j < md.size(); ++j) {
    const auto phi = generation_matrix(fp, j);
    if (phi.rows() != md[j]) throw std::logic_error("rep_to_quotient: generation matrix does not match A_D");
    if (rank(phi) != fp.dims()[j])
      throw std::invalid_argument("rep_to_quotient: unstable input (A_D -> V is not surjective at vertex " +
                                  m->algebra->vertices().label(j) + ")");
    kernels.push_back(left_kernel_basis(phi));
  }
  return {std::move(m), GradedSubspace<S>::span(md, kernels, field)};
}

template <class S>
FramedRepPoint<S> quotient_to_rep(const QuotientPoint<S>& qp) {
  auto induced = induced_quotient_rep(qp);
  const auto& m = *qp.module;
  FramedRepPoint<S> fp{std::move(induced.rep), m.framing, {}};
  for (std::size_t i = 0; i < m.inclusion.size(); ++i)
    fp.p.push_back(bind_field(m.inclusion[i] * induced.projection[i], m.field()));
  return fp;
}

/// |G_v(F_q)| = prod_i prod_{k<v_i} (q^{v_i} - q^k).
BigInt gauge_group_order(const DimVector& v, std::uint64_t q);

enum class Fault { None, DropFraming };

struct RoundTripFailure {
  std::string side;  // "gr" or "rep" or "count"
  std::string reason;
  std::string witness;
};

struct VerificationReport {
  std::string instance;
  std::vector<std::string> warnings;
  std::uint64_t count_gr = 0;
  std::uint64_t stable_points = 0;
  /// Method (a): orbit classes of stable points under orbit_equal.
  std::uint64_t count_rep_orbits = 0;
  /// Method (b): stable points / |G_v(F_q)|; absent if the division is inexact.
  std::optional<BigInt> count_rep_quotient;
  BigInt gauge_order = 0;
  bool roundtrip_checked = false;
  std::uint64_t roundtrips = 0;
  std::vector<RoundTripFailure> failures;
  std::map<std::string, double> timings_ms;

  bool gr_side = true;
  bool rep_side = true;
  bool counts_checked = false;

  /// Every count that was computed agrees with the others.
  bool counts_agree() const {
    if (!counts_checked) return false;
    if (rep_side && (!count_rep_quotient || *count_rep_quotient != count_rep_orbits)) return false;
    return !(rep_side && gr_side) || count_rep_orbits == count_gr;
  }
  bool bijection_ok() const { return gr_side && rep_side && counts_agree() && failures.empty(); }
};

struct VerifyOptions {
  bool roundtrip = true;
  bool counts = true;
  bool gr_side = true;
  bool rep_side = true;
  /// Pairwise orbit_equal between distinct classes is skipped above this many classes.
  std::size_t max_cross_check_classes = 512;
  Fault fault = Fault::None;
  EnumerationOptions enumeration;
};

namespace detail {

template <class S>
FramedRepPoint<S> apply_fault(FramedRepPoint<S> fp, Fault fault) {
  if (fault == Fault::DropFraming) {
    for (auto& p : fp.p) {
      if (p.size() == 0) continue;
      p.setConstant(S(0));
      break;
    }
  }
  return fp;
}

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Exhaustive verification over F_p: enumerates both sides, round-trips every
/// point, and counts orbits by two independent methods.
inline VerificationReport run_verification(const Instance<Fp>& inst, const VerifyOptions& opts = {}) {
  VerificationReport rep;
  rep.instance = inst.describe();
  rep.warnings = inst.warnings;
  const auto& field = inst.field();
  if (!field.is_finite()) throw std::invalid_argument("exhaustive verification requires a finite field");
  detail::Stopwatch clock;

  rep.gr_side = opts.gr_side;
  rep.rep_side = opts.rep_side;
  std::vector<QuotientPoint<Fp>> quotients;
  if (opts.gr_side) {
    quotients = enumerate_quotient_points(inst.module, inst.v, inst.nilpotent_only, opts.enumeration);
    rep.count_gr = quotients.size();
    rep.timings_ms["enumerate_gr"] = clock.lap_ms();
  }

  std::vector<FramedRepPoint<Fp>> stable;
  if (opts.rep_side) {
    FramedFilters filters;
    filters.stable = true;
    filters.nilpotent = inst.nilpotent_only;
    filters.preprojective = inst.preprojective ? &*inst.preprojective : nullptr;
    stable = enumerate_framed_points(inst.algebra, inst.d, inst.v, filters, opts.enumeration);
    rep.stable_points = stable.size();
    rep.timings_ms["enumerate_rep"] = clock.lap_ms();
  }

  auto fail = [&](std::string side, std::string reason, std::string witness) {
    rep.failures.push_back({std::move(side), std::move(reason), std::move(witness)});
  };

  if (opts.roundtrip) {
    rep.roundtrip_checked = true;
    for (const auto& qp : quotients) {
      ++rep.roundtrips;
      try {
        const auto fp = detail::apply_fault(quotient_to_rep(qp), opts.fault);
        if (!is_stable(fp)) {
          fail("gr", "quotient_to_rep produced an unstable point", "kernel " + qp.key() + " -> " + describe(fp));
          continue;
        }
        if (inst.nilpotent_only && !is_nilpotent(fp.rep)) {
          fail("gr", "nilpotent quotient mapped to a non-nilpotent representation", "kernel " + qp.key());
          continue;
        }
        const auto back = rep_to_quotient(fp, inst.module);
        if (!(back == qp)) fail("gr", "rep_to_quotient(quotient_to_rep(S)) != S", qp.key() + " vs " + back.key());
      } catch (const std::exception& e) {
        fail("gr", e.what(), "kernel " + qp.key());
      }
    }
    for (const auto& fp : stable) {
      ++rep.roundtrips;
      try {
        const auto qp = rep_to_quotient(fp, inst.module);
        const auto fp2 = detail::apply_fault(quotient_to_rep(qp), opts.fault);
        if (!orbit_equal(fp2, fp)) fail("rep", "quotient_to_rep(rep_to_quotient(x,p)) not in the orbit of (x,p)", describe(fp));
      } catch (const std::exception& e) {
        fail("rep", e.what(), describe(fp));
      }
    }
    rep.timings_ms["roundtrip"] = clock.lap_ms();
  }

  if (opts.counts) {
    rep.counts_checked = true;
  }
  if (opts.counts && opts.rep_side) {
    // (a) orbit classes, bucketed by kernel and decided by orbit_equal
    std::map<std::string, std::vector<std::size_t>> buckets;
    std::vector<std::size_t> representatives;
    for (std::size_t k = 0; k < stable.size(); ++k) {
      std::string key;
      try {
        key = rep_to_quotient(stable[k], inst.module).key();
      } catch (const std::exception& e) {
        fail("count", e.what(), describe(stable[k]));
        continue;
      }
      auto& reps = buckets[key];
      bool found = false;
      for (auto r : reps) {
        if (orbit_equal(stable[r], stable[k])) {
          found = true;
          break;
        }
      }
      if (!found) {
        if (!reps.empty())
          fail("count", "two points with the same kernel are not gauge equivalent", describe(stable[k]));
        reps.push_back(k);
        representatives.push_back(k);
      }
    }
    rep.count_rep_orbits = representatives.size();
    if (representatives.size() <= opts.max_cross_check_classes) {
      for (std::size_t x = 0; x < representatives.size(); ++x)
        for (std::size_t y = x + 1; y < representatives.size(); ++y)
          if (orbit_equal(stable[representatives[x]], stable[representatives[y]]))
            fail("count", "points with different kernels are gauge equivalent", describe(stable[representatives[x]]));
    }

    // (b) free action: |stable| / |G_v(F_q)|
    rep.gauge_order = gauge_group_order(inst.v, field.characteristic);
    const BigInt n = rep.stable_points;
    if (n % rep.gauge_order == 0) {
      rep.count_rep_quotient = n / rep.gauge_order;
    } else {
      fail("count", "stable point count is not divisible by |G_v(F_q)|; the gauge action is not free",
           n.str() + " / " + rep.gauge_order.str());
    }
  }
  if (opts.counts) {
    if (!rep.counts_agree())
      fail("count", "point counts disagree",
           "gr=" + std::to_string(rep.count_gr) + " orbits=" + std::to_string(rep.count_rep_orbits) +
               " stable/|G|=" + (rep.count_rep_quotient ? rep.count_rep_quotient->str() : "n/a"));
    rep.timings_ms["count"] = clock.lap_ms();
  }
  return rep;
}

inline VerificationReport verify_roundtrip(const Instance<Fp>& inst, const EnumerationOptions& enumeration = {}) {
  VerifyOptions opts;
  opts.counts = false;
  opts.enumeration = enumeration;
  return run_verification(inst, opts);
}

inline VerificationReport count_points_both_sides(const Instance<Fp>& inst, const EnumerationOptions& enumeration = {}) {
  VerifyOptions opts;
  opts.roundtrip = false;
  opts.enumeration = enumeration;
  return run_verification(inst, opts);
}

struct SpotCheckReport {
  std::size_t requested = 0;
  std::size_t sampled = 0;
  std::vector<RoundTripFailure> failures;

  bool ok() const { return failures.empty() && sampled == requested; }
};

/// Random stable points over any field: the correspondence round-trips up to
/// gauge, kernels are gauge invariant, and orbit_equal recovers random gauges.
template <class S>
SpotCheckReport spot_check_roundtrips(const Instance<S>& inst, std::size_t samples, std::uint64_t seed,
                                      Fault fault = Fault::None, int height = 4) {
  SpotCheckReport out;
  out.requested = samples;
  std::mt19937_64 rng(seed);
  const auto& field = inst.field();
  for (std::size_t n = 0; n < samples; ++n) {
    const auto fp = random_stable_point<S>(inst.algebra, inst.d, inst.v, rng, height);
    if (!fp) {
      out.failures.push_back({"rep", "could not sample a stable point", inst.describe()});
      break;
    }
    ++out.sampled;
    try {
      const auto qp = rep_to_quotient(*fp, inst.module);
      const auto fp2 = detail::apply_fault(quotient_to_rep(qp), fault);
      if (!orbit_equal(fp2, *fp)) out.failures.push_back({"rep", "round trip left the gauge orbit", describe(*fp)});
      if (!(rep_to_quotient(fp2, inst.module) == qp))
        out.failures.push_back({"gr", "kernel changed under the round trip", describe(*fp)});
      const auto g = random_gauge<S>(field, inst.v, rng, height);
      const auto moved = gauge_act(g, *fp);
      if (!(rep_to_quotient(moved, inst.module) == qp))
        out.failures.push_back({"rep", "kernel is not gauge invariant", describe(*fp)});
      const auto found = orbit_equal(*fp, moved);
      if (!found || !(*found == g)) out.failures.push_back({"rep", "orbit_equal did not recover the gauge", describe(*fp)});
    } catch (const std::exception& e) {
      out.failures.push_back({"rep", e.what(), describe(*fp)});
    }
  }
  return out;
}

}  // namespace quivermod
