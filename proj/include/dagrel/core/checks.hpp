#ifndef DAGREL_CORE_CHECKS_HPP
#define DAGREL_CORE_CHECKS_HPP

#include <string>
#include <vector>

#include "dagrel/core/coisom.hpp"
#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"
#include "dagrel/core/ops.hpp"
#include "dagrel/core/report.hpp"

namespace dagrel {

// Samplers are duck-typed: a base sampler provides random_object(),
// random_mor() and random_mor_from(X); a coisometry sampler additionally
// provides random_mor_onto(Y).  All draws are deterministic in the seed.

namespace detail {

template <typename F>
bool guarded(Report& rep, const std::string& what, F&& body) {
  try {
    body();
    return true;
  } catch (const std::exception& ex) {
    rep.count(false, what + ": " + ex.what());
    return false;
  }
}

}  // namespace detail

// The three dagger laws plus the unit laws of composition, on seeded samples.
// Outputs of dagger/compose are validated so that law violations that surface
// as malformed payloads are still caught and witnessed.
template <DaggerCategory C, typename Sampler>
Report check_dagger_axioms(const C& cat, Sampler& smp, int n,
                           const std::string& suite = "dagger-laws") {
  Report rep(suite, smp.seed());
  if (n <= 0) {
    rep.mark_incomplete();
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    bool sampled = detail::guarded(rep, "sample " + std::to_string(i), [&] {
      const auto f = smp.random_mor();
      cat.validate(f);

      const auto idd = cat.identity(cat.dom(f));
      detail::guarded(rep, "1^dag = 1", [&] {
        rep.count_lazy(cat.mor_eq(cat.dagger(idd), idd),
                       [&] { return "1^dag != 1 on " + cat.obj_label(cat.dom(f)); });
      });

      detail::guarded(rep, "involution", [&] {
        const auto fd = cat.dagger(f);
        cat.validate(fd);
        bool frames = cat.obj_eq(cat.dom(fd), cat.cod(f)) &&
                      cat.obj_eq(cat.cod(fd), cat.dom(f));
        rep.count_lazy(frames && cat.mor_eq(cat.dagger(fd), f),
                       [&] { return "r^dagdag != r for " + cat.mor_desc(f); });
      });

      detail::guarded(rep, "unit laws", [&] {
        bool ok = cat.mor_eq(cat.compose(f, cat.identity(cat.dom(f))), f) &&
                  cat.mor_eq(cat.compose(cat.identity(cat.cod(f)), f), f);
        rep.count_lazy(ok, [&] { return "unit law fails for " + cat.mor_desc(f); });
      });

      detail::guarded(rep, "anti-homomorphism", [&] {
        const auto g = smp.random_mor_from(cat.cod(f));
        cat.validate(g);
        const auto lhs = cat.dagger(cat.compose(g, f));
        cat.validate(lhs);
        const auto rhs = cat.compose(cat.dagger(f), cat.dagger(g));
        rep.count_lazy(cat.mor_eq(lhs, rhs), [&] {
          return "(sr)^dag != r^dag s^dag for r = " + cat.mor_desc(f) +
                 ", s = " + cat.mor_desc(g);
        });
      });
    });
    if (!sampled) rep.mark_incomplete();
  }
  return rep;
}

// Independence axioms on squares of coisometries:
//   I1 independent implies commutative (and non-commuting squares are never
//      independent),
//   I2 the (f, 1, 1, f) square is independent,
//   I3 horizontal pastings of independent squares are independent,
//   I4 transposes of independent squares are independent,
//   I5 the (f, f, 1, 1) square is independent.
template <typename C, typename Sampler>
Report check_independence_axioms(const C& c, Sampler& smp, int n,
                                 const std::string& suite = "independence-axioms") {
  using M = typename C::Mor;
  Report rep(suite, smp.seed());
  for (int i = 0; i < n; ++i) {
    detail::guarded(rep, "iteration " + std::to_string(i), [&] {
      const M f = smp.random_mor();

      const Square<M> i2{f, c.identity(c.dom(f)), c.identity(c.cod(f)), f};
      rep.count_lazy(c.is_independent(i2),
                     [&] { return "I2 fails for " + c.mor_desc(f); });

      const Square<M> i5{f, f, c.identity(c.cod(f)), c.identity(c.cod(f))};
      rep.count_lazy(c.is_independent(i5),
                     [&] { return "I5 fails for " + c.mor_desc(f); });

      // An independent pullback square, its I1 commutation and I4 transpose.
      const M u = smp.random_mor();
      const M v = smp.random_mor_onto(c.cod(u));
      const Span<M> pb = c.independent_pullback(Cospan<M>{u, v});
      const Square<M> sq{pb.left, pb.right, u, v};
      rep.count_lazy(c.is_independent(sq), [&] {
        return "independent pullback square not independent; u = " + c.mor_desc(u) +
               ", v = " + c.mor_desc(v);
      });
      rep.count_lazy(c.commutes(sq),
                     [&] { return "I1: independent square does not commute"; });
      rep.count_lazy(c.is_independent(transposed(sq)),
                     [&] { return "I4 fails on a pullback square"; });

      // A non-commuting square must not be independent.
      const M v2 = smp.random_mor_onto(c.cod(u));
      const Square<M> maybe{pb.left, pb.right, u, v2};
      if (!c.commutes(maybe)) {
        rep.count_lazy(!c.is_independent(maybe),
                       [&] { return "I1: non-commuting square declared independent"; });
      } else {
        rep.skip();
      }

      // I3: two independent pullback squares sharing a vertical edge.
      const M v3 = smp.random_mor_from(c.cod(u));
      const M h = smp.random_mor_onto(c.cod(v3));
      const Span<M> right = c.independent_pullback(Cospan<M>{v3, h});
      const Span<M> left = c.independent_pullback(Cospan<M>{u, right.left});
      const Square<M> outer{left.left, c.compose(right.right, left.right),
                            c.compose(v3, u), h};
      rep.count_lazy(c.is_independent(outer),
                     [&] { return "I3: pasted square not independent"; });
    });
  }
  return rep;
}

// Epi-regularity:
//   E1 cospans have independent pullbacks, which are jointly monic;
//   E2 spans factor as (strong epic, jointly monic), recomposing on the nose;
//   E3 morphisms are strong epic: diagonal fillers exist over jointly monic
//      spans, recovered through the mediator machinery.
// Also exercises the identity-shaped pullback (1, u) of the cospan (u, 1).
template <typename C, typename Sampler>
Report check_epi_regularity(const C& c, Sampler& smp, int n,
                            const std::string& suite = "epi-regularity") {
  using M = typename C::Mor;
  Report rep(suite, smp.seed());
  for (int i = 0; i < n; ++i) {
    detail::guarded(rep, "iteration " + std::to_string(i), [&] {
      // E1
      const M u = smp.random_mor();
      const M v = smp.random_mor_onto(c.cod(u));
      const Span<M> pb = c.independent_pullback(Cospan<M>{u, v});
      rep.count_lazy(c.contains(pb.left) && c.contains(pb.right),
                     [&] { return "E1: pullback legs leave the category"; });
      rep.count_lazy(c.is_independent(Square<M>{pb.left, pb.right, u, v}),
                     [&] { return "E1: pullback square not independent"; });
      rep.count_lazy(c.is_jointly_monic(pb),
                     [&] { return "E1: independent pullback not jointly monic"; });

      // E2
      const M a = smp.random_mor();
      const M b = smp.random_mor_from(c.dom(a));
      const Factorisation<M> fac = c.factorize(Span<M>{a, b});
      rep.count_lazy(c.contains(fac.epi), [&] { return "E2: epi part leaves the category"; });
      rep.count_lazy(c.mor_eq(c.compose(fac.monic.left, fac.epi), a) &&
                         c.mor_eq(c.compose(fac.monic.right, fac.epi), b),
                     [&] {
                       return "E2: factorisation does not recompose for (" +
                              c.mor_desc(a) + ", " + c.mor_desc(b) + ")";
                     });
      rep.count_lazy(c.is_jointly_monic(fac.monic),
                     [&] { return "E2: monic part not jointly monic"; });

      // E3: the span (a, b) factors through fac.monic via fac.epi; the filler
      // recovered from the mediator must agree.
      const M d = c.mediate_to_monic(fac.monic, Span<M>{a, b});
      rep.count_lazy(c.mor_eq(d, fac.epi),
                     [&] { return "E3: diagonal filler differs from the strong epi"; });

      // (1, u) is an independent pullback of (u, 1).
      const Span<M> unit_pb =
          c.independent_pullback(Cospan<M>{u, c.identity(c.cod(u))});
      rep.count_lazy(
          c.span_eq(unit_pb, Span<M>{c.identity(c.dom(u)), u}),
          [&] { return "pullback of (u, 1) is not (1, u) for u = " + c.mor_desc(u); });
    });
  }
  return rep;
}

// Dilator suite over the dagger category: the canonical dilator of a random
// morphism passes verify_dilator against alternative dilations built by
// precomposing with random coisometries, and mediation recovers those
// coisometries exactly.
template <DilatoryDagger D, typename BaseSampler, typename CoisomSampler>
Report check_dilators(const D& cat, BaseSampler& base_smp, CoisomSampler& co_smp,
                      int n, int n_alternatives,
                      const std::string& suite = "dilators") {
  using M = typename D::Mor;
  Report rep(suite, base_smp.seed());
  for (int i = 0; i < n; ++i) {
    detail::guarded(rep, "iteration " + std::to_string(i), [&] {
      const M r = base_smp.random_mor();
      const Span<M> cand = canonical_dilator(cat, r);
      std::vector<Span<M>> alts;
      std::vector<M> hidden;
      const auto apex = cat.dom(cand.left);
      for (int j = 0; j < n_alternatives; ++j) {
        const M e = co_smp.random_mor_onto(apex);
        hidden.push_back(e);
        alts.push_back(Span<M>{cat.compose(cand.left, e), cat.compose(cand.right, e)});
      }
      const DilatorVerdict verdict = verify_dilator(cat, r, cand, alts);
      rep.count_lazy(verdict.ok, [&] {
        return "verify_dilator failed for " + cat.mor_desc(r) + ": " + verdict.reason;
      });
      for (std::size_t j = 0; j < alts.size(); ++j) {
        const M rec = mediate(cat, r, cand, alts[j]);
        rep.count_lazy(cat.mor_eq(rec, hidden[j]), [&] {
          return "mediate did not recover the hidden coisometry for " + cat.mor_desc(r);
        });
      }

      // The span (1, f) is a dilator of any coisometry f.
      const M f = co_smp.random_mor();
      const Span<M> one_f{cat.identity(cat.dom(f)), f};
      const DilatorVerdict vf = verify_dilator(cat, f, one_f, {});
      rep.count_lazy(vf.ok, [&] {
        return "(1, f) not accepted as dilator of coisometry " + cat.mor_desc(f) +
               ": " + vf.reason;
      });
    });
  }
  return rep;
}

}  // namespace dagrel

#endif
