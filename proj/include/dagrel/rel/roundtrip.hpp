#ifndef DAGREL_REL_ROUNDTRIP_HPP
#define DAGREL_REL_ROUNDTRIP_HPP

#include <string>
#include <vector>

#include "dagrel/core/checks.hpp"
#include "dagrel/core/coisom.hpp"
#include "dagrel/core/report.hpp"
#include "dagrel/rel/relcat.hpp"

namespace dagrel::rel {

// Independence of the eta-image square, computed with relation operations:
// commutation plus  eta(g) eta(f)^dag = eta(v)^dag eta(u).
template <typename C>
bool rel_square_independent(const RelCat<C>& rc, const typename C::Mor& f,
                            const typename C::Mor& g, const typename C::Mor& u,
                            const typename C::Mor& v) {
  const auto ef = rc.eta(f);
  const auto eg = rc.eta(g);
  const auto eu = rc.eta(u);
  const auto ev = rc.eta(v);
  if (!rc.mor_eq(rc.compose(eu, ef), rc.compose(ev, eg))) return false;
  return rc.mor_eq(rc.compose(eg, rc.dagger(ef)), rc.compose(rc.dagger(ev), eu));
}

// Witness of the adjoint equivalence between a dilatory dagger category D and
// Rel(Coisom(D)).
struct EquivalenceWitness {
  std::string base_name;
  Report report;
};

// Verifies, on seeded samples:
//   - the counit eps is functorial, faithful and full;
//   - relations are representative-independent (recomputing the class after
//     twisting the representative by a coisometry gives an equal relation);
//   - the unit eta is functorial, injective, and lands exactly on the
//     coisometric relations (canonical-form inspection);
//   - the triangle identity eps(eta(f)) = f;
//   - independence transport along eta, in both directions.
// All composed relations are validated, so a composition that skips the
// factorisation step is reported here.
//
// `co_smp` samples coisometries of D; `base_smp` samples arbitrary morphisms
// of D and supports random_mor_between(a, b).
template <DilatoryDagger D, typename BaseSampler, typename CoisomSampler>
EquivalenceWitness roundtrip_check(const D& cat, BaseSampler& base_smp,
                                   CoisomSampler& co_smp, int n,
                                   const std::string& base_name) {
  using C = CoisomCat<D>;
  using M = typename D::Mor;
  const C c(cat);
  const RelCat<C> rc(c);
  Report rep("roundtrip[" + base_name + "]", base_smp.seed());

  auto random_relation = [&] {
    const M f = co_smp.random_mor();
    const M g = co_smp.random_mor_from(c.dom(f));
    return rc.make(Span<M>{f, g});
  };

  for (int i = 0; i < n; ++i) {
    detail::guarded(rep, "iteration " + std::to_string(i), [&] {
      // eps functoriality on a composable pair, with validated outputs.
      const Relation<C> r = random_relation();
      const Relation<C> s = [&] {
        const M f = co_smp.random_mor_onto(r.target);
        const M g = co_smp.random_mor_from(c.dom(f));
        return rc.make(Span<M>{f, g});
      }();
      const Relation<C> sr = rc.compose(s, r);
      rc.validate(sr);
      rep.count_lazy(
          cat.mor_eq(rc.eps(sr), cat.compose(rc.eps(s), rc.eps(r))),
          [&] { return "eps not functorial on " + rc.mor_desc(r) + " ; " + rc.mor_desc(s); });

      // Representative independence: twisting the representative by a random
      // coisometry and re-normalising yields an equal relation.
      const M twist = co_smp.random_mor_onto(c.dom(r.rep.left));
      const Relation<C> r2 =
          rc.make(Span<M>{c.compose(r.rep.left, twist), c.compose(r.rep.right, twist)});
      rep.count_lazy(rc.mor_eq(r, r2) && cat.mor_eq(rc.eps(r), rc.eps(r2)),
                     [&] { return "relation not representative-independent: " + rc.mor_desc(r); });

      // eps faithful against an independently sampled parallel relation.
      bool did_faithful = false;
      try {
        const M between = base_smp.random_mor_between(r.source, r.target);
        const Relation<C> t = rc.make(canonical_dilator(cat, between));
        rc.validate(t);
        rep.count_lazy(rc.mor_eq(r, t) == cat.mor_eq(rc.eps(r), rc.eps(t)),
                       [&] { return "eps not faithful on " + rc.mor_desc(r); });
        did_faithful = true;
      } catch (const validation_error&) {
      }
      if (!did_faithful) rep.skip();

      // eps full: a random morphism of D is the counit of its dilator class.
      const M any = base_smp.random_mor();
      const Relation<C> lift = rc.make(canonical_dilator(cat, any));
      rc.validate(lift);
      rep.count_lazy(cat.mor_eq(rc.eps(lift), any),
                     [&] { return "eps not full for " + cat.mor_desc(any); });

      // eta laws and the triangle identity eps(eta(f)) = f.
      const M f = co_smp.random_mor();
      const Relation<C> ef = rc.eta(f);
      rc.validate(ef);
      rep.count_lazy(cat.mor_eq(rc.eps(ef), f),
                     [&] { return "triangle eps(eta(f)) != f for " + cat.mor_desc(f); });
      const M g = co_smp.random_mor_from(c.cod(f));
      rep.count_lazy(rc.mor_eq(rc.eta(cat.compose(g, f)), rc.compose(rc.eta(g), rc.eta(f))),
                     [&] { return "eta not functorial on " + cat.mor_desc(f); });

      // eta(f) is coisometric in Rel(C)...
      const Relation<C> ef_coiso = rc.compose(ef, rc.dagger(ef));
      rc.validate(ef_coiso);
      rep.count_lazy(rc.mor_eq(ef_coiso, rc.identity(rc.cod(ef))),
                     [&] { return "eta(f) not coisometric for " + cat.mor_desc(f); });

      // ...and a relation is coisometric exactly when it is an eta-image.
      const Relation<C> cand = random_relation();
      const bool coiso =
          rc.mor_eq(rc.compose(cand, rc.dagger(cand)), rc.identity(cand.source));
      rep.count_lazy(coiso == rc.is_eta_form(cand), [&] {
        return "coisometric relations and eta-images disagree on " + rc.mor_desc(cand);
      });
      if (coiso) {
        rep.count_lazy(rc.mor_eq(rc.eta(rc.eps(cand)), cand),
                       [&] { return "eta(eps(.)) misses the coisometric relation " +
                                    rc.mor_desc(cand); });
      } else {
        rep.skip();
      }

      // Independence transport along eta, both directions.
      const M u = co_smp.random_mor();
      const M v = co_smp.random_mor_onto(c.cod(u));
      const Span<M> pb = c.independent_pullback(Cospan<M>{u, v});
      rep.count_lazy(rel_square_independent(rc, pb.left, pb.right, u, v),
                     [&] { return "eta does not transport an independent square"; });
      const M v2 = co_smp.random_mor_onto(c.cod(u));
      const Square<M> sq2{pb.left, pb.right, u, v2};
      if (c.commutes(sq2) && !c.is_independent(sq2)) {
        rep.count_lazy(!rel_square_independent(rc, pb.left, pb.right, u, v2),
                       [&] { return "eta transports a dependent square to an independent one"; });
      } else {
        rep.skip();
      }
    });
  }
  return EquivalenceWitness{base_name, rep};
}

}  // namespace dagrel::rel

#endif
