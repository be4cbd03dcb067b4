#ifndef DAGREL_REL_RELCAT_HPP
#define DAGREL_REL_RELCAT_HPP

#include <string>

#include "dagrel/core/coisom.hpp"
#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"
#include "dagrel/core/ops.hpp"
#include "json.hpp"

namespace dagrel::rel {

// A relation from source to target in an epi-regular independence category:
// an isomorphism class of jointly monic spans, stored through a canonical
// representative.  The key is the instance-provided normal form; equality of
// relations goes through CoisomCat::span_eq (keys for the exact instances,
// counit comparison for the floating-point one).
template <typename C>
struct Relation {
  typename C::Obj source;
  typename C::Obj target;
  Span<typename C::Mor> rep;
  std::string key;
};

// Everything produced during one relation composition: the independent
// pullback, the composed outer span, and its factorisation.
template <typename C>
struct ComposeTrace {
  Span<typename C::Mor> pullback;
  Span<typename C::Mor> outer;
  typename C::Mor epi;
  Relation<C> result;
};

// The dagger category Rel(C) of relations in an epi-regular independence
// category C.  Composition is independent-pullback-then-factorise; the dagger
// swaps legs.  Rel(C) is itself dilatory: the dilator of [r1, r2] is the span
// ([1, r1], [1, r2]), which makes the generic dilator machinery applicable to
// relations as well.
template <typename C>
class RelCat {
 public:
  using Obj = typename C::Obj;
  using Mor = Relation<C>;
  using BaseMor = typename C::Mor;

  RelCat() = default;
  explicit RelCat(C c) : c_(std::move(c)) {}

  const C& carrier() const { return c_; }

  // Builds the relation represented by a span, factorising first when the
  // span is not already jointly monic.
  Mor make(const Span<BaseMor>& sp) const {
    if (c_.is_jointly_monic(sp)) return wrap(sp);
    return wrap(c_.factorize(sp).monic);
  }

  Obj dom(const Mor& r) const { return r.source; }
  Obj cod(const Mor& r) const { return r.target; }

  Mor identity(const Obj& x) const {
    const BaseMor one = c_.identity(x);
    return wrap(Span<BaseMor>{one, one});
  }

  Mor compose(const Mor& s, const Mor& r) const { return compose_traced(s, r).result; }

  ComposeTrace<C> compose_traced(const Mor& s, const Mor& r) const {
    if (!c_.obj_eq(r.target, s.source)) {
      throw validation_error("rel compose: target of first does not match source of second");
    }
    ComposeTrace<C> trace;
    trace.pullback = c_.independent_pullback(Cospan<BaseMor>{r.rep.right, s.rep.left});
    trace.outer = Span<BaseMor>{c_.compose(r.rep.left, trace.pullback.left),
                                c_.compose(s.rep.right, trace.pullback.right)};
    const Factorisation<BaseMor> fac = c_.factorize(trace.outer);
    trace.epi = fac.epi;
    trace.result = wrap(fac.monic);
    return trace;
  }

  Mor dagger(const Mor& r) const {
    return wrap(Span<BaseMor>{r.rep.right, r.rep.left});
  }

  bool obj_eq(const Obj& x, const Obj& y) const { return c_.obj_eq(x, y); }

  bool mor_eq(const Mor& r, const Mor& s) const {
    if (!c_.obj_eq(r.source, s.source) || !c_.obj_eq(r.target, s.target)) return false;
    return c_.span_eq(r.rep, s.rep);
  }

  std::string obj_label(const Obj& x) const { return c_.obj_label(x); }

  std::string mor_desc(const Mor& r) const {
    return "[" + c_.mor_desc(r.rep.left) + ", " + c_.mor_desc(r.rep.right) + "]";
  }

  void validate(const Mor& r) const {
    c_.validate(r.rep.left);
    c_.validate(r.rep.right);
    if (!c_.obj_eq(c_.dom(r.rep.left), c_.dom(r.rep.right))) {
      throw validation_error("relation: legs have different apexes");
    }
    if (!c_.obj_eq(c_.cod(r.rep.left), r.source) ||
        !c_.obj_eq(c_.cod(r.rep.right), r.target)) {
      throw validation_error("relation: representative does not frame source/target");
    }
    if (!c_.is_jointly_monic(r.rep)) {
      throw validation_error("relation: representative span is not jointly monic");
    }
  }

  // The unit of the equivalence: f |-> [1, f] on morphisms of C.
  Mor eta(const BaseMor& f) const {
    c_.validate(f);
    return wrap(Span<BaseMor>{c_.identity(c_.dom(f)), f});
  }

  // The counit on representatives: [r1, r2] |-> r2 . r1^dag in the base
  // dagger category of C.
  BaseMor eps(const Mor& r) const { return c_.eps(r.rep); }

  // A relation is coisometric iff its representative's left leg is invertible
  // (then it equals eta of eps).  This is the canonical-form inspection used
  // by the equivalence checks.
  bool is_eta_form(const Mor& r) const { return c_.is_invertible(r.rep.left); }

  Span<Mor> dilator(const Mor& r) const {
    return Span<Mor>{eta(r.rep.left), eta(r.rep.right)};
  }

  Mor mediate_canonical(const Mor& r, const Span<Mor>& dilation) const {
    // Coisometric relations are eta-images; extract the underlying morphisms
    // and mediate through the jointly monic representative in C.
    if (!is_eta_form(dilation.left) || !is_eta_form(dilation.right)) {
      throw math_error("relation mediator: dilation legs are not coisometric relations");
    }
    const BaseMor f = eps(dilation.left);
    const BaseMor g = eps(dilation.right);
    const BaseMor e = c_.mediate_to_monic(r.rep, Span<BaseMor>{f, g});
    return eta(e);
  }

 private:
  Mor wrap(const Span<BaseMor>& sp) const {
    return Mor{c_.cod(sp.left), c_.cod(sp.right), sp, c_.span_key(sp)};
  }

  C c_;
};

template <typename C>
struct RelTraits;  // JSON (de)serialisation of relations, per instance

}  // namespace dagrel::rel

namespace dagrel {
template <typename C>
struct CatTraits<rel::RelCat<C>> {
  static constexpr bool exact = CatTraits<typename C::BaseCat>::exact;
};
}  // namespace dagrel

#endif
