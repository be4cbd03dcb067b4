#ifndef DAGREL_CORE_COISOM_HPP
#define DAGREL_CORE_COISOM_HPP

#include <string>

#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"
#include "dagrel/core/ops.hpp"

namespace dagrel {

// The wide subcategory of coisometries of a dilatory dagger category D,
// equipped with its epi-regular independence structure:
//
//   - a square (f, g, u, v) is independent iff uf = vg and g f^dag = v^dag u;
//   - the independent pullback of a cospan (u, v) is the dilator of v^dag u;
//   - spans factor through the dilator of right . left^dag as
//     (strong epic, jointly monic);
//   - joint monicity is the dilator property of the span.
//
// Morphism values are shared with D; `contains` tells whether a D-morphism
// lives in this subcategory.
template <DilatoryDagger D>
class CoisomCat {
 public:
  using Obj = typename D::Obj;
  using Mor = typename D::Mor;
  using BaseCat = D;

  CoisomCat() = default;
  explicit CoisomCat(D base) : base_(std::move(base)) {}

  const D& base() const { return base_; }

  Obj dom(const Mor& f) const { return base_.dom(f); }
  Obj cod(const Mor& f) const { return base_.cod(f); }
  Mor identity(const Obj& x) const { return base_.identity(x); }
  Mor compose(const Mor& g, const Mor& f) const { return base_.compose(g, f); }
  bool obj_eq(const Obj& x, const Obj& y) const { return base_.obj_eq(x, y); }
  bool mor_eq(const Mor& f, const Mor& g) const { return base_.mor_eq(f, g); }
  std::string obj_label(const Obj& x) const { return base_.obj_label(x); }
  std::string mor_desc(const Mor& f) const { return base_.mor_desc(f); }
  void validate(const Mor& f) const {
    base_.validate(f);
    if (!is_coisometry(base_, f)) {
      throw validation_error("not a coisometry: " + base_.mor_desc(f));
    }
  }

  bool contains(const Mor& f) const { return is_coisometry(base_, f); }

  // Invertible coisometries are exactly the unitaries of D, with inverse the
  // dagger.
  bool is_invertible(const Mor& f) const { return is_unitary(base_, f); }

  bool commutes(const Square<Mor>& sq) const {
    return obj_eq(cod(sq.f), dom(sq.u)) && obj_eq(cod(sq.g), dom(sq.v)) &&
           obj_eq(cod(sq.u), cod(sq.v)) && obj_eq(dom(sq.f), dom(sq.g)) &&
           mor_eq(compose(sq.u, sq.f), compose(sq.v, sq.g));
  }

  bool is_independent(const Square<Mor>& sq) const {
    if (!commutes(sq)) return false;
    return mor_eq(compose(sq.g, base_.dagger(sq.f)),
                  compose(base_.dagger(sq.v), sq.u));
  }

  // Cospan (u : A -> C, v : B -> C)  |->  span (p1 : P -> A, p2 : P -> B).
  Span<Mor> independent_pullback(const Cospan<Mor>& cs) const {
    if (!obj_eq(cod(cs.left), cod(cs.right))) {
      throw validation_error("independent_pullback: legs have different codomains");
    }
    Mor vdag_u = compose(base_.dagger(cs.right), cs.left);
    return canonical_dilator(base_, vdag_u);
  }

  bool is_jointly_monic(const Span<Mor>& sp) const {
    return is_jointly_monic_span(base_, sp);
  }

  Factorisation<Mor> factorize(const Span<Mor>& sp) const {
    if (!obj_eq(dom(sp.left), dom(sp.right))) {
      throw validation_error("factorize: legs have different domains");
    }
    Mor r = compose(sp.right, base_.dagger(sp.left));
    Span<Mor> monic = canonical_dilator(base_, r);
    Mor e = mediate_canonical(base_, r, sp);
    return Factorisation<Mor>{e, monic};
  }

  // Diagonal filler through a jointly monic span: the unique d with
  // monic.left . d = sp.left and monic.right . d = sp.right.  Exists exactly
  // when sp factors through the monic span; throws math_error otherwise.
  Mor mediate_to_monic(const Span<Mor>& monic, const Span<Mor>& sp) const {
    Mor r = compose(monic.right, base_.dagger(monic.left));
    return mediate(base_, r, monic, sp);
  }

  // The counit on representatives: (m1, m2) |-> m2 . m1^dag.
  Mor eps(const Span<Mor>& sp) const {
    return compose(sp.right, base_.dagger(sp.left));
  }

  // Instance-supplied canonical normal form for jointly monic spans; found by
  // argument-dependent lookup on the base category.
  std::string span_key(const Span<Mor>& sp) const {
    return rel_span_key(base_, sp);
  }

  // Equality of relations.  Exact instances compare canonical keys; the
  // floating-point instance compares counits, which is complete because two
  // jointly monic spans are isomorphic iff they are dilators of the same
  // morphism.
  bool span_eq(const Span<Mor>& a, const Span<Mor>& b) const {
    if (!obj_eq(cod(a.left), cod(b.left)) || !obj_eq(cod(a.right), cod(b.right))) {
      return false;
    }
    if constexpr (CatTraits<D>::exact) {
      return span_key(a) == span_key(b);
    } else {
      return mor_eq(eps(a), eps(b));
    }
  }

 private:
  D base_;
};

template <DilatoryDagger D>
CoisomCat<D> coisometries(D cat) {
  return CoisomCat<D>(std::move(cat));
}

}  // namespace dagrel

#endif
