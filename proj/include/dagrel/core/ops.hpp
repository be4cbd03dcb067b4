#ifndef DAGREL_CORE_OPS_HPP
#define DAGREL_CORE_OPS_HPP

#include <string>
#include <vector>

#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"

namespace dagrel {

template <DaggerCategory C>
bool is_isometry(const C& cat, const typename C::Mor& f) {
  cat.validate(f);
  return cat.mor_eq(cat.compose(cat.dagger(f), f), cat.identity(cat.dom(f)));
}

template <DaggerCategory C>
bool is_coisometry(const C& cat, const typename C::Mor& f) {
  cat.validate(f);
  return cat.mor_eq(cat.compose(f, cat.dagger(f)), cat.identity(cat.cod(f)));
}

template <DaggerCategory C>
bool is_unitary(const C& cat, const typename C::Mor& f) {
  return is_isometry(cat, f) && is_coisometry(cat, f);
}

// A dilation of r : A -> B is a span of coisometries (f, g) with g f^dag = r.
template <DaggerCategory C>
bool is_dilation(const C& cat, const typename C::Mor& r,
                 const Span<typename C::Mor>& sp) {
  if (!is_coisometry(cat, sp.left) || !is_coisometry(cat, sp.right)) return false;
  if (!cat.obj_eq(cat.cod(sp.left), cat.dom(r))) return false;
  if (!cat.obj_eq(cat.cod(sp.right), cat.cod(r))) return false;
  if (!cat.obj_eq(cat.dom(sp.left), cat.dom(sp.right))) return false;
  return cat.mor_eq(cat.compose(sp.right, cat.dagger(sp.left)), r);
}

// Dual: a codilation of r : A -> B is a cospan of isometries (f, g) with
// g^dag f = r.
template <DaggerCategory C>
bool is_codilation(const C& cat, const typename C::Mor& r,
                   const Cospan<typename C::Mor>& cs) {
  if (!is_isometry(cat, cs.left) || !is_isometry(cat, cs.right)) return false;
  if (!cat.obj_eq(cat.dom(cs.left), cat.dom(r))) return false;
  if (!cat.obj_eq(cat.dom(cs.right), cat.cod(r))) return false;
  if (!cat.obj_eq(cat.cod(cs.left), cat.cod(cs.right))) return false;
  return cat.mor_eq(cat.compose(cat.dagger(cs.right), cs.left), r);
}

// Chosen dilator of r, synthesised from the codilator when the instance only
// provides the dual construction: (p1, p2) dilates r iff (p1^dag, p2^dag)
// codilates r.
template <DilatoryDagger C>
Span<typename C::Mor> canonical_dilator(const C& cat, const typename C::Mor& r) {
  if constexpr (HasDilators<C>) {
    return cat.dilator(r);
  } else {
    Cospan<typename C::Mor> cs = cat.codilator(r);
    return Span<typename C::Mor>{cat.dagger(cs.left), cat.dagger(cs.right)};
  }
}

template <DilatoryDagger C>
Cospan<typename C::Mor> canonical_codilator(const C& cat, const typename C::Mor& r) {
  if constexpr (HasCodilators<C>) {
    return cat.codilator(r);
  } else {
    Span<typename C::Mor> sp = cat.dilator(r);
    return Cospan<typename C::Mor>{cat.dagger(sp.left), cat.dagger(sp.right)};
  }
}

// The unique coisometry from the apex of a dilation of r onto the apex of the
// chosen dilator of r.  Throws math_error when the span is not a dilation.
template <DilatoryDagger C>
typename C::Mor mediate_canonical(const C& cat, const typename C::Mor& r,
                                  const Span<typename C::Mor>& dilation) {
  if constexpr (HasDilators<C>) {
    return cat.mediate_canonical(r, dilation);
  } else {
    Cospan<typename C::Mor> cs{cat.dagger(dilation.left), cat.dagger(dilation.right)};
    return cat.dagger(cat.comediate_canonical(r, cs));
  }
}

template <DilatoryDagger C>
typename C::Mor comediate_canonical(const C& cat, const typename C::Mor& r,
                                    const Cospan<typename C::Mor>& codilation) {
  if constexpr (HasCodilators<C>) {
    return cat.comediate_canonical(r, codilation);
  } else {
    Span<typename C::Mor> sp{cat.dagger(codilation.left), cat.dagger(codilation.right)};
    return cat.dagger(cat.mediate_canonical(r, sp));
  }
}

// A span of coisometries is jointly monic in the coisometry category iff it
// is a dilator of right . left^dag, and dilators are unique up to unitary.
// So the span is jointly monic iff its canonical mediator is unitary.
template <DilatoryDagger C>
bool is_jointly_monic_span(const C& cat, const Span<typename C::Mor>& sp) {
  if (!is_coisometry(cat, sp.left) || !is_coisometry(cat, sp.right)) {
    throw validation_error("is_jointly_monic_span: legs must be coisometries");
  }
  typename C::Mor r = cat.compose(sp.right, cat.dagger(sp.left));
  typename C::Mor e = mediate_canonical(cat, r, sp);
  return is_unitary(cat, e);
}

// Mediates an arbitrary dilation of r into an arbitrary dilator of r by
// transporting both through the canonical dilator:
//   c1 : dilation apex -> canonical apex,   c2 : dilator apex -> canonical apex,
// with c2 unitary, so e = c2^dag . c1 is the required mediator.
template <DilatoryDagger C>
typename C::Mor mediate(const C& cat, const typename C::Mor& r,
                        const Span<typename C::Mor>& dilator,
                        const Span<typename C::Mor>& dilation) {
  typename C::Mor c1 = mediate_canonical(cat, r, dilation);
  typename C::Mor c2 = mediate_canonical(cat, r, dilator);
  if (!is_unitary(cat, c2)) {
    throw math_error("mediate: the given span is not a dilator (canonical comparison not unitary)");
  }
  typename C::Mor e = cat.compose(cat.dagger(c2), c1);
  if (!cat.mor_eq(cat.compose(dilator.left, e), dilation.left) ||
      !cat.mor_eq(cat.compose(dilator.right, e), dilation.right)) {
    throw math_error("mediate: mediator fails a triangle; input is not a dilation of r");
  }
  return e;
}

struct DilatorVerdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Checks that `cand` is a dilator of r:
//   (a) it is a dilation of r,
//   (b) it is jointly monic (the decidable stand-in for terminality),
//   (c) each supplied alternative dilation mediates through it by a coisometry
//       making both triangles commute (unique by (b)).
// Preconditions on the candidate legs are hard errors, not a false verdict.
template <DilatoryDagger C>
DilatorVerdict verify_dilator(const C& cat, const typename C::Mor& r,
                              const Span<typename C::Mor>& cand,
                              const std::vector<Span<typename C::Mor>>& alternatives = {}) {
  if (!is_coisometry(cat, cand.left) || !is_coisometry(cat, cand.right)) {
    throw validation_error("verify_dilator: candidate legs must be coisometries");
  }
  if (!cat.obj_eq(cat.cod(cand.left), cat.dom(r)) ||
      !cat.obj_eq(cat.cod(cand.right), cat.cod(r))) {
    throw validation_error("verify_dilator: candidate legs do not frame r");
  }
  if (!cat.mor_eq(cat.compose(cand.right, cat.dagger(cand.left)), r)) {
    return {false, "dilation equation right . left^dag = r fails"};
  }
  if (!is_jointly_monic_span(cat, cand)) {
    return {false, "candidate span is not jointly monic"};
  }
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    const auto& alt = alternatives[i];
    if (!is_dilation(cat, r, alt)) {
      return {false, "alternative " + std::to_string(i) + " is not a dilation of r"};
    }
    typename C::Mor e;
    try {
      e = mediate(cat, r, cand, alt);
    } catch (const math_error& ex) {
      return {false, "alternative " + std::to_string(i) + ": " + ex.what()};
    }
    if (!is_coisometry(cat, e)) {
      return {false, "mediator for alternative " + std::to_string(i) + " is not coisometric"};
    }
    if (!cat.mor_eq(cat.compose(cand.left, e), alt.left) ||
        !cat.mor_eq(cat.compose(cand.right, e), alt.right)) {
      return {false, "mediator triangle fails for alternative " + std::to_string(i)};
    }
  }
  return {};
}

}  // namespace dagrel

#endif
