#ifndef DAGREL_CORE_CONCEPTS_HPP
#define DAGREL_CORE_CONCEPTS_HPP

#include <concepts>
#include <string>

#include "dagrel/core/diagram.hpp"

namespace dagrel {

// A category instance is a small immutable value object. Objects and
// morphisms are plain values; all operations are const.
template <typename C>
concept Category =
    std::copyable<C> &&
    requires(const C& cat, const typename C::Obj& x, const typename C::Mor& f,
             const typename C::Mor& g) {
      typename C::Obj;
      typename C::Mor;
      { cat.dom(f) } -> std::same_as<typename C::Obj>;
      { cat.cod(f) } -> std::same_as<typename C::Obj>;
      { cat.identity(x) } -> std::same_as<typename C::Mor>;
      { cat.compose(g, f) } -> std::same_as<typename C::Mor>;  // g after f
      { cat.obj_eq(x, x) } -> std::same_as<bool>;
      { cat.mor_eq(f, g) } -> std::same_as<bool>;
      { cat.obj_label(x) } -> std::convertible_to<std::string>;
      { cat.mor_desc(f) } -> std::convertible_to<std::string>;
      cat.validate(f);  // throws validation_error on malformed payloads
    };

template <typename C>
concept DaggerCategory =
    Category<C> && requires(const C& cat, const typename C::Mor& f) {
      { cat.dagger(f) } -> std::same_as<typename C::Mor>;
    };

// A dagger category with a chosen dilator for every morphism.  The canonical
// mediator maps any dilation of r onto the apex of the chosen dilator.
template <typename C>
concept HasDilators =
    DaggerCategory<C> &&
    requires(const C& cat, const typename C::Mor& r,
             const Span<typename C::Mor>& sp) {
      { cat.dilator(r) } -> std::same_as<Span<typename C::Mor>>;
      { cat.mediate_canonical(r, sp) } -> std::same_as<typename C::Mor>;
    };

// Dual: a chosen codilator (initial codilation) for every morphism.
template <typename C>
concept HasCodilators =
    DaggerCategory<C> &&
    requires(const C& cat, const typename C::Mor& r,
             const Cospan<typename C::Mor>& cs) {
      { cat.codilator(r) } -> std::same_as<Cospan<typename C::Mor>>;
      { cat.comediate_canonical(r, cs) } -> std::same_as<typename C::Mor>;
    };

// A span (p1, p2) is a dilator of r iff the cospan (p1^dag, p2^dag) is a
// codilator of r, so either construction induces the other.
template <typename C>
concept DilatoryDagger = DaggerCategory<C> && (HasDilators<C> || HasCodilators<C>);

// Per-instance compile-time traits.  `exact` selects structural equality for
// relation comparison; inexact instances compare through the counit instead.
template <typename C>
struct CatTraits;  // specialised by every instance

}  // namespace dagrel

#endif
