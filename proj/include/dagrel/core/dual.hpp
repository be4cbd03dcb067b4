#ifndef DAGREL_CORE_DUAL_HPP
#define DAGREL_CORE_DUAL_HPP

#include <string>

#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"

namespace dagrel {

// The opposite dagger category.  Morphism payloads are shared with the base
// category; only domain/codomain and composition order are reinterpreted.
// Dilators of the dual are codilators of the base (with legs swapped so that
// the dilation equation holds in the dual orientation), and vice versa.
template <DaggerCategory C>
class DualCat {
 public:
  using Obj = typename C::Obj;
  using Mor = typename C::Mor;
  using BaseCat = C;

  DualCat() = default;
  explicit DualCat(C base) : base_(std::move(base)) {}

  const C& base() const { return base_; }

  Obj dom(const Mor& f) const { return base_.cod(f); }
  Obj cod(const Mor& f) const { return base_.dom(f); }
  Mor identity(const Obj& x) const { return base_.identity(x); }
  Mor compose(const Mor& g, const Mor& f) const { return base_.compose(f, g); }
  Mor dagger(const Mor& f) const { return base_.dagger(f); }
  bool obj_eq(const Obj& x, const Obj& y) const { return base_.obj_eq(x, y); }
  bool mor_eq(const Mor& f, const Mor& g) const { return base_.mor_eq(f, g); }
  std::string obj_label(const Obj& x) const { return base_.obj_label(x); }
  std::string mor_desc(const Mor& f) const { return base_.mor_desc(f); }
  void validate(const Mor& f) const { base_.validate(f); }

  Span<Mor> dilator(const Mor& r) const
    requires HasCodilators<C>
  {
    Cospan<Mor> cs = base_.codilator(r);
    return Span<Mor>{cs.right, cs.left};
  }

  Mor mediate_canonical(const Mor& r, const Span<Mor>& dilation) const
    requires HasCodilators<C>
  {
    return base_.comediate_canonical(r, Cospan<Mor>{dilation.right, dilation.left});
  }

  Cospan<Mor> codilator(const Mor& r) const
    requires HasDilators<C>
  {
    Span<Mor> sp = base_.dilator(r);
    return Cospan<Mor>{sp.right, sp.left};
  }

  Mor comediate_canonical(const Mor& r, const Cospan<Mor>& codilation) const
    requires HasDilators<C>
  {
    return base_.mediate_canonical(r, Span<Mor>{codilation.right, codilation.left});
  }

 private:
  C base_;
};

template <typename C>
struct CatTraits<DualCat<C>> : CatTraits<C> {};

template <DaggerCategory C>
DualCat<C> dualize(C cat) {
  return DualCat<C>(std::move(cat));
}

// Dualizing twice restores the original behaviour; collapse the type too.
template <DaggerCategory C>
C dualize(DualCat<C> cat) {
  return cat.base();
}

}  // namespace dagrel

#endif
