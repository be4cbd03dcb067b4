#ifndef DAGREL_MSURJ_MSURJ_HPP
#define DAGREL_MSURJ_MSURJ_HPP

#include <string>
#include <vector>

#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"
#include "dagrel/core/rng.hpp"
#include "dagrel/finset.hpp"
#include "json.hpp"

namespace dagrel::msurj {

// A surjective multivalued function between finite sets: every element of the
// domain is sent to a nonempty subset of the codomain, and every element of
// the codomain is hit.  table[a] holds sorted distinct codomain indices.
// The only morphism out of the empty set is the identity on it.
struct MultiMap {
  FinSet dom;
  FinSet cod;
  std::vector<std::vector<int>> table;
};

void validate(const MultiMap& r);

// Relation composite: (sr)(a) is the union of s(b) over b in r(a).
MultiMap compose(const MultiMap& s, const MultiMap& r);

// Relation converse: r^dag(b) = { a : b in r(a) }.
MultiMap converse(const MultiMap& r);

MultiMap identity_map(const FinSet& x);
bool map_eq(const MultiMap& a, const MultiMap& b);
std::string describe(const MultiMap& r);

// Coisometries are exactly the single-valued (surjective) maps.
bool is_single_valued(const MultiMap& r);
int image_of(const MultiMap& f, int a);  // requires single-valued

// The graph dilator of r: apex {(a, b) : b in r(a)} with the coordinate
// projections as single-valued surjections.
Span<MultiMap> graph_dilator(const MultiMap& r);

// Sets and surjective multivalued functions as a dagger category.  Dilators
// are graphs; the canonical mediator of a dilation (f, g) of r is the pairing
// x |-> (f(x), g(x)) into the graph apex.
class MSurjCat {
 public:
  using Obj = FinSet;
  using Mor = MultiMap;

  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }
  Mor identity(const Obj& x) const { return identity_map(x); }
  Mor compose(const Mor& g, const Mor& f) const { return msurj::compose(g, f); }
  Mor dagger(const Mor& f) const { return converse(f); }
  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  bool mor_eq(const Mor& f, const Mor& g) const { return map_eq(f, g); }
  std::string obj_label(const Obj& x) const { return x.to_string(); }
  std::string mor_desc(const Mor& f) const { return describe(f); }
  void validate(const Mor& f) const { msurj::validate(f); }

  Span<Mor> dilator(const Mor& r) const { return graph_dilator(r); }
  Mor mediate_canonical(const Mor& r, const Span<Mor>& dilation) const;
};

// Direct constructions on Surj = Coisom(MSurj); all arguments must be
// single-valued.  These are the set-level counterparts of the generic
// dilator-based machinery and agree with it on the nose.

// Independence of a commutative square of surjections: every fibre product
// pair is realised, i.e. the comparison to the set pullback is onto.
bool surj_is_independent(const Square<MultiMap>& sq);

// The set pullback {(a, b) : u(a) = v(b)} with its projections.
Span<MultiMap> surj_independent_pullback(const Cospan<MultiMap>& cs);

// e(x) = (f(x), g(x)) corestricted to its image, followed by the projections.
Factorisation<MultiMap> surj_factorize(const Span<MultiMap>& sp);

// Whether the kernel equivalence relations f^dag f and g^dag g commute as
// relations; equivalent to (f, g) extending to an independent square.
bool kernels_commute(const MultiMap& f, const MultiMap& g);

// When the kernels commute, builds the witnessing independent square by
// splitting the product idempotent through its classes.  Throws math_error
// when they do not commute.
Square<MultiMap> independent_square_on(const MultiMap& f, const MultiMap& g);

// Canonical key of a jointly monic span of surjections: the set of leg-image
// pairs together with the feet.
std::string rel_span_key(const MSurjCat& cat, const Span<MultiMap>& sp);

// JSON schema: {"dom": [...], "cod": [...], "table": {"a": ["x", "y"], ...}}
MultiMap from_json(const nlohmann::json& j);
nlohmann::json to_json(const MultiMap& r);

std::vector<MultiMap> enumerate_multimaps(const FinSet& a, const FinSet& b);
std::vector<MultiMap> enumerate_surjections(const FinSet& a, const FinSet& b);

// Random multivalued surjections: rows filled with nonempty random subsets,
// then surjectivity repaired by covering the missed codomain elements.
class BaseSampler {
 public:
  BaseSampler(std::uint64_t seed, int max_size = 4);
  std::uint64_t seed() const { return seed_; }
  FinSet random_object();
  MultiMap random_mor();
  MultiMap random_mor_from(const FinSet& x);
  MultiMap random_mor_between(const FinSet& a, const FinSet& b);

 private:
  std::uint64_t seed_;
  Rng rng_;
  int max_size_;
  int next_tag_ = 0;
  void repair_surjectivity(MultiMap& r);
};

// Random single-valued surjections for the coisometry category.
class SurjSampler {
 public:
  SurjSampler(std::uint64_t seed, int max_size = 4);
  std::uint64_t seed() const { return seed_; }
  FinSet random_object();
  MultiMap random_mor();
  MultiMap random_mor_from(const FinSet& x);
  MultiMap random_mor_onto(const FinSet& y);

 private:
  std::uint64_t seed_;
  Rng rng_;
  int max_size_;
  int next_tag_ = 0;
  FinSet fresh_object(int size);
};

}  // namespace dagrel::msurj

namespace dagrel {
template <>
struct CatTraits<msurj::MSurjCat> {
  static constexpr bool exact = true;
};
}  // namespace dagrel

#endif
