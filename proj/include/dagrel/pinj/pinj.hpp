#ifndef DAGREL_PINJ_PINJ_HPP
#define DAGREL_PINJ_PINJ_HPP

#include <string>
#include <utility>
#include <vector>

#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"
#include "dagrel/core/dual.hpp"
#include "dagrel/core/rng.hpp"
#include "dagrel/finset.hpp"
#include "json.hpp"

namespace dagrel::pinj {

// An injective partial function between finite sets, stored as the set of
// (domain index, codomain index) pairs of its graph; each index appears at
// most once on either side.
struct PartialInjection {
  FinSet dom;
  FinSet cod;
  std::vector<std::pair<int, int>> pairs;  // sorted by first component
};

void validate(const PartialInjection& r);
PartialInjection compose(const PartialInjection& s, const PartialInjection& r);
PartialInjection converse(const PartialInjection& r);
PartialInjection identity_map(const FinSet& x);
bool map_eq(const PartialInjection& a, const PartialInjection& b);
std::string describe(const PartialInjection& r);

bool is_total(const PartialInjection& r);    // supp r = dom, i.e. isometric
bool is_cototal(const PartialInjection& r);  // Ran r = cod, i.e. coisometric
std::vector<int> support(const PartialInjection& r);
std::vector<int> range(const PartialInjection& r);

// The restriction partial identity on supp r.
PartialInjection restriction_of(const PartialInjection& r);

// Codilator of r : A -> B: the tagged disjoint union (A \ supp r) + B with
// i1 sending a to r(a) when defined and to its own tag otherwise, and i2 the
// inclusion of B.
Cospan<PartialInjection> codilator(const PartialInjection& r);

// The pushout in Set of r : supp r -> B along supp r into A, computed by
// quotienting A + B under a ~ r(a).  Isomorphic to the codilator cospan.
Cospan<PartialInjection> set_pushout_cospan(const PartialInjection& r);

// Finite sets and injective partial functions as a dagger category; the
// dagger reverses the graph.  Codilators are the disjoint-union cospans; the
// canonical comediator copairs the legs of a codilation over the tagged apex.
class PInjCat {
 public:
  using Obj = FinSet;
  using Mor = PartialInjection;

  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }
  Mor identity(const Obj& x) const { return identity_map(x); }
  Mor compose(const Mor& g, const Mor& f) const { return pinj::compose(g, f); }
  Mor dagger(const Mor& f) const { return converse(f); }
  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  bool mor_eq(const Mor& f, const Mor& g) const { return map_eq(f, g); }
  std::string obj_label(const Obj& x) const { return x.to_string(); }
  std::string mor_desc(const Mor& f) const { return describe(f); }
  void validate(const Mor& f) const { pinj::validate(f); }

  Cospan<Mor> codilator(const Mor& r) const { return pinj::codilator(r); }
  Mor comediate_canonical(const Mor& r, const Cospan<Mor>& codilation) const;
};

// Direct constructions on Inj = Isom(PInj), the total injections, in the
// orientation of the base category.

// Square of total injections u : C -> A, v : C -> B, f : A -> X, g : B -> X
// with fu = gv; co-independent exactly when Ran f and Ran g meet inside
// Ran(fu).
bool inj_is_coindependent(const PartialInjection& u, const PartialInjection& v,
                          const PartialInjection& f, const PartialInjection& g);

// Co-independent pushout of a span of total injections (u : C -> A,
// v : C -> B): the codilator of v . u^dag.
Cospan<PartialInjection> inj_coind_pushout(const PartialInjection& u,
                                           const PartialInjection& v);

// (monic, jointly epic) factorisation of a cospan of total injections into X:
// corestrict to Ran f union Ran g, with the subset inclusion as the monic part.
CoFactorisation<PartialInjection> inj_cofactorize(const PartialInjection& f,
                                                  const PartialInjection& g);

// Canonical key of a jointly monic span in the dual orientation: such a span
// is a jointly epic cospan of injections in the base, i.e. a partial
// bijection between its feet.
std::string rel_span_key(const DualCat<PInjCat>& cat, const Span<PartialInjection>& sp);

// JSON schema: {"dom": [...], "cod": [...], "pairs": [["1", "x"], ...]}
PartialInjection from_json(const nlohmann::json& j);
nlohmann::json to_json(const PartialInjection& r);

std::vector<PartialInjection> enumerate_partial_injections(const FinSet& a, const FinSet& b);
std::vector<PartialInjection> enumerate_total_injections(const FinSet& a, const FinSet& b);

// Random injective partial functions of the base category.
class BaseSampler {
 public:
  BaseSampler(std::uint64_t seed, int max_size = 4);
  std::uint64_t seed() const { return seed_; }
  FinSet random_object();
  PartialInjection random_mor();
  PartialInjection random_mor_from(const FinSet& x);
  PartialInjection random_mor_between(const FinSet& a, const FinSet& b);

 private:
  std::uint64_t seed_;
  Rng rng_;
  int max_size_;
  int next_tag_ = 0;
};

// The same distribution, reinterpreted in the dual category: dom/cod swap.
class DualBaseSampler {
 public:
  DualBaseSampler(std::uint64_t seed, int max_size = 4) : inner_(seed, max_size) {}
  std::uint64_t seed() const { return inner_.seed(); }
  FinSet random_object() { return inner_.random_object(); }
  PartialInjection random_mor() { return inner_.random_mor(); }
  PartialInjection random_mor_from(const FinSet& x) {
    // dual domain = base codomain
    return converse(inner_.random_mor_from(x));
  }
  PartialInjection random_mor_between(const FinSet& a, const FinSet& b) {
    return inner_.random_mor_between(b, a);
  }

 private:
  BaseSampler inner_;
};

// Coisometries of the dual category: total injections, oriented so that the
// dual domain is the base codomain.
class InjSampler {
 public:
  InjSampler(std::uint64_t seed, int max_size = 4);
  std::uint64_t seed() const { return seed_; }
  FinSet random_object();
  PartialInjection random_mor();                       // base injection B -> A, dual A ->' B
  PartialInjection random_mor_from(const FinSet& x);   // base cod = x
  PartialInjection random_mor_onto(const FinSet& y);   // base dom = y

 private:
  std::uint64_t seed_;
  Rng rng_;
  int max_size_;
  int next_tag_ = 0;
  PartialInjection random_injection(const FinSet& small, const FinSet& big);
};

}  // namespace dagrel::pinj

namespace dagrel {
template <>
struct CatTraits<pinj::PInjCat> {
  static constexpr bool exact = true;
};
}  // namespace dagrel

#endif
