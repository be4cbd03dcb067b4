#ifndef DAGREL_FINPROB_FINPROB_HPP
#define DAGREL_FINPROB_FINPROB_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"
#include "dagrel/core/rng.hpp"
#include "dagrel/finset.hpp"
#include "json.hpp"

namespace dagrel::finprob {

// Exact rational probabilities; no floating point anywhere in this module.
using Rat = boost::multiprecision::cpp_rational;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

// A fully supported finite probability space: strictly positive weights
// summing to exactly 1, aligned with the canonical point order.
struct ProbSpace {
  FinSet points;
  std::vector<Rat> weight;
};

void validate(const ProbSpace& sp);
bool space_eq(const ProbSpace& a, const ProbSpace& b);
std::string describe(const ProbSpace& sp);

// A measure-preserving stochastic matrix: entries[b][a] = r(b|a), columns
// summing to 1, and pushforward of the source measure equal to the target
// measure.
struct StochMap {
  ProbSpace src;
  ProbSpace dst;
  std::vector<std::vector<Rat>> entries;
};

void validate(const StochMap& r);
StochMap compose(const StochMap& s, const StochMap& r);

// Bayesian inverse: r^dag(a|b) = r(b|a) w_src(a) / w_dst(b).
StochMap bayes(const StochMap& r);

StochMap identity_map(const ProbSpace& x);
bool map_eq(const StochMap& a, const StochMap& b);
std::string describe(const StochMap& r);

// Coisometries are exactly the 0/1 matrices.
bool is_deterministic(const StochMap& r);

// The delta matrix of a surjective function x: src.points -> cod, landing in
// the pushforward space.
StochMap delta(const ProbSpace& src, const std::vector<int>& x, const FinSet& cod);

// The point a given deterministic map sends src point `a` to.
int image_of(const StochMap& f, int a);

// The support dilator of r: apex {(a, b) : r(b|a) != 0} carrying the joint
// measure r(b|a) w_src(a), with delta projections.
Span<StochMap> dilator(const StochMap& r);

// Finite probability spaces and measure-preserving stochastic matrices as a
// dagger category under Bayesian inversion.
class FinProbCat {
 public:
  using Obj = ProbSpace;
  using Mor = StochMap;

  Obj dom(const Mor& f) const { return f.src; }
  Obj cod(const Mor& f) const { return f.dst; }
  Mor identity(const Obj& x) const { return identity_map(x); }
  Mor compose(const Mor& g, const Mor& f) const { return finprob::compose(g, f); }
  Mor dagger(const Mor& f) const { return bayes(f); }
  bool obj_eq(const Obj& x, const Obj& y) const { return space_eq(x, y); }
  bool mor_eq(const Mor& f, const Mor& g) const { return map_eq(f, g); }
  std::string obj_label(const Obj& x) const { return describe(x); }
  std::string mor_desc(const Mor& f) const { return describe(f); }
  void validate(const Mor& f) const { finprob::validate(f); }

  Span<Mor> dilator(const Mor& r) const { return finprob::dilator(r); }
  Mor mediate_canonical(const Mor& r, const Span<Mor>& dilation) const;
};

// The conditional product of a cospan of deterministic maps (u, v): the
// pullback set {(a, b) : fa = gb} weighted by w_A(a) w_B(b) / w_C(fa).
// Agrees exactly with dilator(compose(dagger(v), u)).
Span<StochMap> conditional_product(const Cospan<StochMap>& cs);

// Conditional independence of a commutative square of deterministic maps via
// the relative-independence criterion h^dag h = f^dag f g^dag g, with the
// conditional-probability equation g f^dag = v^dag u checked alongside.
bool fp_is_independent(const Square<StochMap>& sq);

// (strong epic, jointly monic) factorisation of a span of deterministic maps:
// the pairing onto its image carrying the pushforward measure.
Factorisation<StochMap> fp_factorize(const Span<StochMap>& sp);

// Canonical key of a jointly monic span: the coupling it carries, as the
// sorted list of (pair label, joint weight).
std::string rel_span_key(const FinProbCat& cat, const Span<StochMap>& sp);

// JSON schema:
// {"src": {"points": [...], "weights": ["1/2", ...]}, "dst": {...},
//  "entries": [["b", "a", "1/3"], ...]}  (absent entries are zero)
ProbSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const ProbSpace& sp);
StochMap from_json(const nlohmann::json& j);
nlohmann::json to_json(const StochMap& r);

// All surjections [n] -> [m] as index vectors.
std::vector<std::vector<int>> all_surjections(int n, int m);

// All deterministic measure-preserving maps between two fixed spaces.
std::vector<StochMap> enumerate_det_maps(const ProbSpace& a, const ProbSpace& b);

// Random measure-preserving stochastic matrices: random positive integer
// column weights normalised per column, target weights defined as the
// pushforward.  random_mor_between samples an exact transport plan between
// the given marginals.
class BaseSampler {
 public:
  BaseSampler(std::uint64_t seed, int max_size = 4, int max_weight = 5);
  std::uint64_t seed() const { return seed_; }
  ProbSpace random_object();
  StochMap random_mor();
  StochMap random_mor_from(const ProbSpace& x);
  StochMap random_mor_between(const ProbSpace& a, const ProbSpace& b);

 private:
  std::uint64_t seed_;
  Rng rng_;
  int max_size_;
  int max_weight_;
  int next_tag_ = 0;
};

// Random deterministic maps (coisometries).
class DetSampler {
 public:
  DetSampler(std::uint64_t seed, int max_size = 4, int max_weight = 5);
  std::uint64_t seed() const { return seed_; }
  ProbSpace random_object();
  StochMap random_mor();
  StochMap random_mor_from(const ProbSpace& x);
  StochMap random_mor_onto(const ProbSpace& y);

 private:
  std::uint64_t seed_;
  Rng rng_;
  int max_size_;
  int max_weight_;
  int next_tag_ = 0;
};

}  // namespace dagrel::finprob

namespace dagrel {
template <>
struct CatTraits<finprob::FinProbCat> {
  static constexpr bool exact = true;
};
}  // namespace dagrel

#endif
