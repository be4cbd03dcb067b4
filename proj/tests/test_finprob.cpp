#include "dagrel/core/checks.hpp"
#include "dagrel/core/coisom.hpp"
#include "dagrel/core/ops.hpp"
#include "dagrel/finprob/finprob.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dagrel;
using namespace dagrel::finprob;

namespace {

ProbSpace space(std::vector<std::string> pts, std::vector<std::string> ws) {
  FinSet points(pts);
  std::vector<Rat> w(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    w[static_cast<std::size_t>(points.index_of(pts[i]))] = rat_from_string(ws[i]);
  }
  ProbSpace sp{points, w};
  validate(sp);
  return sp;
}

StochMap stoch(const ProbSpace& src, const ProbSpace& dst,
               std::vector<std::vector<std::string>> rows) {
  StochMap r{src, dst, {}};
  r.entries.resize(rows.size());
  for (std::size_t b = 0; b < rows.size(); ++b) {
    for (const auto& e : rows[b]) r.entries[b].push_back(rat_from_string(e));
  }
  validate(r);
  return r;
}

const FinProbCat cat;

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_from_string("3/6") == Rat(1, 2));
  CHECK(rat_to_string(Rat(2, 4)) == "1/2");
  CHECK(rat_to_string(Rat(3)) == "3");
  CHECK_THROWS_AS(rat_from_string("x/y"), validation_error);
}

TEST_CASE("space validation enforces full support and total mass one") {
  CHECK_THROWS_AS(space({"a"}, {"1/2"}), validation_error);
  CHECK_THROWS_AS(space({"a", "b"}, {"1", "0"}), validation_error);
  CHECK_NOTHROW(space({"a", "b", "c"}, {"1/2", "1/4", "1/4"}));
}

TEST_CASE("composition is the exact matrix product") {
  auto uni = space({"a1", "a2"}, {"1/2", "1/2"});
  auto r = stoch(uni, uni, {{"1/3", "2/3"}, {"2/3", "1/3"}});
  auto s = stoch(uni, uni, {{"3/4", "1/4"}, {"1/4", "3/4"}});
  // (sr)(b1|a1) = 3/4*1/3 + 1/4*2/3 = 5/12
  auto sr = cat.compose(s, r);
  CHECK(sr.entries[0][0] == Rat(5, 12));
  CHECK(sr.entries[0][1] == Rat(7, 12));
  CHECK(map_eq(cat.compose(r, cat.identity(uni)), r));
  CHECK(map_eq(cat.compose(cat.identity(uni), r), r));
}

TEST_CASE("Bayesian inversion follows the formula and is a dagger") {
  auto a = space({"a1", "a2"}, {"1/2", "1/2"});
  auto b = space({"b1", "b2"}, {"3/4", "1/4"});
  auto r = stoch(a, b, {{"1", "1/2"}, {"0", "1/2"}});
  auto rd = cat.dagger(r);
  CHECK(rd.entries[0][0] == Rat(2, 3));
  CHECK(rd.entries[0][1] == Rat(0));
  CHECK(rd.entries[1][0] == Rat(1, 3));
  CHECK(rd.entries[1][1] == Rat(1));
  CHECK(map_eq(cat.dagger(rd), r));

  // Deterministic bijection daggers to the transpose permutation.
  auto c = space({"x", "y"}, {"1/2", "1/2"});
  auto perm = stoch(a, c, {{"0", "1"}, {"1", "0"}});
  CHECK(map_eq(cat.dagger(perm), stoch(c, a, {{"0", "1"}, {"1", "0"}})));

  // (sr)^dag = r^dag s^dag exactly on samples.
  BaseSampler smp(5u, 4);
  for (int i = 0; i < 100; ++i) {
    auto f = smp.random_mor();
    auto g = smp.random_mor_from(f.dst);
    CHECK(map_eq(cat.dagger(cat.compose(g, f)),
                 cat.compose(cat.dagger(f), cat.dagger(g))));
  }
}

TEST_CASE("deterministic maps are exactly the coisometries") {
  auto a = space({"a1", "a2"}, {"1/2", "1/2"});
  CHECK(is_deterministic(cat.identity(a)));
  CHECK(is_coisometry(cat, cat.identity(a)));

  auto pt = space({"*"}, {"1"});
  auto col = stoch(pt, a, {{"1/2"}, {"1/2"}});
  CHECK_FALSE(is_deterministic(col));
  CHECK_FALSE(is_coisometry(cat, col));

  // Exhaustive: every measure-preserving surjection between dyadic spaces of
  // size <= 3 is coisometric.
  auto omega = space({"o1", "o2", "o3"}, {"1/2", "1/4", "1/4"});
  auto b = space({"x", "y"}, {"3/4", "1/4"});
  auto dets = enumerate_det_maps(omega, b);
  CHECK(!dets.empty());
  for (const auto& d : dets) {
    CHECK(is_deterministic(d));
    CHECK(is_coisometry(cat, d));
  }

  // Random stochastic maps agree both ways.
  BaseSampler smp(23u, 4);
  for (int i = 0; i < 100; ++i) {
    auto r = smp.random_mor();
    CHECK(is_coisometry(cat, r) == is_deterministic(r));
  }
}

TEST_CASE("delta matrices") {
  auto a = space({"a1", "a2", "a3"}, {"1/2", "1/4", "1/4"});
  auto id = delta(a, {0, 1, 2}, a.points);
  CHECK(map_eq(id, cat.identity(a)));

  // Constant function lands in the one-point space.
  auto terminal = delta(a, {0, 0, 0}, FinSet({"*"}));
  CHECK(terminal.dst.points.size() == 1);
  CHECK(terminal.dst.weight[0] == 1);

  // Functoriality: delta of a composite is the composite of deltas.
  auto dx = delta(a, {0, 0, 1}, FinSet({"m", "n"}));
  auto df = delta(dx.dst, {0, 0}, FinSet({"*"}));
  auto composite = delta(a, {0, 0, 0}, FinSet({"*"}));
  CHECK(map_eq(cat.compose(df, dx), composite));

  CHECK_THROWS_AS(delta(a, {0, 0, 0}, FinSet({"m", "n"})), validation_error);
}

TEST_CASE("the support dilator carries the joint measure") {
  auto a = space({"a1", "a2"}, {"1/2", "1/2"});
  auto b = space({"b1", "b2"}, {"3/4", "1/4"});
  auto r = stoch(a, b, {{"1", "1/2"}, {"0", "1/2"}});
  auto sp = dilator(r);
  const ProbSpace& apex = sp.left.src;
  CHECK(apex.points.labels() ==
        std::vector<std::string>{"(a1|b1)", "(a2|b1)", "(a2|b2)"});
  CHECK(apex.weight[0] == Rat(1, 2));
  CHECK(apex.weight[1] == Rat(1, 4));
  CHECK(apex.weight[2] == Rat(1, 4));

  // Dilation equation and joint monicity.
  CHECK(map_eq(cat.compose(sp.right, cat.dagger(sp.left)), r));
  auto verdict = verify_dilator(cat, r, sp);
  INFO(verdict.reason);
  CHECK(verdict.ok);

  // Deterministic r: apex has |A| points.
  auto d = delta(a, {0, 0}, FinSet({"*"}));
  CHECK(dilator(d).left.src.points.size() == 2);
  CHECK(verify_dilator(cat, d, Span<StochMap>{cat.identity(a), d}).ok);
}

TEST_CASE("conditional products") {
  auto a = space({"a1", "a2"}, {"1/2", "1/2"});
  auto b = space({"b1", "b2"}, {"1/3", "2/3"});
  auto pt = space({"*"}, {"1"});
  auto ta = delta(a, {0, 0}, pt.points);
  auto tb = delta(b, {0, 0}, pt.points);

  // Over the point: the product measure.
  auto prod = conditional_product(Cospan<StochMap>{ta, tb});
  const ProbSpace& apex = prod.left.src;
  CHECK(apex.points.size() == 4);
  CHECK(apex.weight[static_cast<std::size_t>(apex.points.index_of("(a1|b1)"))] == Rat(1, 6));
  CHECK(apex.weight[static_cast<std::size_t>(apex.points.index_of("(a2|b2)"))] == Rat(1, 3));

  // Exact agreement with the dilator of v^dag u.
  DetSampler det(29u, 4);
  for (int i = 0; i < 60; ++i) {
    auto u = det.random_mor();
    auto v = det.random_mor_onto(u.dst);
    auto direct = conditional_product(Cospan<StochMap>{u, v});
    auto generic = dilator(cat.compose(cat.dagger(v), u));
    CHECK(map_eq(direct.left, generic.left));
    CHECK(map_eq(direct.right, generic.right));
  }
}

TEST_CASE("conditional independence") {
  auto a = space({"a1", "a2"}, {"1/2", "1/2"});
  auto b = space({"b1", "b2"}, {"1/2", "1/2"});
  auto pt = space({"*"}, {"1"});
  auto prod = conditional_product(
      Cospan<StochMap>{delta(a, {0, 0}, pt.points), delta(b, {0, 0}, pt.points)});
  Square<StochMap> sq{prod.left, prod.right, delta(a, {0, 0}, pt.points),
                      delta(b, {0, 0}, pt.points)};
  CHECK(fp_is_independent(sq));

  // Perfectly correlated coins over the point: dependent.
  auto omega = space({"hh", "tt"}, {"1/2", "1/2"});
  auto x = delta(omega, {0, 1}, a.points);
  auto y = delta(omega, {0, 1}, b.points);
  Square<StochMap> corr{x, y, delta(a, {0, 0}, pt.points), delta(b, {0, 0}, pt.points)};
  CHECK_FALSE(fp_is_independent(corr));

  // I5-shaped square (f, f, 1, 1).
  Square<StochMap> i5{x, x, cat.identity(a), cat.identity(a)};
  CHECK(fp_is_independent(i5));

  // The relative-independence criterion matches the generic dagger criterion.
  CoisomCat<FinProbCat> c{cat};
  CHECK(c.is_independent(sq));
  CHECK_FALSE(c.is_independent(corr));
}

TEST_CASE("factorisation of spans of deterministic maps") {
  auto omega = space({"o1", "o2", "o3"}, {"1/2", "1/4", "1/4"});
  auto f = delta(omega, {0, 1, 0}, FinSet({"x", "y"}));
  auto fac2 = fp_factorize(Span<StochMap>{f, f});
  CHECK(fac2.monic.left.src.points.size() == 2);  // the diagonal
  CHECK(map_eq(fac2.monic.left, fac2.monic.right));

  DetSampler det(31u, 4);
  for (int i = 0; i < 100; ++i) {
    auto u = det.random_mor();
    auto v = det.random_mor_from(u.src);
    auto fac = fp_factorize(Span<StochMap>{u, v});
    CHECK(map_eq(cat.compose(fac.monic.left, fac.epi), u));
    CHECK(map_eq(cat.compose(fac.monic.right, fac.epi), v));
    CoisomCat<FinProbCat> c{cat};
    CHECK(c.is_jointly_monic(fac.monic));

    // Generic route agrees.
    auto gfac = c.factorize(Span<StochMap>{u, v});
    CHECK(map_eq(gfac.epi, fac.epi));
    CHECK(map_eq(gfac.monic.left, fac.monic.left));
    CHECK(map_eq(gfac.monic.right, fac.monic.right));
  }
}

TEST_CASE("suites pass on seeded samples") {
  BaseSampler base(37u, 4);
  auto rep = check_dagger_axioms(cat, base, 120, "finprob dagger");
  INFO(first_witness(rep));
  CHECK(rep.ok());

  CoisomCat<FinProbCat> c{cat};
  DetSampler co(41u, 4);
  auto ind = check_independence_axioms(c, co, 50, "finprob independence");
  INFO(first_witness(ind));
  CHECK(ind.ok());

  DetSampler co2(43u, 4);
  auto epi = check_epi_regularity(c, co2, 50, "finprob epi-regularity");
  INFO(first_witness(epi));
  CHECK(epi.ok());

  BaseSampler base2(47u, 3);
  DetSampler co3(53u, 3);
  auto dil = check_dilators(cat, base2, co3, 30, 3, "finprob dilators");
  INFO(first_witness(dil));
  CHECK(dil.ok());
}

TEST_CASE("transport-plan sampler hits the prescribed marginals") {
  BaseSampler smp(59u, 4);
  for (int i = 0; i < 50; ++i) {
    auto a = smp.random_object();
    auto b = smp.random_object();
    auto r = smp.random_mor_between(a, b);
    CHECK(space_eq(r.src, a));
    CHECK(space_eq(r.dst, b));
  }
}

TEST_CASE("JSON round trip") {
  auto a = space({"a1", "a2"}, {"1/2", "1/2"});
  auto b = space({"b1", "b2"}, {"3/4", "1/4"});
  auto r = stoch(a, b, {{"1", "1/2"}, {"0", "1/2"}});
  CHECK(map_eq(from_json(to_json(r)), r));

  auto bad = to_json(r);
  bad["entries"][0][2] = "9/10";
  CHECK_THROWS_AS(from_json(bad), validation_error);
}
