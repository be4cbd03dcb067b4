#include "dagrel/pinj/pinj.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dagrel::pinj {

void validate(const PartialInjection& r) {
  std::set<int> seen_a, seen_b;
  int prev = -1;
  for (const auto& [a, b] : r.pairs) {
    if (a < 0 || a >= r.dom.size() || b < 0 || b >= r.cod.size()) {
      throw validation_error("PartialInjection: pair index out of range");
    }
    if (a <= prev) throw validation_error("PartialInjection: pairs not sorted by domain");
    prev = a;
    if (!seen_a.insert(a).second || !seen_b.insert(b).second) {
      throw validation_error("PartialInjection: not injective");
    }
  }
}

PartialInjection compose(const PartialInjection& s, const PartialInjection& r) {
  if (!(r.cod == s.dom)) {
    throw validation_error("PInj compose: codomain/domain mismatch");
  }
  std::map<int, int> sm;
  for (const auto& [b, c] : s.pairs) sm[b] = c;
  PartialInjection out{r.dom, s.cod, {}};
  for (const auto& [a, b] : r.pairs) {
    auto it = sm.find(b);
    if (it != sm.end()) out.pairs.emplace_back(a, it->second);
  }
  return out;
}

PartialInjection converse(const PartialInjection& r) {
  PartialInjection out{r.cod, r.dom, {}};
  for (const auto& [a, b] : r.pairs) out.pairs.emplace_back(b, a);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

PartialInjection identity_map(const FinSet& x) {
  PartialInjection out{x, x, {}};
  for (int i = 0; i < x.size(); ++i) out.pairs.emplace_back(i, i);
  return out;
}

bool map_eq(const PartialInjection& a, const PartialInjection& b) {
  return a.dom == b.dom && a.cod == b.cod && a.pairs == b.pairs;
}

std::string describe(const PartialInjection& r) {
  std::string s = r.dom.to_string() + "->" + r.cod.to_string() + "{";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    if (i) s += ",";
    s += r.dom.label(r.pairs[i].first) + ">" + r.cod.label(r.pairs[i].second);
  }
  return s + "}";
}

bool is_total(const PartialInjection& r) {
  return static_cast<int>(r.pairs.size()) == r.dom.size();
}

bool is_cototal(const PartialInjection& r) {
  return static_cast<int>(r.pairs.size()) == r.cod.size();
}

std::vector<int> support(const PartialInjection& r) {
  std::vector<int> out;
  for (const auto& [a, b] : r.pairs) out.push_back(a);
  return out;
}

std::vector<int> range(const PartialInjection& r) {
  std::vector<int> out;
  for (const auto& [a, b] : r.pairs) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

PartialInjection restriction_of(const PartialInjection& r) {
  PartialInjection out{r.dom, r.dom, {}};
  for (const auto& [a, b] : r.pairs) out.pairs.emplace_back(a, a);
  return out;
}

namespace {

const std::string kLeftTag = "L:";
const std::string kRightTag = "R:";

}  // namespace

Cospan<PartialInjection> codilator(const PartialInjection& r) {
  validate(r);
  std::map<int, int> image;  // a -> b over supp r
  for (const auto& [a, b] : r.pairs) image[a] = b;
  std::vector<std::string> labels;
  for (int a = 0; a < r.dom.size(); ++a) {
    if (!image.count(a)) labels.push_back(kLeftTag + r.dom.label(a));
  }
  for (int b = 0; b < r.cod.size(); ++b) labels.push_back(kRightTag + r.cod.label(b));
  FinSet apex(labels);
  PartialInjection i1{r.dom, apex, {}};
  for (int a = 0; a < r.dom.size(); ++a) {
    auto it = image.find(a);
    const std::string target =
        it != image.end() ? kRightTag + r.cod.label(it->second) : kLeftTag + r.dom.label(a);
    i1.pairs.emplace_back(a, apex.index_of(target));
  }
  PartialInjection i2{r.cod, apex, {}};
  for (int b = 0; b < r.cod.size(); ++b) {
    i2.pairs.emplace_back(b, apex.index_of(kRightTag + r.cod.label(b)));
  }
  return Cospan<PartialInjection>{i1, i2};
}

PartialInjection PInjCat::comediate_canonical(const Mor& r, const Cospan<Mor>& codilation) const {
  const Cospan<Mor> can = pinj::codilator(r);
  const FinSet& apex = can.left.cod;
  const Mor& s1 = codilation.left;
  const Mor& s2 = codilation.right;
  if (!is_total(s1) || !is_total(s2)) {
    throw validation_error("comediate: codilation legs must be total injections");
  }
  if (!(s1.dom == r.dom) || !(s2.dom == r.cod) || !(s1.cod == s2.cod)) {
    throw validation_error("comediate: codilation does not frame r");
  }
  std::map<int, int> m1, m2;
  for (const auto& [a, p] : s1.pairs) m1[a] = p;
  for (const auto& [b, p] : s2.pairs) m2[b] = p;
  PartialInjection c{apex, s1.cod, {}};
  for (int k = 0; k < apex.size(); ++k) {
    const std::string& lbl = apex.label(k);
    int target;
    if (lbl.compare(0, kLeftTag.size(), kLeftTag) == 0) {
      target = m1.at(r.dom.index_of(lbl.substr(kLeftTag.size())));
    } else {
      target = m2.at(r.cod.index_of(lbl.substr(kRightTag.size())));
    }
    c.pairs.emplace_back(k, target);
  }
  std::sort(c.pairs.begin(), c.pairs.end());
  try {
    validate(c);
  } catch (const validation_error&) {
    throw math_error("comediate: copairing is not injective; not a codilation of r");
  }
  if (!map_eq(compose(c, can.left), s1) || !map_eq(compose(c, can.right), s2)) {
    throw math_error("comediate: triangle fails; not a codilation of r");
  }
  return c;
}

Cospan<PartialInjection> set_pushout_cospan(const PartialInjection& r) {
  validate(r);
  // Union-find over A + B with a ~ r(a).
  const int n = r.dom.size() + r.cod.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : r.pairs) {
    parent[static_cast<std::size_t>(find(a))] = find(r.dom.size() + b);
  }
  std::map<int, std::string> cls_label;
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    const std::string lbl = i < r.dom.size() ? "A:" + r.dom.label(i)
                                             : "B:" + r.cod.label(i - r.dom.size());
    auto it = cls_label.find(root);
    if (it == cls_label.end() || lbl < it->second) cls_label[root] = lbl;
  }
  std::vector<std::string> labels;
  for (const auto& [root, lbl] : cls_label) labels.push_back(lbl);
  FinSet apex(labels);
  PartialInjection j1{r.dom, apex, {}};
  for (int a = 0; a < r.dom.size(); ++a) {
    j1.pairs.emplace_back(a, apex.index_of(cls_label.at(find(a))));
  }
  PartialInjection j2{r.cod, apex, {}};
  for (int b = 0; b < r.cod.size(); ++b) {
    j2.pairs.emplace_back(b, apex.index_of(cls_label.at(find(r.dom.size() + b))));
  }
  return Cospan<PartialInjection>{j1, j2};
}

bool inj_is_coindependent(const PartialInjection& u, const PartialInjection& v,
                          const PartialInjection& f, const PartialInjection& g) {
  for (const PartialInjection* m : {&u, &v, &f, &g}) {
    validate(*m);
    if (!is_total(*m)) {
      throw validation_error("inj_is_coindependent: legs must be total injections");
    }
  }
  const PartialInjection fu = compose(f, u);
  const PartialInjection gv = compose(g, v);
  if (!map_eq(fu, gv)) return false;
  std::set<int> ran_f, ran_g, ran_h;
  for (int b : range(f)) ran_f.insert(b);
  for (int b : range(g)) ran_g.insert(b);
  for (int b : range(fu)) ran_h.insert(b);
  std::set<int> meet;
  std::set_intersection(ran_f.begin(), ran_f.end(), ran_g.begin(), ran_g.end(),
                        std::inserter(meet, meet.begin()));
  return meet == ran_h;
}

Cospan<PartialInjection> inj_coind_pushout(const PartialInjection& u,
                                           const PartialInjection& v) {
  if (!is_total(u) || !is_total(v)) {
    throw validation_error("inj_coind_pushout: legs must be total injections");
  }
  if (!(u.dom == v.dom)) {
    throw validation_error("inj_coind_pushout: legs have different domains");
  }
  return codilator(compose(v, converse(u)));
}

CoFactorisation<PartialInjection> inj_cofactorize(const PartialInjection& f,
                                                  const PartialInjection& g) {
  validate(f);
  validate(g);
  if (!is_total(f) || !is_total(g)) {
    throw validation_error("inj_cofactorize: legs must be total injections");
  }
  if (!(f.cod == g.cod)) {
    throw validation_error("inj_cofactorize: legs have different codomains");
  }
  std::set<int> hit;
  for (int b : range(f)) hit.insert(b);
  for (int b : range(g)) hit.insert(b);
  std::vector<std::string> labels;
  for (int b : hit) labels.push_back(f.cod.label(b));
  FinSet sub(labels);
  PartialInjection e{sub, f.cod, {}};
  for (int i = 0; i < sub.size(); ++i) {
    e.pairs.emplace_back(i, f.cod.index_of(sub.label(i)));
  }
  auto corestrict = [&](const PartialInjection& m) {
    PartialInjection out{m.dom, sub, {}};
    for (const auto& [a, b] : m.pairs) out.pairs.emplace_back(a, sub.index_of(f.cod.label(b)));
    return out;
  };
  return CoFactorisation<PartialInjection>{e,
                                           Cospan<PartialInjection>{corestrict(f), corestrict(g)}};
}

std::string rel_span_key(const DualCat<PInjCat>&, const Span<PartialInjection>& sp) {
  // Dual span legs are base injections into a common apex; the relation they
  // carry is the induced partial bijection between the feet.
  const PartialInjection& i1 = sp.left;   // base: A -> K
  const PartialInjection& i2 = sp.right;  // base: B -> K
  std::map<int, int> into_b;
  for (const auto& [b, k] : i2.pairs) into_b[k] = b;
  std::set<std::pair<int, int>> rel;
  for (const auto& [a, k] : i1.pairs) {
    auto it = into_b.find(k);
    if (it != into_b.end()) rel.emplace(a, it->second);
  }
  std::string key = i1.dom.to_string() + "/" + i2.dom.to_string() + ":";
  for (const auto& [a, b] : rel) key += pair_label(i1.dom.label(a), i2.dom.label(b));
  return key;
}

PartialInjection from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("pairs")) {
    throw validation_error("PartialInjection JSON: expected {dom, cod, pairs}");
  }
  FinSet dom(j.at("dom").get<std::vector<std::string>>());
  FinSet cod(j.at("cod").get<std::vector<std::string>>());
  PartialInjection r{dom, cod, {}};
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) {
      throw validation_error("PartialInjection JSON: each pair must be [a, b]");
    }
    r.pairs.emplace_back(dom.index_of(p[0].get<std::string>()),
                         cod.index_of(p[1].get<std::string>()));
  }
  std::sort(r.pairs.begin(), r.pairs.end());
  validate(r);
  return r;
}

nlohmann::json to_json(const PartialInjection& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : r.pairs) {
    pairs.push_back(nlohmann::json::array({r.dom.label(a), r.cod.label(b)}));
  }
  return nlohmann::json{{"dom", r.dom.labels()}, {"cod", r.cod.labels()}, {"pairs", pairs}};
}

std::vector<PartialInjection> enumerate_partial_injections(const FinSet& a, const FinSet& b) {
  std::vector<PartialInjection> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(static_cast<std::size_t>(b.size()), false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == a.size()) {
      out.push_back(PartialInjection{a, b, current});
      return;
    }
    self(self, i + 1);  // undefined at i
    for (int j = 0; j < b.size(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      current.emplace_back(i, j);
      self(self, i + 1);
      current.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<PartialInjection> enumerate_total_injections(const FinSet& a, const FinSet& b) {
  std::vector<PartialInjection> out;
  for (auto& r : enumerate_partial_injections(a, b)) {
    if (is_total(r)) out.push_back(std::move(r));
  }
  return out;
}

namespace {

FinSet fresh_set(int size, int& tag) {
  std::vector<std::string> labels;
  const char* pool = "abcdefghijklmnopqrstuvwxyz";
  std::string prefix(1, pool[tag % 26]);
  if (tag >= 26) prefix += std::to_string(tag / 26);
  ++tag;
  for (int i = 0; i < size; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet(labels);
}

PartialInjection random_partial_injection(Rng& rng, const FinSet& a, const FinSet& b) {
  std::vector<int> targets(static_cast<std::size_t>(b.size()));
  for (int j = 0; j < b.size(); ++j) targets[static_cast<std::size_t>(j)] = j;
  for (int j = b.size() - 1; j > 0; --j) {
    std::swap(targets[static_cast<std::size_t>(j)],
              targets[static_cast<std::size_t>(rng.uniform_int(0, j))]);
  }
  PartialInjection r{a, b, {}};
  std::size_t next = 0;
  for (int i = 0; i < a.size() && next < targets.size(); ++i) {
    if (rng.coin(0.6)) {
      r.pairs.emplace_back(i, targets[next++]);
    }
  }
  return r;
}

}  // namespace

BaseSampler::BaseSampler(std::uint64_t seed, int max_size)
    : seed_(seed), rng_(seed), max_size_(max_size) {}

FinSet BaseSampler::random_object() {
  return fresh_set(rng_.uniform_int(0, max_size_), next_tag_);
}

PartialInjection BaseSampler::random_mor() { return random_mor_from(random_object()); }

PartialInjection BaseSampler::random_mor_from(const FinSet& x) {
  return random_partial_injection(rng_, x, fresh_set(rng_.uniform_int(0, max_size_), next_tag_));
}

PartialInjection BaseSampler::random_mor_between(const FinSet& a, const FinSet& b) {
  return random_partial_injection(rng_, a, b);
}

InjSampler::InjSampler(std::uint64_t seed, int max_size)
    : seed_(seed), rng_(seed), max_size_(max_size) {}

FinSet InjSampler::random_object() {
  return fresh_set(rng_.uniform_int(0, max_size_), next_tag_);
}

PartialInjection InjSampler::random_injection(const FinSet& small, const FinSet& big) {
  std::vector<int> targets(static_cast<std::size_t>(big.size()));
  for (int j = 0; j < big.size(); ++j) targets[static_cast<std::size_t>(j)] = j;
  for (int j = big.size() - 1; j > 0; --j) {
    std::swap(targets[static_cast<std::size_t>(j)],
              targets[static_cast<std::size_t>(rng_.uniform_int(0, j))]);
  }
  PartialInjection r{small, big, {}};
  for (int i = 0; i < small.size(); ++i) {
    r.pairs.emplace_back(i, targets[static_cast<std::size_t>(i)]);
  }
  std::sort(r.pairs.begin(), r.pairs.end());
  return r;
}

PartialInjection InjSampler::random_mor() {
  const int k = rng_.uniform_int(0, max_size_);
  const FinSet small = fresh_set(k, next_tag_);
  const FinSet big = fresh_set(rng_.uniform_int(k, max_size_ + 1), next_tag_);
  return random_injection(small, big);
}

PartialInjection InjSampler::random_mor_from(const FinSet& x) {
  // dual domain = base codomain = x
  const FinSet small = fresh_set(rng_.uniform_int(0, x.size()), next_tag_);
  return random_injection(small, x);
}

PartialInjection InjSampler::random_mor_onto(const FinSet& y) {
  // dual codomain = base domain = y
  const FinSet big = fresh_set(rng_.uniform_int(y.size(), y.size() + max_size_), next_tag_);
  return random_injection(y, big);
}

}  // namespace dagrel::pinj
