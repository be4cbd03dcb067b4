#include "dagrel/msurj/msurj.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dagrel::msurj {

void validate(const MultiMap& r) {
  if (static_cast<int>(r.table.size()) != r.dom.size()) {
    throw validation_error("MultiMap: table size does not match domain");
  }
  std::vector<bool> hit(static_cast<std::size_t>(r.cod.size()), false);
  for (int a = 0; a < r.dom.size(); ++a) {
    const auto& row = r.table[static_cast<std::size_t>(a)];
    if (row.empty()) {
      throw validation_error("MultiMap: empty image of \"" + r.dom.label(a) + "\"");
    }
    int prev = -1;
    for (int b : row) {
      if (b < 0 || b >= r.cod.size()) {
        throw validation_error("MultiMap: image index out of range");
      }
      if (b <= prev) {
        throw validation_error("MultiMap: image row not sorted/distinct");
      }
      prev = b;
      hit[static_cast<std::size_t>(b)] = true;
    }
  }
  for (int b = 0; b < r.cod.size(); ++b) {
    if (!hit[static_cast<std::size_t>(b)]) {
      throw validation_error("MultiMap: not surjective, \"" + r.cod.label(b) +
                             "\" is never hit");
    }
  }
}

MultiMap compose(const MultiMap& s, const MultiMap& r) {
  if (!(r.cod == s.dom)) {
    throw validation_error("MSurj compose: codomain/domain mismatch");
  }
  MultiMap out{r.dom, s.cod, {}};
  out.table.resize(static_cast<std::size_t>(r.dom.size()));
  for (int a = 0; a < r.dom.size(); ++a) {
    std::set<int> acc;
    for (int b : r.table[static_cast<std::size_t>(a)]) {
      const auto& row = s.table[static_cast<std::size_t>(b)];
      acc.insert(row.begin(), row.end());
    }
    out.table[static_cast<std::size_t>(a)].assign(acc.begin(), acc.end());
  }
  return out;
}

MultiMap converse(const MultiMap& r) {
  MultiMap out{r.cod, r.dom, {}};
  out.table.resize(static_cast<std::size_t>(r.cod.size()));
  for (int a = 0; a < r.dom.size(); ++a) {
    for (int b : r.table[static_cast<std::size_t>(a)]) {
      out.table[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  for (auto& row : out.table) std::sort(row.begin(), row.end());
  return out;
}

MultiMap identity_map(const FinSet& x) {
  MultiMap out{x, x, {}};
  out.table.resize(static_cast<std::size_t>(x.size()));
  for (int a = 0; a < x.size(); ++a) out.table[static_cast<std::size_t>(a)] = {a};
  return out;
}

bool map_eq(const MultiMap& a, const MultiMap& b) {
  return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
}

std::string describe(const MultiMap& r) {
  std::string s = r.dom.to_string() + "->" + r.cod.to_string() + "{";
  for (int a = 0; a < r.dom.size(); ++a) {
    if (a) s += ";";
    s += r.dom.label(a) + ":";
    const auto& row = r.table[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ",";
      s += r.cod.label(row[i]);
    }
  }
  return s + "}";
}

bool is_single_valued(const MultiMap& r) {
  for (const auto& row : r.table) {
    if (row.size() != 1) return false;
  }
  return true;
}

int image_of(const MultiMap& f, int a) {
  const auto& row = f.table[static_cast<std::size_t>(a)];
  if (row.size() != 1) {
    throw validation_error("image_of: morphism is not single-valued");
  }
  return row[0];
}

Span<MultiMap> graph_dilator(const MultiMap& r) {
  validate(r);
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (int a = 0; a < r.dom.size(); ++a) {
    for (int b : r.table[static_cast<std::size_t>(a)]) {
      pairs.emplace_back(a, b);
      labels.push_back(pair_label(r.dom.label(a), r.cod.label(b)));
    }
  }
  FinSet apex(labels);
  MultiMap p1{apex, r.dom, std::vector<std::vector<int>>(pairs.size())};
  MultiMap p2{apex, r.cod, std::vector<std::vector<int>>(pairs.size())};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    int idx = apex.index_of(pair_label(r.dom.label(pairs[k].first), r.cod.label(pairs[k].second)));
    p1.table[static_cast<std::size_t>(idx)] = {pairs[k].first};
    p2.table[static_cast<std::size_t>(idx)] = {pairs[k].second};
  }
  return Span<MultiMap>{p1, p2};
}

MultiMap MSurjCat::mediate_canonical(const Mor& r, const Span<Mor>& dilation) const {
  const Span<Mor> graph = graph_dilator(r);
  const FinSet& apex = graph.left.dom;
  const Mor& f = dilation.left;
  const Mor& g = dilation.right;
  if (!is_single_valued(f) || !is_single_valued(g)) {
    throw validation_error("mediate: dilation legs must be single-valued");
  }
  if (!(f.dom == g.dom) || !(f.cod == r.dom) || !(g.cod == r.cod)) {
    throw validation_error("mediate: dilation does not frame r");
  }
  MultiMap e{f.dom, apex, std::vector<std::vector<int>>(static_cast<std::size_t>(f.dom.size()))};
  for (int x = 0; x < f.dom.size(); ++x) {
    const std::string lbl = pair_label(r.dom.label(image_of(f, x)), r.cod.label(image_of(g, x)));
    auto idx = apex.find(lbl);
    if (!idx) {
      throw math_error("mediate: pair " + lbl + " is outside the graph of r; not a dilation");
    }
    e.table[static_cast<std::size_t>(x)] = {*idx};
  }
  try {
    validate(e);
  } catch (const validation_error& ex) {
    throw math_error(std::string("mediate: comparison map is not surjective; not a dilation (") +
                     ex.what() + ")");
  }
  return e;
}

bool surj_is_independent(const Square<MultiMap>& sq) {
  for (const MultiMap* m : {&sq.f, &sq.g, &sq.u, &sq.v}) {
    validate(*m);
    if (!is_single_valued(*m)) {
      throw validation_error("surj_is_independent: all legs must be single-valued");
    }
  }
  MSurjCat cat;
  if (!cat.mor_eq(cat.compose(sq.u, sq.f), cat.compose(sq.v, sq.g))) return false;
  for (int a = 0; a < sq.u.dom.size(); ++a) {
    for (int b = 0; b < sq.v.dom.size(); ++b) {
      if (image_of(sq.u, a) != image_of(sq.v, b)) continue;
      bool realised = false;
      for (int x = 0; x < sq.f.dom.size() && !realised; ++x) {
        realised = image_of(sq.f, x) == a && image_of(sq.g, x) == b;
      }
      if (!realised) return false;
    }
  }
  return true;
}

Span<MultiMap> surj_independent_pullback(const Cospan<MultiMap>& cs) {
  const MultiMap& u = cs.left;
  const MultiMap& v = cs.right;
  validate(u);
  validate(v);
  if (!is_single_valued(u) || !is_single_valued(v)) {
    throw validation_error("surj_independent_pullback: legs must be single-valued");
  }
  if (!(u.cod == v.cod)) {
    throw validation_error("surj_independent_pullback: codomain mismatch");
  }
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < u.dom.size(); ++a) {
    for (int b = 0; b < v.dom.size(); ++b) {
      if (image_of(u, a) == image_of(v, b)) {
        pairs.emplace_back(a, b);
        labels.push_back(pair_label(u.dom.label(a), v.dom.label(b)));
      }
    }
  }
  FinSet apex(labels);
  MultiMap p1{apex, u.dom, std::vector<std::vector<int>>(pairs.size())};
  MultiMap p2{apex, v.dom, std::vector<std::vector<int>>(pairs.size())};
  for (const auto& [a, b] : pairs) {
    int idx = apex.index_of(pair_label(u.dom.label(a), v.dom.label(b)));
    p1.table[static_cast<std::size_t>(idx)] = {a};
    p2.table[static_cast<std::size_t>(idx)] = {b};
  }
  return Span<MultiMap>{p1, p2};
}

Factorisation<MultiMap> surj_factorize(const Span<MultiMap>& sp) {
  const MultiMap& f = sp.left;
  const MultiMap& g = sp.right;
  validate(f);
  validate(g);
  if (!is_single_valued(f) || !is_single_valued(g)) {
    throw validation_error("surj_factorize: legs must be single-valued");
  }
  if (!(f.dom == g.dom)) {
    throw validation_error("surj_factorize: legs have different domains");
  }
  std::set<std::pair<int, int>> image;
  for (int x = 0; x < f.dom.size(); ++x) {
    image.emplace(image_of(f, x), image_of(g, x));
  }
  std::vector<std::string> labels;
  for (const auto& [a, b] : image) {
    labels.push_back(pair_label(f.cod.label(a), g.cod.label(b)));
  }
  FinSet apex(labels);
  MultiMap e{f.dom, apex, std::vector<std::vector<int>>(static_cast<std::size_t>(f.dom.size()))};
  for (int x = 0; x < f.dom.size(); ++x) {
    e.table[static_cast<std::size_t>(x)] = {
        apex.index_of(pair_label(f.cod.label(image_of(f, x)), g.cod.label(image_of(g, x))))};
  }
  MultiMap m1{apex, f.cod, std::vector<std::vector<int>>(image.size())};
  MultiMap m2{apex, g.cod, std::vector<std::vector<int>>(image.size())};
  for (const auto& [a, b] : image) {
    int idx = apex.index_of(pair_label(f.cod.label(a), g.cod.label(b)));
    m1.table[static_cast<std::size_t>(idx)] = {a};
    m2.table[static_cast<std::size_t>(idx)] = {b};
  }
  return Factorisation<MultiMap>{e, Span<MultiMap>{m1, m2}};
}

bool kernels_commute(const MultiMap& f, const MultiMap& g) {
  if (!(f.dom == g.dom)) {
    throw validation_error("kernels_commute: different domains");
  }
  MSurjCat cat;
  const MultiMap p = cat.compose(cat.dagger(f), f);
  const MultiMap q = cat.compose(cat.dagger(g), g);
  return cat.mor_eq(cat.compose(p, q), cat.compose(q, p));
}

Square<MultiMap> independent_square_on(const MultiMap& f, const MultiMap& g) {
  if (!kernels_commute(f, g)) {
    throw math_error("independent_square_on: kernel relations do not commute");
  }
  MSurjCat cat;
  const MultiMap p = cat.compose(cat.dagger(f), f);
  const MultiMap q = cat.compose(cat.dagger(g), g);
  const MultiMap pq = cat.compose(p, q);  // the meet; an equivalence relation
  const int n = f.dom.size();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.push_back({});
    for (int y : pq.table[static_cast<std::size_t>(x)]) {
      cls[static_cast<std::size_t>(y)] = id;
      members.back().push_back(y);
    }
  }
  std::vector<std::string> labels;
  for (const auto& m : members) labels.push_back("[" + f.dom.label(m.front()) + "]");
  FinSet quot(labels);
  MultiMap h{f.dom, quot, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  for (int x = 0; x < n; ++x) {
    h.table[static_cast<std::size_t>(x)] = {
        quot.index_of("[" + f.dom.label(members[static_cast<std::size_t>(
                                cls[static_cast<std::size_t>(x)])].front()) + "]")};
  }
  const MultiMap u = cat.compose(h, cat.dagger(f));
  const MultiMap v = cat.compose(h, cat.dagger(g));
  if (!is_single_valued(u) || !is_single_valued(v)) {
    throw math_error("independent_square_on: split legs are not single-valued");
  }
  return Square<MultiMap>{f, g, u, v};
}

std::string rel_span_key(const MSurjCat&, const Span<MultiMap>& sp) {
  std::set<std::pair<int, int>> pairs;
  for (int x = 0; x < sp.left.dom.size(); ++x) {
    pairs.emplace(image_of(sp.left, x), image_of(sp.right, x));
  }
  std::string key = sp.left.cod.to_string() + "/" + sp.right.cod.to_string() + ":";
  for (const auto& [a, b] : pairs) {
    key += pair_label(sp.left.cod.label(a), sp.right.cod.label(b));
  }
  return key;
}

MultiMap from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("table")) {
    throw validation_error("MultiMap JSON: expected {dom, cod, table}");
  }
  FinSet dom(j.at("dom").get<std::vector<std::string>>());
  FinSet cod(j.at("cod").get<std::vector<std::string>>());
  MultiMap r{dom, cod, std::vector<std::vector<int>>(static_cast<std::size_t>(dom.size()))};
  for (const auto& [a, row] : j.at("table").items()) {
    int ai = dom.index_of(a);
    std::set<int> bs;
    for (const auto& b : row) bs.insert(cod.index_of(b.get<std::string>()));
    r.table[static_cast<std::size_t>(ai)].assign(bs.begin(), bs.end());
  }
  validate(r);
  return r;
}

nlohmann::json to_json(const MultiMap& r) {
  nlohmann::json table = nlohmann::json::object();
  for (int a = 0; a < r.dom.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b : r.table[static_cast<std::size_t>(a)]) row.push_back(r.cod.label(b));
    table[r.dom.label(a)] = row;
  }
  return nlohmann::json{{"dom", r.dom.labels()}, {"cod", r.cod.labels()}, {"table", table}};
}

std::vector<MultiMap> enumerate_multimaps(const FinSet& a, const FinSet& b) {
  std::vector<MultiMap> out;
  if (a.empty()) {
    if (b.empty()) out.push_back(MultiMap{a, b, {}});
    return out;
  }
  if (b.empty()) return out;
  const int subsets = (1 << b.size()) - 1;  // nonempty subsets as bitmasks
  std::vector<int> choice(static_cast<std::size_t>(a.size()), 1);
  while (true) {
    MultiMap r{a, b, std::vector<std::vector<int>>(static_cast<std::size_t>(a.size()))};
    int covered = 0;
    for (int i = 0; i < a.size(); ++i) {
      int mask = choice[static_cast<std::size_t>(i)];
      covered |= mask;
      for (int j = 0; j < b.size(); ++j) {
        if (mask & (1 << j)) r.table[static_cast<std::size_t>(i)].push_back(j);
      }
    }
    if (covered == subsets) out.push_back(r);
    int k = 0;
    while (k < a.size()) {
      if (++choice[static_cast<std::size_t>(k)] <= subsets) break;
      choice[static_cast<std::size_t>(k)] = 1;
      ++k;
    }
    if (k == a.size()) break;
  }
  return out;
}

std::vector<MultiMap> enumerate_surjections(const FinSet& a, const FinSet& b) {
  std::vector<MultiMap> out;
  if (a.empty()) {
    if (b.empty()) out.push_back(MultiMap{a, b, {}});
    return out;
  }
  if (b.empty() || b.size() > a.size()) return out;
  std::vector<int> img(static_cast<std::size_t>(a.size()), 0);
  while (true) {
    std::vector<bool> hit(static_cast<std::size_t>(b.size()), false);
    for (int i : img) hit[static_cast<std::size_t>(i)] = true;
    if (std::find(hit.begin(), hit.end(), false) == hit.end()) {
      MultiMap r{a, b, std::vector<std::vector<int>>(static_cast<std::size_t>(a.size()))};
      for (int i = 0; i < a.size(); ++i) r.table[static_cast<std::size_t>(i)] = {img[static_cast<std::size_t>(i)]};
      out.push_back(r);
    }
    int k = 0;
    while (k < a.size()) {
      if (++img[static_cast<std::size_t>(k)] < b.size()) break;
      img[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == a.size()) break;
  }
  return out;
}

namespace {

FinSet fresh_set(Rng& rng, int size, int& tag) {
  std::vector<std::string> labels;
  const char* pool = "abcdefghijklmnopqrstuvwxyz";
  std::string prefix(1, pool[tag % 26]);
  if (tag >= 26) prefix += std::to_string(tag / 26);
  ++tag;
  for (int i = 0; i < size; ++i) labels.push_back(prefix + std::to_string(i));
  (void)rng;
  return FinSet(labels);
}

// A surjection x -> y with a shuffled system of representatives.
MultiMap random_surjection(Rng& rng, const FinSet& x, const FinSet& y) {
  MultiMap r{x, y, std::vector<std::vector<int>>(static_cast<std::size_t>(x.size()))};
  std::vector<int> order(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = x.size() - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }
  for (int k = 0; k < x.size(); ++k) {
    const int a = order[static_cast<std::size_t>(k)];
    const int b = k < y.size() ? k : rng.uniform_int(0, y.size() - 1);
    r.table[static_cast<std::size_t>(a)] = {b};
  }
  return r;
}

}  // namespace

BaseSampler::BaseSampler(std::uint64_t seed, int max_size)
    : seed_(seed), rng_(seed), max_size_(max_size) {}

FinSet BaseSampler::random_object() {
  return fresh_set(rng_, rng_.uniform_int(1, max_size_), next_tag_);
}

void BaseSampler::repair_surjectivity(MultiMap& r) {
  std::vector<bool> hit(static_cast<std::size_t>(r.cod.size()), false);
  for (const auto& row : r.table) {
    for (int b : row) hit[static_cast<std::size_t>(b)] = true;
  }
  for (int b = 0; b < r.cod.size(); ++b) {
    if (hit[static_cast<std::size_t>(b)]) continue;
    auto& row = r.table[static_cast<std::size_t>(rng_.uniform_int(0, r.dom.size() - 1))];
    row.push_back(b);
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

MultiMap BaseSampler::random_mor_between(const FinSet& a, const FinSet& b) {
  if (a.empty() || b.empty()) {
    if (a.empty() && b.empty()) return identity_map(a);
    throw validation_error("no multivalued surjection between an empty and a nonempty set");
  }
  MultiMap r{a, b, std::vector<std::vector<int>>(static_cast<std::size_t>(a.size()))};
  for (int i = 0; i < a.size(); ++i) {
    std::set<int> row;
    row.insert(rng_.uniform_int(0, b.size() - 1));
    for (int j = 0; j < b.size(); ++j) {
      if (rng_.coin(0.3)) row.insert(j);
    }
    r.table[static_cast<std::size_t>(i)].assign(row.begin(), row.end());
  }
  repair_surjectivity(r);
  return r;
}

MultiMap BaseSampler::random_mor() { return random_mor_from(random_object()); }

MultiMap BaseSampler::random_mor_from(const FinSet& x) {
  if (x.empty()) return identity_map(x);
  return random_mor_between(x, fresh_set(rng_, rng_.uniform_int(1, max_size_), next_tag_));
}

SurjSampler::SurjSampler(std::uint64_t seed, int max_size)
    : seed_(seed), rng_(seed), max_size_(max_size) {}

FinSet SurjSampler::fresh_object(int size) { return fresh_set(rng_, size, next_tag_); }

FinSet SurjSampler::random_object() { return fresh_object(rng_.uniform_int(1, max_size_)); }

MultiMap SurjSampler::random_mor() { return random_mor_from(random_object()); }

MultiMap SurjSampler::random_mor_from(const FinSet& x) {
  if (x.empty()) return identity_map(x);
  const FinSet y = fresh_object(rng_.uniform_int(1, x.size()));
  return random_surjection(rng_, x, y);
}

MultiMap SurjSampler::random_mor_onto(const FinSet& y) {
  if (y.empty()) return identity_map(y);
  const FinSet x = fresh_object(rng_.uniform_int(y.size(), std::max(y.size(), max_size_)));
  return random_surjection(rng_, x, y);
}

}  // namespace dagrel::msurj
