#include "dagrel/finprob/finprob.hpp"

#include <algorithm>
#include <map>

namespace dagrel::finprob {

Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    return q;
  } catch (const std::exception&) {
    throw validation_error("malformed rational \"" + s + "\" (expected p/q)");
  }
}

std::string rat_to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

void validate(const ProbSpace& sp) {
  if (static_cast<int>(sp.weight.size()) != sp.points.size()) {
    throw validation_error("ProbSpace: weight count does not match points");
  }
  if (sp.points.empty()) {
    throw validation_error("ProbSpace: a probability space needs at least one point");
  }
  Rat total = 0;
  for (int i = 0; i < sp.points.size(); ++i) {
    const Rat& w = sp.weight[static_cast<std::size_t>(i)];
    if (w <= 0) {
      throw validation_error("ProbSpace: weight of \"" + sp.points.label(i) +
                             "\" is not strictly positive (full support required)");
    }
    total += w;
  }
  if (total != 1) {
    throw validation_error("ProbSpace: weights sum to " + rat_to_string(total) + ", not 1");
  }
}

bool space_eq(const ProbSpace& a, const ProbSpace& b) {
  return a.points == b.points && a.weight == b.weight;
}

std::string describe(const ProbSpace& sp) {
  std::string s = "{";
  for (int i = 0; i < sp.points.size(); ++i) {
    if (i) s += ",";
    s += sp.points.label(i) + ":" + rat_to_string(sp.weight[static_cast<std::size_t>(i)]);
  }
  return s + "}";
}

void validate(const StochMap& r) {
  validate(r.src);
  validate(r.dst);
  const int n = r.dst.points.size(), m = r.src.points.size();
  if (static_cast<int>(r.entries.size()) != n) {
    throw validation_error("StochMap: row count mismatch");
  }
  for (const auto& row : r.entries) {
    if (static_cast<int>(row.size()) != m) {
      throw validation_error("StochMap: column count mismatch");
    }
  }
  for (int a = 0; a < m; ++a) {
    Rat col = 0;
    for (int b = 0; b < n; ++b) {
      const Rat& e = r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      if (e < 0 || e > 1) {
        throw validation_error("StochMap: entry out of [0, 1]");
      }
      col += e;
    }
    if (col != 1) {
      throw validation_error("StochMap: column sum for \"" + r.src.points.label(a) +
                             "\" is " + rat_to_string(col) + ", not 1");
    }
  }
  for (int b = 0; b < n; ++b) {
    Rat push = 0;
    for (int a = 0; a < m; ++a) {
      push += r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] *
              r.src.weight[static_cast<std::size_t>(a)];
    }
    if (push != r.dst.weight[static_cast<std::size_t>(b)]) {
      throw validation_error("StochMap: not measure-preserving at \"" +
                             r.dst.points.label(b) + "\"");
    }
  }
}

StochMap compose(const StochMap& s, const StochMap& r) {
  if (!space_eq(r.dst, s.src)) {
    throw validation_error("FinProb compose: intermediate spaces differ");
  }
  const int m = r.src.points.size(), k = r.dst.points.size(), n = s.dst.points.size();
  StochMap out{r.src, s.dst,
               std::vector<std::vector<Rat>>(static_cast<std::size_t>(n),
                                             std::vector<Rat>(static_cast<std::size_t>(m), 0))};
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < m; ++a) {
      Rat acc = 0;
      for (int b = 0; b < k; ++b) {
        acc += s.entries[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] *
               r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      }
      out.entries[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] = acc;
    }
  }
  return out;
}

StochMap bayes(const StochMap& r) {
  const int m = r.src.points.size(), n = r.dst.points.size();
  StochMap out{r.dst, r.src,
               std::vector<std::vector<Rat>>(static_cast<std::size_t>(m),
                                             std::vector<Rat>(static_cast<std::size_t>(n), 0))};
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      out.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] *
          r.src.weight[static_cast<std::size_t>(a)] / r.dst.weight[static_cast<std::size_t>(b)];
    }
  }
  return out;
}

StochMap identity_map(const ProbSpace& x) {
  const int n = x.points.size();
  StochMap out{x, x,
               std::vector<std::vector<Rat>>(static_cast<std::size_t>(n),
                                             std::vector<Rat>(static_cast<std::size_t>(n), 0))};
  for (int i = 0; i < n; ++i) out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return out;
}

bool map_eq(const StochMap& a, const StochMap& b) {
  return space_eq(a.src, b.src) && space_eq(a.dst, b.dst) && a.entries == b.entries;
}

std::string describe(const StochMap& r) {
  std::string s = describe(r.src) + "->" + describe(r.dst) + "[";
  for (int b = 0; b < r.dst.points.size(); ++b) {
    if (b) s += ";";
    for (int a = 0; a < r.src.points.size(); ++a) {
      if (a) s += ",";
      s += rat_to_string(r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
    }
  }
  return s + "]";
}

bool is_deterministic(const StochMap& r) {
  for (const auto& row : r.entries) {
    for (const Rat& e : row) {
      if (e != 0 && e != 1) return false;
    }
  }
  return true;
}

StochMap delta(const ProbSpace& src, const std::vector<int>& x, const FinSet& cod) {
  if (static_cast<int>(x.size()) != src.points.size()) {
    throw validation_error("delta: function table size mismatch");
  }
  std::vector<Rat> push(static_cast<std::size_t>(cod.size()), 0);
  for (int a = 0; a < src.points.size(); ++a) {
    const int b = x[static_cast<std::size_t>(a)];
    if (b < 0 || b >= cod.size()) throw validation_error("delta: image out of range");
    push[static_cast<std::size_t>(b)] += src.weight[static_cast<std::size_t>(a)];
  }
  for (int b = 0; b < cod.size(); ++b) {
    if (push[static_cast<std::size_t>(b)] == 0) {
      throw validation_error("delta: function not surjective, \"" + cod.label(b) +
                             "\" has no preimage (full support would break)");
    }
  }
  ProbSpace dst{cod, push};
  StochMap out{src, dst,
               std::vector<std::vector<Rat>>(static_cast<std::size_t>(cod.size()),
                                             std::vector<Rat>(static_cast<std::size_t>(src.points.size()), 0))};
  for (int a = 0; a < src.points.size(); ++a) {
    out.entries[static_cast<std::size_t>(x[static_cast<std::size_t>(a)])][static_cast<std::size_t>(a)] = 1;
  }
  return out;
}

int image_of(const StochMap& f, int a) {
  for (int b = 0; b < f.dst.points.size(); ++b) {
    const Rat& e = f.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    if (e == 1) return b;
    if (e != 0) throw validation_error("image_of: map is not deterministic");
  }
  throw validation_error("image_of: zero column");
}

namespace {

// Builds the space on pair labels (a|b) with the given joint weights and the
// two delta projections.
Span<StochMap> pair_span(const ProbSpace& A, const ProbSpace& B,
                         const std::vector<std::pair<int, int>>& pairs,
                         const std::vector<Rat>& joint) {
  std::vector<std::string> labels;
  labels.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    labels.push_back(pair_label(A.points.label(a), B.points.label(b)));
  }
  FinSet apex_set(labels);
  std::vector<Rat> w(static_cast<std::size_t>(apex_set.size()));
  std::vector<int> p1(static_cast<std::size_t>(apex_set.size()));
  std::vector<int> p2(static_cast<std::size_t>(apex_set.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const int idx = apex_set.index_of(labels[k]);
    w[static_cast<std::size_t>(idx)] = joint[k];
    p1[static_cast<std::size_t>(idx)] = pairs[k].first;
    p2[static_cast<std::size_t>(idx)] = pairs[k].second;
  }
  ProbSpace apex{apex_set, w};
  validate(apex);
  return Span<StochMap>{delta(apex, p1, A.points), delta(apex, p2, B.points)};
}

}  // namespace

Span<StochMap> dilator(const StochMap& r) {
  validate(r);
  std::vector<std::pair<int, int>> pairs;
  std::vector<Rat> joint;
  for (int a = 0; a < r.src.points.size(); ++a) {
    for (int b = 0; b < r.dst.points.size(); ++b) {
      const Rat& e = r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      if (e != 0) {
        pairs.emplace_back(a, b);
        joint.push_back(e * r.src.weight[static_cast<std::size_t>(a)]);
      }
    }
  }
  Span<StochMap> sp = pair_span(r.src, r.dst, pairs, joint);
  // Marginal recovery is exact by construction; delta() already validated
  // the projections against the pushforward.
  return sp;
}

StochMap FinProbCat::mediate_canonical(const Mor& r, const Span<Mor>& dilation) const {
  const Span<Mor> can = finprob::dilator(r);
  const ProbSpace& apex = can.left.src;
  const Mor& f = dilation.left;
  const Mor& g = dilation.right;
  if (!is_deterministic(f) || !is_deterministic(g)) {
    throw validation_error("mediate: dilation legs must be deterministic");
  }
  if (!space_eq(f.src, g.src) || !space_eq(f.dst, r.src) || !space_eq(g.dst, r.dst)) {
    throw validation_error("mediate: dilation does not frame r");
  }
  std::vector<int> h(static_cast<std::size_t>(f.src.points.size()));
  for (int w = 0; w < f.src.points.size(); ++w) {
    const std::string lbl =
        pair_label(r.src.points.label(image_of(f, w)), r.dst.points.label(image_of(g, w)));
    auto idx = apex.points.find(lbl);
    if (!idx) {
      throw math_error("mediate: pair " + lbl + " has probability zero under r; not a dilation");
    }
    h[static_cast<std::size_t>(w)] = *idx;
  }
  StochMap e = delta(f.src, h, apex.points);
  if (!space_eq(e.dst, apex)) {
    throw math_error("mediate: comparison map does not push onto the joint measure; not a dilation");
  }
  return e;
}

Span<StochMap> conditional_product(const Cospan<StochMap>& cs) {
  const StochMap& u = cs.left;
  const StochMap& v = cs.right;
  validate(u);
  validate(v);
  if (!is_deterministic(u) || !is_deterministic(v)) {
    throw validation_error("conditional_product: legs must be deterministic");
  }
  if (!space_eq(u.dst, v.dst)) {
    throw validation_error("conditional_product: codomain spaces differ");
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<Rat> joint;
  for (int a = 0; a < u.src.points.size(); ++a) {
    const int c = image_of(u, a);
    for (int b = 0; b < v.src.points.size(); ++b) {
      if (image_of(v, b) != c) continue;
      pairs.emplace_back(a, b);
      joint.push_back(u.src.weight[static_cast<std::size_t>(a)] *
                      v.src.weight[static_cast<std::size_t>(b)] /
                      u.dst.weight[static_cast<std::size_t>(c)]);
    }
  }
  return pair_span(u.src, v.src, pairs, joint);
}

bool fp_is_independent(const Square<StochMap>& sq) {
  for (const StochMap* m : {&sq.f, &sq.g, &sq.u, &sq.v}) {
    validate(*m);
    if (!is_deterministic(*m)) {
      throw validation_error("fp_is_independent: all legs must be deterministic");
    }
  }
  const FinProbCat cat;
  if (!cat.mor_eq(cat.compose(sq.u, sq.f), cat.compose(sq.v, sq.g))) return false;
  const StochMap h = cat.compose(sq.u, sq.f);
  const bool relative =
      cat.mor_eq(cat.compose(cat.dagger(h), h),
                 cat.compose(cat.compose(cat.dagger(sq.f), sq.f),
                             cat.compose(cat.dagger(sq.g), sq.g)));
  // P[Y = b | X = a] = P[Y = b | Z = f a] on every pair, exactly.
  const bool conditional = cat.mor_eq(cat.compose(sq.g, cat.dagger(sq.f)),
                                      cat.compose(cat.dagger(sq.v), sq.u));
  if (relative != conditional) {
    throw math_error("fp_is_independent: relative and conditional criteria disagree");
  }
  return relative;
}

Factorisation<StochMap> fp_factorize(const Span<StochMap>& sp) {
  const StochMap& f = sp.left;
  const StochMap& g = sp.right;
  validate(f);
  validate(g);
  if (!is_deterministic(f) || !is_deterministic(g)) {
    throw validation_error("fp_factorize: legs must be deterministic");
  }
  if (!space_eq(f.src, g.src)) {
    throw validation_error("fp_factorize: legs have different domains");
  }
  std::map<std::pair<int, int>, Rat> image;
  for (int w = 0; w < f.src.points.size(); ++w) {
    image[{image_of(f, w), image_of(g, w)}] += f.src.weight[static_cast<std::size_t>(w)];
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<Rat> joint;
  for (const auto& [pr, wt] : image) {
    pairs.push_back(pr);
    joint.push_back(wt);
  }
  Span<StochMap> monic = pair_span(f.dst, g.dst, pairs, joint);
  const ProbSpace& apex = monic.left.src;
  std::vector<int> e(static_cast<std::size_t>(f.src.points.size()));
  for (int w = 0; w < f.src.points.size(); ++w) {
    e[static_cast<std::size_t>(w)] = apex.points.index_of(
        pair_label(f.dst.points.label(image_of(f, w)), g.dst.points.label(image_of(g, w))));
  }
  return Factorisation<StochMap>{delta(f.src, e, apex.points), monic};
}

std::string rel_span_key(const FinProbCat&, const Span<StochMap>& sp) {
  std::map<std::pair<int, int>, Rat> coupling;
  for (int w = 0; w < sp.left.src.points.size(); ++w) {
    coupling[{image_of(sp.left, w), image_of(sp.right, w)}] +=
        sp.left.src.weight[static_cast<std::size_t>(w)];
  }
  std::string key = describe(sp.left.dst) + "/" + describe(sp.right.dst) + ":";
  for (const auto& [pr, wt] : coupling) {
    key += pair_label(sp.left.dst.points.label(pr.first), sp.right.dst.points.label(pr.second)) +
           "=" + rat_to_string(wt) + ";";
  }
  return key;
}

ProbSpace space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("weights")) {
    throw validation_error("ProbSpace JSON: expected {points, weights}");
  }
  const auto labels = j.at("points").get<std::vector<std::string>>();
  const auto wstr = j.at("weights").get<std::vector<std::string>>();
  if (labels.size() != wstr.size()) {
    throw validation_error("ProbSpace JSON: points/weights size mismatch");
  }
  FinSet points(labels);
  std::vector<Rat> weight(wstr.size());
  for (std::size_t i = 0; i < wstr.size(); ++i) {
    // weights are listed in the order of the given points, which we re-sort
    weight[static_cast<std::size_t>(points.index_of(labels[i]))] = rat_from_string(wstr[i]);
  }
  ProbSpace sp{points, weight};
  validate(sp);
  return sp;
}

nlohmann::json space_to_json(const ProbSpace& sp) {
  std::vector<std::string> w;
  for (const Rat& q : sp.weight) w.push_back(rat_to_string(q));
  return nlohmann::json{{"points", sp.points.labels()}, {"weights", w}};
}

StochMap from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("src") || !j.contains("dst") || !j.contains("entries")) {
    throw validation_error("StochMap JSON: expected {src, dst, entries}");
  }
  ProbSpace src = space_from_json(j.at("src"));
  ProbSpace dst = space_from_json(j.at("dst"));
  StochMap r{src, dst,
             std::vector<std::vector<Rat>>(static_cast<std::size_t>(dst.points.size()),
                                           std::vector<Rat>(static_cast<std::size_t>(src.points.size()), 0))};
  for (const auto& t : j.at("entries")) {
    if (!t.is_array() || t.size() != 3) {
      throw validation_error("StochMap JSON: entries are [b, a, value] triples");
    }
    const int b = dst.points.index_of(t[0].get<std::string>());
    const int a = src.points.index_of(t[1].get<std::string>());
    r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
        rat_from_string(t[2].get<std::string>());
  }
  validate(r);
  return r;
}

nlohmann::json to_json(const StochMap& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (int b = 0; b < r.dst.points.size(); ++b) {
    for (int a = 0; a < r.src.points.size(); ++a) {
      const Rat& e = r.entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      if (e != 0) {
        entries.push_back(nlohmann::json::array(
            {r.dst.points.label(b), r.src.points.label(a), rat_to_string(e)}));
      }
    }
  }
  return nlohmann::json{
      {"src", space_to_json(r.src)}, {"dst", space_to_json(r.dst)}, {"entries", entries}};
}

std::vector<std::vector<int>> all_surjections(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m > n || m <= 0) return out;
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (int i : img) hit[static_cast<std::size_t>(i)] = true;
    if (std::find(hit.begin(), hit.end(), false) == hit.end()) out.push_back(img);
    int k = 0;
    while (k < n) {
      if (++img[static_cast<std::size_t>(k)] < m) break;
      img[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

std::vector<StochMap> enumerate_det_maps(const ProbSpace& a, const ProbSpace& b) {
  std::vector<StochMap> out;
  for (const auto& img : all_surjections(a.points.size(), b.points.size())) {
    StochMap d = delta(a, img, b.points);
    if (space_eq(d.dst, b)) out.push_back(d);
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

std::vector<Rat> random_weights(Rng& rng, int n, int max_weight) {
  std::vector<long> parts(static_cast<std::size_t>(n));
  long total = 0;
  for (auto& p : parts) {
    p = rng.uniform_int(1, max_weight);
    total += p;
  }
  std::vector<Rat> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = Rat(parts[static_cast<std::size_t>(i)], total);
  }
  return w;
}

std::vector<int> random_surjection_vec(Rng& rng, int n, int m) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }
  for (int k = 0; k < n; ++k) {
    img[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] =
        k < m ? k : rng.uniform_int(0, m - 1);
  }
  return img;
}

}  // namespace

BaseSampler::BaseSampler(std::uint64_t seed, int max_size, int max_weight)
    : seed_(seed), rng_(seed), max_size_(max_size), max_weight_(max_weight) {}

ProbSpace BaseSampler::random_object() {
  const int n = rng_.uniform_int(1, max_size_);
  ProbSpace sp{fresh_set(n, next_tag_), random_weights(rng_, n, max_weight_)};
  return sp;
}

StochMap BaseSampler::random_mor() { return random_mor_from(random_object()); }

StochMap BaseSampler::random_mor_from(const ProbSpace& x) {
  const int m = x.points.size();
  const int n = rng_.uniform_int(1, max_size_);
  // Integer mass matrix with no zero column or zero row.
  std::vector<std::vector<long>> k(static_cast<std::size_t>(n),
                                   std::vector<long>(static_cast<std::size_t>(m), 0));
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < m; ++a) {
      if (rng_.coin(0.55)) k[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
          rng_.uniform_int(1, 4);
    }
  }
  for (int b = 0; b < n; ++b) {
    auto& row = k[static_cast<std::size_t>(b)];
    if (std::all_of(row.begin(), row.end(), [](long v) { return v == 0; })) {
      row[static_cast<std::size_t>(rng_.uniform_int(0, m - 1))] = rng_.uniform_int(1, 4);
    }
  }
  for (int a = 0; a < m; ++a) {
    bool zero = true;
    for (int b = 0; b < n; ++b) zero = zero && k[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == 0;
    if (zero) {
      k[static_cast<std::size_t>(rng_.uniform_int(0, n - 1))][static_cast<std::size_t>(a)] =
          rng_.uniform_int(1, 4);
    }
  }
  std::vector<std::vector<Rat>> entries(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(m), 0));
  std::vector<Rat> push(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < m; ++a) {
    long col = 0;
    for (int b = 0; b < n; ++b) col += k[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) {
      entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
          Rat(k[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)], col);
      push[static_cast<std::size_t>(b)] +=
          entries[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] *
          x.weight[static_cast<std::size_t>(a)];
    }
  }
  ProbSpace dst{fresh_set(n, next_tag_), push};
  StochMap r{x, dst, entries};
  validate(r);
  return r;
}

StochMap BaseSampler::random_mor_between(const ProbSpace& a, const ProbSpace& b) {
  // Exact random transport plan with the prescribed marginals, filled
  // greedily along shuffled orders.
  const int m = a.points.size(), n = b.points.size();
  std::vector<Rat> row_left = a.weight;
  std::vector<Rat> col_left = b.weight;
  std::vector<int> ra(static_cast<std::size_t>(m)), cb(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) ra[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < n; ++j) cb[static_cast<std::size_t>(j)] = j;
  for (int i = m - 1; i > 0; --i) {
    std::swap(ra[static_cast<std::size_t>(i)], ra[static_cast<std::size_t>(rng_.uniform_int(0, i))]);
  }
  for (int j = n - 1; j > 0; --j) {
    std::swap(cb[static_cast<std::size_t>(j)], cb[static_cast<std::size_t>(rng_.uniform_int(0, j))]);
  }
  std::vector<std::vector<Rat>> joint(static_cast<std::size_t>(m),
                                      std::vector<Rat>(static_cast<std::size_t>(n), 0));
  std::size_t i = 0, j = 0;
  while (i < ra.size() && j < cb.size()) {
    const int aa = ra[i], bb = cb[j];
    const Rat take = std::min(row_left[static_cast<std::size_t>(aa)],
                              col_left[static_cast<std::size_t>(bb)]);
    joint[static_cast<std::size_t>(aa)][static_cast<std::size_t>(bb)] += take;
    row_left[static_cast<std::size_t>(aa)] -= take;
    col_left[static_cast<std::size_t>(bb)] -= take;
    if (row_left[static_cast<std::size_t>(aa)] == 0) ++i;
    if (col_left[static_cast<std::size_t>(bb)] == 0) ++j;
  }
  std::vector<std::vector<Rat>> entries(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(m), 0));
  for (int aa = 0; aa < m; ++aa) {
    for (int bb = 0; bb < n; ++bb) {
      entries[static_cast<std::size_t>(bb)][static_cast<std::size_t>(aa)] =
          joint[static_cast<std::size_t>(aa)][static_cast<std::size_t>(bb)] /
          a.weight[static_cast<std::size_t>(aa)];
    }
  }
  StochMap r{a, b, entries};
  validate(r);
  return r;
}

DetSampler::DetSampler(std::uint64_t seed, int max_size, int max_weight)
    : seed_(seed), rng_(seed), max_size_(max_size), max_weight_(max_weight) {}

ProbSpace DetSampler::random_object() {
  const int n = rng_.uniform_int(1, max_size_);
  return ProbSpace{fresh_set(n, next_tag_), random_weights(rng_, n, max_weight_)};
}

StochMap DetSampler::random_mor() { return random_mor_from(random_object()); }

StochMap DetSampler::random_mor_from(const ProbSpace& x) {
  const int m = rng_.uniform_int(1, x.points.size());
  return delta(x, random_surjection_vec(rng_, x.points.size(), m), fresh_set(m, next_tag_));
}

StochMap DetSampler::random_mor_onto(const ProbSpace& y) {
  // Split each point of y into 1..3 copies with an exact weight split.
  std::vector<std::string> labels;
  std::vector<Rat> weights;
  std::vector<int> img;
  int copy_tag = 0;
  for (int c = 0; c < y.points.size(); ++c) {
    const int parts = rng_.uniform_int(1, 3);
    std::vector<long> cuts(static_cast<std::size_t>(parts));
    long total = 0;
    for (auto& q : cuts) {
      q = rng_.uniform_int(1, max_weight_);
      total += q;
    }
    for (int p = 0; p < parts; ++p) {
      labels.push_back("s" + std::to_string(copy_tag++));
      weights.push_back(y.weight[static_cast<std::size_t>(c)] *
                        Rat(cuts[static_cast<std::size_t>(p)], total));
      img.push_back(c);
    }
  }
  FinSet pts(labels);
  // labels were generated in order s0, s1, ... so FinSet sorting must keep
  // them aligned; re-map through the sorted order.
  std::vector<Rat> w_sorted(weights.size());
  std::vector<int> img_sorted(img.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const int idx = pts.index_of(labels[k]);
    w_sorted[static_cast<std::size_t>(idx)] = weights[k];
    img_sorted[static_cast<std::size_t>(idx)] = img[k];
  }
  ProbSpace omega{pts, w_sorted};
  validate(omega);
  StochMap d = delta(omega, img_sorted, y.points);
  if (!space_eq(d.dst, y)) {
    throw math_error("random_mor_onto: split does not reassemble the target measure");
  }
  return d;
}

}  // namespace dagrel::finprob
