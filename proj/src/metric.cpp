#include "boxram/metric.hpp"

#include <algorithm>
#include <numeric>

namespace boxram {

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw Error("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();
  auto integer = [&](const std::string& t) -> boost::multiprecision::cpp_int {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) fail();
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') fail();
    return boost::multiprecision::cpp_int(t[0] == '+' ? t.substr(1) : t);
  };
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto den = integer(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(integer(text.substr(0, slash)), den);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) return fail();
    const bool neg = !whole.empty() && whole[0] == '-';
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string digits = (whole.empty() || whole == "-" || whole == "+") ? "0" : whole;
    Rational r = Rational(integer(digits)) * scale;
    const Rational f{boost::multiprecision::cpp_int(frac)};
    if (neg)
      r -= f;
    else
      r += f;
    return r / Rational(scale);
  }
  return Rational(integer(text));
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Spectrum::Spectrum(std::vector<Rational> distances) : d_(std::move(distances)) {
  std::sort(d_.begin(), d_.end());
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] <= 0) throw Error("spectrum distances must be positive");
    if (i > 0 && d_[i] == d_[i - 1]) throw Error("spectrum distance " + format_rational(d_[i]) + " repeated");
  }
}

int Spectrum::index_of(const Rational& r) const {
  auto it = std::lower_bound(d_.begin(), d_.end(), r);
  return (it != d_.end() && *it == r) ? static_cast<int>(it - d_.begin()) : -1;
}

std::vector<Block> block_decompose(const Spectrum& s) {
  if (s.size() == 0) throw Error("cannot decompose an empty spectrum");
  std::vector<Block> blocks;
  const auto& d = s.distances();
  std::size_t i = 0;
  while (i < d.size()) {
    const Rational bound = 2 * d[i];
    Block b;
    while (i < d.size() && d[i] <= bound) b.push_back(d[i++]);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

bool is_independent(const Block& earlier, const Block& later) {
  if (earlier.empty() || later.empty()) throw Error("blocks must be nonempty");
  if (!(earlier.back() < later.front())) throw Error("blocks must be disjoint and given in increasing order");
  return 2 * earlier.back() < later.front();
}

bool is_simple(const Spectrum& s) {
  const auto blocks = block_decompose(s);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!is_independent(blocks[i], blocks[j])) return false;
  return true;
}

int block_of(const std::vector<Block>& blocks, const Rational& r) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), r)) return static_cast<int>(i);
  return -1;
}

Diagnostics validate_metric(const MetricSpace& x, const Spectrum& s) {
  Diagnostics diag;
  auto& p = diag.problems;
  if (x.n < 0 || static_cast<int>(x.d.size()) != x.n) {
    p.push_back("distance matrix must have n rows");
    return diag;
  }
  for (int i = 0; i < x.n; ++i)
    if (static_cast<int>(x.d[i].size()) != x.n) {
      p.push_back("row " + std::to_string(i) + " must have n entries");
      return diag;
    }
  auto pair = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 0; i < x.n; ++i) {
    if (x.d[i][i] != 0) p.push_back("nonzero diagonal entry at " + pair(i, i));
    for (int j = 0; j < x.n; ++j) {
      if (i == j) continue;
      if (x.d[i][j] != x.d[j][i]) p.push_back("asymmetric entry at " + pair(i, j));
      if (i < j && s.index_of(x.d[i][j]) < 0)
        p.push_back("distance " + format_rational(x.d[i][j]) + " at " + pair(i, j) + " is not in the spectrum");
    }
  }
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      for (int k = 0; k < x.n; ++k)
        if (i != j && j != k && i < k && x.d[i][k] > x.d[i][j] + x.d[j][k])
          p.push_back("triangle inequality fails: d" + pair(i, k) + " > d" + pair(i, j) + " + d" + pair(j, k));
  return diag;
}

namespace {

void require_metric(const MetricSpace& x, const Spectrum& s) {
  auto d = validate_metric(x, s);
  if (!d.ok()) throw Error("invalid metric space: " + d.problems.front());
}

}  // namespace

std::vector<std::vector<int>> sim_partition(const MetricSpace& x, const Spectrum& s) {
  require_metric(x, s);
  const auto blocks = block_decompose(s);
  std::vector<int> parent(x.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto near = [&](int i, int j) { return i == j || block_of(blocks, x.d[i][j]) == 0; };
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j)
      if (near(i, j)) parent[find(j)] = find(i);
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(x.n, -1);
  for (int i = 0; i < x.n; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[r]].push_back(i);
  }
  for (const auto& c : classes)
    for (int a : c)
      for (int b : c)
        if (!near(a, b))
          throw Error("the ~ relation is not transitive (points " + std::to_string(a) + " and " + std::to_string(b) +
                      ")");
  return classes;
}

int admissible_k(const Spectrum& s) {
  if (!is_simple(s)) throw Error("spectrum is not simple");
  const auto blocks = block_decompose(s);
  const int k = static_cast<int>(blocks.size());
  if (k < 2) throw Error("spectrum has a single block; the encoding needs k >= 2 blocks");
  if (static_cast<int>(blocks[0].size()) != k - 1)
    throw Error("first block has " + std::to_string(blocks[0].size()) + " distances, expected " +
                std::to_string(k - 1));
  for (int i = 1; i < k; ++i)
    if (blocks[i].size() != 1) throw Error("block " + std::to_string(i + 1) + " is not a singleton");
  return k;
}

Signature colored_signature(int l) {
  std::vector<Symbol> syms;
  for (int j = 0; j < l; ++j) syms.push_back({"C" + std::to_string(j), 2});
  return Signature(std::move(syms));
}

EncodedSpace encode_F(const MetricSpace& x, const Spectrum& s) {
  const int k = admissible_k(s);
  const auto classes = sim_partition(x, s);
  const Signature sig = colored_signature(k - 1);
  const int m = static_cast<int>(classes.size());

  std::vector<std::vector<Tuple>> index_rel(k - 1);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const int pos = s.index_of(x.d[classes[a][0]][classes[b][0]]);
      for (int p : classes[a])
        for (int q : classes[b])
          if (s.index_of(x.d[p][q]) != pos)
            throw Error("distances between classes " + std::to_string(a) + " and " + std::to_string(b) +
                        " disagree");
      const int colour = pos - (k - 1);
      if (colour < 0) throw Error("cross-class distance lies in the first block");
      index_rel[colour].push_back({a, b});
      index_rel[colour].push_back({b, a});
    }

  EncodedSpace enc;
  enc.classes = classes;
  enc.structure.index = FinStructure(sig, m, std::move(index_rel));
  for (const auto& c : classes) {
    const int size = static_cast<int>(c.size());
    std::vector<std::vector<Tuple>> rel(k - 1);
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        if (a != b) rel[s.index_of(x.d[c[a]][c[b]])].push_back({a, b});
    enc.structure.labels.push_back(FinStructure(sig, size, std::move(rel)));
  }
  return enc;
}

namespace {

// Colour of every ordered pair of a complete edge-coloured graph.
std::vector<std::vector<int>> colour_matrix(const FinStructure& g, int colours, const std::string& what) {
  if (!(g.signature() == colored_signature(colours)))
    throw Error(what + " is not over the colour signature C0..C" + std::to_string(colours - 1));
  std::vector<std::vector<int>> c(g.size(), std::vector<int>(g.size(), -1));
  for (int j = 0; j < colours; ++j)
    for (const auto& t : g.tuples(j)) {
      if (t[0] == t[1]) throw Error(what + " has a loop");
      if (c[t[0]][t[1]] != -1) throw Error(what + " has a pair with two colours");
      c[t[0]][t[1]] = j;
    }
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      if (c[a][b] == -1) throw Error(what + " has an uncoloured pair");
      if (c[a][b] != c[b][a]) throw Error(what + " is not symmetric");
    }
  return c;
}

}  // namespace

MetricSpace decode_F(const IndexedStructure& y, const Spectrum& s) {
  const int k = admissible_k(s);
  auto diag = validate_indexed(y);
  if (!diag.ok()) throw Error(diag.problems.front());
  const auto index = colour_matrix(y.index, k - 1, "index");
  std::vector<std::vector<std::vector<int>>> labels;
  std::vector<std::pair<int, int>> points;  // (index point, label vertex)
  for (std::size_t j = 0; j < y.labels.size(); ++j) {
    labels.push_back(colour_matrix(y.labels[j], k - 1, "labels[" + std::to_string(j) + "]"));
    for (int a = 0; a < y.labels[j].size(); ++a) points.emplace_back(static_cast<int>(j), a);
  }
  MetricSpace x;
  x.n = static_cast<int>(points.size());
  x.d.assign(x.n, std::vector<Rational>(x.n, Rational(0)));
  for (int p = 0; p < x.n; ++p)
    for (int q = 0; q < x.n; ++q) {
      if (p == q) continue;
      const auto [i, a] = points[p];
      const auto [j, b] = points[q];
      x.d[p][q] = i == j ? s[labels[i][a][b]] : s[k - 1 + index[i][j]];
    }
  auto check = validate_metric(x, s);
  if (!check.ok()) throw Error("decoded space is not a metric: " + check.problems.front());
  return x;
}

FinStructure metric_structure(const MetricSpace& x, const Spectrum& s) {
  require_metric(x, s);
  std::vector<std::vector<Tuple>> rel(s.size());
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      if (i != j) rel[s.index_of(x.d[i][j])].push_back({i, j});
  return FinStructure(colored_signature(static_cast<int>(s.size())), x.n, std::move(rel));
}

bool is_isometric_embedding(const std::vector<int>& f, const MetricSpace& x, const MetricSpace& y) {
  if (static_cast<int>(f.size()) != x.n) return false;
  for (int i = 0; i < x.n; ++i) {
    if (f[i] < 0 || f[i] >= y.n) return false;
    for (int j = 0; j < x.n; ++j)
      if (x.d[i][j] != y.d[f[i]][f[j]]) return false;
  }
  return true;
}

bool are_isometric(const MetricSpace& x, const MetricSpace& y, const Spectrum& s) {
  return x.n == y.n && are_isomorphic(metric_structure(x, s), metric_structure(y, s));
}

IndexedMorphism lift_embedding(const std::vector<int>& f, const EncodedSpace& x, const EncodedSpace& y) {
  std::vector<std::pair<int, int>> ywhere;
  for (std::size_t i = 0; i < y.classes.size(); ++i)
    for (std::size_t a = 0; a < y.classes[i].size(); ++a) {
      const int p = y.classes[i][a];
      if (p >= static_cast<int>(ywhere.size())) ywhere.resize(p + 1, {-1, -1});
      ywhere[p] = {static_cast<int>(i), static_cast<int>(a)};
    }
  IndexedMorphism m{x.structure, y.structure, {}, {}};
  for (const auto& cls : x.classes) {
    int target = -1;
    std::vector<int> lm;
    for (int p : cls) {
      if (p >= static_cast<int>(f.size()) || f[p] >= static_cast<int>(ywhere.size()))
        throw Error("embedding does not cover the encoded points");
      const auto [i, a] = ywhere[f[p]];
      if (target != -1 && i != target) throw Error("embedding splits a ~ class");
      target = i;
      lm.push_back(a);
    }
    m.index_map.push_back(target);
    m.label_maps.push_back(std::move(lm));
  }
  auto d = validate_morphism(m);
  if (!d.ok()) throw Error("lifted map is not an indexed embedding: " + d.problems.front());
  return m;
}

// ---------------------------------------------------------------------------

namespace {

Rational random_between(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  // A random point of a grid of 97 steps in [lo, hi].
  std::uniform_int_distribution<int> step(0, 96);
  return lo + (hi - lo) * Rational(step(rng), 96);
}

}  // namespace

Spectrum random_simple_spectrum(std::mt19937_64& rng, int blocks, int max_block) {
  if (blocks < 1 || max_block < 1) throw Error("need at least one block of at least one distance");
  std::uniform_int_distribution<int> size(1, max_block);
  std::vector<Rational> d;
  Rational lo(std::uniform_int_distribution<int>(1, 5)(rng));
  for (int b = 0; b < blocks; ++b) {
    const int count = size(rng);
    std::vector<Rational> block{lo};
    while (static_cast<int>(block.size()) < count) {
      auto r = random_between(rng, lo, 2 * lo);
      if (std::find(block.begin(), block.end(), r) == block.end()) block.push_back(r);
    }
    const Rational top = *std::max_element(block.begin(), block.end());
    d.insert(d.end(), block.begin(), block.end());
    // Next block starts strictly above twice this block's maximum.
    lo = 2 * top + random_between(rng, Rational(1, 4), Rational(3));
  }
  return Spectrum(std::move(d));
}

Spectrum random_admissible_spectrum(std::mt19937_64& rng, int k) {
  if (k < 2) throw Error("admissible spectra need k >= 2");
  std::vector<Rational> d;
  Rational lo(std::uniform_int_distribution<int>(1, 5)(rng));
  std::vector<Rational> first{lo};
  while (static_cast<int>(first.size()) < k - 1) {
    auto r = random_between(rng, lo, 2 * lo);
    if (std::find(first.begin(), first.end(), r) == first.end()) first.push_back(r);
  }
  Rational top = *std::max_element(first.begin(), first.end());
  d = first;
  for (int b = 1; b < k; ++b) {
    top = 2 * top + random_between(rng, Rational(1, 4), Rational(3));
    d.push_back(top);
  }
  return Spectrum(std::move(d));
}

MetricSpace random_metric_space(std::mt19937_64& rng, const Spectrum& s, int n) {
  if (s.size() == 0) throw Error("empty spectrum");
  if (n < 0) throw Error("negative size");
  MetricSpace x;
  x.n = n;
  x.d.assign(n, std::vector<Rational>(n, Rational(0)));
  std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
  for (int z = 1; z < n; ++z) {
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      for (int p = 0; p < z; ++p) x.d[z][p] = x.d[p][z] = s[pick(rng)];
      placed = true;
      for (int p = 0; p < z && placed; ++p)
        for (int q = 0; q < z && placed; ++q) {
          if (p == q) continue;
          const auto &a = x.d[z][p], &b = x.d[z][q], &c = x.d[p][q];
          placed = a <= b + c && b <= a + c && c <= a + b;
        }
    }
    if (!placed) {
      // Duplicate a random earlier point at the least distance.
      const int twin = std::uniform_int_distribution<int>(0, z - 1)(rng);
      for (int p = 0; p < z; ++p) x.d[z][p] = x.d[p][z] = p == twin ? s[0] : x.d[twin][p];
    }
  }
  return x;
}

}  // namespace boxram
