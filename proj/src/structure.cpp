#include "boxram/structure.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <utility>

#include "boxram/error.hpp"

namespace boxram {

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw Error("signature: empty symbol name");
    if (s.arity < 1) throw Error("signature: symbol '" + s.name + "' has arity < 1");
    if (!seen.insert(s.name).second)
      throw Error("signature: duplicate symbol '" + s.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error("signature: unknown symbol '" + std::string(name) + "'");
  return *i;
}

bool Signature::all_binary() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const Symbol& s) { return s.arity == 2; });
}

// ---------------------------------------------------------------------------
// FinStructure

struct FinStructure::Data {
  Signature sig;
  int n = 0;
  std::vector<std::vector<Tuple>> rel;
  // Dense membership tables for arity 1 (n entries) and 2 (n*n entries).
  std::vector<std::vector<std::uint8_t>> dense;
  std::size_t total = 0;
};

FinStructure::FinStructure() : d_(std::make_shared<Data>()) {}

FinStructure::FinStructure(Signature signature, int size,
                           std::vector<std::vector<Tuple>> relations) {
  if (size < 0) throw Error("structure: negative size");
  if (relations.size() != signature.size())
    throw Error("structure: relation count does not match signature");
  auto d = std::make_shared<Data>();
  d->n = size;
  d->dense.resize(signature.size());
  for (std::size_t s = 0; s < signature.size(); ++s) {
    auto& ts = relations[s];
    const int arity = signature[s].arity;
    for (const auto& t : ts) {
      if (static_cast<int>(t.size()) != arity)
        throw Error("structure: tuple of wrong length for symbol '" + signature[s].name + "'");
      for (int x : t)
        if (x < 0 || x >= size)
          throw Error("structure: tuple entry out of range for symbol '" +
                      signature[s].name + "'");
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (arity == 1) {
      d->dense[s].assign(size, 0);
      for (const auto& t : ts) d->dense[s][t[0]] = 1;
    } else if (arity == 2) {
      d->dense[s].assign(static_cast<std::size_t>(size) * size, 0);
      for (const auto& t : ts) d->dense[s][static_cast<std::size_t>(t[0]) * size + t[1]] = 1;
    }
    d->total += ts.size();
  }
  d->sig = std::move(signature);
  d->rel = std::move(relations);
  d_ = std::move(d);
}

FinStructure FinStructure::from_named(Signature signature, int size,
                                      const std::map<std::string, std::vector<Tuple>>& relations) {
  std::vector<std::vector<Tuple>> rel(signature.size());
  for (const auto& [name, ts] : relations) rel[signature.index_of(name)] = ts;
  return FinStructure(std::move(signature), size, std::move(rel));
}

const Signature& FinStructure::signature() const { return d_->sig; }
int FinStructure::size() const { return d_->n; }
const std::vector<Tuple>& FinStructure::tuples(std::size_t symbol) const { return d_->rel[symbol]; }
std::size_t FinStructure::tuple_count() const { return d_->total; }

bool FinStructure::holds(std::size_t symbol, std::span<const int> tuple) const {
  const int arity = d_->sig[symbol].arity;
  if (arity == 1) return d_->dense[symbol][tuple[0]] != 0;
  if (arity == 2)
    return d_->dense[symbol][static_cast<std::size_t>(tuple[0]) * d_->n + tuple[1]] != 0;
  const auto& ts = d_->rel[symbol];
  return std::binary_search(ts.begin(), ts.end(), tuple,
                            [](const auto& l, const auto& r) {
                              return std::lexicographical_compare(l.begin(), l.end(),
                                                                  r.begin(), r.end());
                            });
}

bool FinStructure::holds(std::size_t symbol, int x) const {
  return d_->dense[symbol][x] != 0;
}

bool FinStructure::holds(std::size_t symbol, int x, int y) const {
  return d_->dense[symbol][static_cast<std::size_t>(x) * d_->n + y] != 0;
}

bool FinStructure::operator==(const FinStructure& other) const {
  if (d_ == other.d_) return true;
  return d_->n == other.d_->n && d_->sig == other.d_->sig && d_->rel == other.d_->rel;
}

// ---------------------------------------------------------------------------
// Builders

Signature order_signature() { return Signature({{"<", 2}}); }
Signature graph_signature() { return Signature({{"E", 2}}); }

FinStructure linear_order(int n) {
  std::vector<Tuple> ts;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ts.push_back({i, j});
  return FinStructure(order_signature(), n, {ts});
}

FinStructure order_antichain(int n) { return FinStructure(order_signature(), n, {{}}); }

FinStructure graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Tuple> ts;
  for (auto [u, v] : edges) {
    ts.push_back({u, v});
    ts.push_back({v, u});
  }
  return FinStructure(graph_signature(), n, {ts});
}

FinStructure complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return graph(n, e);
}

FinStructure empty_graph(int n) { return graph(n, {}); }

FinStructure path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph(n, e);
}

FinStructure cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph(n, e);
}

FinStructure bare_set(int n) { return FinStructure(Signature(), n, {}); }

// ---------------------------------------------------------------------------
// Embedding search

void require_same_signature(const FinStructure& a, const FinStructure& b) {
  if (!(a.signature() == b.signature())) throw Error("signature mismatch");
}

namespace {

// Checks that f (defined on 0..i) is relation-preserving in both directions
// on every tuple that mentions i and otherwise only earlier vertices.
bool consistent_at(const FinStructure& a, const FinStructure& b, const std::vector<int>& f, int i) {
  const auto& sig = a.signature();
  const int fi = f[i];
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const int arity = sig[s].arity;
    if (arity == 1) {
      if (a.holds(s, i) != b.holds(s, fi)) return false;
    } else if (arity == 2) {
      if (a.holds(s, i, i) != b.holds(s, fi, fi)) return false;
      for (int j = 0; j < i; ++j) {
        const int fj = f[j];
        if (a.holds(s, j, i) != b.holds(s, fj, fi)) return false;
        if (a.holds(s, i, j) != b.holds(s, fi, fj)) return false;
      }
    } else {
      // Every arity-tuple over {0..i} that contains i.
      std::vector<int> t(arity, 0), ft(arity);
      while (true) {
        if (std::find(t.begin(), t.end(), i) != t.end()) {
          for (int p = 0; p < arity; ++p) ft[p] = f[t[p]];
          if (a.holds(s, t) != b.holds(s, ft)) return false;
        }
        int p = arity - 1;
        while (p >= 0 && t[p] == i) t[p--] = 0;
        if (p < 0) break;
        ++t[p];
      }
    }
  }
  return true;
}

// Per-vertex counts of occurrences by (symbol, position); preserved by
// isomorphisms.
std::vector<std::vector<int>> occurrence_profile(const FinStructure& a) {
  const auto& sig = a.signature();
  std::size_t width = 0;
  for (const auto& s : sig.symbols()) width += s.arity;
  std::vector<std::vector<int>> prof(a.size(), std::vector<int>(width, 0));
  std::size_t off = 0;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : a.tuples(s))
      for (int p = 0; p < sig[s].arity; ++p) ++prof[t[p]][off + p];
    off += sig[s].arity;
  }
  return prof;
}

struct Search {
  const FinStructure& a;
  const FinStructure& b;
  bool bijective = false;
  std::vector<std::vector<int>> prof_a, prof_b;
  std::vector<int> f;
  std::vector<char> used;

  Search(const FinStructure& a_, const FinStructure& b_, bool bij) : a(a_), b(b_), bijective(bij) {
    f.assign(a.size(), -1);
    used.assign(b.size(), 0);
    if (bijective) {
      prof_a = occurrence_profile(a);
      prof_b = occurrence_profile(b);
    }
  }

  // Visits maps in lexicographic order; stops when visit returns false.
  template <typename Visit>
  bool run(int i, Visit& visit) {
    if (i == a.size()) return visit(f);
    for (int c = 0; c < b.size(); ++c) {
      if (used[c]) continue;
      if (bijective && prof_a[i] != prof_b[c]) continue;
      f[i] = c;
      if (consistent_at(a, b, f, i)) {
        used[c] = 1;
        const bool go = run(i + 1, visit);
        used[c] = 0;
        if (!go) return false;
      }
    }
    f[i] = -1;
    return true;
  }
};

bool same_shape(const FinStructure& a, const FinStructure& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.signature().size(); ++s)
    if (a.tuples(s).size() != b.tuples(s).size()) return false;
  return true;
}

}  // namespace

bool is_embedding(std::span<const int> map, const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  if (static_cast<int>(map.size()) != a.size()) throw Error("is_embedding: map length mismatch");
  std::vector<int> f(map.begin(), map.end());
  std::vector<char> used(b.size(), 0);
  for (int x : f) {
    if (x < 0 || x >= b.size()) throw Error("is_embedding: image out of range");
    if (used[x]) return false;
    used[x] = 1;
  }
  for (int i = 0; i < a.size(); ++i)
    if (!consistent_at(a, b, f, i)) return false;
  return true;
}

std::vector<Embedding> enumerate_embeddings(const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  std::vector<Embedding> out;
  Search search(a, b, false);
  auto visit = [&](const std::vector<int>& f) {
    out.push_back({a, b, f});
    return true;
  };
  search.run(0, visit);
  return out;
}

std::uint64_t count_embeddings(const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  std::uint64_t count = 0;
  Search search(a, b, false);
  auto visit = [&](const std::vector<int>&) {
    ++count;
    return true;
  };
  search.run(0, visit);
  return count;
}

std::vector<std::vector<int>> copy_vertex_sets(const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  std::set<std::vector<int>> images;
  Search search(a, b, false);
  auto visit = [&](const std::vector<int>& f) {
    std::vector<int> img = f;
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
    return true;
  };
  search.run(0, visit);
  return {images.begin(), images.end()};
}

std::vector<Copy> enumerate_copies(const FinStructure& a, const FinStructure& b) {
  std::vector<Copy> out;
  for (auto& v : copy_vertex_sets(a, b)) out.push_back({b, std::move(v), a});
  return out;
}

std::vector<std::vector<int>> automorphisms(const FinStructure& a) {
  std::vector<std::vector<int>> out;
  Search search(a, a, true);
  auto visit = [&](const std::vector<int>& f) {
    out.push_back(f);
    return true;
  };
  search.run(0, visit);
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  if (!same_shape(a, b)) return std::nullopt;
  std::optional<std::vector<int>> found;
  Search search(a, b, true);
  auto visit = [&](const std::vector<int>& f) {
    found = f;
    return false;
  };
  search.run(0, visit);
  return found;
}

bool are_isomorphic(const FinStructure& a, const FinStructure& b) {
  return find_isomorphism(a, b).has_value();
}

// ---------------------------------------------------------------------------
// Derived structures

FinStructure induced(const FinStructure& b, std::span<const int> vertices) {
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw Error("induced: repeated vertex");
  std::vector<int> loc(b.size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= b.size()) throw Error("induced: vertex out of range");
    loc[vs[i]] = static_cast<int>(i);
  }
  const auto& sig = b.signature();
  std::vector<std::vector<Tuple>> rel(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : b.tuples(s)) {
      Tuple lt(t.size());
      bool inside = true;
      for (std::size_t p = 0; p < t.size(); ++p) {
        lt[p] = loc[t[p]];
        if (lt[p] < 0) {
          inside = false;
          break;
        }
      }
      if (inside) rel[s].push_back(std::move(lt));
    }
  }
  return FinStructure(sig, static_cast<int>(vs.size()), std::move(rel));
}

FinStructure relabel(const FinStructure& a, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != a.size()) throw Error("relabel: permutation length mismatch");
  const auto& sig = a.signature();
  std::vector<std::vector<Tuple>> rel(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s)
    for (const auto& t : a.tuples(s)) {
      Tuple nt(t.size());
      for (std::size_t p = 0; p < t.size(); ++p) nt[p] = perm[t[p]];
      rel[s].push_back(std::move(nt));
    }
  return FinStructure(sig, a.size(), std::move(rel));
}

FinStructure disjoint_union(const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  const auto& sig = a.signature();
  std::vector<std::vector<Tuple>> rel(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s) {
    rel[s] = a.tuples(s);
    for (auto t : b.tuples(s)) {
      for (int& x : t) x += a.size();
      rel[s].push_back(std::move(t));
    }
  }
  return FinStructure(sig, a.size() + b.size(), std::move(rel));
}

// ---------------------------------------------------------------------------
// Canonical forms

CanonicalForm canonical_form(const FinStructure& a, std::span<const int> vertices,
                             std::span<const int> colors) {
  const int m = static_cast<int>(vertices.size());
  if (static_cast<int>(colors.size()) != m) throw Error("canonical_form: colour count mismatch");
  const auto& sig = a.signature();

  // Local tuples per symbol.
  std::vector<std::vector<Tuple>> local(sig.size());
  {
    std::vector<int> loc(a.size(), -1);
    for (int i = 0; i < m; ++i) loc[vertices[i]] = i;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const int arity = sig[s].arity;
      if (arity == 1) {
        for (int i = 0; i < m; ++i)
          if (a.holds(s, vertices[i])) local[s].push_back({i});
      } else if (arity == 2) {
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (a.holds(s, vertices[i], vertices[j])) local[s].push_back({i, j});
      } else {
        for (const auto& t : a.tuples(s)) {
          Tuple lt(arity);
          bool inside = true;
          for (int p = 0; p < arity && inside; ++p) {
            lt[p] = loc[t[p]];
            inside = lt[p] >= 0;
          }
          if (inside) local[s].push_back(std::move(lt));
        }
      }
    }
  }

  // Colour refinement to split vertices into invariant cells.
  std::vector<int> rank(m);
  {
    std::vector<std::vector<long>> inv(m);
    for (int i = 0; i < m; ++i) inv[i] = {colors[i]};
    for (std::size_t s = 0; s < sig.size(); ++s)
      for (int p = 0; p < sig[s].arity; ++p) {
        std::vector<long> cnt(m, 0);
        for (const auto& t : local[s]) ++cnt[t[p]];
        for (int i = 0; i < m; ++i) inv[i].push_back(cnt[i]);
      }
    auto assign_ranks = [&](const std::vector<std::vector<long>>& keys) {
      std::vector<std::vector<long>> sorted = keys;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int i = 0; i < m; ++i)
        rank[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
      return static_cast<int>(sorted.size());
    };
    int classes = assign_ranks(inv);
    for (int round = 0; round < m; ++round) {
      std::vector<std::vector<long>> next(m);
      for (int i = 0; i < m; ++i) next[i] = {rank[i]};
      for (std::size_t s = 0; s < sig.size(); ++s) {
        const int arity = sig[s].arity;
        std::vector<std::vector<long>> nb(m);
        for (const auto& t : local[s])
          for (int p = 0; p < arity; ++p)
            for (int q = 0; q < arity; ++q)
              if (p != q)
                nb[t[p]].push_back(((static_cast<long>(s) * 8 + p) * 8 + q) * 1024 + rank[t[q]]);
        for (int i = 0; i < m; ++i) {
          std::sort(nb[i].begin(), nb[i].end());
          next[i].push_back(-1);
          next[i].insert(next[i].end(), nb[i].begin(), nb[i].end());
        }
      }
      const int before = classes;
      classes = assign_ranks(next);
      if (classes == before) break;
    }
  }

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return rank[x] < rank[y]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) into order
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && rank[order[j]] == rank[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  CanonicalForm best;
  std::vector<int> label(m), code;
  std::vector<Tuple> mapped;
  bool have = false;
  while (true) {
    for (int pos = 0; pos < m; ++pos) label[order[pos]] = pos;
    code.clear();
    code.push_back(m);
    for (int pos = 0; pos < m; ++pos) code.push_back(colors[order[pos]]);
    for (std::size_t s = 0; s < sig.size(); ++s) {
      mapped.clear();
      for (const auto& t : local[s]) {
        Tuple nt(t.size());
        for (std::size_t p = 0; p < t.size(); ++p) nt[p] = label[t[p]];
        mapped.push_back(std::move(nt));
      }
      std::sort(mapped.begin(), mapped.end());
      code.push_back(static_cast<int>(mapped.size()));
      for (const auto& t : mapped) code.insert(code.end(), t.begin(), t.end());
    }
    if (!have || code < best.code) {
      best.code = code;
      best.relabel = label;
      have = true;
    }
    // Advance the odometer of per-cell permutations.
    int c = static_cast<int>(cells.size()) - 1;
    for (; c >= 0; --c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c < 0) break;
  }
  return best;
}

CanonicalForm canonical_form(const FinStructure& a) {
  std::vector<int> vs(a.size()), colors(a.size(), 0);
  for (int i = 0; i < a.size(); ++i) vs[i] = i;
  return canonical_form(a, vs, colors);
}

FinStructure canonical_structure(const FinStructure& a) {
  return relabel(a, canonical_form(a).relabel);
}

// ---------------------------------------------------------------------------
// Censuses

namespace {

std::vector<FinStructure> build_graphs(int n);

std::vector<FinStructure> cached_graphs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<FinStructure>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = build_graphs(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(built)).first->second;
}

std::vector<FinStructure> build_graphs(int n) {
  if (n == 0) return {empty_graph(0)};
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, FinStructure>> found;
  for (const auto& g : cached_graphs(n - 1)) {
    const auto& base = g.tuples(0);
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<Tuple> ts = base;
      for (int u = 0; u < n - 1; ++u)
        if (mask >> u & 1) {
          ts.push_back({u, n - 1});
          ts.push_back({n - 1, u});
        }
      FinStructure h(graph_signature(), n, {ts});
      auto cf = canonical_form(h);
      if (seen.insert(cf.code).second) found.emplace_back(cf.code, relabel(h, cf.relabel));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<FinStructure> out;
  for (auto& [code, s] : found) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::vector<FinStructure> graphs_up_to_iso(int n) {
  if (n < 0) throw Error("graphs_up_to_iso: negative size");
  return cached_graphs(n);
}

std::vector<FinStructure> digraphs_up_to_iso(int n) {
  if (n < 0 || n > 4) throw Error("digraphs_up_to_iso: supported for 0 <= n <= 4");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.emplace_back(i, j);
  Signature sig = graph_signature();
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, FinStructure>> found;
  for (long mask = 0; mask < (1L << arcs.size()); ++mask) {
    std::vector<Tuple> ts;
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if (mask >> k & 1) ts.push_back({arcs[k].first, arcs[k].second});
    FinStructure h(sig, n, {ts});
    auto cf = canonical_form(h);
    if (seen.insert(cf.code).second) found.emplace_back(cf.code, relabel(h, cf.relabel));
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<FinStructure> out;
  for (auto& [code, s] : found) out.push_back(std::move(s));
  return out;
}

std::vector<FinStructure> labelled_tournaments(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<FinStructure> out;
  for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
    std::vector<Tuple> ts;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      if (mask >> k & 1)
        ts.push_back({j, i});
      else
        ts.push_back({i, j});
    }
    out.emplace_back(order_signature(), n, std::vector<std::vector<Tuple>>{ts});
  }
  return out;
}

}  // namespace boxram
