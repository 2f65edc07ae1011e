#include "boxram/indexed.hpp"

#include <algorithm>
#include <set>

#include "boxram/error.hpp"

namespace boxram {

namespace {

std::string at(std::size_t j) { return "labels[" + std::to_string(j) + "]"; }

void require_valid(const IndexedStructure& x, const char* what) {
  auto d = validate_indexed(x, true);
  if (!d.ok()) throw Error(std::string(what) + ": " + d.problems.front());
}

// Calls fn with every choice of one embedding per label for a fixed index map.
template <typename Fn>
void for_each_label_choice(const IndexedStructure& a, const IndexedStructure& h, const std::vector<int>& iota,
                           Fn&& fn) {
  const std::size_t n = a.labels.size();
  std::vector<std::vector<Embedding>> options(n);
  for (std::size_t j = 0; j < n; ++j) {
    options[j] = enumerate_embeddings(a.labels[j], h.labels[iota[j]]);
    if (options[j].empty()) return;
  }
  std::vector<std::size_t> pick(n, 0);
  std::vector<std::vector<int>> maps(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) maps[j] = options[j][pick[j]].map;
    fn(maps);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++pick[j] < options[j].size()) break;
      pick[j] = 0;
      if (j == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

Diagnostics validate_indexed(const IndexedStructure& x, bool allow_empty_labels) {
  Diagnostics d;
  if (static_cast<int>(x.labels.size()) != x.index.size())
    d.problems.push_back("expected " + std::to_string(x.index.size()) + " labels, got " +
                         std::to_string(x.labels.size()));
  for (std::size_t j = 0; j < x.labels.size(); ++j) {
    if (!(x.labels[j].signature() == x.labels[0].signature()))
      d.problems.push_back(at(j) + ": label signature differs from labels[0]");
    if (!allow_empty_labels && x.labels[j].size() == 0) d.problems.push_back(at(j) + ": empty label");
  }
  return d;
}

Diagnostics validate_morphism(const IndexedMorphism& m) {
  Diagnostics d;
  for (const auto* x : {&m.source, &m.target}) {
    auto sub = validate_indexed(*x, true);
    d.problems.insert(d.problems.end(), sub.problems.begin(), sub.problems.end());
  }
  if (!d.ok()) return d;
  if (!(m.source.index.signature() == m.target.index.signature())) {
    d.problems.push_back("index signatures differ");
    return d;
  }
  if (!m.source.labels.empty() && !m.target.labels.empty() &&
      !(m.source.labels[0].signature() == m.target.labels[0].signature())) {
    d.problems.push_back("label signatures differ");
    return d;
  }
  if (static_cast<int>(m.index_map.size()) != m.source.index.size()) {
    d.problems.push_back("index_map has the wrong length");
    return d;
  }
  for (int v : m.index_map)
    if (v < 0 || v >= m.target.index.size()) {
      d.problems.push_back("index_map image out of range");
      return d;
    }
  if (!is_embedding(m.index_map, m.source.index, m.target.index))
    d.problems.push_back("index_map is not an embedding");
  if (m.label_maps.size() != m.source.labels.size()) {
    d.problems.push_back("expected one label map per index point");
    return d;
  }
  for (std::size_t j = 0; j < m.label_maps.size(); ++j) {
    const auto& src = m.source.labels[j];
    const auto& dst = m.target.labels[m.index_map[j]];
    bool shape_ok = static_cast<int>(m.label_maps[j].size()) == src.size();
    for (int v : m.label_maps[j]) shape_ok = shape_ok && v >= 0 && v < dst.size();
    if (!shape_ok || !is_embedding(m.label_maps[j], src, dst))
      d.problems.push_back("label_maps[" + std::to_string(j) + "] is not an embedding");
  }
  return d;
}

IndexedMorphism identity_morphism(const IndexedStructure& x) {
  IndexedMorphism m{x, x, {}, {}};
  for (int j = 0; j < x.index.size(); ++j) {
    m.index_map.push_back(j);
    std::vector<int> id(x.labels[j].size());
    for (int a = 0; a < x.labels[j].size(); ++a) id[a] = a;
    m.label_maps.push_back(std::move(id));
  }
  return m;
}

IndexedMorphism compose(const IndexedMorphism& g, const IndexedMorphism& h) {
  if (!(h.target == g.source)) throw Error("compose: target of the first morphism is not the source of the second");
  IndexedMorphism m{h.source, g.target, {}, {}};
  for (std::size_t j = 0; j < h.index_map.size(); ++j) {
    const int mid = h.index_map[j];
    m.index_map.push_back(g.index_map[mid]);
    std::vector<int> f;
    for (int a : h.label_maps[j]) f.push_back(g.label_maps[mid][a]);
    m.label_maps.push_back(std::move(f));
  }
  return m;
}

std::vector<IndexedMorphism> enumerate_indexed_embeddings(const IndexedStructure& a, const IndexedStructure& h) {
  require_valid(a, "source");
  require_valid(h, "target");
  std::vector<IndexedMorphism> out;
  for (const auto& e : enumerate_embeddings(a.index, h.index))
    for_each_label_choice(a, h, e.map, [&](const std::vector<std::vector<int>>& maps) {
      out.push_back(IndexedMorphism{a, h, e.map, maps});
    });
  return out;
}

std::uint64_t count_indexed_automorphisms(const IndexedStructure& x) {
  require_valid(x, "structure");
  std::uint64_t count = 0;
  for (const auto& e : enumerate_embeddings(x.index, x.index))
    for_each_label_choice(x, x, e.map, [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

bool indexed_isomorphic(const IndexedStructure& a, const IndexedStructure& b) {
  require_valid(a, "first structure");
  require_valid(b, "second structure");
  if (a.index.size() != b.index.size()) return false;
  for (const auto& e : enumerate_embeddings(a.index, b.index)) {
    bool ok = true;
    for (std::size_t j = 0; j < a.labels.size() && ok; ++j)
      ok = are_isomorphic(a.labels[j], b.labels[e.map[j]]);
    if (ok) return true;
  }
  return false;
}

std::vector<IndexedCopy> enumerate_indexed_copies(const IndexedStructure& a, const IndexedStructure& h) {
  require_valid(a, "pattern");
  require_valid(h, "ambient");
  std::set<IndexedCopy> found;
  for (const auto& e : enumerate_embeddings(a.index, h.index)) {
    IndexedCopy base;
    base.index_vertices = e.map;
    std::sort(base.index_vertices.begin(), base.index_vertices.end());
    // Label copies are chosen independently per index point.
    std::vector<std::vector<std::vector<int>>> options(a.labels.size());
    bool possible = true;
    for (std::size_t j = 0; j < a.labels.size() && possible; ++j) {
      options[j] = copy_vertex_sets(a.labels[j], h.labels[e.map[j]]);
      possible = !options[j].empty();
    }
    if (!possible) continue;
    std::vector<std::size_t> pick(a.labels.size(), 0);
    while (true) {
      IndexedCopy c = base;
      for (std::size_t j = 0; j < a.labels.size(); ++j) c.label_vertices[e.map[j]] = options[j][pick[j]];
      found.insert(std::move(c));
      std::size_t j = pick.size();
      bool done = true;
      while (j > 0) {
        --j;
        if (++pick[j] < options[j].size()) {
          done = false;
          break;
        }
        pick[j] = 0;
      }
      if (done) break;
    }
  }
  return {found.begin(), found.end()};
}

IndexedStructure constant_labeling(const FinStructure& index, const FinStructure& label) {
  return IndexedStructure{index, std::vector<FinStructure>(index.size(), label)};
}

bool is_constant(const IndexedStructure& x) {
  for (const auto& l : x.labels)
    if (!(l == x.labels.front())) return false;
  return true;
}

JointEmbedding jep_disjoint_union(const std::vector<FinStructure>& parts) {
  if (parts.empty()) throw Error("joint embedding of nothing");
  JointEmbedding j{parts[0], {}};
  for (std::size_t i = 1; i < parts.size(); ++i) j.joint = disjoint_union(j.joint, parts[i]);
  int offset = 0;
  for (const auto& p : parts) {
    std::vector<int> m(p.size());
    for (int v = 0; v < p.size(); ++v) m[v] = offset + v;
    j.maps.push_back(std::move(m));
    offset += p.size();
  }
  return j;
}

JointEmbedding jep_concatenation(const std::vector<FinStructure>& parts) {
  auto j = jep_disjoint_union(parts);
  const auto& sig = j.joint.signature();
  if (!(sig == order_signature())) throw Error("concatenation needs the order signature");
  std::vector<Tuple> lt = j.joint.tuples(0);
  for (std::size_t a = 0; a < j.maps.size(); ++a)
    for (std::size_t b = a + 1; b < j.maps.size(); ++b)
      for (int x : j.maps[a])
        for (int y : j.maps[b]) lt.push_back({x, y});
  j.joint = FinStructure(sig, j.joint.size(), {lt});
  return j;
}

JepStrategy jep_by_name(const std::string& name, const Signature& label_signature) {
  if (name == "disjoint-union") return jep_disjoint_union;
  if (name == "concatenation") return jep_concatenation;
  if (name == "auto") {
    if (label_signature == graph_signature()) return jep_disjoint_union;
    if (label_signature == order_signature()) return jep_concatenation;
    throw Error("no joint embedding strategy for this label class");
  }
  throw Error("unknown joint embedding strategy '" + name + "'");
}

IndexedMorphism cofinal_embed(const IndexedStructure& x, const JepStrategy& jep) {
  require_valid(x, "structure");
  if (x.labels.empty()) throw Error("cofinal_embed needs at least one index point");
  // Distinct isomorphism types in order of first occurrence.
  std::vector<FinStructure> types;
  std::vector<std::size_t> type_of(x.labels.size());
  for (std::size_t j = 0; j < x.labels.size(); ++j) {
    std::size_t t = 0;
    while (t < types.size() && !are_isomorphic(types[t], x.labels[j])) ++t;
    if (t == types.size()) types.push_back(x.labels[j]);
    type_of[j] = t;
  }
  JointEmbedding joint = types.size() == 1 ? JointEmbedding{types[0], {}} : jep(types);
  if (types.size() == 1) {
    std::vector<int> id(types[0].size());
    for (int v = 0; v < types[0].size(); ++v) id[v] = v;
    joint.maps.push_back(std::move(id));
  }
  IndexedMorphism m{x, constant_labeling(x.index, joint.joint), {}, {}};
  for (int j = 0; j < x.index.size(); ++j) {
    m.index_map.push_back(j);
    const auto iso = find_isomorphism(x.labels[j], types[type_of[j]]);
    std::vector<int> f;
    for (int v = 0; v < x.labels[j].size(); ++v) f.push_back(joint.maps[type_of[j]][(*iso)[v]]);
    m.label_maps.push_back(std::move(f));
  }
  auto d = validate_morphism(m);
  if (!d.ok()) throw Error("joint embedding strategy produced an invalid embedding: " + d.problems.front());
  return m;
}

std::uint64_t indexed_aut_order(const IndexedStructure& x) {
  require_valid(x, "structure");
  if (!is_constant(x)) throw Error("indexed_aut_order needs a constant labelling");
  std::uint64_t order = automorphisms(x.index).size();
  if (x.labels.empty()) return order;
  const std::uint64_t label = automorphisms(x.labels.front()).size();
  for (std::size_t j = 0; j < x.labels.size(); ++j) order *= label;
  return order;
}

FinStructure flatten(const IndexedStructure& x) {
  require_valid(x, "structure");
  if (!is_constant(x)) throw Error("flatten needs a constant labelling");
  const int n = x.index.size();
  const int m = n == 0 ? 0 : x.labels.front().size();
  std::vector<Symbol> syms{{"~", 2}};
  const Signature lsig = n == 0 ? Signature() : x.labels.front().signature();
  for (const auto& s : lsig.symbols()) syms.push_back({"L." + s.name, s.arity});
  for (const auto& s : x.index.signature().symbols()) syms.push_back({"I." + s.name, s.arity});
  std::vector<std::vector<Tuple>> rel(syms.size());
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) rel[0].push_back({j * m + a, j * m + b});
  for (std::size_t s = 0; s < lsig.size(); ++s)
    for (int j = 0; j < n; ++j)
      for (const auto& t : x.labels[j].tuples(s)) {
        Tuple u;
        for (int v : t) u.push_back(j * m + v);
        rel[1 + s].push_back(std::move(u));
      }
  for (std::size_t s = 0; s < x.index.signature().size(); ++s) {
    auto& out = rel[1 + lsig.size() + s];
    for (const auto& t : x.index.tuples(s)) {
      // Every choice of a point in each fiber along the tuple.
      const std::size_t k = t.size();
      std::vector<int> pick(k, 0);
      while (m > 0) {
        Tuple u(k);
        for (std::size_t p = 0; p < k; ++p) u[p] = t[p] * m + pick[p];
        out.push_back(std::move(u));
        std::size_t p = k;
        bool done = true;
        while (p > 0) {
          --p;
          if (++pick[p] < m) {
            done = false;
            break;
          }
          pick[p] = 0;
        }
        if (done) break;
      }
    }
  }
  return FinStructure(Signature(std::move(syms)), n * m, std::move(rel));
}

BoxDegreeResult indexed_brd_bound(const FinStructure& a0, const std::vector<FinStructure>& labels,
                                  const FinStructure& ambient, const DegreeTable& table, bool assume_one) {
  if (static_cast<int>(labels.size()) != a0.size())
    throw Error("need one label per point of the index pattern");
  std::vector<FinStructure> patterns{a0};
  patterns.insert(patterns.end(), labels.begin(), labels.end());
  return box_degree(patterns, ambient, table, assume_one);
}

}  // namespace boxram
