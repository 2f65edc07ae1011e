#include "boxram/codingtree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "boxram/combinatorics.hpp"
#include "boxram/error.hpp"

namespace boxram {

namespace {

std::uint32_t swap_directions(std::uint32_t mask) {
  return ((mask & 0x55555555u) << 1) | ((mask >> 1) & 0x55555555u);
}

}  // namespace

// ---------------------------------------------------------------------------
// Letter schemes

LetterScheme::LetterScheme(std::string name, Kind kind, Signature signature,
                           std::vector<std::string> letter_names, std::vector<std::uint32_t> masks)
    : name_(std::move(name)), kind_(kind), sig_(std::move(signature)),
      letter_names_(std::move(letter_names)), masks_(std::move(masks)) {
  if (!sig_.all_binary()) throw Error("letter schemes need a signature of binary symbols");
  if (sig_.size() > 16) throw Error("letter schemes support at most 16 symbols");
  if (masks_.size() < 2) throw Error("a letter scheme needs at least two letters");
  if (letter_names_.size() != masks_.size()) throw Error("one name per letter is required");
  for (std::size_t j = 0; j < masks_.size(); ++j)
    for (std::size_t k = 0; k < j; ++k)
      if (masks_[j] == masks_[k]) throw Error("two letters share a pair type");
  for (std::uint32_t m : masks_) {
    auto it = std::find(masks_.begin(), masks_.end(), swap_directions(m));
    if (it == masks_.end()) throw Error("letter pair types are not closed under reversal");
    converse_.push_back(static_cast<int>(it - masks_.begin()));
  }
}

LetterScheme LetterScheme::order() {
  return LetterScheme("order", Kind::Order, order_signature(), {">", "<"}, {0b10, 0b01});
}

LetterScheme LetterScheme::graph() {
  return LetterScheme("graph", Kind::Graph, graph_signature(), {"nonedge", "edge"}, {0b00, 0b11});
}

LetterScheme LetterScheme::colored(int l) {
  if (l < 2 || l > 16) throw Error("colour count must lie in 2..16");
  std::vector<Symbol> syms;
  std::vector<std::string> names;
  std::vector<std::uint32_t> masks;
  for (int j = 0; j < l; ++j) {
    syms.push_back({"C" + std::to_string(j), 2});
    names.push_back("C" + std::to_string(j));
    masks.push_back(0b11u << (2 * j));
  }
  return LetterScheme("colored:" + std::to_string(l), Kind::Colored, Signature(std::move(syms)),
                      std::move(names), std::move(masks));
}

LetterScheme LetterScheme::by_name(const std::string& name) {
  if (name == "order") return order();
  if (name == "graph") return graph();
  if (name.rfind("colored:", 0) == 0) {
    try {
      return colored(std::stoi(name.substr(8)));
    } catch (const std::logic_error&) {
      throw Error("bad colour count in letter scheme '" + name + "'");
    }
  }
  throw Error("unknown letter scheme '" + name + "' (expected order, graph or colored:<l>)");
}

std::uint32_t LetterScheme::pair_type(const FinStructure& a, int x, int y) const {
  std::uint32_t m = 0;
  for (std::size_t s = 0; s < sig_.size(); ++s) {
    if (a.holds(s, x, y)) m |= 1u << (2 * s);
    if (a.holds(s, y, x)) m |= 1u << (2 * s + 1);
  }
  return m;
}

std::optional<int> LetterScheme::find_letter(const FinStructure& a, int x, int y) const {
  auto it = std::find(masks_.begin(), masks_.end(), pair_type(a, x, y));
  if (it == masks_.end()) return std::nullopt;
  return static_cast<int>(it - masks_.begin());
}

int LetterScheme::letter(const FinStructure& a, int x, int y) const {
  auto l = find_letter(a, x, y);
  if (!l)
    throw Error("pair (" + std::to_string(x) + "," + std::to_string(y) + ") satisfies no single letter of scheme " +
                name_);
  return *l;
}

void LetterScheme::validate(const FinStructure& a) const {
  if (!(a.signature() == sig_)) throw Error("structure signature does not match letter scheme " + name_);
  for (std::size_t s = 0; s < sig_.size(); ++s)
    for (const auto& t : a.tuples(s))
      if (t[0] == t[1]) throw Error("relation " + sig_[s].name + " is not irreflexive");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (x != y) letter(a, x, y);
}

FinStructure LetterScheme::structure_from_letters(int n, const std::vector<std::vector<int>>& letters) const {
  std::vector<std::vector<Tuple>> rel(sig_.size());
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) {
      const int j = letters[k][i];
      if (j < 0 || j >= alphabet_size()) throw Error("letter " + std::to_string(j) + " out of range");
      const std::uint32_t m = masks_[j];
      for (std::size_t s = 0; s < sig_.size(); ++s) {
        if (m >> (2 * s) & 1u) rel[s].push_back({k, i});
        if (m >> (2 * s + 1) & 1u) rel[s].push_back({i, k});
      }
    }
  return FinStructure(sig_, n, std::move(rel));
}

// ---------------------------------------------------------------------------
// Coding trees and decoding

bool is_prefix(const Word& a, const Word& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

CodingTree build_coding_tree(const FinStructure& a, const std::vector<int>& order, const LetterScheme& scheme) {
  scheme.validate(a);
  const int n = a.size();
  if (static_cast<int>(order.size()) != n) throw Error("enumeration length differs from structure size");
  std::vector<int> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw Error("enumeration is not a permutation of the universe");
    seen[v] = 1;
  }
  CodingTree t;
  t.alphabet_size = scheme.alphabet_size();
  for (int i = 0; i < n; ++i) {
    Word c(i);
    for (int k = 0; k < i; ++k) c[k] = scheme.letter(a, order[k], order[i]);
    t.coding_nodes.push_back(std::move(c));
  }
  std::set<Word> closure;
  for (const auto& c : t.coding_nodes)
    for (std::size_t len = 0; len <= c.size(); ++len) closure.emplace(c.begin(), c.begin() + len);
  t.nodes.assign(closure.begin(), closure.end());
  std::stable_sort(t.nodes.begin(), t.nodes.end(),
                   [](const Word& x, const Word& y) { return x.size() < y.size(); });
  return t;
}

FinStructure decode_nodes(const std::vector<Word>& words, const LetterScheme& scheme) {
  const int n = static_cast<int>(words.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return words[x].size() < words[y].size(); });
  for (int r = 1; r < n; ++r)
    if (words[idx[r]].size() == words[idx[r - 1]].size()) throw Error("decoded nodes must have distinct lengths");
  std::vector<std::vector<int>> letters(n, std::vector<int>(n, 0));
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) letters[k][i] = words[idx[i]][words[idx[k]].size()];
  return scheme.structure_from_letters(n, letters);
}

FinStructure decode_antichain(const std::vector<Word>& words, const LetterScheme& scheme) {
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size(); ++b)
      if (a != b && is_prefix(words[a], words[b])) throw Error("nodes do not form an antichain");
  return decode_nodes(words, scheme);
}

std::vector<Word> to_antichain(const std::vector<Word>& coding_nodes) {
  std::vector<Word> out;
  for (std::size_t k = 0; k < coding_nodes.size(); ++k) {
    if (coding_nodes[k].size() != k) throw Error("coding node " + std::to_string(k) + " has the wrong length");
    Word w(2 * k + 1, 0);
    for (std::size_t m = 0; m < k; ++m) w[2 * m + 1] = coding_nodes[k][m];
    w[2 * k] = 1;
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ordered structures

FinStructure OrderedStructure::ordered() const {
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<int>(i);
  return relabel(base, perm);
}

std::vector<OrderedStructure> enumerate_ordered_iso_classes(const FinStructure& a) {
  const int n = a.size();
  if (n > 9) throw Error("ordered classes are enumerated for at most 9 points");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<OrderedStructure> out;
  std::vector<FinStructure> seen;
  do {
    OrderedStructure o{a, order};
    auto s = o.ordered();
    if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
      seen.push_back(s);
      out.push_back(std::move(o));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Diagonal trees

std::vector<int> DiagonalTree::code() const {
  std::vector<int> c{n, alphabet_size};
  for (const auto& l : levels) {
    if (l.kind == TreeLevel::Kind::Branch) {
      c.push_back(0);
      c.push_back(static_cast<int>(l.group));
      for (const auto& [m, letter] : l.children) {
        c.push_back(static_cast<int>(m));
        c.push_back(letter);
      }
    } else {
      c.push_back(1);
      c.push_back(l.terminal);
      c.push_back(static_cast<int>(l.passing.size()));
      for (const auto& [m, letter] : l.passing) {
        c.push_back(static_cast<int>(m));
        c.push_back(letter);
      }
    }
  }
  return c;
}

FinStructure DiagonalTree::decode(const LetterScheme& scheme) const {
  std::vector<std::vector<int>> letters(n, std::vector<int>(n, 0));
  for (const auto& l : levels) {
    if (l.kind != TreeLevel::Kind::Terminal) continue;
    for (const auto& [m, letter] : l.passing)
      for (int i = 0; i < n; ++i)
        if (m >> i & 1u) letters[l.terminal][i] = letter;
  }
  return scheme.structure_from_letters(n, letters);
}

std::vector<Word> DiagonalTree::words() const {
  std::vector<Word> out(n);
  for (int r = 0; r < n; ++r) {
    std::uint32_t group = n >= 32 ? ~0u : (1u << n) - 1;
    for (std::size_t m = 0; m < levels.size(); ++m) {
      const auto& l = levels[m];
      if (l.kind == TreeLevel::Kind::Terminal && l.terminal == r) break;
      int letter = 0;
      if (l.kind == TreeLevel::Kind::Branch && l.group == group) {
        for (const auto& [cm, cl] : l.children)
          if (cm >> r & 1u) {
            group = cm;
            letter = cl;
          }
      } else if (l.kind == TreeLevel::Kind::Terminal) {
        for (const auto& [pm, pl] : l.passing)
          if (pm == group) letter = pl;
      }
      out[r].push_back(letter);
    }
  }
  return out;
}

std::string DiagonalTree::check() const {
  const auto w = words();
  if (static_cast<int>(w.size()) != n) return "wrong number of terminals";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && is_prefix(w[a], w[b])) return "terminals are comparable";
  // Meets of terminal pairs are the branching nodes.
  std::set<Word> branching;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::size_t len = 0;
      while (len < w[a].size() && len < w[b].size() && w[a][len] == w[b][len]) ++len;
      branching.emplace(w[a].begin(), w[a].begin() + len);
    }
  std::set<std::size_t> lengths;
  for (const auto& b : branching) {
    std::set<int> next;
    for (const auto& t : w)
      if (is_prefix(b, t) && t.size() > b.size()) next.insert(t[b.size()]);
    if (next.size() != 2) return "a branching node does not have exactly two children";
    lengths.insert(b.size());
  }
  for (const auto& t : w) lengths.insert(t.size());
  if (static_cast<int>(lengths.size()) != static_cast<int>(branching.size()) + n)
    return "two critical nodes share a level";
  if (n > 0 && static_cast<int>(lengths.size()) != 2 * n - 1) return "wrong number of levels";
  auto again = antichain_type(w, alphabet_size);
  if (!again || again->code() != code()) return "words do not reproduce the tree";
  return "";
}

std::optional<DiagonalTree> antichain_type(const std::vector<Word>& words, int alphabet_size) {
  const int n = static_cast<int>(words.size());
  if (n > 31) throw Error("antichains of more than 31 nodes are not supported");
  DiagonalTree tree;
  tree.n = n;
  tree.alphabet_size = alphabet_size;
  if (n == 0) return tree;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return words[x].size() < words[y].size(); });
  std::vector<const Word*> w(n);
  for (int r = 0; r < n; ++r) w[r] = &words[idx[r]];
  for (int r = 1; r < n; ++r)
    if (w[r]->size() == w[r - 1]->size()) return std::nullopt;
  for (const auto* x : w)
    for (int c : *x)
      if (c < 0 || c >= alphabet_size) throw Error("letter " + std::to_string(c) + " out of range");

  std::vector<std::uint32_t> groups{(1u << n) - 1};
  auto letter_at = [&](std::uint32_t g, std::size_t p, std::set<int>& out) {
    for (int r = 0; r < n; ++r)
      if (g >> r & 1u) out.insert((*w[r])[p]);
  };
  const std::size_t maxlen = w[n - 1]->size();
  int next_terminal = 0;
  for (std::size_t p = 0; p <= maxlen && !groups.empty(); ++p) {
    const bool ends = next_terminal < n && w[next_terminal]->size() == p;
    const std::uint32_t tmask = ends ? 1u << next_terminal : 0u;
    if (ends && std::find(groups.begin(), groups.end(), tmask) == groups.end()) return std::nullopt;
    int split = -1;
    std::vector<int> split_letters;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g] == tmask) continue;
      std::set<int> ls;
      letter_at(groups[g], p, ls);
      if (ls.size() > 2) return std::nullopt;
      if (ls.size() == 2) {
        if (split >= 0 || ends) return std::nullopt;
        split = static_cast<int>(g);
        split_letters.assign(ls.begin(), ls.end());
      }
    }
    if (ends) {
      TreeLevel l;
      l.kind = TreeLevel::Kind::Terminal;
      l.group = tmask;
      l.terminal = next_terminal;
      groups.erase(std::find(groups.begin(), groups.end(), tmask));
      std::sort(groups.begin(), groups.end());
      for (std::uint32_t g : groups) {
        std::set<int> ls;
        letter_at(g, p, ls);
        l.passing.emplace_back(g, *ls.begin());
      }
      tree.levels.push_back(std::move(l));
      ++next_terminal;
    } else if (split >= 0) {
      TreeLevel l;
      l.kind = TreeLevel::Kind::Branch;
      l.group = groups[split];
      for (int letter : split_letters) {
        std::uint32_t child = 0;
        for (int r = 0; r < n; ++r)
          if ((l.group >> r & 1u) && (*w[r])[p] == letter) child |= 1u << r;
        l.children.emplace_back(child, letter);
      }
      groups.erase(groups.begin() + split);
      for (const auto& c : l.children) groups.push_back(c.first);
      std::sort(groups.begin(), groups.end());
      tree.levels.push_back(std::move(l));
    }
  }
  return tree;
}

namespace {

struct TreeEnumerator {
  int n;
  int alphabet;
  std::vector<std::vector<int>> letters;  // letters[k][i] for k < i
  std::map<std::vector<int>, DiagonalTree> out;
  DiagonalTree current;

  void run(std::vector<std::uint32_t> groups, int next) {
    if (next == n) {
      out.emplace(current.code(), current);
      return;
    }
    // End the next terminal if it is alone in its group.
    const std::uint32_t tmask = 1u << next;
    if (std::find(groups.begin(), groups.end(), tmask) != groups.end()) {
      TreeLevel l;
      l.kind = TreeLevel::Kind::Terminal;
      l.group = tmask;
      l.terminal = next;
      std::vector<std::uint32_t> rest;
      bool ok = true;
      for (std::uint32_t g : groups) {
        if (g == tmask) continue;
        rest.push_back(g);
        int letter = -1;
        for (int i = 0; i < n && ok; ++i)
          if (g >> i & 1u) {
            if (letter == -1) letter = letters[next][i];
            ok = letter == letters[next][i];
          }
        l.passing.emplace_back(g, letter);
      }
      if (ok) {
        current.levels.push_back(std::move(l));
        run(rest, next + 1);
        current.levels.pop_back();
      }
    }
    // Split a group into two parts with distinct letters.
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const std::uint32_t g = groups[gi];
      if (std::popcount(g) < 2) continue;
      const std::uint32_t low = g & (~g + 1);
      for (std::uint32_t s = (g - 1) & g; s > 0; s = (s - 1) & g) {
        if (!(s & low)) continue;
        const std::uint32_t t = g & ~s;
        for (int a = 0; a < alphabet; ++a)
          for (int b = 0; b < alphabet; ++b) {
            if (a == b) continue;
            TreeLevel l;
            l.kind = TreeLevel::Kind::Branch;
            l.group = g;
            l.children = {{s, a}, {t, b}};
            std::sort(l.children.begin(), l.children.end(),
                      [](const auto& x, const auto& y) { return x.second < y.second; });
            std::vector<std::uint32_t> next_groups = groups;
            next_groups.erase(next_groups.begin() + gi);
            next_groups.push_back(s);
            next_groups.push_back(t);
            std::sort(next_groups.begin(), next_groups.end());
            current.levels.push_back(std::move(l));
            run(next_groups, next);
            current.levels.pop_back();
          }
      }
    }
  }
};

}  // namespace

std::vector<DiagonalTree> enumerate_diagonal_trees_unfiltered(const OrderedStructure& a,
                                                              const LetterScheme& scheme) {
  const auto s = a.ordered();
  scheme.validate(s);
  const int n = s.size();
  if (n > 8) throw Error("diagonal trees are enumerated for at most 8 points");
  TreeEnumerator e{n, scheme.alphabet_size(), std::vector<std::vector<int>>(n, std::vector<int>(n, 0)), {}, {}};
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) e.letters[k][i] = scheme.letter(s, k, i);
  e.current.n = n;
  e.current.alphabet_size = scheme.alphabet_size();
  if (n > 0) e.run({(1u << n) - 1}, 0);
  std::vector<DiagonalTree> out;
  for (auto& [code, t] : e.out) out.push_back(std::move(t));
  return out;
}

FinStructure generic_enumeration(const LetterScheme& scheme, int points, std::uint64_t seed) {
  if (points < 1 || points > 4096) throw Error("generic enumeration size must lie in 1..4096");
  if (scheme.kind() == LetterScheme::Kind::Order) {
    // Bit reversal of the index gives a dense-looking sequence of dyadic rationals.
    auto reversed = [](int i) {
      unsigned v = 0;
      for (int b = 0; b < 16; ++b)
        if (i >> b & 1) v |= 1u << (15 - b);
      return v;
    };
    std::vector<Tuple> lt;
    for (int x = 0; x < points; ++x)
      for (int y = 0; y < points; ++y)
        if (reversed(x) < reversed(y)) lt.push_back({x, y});
    return FinStructure(order_signature(), points, {lt});
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, scheme.alphabet_size() - 1);
  std::vector<std::vector<int>> letters(points, std::vector<int>(points, 0));
  for (int i = 0; i < points; ++i)
    for (int k = 0; k < i; ++k) letters[k][i] = pick(rng);
  return scheme.structure_from_letters(points, letters);
}

RealizableTypes realizable_types(const LetterScheme& scheme, int n, const OracleConfig& config) {
  if (n < 1 || n > 6) throw Error("the antichain oracle supports 1..6 points");
  if (config.sub_points < n || config.sub_points > config.points || config.samples < 0)
    throw Error("oracle sample sizes are inconsistent");
  if (config.points > 64) throw Error("the antichain oracle supports at most 64 points");
  const auto k = generic_enumeration(scheme, config.points, config.seed);
  std::vector<int> order(config.points);
  for (int i = 0; i < config.points; ++i) order[i] = i;
  const auto tree = build_coding_tree(k, order, scheme);

  std::mt19937_64 rng(config.seed ^ 0x5bd1e995u);
  std::vector<std::uint64_t> samples;
  for (int s = 0; s < config.samples; ++s) {
    std::vector<int> pts = order;
    std::shuffle(pts.begin(), pts.end(), rng);
    std::uint64_t mask = 0;
    for (int i = 0; i < config.sub_points; ++i) mask |= std::uint64_t{1} << pts[i];
    samples.push_back(mask);
  }

  RealizableTypes res{config, n, {}, {}};
  std::map<std::vector<int>, std::vector<char>> seen_in;  // code -> per-sample presence
  std::vector<Word> words(n);
  for_each_combination(config.points, n, [&](const std::vector<int>& sub) {
    for (int i = 0; i < n; ++i) words[i] = tree.coding_nodes[sub[i]];
    auto t = antichain_type(words, scheme.alphabet_size());
    if (!t) return true;
    auto code = t->code();
    auto& presence = seen_in[code];
    presence.resize(samples.size(), 0);
    std::uint64_t mask = 0;
    for (int v : sub) mask |= std::uint64_t{1} << v;
    for (std::size_t s = 0; s < samples.size(); ++s)
      if ((mask & samples[s]) == mask) presence[s] = 1;
    return true;
  });
  for (const auto& [code, presence] : seen_in) {
    res.full.insert(code);
    if (std::all_of(presence.begin(), presence.end(), [](char c) { return c != 0; })) res.persistent.insert(code);
  }
  return res;
}

std::vector<DiagonalTree> enumerate_diagonal_trees(const OrderedStructure& a, const LetterScheme& scheme,
                                                   const OracleConfig& config) {
  const auto types = realizable_types(scheme, a.base.size(), config);
  std::vector<DiagonalTree> out;
  for (auto& t : enumerate_diagonal_trees_unfiltered(a, scheme))
    if (types.persistent.count(t.code())) out.push_back(std::move(t));
  return out;
}

CdpDegree cdp_degree(const FinStructure& a, const LetterScheme& scheme, const OracleConfig& config) {
  scheme.validate(a);
  if (a.size() < 1) throw Error("cdp_degree needs a nonempty structure");
  CdpDegree res;
  res.config = config;
  const auto types = realizable_types(scheme, a.size(), config);
  for (auto& o : enumerate_ordered_iso_classes(a)) {
    DiagonalCount dc{o, enumerate_diagonal_trees_unfiltered(o, scheme), {}};
    for (const auto& t : dc.unfiltered)
      if (types.persistent.count(t.code())) dc.realizable.push_back(t);
    res.value += dc.realizable.size();
    res.unfiltered += dc.unfiltered.size();
    res.classes.push_back(std::move(dc));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Harnesses

DuplicationReport free_duplication_report(const FinStructure& ambient, const LetterScheme& scheme,
                                          std::uint64_t m) {
  scheme.validate(ambient);
  const int n = ambient.size();
  std::vector<std::vector<int>> letter(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) letter[x][y] = scheme.letter(ambient, x, y);
  DuplicationReport rep;
  rep.min_required = m;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const int i = letter[x][y];
      for (int j = 0; j < scheme.alphabet_size(); ++j) {
        DuplicationEntry e{x, y, i, j, 0};
        for (int z = 0; z < n; ++z)
          if (z != x && z != y && letter[x][z] == i && letter[z][y] == j) ++e.witnesses;
        ++rep.checked;
        if (e.witnesses < m) rep.flagged.push_back(e);
      }
    }
  return rep;
}

std::string to_string(PartitionSearchResult::Verdict v) {
  switch (v) {
    case PartitionSearchResult::Verdict::Equality: return "equality";
    case PartitionSearchResult::Verdict::Trivial: return "trivial";
    case PartitionSearchResult::Verdict::Injective: return "injective";
    case PartitionSearchResult::Verdict::None: return "none";
  }
  return "none";
}

namespace {

bool labels_injective(const std::vector<int>& labels, const std::vector<int>& sub) {
  std::set<int> seen;
  for (int v : sub)
    if (!seen.insert(labels[v]).second) return false;
  return true;
}

bool labels_constant(const std::vector<int>& labels, const std::vector<int>& sub) {
  for (int v : sub)
    if (labels[v] != labels[sub.front()]) return false;
  return true;
}

bool classify_subset(const std::vector<int>& labels, const std::vector<int>& sub, PartitionSearchResult& res) {
  ++res.copies_examined;
  if (labels_injective(labels, sub)) {
    res.verdict = PartitionSearchResult::Verdict::Equality;
  } else if (labels_constant(labels, sub)) {
    res.verdict = PartitionSearchResult::Verdict::Trivial;
  } else {
    return false;
  }
  res.witness = sub;
  return true;
}

void check_labels(const FinStructure& ambient, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != ambient.size())
    throw Error("need one label per ambient point (got " + std::to_string(labels.size()) + ")");
}

}  // namespace

PartitionSearchResult dichotomy_search(const FinStructure& ambient, const std::vector<int>& labels,
                                       const FinStructure& target) {
  check_labels(ambient, labels);
  const auto copies = copy_vertex_sets(target, ambient);
  if (copies.empty()) throw Error("target does not embed in the ambient");
  PartitionSearchResult res;
  for (const auto& c : copies)
    if (classify_subset(labels, c, res)) break;
  return res;
}

PartitionSearchResult dichotomy_search(const FinStructure& ambient, const std::vector<int>& labels, int k) {
  check_labels(ambient, labels);
  if (k < 1 || k > ambient.size()) throw Error("target size must lie in 1..|ambient|");
  PartitionSearchResult res;
  for_each_combination(ambient.size(), k, [&](const std::vector<int>& sub) {
    return !classify_subset(labels, sub, res);
  });
  return res;
}

PartitionSearchResult rainbow_search(const FinStructure& ambient, const std::vector<int>& colors,
                                     const FinStructure& target, std::uint64_t fiber_bound) {
  check_labels(ambient, colors);
  std::map<int, std::uint64_t> fiber;
  for (int c : colors)
    if (++fiber[c] > fiber_bound)
      throw Error("colour " + std::to_string(c) + " has more than " + std::to_string(fiber_bound) + " points");
  const auto copies = copy_vertex_sets(target, ambient);
  if (copies.empty()) throw Error("target does not embed in the ambient");
  PartitionSearchResult res;
  for (const auto& c : copies) {
    ++res.copies_examined;
    if (labels_injective(colors, c)) {
      res.verdict = PartitionSearchResult::Verdict::Injective;
      res.witness = c;
      break;
    }
  }
  return res;
}

}  // namespace boxram
