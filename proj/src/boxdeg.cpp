#include "boxram/boxdeg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "boxram/error.hpp"

namespace boxram {

namespace {

using Decomposition = std::vector<std::vector<int>>;

std::vector<int> union_of(std::span<const std::vector<int>* const> parts) {
  std::vector<int> u;
  for (const auto* p : parts) u.insert(u.end(), p->begin(), p->end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

Decomposition image(const Decomposition& parts, const std::vector<int>& perm) {
  Decomposition out(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v : parts[i]) out[i].push_back(perm[v]);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

struct TraceInfo {
  CanonicalForm form;
  FinStructure pattern;
  std::vector<std::vector<int>> auts;
};

// Least image of `parts` (already in canonical labels) and its orbit size.
std::pair<Decomposition, std::uint64_t> minimize(const Decomposition& parts,
                                                 const std::vector<std::vector<int>>& auts) {
  std::set<Decomposition> orbit;
  for (const auto& g : auts) orbit.insert(image(parts, g));
  return {*orbit.begin(), orbit.size()};
}

std::vector<int> make_key(const std::vector<int>& code, const Decomposition& dec) {
  std::vector<int> key = code;
  for (const auto& part : dec) {
    key.push_back(static_cast<int>(part.size()));
    key.insert(key.end(), part.begin(), part.end());
  }
  return key;
}

Decomposition to_canonical(std::span<const std::vector<int>* const> parts,
                           const std::vector<int>& u, const std::vector<int>& relabel) {
  Decomposition dec(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v : *parts[i]) {
      auto pos = std::lower_bound(u.begin(), u.end(), v) - u.begin();
      dec[i].push_back(relabel[pos]);
    }
    std::sort(dec[i].begin(), dec[i].end());
  }
  return dec;
}

TraceInfo trace_info(const FinStructure& ambient, const std::vector<int>& u) {
  TraceInfo info;
  std::vector<int> colors(u.size(), 0);
  info.form = canonical_form(ambient, u, colors);
  info.pattern = relabel(induced(ambient, u), info.form.relabel);
  info.auts = automorphisms(info.pattern);
  return info;
}

std::vector<const std::vector<int>*> part_pointers(const CopyTuple& t) {
  std::vector<const std::vector<int>*> ps;
  for (const auto& c : t.components) ps.push_back(&c.vertices);
  return ps;
}

}  // namespace

std::vector<int> trace_vertices(const CopyTuple& t) {
  auto ps = part_pointers(t);
  return union_of(ps);
}

FinStructure trace(const CopyTuple& t) {
  return canonical_structure(induced(t.ambient, trace_vertices(t)));
}

bool sim_equivalent(const CopyTuple& a, const CopyTuple& b) {
  if (a.components.size() != b.components.size())
    throw Error("sim_equivalent: tuples have different lengths");
  require_same_signature(a.ambient, b.ambient);
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (!are_isomorphic(a.components[i].pattern, b.components[i].pattern))
      throw Error("sim_equivalent: component " + std::to_string(i) + " has a different pattern");
  const auto ua = trace_vertices(a), ub = trace_vertices(b);
  if (ua.size() != ub.size()) return false;
  const auto ta = induced(a.ambient, ua), tb = induced(b.ambient, ub);
  auto local = [](const std::vector<int>& u, const std::vector<int>& part) {
    std::vector<int> out;
    for (int v : part) out.push_back(static_cast<int>(std::lower_bound(u.begin(), u.end(), v) - u.begin()));
    return out;
  };
  Decomposition pa, pb;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    pa.push_back(local(ua, a.components[i].vertices));
    pb.push_back(local(ub, b.components[i].vertices));
    std::sort(pb.back().begin(), pb.back().end());
  }
  for (const auto& e : enumerate_embeddings(ta, tb))
    if (image(pa, e.map) == pb) return true;
  return false;
}

std::vector<int> sim_key(const FinStructure& ambient, std::span<const std::vector<int>* const> parts) {
  const auto u = union_of(parts);
  const auto info = trace_info(ambient, u);
  return make_key(info.form.code, minimize(to_canonical(parts, u, info.form.relabel), info.auts).first);
}

std::vector<int> sim_key(const CopyTuple& t) {
  auto ps = part_pointers(t);
  return sim_key(t.ambient, ps);
}

// ---------------------------------------------------------------------------

SimClassifier::SimClassifier(std::vector<FinStructure> patterns, FinStructure ambient)
    : patterns_(std::move(patterns)), ambient_(std::move(ambient)) {
  if (patterns_.empty()) throw Error("at least one pattern is required");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    require_same_signature(patterns_[i], ambient_);
    copies_.push_back(copy_vertex_sets(patterns_[i], ambient_));
    if (copies_.back().empty())
      throw Error("pattern " + std::to_string(i) + " has no copy in the ambient");
    total *= copies_.back().size();
    if (total > (std::uint64_t{1} << 26)) throw Error("too many copy tuples to classify");
  }

  std::map<std::vector<int>, TraceInfo> traces;  // by trace vertex set
  std::map<std::vector<int>, std::vector<std::vector<int>>> aut_by_code;
  std::map<std::vector<int>, std::pair<SimClass, std::uint64_t>> found;  // key -> (class, first flat)
  std::vector<std::vector<int>> flat_keys(total);

  std::vector<const std::vector<int>*> parts(patterns_.size());
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    auto idx = unflatten(flat);
    for (std::size_t i = 0; i < idx.size(); ++i) parts[i] = &copies_[i][idx[i]];
    const auto u = union_of(parts);
    auto it = traces.find(u);
    if (it == traces.end()) {
      TraceInfo info;
      info.form = canonical_form(ambient_, u, std::vector<int>(u.size(), 0));
      info.pattern = relabel(induced(ambient_, u), info.form.relabel);
      auto ac = aut_by_code.find(info.form.code);
      if (ac == aut_by_code.end())
        ac = aut_by_code.emplace(info.form.code, automorphisms(info.pattern)).first;
      info.auts = ac->second;
      it = traces.emplace(u, std::move(info)).first;
    }
    const auto& info = it->second;
    auto [dec, orbit] = minimize(to_canonical(parts, u, info.form.relabel), info.auts);
    auto key = make_key(info.form.code, dec);
    auto f = found.find(key);
    if (f == found.end()) {
      SimClass c;
      c.trace_pattern = info.pattern;
      c.decomposition = dec;
      c.orbit_size = orbit;
      c.trace_automorphisms = info.auts.size();
      c.representative = tuple_at(flat);
      c.key = key;
      f = found.emplace(key, std::make_pair(std::move(c), flat)).first;
    }
    ++f->second.first.member_count;
    flat_keys[flat] = std::move(key);
  }

  for (auto& [key, entry] : found) {
    by_key_.emplace(key, static_cast<int>(classes_.size()));
    classes_.push_back(std::move(entry.first));
  }
  class_of_.resize(total);
  for (std::uint64_t flat = 0; flat < total; ++flat) class_of_[flat] = by_key_.at(flat_keys[flat]);
}

std::vector<std::size_t> SimClassifier::unflatten(std::uint64_t flat) const {
  std::vector<std::size_t> idx(copies_.size());
  for (std::size_t i = copies_.size(); i-- > 0;) {
    idx[i] = flat % copies_[i].size();
    flat /= copies_[i].size();
  }
  return idx;
}

std::uint64_t SimClassifier::flatten(std::span<const std::size_t> idx) const {
  if (idx.size() != copies_.size()) throw Error("flatten: wrong number of indices");
  std::uint64_t flat = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= copies_[i].size()) throw Error("flatten: copy index out of range");
    flat = flat * copies_[i].size() + idx[i];
  }
  return flat;
}

CopyTuple SimClassifier::tuple_at(std::uint64_t flat) const {
  const auto idx = unflatten(flat);
  CopyTuple t{ambient_, {}};
  for (std::size_t i = 0; i < idx.size(); ++i)
    t.components.push_back(Copy{ambient_, copies_[i][idx[i]], patterns_[i]});
  return t;
}

std::optional<int> SimClassifier::classify_key(const std::vector<int>& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SimClassifier::classify(const CopyTuple& t) const {
  if (t.components.size() != patterns_.size()) throw Error("classify: tuple has the wrong length");
  return classify_key(sim_key(t));
}

std::vector<SimClass> enumerate_sim_classes(const std::vector<FinStructure>& patterns,
                                            const FinStructure& ambient) {
  return SimClassifier(patterns, ambient).classes();
}

std::vector<FiberReport> fiber_analysis(const SimClassifier& classifier) {
  const auto& classes = classifier.classes();
  std::vector<std::map<std::vector<int>, std::uint64_t>> fibers(classes.size());
  std::vector<const std::vector<int>*> parts(classifier.dimension());
  for (std::uint64_t flat = 0; flat < classifier.tuple_count(); ++flat) {
    const auto idx = classifier.unflatten(flat);
    for (std::size_t i = 0; i < idx.size(); ++i) parts[i] = &classifier.copies(i)[idx[i]];
    ++fibers[classifier.class_of(flat)][union_of(parts)];
  }
  std::vector<FiberReport> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    FiberReport r;
    r.class_index = c;
    r.orbit_size = classes[c].orbit_size;
    r.trace_automorphisms = classes[c].trace_automorphisms;
    const auto hosts = copy_vertex_sets(classes[c].trace_pattern, classifier.ambient());
    r.trace_copies = hosts.size();
    bool first = true;
    for (const auto& h : hosts) {
      auto it = fibers[c].find(h);
      const std::uint64_t n = it == fibers[c].end() ? 0 : it->second;
      if (n > 0) ++r.hosted_copies;
      r.min_fiber = first ? n : std::min(r.min_fiber, n);
      r.max_fiber = std::max(r.max_fiber, n);
      first = false;
    }
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::UserSupplied: return "user-supplied";
    case Provenance::ComputedByCodingTree: return "computed-by-codingtree";
    case Provenance::AssumedOne: return "assumed-1";
  }
  return "unknown";
}

void DegreeTable::set(const FinStructure& s, std::uint64_t degree, Provenance provenance) {
  if (degree < 1) throw Error("degree table entries must be at least 1");
  auto cf = canonical_form(s);
  if (!entries_.empty() && !(entries_.begin()->second.structure.signature() == s.signature()))
    throw Error("degree table entries must share one signature");
  entries_[cf.code] = DegreeEntry{relabel(s, cf.relabel), degree, provenance};
}

std::optional<DegreeEntry> DegreeTable::lookup(const FinStructure& s) const {
  auto it = entries_.find(canonical_form(s).code);
  if (it == entries_.end() || !(it->second.structure.signature() == s.signature())) return std::nullopt;
  return it->second;
}

std::vector<DegreeEntry> DegreeTable::entries() const {
  std::vector<DegreeEntry> out;
  for (const auto& [k, e] : entries_) out.push_back(e);
  return out;
}

BoxDegreeResult box_degree(const std::vector<FinStructure>& patterns, const FinStructure& ambient,
                           const DegreeTable& table, bool assume_one) {
  SimClassifier classifier(patterns, ambient);
  BoxDegreeResult res;
  res.class_count = classifier.classes().size();
  for (const auto& c : classifier.classes()) {
    BoxDegreeTerm term;
    term.trace = c.trace_pattern;
    term.decomposition = c.decomposition;
    term.orbit_size = c.orbit_size;
    term.trace_automorphisms = c.trace_automorphisms;
    if (auto e = table.lookup(c.trace_pattern)) {
      term.degree = e->degree;
      term.provenance = e->provenance;
    } else if (assume_one) {
      term.degree = 1;
      term.provenance = Provenance::AssumedOne;
    } else {
      std::string desc = "no degree table entry for trace of size " +
                         std::to_string(c.trace_pattern.size()) + " with tuples";
      for (std::size_t s = 0; s < c.trace_pattern.signature().size(); ++s) {
        desc += " " + c.trace_pattern.signature()[s].name + "=";
        for (const auto& t : c.trace_pattern.tuples(s)) {
          desc += "(";
          for (std::size_t p = 0; p < t.size(); ++p) desc += (p ? "," : "") + std::to_string(t[p]);
          desc += ")";
        }
      }
      throw Error(desc);
    }
    term.contribution = term.degree * term.orbit_size;
    res.value += term.contribution;
    res.aut_weighted_value += term.degree * term.trace_automorphisms;
    res.terms.push_back(std::move(term));
  }
  return res;
}

// ---------------------------------------------------------------------------

BigInt surjection_count(int d, int k) {
  if (d < 1 || k < 1) throw Error("surjection_count: d and k must be positive");
  BigInt sum = 0, binom = 1;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) binom = binom * (k - i + 1) / i;
    BigInt term = binom * boost::multiprecision::pow(BigInt(k - i), static_cast<unsigned>(d));
    sum += (i % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

BigInt omega_box_degree(int d) {
  if (d < 1) throw Error("omega_box_degree: d must be positive");
  BigInt sum = 0;
  for (int k = 1; k <= d; ++k) sum += surjection_count(d, k);
  return sum;
}

BigInt canonical_relation_count(int d) {
  const BigInt m = omega_box_degree(d);
  if (m > 4096) throw Error("canonical_relation_count: exponent too large");
  return boost::multiprecision::pow(BigInt(2), m.convert_to<unsigned>());
}

}  // namespace boxram
