#include "boxram/json_io.hpp"

#include <fstream>
#include <sstream>

namespace boxram {

SchemaError::SchemaError(const std::string& p, const std::string& what)
    : Error("at " + (p.empty() ? std::string("/") : p) + ": " + what), pointer(p.empty() ? "/" : p) {}

Json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    try {
      return Json::parse(text_or_path);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
  }
  std::ifstream in(text_or_path);
  if (!in) throw Error("cannot open " + text_or_path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", text_or_path + ": invalid JSON: " + e.what());
  }
}

namespace {

std::string item(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

std::vector<int> int_array(const Json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw SchemaError(item(at, i), "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_array(j[i], item(at, i)));
  return out;
}

template <class F>
auto guarded(const std::string& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(at, e.what());
  }
}

}  // namespace

Json to_json(const FinStructure& s) {
  Json sig = Json::array();
  Json rel = Json::object();
  for (std::size_t i = 0; i < s.signature().size(); ++i) {
    const auto& sym = s.signature()[i];
    sig.push_back({{"name", sym.name}, {"arity", sym.arity}});
    rel[sym.name] = s.tuples(i);
  }
  return {{"signature", sig}, {"size", s.size()}, {"relations", rel}};
}

FinStructure structure_from_json(const Json& j, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "expected a structure object");
  if (!j.contains("signature")) throw SchemaError(at + "/signature", "missing field");
  const Json& sig = j["signature"];
  if (!sig.is_array()) throw SchemaError(at + "/signature", "expected an array");
  std::vector<Symbol> syms;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const auto p = item(at + "/signature", i);
    syms.push_back({field_as<std::string>(sig[i], "name", p), field_as<int>(sig[i], "arity", p)});
    if (syms.back().arity < 1) throw SchemaError(p + "/arity", "arity must be positive");
  }
  const Signature signature = guarded(at + "/signature", [&] { return Signature(syms); });
  const int size = field_as<int>(j, "size", at);
  if (size < 0) throw SchemaError(at + "/size", "size must be non-negative");
  std::vector<std::vector<Tuple>> rel(signature.size());
  if (j.contains("relations")) {
    const Json& r = j["relations"];
    if (!r.is_object()) throw SchemaError(at + "/relations", "expected an object");
    for (const auto& [name, tuples] : r.items()) {
      const auto p = at + "/relations/" + name;
      const auto idx = signature.find(name);
      if (!idx) throw SchemaError(p, "symbol not in signature");
      rel[*idx] = int_matrix(tuples, p);
      for (std::size_t t = 0; t < rel[*idx].size(); ++t) {
        const auto& tup = rel[*idx][t];
        if (static_cast<int>(tup.size()) != signature[*idx].arity) throw SchemaError(item(p, t), "wrong arity");
        for (int v : tup)
          if (v < 0 || v >= size) throw SchemaError(item(p, t), "vertex out of range");
      }
    }
  }
  return guarded(at, [&] { return FinStructure(signature, size, std::move(rel)); });
}

Json to_json(const IndexedStructure& x) {
  Json labels = Json::array();
  for (const auto& l : x.labels) labels.push_back(to_json(l));
  return {{"index", to_json(x.index)}, {"labels", labels}};
}

IndexedStructure indexed_from_json(const Json& j, const std::string& at) {
  if (!j.is_object() || !j.contains("index")) throw SchemaError(at + "/index", "missing field");
  if (!j.contains("labels") || !j["labels"].is_array()) throw SchemaError(at + "/labels", "expected an array");
  IndexedStructure x;
  x.index = structure_from_json(j["index"], at + "/index");
  for (std::size_t i = 0; i < j["labels"].size(); ++i)
    x.labels.push_back(structure_from_json(j["labels"][i], item(at + "/labels", i)));
  return x;
}

Json to_json(const IndexedMorphism& m) {
  return {{"source", to_json(m.source)},
          {"target", to_json(m.target)},
          {"index_map", m.index_map},
          {"label_maps", m.label_maps}};
}

IndexedMorphism morphism_from_json(const Json& j, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "expected a morphism object");
  IndexedMorphism m;
  if (!j.contains("source")) throw SchemaError(at + "/source", "missing field");
  if (!j.contains("target")) throw SchemaError(at + "/target", "missing field");
  m.source = indexed_from_json(j["source"], at + "/source");
  m.target = indexed_from_json(j["target"], at + "/target");
  if (!j.contains("index_map")) throw SchemaError(at + "/index_map", "missing field");
  if (!j.contains("label_maps")) throw SchemaError(at + "/label_maps", "missing field");
  m.index_map = int_array(j["index_map"], at + "/index_map");
  m.label_maps = int_matrix(j["label_maps"], at + "/label_maps");
  return m;
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j, const std::string& at) {
  if (j.is_string()) return guarded(at, [&] { return parse_rational(j.get<std::string>()); });
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw SchemaError(at, "expected a rational string \"p/q\" or an integer");
}

Json to_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& r : s.distances()) out.push_back(rational_to_json(r));
  return out;
}

Spectrum spectrum_from_json(const Json& j, const std::string& at) {
  const Json& arr = j.is_object() && j.contains("spectrum") ? j["spectrum"] : j;
  const std::string p = &arr == &j ? at : at + "/spectrum";
  if (!arr.is_array()) throw SchemaError(p, "expected an array of rationals");
  std::vector<Rational> d;
  for (std::size_t i = 0; i < arr.size(); ++i) d.push_back(rational_from_json(arr[i], item(p, i)));
  return guarded(p, [&] { return Spectrum(std::move(d)); });
}

Json to_json(const MetricSpace& x) {
  Json rows = Json::array();
  for (const auto& row : x.d) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    rows.push_back(r);
  }
  return rows;
}

MetricSpace metric_from_json(const Json& j, const std::string& at) {
  const Json& arr = j.is_object() && j.contains("distances") ? j["distances"] : j;
  const std::string p = &arr == &j ? at : at + "/distances";
  if (!arr.is_array()) throw SchemaError(p, "expected a distance matrix");
  MetricSpace x;
  if (!arr.empty() && arr[0].is_array()) {
    x.n = static_cast<int>(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_array() || arr[i].size() != arr.size()) throw SchemaError(item(p, i), "row length differs");
      std::vector<Rational> row;
      for (std::size_t k = 0; k < arr[i].size(); ++k) row.push_back(rational_from_json(arr[i][k], item(item(p, i), k)));
      x.d.push_back(std::move(row));
    }
    return x;
  }
  int n = 0;
  while (static_cast<std::size_t>(n * n) < arr.size()) ++n;
  if (static_cast<std::size_t>(n * n) != arr.size()) throw SchemaError(p, "flat matrix length is not a square");
  x.n = n;
  x.d.assign(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) x.d[a][b] = rational_from_json(arr[a * n + b], item(p, a * n + b));
  return x;
}

DegreeTable degree_table_from_json(const Json& j, const std::string& at) {
  DegreeTable t;
  auto degree_of = [](const Json& v, const std::string& p) {
    if (!v.is_number_integer() || v.get<long long>() < 1) throw SchemaError(p, "expected a positive integer");
    return v.get<std::uint64_t>();
  };
  if (j.is_object()) {
    for (const auto& [path, deg] : j.items()) {
      const auto p = at + "/" + path;
      t.set(structure_from_json(load_json(path), p), degree_of(deg, p));
    }
    return t;
  }
  if (!j.is_array()) throw SchemaError(at, "expected an array or object");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = item(at, i);
    if (!j[i].is_object() || !j[i].contains("structure")) throw SchemaError(p + "/structure", "missing field");
    const Json& s = j[i]["structure"];
    const auto structure = s.is_string() ? structure_from_json(load_json(s.get<std::string>()), p + "/structure")
                                         : structure_from_json(s, p + "/structure");
    if (!j[i].contains("degree")) throw SchemaError(p + "/degree", "missing field");
    t.set(structure, degree_of(j[i]["degree"], p + "/degree"));
  }
  return t;
}

Json to_json(const DegreeTable& t) {
  Json out = Json::array();
  for (const auto& e : t.entries())
    out.push_back({{"structure", to_json(e.structure)}, {"degree", e.degree}, {"provenance", to_string(e.provenance)}});
  return out;
}

Json to_json(const SimClass& c) {
  Json rep = Json::array();
  for (const auto& comp : c.representative.components) rep.push_back(comp.vertices);
  return {{"trace", to_json(c.trace_pattern)},
          {"decomposition", c.decomposition},
          {"orbit_size", c.orbit_size},
          {"trace_automorphisms", c.trace_automorphisms},
          {"member_count", c.member_count},
          {"representative", rep}};
}

Json to_json(const BoxDegreeResult& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"trace", to_json(t.trace)},
                     {"decomposition", t.decomposition},
                     {"degree", t.degree},
                     {"orbit_size", t.orbit_size},
                     {"trace_automorphisms", t.trace_automorphisms},
                     {"contribution", t.contribution},
                     {"provenance", to_string(t.provenance)}});
  return {{"value", r.value},
          {"aut_weighted_value", r.aut_weighted_value},
          {"class_count", r.class_count},
          {"terms", terms}};
}

namespace {

char letter_char(int l) {
  if (l < 0 || l >= 36) throw Error("letter out of range for the string form");
  return static_cast<char>(l < 10 ? '0' + l : 'a' + (l - 10));
}

int char_letter(char c, const std::string& at) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw SchemaError(at, std::string("invalid letter '") + c + "'");
}

}  // namespace

Json words_to_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) {
    std::string s;
    for (int l : w) s.push_back(letter_char(l));
    out.push_back(s);
  }
  return out;
}

std::vector<Word> words_from_json(const Json& j, const std::string& at) {
  const Json& arr = j.is_object() && j.contains("words") ? j["words"] : j;
  const std::string p = &arr == &j ? at : at + "/words";
  if (!arr.is_array()) throw SchemaError(p, "expected a list of words");
  std::vector<Word> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr[i].is_string()) {
      Word w;
      for (char c : arr[i].get<std::string>()) w.push_back(char_letter(c, item(p, i)));
      out.push_back(std::move(w));
    } else {
      out.push_back(int_array(arr[i], item(p, i)));
    }
  }
  return out;
}

Json to_json(const DiagonalTree& t) {
  Json levels = Json::array();
  for (const auto& l : t.levels) {
    if (l.kind == TreeLevel::Kind::Branch) {
      Json ch = Json::array();
      for (const auto& [g, letter] : l.children) ch.push_back({{"group", g}, {"letter", letter}});
      levels.push_back({{"kind", "branch"}, {"group", l.group}, {"children", ch}});
    } else {
      Json pass = Json::array();
      for (const auto& [g, letter] : l.passing) pass.push_back({{"group", g}, {"letter", letter}});
      levels.push_back({{"kind", "terminal"}, {"terminal", l.terminal}, {"passing", pass}});
    }
  }
  return {{"n", t.n}, {"code", t.code()}, {"words", words_to_json(t.words())}, {"levels", levels}};
}

Json to_json(const RamseyResult& r) {
  Json out = {{"verdict", to_string(r.verdict)}, {"nodes", r.nodes}};
  if (r.verdict == RamseyResult::Verdict::Fails) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.a_copies.size(); ++i)
      rows.push_back({{"copy", r.a_copies[i]}, {"color", r.counterexample[i]}});
    out["counterexample"] = rows;
  }
  return out;
}

}  // namespace boxram
