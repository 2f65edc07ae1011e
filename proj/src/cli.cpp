#include "boxram/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "boxram/boxdeg.hpp"
#include "boxram/canonical.hpp"
#include "boxram/codingtree.hpp"
#include "boxram/indexed.hpp"
#include "boxram/json_io.hpp"
#include "boxram/metric.hpp"
#include "boxram/oracle.hpp"

namespace boxram {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct Budget : BudgetExceeded {
  using BudgetExceeded::BudgetExceeded;
};

// Every option any verb can take; CLI11 binds to these by reference.
struct Params {
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  bool explain = false;
  bool assume_one = false;
  std::string out;

  std::string in, a, b, c, f, g, host, ambient, test_ambient, table, scheme = "auto", order, words, labels, colors,
      target, shape, blocks, spectrum, jep = "auto", index, basis_ambient;
  std::vector<std::string> patterns, label_structs;
  int d = 1, k = 1, size = 0, threshold = 1, points = 40, sub_points = 30, samples = 8;
  std::uint64_t m = 1, fiber_bound = 1;
  bool antichain = false, no_reduce = false;
};

struct Context {
  Params& p;
  std::map<std::string, std::string> inputs;  // raw argument -> canonical dump

  Json input(const std::string& text) {
    Json j = load_json(text);
    inputs[text] = j.dump();
    return j;
  }
  FinStructure structure(const std::string& text, const std::string& name) {
    if (text.empty()) throw SchemaError("/" + name, "missing input");
    return structure_from_json(input(text));
  }
};

struct Verb {
  std::string name;
  std::string explain;
  std::function<Json(Context&)> body;
};

Json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

LetterScheme scheme_for(const std::string& name, const FinStructure& s) {
  if (name != "auto") return LetterScheme::by_name(name);
  if (s.signature() == order_signature()) return LetterScheme::order();
  if (s.signature() == graph_signature()) return LetterScheme::graph();
  const int l = static_cast<int>(s.signature().size());
  if (l > 0 && s.signature() == colored_signature(l)) return LetterScheme::colored(l);
  throw Error("cannot infer a letter scheme; pass --scheme");
}

std::vector<int> int_list(Context& ctx, const std::string& text, const std::string& name) {
  if (text.empty()) throw SchemaError("/" + name, "missing input");
  const Json j = ctx.input(text);
  if (!j.is_array()) throw SchemaError("/" + name, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw SchemaError("/" + name + "/" + std::to_string(i), "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

std::vector<FinStructure> structures(Context& ctx, const std::vector<std::string>& texts, const std::string& name) {
  if (texts.empty()) throw SchemaError("/" + name, "at least one structure is required");
  std::vector<FinStructure> out;
  for (const auto& t : texts) out.push_back(ctx.structure(t, name));
  return out;
}

Json classes_json(const SimClassifier& cls) {
  Json arr = Json::array();
  for (const auto& c : cls.classes()) arr.push_back(to_json(c));
  return arr;
}

Json copy_json(const IndexedCopy& c) {
  Json labels = Json::array();
  for (const auto& [j, v] : c.label_vertices) labels.push_back({{"index_point", j}, {"vertices", v}});
  return {{"index_vertices", c.index_vertices}, {"label_vertices", labels}};
}

Json partition_json(const PartitionSearchResult& r) {
  return {{"verdict", to_string(r.verdict)}, {"witness", r.witness}, {"copies_examined", r.copies_examined}};
}

Json diagnostics_json(const Diagnostics& d) { return {{"valid", d.ok()}, {"problems", d.problems}}; }

OracleConfig oracle_config(const Params& p) {
  OracleConfig c;
  c.points = p.points;
  c.sub_points = p.sub_points;
  c.samples = p.samples;
  c.seed = p.seed;
  return c;
}

Json config_json(const OracleConfig& c) {
  return {{"points", c.points}, {"sub_points", c.sub_points}, {"samples", c.samples}, {"seed", c.seed}};
}

std::string usage_hint() { return "run 'boxram --help' for the list of verbs"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Params p;
  CLI::App app{"Box Ramsey degrees, canonical relations, coding trees and indexed structures", "boxram"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", p.seed, "Seed for randomised corpora and oracles");
  app.add_option("--budget", p.budget, "Search budget in partial colourings");
  app.add_flag("--explain", p.explain, "Describe the computed quantity");
  app.add_option("--out", p.out, "Write the report to a file");
  app.add_flag("--assume-degree-1", p.assume_one, "Treat missing degree table entries as 1");

  std::vector<std::pair<CLI::App*, Verb>> verbs;
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help, std::string explain,
                  std::function<Json(Context&)> body) {
    auto* sc = parent->add_subcommand(name, help);
    sc->fallthrough();
    const std::string full = parent == &app ? name : parent->get_name() + " " + name;
    verbs.push_back({sc, Verb{full, std::move(explain), std::move(body)}});
    return sc;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->fallthrough();
    g->require_subcommand(1);
    return g;
  };

  // structure
  auto* structure = group("structure", "Finite relational structures");
  verb(structure, "validate", "Parse and check a structure",
       "A finite structure on {0,...,n-1} with the given relations.",
       [](Context& ctx) {
         const auto s = ctx.structure(ctx.p.in, "in");
         return Json{{"valid", true}, {"size", s.size()}, {"tuple_count", s.tuple_count()},
                     {"structure", to_json(s)}};
       })
      ->add_option("--in", p.in, "Structure (JSON or path)")
      ->required();
  {
    auto* sc = verb(structure, "embeddings", "All embeddings of A into B",
                    "Injective maps A -> B preserving every relation in both directions, lexicographic.",
                    [](Context& ctx) {
                      const auto a = ctx.structure(ctx.p.a, "a"), b = ctx.structure(ctx.p.b, "b");
                      Json maps = Json::array();
                      for (const auto& e : enumerate_embeddings(a, b)) maps.push_back(e.map);
                      return Json{{"count", maps.size()}, {"embeddings", maps}};
                    });
    sc->add_option("--a", p.a)->required();
    sc->add_option("--b", p.b)->required();
  }
  {
    auto* sc = verb(structure, "copies", "Copies of A in B",
                    "Vertex sets of induced substructures of B isomorphic to A, lexicographic.",
                    [](Context& ctx) {
                      const auto a = ctx.structure(ctx.p.a, "a"), b = ctx.structure(ctx.p.b, "b");
                      const auto v = copy_vertex_sets(a, b);
                      return Json{{"count", v.size()}, {"copies", v}};
                    });
    sc->add_option("--a", p.a)->required();
    sc->add_option("--b", p.b)->required();
  }
  verb(structure, "autgroup", "Automorphism group",
       "All permutations of the universe preserving every relation.",
       [](Context& ctx) {
         const auto aut = automorphisms(ctx.structure(ctx.p.in, "in"));
         return Json{{"order", aut.size()}, {"automorphisms", aut}};
       })
      ->add_option("--in", p.in)
      ->required();
  {
    auto* sc = verb(structure, "iso", "Isomorphism test",
                    "A bijection A -> B preserving every relation in both directions, if one exists.",
                    [](Context& ctx) {
                      const auto a = ctx.structure(ctx.p.a, "a"), b = ctx.structure(ctx.p.b, "b");
                      require_same_signature(a, b);
                      const auto iso = find_isomorphism(a, b);
                      Json r{{"isomorphic", iso.has_value()}};
                      r["map"] = iso ? Json(*iso) : Json(nullptr);
                      return r;
                    });
    sc->add_option("--a", p.a)->required();
    sc->add_option("--b", p.b)->required();
  }

  // box degrees
  {
    auto* sc = verb(&app, "simclasses", "Classes of copy tuples",
                    "Tuples (A_1',...,A_d') of copies in C up to isomorphisms of their union carrying each "
                    "component to the same-index component; orbit_size = |Aut(trace)| / |stabiliser of the "
                    "decomposition|.",
                    [](Context& ctx) {
                      const auto pats = structures(ctx, ctx.p.patterns, "pattern");
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      SimClassifier cls(pats, amb);
                      return Json{{"class_count", cls.classes().size()},
                                  {"tuple_count", cls.tuple_count()},
                                  {"classes", classes_json(cls)}};
                    });
    sc->add_option("--pattern", p.patterns, "Pattern A_i, in order")->required();
    sc->add_option("--ambient", p.ambient)->required();
  }
  {
    auto* sc = verb(&app, "boxdegree", "Box Ramsey degree from a degree table",
                    "Sum over classes of t(trace) * orbit_size, with t read from the degree table.",
                    [](Context& ctx) {
                      const auto pats = structures(ctx, ctx.p.patterns, "pattern");
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      DegreeTable table;
                      if (!ctx.p.table.empty()) table = degree_table_from_json(ctx.input(ctx.p.table));
                      return to_json(box_degree(pats, amb, table, ctx.p.assume_one));
                    });
    sc->add_option("--pattern", p.patterns)->required();
    sc->add_option("--ambient", p.ambient)->required();
    sc->add_option("--table", p.table, "Degree table (JSON or path)");
  }
  {
    auto* sc = verb(&app, "surjections", "Surjections from a d-set onto a k-set",
                    "sum_{i=0..k} (-1)^i C(k,i) (k-i)^d.",
                    [](Context& ctx) { return Json{{"value", big(surjection_count(ctx.p.d, ctx.p.k))}}; });
    sc->add_option("--d", p.d)->required();
    sc->add_option("--k", p.k)->required();
  }
  verb(&app, "omega-degree", "Box degree of d points in a chain",
       "sum_{k=1..d} surj(d, k), the ordered Bell number.",
       [](Context& ctx) { return Json{{"value", big(omega_box_degree(ctx.p.d))}}; })
      ->add_option("--d", p.d)
      ->required();
  verb(&app, "canonical-count", "Number of canonical d-ary relations on points of a chain",
       "2 to the power of the box degree of d points.",
       [](Context& ctx) { return Json{{"value", big(canonical_relation_count(ctx.p.d))}}; })
      ->add_option("--d", p.d)
      ->required();

  // canonical relations
  auto* canonical = group("canonical", "Canonical relations and bases");
  {
    auto* sc = verb(canonical, "enumerate", "Unions of classes of d-tuples of points",
                    "Every union of classes of d-tuples of points of the ambient.",
                    [](Context& ctx) {
                      const auto amb = ctx.p.ambient.empty() ? linear_order(ctx.p.d)
                                                             : ctx.structure(ctx.p.ambient, "ambient");
                      std::vector<FinStructure> pats(ctx.p.d, point_pattern(amb));
                      auto context = std::make_shared<const SimClassifier>(pats, amb);
                      Json rels = Json::array();
                      for (const auto& r : enumerate_canonical_relations(context)) rels.push_back(r.classes);
                      return Json{{"classes", classes_json(*context)}, {"count", rels.size()}, {"relations", rels}};
                    });
    sc->add_option("--d", p.d)->required();
    sc->add_option("--ambient", p.ambient, "Ambient (default: a chain with d points)");
  }
  {
    auto* sc = verb(canonical, "filter-equiv", "Canonical binary relations that are equivalences",
                    "Unions of classes of pairs of points that are reflexive, symmetric and transitive on "
                    "the test ambient.",
                    [](Context& ctx) {
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      const auto test = ctx.structure(ctx.p.test_ambient, "test_ambient");
                      const auto specs = enumerate_canonical_relations(2, amb);
                      Json kept = Json::array();
                      for (const auto& r : filter_equivalences(specs, test)) kept.push_back(r.classes);
                      return Json{{"classes", classes_json(*specs.front().context)},
                                  {"candidates", specs.size()},
                                  {"equivalences", kept}};
                    });
    sc->add_option("--ambient", p.ambient, "Context ambient for the classes")->required();
    sc->add_option("--test-ambient", p.test_ambient, "Ambient the relations are checked on")->required();
  }
  {
    auto* sc = verb(canonical, "cover", "Find a sub-ambient where a partition agrees with a basis relation",
                    "First sub-ambient of the given size on which the equivalence relation coincides with a "
                    "canonical relation on pairs of copies.",
                    [](Context& ctx) {
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      const auto pat = ctx.structure(ctx.p.in, "pattern");
                      const Json bj = ctx.input(ctx.p.blocks);
                      if (!bj.is_array()) throw SchemaError("/blocks", "expected an array of blocks");
                      std::vector<std::vector<int>> blocks;
                      for (std::size_t i = 0; i < bj.size(); ++i) {
                        if (!bj[i].is_array()) throw SchemaError("/blocks/" + std::to_string(i), "expected a block");
                        blocks.push_back(bj[i].get<std::vector<int>>());
                      }
                      EquivRelation e(amb, pat, blocks);
                      const auto basis_amb =
                          ctx.p.basis_ambient.empty() ? amb : ctx.structure(ctx.p.basis_ambient, "basis_ambient");
                      auto context = std::make_shared<const SimClassifier>(std::vector<FinStructure>{pat, pat},
                                                                           basis_amb);
                      const auto basis = enumerate_canonical_relations(context);
                      std::optional<FinStructure> shape;
                      if (!ctx.p.shape.empty()) shape = ctx.structure(ctx.p.shape, "shape");
                      const auto res = basis_cover_search(e, basis, ctx.p.size, shape);
                      Json r{{"subambients_examined", res.subambients_examined}, {"found", res.witness.has_value()}};
                      if (res.witness)
                        r["witness"] = {{"subambient", res.witness->subambient},
                                        {"relation", basis[res.witness->basis_index].classes}};
                      r["classes"] = classes_json(*context);
                      return r;
                    });
    sc->add_option("--ambient", p.ambient)->required();
    sc->add_option("--pattern", p.in)->required();
    sc->add_option("--blocks", p.blocks, "Blocks of copy indices")->required();
    sc->add_option("--size", p.size, "Size of the sub-ambient")->required();
    sc->add_option("--shape", p.shape, "Restrict sub-ambients to copies of this structure");
    sc->add_option("--basis-ambient", p.basis_ambient, "Ambient defining the basis classes");
  }

  // coding trees
  auto* codingtree = group("codingtree", "Coding trees of enumerated structures");
  {
    auto* sc = verb(codingtree, "build", "Coding nodes of an enumerated structure",
                    "Node i is the word c_i with c_i(k) = j iff (v_k, v_i) carries letter j, k < i.",
                    [](Context& ctx) {
                      const auto a = ctx.structure(ctx.p.in, "in");
                      const auto scheme = scheme_for(ctx.p.scheme, a);
                      std::vector<int> order(a.size());
                      for (int i = 0; i < a.size(); ++i) order[i] = i;
                      if (!ctx.p.order.empty()) order = int_list(ctx, ctx.p.order, "order");
                      const auto t = build_coding_tree(a, order, scheme);
                      return Json{{"scheme", scheme.name()},
                                  {"coding_nodes", words_to_json(t.coding_nodes)},
                                  {"nodes", words_to_json(t.nodes)},
                                  {"antichain", words_to_json(to_antichain(t.coding_nodes))}};
                    });
    sc->add_option("--in", p.in)->required();
    sc->add_option("--scheme", p.scheme, "order, graph, colored:<l> or auto");
    sc->add_option("--order", p.order, "Enumeration as a list of points");
  }
  {
    auto* sc = verb(codingtree, "decode", "Structure coded by words of distinct lengths",
                    "Point k relates to a later point i by letter word_i(|word_k|).",
                    [](Context& ctx) {
                      if (ctx.p.scheme == "auto") throw SchemaError("/scheme", "decode needs an explicit scheme");
                      const auto scheme = LetterScheme::by_name(ctx.p.scheme);
                      const auto words = words_from_json(ctx.input(ctx.p.words));
                      const auto s = ctx.p.antichain ? decode_antichain(words, scheme) : decode_nodes(words, scheme);
                      return Json{{"structure", to_json(s)}};
                    });
    sc->add_option("--words", p.words, "List of letter strings")->required();
    sc->add_option("--scheme", p.scheme)->required();
    sc->add_flag("--antichain", p.antichain, "Require pairwise incomparable words");
  }
  auto* diagonal = group("diagonal", "Diagonal trees");
  {
    auto* sc = verb(diagonal, "enumerate", "Diagonal trees coding A, per ordered class",
                    "Diagonal antichains of coding nodes, up to isomorphism, whose terminals decode to an "
                    "enumeration of A; realisable types are those met in a generic enumeration and all its "
                    "sampled sub-enumerations.",
                    [](Context& ctx) {
                      const auto a = ctx.structure(ctx.p.in, "in");
                      const auto scheme = scheme_for(ctx.p.scheme, a);
                      const auto res = cdp_degree(a, scheme, oracle_config(ctx.p));
                      Json per = Json::array();
                      for (const auto& c : res.classes) {
                        Json trees = Json::array();
                        for (const auto& t : c.realizable) trees.push_back(to_json(t));
                        per.push_back({{"order", c.ordered.order},
                                       {"unfiltered", c.unfiltered.size()},
                                       {"realizable", c.realizable.size()},
                                       {"trees", trees}});
                      }
                      return Json{{"classes", per}, {"oracle", config_json(res.config)}};
                    });
    sc->add_option("--in", p.in)->required();
    sc->add_option("--scheme", p.scheme);
    sc->add_option("--points", p.points);
    sc->add_option("--sub-points", p.sub_points);
    sc->add_option("--samples", p.samples);
  }
  {
    auto* sc = verb(&app, "cdp-degree", "Big Ramsey degree from diagonal trees",
                    "Sum over ordered isomorphism classes of A of the number of realisable diagonal trees.",
                    [](Context& ctx) {
                      const auto a = ctx.structure(ctx.p.in, "in");
                      const auto res = cdp_degree(a, scheme_for(ctx.p.scheme, a), oracle_config(ctx.p));
                      return Json{{"value", res.value},
                                  {"unfiltered", res.unfiltered},
                                  {"ordered_classes", res.classes.size()},
                                  {"oracle", config_json(res.config)}};
                    });
    sc->add_option("--in", p.in)->required();
    sc->add_option("--scheme", p.scheme);
    sc->add_option("--points", p.points);
    sc->add_option("--sub-points", p.sub_points);
    sc->add_option("--samples", p.samples);
  }
  auto* freedup = group("freedup", "Free duplication");
  {
    auto* sc = verb(freedup, "report", "Pairs lacking m witnesses",
                    "For every pair (x, y) with letter i and every letter j: the number of z with letter(x, z) "
                    "= i and letter(z, y) = j, flagged below m.",
                    [](Context& ctx) {
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      const auto rep = free_duplication_report(amb, scheme_for(ctx.p.scheme, amb), ctx.p.m);
                      Json flagged = Json::array();
                      for (const auto& e : rep.flagged)
                        flagged.push_back({{"x", e.x}, {"y", e.y}, {"i", e.i}, {"j", e.j}, {"witnesses", e.witnesses}});
                      return Json{{"passed", rep.passed()},
                                  {"checked", rep.checked},
                                  {"min_required", rep.min_required},
                                  {"flagged", flagged}};
                    });
    sc->add_option("--ambient", p.ambient)->required();
    sc->add_option("--scheme", p.scheme);
    sc->add_option("--m", p.m)->required();
  }
  {
    auto* sc = verb(&app, "dichotomy", "Copy on which a partition is injective or constant",
                    "First copy of the target (or first k-set) on which the block labelling is injective "
                    "or constant.",
                    [](Context& ctx) {
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      const auto labels = int_list(ctx, ctx.p.labels, "labels");
                      if (!ctx.p.target.empty())
                        return partition_json(dichotomy_search(amb, labels, ctx.structure(ctx.p.target, "target")));
                      return partition_json(dichotomy_search(amb, labels, ctx.p.k));
                    });
    sc->add_option("--ambient", p.ambient)->required();
    sc->add_option("--labels", p.labels, "Block label per point")->required();
    sc->add_option("--target", p.target);
    sc->add_option("--k", p.k);
  }
  {
    auto* sc = verb(&app, "rainbow", "Copy on which a bounded colouring is injective",
                    "First copy of the target whose points receive pairwise distinct colours.",
                    [](Context& ctx) {
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      const auto colors = int_list(ctx, ctx.p.colors, "colors");
                      return partition_json(
                          rainbow_search(amb, colors, ctx.structure(ctx.p.target, "target"), ctx.p.fiber_bound));
                    });
    sc->add_option("--ambient", p.ambient)->required();
    sc->add_option("--colors", p.colors, "Colour per point")->required();
    sc->add_option("--target", p.target)->required();
    sc->add_option("--fiber-bound", p.fiber_bound)->required();
  }

  // indexed structures
  auto* indexed = group("indexed", "Indexed structures");
  verb(indexed, "validate", "Check an indexed structure",
       "An index structure with one label structure per index point, labels sharing a signature.",
       [](Context& ctx) { return diagnostics_json(validate_indexed(indexed_from_json(ctx.input(ctx.p.in)))); })
      ->add_option("--in", p.in)
      ->required();
  {
    auto* sc = verb(indexed, "compose", "Compose two indexed morphisms",
                    "g o f = (g.i o f.i, j -> g.l(f.i(j)) o f.l(j)) for index maps i and label maps l.",
                    [](Context& ctx) {
                      const auto g = morphism_from_json(ctx.input(ctx.p.g));
                      const auto f = morphism_from_json(ctx.input(ctx.p.f));
                      for (const auto* m : {&g, &f}) {
                        const auto d = validate_morphism(*m);
                        if (!d.ok()) throw SchemaError(m == &g ? "/g" : "/f", d.problems.front());
                      }
                      return Json{{"morphism", to_json(compose(g, f))}};
                    });
    sc->add_option("--g", p.g, "Outer morphism")->required();
    sc->add_option("--f", p.f, "Inner morphism")->required();
  }
  {
    auto* sc = verb(indexed, "copies", "Images of indexed embeddings",
                    "Images of pairs (index embedding, label embeddings) of A into the host.",
                    [](Context& ctx) {
                      const auto a = indexed_from_json(ctx.input(ctx.p.a));
                      const auto host = indexed_from_json(ctx.input(ctx.p.host));
                      Json arr = Json::array();
                      for (const auto& c : enumerate_indexed_copies(a, host)) arr.push_back(copy_json(c));
                      return Json{{"count", arr.size()}, {"copies", arr}};
                    });
    sc->add_option("--a", p.a)->required();
    sc->add_option("--host", p.host)->required();
  }
  {
    auto* sc = verb(indexed, "cofinal", "Embed into a constant labelling",
                    "(id, f): (J, A_j) -> (J, A) with A jointly embedding every label.",
                    [](Context& ctx) {
                      const auto x = indexed_from_json(ctx.input(ctx.p.in));
                      if (x.labels.empty()) throw SchemaError("/labels", "at least one label is required");
                      const auto jep = jep_by_name(ctx.p.jep, x.labels.front().signature());
                      return Json{{"morphism", to_json(cofinal_embed(x, jep))}};
                    });
    sc->add_option("--in", p.in)->required();
    sc->add_option("--jep", p.jep, "disjoint-union, concatenation or auto");
  }
  verb(indexed, "autorder", "Automorphism group order",
       "For constant labels: |Aut(A)|^|J| * |Aut(J)|; always also counted directly.",
       [](Context& ctx) {
         const auto x = indexed_from_json(ctx.input(ctx.p.in));
         Json r{{"counted", count_indexed_automorphisms(x)}};
         r["formula"] = is_constant(x) ? Json(indexed_aut_order(x)) : Json(nullptr);
         return r;
       })
      ->add_option("--in", p.in)
      ->required();
  {
    auto* sc = verb(indexed, "brdbound", "Box degree bound for a constant indexed structure",
                    "Box degree of (A_0, labels...) in the ambient, read from the degree table.",
                    [](Context& ctx) {
                      const auto a0 = ctx.structure(ctx.p.index, "index");
                      const auto labels = structures(ctx, ctx.p.label_structs, "label");
                      const auto amb = ctx.structure(ctx.p.ambient, "ambient");
                      DegreeTable table;
                      if (!ctx.p.table.empty()) table = degree_table_from_json(ctx.input(ctx.p.table));
                      return to_json(indexed_brd_bound(a0, labels, amb, table, ctx.p.assume_one));
                    });
    sc->add_option("--index", p.index)->required();
    sc->add_option("--label", p.label_structs)->required();
    sc->add_option("--ambient", p.ambient)->required();
    sc->add_option("--table", p.table);
  }

  // metric spaces
  auto* spectrum = group("spectrum", "Distance spectra");
  verb(spectrum, "blocks", "Block decomposition",
       "B_1 = distances at most twice the least; the remainder decomposed likewise.",
       [](Context& ctx) {
         Json blocks = Json::array();
         for (const auto& b : block_decompose(spectrum_from_json(ctx.input(ctx.p.in)))) {
           Json blk = Json::array();
           for (const auto& r : b) blk.push_back(rational_to_json(r));
           blocks.push_back(blk);
         }
         return Json{{"blocks", blocks}};
       })
      ->add_option("--in", p.in)
      ->required();
  verb(spectrum, "simple", "Simplicity and admissibility",
       "Simple: consecutive blocks satisfy 2 max(B_i) < min(B_(i+1)). Admissible: simple with block "
       "sizes k-1, 1, ..., 1.",
       [](Context& ctx) {
         const auto s = spectrum_from_json(ctx.input(ctx.p.in));
         Json r{{"simple", is_simple(s)}};
         try {
           r["admissible_k"] = admissible_k(s);
         } catch (const Error&) {
           r["admissible_k"] = nullptr;
         }
         return r;
       })
      ->add_option("--in", p.in)
      ->required();
  auto* metric = group("metric", "Finite metric spaces over a spectrum");
  auto metric_verb = [&](const std::string& name, const std::string& help, const std::string& explain,
                         std::function<Json(Context&, const MetricSpace&, const Spectrum&)> f) {
    auto* sc = verb(metric, name, help, explain, [f](Context& ctx) {
      const auto s = spectrum_from_json(ctx.input(ctx.p.spectrum), "/spectrum");
      return f(ctx, metric_from_json(ctx.input(ctx.p.in), "/in"), s);
    });
    sc->add_option("--in", p.in, "Distance matrix")->required();
    sc->add_option("--spectrum", p.spectrum)->required();
  };
  metric_verb("validate", "Check a distance matrix", "Symmetric, zero diagonal, values in the spectrum, triangle inequality.",
              [](Context&, const MetricSpace& x, const Spectrum& s) { return diagnostics_json(validate_metric(x, s)); });
  metric_verb("partition", "Classes of ~", "x ~ y iff x = y or d(x, y) lies in B_1.",
              [](Context&, const MetricSpace& x, const Spectrum& s) {
                return Json{{"classes", sim_partition(x, s)}};
              });
  metric_verb("encode", "Encode as an indexed coloured graph",
              "Index points are the ~ classes; colour C(j-1) between classes means distance s_(k-1+j), inside a "
              "class distance s_j.",
              [](Context&, const MetricSpace& x, const Spectrum& s) {
                const auto e = encode_F(x, s);
                return Json{{"indexed", to_json(e.structure)}, {"classes", e.classes}};
              });
  {
    auto* sc = verb(metric, "decode", "Decode an indexed coloured graph",
                    "Inverse of the encoding: colours read back as distances.",
                    [](Context& ctx) {
                      const auto s = spectrum_from_json(ctx.input(ctx.p.spectrum), "/spectrum");
                      const auto x = indexed_from_json(ctx.input(ctx.p.in), "/in");
                      return Json{{"distances", to_json(decode_F(x, s))}};
                    });
    sc->add_option("--in", p.in, "Indexed structure")->required();
    sc->add_option("--spectrum", p.spectrum)->required();
  }

  // oracle
  auto* oracle = group("oracle", "Brute-force oracles");
  {
    auto* sc = verb(oracle, "ramsey", "Exhaustive finite Ramsey check",
                    "Every k-colouring of the copies of A in C admits a copy of B whose copies of A take at "
                    "most t colours.",
                    [](Context& ctx) {
                      RamseyInstance inst{ctx.structure(ctx.p.c, "c"), ctx.structure(ctx.p.b, "b"),
                                          ctx.structure(ctx.p.a, "a"), ctx.p.k, ctx.p.threshold};
                      const auto r = exhaustive_ramsey_check(inst, ctx.p.budget, !ctx.p.no_reduce);
                      if (r.verdict == RamseyResult::Verdict::BudgetExceeded) {
                        Json j = to_json(r);
                        throw Budget(j.dump());
                      }
                      return to_json(r);
                    });
    sc->add_option("--c", p.c)->required();
    sc->add_option("--b", p.b)->required();
    sc->add_option("--a", p.a)->required();
    sc->add_option("--k", p.k, "Number of colours")->required();
    sc->add_option("--t", p.threshold, "Colours allowed on the copy of B");
    sc->add_flag("--no-reduce", p.no_reduce, "Search all colourings, not just normalised ones");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_code::domain_error;
  }

  const Verb* chosen = nullptr;
  for (const auto& [sc, v] : verbs)
    if (sc->parsed()) chosen = &v;
  if (!chosen) {
    err << "error: no verb given\n" << usage_hint() << "\n";
    return exit_code::domain_error;
  }

  Context ctx{p, {}};
  Json report{{"verb", chosen->name}, {"seed", p.seed}};
  int status = exit_code::ok;
  try {
    report["result"] = chosen->body(ctx);
  } catch (const Budget& e) {
    report["result"] = Json::parse(e.what());
    status = exit_code::budget_exceeded;
  } catch (const BudgetExceeded& e) {
    report["result"] = {{"verdict", "budget-exceeded"}, {"message", e.what()}};
    status = exit_code::budget_exceeded;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::domain_error;
  }
  if (p.explain) report["explain"] = chosen->explain;

  std::string digest_input = chosen->name;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i] == "--explain" || args[i].rfind("--out=", 0) == 0) continue;
    const auto it = ctx.inputs.find(args[i]);
    digest_input += '\n';
    digest_input += it == ctx.inputs.end() ? args[i] : it->second;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(digest_input);
  report["inputs_digest"] = hex.str();

  const std::string text = report.dump(2) + "\n";
  if (p.out.empty()) {
    out << text;
  } else {
    std::ofstream f(p.out);
    if (!f) {
      err << "error: cannot write " << p.out << "\n";
      return exit_code::domain_error;
    }
    f << text;
  }
  return status;
}

}  // namespace boxram
