#pragma once

// JSON forms of the library's values. Parse errors carry a JSON pointer to
// the offending field.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "boxram/boxdeg.hpp"
#include "boxram/codingtree.hpp"
#include "boxram/error.hpp"
#include "boxram/indexed.hpp"
#include "boxram/metric.hpp"
#include "boxram/oracle.hpp"
#include "boxram/structure.hpp"

namespace boxram {

using Json = nlohmann::json;

struct SchemaError : Error {
  SchemaError(const std::string& pointer, const std::string& what);
  std::string pointer;
};

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& text_or_path);

Json to_json(const FinStructure& s);
FinStructure structure_from_json(const Json& j, const std::string& at = "");

Json to_json(const IndexedStructure& x);
IndexedStructure indexed_from_json(const Json& j, const std::string& at = "");
Json to_json(const IndexedMorphism& m);
IndexedMorphism morphism_from_json(const Json& j, const std::string& at = "");

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& at = "");
Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j, const std::string& at = "");
Json to_json(const MetricSpace& x);
/// Square nested arrays, or a flat row-major array of n*n entries.
MetricSpace metric_from_json(const Json& j, const std::string& at = "");

/// An array of {"structure": <structure or path>, "degree": t}, or an object
/// mapping structure file paths to degrees.
DegreeTable degree_table_from_json(const Json& j, const std::string& at = "");
Json to_json(const DegreeTable& t);

Json to_json(const SimClass& c);
Json to_json(const BoxDegreeResult& r);
Json to_json(const DiagonalTree& t);
Json words_to_json(const std::vector<Word>& words);
std::vector<Word> words_from_json(const Json& j, const std::string& at = "");
Json to_json(const RamseyResult& r);

template <class T>
T field_as(const Json& j, const std::string& key, const std::string& at) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(at + "/" + key, "missing field");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError(at + "/" + key, "wrong type");
  }
}

}  // namespace boxram
