#include "liexp/algebra_io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace liexp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void syntax_error(const std::string& what, std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(what, offset, line, col);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(fmt::format("{}: missing \"{}\"", where, key));
  return *it;
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(where + ": expected a string");
  return v.get<std::string>();
}

Poly coefficient(const json& v, const ContextPtr& ctx, const std::string& where) {
  if (v.is_number_integer()) return Poly::constant(ctx, Rational(v.get<long>()));
  const std::string text = string_at(v, where);
  try {
    return parse_poly(text, ctx);
  } catch (const ParseError& e) {
    throw Error(fmt::format("{}: {}", where, e.what()));
  }
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::string msg = e.what();
    // nlohmann reports the 1-based byte of the failure.
    syntax_error(msg.substr(msg.find(':') + 2), text, e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) throw Error("algebra definition must be a JSON object");

  const std::string name = string_at(field(doc, "name", "algebra"), "name");
  std::vector<std::string> params;
  if (auto it = doc.find("parameters"); it != doc.end()) {
    if (!it->is_array()) throw Error("parameters: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      params.push_back(string_at((*it)[i], fmt::format("parameters[{}]", i)));
  }
  const ContextPtr ctx = ParamContext::make(params);

  const json& gens_json = field(doc, "generators", "algebra");
  if (!gens_json.is_array()) throw Error("generators: expected an array");
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < gens_json.size(); ++i)
    gens.push_back(string_at(gens_json[i], fmt::format("generators[{}]", i)));

  LieAlgebra::Builder b(name, gens, ctx);
  auto generator = [&](const json& v, const std::string& where) {
    const std::string g = string_at(v, where);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == g) return i;
    throw Error(fmt::format("{}: unknown generator '{}'", where, g));
  };
  if (auto it = doc.find("brackets"); it != doc.end()) {
    if (!it->is_array()) throw Error("brackets: expected an array");
    for (std::size_t n = 0; n < it->size(); ++n) {
      const json& entry = (*it)[n];
      const std::string where = fmt::format("brackets[{}]", n);
      if (!entry.is_object()) throw Error(where + ": expected an object");
      const std::size_t left = generator(field(entry, "left", where), where + ".left");
      const std::size_t right = generator(field(entry, "right", where), where + ".right");
      BracketTerms terms;
      const json& terms_json = field(entry, "terms", where);
      if (!terms_json.is_array()) throw Error(where + ".terms: expected an array");
      for (std::size_t t = 0; t < terms_json.size(); ++t) {
        const std::string tw = fmt::format("{}.terms[{}]", where, t);
        const json& term = terms_json[t];
        if (!term.is_object()) throw Error(tw + ": expected an object");
        terms.push_back({generator(field(term, "gen", tw), tw + ".gen"),
                         coefficient(field(term, "coeff", tw), ctx, tw + ".coeff")});
      }
      try {
        b.add(left, right, terms);
      } catch (const Error& e) {
        throw Error(fmt::format("{}: {}", where, e.what()));
      }
    }
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw Error("metadata: expected an object");
    for (const auto& [key, value] : it->items())
      b.metadata(key, string_at(value, "metadata." + key));
  }

  LieAlgebra alg = b.build();
  if (!options.allow_non_lie) {
    auto violations = jacobi_check(alg);
    if (!violations.empty()) {
      const auto lines = describe(alg, violations);
      std::string what = fmt::format("{} violates the Jacobi identity on {} triple(s); first {}",
                                     alg.name(), violations.size(), lines.front());
      throw JacobiError(std::move(what), std::move(violations));
    }
  }
  return alg;
}

LieAlgebra parse_algebra_file(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra(ss.str(), options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.message(), e.offset(), e.line(), e.column());
  }
}

std::string emit_algebra(const LieAlgebra& alg) {
  ordered_json doc;
  doc["name"] = alg.name();
  doc["parameters"] = alg.context() ? alg.context()->names() : std::vector<std::string>{};
  doc["generators"] = alg.generators();
  ordered_json brackets = ordered_json::array();
  for (const auto& [key, terms] : alg.brackets()) {
    if (terms.empty()) continue;
    BracketTerms sorted = terms;
    std::sort(sorted.begin(), sorted.end(),
              [](const BracketTerm& a, const BracketTerm& b) { return a.gen < b.gen; });
    ordered_json entry;
    entry["left"] = alg.generators()[key.first];
    entry["right"] = alg.generators()[key.second];
    ordered_json list = ordered_json::array();
    for (const auto& t : sorted) {
      ordered_json term;
      term["gen"] = alg.generators()[t.gen];
      term["coeff"] = t.coeff.str();
      list.push_back(std::move(term));
    }
    entry["terms"] = std::move(list);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : alg.metadata()) meta[k] = v;
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

std::vector<std::string> describe(const LieAlgebra& alg, const std::vector<JacobiViolation>& v) {
  std::vector<std::string> out;
  const auto& g = alg.generators();
  for (const auto& x : v)
    out.push_back(fmt::format("[{},{},{}]: {}", g[x.i], g[x.j], g[x.k],
                              format_vector(alg, x.residual)));
  return out;
}

}  // namespace liexp
