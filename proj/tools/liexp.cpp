// liexp: command-line front end for the algebra library.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "liexp/algebra_io.hpp"
#include "liexp/catalog.hpp"
#include "liexp/contraction.hpp"
#include "liexp/corpus.hpp"
#include "liexp/expansion.hpp"
#include "liexp/expression.hpp"
#include "liexp/properties.hpp"
#include "liexp/report.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace liexp;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string format = "text";
  bool verbose = false;
  bool timing = false;
  bool allow_non_lie = false;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<std::string> witness;
};

/// Output of one command: text and JSON forms plus the exit status.
struct Result {
  std::string text;
  ordered_json json;
  int status = kOk;
};

ordered_json header(const char* kind) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = kind;
  return j;
}

AlgebraPtr load(const std::string& spec, const Config& cfg) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return catalog(spec);
  if (!fs::exists(spec))
    throw Error(fmt::format("'{}' is neither a catalog algebra ({}) nor a file", spec,
                            fmt::join(names, ", ")));
  return std::make_shared<const LieAlgebra>(parse_algebra_file(spec, {cfg.allow_non_lie}));
}

std::string read_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error("cannot open " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parse `name=value` overrides; values must be exact rationals.
std::vector<std::pair<std::string, Rational>> parse_overrides(const std::vector<std::string>& items) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(fmt::format("witness override '{}' is not of the form name=value", item));
    out.emplace_back(canonical_parameter(item.substr(0, eq)), parse_rational(item.substr(eq + 1)));
  }
  return out;
}

AlgebraPtr with_overrides(const AlgebraPtr& alg, const Config& cfg) {
  if (cfg.witness.empty()) return alg;
  Assignment values;
  for (const auto& [k, v] : parse_overrides(cfg.witness)) {
    if (!alg->context() || !alg->context()->index_of(k))
      throw Error(fmt::format("{} has no parameter '{}'", alg->name(), k));
    values.emplace(k, Poly(v));
  }
  return std::make_shared<const LieAlgebra>(specialize(*alg, values));
}

// Commands --------------------------------------------------------------------

Result check_jacobi(const std::string& spec, Config cfg) {
  cfg.allow_non_lie = true;
  const AlgebraPtr alg = load(spec, cfg);
  Result r;
  const std::size_t n = alg->dim();
  const std::size_t triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  const auto violations = jacobi_check(*alg);
  const auto lines = describe(*alg, violations);
  r.json = header("jacobi");
  r.json["algebra"] = alg->name();
  r.json["triples"] = triples;
  r.json["ok"] = violations.empty();
  r.json["violations"] = lines;
  r.text = fmt::format("{}: jacobi {} ({} triples, {} violations)\n", alg->name(),
                       violations.empty() ? "ok" : "FAILED", triples, violations.size());
  for (const auto& l : lines) r.text += "  " + l + "\n";

  // Kinematical algebras also get the parity checks and Cartan splits.
  bool kinematical = true;
  for (const char* g : {"H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"})
    kinematical = kinematical && alg->index_of(g).has_value();
  if (kinematical && violations.empty()) {
    ordered_json extra = ordered_json::array();
    auto automorphism = [&](const char* label, const LinearMap& f) {
      const CheckResult c = automorphism_check(*alg, f);
      extra.push_back({{"check", label}, {"ok", c.ok}, {"detail", c.violation}});
      r.text += fmt::format("  {} automorphism: {}{}\n", label, c.ok ? "ok" : "FAILED",
                            c.ok ? "" : " (" + c.violation + ")");
      if (!c.ok) r.status = kFailed;
    };
    automorphism("Pi", parity(*alg));
    automorphism("PiT", parity_time_reversal(*alg));
    for (const auto& d : {spacetime_split(*alg), worldline_split(*alg)}) {
      const DecompositionReport rep = decomposition_check(*alg, d);
      const char* pp = rep.pp == Containment::Zero ? "0" : rep.pp == Containment::InH ? "h" : "other";
      extra.push_back({{"check", "split " + d.label},
                       {"hh_in_h", rep.hh_in_h},
                       {"hp_in_p", rep.hp_in_p},
                       {"pp", pp}});
      r.text += fmt::format("  {} split: [h,h] in h {}, [h,p] in p {}, [p,p] in {}\n", d.label,
                            rep.hh_in_h, rep.hp_in_p, pp);
    }
    r.json["structure"] = std::move(extra);
  }
  if (!violations.empty()) r.status = kFailed;
  return r;
}

Result bracket_cmd(const std::string& spec, const std::string& x, const std::string& y,
                   const Config& cfg) {
  const AlgebraPtr alg = with_overrides(load(spec, cfg), cfg);
  const UEAElement v = commutator(parse_element(read_arg(x), alg), parse_element(read_arg(y), alg));
  Result r;
  r.text = v.str() + "\n";
  r.json = header("bracket");
  r.json["algebra"] = alg->name();
  r.json["left"] = x;
  r.json["right"] = y;
  r.json["result"] = v.str();
  return r;
}

Result normal_form_cmd(const std::string& spec, const std::string& expr, const Config& cfg) {
  const AlgebraPtr alg = with_overrides(load(spec, cfg), cfg);
  const UEAElement v = parse_element(read_arg(expr), alg);
  Result r;
  r.text = v.str() + "\n";
  r.json = header("normal_form");
  r.json["algebra"] = alg->name();
  r.json["input"] = read_arg(expr);
  r.json["terms"] = v.size();
  r.json["degree"] = v.degree();
  r.json["result"] = v.str();
  return r;
}

Result identity_cmd(const std::string& spec, const std::string& lhs, const std::string& rhs,
                    const Config& cfg) {
  const AlgebraPtr alg = with_overrides(load(spec, cfg), cfg);
  const IdentityResult id = verify_identity(alg, read_arg(lhs), read_arg(rhs));
  Result r;
  r.text = id.ok ? "identity holds\n" : "identity FAILS; residual " + id.residual.str() + "\n";
  r.json = header("identity");
  r.json["algebra"] = alg->name();
  r.json["lhs"] = read_arg(lhs);
  r.json["rhs"] = read_arg(rhs);
  r.json["ok"] = id.ok;
  r.json["residual"] = id.residual.str();
  r.status = id.ok ? kOk : kFailed;
  return r;
}

Result casimir_cmd(const std::vector<std::string>& specs, const Config& cfg) {
  Result r;
  r.json = header("casimir");
  ordered_json rows = ordered_json::array();
  auto add = [&](const std::string& alg, const std::string& elem, bool central,
                 const std::string& detail) {
    rows.push_back({{"algebra", alg}, {"element", elem}, {"central", central}, {"detail", detail}});
    r.text += fmt::format("{} {}: {}{}\n", alg, elem, central ? "central" : "NOT central",
                          detail.empty() ? "" : " (" + detail + ")");
    if (!central) r.status = kFailed;
  };
  if (specs.empty()) {
    for (const auto& c : casimir_centrality()) add(c.algebra, c.element, c.central, c.detail);
  } else {
    for (const auto& spec : specs) {
      const AlgebraPtr alg = load(spec, cfg);
      const auto keys = named_keys(*alg);
      bool any = false;
      for (const char* key : {"C1", "C2"}) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) continue;
        any = true;
        const Centrality c = is_central(named_element(alg, key));
        add(alg->name(), key, c.central,
            c.central ? "" : fmt::format("[{}, {}] = {}", key, alg->generators()[*c.witness],
                                         c.residual->str()));
      }
      for (std::size_t g = 0; g < alg->dim(); ++g) {
        const Centrality c = is_central(UEAElement::generator(alg, g));
        if (c.central) {
          any = true;
          add(alg->name(), alg->generators()[g], true, "");
        }
      }
      if (!any) r.text += alg->name() + ": no Casimir elements defined\n";
    }
  }
  r.json["results"] = std::move(rows);
  return r;
}

Result expand_cmd(const std::string& driver, bool formal, int alpha2_sign, const Config& cfg) {
  const auto overrides = parse_overrides(cfg.witness);
  auto merged = [&](Witness w) {
    for (const auto& [k, v] : overrides) w.values.insert_or_assign(k, Poly(v));
    return w;
  };
  ClosureReport rep;
  if (driver == "poincare") {
    rep = run_theorem1(merged(theorem1_witness(alpha2_sign)));
  } else if (driver == "euclid4") {
    Witness w = euclid_witness();
    if (alpha2_sign < 0) {
      w.values.insert_or_assign("a2", Poly(-1));
      w.values.insert_or_assign("a1", Poly(Rational(-1, 4)));
      w.note = "a2 takes the negative root of its square";
    }
    rep = run_euclid(merged(w));
  } else if (driver == "newton_hooke") {
    if (formal) {
      if (!overrides.empty()) throw Error("--formal does not take witness overrides");
      rep = run_theorem2_formal();
    } else {
      rep = run_theorem2(merged(theorem2_witness()));
    }
  } else if (driver == "negative-nh") {
    if (!overrides.empty()) throw Error("negative-nh does not take witness overrides");
    rep = run_negative_nh();
  } else {
    throw Error("unknown driver '" + driver + "' (poincare, euclid4, newton_hooke, negative-nh)");
  }
  const ReportOptions opts{cfg.timing, cfg.verbose};
  Result r;
  r.text = closure_text(rep, opts);
  r.json = ordered_json::parse(closure_json(rep, opts));
  r.status = rep.as_expected() ? kOk : kFailed;
  return r;
}

Result contract_cmd(const std::string& spec, const std::optional<std::string>& param,
                    const Config& cfg) {
  const AlgebraPtr alg = load(spec, cfg);
  Result r;
  r.json = header("contraction");
  r.json["algebra"] = alg->name();
  ordered_json rows = ordered_json::array();
  for (const auto& o : contraction_roundtrips(*alg, param)) {
    rows.push_back({{"kind", o.kind},
                    {"description", o.description},
                    {"equals", o.compared_with},
                    {"equal", o.equal()},
                    {"difference", o.difference.value_or("")}});
    r.text += fmt::format("{}: {}\n  equals catalog {}: {}{}\n", o.kind, o.description,
                          o.compared_with, o.equal() ? "true" : "false",
                          o.equal() ? "" : " (" + *o.difference + ")");
    if (cfg.verbose) r.text += emit_algebra(o.result);
    if (!o.equal()) r.status = kFailed;
  }
  r.json["results"] = std::move(rows);
  return r;
}

Result corpus_cmd(const Config& cfg, std::size_t samples) {
  const std::uint64_t seed = cfg.seed_given ? cfg.seed : std::random_device{}();
  Result r;
  r.json = header("corpus");
  r.json["seed"] = seed;
  r.text = fmt::format("seed {}\n", seed);

  std::size_t failed = 0;
  ordered_json ids = ordered_json::array();
  const auto outcomes = check_identities(catalog("galilei"), appendix_identities());
  for (const auto& o : outcomes) {
    ids.push_back({{"group", o.identity.group}, {"id", o.identity.id}, {"ok", o.ok}, {"residual", o.residual}});
    if (!o.ok) {
      ++failed;
      r.text += fmt::format("  FAIL {} {}: residual {}\n", o.identity.group, o.identity.id, o.residual);
    } else if (cfg.verbose) {
      r.text += fmt::format("  ok {} {}\n", o.identity.group, o.identity.id);
    }
  }
  r.text += fmt::format("identities: {}/{} hold\n", outcomes.size() - failed, outcomes.size());
  r.json["identities"] = std::move(ids);

  ordered_json cent = ordered_json::array();
  std::size_t noncentral = 0;
  const auto centrality = casimir_centrality();
  for (const auto& c : centrality) {
    cent.push_back({{"algebra", c.algebra}, {"element", c.element}, {"central", c.central}});
    if (!c.central) {
      ++noncentral;
      r.text += fmt::format("  NOT central: {} {} ({})\n", c.algebra, c.element, c.detail);
    }
  }
  r.text += fmt::format("centrality: {}/{} central\n", centrality.size() - noncentral,
                        centrality.size());
  r.json["centrality"] = std::move(cent);

  PropertyOptions opts;
  opts.ring_samples = std::max<std::size_t>(samples, 200);
  opts.pbw_samples = opts.assoc_samples = opts.jacobi_samples = samples;
  ordered_json props = ordered_json::array();
  std::size_t prop_failed = 0;
  for (const auto& p : run_properties(seed, opts)) {
    props.push_back({{"name", p.name},
                     {"samples", p.samples},
                     {"failures", p.failures},
                     {"first_failure", p.first_failure}});
    if (!p.ok()) {
      ++prop_failed;
      r.text += fmt::format("  FAIL {}: {} of {} ({})\n", p.name, p.failures, p.samples,
                            p.first_failure);
    } else if (cfg.verbose) {
      r.text += fmt::format("  ok {} ({} samples)\n", p.name, p.samples);
    }
  }
  r.text += fmt::format("properties: {} failing\n", prop_failed);
  r.json["properties"] = std::move(props);
  r.json["ok"] = failed == 0 && noncentral == 0 && prop_failed == 0;
  r.status = r.json["ok"].get<bool>() ? kOk : kFailed;
  return r;
}

fs::path output_dir(const Config& cfg) {
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  if (const char* env = std::getenv("LIEXP_OUT_DIR"); env && *env) return env;
  return "reports";
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

Result report_cmd(const Config& cfg) {
  const fs::path dir = output_dir(cfg);
  const ReportOptions opts{cfg.timing, cfg.verbose};
  Result r;
  r.json = header("report_index");
  ordered_json rows = ordered_json::array();
  const std::pair<const char*, ClosureReport (*)()> drivers[] = {
      {"poincare", [] { return run_theorem1(); }},
      {"euclid4", [] { return run_euclid(); }},
      {"newton_hooke", [] { return run_theorem2(); }},
      {"newton_hooke_formal", [] { return run_theorem2_formal(); }},
      {"negative-nh", [] { return run_negative_nh(); }},
  };
  for (const auto& [name, run] : drivers) {
    const ClosureReport rep = run();
    const fs::path file = dir / (std::string(name) + ".json");
    write_file(file, closure_json(rep, opts));
    rows.push_back({{"driver", name}, {"file", file.filename().string()}, {"as_expected", rep.as_expected()}});
    r.text += fmt::format("{}: {} -> {}\n", name, rep.as_expected() ? "as expected" : "UNEXPECTED",
                          file.string());
    if (!rep.as_expected()) r.status = kFailed;
  }
  r.json["reports"] = std::move(rows);
  write_file(dir / "index.json", r.json.dump(2) + "\n");
  return r;
}

int emit(const Result& r, const Config& cfg, const std::string& name) {
  const std::string body = cfg.format == "json" ? r.json.dump(2) + "\n" : r.text;
  std::cout << body;
  if (!cfg.out_dir.empty() && name != "report")
    write_file(fs::path(cfg.out_dir) / (name + (cfg.format == "json" ? ".json" : ".txt")), body);
  return r.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra expansion toolkit: structure checks, enveloping-algebra arithmetic and "
               "Casimir-based expansions of kinematical algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("-v,--verbose", cfg.verbose, "List every check and bracket");
  app.add_flag("--timing", cfg.timing, "Include wall-clock time in reports");
  app.add_flag("--allow-non-lie", cfg.allow_non_lie, "Load algebra files that violate Jacobi");
  app.add_option("--out", cfg.out_dir, "Output directory (default $LIEXP_OUT_DIR or ./reports)");
  app.add_option("--seed", cfg.seed, "Random seed for property sampling")
      ->each([&](const std::string&) { cfg.seed_given = true; });
  app.add_option("-w,--witness", cfg.witness, "Parameter override name=rational (repeatable)");

  std::string alg_spec, x, y, expr, lhs, rhs, driver;
  std::vector<std::string> specs;
  std::optional<std::string> param;
  bool formal = false;
  int alpha2_sign = 1;
  std::size_t samples = 100;

  auto* jac = app.add_subcommand("check-jacobi", "Check the Jacobi identity (and parities)");
  jac->add_option("algebra", alg_spec, "Catalog name or .alg file")->required();
  auto* br = app.add_subcommand("bracket", "Commutator of two elements, e.g. J1 J2");
  br->add_option("algebra", alg_spec)->required();
  br->add_option("x", x)->required();
  br->add_option("y", y)->required();
  auto* nf = app.add_subcommand("normal-form", "PBW normal form of an expression (@file reads a file)");
  nf->add_option("algebra", alg_spec)->required();
  nf->add_option("expression", expr)->required();
  auto* cas = app.add_subcommand("casimir-check", "Centrality of C1, C2 and central generators");
  cas->add_option("algebras", specs, "Default: every catalog algebra");
  auto* idn = app.add_subcommand("identity", "Verify lhs = rhs by normal forms");
  idn->add_option("algebra", alg_spec)->required();
  idn->add_option("lhs", lhs)->required();
  idn->add_option("rhs", rhs)->required();
  auto* exp = app.add_subcommand("expand", "Run an expansion driver");
  exp->add_option("driver", driver, "poincare | euclid4 | newton_hooke | negative-nh")
      ->required()
      ->check(CLI::IsMember({"poincare", "euclid4", "newton_hooke", "negative-nh"}));
  exp->add_flag("--formal", formal, "newton_hooke at kappa=+1 with a1 formal (a1^2 = -1)");
  exp->add_option("--alpha2-sign", alpha2_sign, "Root chosen for a2 (+1 or -1)")
      ->check(CLI::IsMember({-1, 1}));
  auto* con = app.add_subcommand("contract", "Parameter and Inonu-Wigner contraction round trips");
  con->add_option("algebra", alg_spec)->required();
  con->add_option("--param", param, "Curvature parameter (omega/ω, kappa/κ)");
  auto* cor = app.add_subcommand("corpus", "Appendix identities, centrality and property sampling");
  cor->add_option("--samples", samples, "Samples per property and algebra")->capture_default_str();
  app.add_subcommand("report", "Write JSON reports for every driver to the output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    Result r;
    if (name == "check-jacobi") r = check_jacobi(alg_spec, cfg);
    else if (name == "bracket") r = bracket_cmd(alg_spec, x, y, cfg);
    else if (name == "normal-form") r = normal_form_cmd(alg_spec, expr, cfg);
    else if (name == "casimir-check") r = casimir_cmd(specs, cfg);
    else if (name == "identity") r = identity_cmd(alg_spec, lhs, rhs, cfg);
    else if (name == "expand") r = expand_cmd(driver, formal, alpha2_sign, cfg);
    else if (name == "contract") r = contract_cmd(alg_spec, param, cfg);
    else if (name == "corpus") r = corpus_cmd(cfg, samples);
    else r = report_cmd(cfg);
    return emit(r, cfg, name);
  } catch (const JacobiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
