#include "liexp/report.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <nlohmann/json.hpp>

namespace liexp {

namespace {

using nlohmann::ordered_json;

std::string pair_label(const PairReport& p) { return fmt::format("[{}',{}']", p.left, p.right); }

const char* outcome(const ClosureReport& r) {
  if (r.expect_failure) return r.as_expected() ? "failed as expected" : "UNEXPECTED";
  return r.closed() ? "closed" : "FAILED";
}

}  // namespace

std::string closure_json(const ClosureReport& r, const ReportOptions& options) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = "closure";
  doc["driver"] = r.driver;
  doc["initial"] = r.initial;
  doc["target"] = r.target;
  doc["expect_failure"] = r.expect_failure;
  doc["outcome"] = {{"closed", r.closed()},
                    {"as_expected", r.as_expected()},
                    {"failure", to_string(r.failure)},
                    {"first_failure", r.first_failure}};
  doc["seed"] = r.seed;
  doc["fixed_set"] = r.fixed_set;
  ordered_json gens = ordered_json::object();
  for (const auto& [k, v] : r.generators) gens[k + "'"] = v;
  doc["generators"] = std::move(gens);
  doc["constraints"] = r.constraints;
  ordered_json witness = ordered_json::object();
  for (const auto& [k, v] : r.witness) witness[k] = v;
  doc["witness"] = std::move(witness);
  doc["notes"] = r.notes;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"pairs", r.pairs.size()},
                    {"exact_zero", r.count(Verdict::ExactZero)},
                    {"template_match", r.count(Verdict::TemplateMatch)},
                    {"mismatch", r.count(Verdict::Mismatch)}};
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.pairs) {
    ordered_json e;
    e["pair"] = pair_label(p);
    e["phase1"] = p.phase1_ok ? "pass" : p.phase1_residual;
    e["scalarized"] = p.scalarized;
    e["target"] = p.target;
    e["verdict"] = to_string(p.verdict);
    if (!p.detail.empty()) e["detail"] = p.detail;
    pairs.push_back(std::move(e));
  }
  doc["pairs"] = std::move(pairs);
  if (options.timing) doc["timing_ms"] = r.elapsed_ms;
  return doc.dump(2) + "\n";
}

std::string closure_text(const ClosureReport& r, const ReportOptions& options) {
  std::string out;
  auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };
  line(fmt::format("expand {}: {} -> {}", r.driver, r.initial, r.target));
  line("  seed: " + r.seed);
  line(fmt::format("  fixed: {{{}}}", fmt::join(r.fixed_set, ", ")));
  if (options.verbose)
    for (const auto& [k, v] : r.generators) line(fmt::format("  {}' = {}", k, v));
  for (const auto& c : r.constraints) line("  constraint: " + c);
  std::vector<std::string> w;
  for (const auto& [k, v] : r.witness) w.push_back(k + "=" + v);
  line(fmt::format("  witness: {}", fmt::join(w, ", ")));
  for (const auto& n : r.notes) line("  note: " + n);
  for (const auto& c : r.checks)
    if (options.verbose || !c.ok)
      line(fmt::format("  check {}: {}{}", c.name, c.ok ? "ok" : "FAIL",
                       c.detail.empty() ? "" : " (" + c.detail + ")"));
  for (const auto& p : r.pairs)
    if (options.verbose || p.verdict == Verdict::Mismatch)
      line(fmt::format("  {} {}: {} (target {}){}", pair_label(p), to_string(p.verdict),
                       p.scalarized, p.target, p.detail.empty() ? "" : "; " + p.detail));
  line(fmt::format("  pairs: {} ({} exact_zero, {} template_match, {} mismatch)", r.pairs.size(),
                   r.count(Verdict::ExactZero), r.count(Verdict::TemplateMatch),
                   r.count(Verdict::Mismatch)));
  if (r.failure != Failure::None)
    line(fmt::format("  failure: {}: {}", to_string(r.failure), r.first_failure));
  if (options.timing) line(fmt::format("  time: {:.1f} ms", r.elapsed_ms));
  line(fmt::format("  result: {}", outcome(r)));
  return out;
}

}  // namespace liexp
