#include <fstream>
#include <ostream>

#include "json.hpp"
#include "qcover/cli.hpp"
#include "qcover/errors.hpp"

namespace qcover::cli {

using json = nlohmann::ordered_json;

namespace {

json to_json(const CensusRecord& r) {
  const CoveringOctuple& o = r.octuple;
  auto type = [](const HypermapType& t) { return json::array({t.ox, t.oy, t.oxy}); };
  auto flag = [](bool b) { return b ? 1 : 0; };
  json j;
  j["m"] = o.m;
  j["n"] = o.n;
  j["d"] = o.d;
  j["alpha"] = o.alpha;
  j["beta"] = o.beta;
  j["gamma"] = o.gamma;
  j["delta"] = o.delta;
  j["epsilon"] = o.epsilon;
  j["group_order"] = r.group_order;
  j["type"] = type(r.type);
  j["genus"] = r.genus;
  j["predicted_type"] = type(r.predicted.type);
  j["predicted_genus"] = r.predicted.genus;
  j["reflexible"] = flag(r.symmetry_group.reflexible);
  j["symmetric"] = flag(r.symmetry_group.symmetric);
  j["self_petrie"] = flag(r.symmetry_group.self_petrie);
  j["triply_self_dual"] = flag(r.symmetry_group.triply_self_dual);
  j["smooth_v"] = flag(r.branch.smooth_v);
  j["smooth_e"] = flag(r.branch.smooth_e);
  j["smooth_f"] = flag(r.branch.smooth_f);
  j["k_invariant_factors"] = r.k_invariant_factors;
  j["fingerprint"] = r.fingerprint.summary();
  j["consistent"] = flag(r.consistent);
  return j;
}

std::string tsv_cell(const json& v) {
  if (!v.is_array()) return v.dump();
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : ",") + e.dump();
  return s;
}

// Routes output to the configured file, or to `fallback` when none is set.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      out_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_) throw InvalidArgument("cannot open output file " + path);
    out_ = &file_;
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

int report_exit(const std::vector<CheckItem>& items) {
  for (const auto& i : items)
    if (i.status == CheckStatus::fail) return exit_code::verification_failure;
  return exit_code::ok;
}

}  // namespace

const std::vector<std::string>& record_keys() {
  static const std::vector<std::string> keys = {
      "m",          "n",          "d",           "alpha",         "beta",           "gamma",
      "delta",      "epsilon",    "group_order", "type",          "genus",          "predicted_type",
      "predicted_genus", "reflexible", "symmetric", "self_petrie", "triply_self_dual", "smooth_v",
      "smooth_e",   "smooth_f",   "k_invariant_factors", "fingerprint", "consistent"};
  return keys;
}

std::string record_jsonl(const CensusRecord& r) { return to_json(r).dump(); }

std::string tsv_header() {
  std::string s;
  for (const auto& k : record_keys()) s += (s.empty() ? "" : "\t") + k;
  return s;
}

std::string record_tsv(const CensusRecord& r) {
  const json j = to_json(r);
  std::string s;
  for (const auto& [key, value] : j.items()) s += (s.empty() ? "" : "\t") + tsv_cell(value);
  return s;
}

void print_report(std::ostream& out, const std::vector<CheckItem>& items) {
  for (const auto& i : items) out << to_string(i.status) << '\t' << i.id << '\t' << i.detail << '\n';
}

int cmd_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "jsonl" && config.format != "tsv") throw InvalidArgument("format must be jsonl or tsv");
  const auto records = enumerate_census(config.max_mnd, {config.max_cosets, config.jobs});
  Sink sink(config.out_path, out);
  std::ostream& o = sink.get();
  if (config.format == "tsv") o << tsv_header() << '\n';
  std::size_t inconsistent = 0, exhausted = 0;
  for (const auto& r : records) {
    o << (config.format == "tsv" ? record_tsv(r) : record_jsonl(r)) << '\n';
    if (r.resource_failure)
      ++exhausted;
    else if (!r.consistent)
      ++inconsistent;
  }
  err << records.size() << " coverings with mnd <= " << config.max_mnd << ", " << inconsistent << " inconsistent, "
      << exhausted << " out of budget\n";
  if (exhausted) return exit_code::resource_error;
  return inconsistent ? exit_code::verification_failure : exit_code::ok;
}

int cmd_verify_tables(std::optional<int> table, Int bound, const CliConfig& config, std::ostream& out,
                      std::ostream&) {
  std::vector<CheckItem> items;
  for (int t = 1; t <= 4; ++t) {
    if (table && *table != t) continue;
    auto part = verify_table(t, bound, config.max_cosets);
    items.insert(items.end(), part.begin(), part.end());
  }
  print_report(out, items);
  return report_exit(items);
}

int cmd_smoke(const CliConfig& config, std::ostream& out, std::ostream&) {
  const auto items = smoke_checks(config.max_cosets);
  print_report(out, items);
  return report_exit(items);
}

int cmd_inspect(const std::vector<Int>& params, const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (params.size() != 8) throw InvalidArgument("inspect needs m n d alpha beta gamma delta epsilon");
  const CoveringOctuple o =
      CoveringOctuple::make(params[0], params[1], params[2], params[3], params[4], params[5], params[6], params[7]);
  const ConditionDiagnostics diag = validate_octuple(o);
  if (!diag.valid()) {
    std::string f;
    for (const auto& s : diag.failures()) f += (f.empty() ? "" : " ") + s;
    err << o.to_string() << " is not a valid covering: fails " << f << '\n';
    return exit_code::verification_failure;
  }
  const CensusRecord r = census_record(o, config.max_cosets);
  json j = to_json(r);
  j["cyclic_kernel"] = r.k_cyclic ? 1 : 0;
  j["branching"] = json::array({r.branch.p, r.branch.q, r.branch.r});
  j["omega1_invariant"] = r.symmetry_group.omega1_invariant ? 1 : 0;
  j["completely_self_dual"] = r.symmetry_group.completely_self_dual ? 1 : 0;
  j["mho_invariant"] = r.symmetry_group.mho_invariant ? 1 : 0;
  if (!r.error.empty()) j["error"] = r.error;
  out << j.dump() << '\n';
  if (r.resource_failure) return exit_code::resource_error;
  return r.consistent ? exit_code::ok : exit_code::verification_failure;
}

int cmd_metacyclic(const MetacyclicParams& mp, const CliConfig& config, std::ostream& out, std::ostream&) {
  const MetacyclicReport r = metacyclic_group(mp, config.max_cosets);
  json j;
  j["params"] = json::array({mp.p, mp.a, mp.b, mp.c, mp.d});
  j["order"] = r.order;
  j["expected_order"] = r.expected_order;
  j["derived_order"] = r.derived_order;
  j["expected_derived_order"] = r.expected_derived_order;
  j["derived_cyclic_on_power"] = r.derived_cyclic_on_power ? 1 : 0;
  j["abelianization"] = r.abelianization;
  j["expected_abelianization"] = r.expected_abelianization;
  j["nilpotency_class"] = r.nilpotency_class ? json(*r.nilpotency_class) : json(nullptr);
  j["matches"] = r.matches() ? 1 : 0;
  out << j.dump() << '\n';
  return r.matches() ? exit_code::ok : exit_code::verification_failure;
}

int cmd_ops_hasse(std::ostream& out, std::ostream&) {
  const auto items = verify_hasse();
  print_report(out, items);
  return report_exit(items);
}

}  // namespace qcover::cli
