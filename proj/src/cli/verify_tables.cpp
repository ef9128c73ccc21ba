#include <functional>
#include <set>

#include "qcover/cli.hpp"
#include "qcover/errors.hpp"

namespace qcover::cli {

namespace {

using Oct = CoveringOctuple;

enum class Location { none, vertices, edges, faces };

bool smooth_at(const BranchProfile& b, Location loc) {
  switch (loc) {
    case Location::vertices: return b.smooth_v;
    case Location::edges: return b.smooth_e;
    case Location::faces: return b.smooth_f;
    case Location::none: return true;
  }
  return true;
}

// Smooth at the two locations other than `loc`.
bool smooth_elsewhere(const BranchProfile& b, Location loc) {
  return (loc == Location::vertices || b.smooth_v) && (loc == Location::edges || b.smooth_e) &&
         (loc == Location::faces || b.smooth_f);
}

struct Row {
  std::string id;
  std::function<bool(Int)> printed_range;
  // Range under the corrected reading, when the printed one cannot hold.
  std::function<bool(Int)> corrected_range;
  std::function<Oct(Int)> octuple;
  std::function<HypermapType(Int)> type;
  std::function<Int(Int)> genus;
};

struct Outcome {
  std::size_t instances = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> unbranched;
};

// Instantiates one row for each parameter in [1, bound] accepted by `range`.
Outcome run_row(const Row& row, const std::function<bool(Int)>& range, Int bound, Location loc,
                std::size_t max_cosets, std::set<Oct>* branched_out) {
  Outcome out;
  for (Int t = 1; t <= bound; ++t) {
    if (!range(t)) continue;
    ++out.instances;
    const Oct o = row.octuple(t);
    const std::string at = "t=" + std::to_string(t) + " " + o.to_string();
    const ConditionDiagnostics diag = validate_octuple(o);
    if (!diag.valid()) {
      std::string f;
      for (const auto& s : diag.failures()) f += (f.empty() ? "" : ",") + s;
      out.mismatches.push_back(at + " invalid (" + f + ")");
      continue;
    }
    const CensusRecord rec = census_record(o, max_cosets);
    if (rec.group_order == 0) {
      out.mismatches.push_back(at + " construction failed: " + rec.error);
      continue;
    }
    const HypermapType want = row.type(t);
    const Int want_genus = row.genus(t);
    if (!(rec.type == want) || rec.genus != want_genus || !rec.consistent) {
      out.mismatches.push_back(at + " computed " + rec.type.to_string() + " g=" + std::to_string(rec.genus) +
                               ", table " + want.to_string() + " g=" + std::to_string(want_genus));
      continue;
    }
    if (loc != Location::none) {
      if (!smooth_elsewhere(rec.branch, loc)) {
        out.mismatches.push_back(at + " branched at a location the table requires smooth");
        continue;
      }
      if (smooth_at(rec.branch, loc))
        out.unbranched.push_back(at);
      else if (branched_out)
        branched_out->insert(o);
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

CheckItem evaluate_row(const Row& row, Int bound, Location loc, std::size_t max_cosets,
                       std::set<Oct>& branched) {
  const Outcome printed = run_row(row, row.printed_range, bound, loc, max_cosets, nullptr);
  CheckItem item{row.id, CheckStatus::pass, ""};
  std::string detail = std::to_string(printed.instances) + " instances";

  if (!printed.mismatches.empty()) {
    if (!row.corrected_range) {
      item.status = CheckStatus::fail;
      item.detail = detail + "; mismatches: " + join(printed.mismatches);
      return item;
    }
    const Outcome fixed = run_row(row, row.corrected_range, bound, loc, max_cosets, &branched);
    item.status = fixed.mismatches.empty() ? CheckStatus::flagged_discrepancy : CheckStatus::fail;
    item.detail = detail + "; printed range fails: " + join(printed.mismatches) + "; corrected range: " +
                  std::to_string(fixed.instances) + " instances" +
                  (fixed.mismatches.empty() ? " all match" : ", mismatches: " + join(fixed.mismatches));
    return item;
  }

  run_row(row, row.printed_range, bound, loc, max_cosets, &branched);
  if (loc != Location::none && printed.instances > 0 && printed.unbranched.size() == printed.instances) {
    item.status = CheckStatus::flagged_discrepancy;
    item.detail = detail + "; every instance is smooth at the table's branch location: " + join(printed.unbranched);
    return item;
  }
  item.detail = detail + " match";
  if (!printed.unbranched.empty()) item.detail += "; unbranched boundary instances: " + join(printed.unbranched);
  return item;
}

bool odd(Int t) { return t % 2 != 0; }
bool even(Int t) { return t % 2 == 0; }
bool any(Int) { return true; }

std::vector<Row> table2_rows() {
  auto pair = [](Int a, Int b) { return [=](Int d) { return Oct::make(a, b, d, -1, -1, -1, -1, -1); }; };
  auto t444d = [](Int d) { return HypermapType{4, 4, 4 * d}; };
  auto t442d = [](Int d) { return HypermapType{4, 4, 2 * d}; };
  auto g8 = [](Int d) { return 8 * d - 3; };
  auto g4 = [](Int d) { return 4 * d - 1; };
  return {
      {"T2.i", odd, nullptr, pair(1, 1), t444d, [](Int d) { return 2 * d; }},
      {"T2.ii", even, nullptr, pair(1, 1), t442d, [](Int d) { return 2 * d - 1; }},
      {"T2.iii", [](Int d) { return d >= 4 && even(d); }, [](Int d) { return d >= 4 && d % 4 == 0; },
       [](Int d) { return Oct::make(1, 1, d, -1, -1, -1, -1, d / 2 - 1); }, t442d, [](Int d) { return 2 * d - 1; }},
      {"T2.iv", even, nullptr, [](Int d) { return Oct::make(2, 2, d, d - 1, d - 1, d - 1, -1, -1); }, t444d, g8},
      {"T2.v", any, nullptr, pair(2, 2), t444d, g8},
      {"T2.vi", even, nullptr, [](Int d) { return Oct::make(2, 2, d, d - 1, -1, -1, d - 1, -1); }, t444d, g8},
      {"T2.vii", even, nullptr, [](Int d) { return Oct::make(2, 2, d, -1, d - 1, d - 1, d - 1, -1); }, t444d, g8},
      {"T2.viii", [](Int d) { return d == 1; }, nullptr, [](Int d) { return Oct::make(1, 2, d, 1, 1, 1, 1, 1); },
       [](Int) { return HypermapType{4, 4, 4}; }, [](Int) { return Int{3}; }},
      {"T2.ix", [](Int d) { return d >= 3 && odd(d); }, nullptr,
       [](Int d) { return Oct::make(1, 2, d, -1, -1, -1, -1, (d - 1) / 2); }, t444d, g4},
      {"T2.x", [](Int d) { return d == 1; }, nullptr, [](Int d) { return Oct::make(2, 1, d, 1, 1, 1, 1, 1); },
       [](Int) { return HypermapType{4, 4, 4}; }, [](Int) { return Int{3}; }},
      {"T2.xi", [](Int d) { return d >= 3 && odd(d); }, nullptr,
       [](Int d) { return Oct::make(2, 1, d, -1, -1, -1, -1, -2); }, t444d, g4},
  };
}

std::vector<Row> table3_rows() {
  auto oct = [](Int n, Int d) { return [=](Int m) { return Oct::make(m, n, d, -1, 1, 1, 1, 1); }; };
  auto full = [](Int m) { return HypermapType{4, 4 * m, 4}; };
  auto half = [](Int m) { return HypermapType{4, 2 * m, 4}; };
  return {
      {"T3.i", odd, nullptr, oct(1, 1), full, [](Int m) { return 2 * m; }},
      {"T3.ii", even, nullptr, oct(1, 1), half, [](Int m) { return 2 * m - 1; }},
      {"T3.iii", any, nullptr, oct(1, 2), full, [](Int m) { return 4 * m - 1; }},
      {"T3.iv", odd, nullptr, oct(2, 1), full, [](Int m) { return 4 * m - 1; }},
      {"T3.v", odd, even, oct(2, 1), half, [](Int m) { return 4 * m - 3; }},
  };
}

std::vector<Row> table4_rows() {
  auto oct = [](Int m, Int d) { return [=](Int n) { return Oct::make(m, n, d, 1, 1, 1, -1, 1); }; };
  auto full = [](Int n) { return HypermapType{4 * n, 4, 4}; };
  auto half = [](Int n) { return HypermapType{2 * n, 4, 4}; };
  return {
      {"T4.i", odd, nullptr, oct(1, 1), full, [](Int n) { return 2 * n; }},
      {"T4.ii", even, nullptr, oct(1, 1), half, [](Int n) { return 2 * n - 1; }},
      {"T4.iii", any, nullptr, oct(1, 2), full, [](Int n) { return 4 * n - 1; }},
      {"T4.iv", odd, nullptr, oct(2, 1), full, [](Int n) { return 4 * n - 1; }},
      {"T4.v", even, nullptr, oct(2, 1), half, [](Int n) { return 4 * n - 3; }},
  };
}

// Every valid octuple in the box m, n, d <= bound that is branched exactly
// at `loc` must be an instance of some row.
CheckItem completeness(const std::string& id, Location loc, Int bound, const std::set<Oct>& table) {
  std::vector<std::string> missing;
  std::size_t found = 0;
  for (Int m = 1; m <= bound; ++m)
    for (Int n = 1; n <= bound; ++n)
      for (Int d = 1; d <= bound; ++d)
        for (const Oct& o : valid_octuples_for(m, n, d)) {
          const BranchProfile b = branch_profile(o);
          if (smooth_at(b, loc) || !smooth_elsewhere(b, loc)) continue;
          ++found;
          if (!table.contains(o)) missing.push_back(o.to_string());
        }
  const bool ok = missing.empty() && found == table.size();
  std::string detail = std::to_string(found) + " coverings in the box m,n,d <= " + std::to_string(bound) + ", " +
                       std::to_string(table.size()) + " branched table instances";
  if (!missing.empty()) detail += "; missing from the table: " + join(missing);
  return {id, status_of(ok), detail};
}

std::vector<CheckItem> table1(Int bound, std::size_t max_cosets) {
  struct Class {
    const char* id;
    bool m_odd, n_odd;
  };
  const Class classes[] = {{"T1.i", true, true}, {"T1.ii", true, false}, {"T1.iii", false, true}, {"T1.iv", false, false}};
  std::vector<CheckItem> out;
  for (const auto& c : classes) {
    std::vector<std::string> bad;
    std::size_t count = 0;
    for (Int m = 1; m <= bound; ++m)
      for (Int n = 1; n <= bound; ++n) {
        if (odd(m) != c.m_odd || odd(n) != c.n_odd) continue;
        ++count;
        HypermapType t;
        Int g = 0;
        if (c.m_odd && c.n_odd) {
          t = {4 * m, 4 * n, 4 * lcm(m, n)};
          g = 4 * m * n - m - n - gcd(m, n) + 1;
        } else if (c.m_odd) {
          t = {4 * m, 2 * n, 4 * lcm(m, n / 2)};
          g = 4 * m * n - 2 * m - n - 2 * gcd(m, n / 2) + 1;
        } else if (c.n_odd) {
          t = {2 * m, 4 * n, 4 * lcm(m / 2, n)};
          g = 4 * m * n - m - 2 * n - 2 * gcd(m / 2, n) + 1;
        } else {
          t = {2 * m, 2 * n, 4 * lcm(m / 2, n / 2)};
          g = 4 * m * n - 2 * m - 2 * n - 4 * gcd(m / 2, n / 2) + 1;
        }
        const Oct o = Oct::make(m, n, 1, 1, 1, 1, 1, 1);
        const CensusRecord rec = census_record(o, max_cosets);
        if (!(rec.type == t) || rec.genus != g || !rec.consistent)
          bad.push_back(o.to_string() + " computed " + rec.type.to_string() + " g=" + std::to_string(rec.genus) +
                        ", table " + t.to_string() + " g=" + std::to_string(g) +
                        (rec.error.empty() ? "" : " (" + rec.error + ")"));
      }
    out.push_back({c.id, status_of(bad.empty()),
                   std::to_string(count) + " instances" + (bad.empty() ? " match" : "; mismatches: " + join(bad))});
  }
  return out;
}

std::vector<CheckItem> branch_table(const std::vector<Row>& rows, const std::string& name, Location loc, Int bound,
                                    std::size_t max_cosets) {
  std::vector<CheckItem> out;
  std::set<Oct> branched;
  for (const auto& row : rows) out.push_back(evaluate_row(row, bound, loc, max_cosets, branched));
  out.push_back(completeness(name + ".complete", loc, bound, branched));
  return out;
}

}  // namespace

std::vector<CheckItem> verify_table(int table, Int bound, std::size_t max_cosets) {
  if (bound < 1) throw InvalidArgument("bound must be at least 1");
  switch (table) {
    case 1: return table1(bound, max_cosets);
    case 2: return branch_table(table2_rows(), "T2", Location::faces, bound, max_cosets);
    case 3: return branch_table(table3_rows(), "T3", Location::edges, bound, max_cosets);
    case 4: return branch_table(table4_rows(), "T4", Location::vertices, bound, max_cosets);
    default: throw InvalidArgument("table must be 1, 2, 3 or 4");
  }
}

}  // namespace qcover::cli
