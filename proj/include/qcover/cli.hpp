#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcover/census.hpp"
#include "qcover/metacyclic.hpp"
#include "qcover/report.hpp"

namespace qcover::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int resource_error = 2;
}  // namespace exit_code

struct CliConfig {
  Int max_mnd = 8;
  std::size_t max_cosets = kDefaultMaxCosets;
  unsigned jobs = 1;
  std::string format = "jsonl";  // or "tsv"
  std::string out_path;          // empty: standard output
};

/// Column order shared by the JSONL and TSV census formats.
const std::vector<std::string>& record_keys();
std::string record_jsonl(const CensusRecord& r);
std::string tsv_header();
std::string record_tsv(const CensusRecord& r);

/// One item per table row, plus a completeness check for Tables 2-4.
std::vector<CheckItem> verify_table(int table, Int bound, std::size_t max_cosets = kDefaultMaxCosets);

/// Fixed battery on the worked examples: the quaternion hypermap, the
/// order-16 metacyclic group, and the coverings of order 32 and 96.
std::vector<CheckItem> smoke_checks(std::size_t max_cosets = kDefaultMaxCosets);

/// Tab-separated "status id detail" lines.
void print_report(std::ostream& out, const std::vector<CheckItem>& items);

int cmd_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_tables(std::optional<int> table, Int bound, const CliConfig& config, std::ostream& out,
                      std::ostream& err);
int cmd_smoke(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_inspect(const std::vector<Int>& params, const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_metacyclic(const MetacyclicParams& mp, const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_ops_hasse(std::ostream& out, std::ostream& err);

}  // namespace qcover::cli
