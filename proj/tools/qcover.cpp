#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qcover/cli.hpp"
#include "qcover/errors.hpp"

using namespace qcover;

int main(int argc, char** argv) {
  CLI::App app{"Abelian bicyclic coverings of the quaternion hypermap"};
  app.require_subcommand(1);

  cli::CliConfig config;
  app.add_option("--max-cosets", config.max_cosets, "Coset budget per enumeration")->check(CLI::PositiveNumber);
  app.add_option("--jobs", config.jobs, "Worker threads for the census")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Census of all valid octuples with mnd <= max-mnd");
  enumerate->add_option("--max-mnd", config.max_mnd, "Bound on m*n*d")->check(CLI::PositiveNumber);
  enumerate->add_option("--format", config.format, "jsonl or tsv")->check(CLI::IsMember({"jsonl", "tsv"}));
  enumerate->add_option("--out", config.out_path, "Output file (default: standard output)");

  std::optional<int> table;
  Int bound = 8;
  auto* tables = app.add_subcommand("verify-tables", "Check the classification tables");
  tables->add_option("--table", table, "Only this table (1-4)")->check(CLI::Range(1, 4));
  tables->add_option("--bound", bound, "Largest parameter instantiated")->check(CLI::PositiveNumber);

  auto* smoke = app.add_subcommand("smoke", "Checks on the worked examples");

  std::vector<Int> params;
  auto* inspect = app.add_subcommand("inspect", "Full record for one octuple");
  inspect->add_option("params", params, "m n d alpha beta gamma delta epsilon")->required()->expected(8);

  std::vector<Int> mparams;
  auto* meta = app.add_subcommand("metacyclic", "Invariants of a metacyclic p-group");
  meta->add_option("params", mparams, "p a b c d")->required()->expected(5);

  auto* hasse = app.add_subcommand("ops-hasse", "Check the lattice of operation groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::exit_code::ok : cli::exit_code::resource_error;
  }

  try {
    if (enumerate->parsed()) return cli::cmd_enumerate(config, std::cout, std::cerr);
    if (tables->parsed()) return cli::cmd_verify_tables(table, bound, config, std::cout, std::cerr);
    if (smoke->parsed()) return cli::cmd_smoke(config, std::cout, std::cerr);
    if (inspect->parsed()) return cli::cmd_inspect(params, config, std::cout, std::cerr);
    if (meta->parsed())
      return cli::cmd_metacyclic({mparams[0], mparams[1], mparams[2], mparams[3], mparams[4]}, config, std::cout,
                                 std::cerr);
    if (hasse->parsed()) return cli::cmd_ops_hasse(std::cout, std::cerr);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return cli::exit_code::resource_error;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::resource_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::verification_failure;
  }
  return cli::exit_code::verification_failure;
}
