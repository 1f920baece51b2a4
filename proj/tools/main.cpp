// linec4: decide, construct and verify C4-decompositions of lambda L(K_{m,n}).

#include <iostream>

#include "CLI11.hpp"
#include "linec4/block_cache.hpp"
#include "linec4/commands.hpp"
#include "linec4/errors.hpp"

namespace {

struct Triple {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t lambda = 0;
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("m", t.m, "rows (size of one side of K_{m,n})")->required();
  cmd->add_option("n", t.n, "columns (size of the other side)")->required();
  cmd->add_option("lambda", t.lambda, "edge multiplicity")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C4-decompositions of the lambda-fold line graph of K_{m,n}"};
  app.require_subcommand(1);

  std::string cache_path;
  bool no_cache = false;
  app.add_option("--cache", cache_path, "block cache file (default: per-user data directory)");
  app.add_flag("--no-cache", no_cache, "keep solver-built blocks in memory only");

  Triple decide_args;
  auto* decide = app.add_subcommand("decide", "decide whether a decomposition exists");
  add_triple(decide, decide_args);

  Triple construct_args;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct", "build and verify a decomposition");
  add_triple(construct, construct_args);
  construct->add_option("-o,--output", construct_out, "output document (default: stdout)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check a decomposition document");
  verify->add_option("document", verify_path, "JSON document")->required();

  Triple oracle_args;
  linec4::OracleOptions oracle_opts;
  std::uint64_t oracle_nodes = oracle_opts.node_limit;
  double oracle_seconds = 60.0;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "exact search, cross-checked against decide");
  add_triple(oracle, oracle_args);
  oracle->add_option("--nodes", oracle_nodes, "search node limit");
  oracle->add_option("--seconds", oracle_seconds, "search time limit");
  oracle->add_option("-o,--output", oracle_out, "write the decomposition found");

  linec4::TableOptions table_opts;
  std::string lambda_text;
  auto* table = app.add_subcommand("table", "CSV feasibility grid");
  table->add_option("max_m", table_opts.max_m)->required();
  table->add_option("max_n", table_opts.max_n)->required();
  table->add_option("lambdas", lambda_text, "e.g. 4, 1..4 or 1,2,8")->required();
  table->add_flag("--check", table_opts.check,
                  "construct and verify feasible cells, search infeasible ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return linec4::exit_code::kUsage;
  }

  try {
    if (no_cache) {
      linec4::configure_default_cache(std::nullopt);
    } else {
      linec4::configure_default_cache(cache_path.empty() ? linec4::default_cache_path()
                                                         : std::filesystem::path(cache_path));
    }

    auto params = [](const Triple& t) { return linec4::Params{t.m, t.n, t.lambda}; };
    if (*decide) return linec4::cmd_decide(params(decide_args), std::cout);
    if (*construct) {
      std::optional<std::filesystem::path> out;
      if (!construct_out.empty()) out = construct_out;
      return linec4::cmd_construct(params(construct_args), out, std::cout);
    }
    if (*verify) return linec4::cmd_verify(verify_path, std::cout);
    if (*oracle) {
      oracle_opts.node_limit = oracle_nodes;
      oracle_opts.time_limit =
          std::chrono::milliseconds(static_cast<std::int64_t>(oracle_seconds * 1000.0));
      if (!oracle_out.empty()) oracle_opts.out_path = oracle_out;
      return linec4::cmd_oracle(params(oracle_args), oracle_opts, std::cout);
    }
    if (*table) {
      table_opts.lambdas = linec4::parse_lambda_list(lambda_text);
      return linec4::cmd_table(table_opts, std::cout);
    }
  } catch (const linec4::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return linec4::exit_code::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return linec4::exit_code::kInternal;
  }
  return linec4::exit_code::kUsage;
}
