#include "linec4/commands.hpp"

#include <fstream>
#include <sstream>

#include "linec4/document.hpp"
#include "linec4/errors.hpp"
#include "linec4/pipeline.hpp"
#include "linec4/solver.hpp"

namespace linec4 {

namespace {

std::string join_conditions(const std::vector<Condition>& cs, const char* sep) {
  std::string out;
  for (const auto c : cs) {
    if (!out.empty()) out += sep;
    out += to_string(c);
  }
  return out;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& text) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw DocumentError("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw DocumentError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SearchOutcome run_oracle(const Params& p, std::uint64_t nodes, std::chrono::milliseconds time) {
  SearchBudget budget;
  budget.node_limit = nodes;
  budget.time_limit = time;
  budget.mode = SearchMode::ProveNone;
  return find_decomposition(build_line_graph_kmn(static_cast<std::uint32_t>(p.m),
                                                 static_cast<std::uint32_t>(p.n), p.lambda),
                            budget);
}

}  // namespace

int cmd_decide(const Params& p, std::ostream& out) {
  Verdict v;
  try {
    v = decide(p);
  } catch (const OutOfTheoremScope& e) {
    out << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  out << to_string(p) << ": " << (v.feasible ? "feasible" : "infeasible") << '\n';
  if (v.feasible) {
    out << "case: " << to_string(*v.case_tag) << ", base multiplicity " << *v.base_multiplicity
        << '\n';
    out << "expected cycles: " << expected_cycle_count(p) << '\n';
    return exit_code::kOk;
  }
  out << "failed conditions: " << join_conditions(v.failed_conditions, ", ") << '\n';
  const Certificate cert = necessity_certificate(p);
  out << "certificate: " << cert.describe() << (cert.holds() ? "" : " [does not hold]") << '\n';
  return exit_code::kNegative;
}

int cmd_construct(const Params& p, const std::optional<std::filesystem::path>& out_path,
                  std::ostream& out) {
  Verdict v;
  try {
    v = decide(p);
  } catch (const OutOfTheoremScope& e) {
    out << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  if (!v.feasible) {
    out << to_string(p) << " is infeasible (failed " << join_conditions(v.failed_conditions, ", ")
        << "); nothing written\n";
    return exit_code::kNegative;
  }
  try {
    const pipeline::RecursionPlan plan = pipeline::plan(p);
    const Decomposition d = pipeline::execute(plan);
    const auto graph = build_line_graph_kmn(static_cast<std::uint32_t>(p.m),
                                            static_cast<std::uint32_t>(p.n), p.lambda);
    const VerifyReport report = verify_decomposition(graph, d);
    if (!report.ok() || d.size() != expected_cycle_count(p)) {
      throw InternalVerificationError("construction failed verification: " + report.describe());
    }
    const std::string text = write_document(make_document(p, d, plan.summary()));
    if (out_path) {
      write_file_atomically(*out_path, text);
      out << "wrote " << d.size() << " cycles to " << out_path->string() << '\n';
    } else {
      out << text;
    }
    return exit_code::kOk;
  } catch (const BudgetExceededError& e) {
    out << "outside the supported envelope: " << e.what() << '\n';
    return exit_code::kBudget;
  } catch (const DocumentError& e) {
    out << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
}

int cmd_verify(const std::filesystem::path& doc_path, std::ostream& out) {
  std::ifstream in(doc_path, std::ios::binary);
  if (!in) {
    out << "cannot read " << doc_path.string() << '\n';
    return exit_code::kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  DecompositionDocument doc;
  try {
    doc = parse_document(buf.str());
  } catch (const DocumentError& e) {
    out << "parse error: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  Decomposition d;
  for (std::size_t i = 0; i < doc.cycles.size(); ++i) {
    const auto& c = doc.cycles[i];
    try {
      d.add(FourCycle(c[0], c[1], c[2], c[3]));
    } catch (const InvalidCycleError& e) {
      out << "discrepancy: bad cycle #" << i << ": " << e.what() << '\n';
      return exit_code::kNegative;
    }
  }
  const auto graph = build_line_graph_kmn(static_cast<std::uint32_t>(doc.params.m),
                                          static_cast<std::uint32_t>(doc.params.n),
                                          doc.params.lambda);
  const VerifyReport report = verify_decomposition(graph, d);
  if (!report.ok()) {
    out << "discrepancy: " << report.describe() << '\n';
    return exit_code::kNegative;
  }
  if (doc.declared_cycle_count != d.size()) {
    out << "discrepancy: meta.cycle_count is " << doc.declared_cycle_count << " but "
        << d.size() << " cycles are listed\n";
    return exit_code::kNegative;
  }
  out << "OK: " << d.size() << " cycles decompose " << doc.params.lambda << "L(K_{"
      << doc.params.m << "," << doc.params.n << "})\n";
  return exit_code::kOk;
}

int cmd_oracle(const Params& p, const OracleOptions& options, std::ostream& out) {
  Verdict v;
  try {
    v = decide(p);
  } catch (const OutOfTheoremScope& e) {
    out << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  const SearchOutcome r = run_oracle(p, options.node_limit, options.time_limit);
  out << to_string(r.status);
  if (r.found()) out << ": " << r.decomposition->size() << " cycles";
  if (r.filtered) out << " (degree or edge-count filter)";
  out << "; " << r.stats.nodes << " nodes, " << r.stats.candidates << " candidate cycles\n";

  const bool contradiction = (r.found() && !v.feasible) ||
                             (r.status == SearchOutcome::Status::NoneExists && v.feasible);
  if (contradiction) {
    out << "CONTRADICTION: decide says " << (v.feasible ? "feasible" : "infeasible") << '\n';
    return exit_code::kContradiction;
  }
  out << "consistent with decide (" << (v.feasible ? "feasible" : "infeasible") << ")\n";
  if (r.found() && options.out_path) {
    write_file_atomically(*options.out_path,
                          write_document(make_document(p, *r.decomposition, "exact search")));
    out << "wrote " << r.decomposition->size() << " cycles to " << options.out_path->string()
        << '\n';
  }
  if (r.status == SearchOutcome::Status::BudgetExceeded) return exit_code::kBudget;
  return exit_code::kOk;
}

int cmd_table(const TableOptions& o, std::ostream& out) {
  if (o.max_m == 0 || o.max_n == 0 || o.lambdas.empty()) {
    out << "usage error: bounds must be positive and the lambda list non-empty\n";
    return exit_code::kUsage;
  }
  int code = exit_code::kOk;
  out << "m,n,lambda,feasible,conditions,cycles,status\n";
  for (std::uint64_t m = 1; m <= o.max_m; ++m) {
    for (std::uint64_t n = 1; n <= o.max_n; ++n) {
      if (m * n < 4) continue;
      for (const std::uint64_t lambda : o.lambdas) {
        const Params p{m, n, lambda};
        const Verdict v = decide(p);
        std::string cycles;
        std::string status = "decided";
        if (v.feasible) cycles = std::to_string(expected_cycle_count(p));
        if (o.check && v.feasible) {
          try {
            const Decomposition d = pipeline::construct(p);
            const bool ok =
                verify_decomposition(build_line_graph_kmn(static_cast<std::uint32_t>(m),
                                                          static_cast<std::uint32_t>(n), lambda),
                                     d)
                    .ok();
            status = ok ? "verified" : "verification failed";
          } catch (const BudgetExceededError&) {
            status = "envelope exceeded";
          }
        } else if (o.check) {
          const SearchOutcome r = run_oracle(p, o.oracle_nodes, o.oracle_time);
          switch (r.status) {
            case SearchOutcome::Status::NoneExists: status = "confirmed (oracle)"; break;
            case SearchOutcome::Status::BudgetExceeded: status = "unconfirmed (budget)"; break;
            case SearchOutcome::Status::Found:
              status = "CONTRADICTION";
              code = exit_code::kContradiction;
              break;
          }
        }
        out << m << ',' << n << ',' << lambda << ',' << (v.feasible ? "true" : "false") << ','
            << join_conditions(v.failed_conditions, ";") << ',' << cycles << ',' << status << '\n';
      }
    }
  }
  return code;
}

std::vector<std::uint64_t> parse_lambda_list(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad lambda list '" + text + "'");
    }
    const std::uint64_t v = std::stoull(s);
    if (v == 0) throw UsageError("lambda must be positive");
    return v;
  };
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const std::uint64_t lo = number(part.substr(0, dots));
    const std::uint64_t hi = number(part.substr(dots + 2));
    if (lo > hi) throw UsageError("empty lambda range '" + part + "'");
    for (std::uint64_t l = lo; l <= hi; ++l) out.push_back(l);
  }
  if (out.empty()) throw UsageError("empty lambda list");
  return out;
}

}  // namespace linec4
