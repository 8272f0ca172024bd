// Command-line front end: solve, oracle, verify, counterexample, reduce.
//
// JSON goes to stdout, human-readable summaries to stderr.
// Exit codes: 0 ok, 1 perfect mode infeasible, 2 verification failed,
// 3 input error.

#include "blossomcert/blossom_engine.hpp"
#include "blossomcert/certificates.hpp"
#include "blossomcert/graph.hpp"
#include "blossomcert/json_io.hpp"
#include "blossomcert/oracle.hpp"
#include "blossomcert/reductions.hpp"
#include "blossomcert/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace bc = blossomcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInputError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<bc::Rational> parse_amount_list(const std::string& text) {
  std::vector<bc::Rational> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string word;
    while (words >> word) out.push_back(bc::parse_rational(word));
  }
  return out;
}

/// One dual-update phase per non-empty line, amounts separated by commas or
/// whitespace. Lines starting with '#' are ignored.
std::vector<std::vector<bc::Rational>> read_amounts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open amounts file '" + path + "'");
  std::vector<std::vector<bc::Rational>> phases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto amounts = parse_amount_list(line);
    if (!amounts.empty()) phases.push_back(std::move(amounts));
  }
  return phases;
}

bc::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return bc::Json::parse(in);
  } catch (const bc::Json::parse_error& err) {
    throw InputError(path + ": " + err.what());
  }
}

void print_json(const bc::Json& doc) { std::cout << doc.dump(2) << '\n'; }

void summarize_violations(const bc::Verdict& verdict) {
  for (const auto& v : verdict.violations) {
    std::cerr << "  ";
    if (v.cardinality) std::cerr << "k=" << *v.cardinality << " ";
    std::cerr << v.constraint << " at " << v.witness << ": " << bc::to_string(v.lhs) << " vs "
              << bc::to_string(v.rhs) << '\n';
  }
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string file;
  std::string mode = "maximum";
  std::string policy = "uniform";
  std::string beta = "0";
  std::string snapshots_out;
  bool verify = false;
  bool oracle_check = false;
};

int run_solve(const SolveArgs& args) {
  const bc::Instance original = bc::read_instance_file(args.file);
  const bc::NormalizedInstance norm = bc::normalize_weights(original);
  const bc::Instance& inst = norm.instance;

  bc::DualPolicy policy = bc::DualPolicy::uniform();
  if (args.policy.rfind("scripted=", 0) == 0) {
    policy = bc::DualPolicy::scripted(read_amounts_file(args.policy.substr(9)));
  } else if (args.policy != "uniform") {
    throw InputError("policy must be 'uniform' or 'scripted=<file>'");
  }
  const bc::SolveMode mode = args.mode == "perfect" ? bc::SolveMode::perfect : bc::SolveMode::maximum;
  const bc::Rational beta = bc::parse_rational(args.beta);

  bc::RunResult run;
  try {
    run = bc::solve(inst, mode, policy, beta);
  } catch (const bc::InfeasibleDualUpdate& err) {
    throw InputError(err.what());
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }

  bc::Json doc = bc::run_document(run, norm.record.shift);
  if (!args.snapshots_out.empty()) {
    std::ofstream out(args.snapshots_out);
    if (!out) throw InputError("cannot write '" + args.snapshots_out + "'");
    out << doc.dump(2) << '\n';
  }

  int code = run.infeasible() ? kExitInfeasible : kExitOk;
  const bc::Snapshot& last = run.final_snapshot();
  std::cerr << "status " << bc::to_string(run.status) << ", " << run.snapshots.size()
            << " snapshots, final k=" << last.cardinality << " weight "
            << bc::to_string(last.weight - bc::Rational(last.cardinality) * norm.record.shift)
            << '\n';

  if (args.verify) {
    const bc::Verdict verdict = bc::verify_run(inst, run);
    doc["verification"] = bc::to_json(verdict);
    std::cerr << "verification " << (verdict.pass() ? "passed" : "FAILED") << '\n';
    summarize_violations(verdict);
    if (!verdict.pass()) code = kExitVerifyFailed;
  }
  if (args.oracle_check) {
    const bc::OracleTable table = bc::min_weight_by_cardinality(original);
    bc::Json mismatches = bc::Json::array();
    for (const bc::Snapshot& s : run.snapshots) {
      const bc::Rational w = bc::matching_weight(original, s.matching);
      if (s.cardinality >= table.by_cardinality.size() || w != table.at(s.cardinality).min_weight) {
        mismatches.push_back(bc::Json{{"k", s.cardinality}, {"weight", bc::to_json(w)}});
      }
    }
    const bool ok = mismatches.empty() &&
                    (run.status != bc::RunStatus::no_perfect_matching || last.cardinality == table.nu);
    doc["oracle_check"] = bc::Json{{"pass", ok}, {"nu", table.nu}, {"mismatches", mismatches}};
    std::cerr << "oracle check " << (ok ? "passed" : "FAILED") << '\n';
    if (!ok) code = kExitVerifyFailed;
  }
  print_json(doc);
  return code;
}

// --- oracle / verify / counterexample / reduce -----------------------------

int run_oracle(const std::string& file, int limit) {
  const bc::Instance inst = bc::read_instance_file(file);
  bc::OracleTable table;
  try {
    table = bc::min_weight_by_cardinality(inst, limit);
  } catch (const bc::OracleBudgetError& err) {
    throw InputError(err.what());
  }
  std::cerr << "nu = " << table.nu << '\n';
  print_json(bc::to_json(table));
  return kExitOk;
}

bc::RunResult load_run(const std::string& path, const bc::Instance& inst) {
  try {
    return bc::run_from_json(read_json_file(path), inst.node_count());
  } catch (const bc::JsonFormatError& err) {
    throw InputError(path + ": " + err.what());
  } catch (const bc::Json::exception& err) {
    throw InputError(path + ": " + err.what());
  }
}

int run_verify(const std::string& file, const std::string& run_path) {
  const bc::NormalizedInstance norm = bc::normalize_weights(bc::read_instance_file(file));
  const bc::RunResult run = load_run(run_path, norm.instance);
  const bc::Verdict verdict = bc::verify_run(norm.instance, run);
  std::cerr << "verification " << (verdict.pass() ? "passed" : "FAILED") << '\n';
  summarize_violations(verdict);
  print_json(bc::to_json(verdict));
  return verdict.pass() ? kExitOk : kExitVerifyFailed;
}

int run_counterexample(const std::string& amounts_text) {
  const std::vector<bc::Rational> amounts = parse_amount_list(amounts_text);
  const bc::ScenarioReport report = bc::compare_dual_policies(bc::figure2_instance(), amounts);
  if (report.scripted_error) std::cerr << "scripted run rejected: " << *report.scripted_error << '\n';
  if (report.divergence) {
    const std::size_t k = *report.divergence;
    std::cerr << "scripted policy suboptimal at k=" << k << ": weight "
              << bc::to_string(report.scripted_result.at(k).weight) << " vs oracle "
              << bc::to_string(report.oracle_minima.at(k).weight) << '\n';
  } else {
    std::cerr << "no divergence\n";
  }
  print_json(bc::to_json(report));
  return kExitOk;
}

int run_reduce(const std::string& file, bool doubled, const std::string& auxiliary,
               const std::string& matching_out) {
  const bc::Instance original = bc::read_instance_file(file);
  if (doubled == !auxiliary.empty()) throw InputError("reduce needs exactly one of --doubled, --auxiliary");
  if (doubled) {
    bc::write_instance(std::cout, bc::build_doubled_graph(original));
    return kExitOk;
  }

  const auto colon = auxiliary.rfind(':');
  if (colon == std::string::npos) throw InputError("--auxiliary expects <snapshots.json>:<k>");
  std::size_t k = 0;
  try {
    k = std::stoul(auxiliary.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw InputError("bad cardinality in --auxiliary");
  }
  const bc::Instance inst = bc::normalize_weights(original).instance;
  const bc::RunResult run = load_run(auxiliary.substr(0, colon), inst);
  if (k >= run.snapshots.size()) throw InputError("no snapshot with k=" + std::to_string(k));

  bc::AuxiliaryCompletion comp = [&] {
    try {
      return bc::build_auxiliary_completion(inst, run.snapshots[k]);
    } catch (const bc::CompletionRefused& err) {
      std::cerr << "completion refused: " << err.what() << '\n';
      throw;
    }
  }();
  bc::write_instance(std::cout, comp.aux_instance);
  if (!matching_out.empty()) {
    std::ofstream out(matching_out);
    bc::write_matching(out, comp.extended_matching);
  }
  const bc::Verdict verdict = bc::check_perfect_certificate(comp);
  std::cerr << "perfect-matching certificate " << (verdict.pass() ? "passed" : "FAILED") << '\n';
  summarize_violations(verdict);
  return verdict.pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blossom algorithm with per-cardinality optimality certificates"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run the blossom algorithm and record snapshots");
  solve->add_option("file", solve_args.file, "instance file")->required();
  solve->add_option("--mode", solve_args.mode)->check(CLI::IsMember({"perfect", "maximum"}));
  solve->add_option("--policy", solve_args.policy, "uniform | scripted=<amounts-file>");
  solve->add_option("--beta", solve_args.beta, "initial singleton dual value");
  solve->add_option("--snapshots", solve_args.snapshots_out, "write snapshot JSON here");
  solve->add_flag("--verify", solve_args.verify, "check every snapshot's certificate");
  solve->add_flag("--oracle-check", solve_args.oracle_check, "compare against brute force");

  std::string oracle_file;
  int oracle_limit = bc::kDefaultOracleLimit;
  auto* oracle = app.add_subcommand("oracle", "brute-force minimum weight per cardinality");
  oracle->add_option("file", oracle_file)->required();
  oracle->add_option("--limit", oracle_limit, "node budget");

  std::string verify_file;
  std::string verify_run_path;
  auto* verify = app.add_subcommand("verify", "verify a recorded run");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--run", verify_run_path, "snapshot JSON")->required();

  std::string amounts = "1,1,3";
  auto* counter = app.add_subcommand("counterexample", "uniform vs scripted dual updates on the three-forest example");
  counter->add_option("--amounts", amounts, "per-tree amounts, comma separated");

  std::string reduce_file;
  bool reduce_doubled = false;
  std::string reduce_aux;
  std::string reduce_matching_out;
  auto* reduce = app.add_subcommand("reduce", "emit the doubled or auxiliary graph");
  reduce->add_option("file", reduce_file)->required();
  reduce->add_flag("--doubled", reduce_doubled);
  reduce->add_option("--auxiliary", reduce_aux, "<snapshots.json>:<k>");
  reduce->add_option("--matching-out", reduce_matching_out, "write the extended matching here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*oracle) return run_oracle(oracle_file, oracle_limit);
    if (*verify) return run_verify(verify_file, verify_run_path);
    if (*counter) return run_counterexample(amounts);
    if (*reduce) return run_reduce(reduce_file, reduce_doubled, reduce_aux, reduce_matching_out);
  } catch (const bc::CompletionRefused&) {
    return kExitVerifyFailed;
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  } catch (const bc::ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  } catch (const bc::RationalParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
