#include "cardbin/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cardbin/adversary.hpp"
#include "cardbin/algorithms.hpp"
#include "cardbin/analysis.hpp"
#include "cardbin/ff_structure.hpp"
#include "cardbin/generators.hpp"
#include "cardbin/io.hpp"
#include "cardbin/oracle.hpp"

namespace cardbin {

namespace {

constexpr const char* kSynopsis =
    "usage: cardbin {gen|run|opt|duel|verify|table} [options]  (cardbin <command> --help for details)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string show(const Rational& r) { return r.str() + " (" + r.decimal(6) + ")"; }

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::optional<Rational> optional_rational(const std::string& flag, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational_flag(flag, text);
}

Instance load_instance(const std::string& path, int k) {
  Instance instance = read_instance(read_file(path));
  if (instance.k() != k) {
    throw InconsistentInput("--k " + std::to_string(k) + " does not match k " + std::to_string(instance.k()) +
                            " in " + path);
  }
  return instance;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string family;
  int k = 0;
  long ell = 0;
  long n = 0;
  int stop = 4;
  std::string eps, delta, out, cert;
};

int cmd_gen(const GenOptions& o, const CLI::App& sub, std::ostream& out) {
  const bool has_ell = sub.count("--ell") > 0;
  GeneratedFamily family = [&]() {
    if (o.family == "batch") {
      if (sub.count("--n") == 0) throw UsageError("--family batch needs --n");
      if (has_ell) throw UsageError("--ell does not apply to --family batch");
      const Rational delta = optional_rational("--delta", o.delta).value_or(default_batch_delta());
      return gen_batches(o.k, o.n, delta, o.stop);
    }
    if (sub.count("--n") > 0 || sub.count("--stop") > 0) throw UsageError("--n/--stop only apply to --family batch");
    const auto eps = optional_rational("--eps", o.eps);
    const auto delta = optional_rational("--delta", o.delta);
    if (o.family == "ff-small") {
      if (delta) throw UsageError("--delta does not apply to --family ff-small");
      return gen_ff_killer_small(o.k, has_ell ? o.ell : 1, eps);
    }
    if (o.family == "ff-mid") return gen_ff_killer_mid(o.k, has_ell ? o.ell : o.k, eps, delta);
    const long default_ell = o.k > 3 ? std::lcm<long>(o.k, o.k - 3) + 1 : 2;
    return gen_ff_killer_large(o.k, has_ell ? o.ell : default_ell, eps, delta);
  }();

  write_file(o.out, write_instance(family.instance));
  if (!o.cert.empty()) write_file(o.cert, write_packing(family.certificate.packing));
  out << "gen " << family.name << " k=" << o.k << " items=" << family.instance.size()
      << " certificate=" << family.certificate.claimed_count << " (" << to_string(family.certificate.claim) << ")";
  if (family.predicted_ff) out << " predicted_ff=" << *family.predicted_ff;
  out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- run

struct RunOptions {
  std::string alg, in, out, trace;
  int k = 0;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  const Instance instance = load_instance(o.in, o.k);
  const RunResult result = run_algorithm(o.alg, instance);
  if (!o.out.empty()) write_file(o.out, write_packing(result.packing));
  if (!o.trace.empty()) write_file(o.trace, write_trace(result.trace));
  out << "bins " << result.packing.bin_count() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- opt

struct OptOptions {
  std::string in, out;
  int k = 0;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_opt(const OptOptions& o, std::ostream& out) {
  const Instance instance = load_instance(o.in, o.k);
  const OptResult result = exact_opt(instance, o.budget);
  out << "opt " << result.certificate.claimed_count << " " << (result.exact ? "exact" : "upper") << "\n";
  const std::string packing = write_packing(result.certificate.packing);
  if (o.out.empty()) {
    out << packing;
  } else {
    write_file(o.out, packing);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- duel

struct DuelOptions {
  std::string adversary, alg, eps, delta;
  int k = 0;
  long n = 0;
};

int cmd_duel(const DuelOptions& o, const CLI::App& sub, std::ostream& out) {
  const bool has_k = sub.count("--k") > 0;
  if (o.adversary == "batch") {
    if (!has_k) throw UsageError("--adversary batch needs --k");
    if (!o.eps.empty()) throw UsageError("--eps does not apply to --adversary batch");
    const long n = sub.count("--n") > 0 ? o.n : 60L * o.k;
    const Rational delta = optional_rational("--delta", o.delta).value_or(default_batch_delta());
    const BatchDuelResult result = run_batch_duel(o.alg, o.k, n, delta);
    for (const auto& s : result.stops) {
      out << "stop " << s.stop << " alg=" << s.algorithm_bins << " cert=" << s.certificate_bins
          << " ratio=" << show(s.ratio) << "\n";
    }
    out << "lb_value " << show(lb_value(o.k)) << "\n";
    out << "duel batch vs " << result.algorithm << " k=" << o.k << " ratio=" << show(result.max_ratio) << "\n";
    return kExitOk;
  }
  if (sub.count("--n") > 0 || !o.delta.empty()) throw UsageError("--n/--delta only apply to --adversary batch");

  std::unique_ptr<AdaptiveAdversary> adversary;
  int k = o.k;
  if (o.adversary == "abs-k3") {
    if (!has_k) k = 3;
    if (k != 3) throw UsageError("--adversary abs-k3 plays k = 3 only");
    adversary = std::make_unique<AbsK3>(optional_rational("--eps", o.eps).value_or(AbsK3::default_eps()));
  } else {
    if (!has_k) k = 4;
    adversary = std::make_unique<AbsK4Plus>(k, optional_rational("--eps", o.eps).value_or(AbsK4Plus::default_eps(k)));
  }
  auto algorithm = make_algorithm(o.alg, k);
  const DuelResult result = run_duel(*adversary, *algorithm);
  out << "items " << result.instance.size() << " alg=" << result.algorithm_packing.bin_count()
      << " cert=" << result.certificate.claimed_count << "\n";
  out << "duel " << result.adversary << " vs " << result.algorithm << " k=" << k << " ratio=" << show(result.ratio)
      << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string what, in, packing, opt;
  int k = 0;
  std::size_t random = 0;
  std::uint64_t seed = 0;
};

struct Tally {
  std::size_t instances = 0;
  std::size_t checked = 0;
  std::size_t not_applicable = 0;
  std::vector<std::string> problems;
};

Packing optimal_packing(const Instance& instance) { return exact_opt(instance).certificate.packing; }

void check_weights(const Instance& instance, const Packing& ff, const Packing& cert, Tally& tally,
                   const std::string& label) {
  ++tally.instances;
  if (instance.k() == 3) {
    const K3Report report = verify_k3_case1(instance, ff, cert);
    if (report.status == CheckStatus::not_applicable) {
      ++tally.not_applicable;
      return;
    }
    ++tally.checked;
    for (const auto& v : report.violations) {
      tally.problems.push_back(label + "certificate bin " + std::to_string(v.bin) + " weighs " + show(v.weight) +
                               " > 11/6");
    }
    return;
  }
  ++tally.checked;
  const auto roles = assign_roles(instance, ff, cert);
  const OptBinsReport bins = verify_opt_bins(instance, cert, roles);
  for (const auto& v : bins.violations) {
    tally.problems.push_back(label + "certificate bin " + std::to_string(v.bin) + " weighs " + show(v.weight) +
                             " > " + bins.bound.str());
  }
  const FfTotalReport total = verify_ff_total(instance, ff, roles);
  if (!total.ok) {
    tally.problems.push_back(label + "total weight " + show(total.total_weight) + " < FF " +
                             std::to_string(total.ff_bins) + " - " + total.slack.str());
  }
}

void check_ff_invariants(const Instance& instance, const Packing& cert, Tally& tally, const std::string& label) {
  ++tally.instances;
  ++tally.checked;
  const RunResult ff = run_algorithm("ff", instance);
  for (const auto& msg : check_ff_minimality(instance, ff.trace)) tally.problems.push_back(label + msg);
  for (const auto& msg : check_ff_structure(instance, ff.packing, cert).violations) {
    tally.problems.push_back(label + msg);
  }
}

void check_tf_run(const Instance& instance, Tally& tally, const std::string& label) {
  ++tally.instances;
  ++tally.checked;
  ThinAndFat tf(instance.k());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    tf.place(instance[i]);
    for (const auto& msg : check_tf_invariants(tf)) {
      tally.problems.push_back(label + "after item " + std::to_string(i) + ": " + msg);
    }
  }
}

int report_tally(const std::string& what, int k, const Tally& tally, std::ostream& out) {
  for (const auto& p : tally.problems) out << "violation " << p << "\n";
  out << what << " k=" << k << " instances=" << tally.instances << " checked=" << tally.checked;
  if (tally.not_applicable > 0) out << " not-applicable=" << tally.not_applicable;
  out << " violations=" << tally.problems.size() << "\n";
  out << (tally.problems.empty() ? "pass" : "fail") << "\n";
  return tally.problems.empty() ? kExitOk : kExitVerificationFailed;
}

int verify_packing_file(const VerifyOptions& o, std::ostream& out) {
  if (o.packing.empty()) throw UsageError("--what packing needs --packing");
  const Instance instance = load_instance(o.in, o.k);
  Packing packing;
  try {
    packing = read_packing(read_file(o.packing), instance);
  } catch (const MalformedPacking& e) {
    out << "violation malformed: " << e.what() << "\nfail\n";
    return kExitVerificationFailed;
  }
  const ValidationReport report = validate_packing(instance, packing);
  for (const auto& v : report.violations) out << "violation " << v.rule << ": " << v.message << "\n";
  out << "bins " << packing.bin_count() << "\n" << (report.ok ? "ok" : "fail") << "\n";
  return report.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const VerifyOptions& o, const CLI::App& sub, std::ostream& out) {
  const bool random = sub.count("--random") > 0;
  if (random && sub.count("--seed") == 0) throw UsageError("--random needs --seed");
  if (random == !o.in.empty()) throw UsageError("give exactly one of --in or --random");
  if (o.what == "packing") {
    if (random) throw UsageError("--what packing checks a file; --random does not apply");
    return verify_packing_file(o, out);
  }

  Tally tally;
  if (random) {
    const auto instances = random_grid_sweep(o.k, o.random, o.seed);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Instance& instance = instances[i];
      const std::string label = "instance " + std::to_string(i) + ": ";
      if (o.what == "weights") {
        check_weights(instance, run_algorithm("ff", instance).packing, optimal_packing(instance), tally, label);
      } else if (o.what == "ff-invariants") {
        check_ff_invariants(instance, optimal_packing(instance), tally, label);
      } else {
        check_tf_run(instance, tally, label);
      }
    }
    return report_tally(o.what, o.k, tally, out);
  }

  const Instance instance = load_instance(o.in, o.k);
  auto certificate = [&]() {
    if (o.opt.empty()) return optimal_packing(instance);
    return read_packing(read_file(o.opt), instance);
  };
  if (o.what == "weights") {
    if (o.opt.empty()) throw UsageError("--what weights needs --opt");
    const Packing ff = o.packing.empty() ? run_algorithm("ff", instance).packing
                                         : read_packing(read_file(o.packing), instance);
    check_weights(instance, ff, certificate(), tally, "");
  } else if (o.what == "ff-invariants") {
    check_ff_invariants(instance, certificate(), tally, "");
  } else {
    check_tf_run(instance, tally, "");
  }
  return report_tally(o.what, o.k, tally, out);
}

// ---------------------------------------------------------------- table

struct TableOptions {
  int k_from = 0;
  int k_to = 0;
  long ell = 0;
};

int cmd_table(const TableOptions& o, const CLI::App& sub, std::ostream& out) {
  const auto rows = ratio_table(o.k_from, o.k_to, sub.count("--ell") > 0 ? std::optional<long>(o.ell) : std::nullopt);
  out << std::left << std::setw(4) << "k" << std::setw(10) << "family" << std::setw(6) << "ell" << std::setw(8) << "ff"
      << std::setw(8) << "cert" << std::setw(24) << "ratio"
      << "asymptote\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(4) << row.k << std::setw(10) << row.family << std::setw(6) << row.ell
        << std::setw(8) << row.ff_bins << std::setw(8) << row.certificate_bins << std::setw(24) << show(row.ratio)
        << show(row.asymptote) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online cardinality-constrained bin packing: algorithms, adversaries, exact optima, verifiers",
               "cardbin"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance and its certificate");
  gen_cmd->add_option("--family", gen.family)->required()->check(CLI::IsMember({"ff-small", "ff-mid", "ff-large", "batch"}));
  gen_cmd->add_option("--k", gen.k)->required();
  gen_cmd->add_option("--ell", gen.ell);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--stop", gen.stop)->check(CLI::Range(1, 4));
  gen_cmd->add_option("--eps", gen.eps);
  gen_cmd->add_option("--delta", gen.delta);
  gen_cmd->add_option("--out", gen.out)->required();
  gen_cmd->add_option("--cert", gen.cert);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run an online algorithm on an instance file");
  run_cmd->add_option("--alg", run.alg)->required()->check(CLI::IsMember(algorithm_names()));
  run_cmd->add_option("--k", run.k)->required();
  run_cmd->add_option("--in", run.in)->required();
  run_cmd->add_option("--out", run.out);
  run_cmd->add_option("--trace", run.trace);

  OptOptions opt;
  auto* opt_cmd = app.add_subcommand("opt", "exact optimum by branch and bound");
  opt_cmd->add_option("--k", opt.k)->required();
  opt_cmd->add_option("--in", opt.in)->required();
  opt_cmd->add_option("--budget", opt.budget);
  opt_cmd->add_option("--out", opt.out);

  DuelOptions duel;
  auto* duel_cmd = app.add_subcommand("duel", "play an adversary against an online algorithm");
  duel_cmd->add_option("--adversary", duel.adversary)->required()->check(CLI::IsMember({"abs-k3", "abs-k4plus", "batch"}));
  duel_cmd->add_option("--alg", duel.alg)->required()->check(CLI::IsMember(algorithm_names()));
  duel_cmd->add_option("--k", duel.k);
  duel_cmd->add_option("--eps", duel.eps);
  duel_cmd->add_option("--n", duel.n);
  duel_cmd->add_option("--delta", duel.delta);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check packings, weight bounds or structural invariants");
  verify_cmd->add_option("--what", verify.what)
      ->required()
      ->check(CLI::IsMember({"packing", "weights", "ff-invariants", "tf-invariants"}));
  verify_cmd->add_option("--k", verify.k)->required();
  verify_cmd->add_option("--in", verify.in);
  verify_cmd->add_option("--packing", verify.packing);
  verify_cmd->add_option("--opt", verify.opt);
  verify_cmd->add_option("--random", verify.random);
  verify_cmd->add_option("--seed", verify.seed);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "FF on the killer families against their certificates");
  table_cmd->add_option("--k-from", table.k_from)->required();
  table_cmd->add_option("--k-to", table.k_to)->required();
  table_cmd->add_option("--ell", table.ell);

  std::vector<std::string> argv_storage{"cardbin"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cardbin: " << e.what() << "\n" << kSynopsis << "\n";
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, *gen_cmd, out);
    if (*run_cmd) return cmd_run(run, out);
    if (*opt_cmd) return cmd_opt(opt, out);
    if (*duel_cmd) return cmd_duel(duel, *duel_cmd, out);
    if (*verify_cmd) return cmd_verify(verify, *verify_cmd, out);
    return cmd_table(table, *table_cmd, out);
  } catch (const std::exception& e) {
    // bad flags, unreadable files and out-of-range parameters alike
    err << "cardbin: " << e.what() << "\n" << kSynopsis << "\n";
  }
  return kExitUsage;
}

}  // namespace cardbin
