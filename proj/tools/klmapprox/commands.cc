// Copyright 2026 The klmapprox Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "klmapprox/commands.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "klm/baselines.h"
#include "klm/distance.h"
#include "klm/error.h"
#include "klm/io.h"
#include "klm/oracle.h"
#include "klm/pipeline.h"
#include "klm/reduce.h"
#include "klmapprox/bench.h"

namespace klm::cli {

namespace {

// Certificate check tolerance for reduce: d_K(X, X') against eps(X, S).
constexpr double kCertificateTolerance = 1e-9;
constexpr double kOracleTolerance = 1e-12;

std::string format12(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

// Thrown for command-level failures that are not library errors.
struct CommandFailure {
  int exit_code;
  std::string message;
};

Method method_or_fail(const std::string& name) {
  const auto method = parse_method(name);
  if (!method) {
    throw CommandFailure{kExitBadInput, "unknown method '" + name +
                                            "' (expected klm, opttrim, trim, sample)"};
  }
  return *method;
}

std::size_t support_cap() {
  const char* env = std::getenv("KLM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultSupportCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(env, &end, 10);
  if (*end != '\0' || cap == 0) {
    throw CommandFailure{kExitBadInput,
                         std::string("KLM_CAP must be a positive integer, got '") + env + "'"};
  }
  return static_cast<std::size_t>(cap);
}

MassPolicy policy_of(bool renormalize) {
  return renormalize ? MassPolicy::kRenormalize : MassPolicy::kStrict;
}

struct ReduceFlags {
  std::size_t m = 0;
  std::string method = "klm";
  std::string out;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  std::optional<double> eps;
  bool renormalize = false;
};

// The --out extension wins; anything else keeps the input's format.
FileFormat output_format(const std::string& path, FileFormat input) {
  const auto ext = std::filesystem::path(path).extension();
  if (ext == ".json") return FileFormat::kJson;
  if (ext == ".csv") return FileFormat::kCsv;
  return input;
}

ReducerConfig reducer_from(const ReduceFlags& flags) {
  ReducerConfig config;
  config.method = method_or_fail(flags.method);
  config.m = flags.m;
  config.eps = flags.eps;
  config.samples = flags.samples;
  config.seed = flags.seed;
  if (config.m == 0) throw CommandFailure{kExitBadInput, "--m must be >= 1"};
  if (config.samples == 0) throw CommandFailure{kExitBadInput, "--samples must be >= 1"};
  if (config.eps && config.method != Method::kTrim) {
    throw CommandFailure{kExitBadInput, "--eps only applies to --method trim"};
  }
  return config;
}

int cmd_distance(const std::string& a, const std::string& b, bool renormalize,
                 std::ostream& out) {
  const auto x = read_distribution(a, policy_of(renormalize));
  const auto y = read_distribution(b, policy_of(renormalize));
  out << format12(kolmogorov_distance(x.dist, y.dist)) << '\n';
  return kExitOk;
}

int cmd_reduce(const std::string& file, const ReduceFlags& flags,
               std::ostream& out, std::ostream& err) {
  const ReducerConfig config = reducer_from(flags);
  const auto input = read_distribution(file, policy_of(flags.renormalize));

  DiscreteDistribution approx = input.dist;
  double distance = 0.0;
  if (config.method == Method::kKlm) {
    ReductionResult result = reduce(input.dist, config.m);
    const double measured = kolmogorov_distance(input.dist, result.approx);
    if (std::abs(measured - result.distance) > kCertificateTolerance) {
      err << "certificate mismatch: d_K = " << format12(measured)
          << " but eps(X, S) = " << format12(result.distance) << '\n';
      return kExitInvariant;
    }
    approx = std::move(result.approx);
    distance = result.distance;
  } else {
    BaselineResult result = apply_reducer(input.dist, config);
    approx = std::move(result.approx);
    distance = result.two_sided_error;
  }

  write_file_atomic(flags.out, format_distribution(approx, output_format(flags.out, input.format)));
  out << "method=" << method_name(config.method) << " m_effective=" << approx.size()
      << " distance=" << format12(distance) << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& file, std::optional<std::size_t> m,
               bool renormalize, std::ostream& out) {
  const auto input = read_distribution(file, policy_of(renormalize));
  const std::size_t n = input.dist.size();
  if (n > kOracleMaxSupport) {
    throw CommandFailure{kExitBadInput, "support of " + std::to_string(n) +
                                            " exceeds the oracle limit of " +
                                            std::to_string(kOracleMaxSupport)};
  }
  if (m && *m == 0) throw CommandFailure{kExitBadInput, "--m must be >= 1"};
  std::size_t first = m ? *m : 1;
  std::size_t last = m ? *m : n;
  bool all_match = true;
  for (std::size_t k = first; k <= last; ++k) {
    const ReductionResult oracle = brute_force_reduce(input.dist, k);
    const ReductionResult fast = reduce(input.dist, k);
    const bool match = std::abs(oracle.distance - fast.distance) <= kOracleTolerance;
    const bool same_support = oracle.selection.indices == fast.selection.indices;
    all_match = all_match && match;
    out << "m=" << k << " oracle=" << format12(oracle.distance)
        << " fast=" << format12(fast.distance) << ' '
        << (match ? "MATCH" : "MISMATCH")
        << (same_support ? " support=same" : " support=different") << '\n';
  }
  return all_match ? kExitOk : kExitInvariant;
}

struct BenchFlags {
  std::size_t n = 100;
  std::size_t instances = 50;
  std::vector<std::size_t> ms = {2, 4, 8, 10, 20, 50};
  std::vector<std::string> methods = {"klm", "opttrim", "trim"};
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::string out;
};

int cmd_bench(const BenchFlags& flags, std::ostream& out) {
  BenchConfig config;
  config.n = flags.n;
  config.instances = flags.instances;
  config.ms = flags.ms;
  config.seed = flags.seed;
  config.samples = flags.samples;
  config.methods.clear();
  for (const auto& name : flags.methods) config.methods.push_back(method_or_fail(name));
  if (config.n < 2) throw CommandFailure{kExitBadInput, "--n must be >= 2"};
  if (config.instances == 0) throw CommandFailure{kExitBadInput, "--instances must be >= 1"};
  for (std::size_t m : config.ms) {
    if (m == 0) throw CommandFailure{kExitBadInput, "--m values must be >= 1"};
  }
  const std::string csv = bench_csv(run_bench(config));
  if (flags.out.empty()) {
    out << csv;
  } else {
    write_file_atomic(flags.out, csv);
  }
  return kExitOk;
}

struct PipelineFlags {
  ReduceFlags reduce;
  std::vector<double> deadlines;
};

int cmd_pipeline(const std::string& tree_file, const PipelineFlags& flags,
                 std::ostream& out) {
  const ReducerConfig config = reducer_from(flags.reduce);
  const std::size_t cap = support_cap();
  const TaskTree tree = load_task_tree(tree_file, policy_of(flags.reduce.renormalize));
  const PipelineReport report = compare_pipeline(tree, config, flags.deadlines, cap);

  std::ostringstream csv;
  csv << "deadline,f_exact,f_approx,abs_diff\n";
  for (const auto& row : report.rows) {
    csv << format_double(row.deadline) << ',' << format_double(row.exact_cdf) << ','
        << format_double(row.approx_cdf) << ',' << format_double(row.abs_diff) << '\n';
  }
  if (flags.reduce.out.empty()) {
    out << csv.str();
  } else {
    write_file_atomic(flags.reduce.out, csv.str());
  }
  out << "method=" << method_name(config.method) << " m=" << config.m
      << " exact_support=" << report.exact_support_size
      << " approx_support=" << report.approx_support_size
      << " d_k=" << format12(report.d_k) << '\n';
  return kExitOk;
}

void add_reduce_flags(CLI::App* cmd, ReduceFlags& flags) {
  cmd->add_option("--method", flags.method, "klm | opttrim | trim | sample")
      ->capture_default_str();
  cmd->add_option("--seed", flags.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--samples", flags.samples, "draws for --method sample")
      ->capture_default_str();
  cmd->add_option("--eps", flags.eps, "trim threshold in (0,1); default 1/m");
  cmd->add_flag("--renormalize", flags.renormalize,
                "divide input probabilities by their actual sum");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal support-size reduction of discrete distributions "
               "under the Kolmogorov distance"};
  app.name("klmapprox");
  app.require_subcommand(1);

  std::string file_a, file_b;
  bool renormalize = false;
  auto* distance = app.add_subcommand("distance", "Kolmogorov distance of two files");
  distance->add_option("a", file_a, "first distribution")->required();
  distance->add_option("b", file_b, "second distribution")->required();
  distance->add_flag("--renormalize", renormalize, "renormalize both inputs");

  std::string reduce_file;
  ReduceFlags reduce_flags;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a distribution to at most m points");
  reduce_cmd->add_option("file", reduce_file, "input distribution")->required();
  reduce_cmd->add_option("--m", reduce_flags.m, "support budget")->required();
  reduce_cmd->add_option("--out", reduce_flags.out, "output path")->required();
  add_reduce_flags(reduce_cmd, reduce_flags);

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Average errors on random instances");
  bench->add_option("--n", bench_flags.n, "support size")->capture_default_str();
  bench->add_option("--instances", bench_flags.instances, "number of instances")
      ->capture_default_str();
  bench->add_option("--m", bench_flags.ms, "support budgets")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--methods", bench_flags.methods, "methods")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--seed", bench_flags.seed, "master seed")->capture_default_str();
  bench->add_option("--samples", bench_flags.samples, "draws for the sample method")
      ->capture_default_str();
  bench->add_option("--out", bench_flags.out, "CSV output path (default stdout)");

  std::string tree_file;
  PipelineFlags pipeline_flags;
  auto* pipeline = app.add_subcommand("pipeline", "Exact vs reduced task-tree evaluation");
  pipeline->add_option("tree", tree_file, "task tree JSON")->required();
  pipeline->add_option("--m", pipeline_flags.reduce.m, "support budget")->required();
  pipeline->add_option("--deadlines", pipeline_flags.deadlines, "deadlines t1,t2,...")
      ->delimiter(',');
  pipeline->add_option("--out", pipeline_flags.reduce.out, "CSV output path (default stdout)");
  add_reduce_flags(pipeline, pipeline_flags.reduce);

  std::string oracle_file;
  std::optional<std::size_t> oracle_m;
  bool oracle_renormalize = false;
  auto* oracle = app.add_subcommand("oracle", "Compare against exhaustive search");
  oracle->add_option("file", oracle_file, "input distribution")->required();
  oracle->add_option("--m", oracle_m, "support budget (default: every m in 1..n)");
  oracle->add_flag("--renormalize", oracle_renormalize, "renormalize the input");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "klmapprox: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*distance) return cmd_distance(file_a, file_b, renormalize, out);
    if (*reduce_cmd) return cmd_reduce(reduce_file, reduce_flags, out, err);
    if (*bench) return cmd_bench(bench_flags, out);
    if (*pipeline) return cmd_pipeline(tree_file, pipeline_flags, out);
    if (*oracle) return cmd_oracle(oracle_file, oracle_m, oracle_renormalize, out);
  } catch (const CommandFailure& f) {
    err << "klmapprox: " << f.message << '\n';
    return f.exit_code;
  } catch (const Error& e) {
    err << "klmapprox: " << e.what() << '\n';
    return e.code() == ErrorCode::kSupportExplosion ? kExitSupportExplosion
                                                    : kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace klm::cli
