// Copyright 2026 The lppgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lppgame/errors.h"
#include "lppgame/game.h"
#include "lppgame/generator.h"
#include "lppgame/model.h"
#include "lppgame/oracle.h"
#include "lppgame/value_function.h"

namespace lppgame::cli {
namespace {

using nlohmann::json;

// Bad input files, specs and arguments. Everything else that goes wrong
// after the inputs are understood is a domain failure.
class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr int kMaxListedSurvivors = 50;

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string Tuple(const std::vector<double>& v) { return StrategyProfile{v}.ToString(); }

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LppInstance LoadOrFail(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseInstance(text);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Partition PartitionOrFail(const std::string& spec, int producers) {
  try {
    return ParsePartitionSpec(spec, producers);
  } catch (const Error& e) {
    throw UsageError(std::string("partition: ") + e.what());
  }
}

StrategyProfile ParseProfile(const std::string& text, int players) {
  StrategyProfile z;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || errno != 0 || end == item.c_str() ||
        item.find_first_not_of(" \t", end - item.c_str()) != std::string::npos) {
      throw UsageError("profile: cannot parse '" + item + "'");
    }
    z.amounts.push_back(v);
  }
  if (z.size() != players) {
    throw UsageError("profile has " + std::to_string(z.size()) + " entries, partition has " +
                     std::to_string(players) + " blocks");
  }
  return z;
}

Tolerances TolerancesFor(const GlobalOptions& options) {
  if (!(options.tolerance_scale > 0) || !std::isfinite(options.tolerance_scale)) {
    throw UsageError("--tolerance-scale must be positive");
  }
  return Tolerances{}.Scaled(options.tolerance_scale);
}

json DeviationJson(const Deviation& d) {
  std::vector<int> players;
  for (int p : d.players) players.push_back(p + 1);
  return {{"players", players},
          {"amounts", d.amounts},
          {"payoffs_before", d.payoffs_before},
          {"payoffs_after", d.payoffs_after}};
}

json ReportJson(const StrategyProfile& z, const EquilibriumReport& r) {
  json doc = {{"profile", z.amounts},
              {"payoffs", r.payoffs},
              {"scarce", r.scarce},
              {"nash", r.is_nash},
              {"strict", r.is_strict},
              {"strong", r.is_strong},
              {"family", ToString(r.family)},
              {"tolerance_ambiguous", r.tolerance_ambiguous}};
  if (r.nash_witness) doc["nash_witness"] = DeviationJson(*r.nash_witness);
  if (r.strict_witness) doc["strict_witness"] = DeviationJson(*r.strict_witness);
  if (r.strong_witness) doc["strong_witness"] = DeviationJson(*r.strong_witness);
  return doc;
}

template <typename Body>
CommandResult Guard(const char* command, const GlobalOptions& options, Body body) {
  CommandResult result;
  try {
    result = body();
  } catch (const UsageError& e) {
    result = {kUsageFailure, std::string("error: ") + e.what() + "\n", json{{"error", e.what()}}};
  } catch (const ConfigError& e) {
    result = {kUsageFailure, std::string("error: ") + e.what() + "\n", json{{"error", e.what()}}};
  } catch (const std::exception& e) {
    result = {kDomainFailure, std::string("error: ") + e.what() + "\n", json{{"error", e.what()}}};
  }
  if (options.output) {
    if (!result.document) result.document = json::object();
    (*result.document)["command"] = command;
    (*result.document)["exit_code"] = result.exit_code;
  } else {
    result.document.reset();
  }
  return result;
}

}  // namespace

CommandResult Validate(const std::string& instance_path, const GlobalOptions& options) {
  return Guard("validate", options, [&] {
    const LppInstance inst = LoadOrFail(instance_path);
    const ValidationReport report = Validate(inst);
    std::ostringstream out;
    out << instance_path << ": q = " << inst.resources << ", g = " << inst.products
        << ", n = " << inst.producers << "\n";
    for (const auto& v : report.violations) out << "violation: " << v << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    out << (report.valid() ? "valid" : "invalid") << "\n";
    return CommandResult{report.valid() ? kSuccess : kDomainFailure, out.str(),
                         json{{"valid", report.valid()},
                              {"violations", report.violations},
                              {"warnings", report.warnings}}};
  });
}

CommandResult Demands(const std::string& instance_path, const std::string& partition_spec,
                      const GlobalOptions& options) {
  return Guard("demands", options, [&] {
    const LppInstance inst = LoadOrFail(instance_path);
    const Partition partition = PartitionOrFail(partition_spec, inst.producers);
    const Tolerances tol = TolerancesFor(options);
    const CoalitionGame game(inst, partition, tol);
    std::ostringstream out;
    json blocks = json::array();
    for (int i = 0; i < partition.size(); ++i) {
      const std::string name = partition.block(i).ToString();
      out << name << ": d = " << Num(game.demands().amount(i))
          << ", v* = " << Num(game.demands().best_value(i)) << "\n";
      blocks.push_back({{"block", name},
                        {"demand", game.demands().amount(i)},
                        {"best_value", game.demands().best_value(i)}});
    }
    const double total = game.demands().Total();
    out << "d(P) = " << Num(total) << ", r = " << Num(inst.pool) << ": "
        << (game.IsScarce() ? "scarce (d(P) > r)" : "sufficient (d(P) <= r)") << "\n";
    return CommandResult{kSuccess, out.str(),
                         json{{"partition", partition.ToString()},
                              {"blocks", blocks},
                              {"total_demand", total},
                              {"pool", inst.pool},
                              {"scarce", game.IsScarce()}}};
  });
}

CommandResult Analyze(const std::string& instance_path, const std::string& partition_spec,
                      int samples, std::uint64_t seed, const GlobalOptions& options) {
  return Guard("analyze", options, [&] {
    if (samples < 0) throw UsageError("--samples must be nonnegative");
    const LppInstance inst = LoadOrFail(instance_path);
    const Partition partition = PartitionOrFail(partition_spec, inst.producers);
    const CoalitionGame game(inst, partition, TolerancesFor(options));
    const EquilibriumSetDescription desc = game.Describe();
    std::ostringstream out;
    out << desc.ToString();
    json doc = {{"partition", partition.ToString()},
                {"scarce", desc.scarce},
                {"caps", desc.caps},
                {"total_demand", desc.total_demand},
                {"pool", desc.pool}};
    if (desc.scarce) {
      doc["families"] = {{"sum-equals-r", desc.sum_slice_nonempty},
                         {"all-complements-exceed-r", desc.exceed_box_nonempty},
                         {"complement-equality-point", desc.equality_point_feasible},
                         {"complement-boundary", desc.boundary_nonempty},
                         {"strict", desc.strict_family_nonempty}};
      if (desc.equality_value) doc["equality_value"] = *desc.equality_value;
    } else {
      doc["unique_equilibrium"] = desc.unique_equilibrium->amounts;
    }
    if (samples > 0) {
      std::vector<NashFamily> families;
      if (desc.scarce) {
        families = {NashFamily::kSumEqualsPool, NashFamily::kComplementEqualityPoint,
                    NashFamily::kComplementsExceedPool, NashFamily::kComplementBoundary};
      } else {
        families = {NashFamily::kDemandProfile};
      }
      json sampled = json::object();
      for (std::size_t f = 0; f < families.size(); ++f) {
        const FamilySample s = SampleEquilibria(desc, families[f], samples, seed + f);
        const std::string name = ToString(families[f]);
        sampled[name] = json::array();
        if (s.empty) {
          out << "samples [" << name << "]: family is empty\n";
          continue;
        }
        out << "samples [" << name << "]:\n";
        for (const StrategyProfile& z : s.profiles) {
          const EquilibriumReport r = game.Classify(z);
          if (!r.is_nash) {
            throw ConsistencyError("sampled profile " + z.ToString() + " of family " + name +
                                   " is not a Nash equilibrium");
          }
          out << "  " << z.ToString() << (r.is_strict ? " strict" : "")
              << (r.is_strong ? " strong" : "") << "\n";
          sampled[name].push_back(ReportJson(z, r));
        }
      }
      doc["samples"] = sampled;
    }
    return CommandResult{kSuccess, out.str(), doc};
  });
}

CommandResult Classify(const std::string& instance_path, const std::string& partition_spec,
                       const std::string& profile, const GlobalOptions& options) {
  return Guard("classify", options, [&] {
    const LppInstance inst = LoadOrFail(instance_path);
    const Partition partition = PartitionOrFail(partition_spec, inst.producers);
    const StrategyProfile z = ParseProfile(profile, partition.size());
    const CoalitionGame game(inst, partition, TolerancesFor(options));
    const EquilibriumReport r = game.Classify(z);
    auto mark = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream out;
    out << "profile z = " << z.ToString() << ", sum = " << Num(z.Sum())
        << ", r = " << Num(inst.pool) << (r.scarce ? " (scarce)" : " (sufficient)") << "\n";
    out << "payoffs: " << Tuple(r.payoffs) << "\n";
    out << "Nash: " << mark(r.is_nash);
    if (r.is_nash) out << " [" << ToString(r.family) << "]";
    out << "\nstrict Nash: " << mark(r.is_strict) << "\nstrong Nash: " << mark(r.is_strong)
        << "\n";
    if (r.nash_witness) out << "Nash witness: " << r.nash_witness->ToString() << "\n";
    if (r.strict_witness && r.is_nash) {
      out << "strict witness: " << r.strict_witness->ToString() << "\n";
    }
    if (r.strong_witness && r.is_nash) {
      out << "strong witness: " << r.strong_witness->ToString() << "\n";
    }
    if (r.tolerance_ambiguous) {
      out << "note: profile lies within tolerance of a family boundary\n";
    }
    return CommandResult{kSuccess, out.str(), ReportJson(z, r)};
  });
}

CommandResult Verify(const std::string& instance_path, const std::string& partition_spec,
                     double delta, const GlobalOptions& options) {
  return Guard("verify", options, [&] {
    if (!(delta > 0) || !std::isfinite(delta)) throw UsageError("--delta must be positive");
    if (options.jobs < 1) throw UsageError("--jobs must be at least 1");
    const LppInstance inst = LoadOrFail(instance_path);
    const Partition partition = PartitionOrFail(partition_spec, inst.producers);
    const CoalitionGame game(inst, partition, TolerancesFor(options));
    const std::vector<StrategyProfile> survivors =
        GridEquilibriumScan(game, delta, options.jobs);

    std::ostringstream out;
    std::vector<std::string> discrepancies;
    int ambiguous = 0;
    json listed = json::array();
    for (const StrategyProfile& z : survivors) {
      try {
        const EquilibriumReport r = game.Classify(z);
        if (r.tolerance_ambiguous) ++ambiguous;
        if (!r.is_nash) {
          discrepancies.push_back(z.ToString() + ": grid survivor refuted by best reply");
        } else if (r.family == NashFamily::kNone && !r.tolerance_ambiguous) {
          discrepancies.push_back(z.ToString() + ": grid survivor outside every family");
        }
        listed.push_back({{"profile", z.amounts}, {"family", ToString(r.family)}});
      } catch (const ConsistencyError& e) {
        discrepancies.push_back(z.ToString() + ": " + e.what());
      }
    }
    const EquilibriumSetDescription desc = game.Describe();
    if (!desc.scarce) {
      if (survivors.size() != 1 || survivors[0] != *desc.unique_equilibrium) {
        discrepancies.push_back("expected the demand profile " +
                                desc.unique_equilibrium->ToString() +
                                " as the only survivor");
      }
    } else {
      // Every family member must also withstand all grid deviations.
      for (NashFamily f : {NashFamily::kSumEqualsPool, NashFamily::kComplementEqualityPoint,
                           NashFamily::kComplementsExceedPool,
                           NashFamily::kComplementBoundary}) {
        for (const StrategyProfile& z : SampleEquilibria(desc, f, 20, 0).profiles) {
          if (!GridNashCheck(game, z, delta)) {
            discrepancies.push_back(z.ToString() + " [" + ToString(f) +
                                    "]: grid deviation improves on a family member");
          }
        }
      }
    }

    out << "grid step " << Num(delta) << ": " << survivors.size() << " surviving profiles\n";
    for (std::size_t i = 0; i < survivors.size() && i < kMaxListedSurvivors; ++i) {
      out << "  " << survivors[i].ToString() << "\n";
    }
    if (survivors.size() > kMaxListedSurvivors) {
      out << "  ... " << survivors.size() - kMaxListedSurvivors << " more\n";
    }
    if (ambiguous > 0) out << ambiguous << " survivors within tolerance of a boundary\n";
    for (const auto& d : discrepancies) out << "discrepancy: " << d << "\n";
    out << discrepancies.size() << " discrepancies\n";
    return CommandResult{discrepancies.empty() ? kSuccess : kDomainFailure, out.str(),
                         json{{"delta", delta},
                              {"survivors", listed},
                              {"discrepancies", discrepancies}}};
  });
}

CommandResult Generate(const std::string& config_path, std::uint64_t seed,
                       const std::optional<std::string>& out_path,
                       const GlobalOptions& options) {
  return Guard("generate", options, [&] {
    GeneratorConfig config;
    try {
      config = ParseGeneratorConfig(ReadFile(config_path));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(config_path + ": " + e.what());
    }
    const LppInstance inst = GenerateRandomInstance(config, seed);
    const ValidationReport report = Validate(inst);
    if (!report.valid()) {
      throw ConsistencyError("generated instance violates " + report.violations.front());
    }
    const std::string text = SerializeInstance(inst);
    std::ostringstream out;
    if (out_path) {
      std::ofstream file(*out_path);
      if (!(file << text << "\n")) throw UsageError("cannot write " + *out_path);
      out << "wrote " << *out_path << " (seed " << seed << ", n = " << inst.producers
          << ", q = " << inst.resources << ", g = " << inst.products << ")\n";
    } else {
      out << text << "\n";
    }
    return CommandResult{kSuccess, out.str(),
                         json{{"seed", seed}, {"instance", json::parse(text)}}};
  });
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of common-pool purchase games in linear production situations",
               "lppgame"};
  app.require_subcommand(1);
  GlobalOptions options;
  std::string output;
  app.add_option("--output", output, "write a JSON report to this path");
  app.add_option("--jobs", options.jobs, "threads for grid scans")->check(CLI::PositiveNumber);
  app.add_option("--tolerance-scale", options.tolerance_scale,
                 "multiply the value, demand and pool tolerances")
      ->check(CLI::PositiveNumber);

  std::string instance, spec, profile, config;
  int samples = 0;
  std::uint64_t seed = 0;
  double delta = 0.0;
  std::string out_path;

  CLI::App* validate = app.add_subcommand("validate", "check the modelling assumptions");
  validate->add_option("instance", instance)->required();

  CLI::App* demands = app.add_subcommand("demands", "optimal pool demand of every block");
  demands->add_option("instance", instance)->required();
  demands->add_option("partition", spec, "blocks as 1,3|2")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "describe and sample the equilibria");
  analyze->add_option("instance", instance)->required();
  analyze->add_option("partition", spec)->required();
  analyze->add_option("--samples", samples, "profiles per family");
  analyze->add_option("--seed", seed);

  CLI::App* classify = app.add_subcommand("classify", "test a profile");
  classify->add_option("instance", instance)->required();
  classify->add_option("partition", spec)->required();
  classify->add_option("profile", profile, "comma-separated requests in block order")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "grid scan against the characterization");
  verify->add_option("instance", instance)->required();
  verify->add_option("partition", spec)->required();
  verify->add_option("--delta", delta, "grid step")->required();

  CLI::App* generate = app.add_subcommand("generate", "draw a random instance");
  generate->add_option("config", config)->required();
  generate->add_option("--seed", seed);
  generate->add_option("--out", out_path);

  std::vector<const char*> argv{"lppgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageFailure;
  }
  if (!output.empty()) options.output = output;

  CommandResult result;
  if (validate->parsed()) {
    result = Validate(instance, options);
  } else if (demands->parsed()) {
    result = Demands(instance, spec, options);
  } else if (analyze->parsed()) {
    result = Analyze(instance, spec, samples, seed, options);
  } else if (classify->parsed()) {
    result = Classify(instance, spec, profile, options);
  } else if (verify->parsed()) {
    result = Verify(instance, spec, delta, options);
  } else {
    result = Generate(config, seed,
                      out_path.empty() ? std::nullopt : std::optional<std::string>(out_path),
                      options);
  }
  (result.exit_code == kSuccess ? out : err) << result.report;
  if (result.document) {
    std::ofstream file(*options.output);
    if (!(file << result.document->dump(2) << "\n")) {
      err << "error: cannot write " << *options.output << "\n";
      return kUsageFailure;
    }
  }
  return result.exit_code;
}

}  // namespace lppgame::cli
