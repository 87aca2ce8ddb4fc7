#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "config.hpp"

namespace gfix::cli {

namespace {

struct CommandInfo {
  std::string name;
  std::string help;
  std::vector<std::string> keys;  // settings echoed in the report header
};

const std::vector<std::string> kSamplingKeys = {"seed", "samples", "tol", "min-separation",
                                                "box-low", "box-high"};

std::vector<std::string> with_sampling(std::vector<std::string> keys) {
  keys.insert(keys.end(), kSamplingKeys.begin(), kSamplingKeys.end());
  return keys;
}

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"check-axioms", "Sample the five G-metric axioms on a catalog space", with_sampling({"space"})},
      {"check-derived", "Sample the inequalities every G-metric inherits", with_sampling({"space"})},
      {"check-convexity", "Sample the convex-structure inequality",
       with_sampling({"space", "structure"})},
      {"check-condition", "Sample a contractive condition for a mapping",
       with_sampling({"space", "mapping", "condition", "coeff"})},
      {"iterate", "Run the Mann process and write the trace CSV",
       {"space", "mapping", "condition", "coeff", "schedule", "alpha", "x0", "max-iters",
        "residual-tol", "error-tol", "tol"}},
      {"bound", "Tabulate the contraction factor and product bound",
       {"condition", "coeff", "schedule", "alpha", "max-iters"}},
  };
  return table;
}

/// Report destination: the --out file when given, `fallback` otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ConfigError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void write_header(std::ostream& os, const CommandInfo& cmd, const ExperimentConfig& cfg) {
  os << "# gfix " << cmd.name << "\n";
  for (const auto& key : cmd.keys) os << "# " << key << "=" << cfg.raw.at(key) << "\n";
}

std::string witness_text(const Violation& v) {
  std::string out;
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i != 0) out += " ";
    out += to_string(v.witness[i]);
  }
  return out;
}

void write_report(std::ostream& os, const CheckReport& r) {
  os << "result=" << (r.passed ? "pass" : "fail") << "\n";
  os << "total_checks=" << r.total_checks << "\n";
  os << "violation_count=" << r.violation_count << "\n";
  os << "worst_margin=" << format_real(r.worst_margin) << "\n";
  if (r.worst_ratio) os << "worst_ratio=" << format_real(*r.worst_ratio) << "\n";
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    const Violation& v = r.violations[i];
    os << "violation." << (i + 1) << "=rule=" << v.rule << " margin=" << format_real(v.margin)
       << " lhs=" << format_real(v.lhs) << " rhs=" << format_real(v.rhs);
    if (v.weight) os << " lambda=" << format_real(*v.weight);
    os << " witness=" << witness_text(v) << "\n";
  }
}

int finish_check(const CommandInfo& cmd, const ExperimentConfig& cfg, const CheckReport& report,
                 std::ostream& out) {
  Sink sink(cfg.out, out);
  write_header(sink.get(), cmd, cfg);
  write_report(sink.get(), report);
  return report.passed ? kExitPassed : kExitViolations;
}

int cmd_check_axioms(const CommandInfo& cmd, const ExperimentConfig& cfg, std::ostream& out,
                     std::ostream&) {
  const GSpace space = make_space(cfg.space);
  return finish_check(cmd, cfg, check_axioms(space, cfg.plan, cfg.tol), out);
}

int cmd_check_derived(const CommandInfo& cmd, const ExperimentConfig& cfg, std::ostream& out,
                      std::ostream&) {
  const GSpace space = make_space(cfg.space);
  return finish_check(cmd, cfg, check_derived(space, cfg.plan, cfg.tol), out);
}

int cmd_check_convexity(const CommandInfo& cmd, const ExperimentConfig& cfg, std::ostream& out,
                        std::ostream&) {
  ConvexGSpace cs = make_convex_space(cfg.space);
  if (cfg.structure == "modi-centroid") {
    return finish_check(cmd, cfg,
                        check_modi_convexity(cs.space, centroid_structure(), cfg.plan, cfg.tol), out);
  }
  if (cfg.structure == "sum") {
    cs.structure = {"sum", [](const Point& x, const Point& y, double) {
                      std::vector<double> c(x.dim());
                      for (std::size_t i = 0; i < x.dim(); ++i) c[i] = x[i] + y[i];
                      return Point(std::move(c));
                    }};
  } else if (cfg.structure != "linear") {
    throw ConfigError("unknown structure '" + cfg.structure + "' (linear, sum, modi-centroid)");
  }
  return finish_check(cmd, cfg, check_convexity(cs, cfg.plan, cfg.tol), out);
}

int cmd_check_condition(const CommandInfo& cmd, const ExperimentConfig& cfg, std::ostream& out,
                        std::ostream&) {
  if (!cfg.condition) throw ConfigError("check-condition needs --condition");
  const GSpace space = make_space(cfg.space);
  const Mapping mapping = parse_mapping(cfg.mapping, space.dimension);
  return finish_check(cmd, cfg, check_condition(*cfg.condition, space, mapping, cfg.plan, cfg.tol),
                      out);
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

void write_verdict(std::ostream& os, const ApplicabilityVerdict& v) {
  os << "applicability=" << (v.satisfied ? "satisfied" : "not-satisfied") << "\n";
  os << "applicability_theorem=" << v.theorem << "\n";
  for (const auto& [name, value] : v.residuals) {
    os << "residual." << name << "=" << format_real(value) << "\n";
  }
  for (const auto& [name, value] : v.informational) {
    os << "informational." << name << "=" << format_real(value) << "\n";
  }
  if (!v.caveat.empty()) os << "caveat=" << v.caveat << "\n";
}

int cmd_iterate(const CommandInfo& cmd, const ExperimentConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const ConvexGSpace cs = make_convex_space(cfg.space);
  const Mapping mapping = parse_mapping(cfg.mapping, cs.space.dimension);
  const Point x0 = parse_point(cfg.x0, cs.space.dimension);
  if (!cs.space.contains(x0)) throw ConfigError("initial point lies outside " + cs.space.name);

  IterationTrace trace = run_mann(cs, mapping, x0, cfg.schedule, cfg.stop);

  std::vector<std::string> warnings;
  std::ostringstream details;
  std::optional<BoundReport> bound;

  if (cfg.schedule.divergent_sum() != SumDivergence::Divergent) {
    warnings.push_back("step sizes are not known to have an infinite sum; the product bound need "
                       "not vanish");
  }
  if (!cfg.condition) {
    details << "bound=omitted (no --condition)\n";
  } else {
    const ApplicabilityVerdict verdict = check_applicability(*cfg.condition);
    write_verdict(details, verdict);
    if (!verdict.satisfied) {
      warnings.push_back("coefficients fail the convergence constraints; bound columns omitted");
    } else {
      const ContractionFactor factor = contraction_factor(*cfg.condition);
      details << "delta=" << format_real(factor.delta) << "\n";
      if (factor.vacuous) {
        warnings.push_back("contraction factor delta >= 1; the product bound is vacuous and "
                           "bound columns are omitted");
      } else if (!trace.has_true_error()) {
        warnings.push_back("mapping has no known fixed point; bound columns omitted");
      } else {
        bound = verify_bound(trace, factor.delta, cfg.tol);
        attach_bounds(trace, *bound);
      }
    }
  }

  // Trace CSV goes to --out; without it the CSV owns stdout and the summary
  // moves to stderr.
  std::ostream& summary = cfg.out.empty() ? err : out;
  {
    Sink sink(cfg.out, out);
    std::ostream& csv = sink.get();
    csv << kTraceHeader << "\n";
    for (const TraceRecord& r : trace.records) {
      std::optional<double> slack;
      if (r.bound && r.true_error) slack = *r.bound - *r.true_error;
      csv << r.n << "," << format_real(r.alpha) << "," << format_real(r.residual) << ","
          << optional_cell(r.true_error) << "," << optional_cell(r.bound) << ","
          << optional_cell(slack) << "\n";
    }
  }

  write_header(summary, cmd, cfg);
  summary << "status=" << to_string(trace.status) << "\n";
  summary << "iterations=" << (trace.records.size() - 1) << "\n";
  summary << "final_residual=" << format_real(trace.records.back().residual) << "\n";
  if (trace.records.back().true_error) {
    summary << "final_true_error=" << format_real(*trace.records.back().true_error) << "\n";
  }
  summary << "schedule=" << cfg.schedule.describe() << "\n";
  summary << "divergent_sum=" << to_string(cfg.schedule.divergent_sum()) << "\n";
  summary << details.str();
  if (bound) {
    summary << "bound_verdict=" << (bound->holds ? "holds" : "violated") << "\n";
    summary << "min_slack=" << format_real(bound->min_slack) << "\n";
    if (bound->first_violation) summary << "first_violation=" << *bound->first_violation << "\n";
  }
  for (const auto& w : warnings) {
    summary << "warning=" << w << "\n";
    if (&summary != &err) err << "warning: " << w << "\n";
  }

  if (trace.status == Termination::Divergence) return kExitViolations;
  if (bound && !bound->holds) return kExitViolations;
  return kExitPassed;
}

int cmd_bound(const CommandInfo& cmd, const ExperimentConfig& cfg, std::ostream& out,
              std::ostream& err) {
  if (!cfg.condition) throw ConfigError("bound needs --condition");
  const ApplicabilityVerdict verdict = check_applicability(*cfg.condition);
  ContractionFactor factor;
  try {
    factor = contraction_factor(*cfg.condition);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolations;
  }
  if (factor.vacuous) {
    err << "warning: contraction factor " << format_real(factor.delta)
        << " >= 1; the product bound is vacuous\n";
  }

  std::ostream& summary = cfg.out.empty() ? err : out;
  if (!factor.vacuous) {
    const RateBound rb = product_bound(factor.delta, cfg.schedule, cfg.stop.max_iters);
    Sink sink(cfg.out, out);
    std::ostream& csv = sink.get();
    csv << kBoundHeader << "\n";
    for (std::size_t n = 0; n < rb.products.size(); ++n) {
      csv << n << "," << format_real(cfg.schedule.at(n)) << ","
          << (n < rb.factors.size() ? format_real(rb.factors[n]) : "") << ","
          << format_real(rb.products[n]) << "\n";
    }
    write_header(summary, cmd, cfg);
    summary << "final_product=" << format_real(rb.products.back()) << "\n";
    summary << "log_space=" << (rb.log_space ? "true" : "false") << "\n";
  } else {
    write_header(summary, cmd, cfg);
  }
  summary << "delta=" << format_real(factor.delta) << "\n";
  summary << "vacuous=" << (factor.vacuous ? "true" : "false") << "\n";
  summary << "divergent_sum=" << to_string(cfg.schedule.divergent_sum()) << "\n";
  write_verdict(summary, verdict);
  return verdict.satisfied && !factor.vacuous ? kExitPassed : kExitViolations;
}

using Handler = std::function<int(const CommandInfo&, const ExperimentConfig&, std::ostream&,
                                  std::ostream&)>;

Handler handler_for(const std::string& name) {
  if (name == "check-axioms") return cmd_check_axioms;
  if (name == "check-derived") return cmd_check_derived;
  if (name == "check-convexity") return cmd_check_convexity;
  if (name == "check-condition") return cmd_check_condition;
  if (name == "iterate") return cmd_iterate;
  return cmd_bound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sampled G-metric axiom checks and Mann iteration experiments", "gfix"};
  app.require_subcommand(1);

  // Flag values land here only when given; defaults are layered separately
  // so the config file can sit between them.
  Settings flags;
  std::string config_path;
  std::vector<std::pair<CLI::App*, const CommandInfo*>> subs;

  for (const CommandInfo& info : commands()) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->add_option("--config", config_path, "key=value settings file (flags take precedence)");
    for (const auto& key : default_settings()) {
      const std::string& name = key.first;
      sub->add_option_function<std::string>(
          "--" + name, [&flags, name](const std::string& v) { flags[name] = v; },
          "default: " + (key.second.empty() ? std::string("(unset)") : key.second));
    }
    subs.emplace_back(sub, &info);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPassed;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPassed;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  const CommandInfo* chosen = nullptr;
  for (const auto& [sub, info] : subs) {
    if (sub->parsed()) chosen = info;
  }
  if (chosen == nullptr) return kExitConfigError;

  try {
    Settings settings = default_settings();
    if (const char* env = std::getenv("GFIX_SEED"); env != nullptr && *env != '\0') {
      settings["seed"] = env;
    }
    if (!config_path.empty()) {
      for (auto& [k, v] : load_config_file(config_path)) settings[k] = v;
    }
    for (auto& [k, v] : flags) settings[k] = v;

    const ExperimentConfig cfg = ExperimentConfig::resolve(settings);
    return handler_for(chosen->name)(*chosen, cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace gfix::cli
