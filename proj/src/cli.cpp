#include "mcolour/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mcolour/error.hpp"
#include "mcolour/generators.hpp"
#include "mcolour/io.hpp"
#include "mcolour/linear.hpp"
#include "mcolour/lll.hpp"
#include "mcolour/partition.hpp"
#include "mcolour/rounder.hpp"
#include "mcolour/verify.hpp"

namespace mcolour::cli {

namespace {

using Record = nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  bool no_verify = false;
};

struct ColourOptions {
  std::string algorithm;
  unsigned k = 0;
  std::string input;
  std::string output;
  std::string trace;
  std::string emit_split;
  std::optional<std::uint64_t> max_rounds;
  std::size_t trials = 0;
  std::size_t jobs = 1;
};

struct VerifyOptions {
  unsigned k = 0;
  std::string graph;
  std::string colours;
};

struct RoundOptions {
  std::string graph;
  std::string weights;
  std::string output;
  std::string trace;
};

struct ThresholdOptions {
  unsigned k = 0;
  unsigned r = 0;
};

struct GenerateOptions {
  std::string model;
  std::size_t n = 0;
  std::size_t r = 2;
  std::size_t min_degree = 0;
  std::string output;
};

struct OracleOptions {
  unsigned k = 0;
  ColourId palette = 0;
  std::string graph;
  std::string output;
};

class Reporter {
 public:
  Reporter(bool json, std::ostream& os) : json_(json), os_(os) {}

  void emit(const Record& record) {
    if (json_) {
      os_ << record.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& [key, value] : record.items()) {
      os_ << (first ? "" : " ") << key << '=' << text(value);
      first = false;
    }
    os_ << '\n';
  }

 private:
  static std::string text(const Record& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_null()) return "unverified";
    if (value.is_number_float()) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(3) << value.get<double>();
      return s.str();
    }
    return value.dump();
  }

  bool json_;
  std::ostream& os_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Writes a payload to `path`, or to `out` when no path was given.
void deliver(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path.empty()) {
    out << payload;
  } else {
    write_file_atomic(path, payload);
  }
}

std::string colouring_text(const Colouring& c) {
  std::ostringstream s;
  write_colouring(s, c);
  return s.str();
}

std::string split_text(const SplitMap& map) {
  std::ostringstream s;
  for (VertexId u = 0; u < map.vertices.size(); ++u) {
    const auto& split = map.vertices[u];
    s << u + 1 << ' ' << split.t << ' ' << split.m << ':';
    for (std::size_t j = 0; j < split.blocks.size(); ++j) {
      s << (j ? "; " : " ");
      for (std::size_t i = 0; i < split.blocks[j].size(); ++i) {
        s << (i ? " " : "") << split.blocks[j][i] + 1;
      }
    }
    s << '\n';
  }
  return s.str();
}

void report_violations(const VerifyReport& report, std::ostream& err) {
  for (const auto& v : report.violations) {
    err << "violation vertex=" << v.vertex + 1 << " colour=" << v.colour << " count=" << v.count
        << " bound=" << v.bound << '\n';
  }
}

struct Context {
  const GlobalOptions& global;
  std::ostream& out;
  std::ostream& err;

  // Summary lines share stdout with the payload only when the payload went to a file.
  std::ostream& summary_stream(const std::string& output_path) const {
    return output_path.empty() ? err : out;
  }
  Reporter reporter(std::ostream& os) const { return Reporter(global.format == "json-lines", os); }
};

int finish_colouring(const Context& ctx, const ColourOptions& opt, const Hypergraph& h,
                     const Colouring& c, const Stopwatch& clock) {
  Record summary;
  summary["algorithm"] = opt.algorithm;
  summary["k"] = opt.k;
  summary["palette"] = c.palette;
  int code = kOk;
  if (ctx.global.no_verify) {
    summary["valid"] = nullptr;
  } else {
    const auto report = verify(h, opt.k, c);
    summary["valid"] = report.valid;
    if (!report.valid) {
      report_violations(report, ctx.err);
      ctx.err << "internal error: self-verification failed\n";
      code = kInternal;
    }
  }
  if (code == kOk) deliver(opt.output, colouring_text(c), ctx.out);
  summary["seconds"] = clock.seconds();
  ctx.reporter(ctx.summary_stream(opt.output)).emit(summary);
  return code;
}

int run_random_trials(const Context& ctx, const ColourOptions& opt, const Hypergraph& h) {
  const std::uint64_t rounds = opt.max_rounds.value_or(default_max_rounds(h));
  std::vector<ResampleRun> runs(opt.trials);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < opt.trials; i = next++) {
      runs[i] = resample_colour(h, opt.k, ctx.global.seed + i, rounds);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, opt.trials));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto reporter = ctx.reporter(ctx.out);
  std::size_t successes = 0;
  bool all_verified = true;
  for (const auto& run : runs) {
    Record rec;
    rec["trial_seed"] = run.seed;
    rec["outcome"] = run.succeeded() ? "success" : "exhausted";
    rec["rounds"] = run.rounds_used;
    if (run.succeeded()) {
      ++successes;
      if (!ctx.global.no_verify && !verify(h, opt.k, *run.colouring).valid) all_verified = false;
    }
    reporter.emit(rec);
  }
  Record summary;
  summary["algorithm"] = opt.algorithm;
  summary["k"] = opt.k;
  summary["trials"] = opt.trials;
  summary["successes"] = successes;
  reporter.emit(summary);
  if (!all_verified) {
    ctx.err << "internal error: a successful run failed verification\n";
    return kInternal;
  }
  return successes == opt.trials ? kOk : kInvalid;
}

int cmd_colour(const Context& ctx, const ColourOptions& opt) {
  const Stopwatch clock;
  const auto h = read_hypergraph_file(opt.input);

  if (opt.algorithm == "partition") {
    const auto result = colour_partition(h, opt.k);
    if (!opt.trace.empty()) {
      std::ostringstream s;
      for (const auto& round : result.rounds) {
        s << "round " << round.round << " alpha " << format_rational(round.alpha) << " class_size "
          << round.class_size << '\n';
      }
      write_file_atomic(opt.trace, s.str());
    }
    return finish_colouring(ctx, opt, h, result.colouring, clock);
  }

  if (opt.algorithm == "linear") {
    const auto result = colour_linear(h, opt.k);
    if (!opt.emit_split.empty()) write_file_atomic(opt.emit_split, split_text(result.split));
    return finish_colouring(ctx, opt, h, result.colouring, clock);
  }

  // random-lll
  if (opt.trials > 0) return run_random_trials(ctx, opt, h);
  const auto run =
      resample_colour(h, opt.k, ctx.global.seed, opt.max_rounds.value_or(default_max_rounds(h)));
  if (!run.succeeded()) {
    Record summary;
    summary["algorithm"] = opt.algorithm;
    summary["k"] = opt.k;
    summary["palette"] = opt.k + 1;
    summary["valid"] = false;
    summary["outcome"] = "exhausted";
    summary["rounds"] = run.rounds_used;
    summary["seconds"] = clock.seconds();
    ctx.reporter(ctx.summary_stream(opt.output)).emit(summary);
    ctx.err << "resampling exhausted " << run.max_rounds << " rounds without a valid colouring\n";
    return kInvalid;
  }
  return finish_colouring(ctx, opt, h, *run.colouring, clock);
}

int cmd_verify(const Context& ctx, const VerifyOptions& opt) {
  const auto h = read_hypergraph_file(opt.graph);
  const auto c = read_colouring_file(opt.colours);
  const auto report = verify(h, opt.k, c);
  report_violations(report, ctx.err);
  Record summary;
  summary["k"] = opt.k;
  summary["palette"] = c.palette;
  summary["valid"] = report.valid;
  summary["violations"] = report.violations.size();
  ctx.reporter(ctx.out).emit(summary);
  return report.valid ? kOk : kInvalid;
}

int cmd_round(const Context& ctx, const RoundOptions& opt) {
  const Stopwatch clock;
  const auto h = read_hypergraph_file(opt.graph);
  const auto z = read_weights_file(opt.weights);
  const auto result = round_weights(h, z);

  Rational worst = 0;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    Rational gap = 0;
    for (EdgeId e : h.incident(v)) gap += result.x[e] - z[e];
    if (abs(gap) > worst) worst = abs(gap);
  }
  const bool within = h.num_edges() == 0 || worst < static_cast<unsigned long>(h.rank());
  if (!ctx.global.no_verify && !within) {
    ctx.err << "internal error: discrepancy " << format_rational(worst) << " not below rank\n";
    return kInternal;
  }

  std::ostringstream payload;
  write_weights(payload, result.x);
  deliver(opt.output, payload.str(), ctx.out);
  if (!opt.trace.empty()) {
    std::ostringstream s;
    for (std::size_t i = 0; i < result.trace.iterations.size(); ++i) {
      const auto& it = result.trace.iterations[i];
      s << "iter " << i + 1 << " fixed";
      for (std::size_t j = 0; j < it.fixed.size(); ++j) s << (j ? "," : " ") << it.fixed[j] + 1;
      s << " step " << format_rational(it.step) << '\n';
    }
    write_file_atomic(opt.trace, s.str());
  }

  Record summary;
  summary["edges"] = h.num_edges();
  summary["rank"] = h.rank();
  summary["iterations"] = result.trace.iterations.size();
  summary["max_discrepancy"] = format_rational(worst);
  summary["valid"] = ctx.global.no_verify ? Record(nullptr) : Record(within);
  summary["seconds"] = clock.seconds();
  ctx.reporter(ctx.summary_stream(opt.output)).emit(summary);
  return kOk;
}

int cmd_threshold(const Context& ctx, const ThresholdOptions& opt) {
  const auto delta = threshold(opt.k, opt.r);
  const auto terms = threshold_terms(opt.k, opt.r, delta);
  char lhs1[64];
  char lhs2[64];
  std::snprintf(lhs1, sizeof lhs1, "%.12Lg", terms.lhs1);
  std::snprintf(lhs2, sizeof lhs2, "%.12Lg", terms.lhs2);
  Record rec;
  rec["k"] = opt.k;
  rec["r"] = opt.r;
  rec["delta"] = delta;
  rec["lhs1"] = lhs1;
  rec["lhs2"] = lhs2;
  ctx.reporter(ctx.out).emit(rec);
  return kOk;
}

int cmd_generate(const Context& ctx, const GenerateOptions& opt) {
  GenSpec spec;
  spec.model = parse_model(opt.model);
  spec.n = opt.n;
  spec.r = opt.r;
  spec.min_degree = opt.min_degree;
  spec.seed = ctx.global.seed;
  const auto h = generate(spec);
  std::ostringstream payload;
  payload << "% model=" << model_name(spec.model) << " n=" << spec.n << " r=" << spec.r
          << " min_degree=" << spec.min_degree << " seed=" << spec.seed << '\n';
  write_hypergraph(payload, h);
  deliver(opt.output, payload.str(), ctx.out);
  return kOk;
}

int cmd_oracle(const Context& ctx, const OracleOptions& opt) {
  const auto h = read_hypergraph_file(opt.graph);
  const auto found = brute_force(h, opt.k, opt.palette);
  Record summary;
  summary["k"] = opt.k;
  summary["palette"] = opt.palette;
  summary["found"] = found.has_value();
  if (found) deliver(opt.output, colouring_text(*found), ctx.out);
  ctx.reporter(ctx.summary_stream(opt.output)).emit(summary);
  return found ? kOk : kInvalid;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majority edge-colourings of hypergraphs", "mcolour"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Summary output format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--seed", global.seed, "Seed for randomized steps");
  app.add_flag("--no-verify", global.no_verify, "Skip self-verification of results");

  ColourOptions colour;
  auto* colour_cmd = app.add_subcommand("colour", "Colour the edges of a hypergraph");
  colour_cmd->add_option("--algorithm", colour.algorithm)
      ->required()
      ->check(CLI::IsMember({"partition", "linear", "random-lll"}));
  colour_cmd->add_option("--k", colour.k)->required()->check(CLI::Range(2u, 1u << 20));
  colour_cmd->add_option("input", colour.input, "HGR file")->required();
  colour_cmd->add_option("-o,--output", colour.output, "Colouring file (default: stdout)");
  colour_cmd->add_option("--trace", colour.trace, "Per-round trace file (partition)");
  colour_cmd->add_option("--emit-split", colour.emit_split, "Split map file (linear)");
  colour_cmd->add_option("--max-rounds", colour.max_rounds, "Resampling budget (random-lll)");
  colour_cmd->add_option("--trials", colour.trials, "Independent seeded runs (random-lll)");
  colour_cmd->add_option("--jobs", colour.jobs, "Worker threads for --trials")
      ->check(CLI::PositiveNumber);

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Check the majority condition");
  verify_cmd->add_option("--k", verify_opt.k)->required()->check(CLI::Range(2u, 1u << 20));
  verify_cmd->add_option("graph", verify_opt.graph)->required();
  verify_cmd->add_option("colours", verify_opt.colours)->required();

  RoundOptions round;
  auto* round_cmd = app.add_subcommand("round", "Round fractional edge weights to 0/1");
  round_cmd->add_option("graph", round.graph)->required();
  round_cmd->add_option("weights", round.weights)->required();
  round_cmd->add_option("-o,--output", round.output, "0/1 weights file (default: stdout)");
  round_cmd->add_option("--trace", round.trace, "Iteration trace file");

  ThresholdOptions thresh;
  auto* threshold_cmd = app.add_subcommand("threshold", "Degree threshold for random colouring");
  threshold_cmd->add_option("--k", thresh.k)->required()->check(CLI::Range(2u, 1u << 20));
  threshold_cmd->add_option("--r", thresh.r)->required()->check(CLI::Range(2u, 1u << 20));

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a seeded random instance");
  generate_cmd->add_option("--model", gen.model)
      ->required()
      ->check(CLI::IsMember({"uniform", "linear", "graph", "regular"}));
  generate_cmd->add_option("--n", gen.n)->required();
  generate_cmd->add_option("--r", gen.r);
  generate_cmd->add_option("--min-degree", gen.min_degree)->required();
  generate_cmd->add_option("-o,--output", gen.output, "HGR file (default: stdout)");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search for a valid colouring");
  oracle_cmd->add_option("--k", oracle.k)->required()->check(CLI::Range(2u, 1u << 20));
  oracle_cmd->add_option("--palette", oracle.palette)->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("graph", oracle.graph)->required();
  oracle_cmd->add_option("-o,--output", oracle.output, "Colouring file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kPrecondition;
  }

  const Context ctx{global, out, err};
  try {
    if (*colour_cmd) return cmd_colour(ctx, colour);
    if (*verify_cmd) return cmd_verify(ctx, verify_opt);
    if (*round_cmd) return cmd_round(ctx, round);
    if (*threshold_cmd) return cmd_threshold(ctx, thresh);
    if (*generate_cmd) return cmd_generate(ctx, gen);
    if (*oracle_cmd) return cmd_oracle(ctx, oracle);
  } catch (const InvariantBreach& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kPrecondition;
}

}  // namespace mcolour::cli
