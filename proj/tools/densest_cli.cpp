// densest: dynamic-stream densest subgraph estimation.
//
//   densest generate planted --n 64 --m 600 --k 12 --seed 7 -o planted.txt
//   densest run planted.txt --epsilon 0.45 --c 0.14 --seed 1 --post-seed 2
//   densest exact planted.txt
//   densest compare planted.txt --epsilon 0.45 --c 0.14 --trials 50

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "densest/error.hpp"
#include "densest/experiment.hpp"
#include "densest/generate.hpp"
#include "densest/stream_file.hpp"

namespace {

struct SketchFlags {
  double epsilon = 0.45;
  double c = 0.5;
  std::string preset = "paper";
  std::uint64_t seed = 1;
  std::uint64_t post_seed = 2;
  std::string solver = "flow";
  bool validate = false;
  std::optional<std::size_t> r;
  std::optional<std::size_t> groups;
  std::optional<std::size_t> tau;
};

void add_sketch_flags(CLI::App* cmd, SketchFlags& f) {
  cmd->add_option("--epsilon", f.epsilon, "approximation parameter in (0, 1/2)")->capture_default_str();
  cmd->add_option("--c", f.c, "sampling constant c > 0")->capture_default_str();
  cmd->add_option("--preset", f.preset, "constant preset")
      ->check(CLI::IsMember({"paper", "desk"}))
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "master seed for hashes and samplers")->capture_default_str();
  cmd->add_option("--post-seed", f.post_seed, "seed for post-processing draws")->capture_default_str();
  cmd->add_option("--solver", f.solver, "densest-subgraph solver on the sample")
      ->check(CLI::IsMember({"flow", "greedy", "brute"}))
      ->capture_default_str();
  cmd->add_flag("--validate-stream", f.validate, "reject strict-turnstile violations while parsing");
  cmd->add_option("--r", f.r, "override partition count r");
  cmd->add_option("--B", f.groups, "override groups per partition B");
  cmd->add_option("--tau", f.tau, "override samplers per group tau");
}

densest::RunOptions make_options(const SketchFlags& f, densest::NodeId n) {
  using namespace densest;
  RunOptions opts;
  opts.config = SketchConfig::make(n, f.epsilon, f.c, parse_preset(f.preset), f.seed);
  if (f.r) opts.config.partitions = *f.r;
  if (f.groups) opts.config.groups = *f.groups;
  if (f.tau) opts.config.samplers_per_group = *f.tau;
  opts.config.overridden = f.r || f.groups || f.tau;
  opts.config.validate();
  opts.post_seed = f.post_seed;
  opts.solver = parse_solver_kind(f.solver);
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace densest;
  CLI::App app{"Densest-subgraph estimation over dynamic graph streams"};
  app.require_subcommand(1);

  std::string model;
  GenerateParams gen;
  std::uint64_t gen_seed = 1;
  std::string out_path;
  auto* generate_cmd = app.add_subcommand("generate", "write a synthetic stream file");
  generate_cmd->add_option("model", model, "gnm | planted | churn")
      ->required()
      ->check(CLI::IsMember({"gnm", "planted", "churn"}));
  generate_cmd->add_option("--n", gen.n, "node count")->required();
  generate_cmd->add_option("--m", gen.m, "background edge count")->required();
  generate_cmd->add_option("--k", gen.k, "planted clique size");
  generate_cmd->add_option("--q", gen.q, "churn rounds per background edge");
  generate_cmd->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  generate_cmd->add_option("-o,--out", out_path, "output path (default stdout)");

  std::string stream_path;
  SketchFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "sketch the stream and estimate the maximum density");
  run_cmd->add_option("stream", stream_path, "stream file")->required();
  add_sketch_flags(run_cmd, run_flags);

  std::string exact_solver = "flow";
  bool exact_validate = true;
  auto* exact_cmd = app.add_subcommand("exact", "replay the stream and solve exactly");
  exact_cmd->add_option("stream", stream_path, "stream file")->required();
  exact_cmd->add_option("--solver", exact_solver, "solver")
      ->check(CLI::IsMember({"flow", "greedy", "brute"}))
      ->capture_default_str();

  SketchFlags cmp_flags;
  std::size_t trials = 20;
  std::optional<double> eps_upper;
  bool with_runs = false;
  auto* compare_cmd = app.add_subcommand("compare", "repeat runs and compare against exact d*");
  compare_cmd->add_option("stream", stream_path, "stream file")->required();
  add_sketch_flags(compare_cmd, cmp_flags);
  compare_cmd->add_option("--trials", trials, "number of trials")->capture_default_str();
  compare_cmd->add_option("--eps-upper", eps_upper, "upper band slack (default 1.05(1+eps)-1)");
  compare_cmd->add_flag("--runs", with_runs, "include per-trial reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate_cmd) {
      const GeneratedStream g = generate(parse_stream_model(model), gen, gen_seed);
      if (out_path.empty()) {
        std::cout << serialize_stream(g.stream);
      } else {
        write_stream_file(g.stream, out_path);
      }
      std::cerr << "generated " << model << ": n=" << g.stream.n << " updates=" << g.stream.updates.size()
                << " final m=" << final_graph(g.stream).edge_count() << "\n";
      return kExitOk;
    }

    if (*run_cmd) {
      const StreamFile stream = read_stream_file(stream_path, run_flags.validate);
      const RunReport report = run_stream(stream, make_options(run_flags, stream.n));
      std::cout << report.to_json().dump(2) << "\n";
      std::cerr << "m=" << report.m << " p=" << report.p << " |S|=" << report.sampled_edges;
      if (report.aborted) {
        std::cerr << " aborted: " << to_string(*report.aborted) << "\n";
      } else {
        std::cerr << " estimate=" << report.estimate << " |U'|=" << report.subgraph.size() << "\n";
      }
      return report.exit_code();
    }

    if (*exact_cmd) {
      const StreamFile stream = read_stream_file(stream_path, exact_validate);
      const ExactReport report = exact_stream(stream, parse_solver_kind(exact_solver));
      std::cout << report.to_json().dump(2) << "\n";
      std::cerr << "m=" << report.m << " d*=" << report.best.density.to_string() << " |U*|="
                << report.best.nodes.size() << "\n";
      return kExitOk;
    }

    if (*compare_cmd) {
      const StreamFile stream = read_stream_file(stream_path, cmp_flags.validate);
      const RunOptions opts = make_options(cmp_flags, stream.n);
      const CompareReport report = compare_stream(
          stream, opts, trials, eps_upper.value_or(default_eps_upper(opts.config.epsilon)));
      std::cout << report.to_json(with_runs).dump(2) << "\n";
      std::cerr << "d*=" << report.d_star.to_string() << " in-band " << report.in_band << "/"
                << report.trials << " aborts " << report.aborts << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}
