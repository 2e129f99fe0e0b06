#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "focal/census_io.hpp"
#include "focal/errors.hpp"
#include "focal/version.hpp"

namespace {

using namespace focal;
using namespace focal::cli;

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Output format (default: table on a terminal, else json)")
      ->check(CLI::IsMember({"table", "json"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Focal values of plane polynomial differential forms over prime fields"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  FocalOptions focal_opts;
  auto* focal = app.add_subcommand("focal", "Focal values s_1..s_K of one form");
  focal->add_option("form", focal_opts.form, "Form, e.g. \"(x + x^2)dx + (y - y^3)dy\"")->required();
  focal->add_option("-p,--prime", focal_opts.prime, "Characteristic")->required();
  focal->add_option("-k,--k", focal_opts.k, "Number of focal values (default (p-3)/2)");
  add_format(focal, focal_opts.format);

  TangentCommandOptions tangent_opts;
  auto* tangent = app.add_subcommand("tangent", "Jacobian and tangent codimension of X_K at a form");
  tangent->add_option("form", tangent_opts.form, "Form on X_K")->required();
  tangent->add_option("-p,--prime", tangent_opts.prime, "Characteristic")->required();
  tangent->add_option("-k,--k", tangent_opts.k, "Number of focal values (default (p-3)/2)");
  tangent->add_flag("--homogeneous", tangent_opts.homogeneous, "Differentiate in top-degree directions only");
  add_format(tangent, tangent_opts.format);

  CensusOptions census_opts;
  CensusConfig flags;
  std::string config_path;
  std::uint64_t samples = 0;
  int focal_count = 0;
  int witness_k = 0;
  std::size_t min_codim = 0;
  std::string checkpoint;
  auto* census = app.add_subcommand("census", "Monte-Carlo census of the center variety");
  census->add_option("-c,--config", config_path, "JSON config; flags override its values");
  auto* o_prime = census->add_option("--prime", flags.prime, "Characteristic");
  auto* o_degree = census->add_option("--degree", flags.degree, "Form degree");
  auto* o_hom = census->add_flag("--homogeneous", flags.homogeneous, "Sample top-degree coefficients only");
  auto* o_k = census->add_option("--K", focal_count, "Focal values per point");
  auto* o_n = census->add_option("--N", samples, "Number of samples");
  auto* o_s1 = census->add_flag("--solve-s1", flags.solve_s1, "Solve s_1 = 0 for q30 (general cubics)");
  auto* o_seed = census->add_option("--seed", flags.seed, "Random seed");
  auto* o_workers = census->add_option("--workers", flags.workers, "Worker threads (default FOCAL_WORKERS)");
  auto* o_ckpt = census->add_option("--checkpoint", checkpoint, "Checkpoint file");
  auto* o_interval =
      census->add_option("--checkpoint-interval", flags.checkpoint_interval, "Samples per checkpoint round");
  auto* o_witness = census->add_option("--witness-k", witness_k, "Look for points of X_k off X_k+1");
  auto* o_min = census->add_option("--min-codim", min_codim, "Lump smaller tangent codimensions here");
  auto* o_ambient =
      census->add_flag("--ambient-codim", flags.ambient_codim, "Homogeneous runs: codim in the full space");
  census->add_flag("--resume", census_opts.resume, "Continue from the checkpoint file");
  census->add_option("--json", census_opts.json_path, "Write the JSON report here");
  census->add_option("--csv", census_opts.csv_path, "Write the CSV summary here");
  census->add_flag("-q,--quiet", census_opts.quiet, "No progress on stderr");
  add_format(census, census_opts.format);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify-paper", "Check every claim in the example corpus");
  verify->add_option("--corpus", verify_opts.corpus, "Corpus file (default: shipped paper_examples.txt)");
  add_format(verify, verify_opts.format);

  EstimateOptions estimate_opts;
  auto* estimate = app.add_subcommand("estimate-m", "Chance of detecting X_k != X_k+1 with N samples");
  estimate->add_option("-p,--prime", estimate_opts.prime, "Characteristic")->required();
  estimate->add_option("-k,--k", estimate_opts.k, "Codimension k")->required();
  estimate->add_option("-n,--n", estimate_opts.n, "Number of samples");
  estimate->add_option("--target-confidence", estimate_opts.confidence, "Solve for N at this probability");
  add_format(estimate, estimate_opts.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (*focal) return cmd_focal(focal_opts, std::cout, std::cerr);
  if (*tangent) return cmd_tangent(tangent_opts, std::cout, std::cerr);
  if (*estimate) return cmd_estimate_m(estimate_opts, std::cout, std::cerr);
  if (*verify) {
    if (verify_opts.corpus.empty()) verify_opts.corpus = default_corpus();
    return cmd_verify_paper(verify_opts, std::cout, std::cerr);
  }

  try {
    CensusConfig config;
    config.workers = default_workers();
    census_opts.config_source = "flags";
    if (!config_path.empty()) {
      config = config_from_json(read_file(config_path), config);
      census_opts.config_source = config_path;
    }
    if (o_prime->count()) config.prime = flags.prime;
    if (o_degree->count()) config.degree = flags.degree;
    if (o_hom->count()) config.homogeneous = flags.homogeneous;
    if (o_k->count()) config.focal_count = focal_count;
    if (o_n->count()) config.samples = samples;
    if (o_s1->count()) config.solve_s1 = flags.solve_s1;
    if (o_seed->count()) config.seed = flags.seed;
    if (o_workers->count()) config.workers = flags.workers;
    if (o_ckpt->count()) config.checkpoint_path = checkpoint;
    if (o_interval->count()) config.checkpoint_interval = flags.checkpoint_interval;
    if (o_witness->count()) config.witness_k = witness_k;
    if (o_min->count()) config.min_codim = min_codim;
    if (o_ambient->count()) config.ambient_codim = flags.ambient_codim;
    census_opts.config = config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return cmd_census(census_opts, std::cout, std::cerr);
}
