#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <thread>

#include "focal/census_io.hpp"
#include "focal/corpus.hpp"
#include "focal/errors.hpp"
#include "focal/form_io.hpp"
#include "focal/frommer.hpp"
#include "focal/heuristics.hpp"
#include "focal/tangent.hpp"
#include "focal/version.hpp"
#include "output.hpp"

namespace focal::cli {
namespace {

using nlohmann::json;

std::string residue_text(FieldElement v) { return std::to_string(v.value()); }

int report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kUsageError;
}

std::string format_double(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("FOCAL_WORKERS"); env != nullptr && *env != '\0') {
    unsigned v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
      throw ConfigError(std::string("FOCAL_WORKERS must be a positive integer, got '") + env + "'");
    }
    return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string default_corpus() {
  if (const char* env = std::getenv("FOCAL_CORPUS"); env != nullptr && *env != '\0') return env;
  if (std::filesystem::exists(FOCAL_INSTALLED_CORPUS)) return FOCAL_INSTALLED_CORPUS;
  return FOCAL_SOURCE_CORPUS;
}

int cmd_focal(const FocalOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const PrimeField field(opts.prime);
    const DiffForm form = parse_form(field, opts.form);
    const FocalSequence seq = focal_values(field, form, opts.k);
    if (resolve_format(opts.format) == Format::Json) {
      json values = json::array();
      for (FieldElement v : seq.values) values.push_back(v.value());
      json j = {{"version", kVersion},
                {"prime", opts.prime},
                {"K", seq.count()},
                {"form", format_form(field, form)},
                {"values", values},
                {"first_nonzero", seq.first_nonzero ? json(*seq.first_nonzero) : json(nullptr)}};
      out << j.dump(2) << '\n';
    } else {
      out << "form: " << format_form(field, form) << "\nprime: " << opts.prime << '\n';
      for (std::size_t i = 0; i < seq.values.size(); ++i) {
        out << "s_" << i + 1 << " = " << residue_text(seq.values[i]) << '\n';
      }
      if (seq.first_nonzero) {
        out << "first nonzero: s_" << *seq.first_nonzero << '\n';
      } else {
        out << "first nonzero: none (s_1..s_" << seq.count() << " vanish)\n";
      }
    }
    return kSuccess;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_tangent(const TangentCommandOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const PrimeField field(opts.prime);
    const DiffForm form = parse_form(field, opts.form);
    const int k = opts.k.value_or(default_focal_count(opts.prime));
    TangentReport report;
    try {
      report = jacobian(field, form, k, {opts.homogeneous});
    } catch (const NotOnVariety& e) {
      err << "error: " << e.what() << '\n';
      return kVerificationFailure;
    }
    if (resolve_format(opts.format) == Format::Json) {
      json dirs = json::array();
      for (const auto& d : report.directions) dirs.push_back(d.name());
      json rows = json::array();
      for (std::size_t r = 0; r < report.jacobian.rows(); ++r) {
        json row = json::array();
        for (FieldElement v : report.jacobian.row(r)) row.push_back(v.value());
        rows.push_back(row);
      }
      json j = {{"version", kVersion}, {"prime", opts.prime},   {"K", k},
                {"form", format_form(field, form)}, {"directions", dirs}, {"jacobian", rows},
                {"codim", report.codim}};
      out << j.dump(2) << '\n';
    } else {
      out << "form: " << format_form(field, form) << "\nprime: " << opts.prime << "  K: " << k << '\n';
      out << "     ";
      for (const auto& d : report.directions) out << ' ' << d.name();
      out << '\n';
      for (std::size_t r = 0; r < report.jacobian.rows(); ++r) {
        char label[32];
        std::snprintf(label, sizeof label, "s_%-3zu", r + 1);
        out << label;
        for (FieldElement v : report.jacobian.row(r)) {
          char cell[16];
          std::snprintf(cell, sizeof cell, " %3llu", static_cast<unsigned long long>(v.value()));
          out << cell;
        }
        out << '\n';
      }
      out << "tangent codimension: " << report.codim << '\n';
    }
    return kSuccess;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_census(const CensusOptions& opts, std::ostream& out, std::ostream& err) {
  RunManifest manifest;
  manifest.subcommand = "census";
  manifest.config_source = opts.config_source;
  manifest.started = utc_timestamp();
  if (opts.json_path) manifest.outputs.push_back(*opts.json_path);
  if (opts.csv_path) manifest.outputs.push_back(*opts.csv_path);

  CensusReport report;
  try {
    opts.config.validate();
    CensusRunner runner(opts.config);
    if (opts.resume) {
      if (!opts.config.checkpoint_path) throw ConfigError("--resume needs a checkpoint path");
      if (!std::filesystem::exists(*opts.config.checkpoint_path)) {
        throw CheckpointError("no checkpoint at " + *opts.config.checkpoint_path);
      }
      runner.resume(*opts.config.checkpoint_path);
      if (!opts.quiet) err << "resumed at sample " << runner.next_index() << '\n';
    }
    ProgressCallback progress;
    if (!opts.quiet) progress = [&err](const CensusProgress& p) { err << progress_line(p) << '\n'; };
    runner.run(progress);
    report = runner.report();
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
  manifest.finished = utc_timestamp();

  const std::string json_text = report_to_json(report, &manifest);
  if (opts.json_path && !write_file(*opts.json_path, json_text + "\n", err)) return kUsageError;
  if (opts.csv_path && !write_file(*opts.csv_path, report_to_csv(report, &manifest), err)) return kUsageError;

  if (resolve_format(opts.format) == Format::Json) {
    out << json_text << '\n';
  } else {
    const CensusConfig& c = report.config;
    out << "census p=" << c.prime << " d=" << c.degree << (c.homogeneous ? " homogeneous" : "")
        << " K=" << c.k() << " N=" << report.processed << " effective_N=" << report.effective_samples
        << " config=" << report.config_hash << '\n';
    out << estimates_table(report);
    out << "survivors: " << report.survivors.size() << '\n';
    if (c.witness_k) {
      out << "points on X_" << *c.witness_k << " off X_" << *c.witness_k + 1 << ": "
          << report.off_next_count << ", separating witnesses: " << report.witnesses.size() << '\n';
    }
  }
  return kSuccess;
}

int cmd_verify_paper(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = verify_paper_examples(opts.corpus);
  } catch (const CorpusError& e) {
    return report_error(err, e);
  }
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  if (resolve_format(opts.format) == Format::Json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"claim", r.claim}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << json{{"version", kVersion}, {"corpus", opts.corpus}, {"checks", rows}, {"failed", failed}}.dump(2)
        << '\n';
  } else {
    for (const auto& r : results) {
      char line[160];
      std::snprintf(line, sizeof line, "%-4s %-22s %-18s", r.passed ? "ok" : "FAIL", r.claim.c_str(),
                    r.check.c_str());
      out << line;
      if (!r.passed) out << ' ' << r.detail;
      out << '\n';
    }
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kSuccess : kVerificationFailure;
}

int cmd_estimate_m(const EstimateOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.prime < 3 || opts.k < 1) {
    err << "error: need --prime >= 3 and --k >= 1\n";
    return kUsageError;
  }
  if (opts.n.has_value() == opts.confidence.has_value()) {
    err << "error: give exactly one of --n and --target-confidence\n";
    return kUsageError;
  }
  double n = 0;
  if (opts.n) {
    if (*opts.n <= 0) {
      err << "error: --n must be positive\n";
      return kUsageError;
    }
    n = *opts.n;
  } else {
    if (*opts.confidence <= 0 || *opts.confidence >= 1) {
      err << "error: --target-confidence must lie strictly between 0 and 1\n";
      return kUsageError;
    }
    n = samples_for_confidence(opts.prime, opts.k, *opts.confidence);
  }
  const double hit = mk_probability(opts.prime, opts.k, n);
  const double miss = mk_miss_probability(opts.prime, opts.k, n);
  if (resolve_format(opts.format) == Format::Json) {
    out << json{{"version", kVersion}, {"prime", opts.prime}, {"k", opts.k}, {"N", n},
                {"probability", hit},  {"miss_probability", miss}}
               .dump(2)
        << '\n';
  } else {
    out << "p=" << format_double(opts.prime, "%g") << " k=" << opts.k << '\n';
    out << "N                       " << format_double(n, "%.6g") << '\n';
    out << "P(found)                " << format_double(100.0 * hit, "%.12g") << " %\n";
    out << "P(miss)                 " << format_double(miss, "%.6g") << '\n';
  }
  return kSuccess;
}

}  // namespace focal::cli
