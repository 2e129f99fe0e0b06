#include "focal/census_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "focal/errors.hpp"
#include "focal/form_io.hpp"
#include "focal/version.hpp"

namespace focal {

using nlohmann::json;

namespace {

json config_json(const CensusConfig& c, bool runtime) {
  json j = {
      {"prime", c.prime},
      {"degree", c.degree},
      {"homogeneous", c.homogeneous},
      {"K", c.k()},
      {"N", c.samples},
      {"solve_s1", c.solve_s1},
      {"seed", c.seed},
      {"ambient_codim", c.ambient_codim},
      {"witness_k", c.witness_k ? json(*c.witness_k) : json(nullptr)},
      {"min_codim", c.min_codim ? json(*c.min_codim) : json(nullptr)},
  };
  if (runtime) {
    j["workers"] = c.workers;
    j["checkpoint_interval"] = c.checkpoint_interval;
    j["checkpoint_path"] = c.checkpoint_path ? json(*c.checkpoint_path) : json(nullptr);
  }
  return j;
}

json coefficients(const std::vector<FieldElement>& values) {
  json arr = json::array();
  for (FieldElement v : values) arr.push_back(v.value());
  return arr;
}

json form_json(const PrimeField& field, const DiffForm& form) {
  return {{"text", format_form(field, form)},
          {"p", coefficients(form.p_coefficients())},
          {"q", coefficients(form.q_coefficients())}};
}

DiffForm form_from_json(const json& j, const PrimeField& field, int degree) {
  DiffForm form(degree, field.zero());
  const auto& p = j.at("p");
  const auto& q = j.at("q");
  const std::size_t size = DiffForm::size_for(degree);
  if (p.size() != size || q.size() != size) throw CheckpointError("coefficient array has wrong length");
  for (int n = 0; n <= degree; ++n) {
    for (int jj = 0; jj <= n; ++jj) {
      const std::size_t at = DiffForm::index(n - jj, jj);
      form.p(n - jj, jj) = field.element(p[at].get<std::uint64_t>());
      form.q(n - jj, jj) = field.element(q[at].get<std::uint64_t>());
    }
  }
  return form;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class T>
void read_key(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

template <class T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key)) return;
  if (j.at(key).is_null()) {
    out.reset();
    return;
  }
  T v{};
  read_key(j, key, v);
  out = v;
}

}  // namespace

std::string config_to_json(const CensusConfig& config) { return config_json(config, true).dump(); }

CensusConfig config_from_json(std::string_view text, CensusConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const char* const kKeys[] = {"prime",   "degree",       "homogeneous",         "K",
                                      "N",       "solve_s1",     "seed",                "workers",
                                      "ambient_codim", "witness_k", "checkpoint_interval",
                                      "checkpoint_path", "min_codim"};
  for (const auto& item : j.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), item.key()) == std::end(kKeys)) {
      throw ConfigError("unknown config key '" + item.key() + "'");
    }
  }
  read_key(j, "prime", base.prime);
  read_key(j, "degree", base.degree);
  read_key(j, "homogeneous", base.homogeneous);
  read_optional(j, "K", base.focal_count);
  read_key(j, "N", base.samples);
  read_key(j, "solve_s1", base.solve_s1);
  read_key(j, "seed", base.seed);
  read_key(j, "workers", base.workers);
  read_key(j, "ambient_codim", base.ambient_codim);
  read_optional(j, "witness_k", base.witness_k);
  read_optional(j, "min_codim", base.min_codim);
  read_key(j, "checkpoint_interval", base.checkpoint_interval);
  read_optional(j, "checkpoint_path", base.checkpoint_path);
  return base;
}

std::string config_hash(const CensusConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(config_json(config, false).dump())));
  return buf;
}

std::string manifest_to_json(const RunManifest& manifest, const std::string& config_hash) {
  return json{{"subcommand", manifest.subcommand},
              {"config_source", manifest.config_source},
              {"version", kVersion},
              {"config_hash", config_hash},
              {"started", manifest.started},
              {"finished", manifest.finished},
              {"outputs", manifest.outputs}}
      .dump();
}

std::string report_to_json(const CensusReport& report, const RunManifest* manifest) {
  const PrimeField field(report.config.prime);
  json j;
  if (manifest != nullptr) j["manifest"] = json::parse(manifest_to_json(*manifest, report.config_hash));
  j["version"] = kVersion;
  j["config_hash"] = report.config_hash;
  j["config"] = config_json(report.config, false);
  j["processed"] = report.processed;
  j["effective_N"] = report.effective_samples;
  json counts = json::array();
  for (const auto& [codim, count] : report.counts_by_codim) {
    counts.push_back({{"codim", codim}, {"count", count}});
  }
  j["counts_by_codim"] = counts;
  json estimates = json::array();
  for (const auto& e : report.estimates) {
    estimates.push_back({{"codim", e.codim},
                         {"count", e.count},
                         {"scaled_count", e.scaled_count.get_str()},
                         {"estimate", e.estimate},
                         {"error", e.error}});
  }
  j["estimates"] = estimates;
  json survivors = json::array();
  for (const auto& s : report.survivors) {
    json entry = form_json(field, s.form);
    entry["index"] = s.index;
    entry["codim"] = s.codim;
    survivors.push_back(std::move(entry));
  }
  j["survivors"] = survivors;
  if (report.config.witness_k) {
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
      json entry = form_json(field, w.form);
      entry["index"] = w.index;
      entry["k"] = w.k;
      witnesses.push_back(std::move(entry));
    }
    j["separation"] = {{"k", *report.config.witness_k},
                       {"off_next_count", report.off_next_count},
                       {"witnesses", witnesses}};
  }
  return j.dump(2) + "\n";
}

std::string report_to_csv(const CensusReport& report, const RunManifest* manifest) {
  std::ostringstream out;
  if (manifest != nullptr) out << "# " << manifest_to_json(*manifest, report.config_hash) << '\n';
  out << "codim,count,estimate,error,prime,K,effective_N\n";
  out.precision(17);
  for (const auto& e : report.estimates) {
    out << e.codim << ',' << e.count << ',' << e.estimate << ',' << e.error << ','
        << report.config.prime << ',' << report.config.k() << ',' << report.effective_samples
        << '\n';
  }
  return out.str();
}

std::string encode_checkpoint(const CheckpointState& state) {
  json j;
  j["format"] = "focal-checkpoint";
  j["format_version"] = kCheckpointFormatVersion;
  j["version"] = kVersion;
  j["config_hash"] = state.config_hash;
  j["config"] = json::parse(state.config_json);
  j["next_index"] = state.next_index;
  json counts = json::array();
  for (const auto& [codim, count] : state.counts) counts.push_back({codim, count});
  j["counts"] = counts;
  j["off_next_count"] = state.off_next_count;
  json survivors = json::array();
  for (const auto& s : state.survivors) {
    survivors.push_back({{"index", s.index},
                         {"codim", s.codim},
                         {"p", coefficients(s.form.p_coefficients())},
                         {"q", coefficients(s.form.q_coefficients())}});
  }
  j["survivors"] = survivors;
  json witnesses = json::array();
  for (const auto& w : state.witnesses) {
    witnesses.push_back({{"index", w.index},
                         {"k", w.k},
                         {"p", coefficients(w.form.p_coefficients())},
                         {"q", coefficients(w.form.q_coefficients())}});
  }
  j["witnesses"] = witnesses;
  return j.dump() + "\n";
}

CheckpointState decode_checkpoint(std::string_view text, const PrimeField& field, int degree) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != "focal-checkpoint") {
      throw CheckpointError("not a focal checkpoint");
    }
    if (j.at("format_version").get<int>() != kCheckpointFormatVersion) {
      throw CheckpointError("unsupported checkpoint format version");
    }
    CheckpointState state;
    state.config_hash = j.at("config_hash").get<std::string>();
    state.config_json = j.at("config").dump();
    state.next_index = j.at("next_index").get<std::uint64_t>();
    for (const auto& c : j.at("counts")) {
      state.counts[c.at(0).get<std::size_t>()] = c.at(1).get<std::uint64_t>();
    }
    state.off_next_count = j.at("off_next_count").get<std::uint64_t>();
    for (const auto& s : j.at("survivors")) {
      state.survivors.push_back({s.at("index").get<std::uint64_t>(),
                                 form_from_json(s, field, degree),
                                 s.at("codim").get<std::size_t>()});
    }
    for (const auto& w : j.at("witnesses")) {
      state.witnesses.push_back({w.at("index").get<std::uint64_t>(),
                                 form_from_json(w, field, degree), w.at("k").get<int>()});
    }
    return state;
  } catch (const json::exception& e) {
    throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
  }
}

}  // namespace focal
