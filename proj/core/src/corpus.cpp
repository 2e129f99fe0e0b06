#include "focal/corpus.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "focal/census.hpp"
#include "focal/darboux.hpp"
#include "focal/errors.hpp"
#include "focal/form_io.hpp"
#include "focal/frommer.hpp"
#include "focal/tangent.hpp"

namespace focal {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw CorpusError("corpus line " + std::to_string(line) + ": " + msg);
}

int parse_int(std::string_view token, std::size_t line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return v;
}

const std::map<std::string, std::size_t>& arities() {
  static const std::map<std::string, std::size_t> table = {
      {"vanishes", 1}, {"first-nonzero", 2}, {"codim", 2},  {"witness", 1},
      {"integral", 0}, {"darboux", 0},       {"christopher", 0}, {"smooth", 0},
      {"exact", 0},    {"mirror-symmetric", 0},
  };
  return table;
}

std::string describe(const Expectation& e) {
  std::string s = e.kind;
  for (int a : e.args) s += " " + std::to_string(a);
  return s;
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i : v) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

struct Context {
  PrimeField field;
  DiffForm form;
  std::vector<PlaneCurve> curves;
};

// Returns an empty string on success, otherwise what went wrong.
std::string run_check(const Context& ctx, const Expectation& e) {
  const PrimeField& field = ctx.field;
  if (e.kind == "vanishes") {
    const FocalSequence seq = focal_values(field, ctx.form, e.args[0]);
    if (seq.first_nonzero) return "s_" + std::to_string(*seq.first_nonzero) + " is nonzero";
    return {};
  }
  if (e.kind == "first-nonzero") {
    const FocalSequence seq = focal_values(field, ctx.form, e.args[0]);
    const int got = seq.first_nonzero.value_or(0);
    if (got != e.args[1]) {
      return seq.first_nonzero ? "first nonzero is s_" + std::to_string(got) : "all vanish";
    }
    return {};
  }
  if (e.kind == "codim") {
    const std::size_t c = codim_at(field, ctx.form, e.args[0]);
    if (c != static_cast<std::size_t>(e.args[1])) return "codim " + std::to_string(c);
    return {};
  }
  if (e.kind == "witness") {
    if (!is_separating_witness(field, ctx.form, e.args[0])) return "not a separating point";
    return {};
  }
  if (e.kind == "integral") {
    for (std::size_t i = 0; i < ctx.curves.size(); ++i) {
      if (!is_integral_curve(field, ctx.form, ctx.curves[i])) {
        return "curve " + std::to_string(i) + " is not integral";
      }
    }
    return {};
  }
  if (e.kind == "darboux") {
    if (!darboux_coefficients(field, ctx.form, ctx.curves)) return "no integrating factor exponents";
    return {};
  }
  if (e.kind == "christopher" || e.kind == "smooth") {
    const ChristopherReport r = christopher_check(field, ctx.curves);
    std::string out;
    for (const auto& f : r.failures) {
      if (e.kind == "smooth" && f.condition != Condition::Smooth) continue;
      out += (out.empty() ? "" : "; ") + condition_name(f.condition) + " fails for " + list(f.curves);
    }
    return out;
  }
  if (e.kind == "exact") {
    return is_exact(field, ctx.form) ? std::string{} : "not exact";
  }
  if (e.kind == "mirror-symmetric") {
    return is_mirror_symmetric(field, ctx.form) ? std::string{} : "not mirror symmetric";
  }
  return "unknown check";
}

}  // namespace

std::vector<CorpusClaim> parse_corpus(std::istream& in) {
  std::vector<CorpusClaim> claims;
  std::optional<CorpusClaim> open;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto space = text.find_first_of(" \t");
    const std::string key = text.substr(0, space);
    const std::string rest = space == std::string::npos ? std::string{} : trim(text.substr(space));

    if (key == "claim") {
      if (open) fail(line, "claim inside claim '" + open->name + "'");
      if (rest.empty()) fail(line, "claim needs a name");
      open = CorpusClaim{};
      open->name = rest;
      open->line = line;
      continue;
    }
    if (!open) fail(line, "'" + key + "' outside a claim");
    if (key == "end") {
      if (open->prime == 0) fail(line, "claim '" + open->name + "' has no prime");
      if (open->form.empty()) fail(line, "claim '" + open->name + "' has no form");
      claims.push_back(std::move(*open));
      open.reset();
    } else if (key == "prime") {
      open->prime = static_cast<std::uint64_t>(parse_int(rest, line));
    } else if (key == "form") {
      open->form = rest;
    } else if (key == "curve") {
      open->curves.push_back(rest);
    } else if (key == "expect") {
      std::istringstream tokens(rest);
      Expectation e;
      e.line = line;
      tokens >> e.kind;
      const auto it = arities().find(e.kind);
      if (it == arities().end()) fail(line, "unknown check '" + e.kind + "'");
      for (std::string t; tokens >> t;) e.args.push_back(parse_int(t, line));
      if (e.args.size() != it->second) fail(line, "wrong number of arguments for '" + e.kind + "'");
      open->expectations.push_back(std::move(e));
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (open) fail(line, "claim '" + open->name + "' is not closed");
  return claims;
}

std::vector<CorpusClaim> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus " + path.string());
  return parse_corpus(in);
}

std::vector<CheckResult> verify_claims(const std::vector<CorpusClaim>& claims) {
  std::vector<CheckResult> results;
  for (const auto& claim : claims) {
    std::optional<Context> ctx;
    std::string setup_error;
    try {
      PrimeField field(claim.prime);
      DiffForm form = parse_form(field, claim.form);
      std::vector<PlaneCurve> curves;
      for (const auto& c : claim.curves) {
        const Polynomial f = parse_polynomial(field, c);
        curves.push_back(f.is_homogeneous() ? PlaneCurve(f) : PlaneCurve::from_affine(f));
      }
      ctx.emplace(Context{field, std::move(form), std::move(curves)});
    } catch (const std::exception& ex) {
      setup_error = ex.what();
    }
    for (const auto& e : claim.expectations) {
      CheckResult r{claim.name, describe(e), false, {}};
      if (!ctx) {
        r.detail = setup_error;
      } else {
        try {
          r.detail = run_check(*ctx, e);
          r.passed = r.detail.empty();
        } catch (const std::exception& ex) {
          r.detail = ex.what();
        }
      }
      results.push_back(std::move(r));
    }
  }
  return results;
}

std::vector<CheckResult> verify_paper_examples(const std::filesystem::path& corpus) {
  return verify_claims(load_corpus(corpus));
}

}  // namespace focal
