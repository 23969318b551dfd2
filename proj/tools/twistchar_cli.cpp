// Command-line front end for the twistchar library.
//
// Subcommands:
//   principal      fermionic character of the principal subspace
//   parafermionic  fermionic character of the parafermionic space
//   standard       character of the level-k vacuum module
//   oracle         brute-force reference series (independent code path)
//   verify         compare formula characters against the oracles
//
// Exit codes: 0 success / series match, 1 verification mismatch,
//             2 usage or parameter error, 3 resource limit exceeded.

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "twistchar/characters.hpp"
#include "twistchar/kacmoody.hpp"
#include "twistchar/oracle.hpp"
#include "twistchar/series.hpp"

namespace {

using twistchar::Dictionary;
using twistchar::KacMoodyTable;
using twistchar::ModelParams;
using twistchar::MultiSeries;
using twistchar::Rational;

struct Options {
  int l = 1;
  int k = 1;
  std::string trunc = "4";
  std::string format = "text";
  std::string output;
  long long term_limit = -1;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--l", opt.l, "rank parameter l (lattice A_{2l}), >= 1")->required();
  cmd->add_option("--k", opt.k, "level k, >= 1")->required();
  cmd->add_option("--trunc", opt.trunc,
                  "inclusive truncation degree for q, an integer or \"num/den\"")
      ->required();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", opt.output, "write to this file instead of stdout");
  cmd->add_option("--term-limit", opt.term_limit,
                  "fail with exit code 3 if a computed series exceeds this many terms");
}

ModelParams make_params(const Options& opt) {
  ModelParams p;
  p.l = opt.l;
  p.k = opt.k;
  p.trunc = twistchar::parse_rational(opt.trunc);
  p.validate();
  return p;
}

void enforce_term_limit(const MultiSeries& s, const Options& opt) {
  if (opt.term_limit >= 0 && static_cast<long long>(s.size()) > opt.term_limit)
    throw ResourceLimit("series exceeds --term-limit (" + std::to_string(s.size()) + " terms)");
}

nlohmann::ordered_json series_to_json(const MultiSeries& s, const ModelParams& p) {
  nlohmann::ordered_json j;
  j["params"] = {{"l", p.l}, {"k", p.k}, {"trunc", twistchar::rational_str(p.trunc)}};
  j["series"] = nlohmann::ordered_json::array();
  for (const auto& [key, c] : s.terms()) {
    nlohmann::ordered_json term;
    term["q"] = twistchar::rational_str(key.first);
    term["y"] = key.second;
    term["c"] = c;
    j["series"].push_back(term);
  }
  return j;
}

void write_out(const std::string& text, const Options& opt) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw std::runtime_error("cannot open output file '" + opt.output + "'");
  f << text;
}

void emit_series(const MultiSeries& s, const ModelParams& p, const Options& opt,
                 const std::string& name) {
  enforce_term_limit(s, opt);
  if (opt.format == "json") {
    nlohmann::ordered_json j = series_to_json(s, p);
    j["name"] = name;
    write_out(j.dump(2) + "\n", opt);
  } else {
    std::string text = "# " + name + " l=" + std::to_string(p.l) + " k=" + std::to_string(p.k) +
                       " trunc=" + twistchar::rational_str(p.trunc) +
                       " terms=" + std::to_string(s.size()) + "\n" + s.str();
    write_out(text, opt);
  }
}

// Builds the Kac-Moody weight table deep enough to cover q-degrees up to
// params.trunc, calibrating the two free dictionary entries against the
// vacuum-module character, and returns its graded character.
MultiSeries freudenthal_series(const ModelParams& params) {
  MultiSeries reference = twistchar::char_standard(params);
  KacMoodyTable shallow(params.l, params.k, 4);
  Dictionary dict = twistchar::calibrate_dictionary(shallow, reference, params);
  long depth = twistchar::ceil_long(params.trunc / dict.t0);
  if (depth <= shallow.depth())
    return twistchar::freudenthal_character(shallow, dict, params, params.trunc);
  KacMoodyTable table(params.l, params.k, depth);
  return twistchar::freudenthal_character(table, dict, params, params.trunc);
}

struct CheckResult {
  std::string target;
  bool match = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::string detail;  // human-readable mismatch description, empty on match
  nlohmann::ordered_json mismatch;  // structured mismatch, null on match
};

CheckResult compare_series(const std::string& target, const MultiSeries& lhs,
                           const MultiSeries& rhs) {
  CheckResult r;
  r.target = target;
  r.lhs_terms = lhs.size();
  r.rhs_terms = rhs.size();
  auto mm = lhs.first_mismatch(rhs);
  r.match = !mm.has_value();
  if (mm) {
    const auto& [key, a, b] = *mm;
    std::string ys;
    for (std::size_t i = 0; i < key.second.size(); ++i) {
      if (i) ys += ",";
      ys += std::to_string(key.second[i]);
    }
    r.detail = "first mismatch at q=" + twistchar::rational_str(key.first) + " y=(" + ys +
               "): " + std::to_string(a) + " vs " + std::to_string(b);
    r.mismatch = {{"q", twistchar::rational_str(key.first)},
                  {"y", key.second},
                  {"lhs", a},
                  {"rhs", b}};
  }
  return r;
}

CheckResult run_check(const std::string& target, const ModelParams& params) {
  if (target == "principal")
    return compare_series(target, twistchar::char_principal(params),
                          twistchar::oracle_principal(params));
  if (target == "parafermionic")
    return compare_series(target, twistchar::char_parafermionic(params),
                          twistchar::oracle_parafermionic(params));
  if (target == "standard")
    return compare_series(target, twistchar::char_standard(params),
                          twistchar::oracle_standard(params));
  if (target == "basic") {
    if (params.k != 1)
      throw std::domain_error("verify basic: closed form only exists at k = 1");
    CheckResult a = compare_series("basic(formula vs closed form)",
                                   twistchar::char_standard(params),
                                   twistchar::oracle_basic_module(params));
    CheckResult b = compare_series("basic(enumeration vs closed form)",
                                   twistchar::oracle_standard(params),
                                   twistchar::oracle_basic_module(params));
    CheckResult r;
    r.target = target;
    r.match = a.match && b.match;
    r.lhs_terms = a.lhs_terms;
    r.rhs_terms = a.rhs_terms;
    r.detail = a.match ? b.detail : a.detail;
    r.mismatch = a.match ? b.mismatch : a.mismatch;
    return r;
  }
  if (target == "factorization") {
    MultiSeries boson = twistchar::pochhammer_inf_inv(params.trunc, params.l);
    MultiSeries prod = twistchar::oracle_standard_vacuum_slice(params);
    for (int i = 0; i < params.l; ++i) prod = prod * boson;
    return compare_series(target, twistchar::oracle_standard(params), prod);
  }
  if (target == "freudenthal")
    return compare_series(target, twistchar::char_standard(params), freudenthal_series(params));
  throw std::domain_error("verify: unknown target '" + target + "'");
}

int run_verify(const std::string& target, const ModelParams& params, const Options& opt) {
  std::vector<std::string> targets;
  if (target == "all") {
    targets = {"principal", "parafermionic", "standard", "factorization"};
    if (params.k == 1) targets.push_back("basic");
  } else {
    targets = {target};
  }
  std::vector<CheckResult> results;
  for (const auto& t : targets) results.push_back(run_check(t, params));

  bool all_ok = true;
  for (const auto& r : results) all_ok = all_ok && r.match;

  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["params"] = {{"l", params.l}, {"k", params.k},
                   {"trunc", twistchar::rational_str(params.trunc)}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json c;
      c["target"] = r.target;
      c["match"] = r.match;
      c["lhs_terms"] = r.lhs_terms;
      c["rhs_terms"] = r.rhs_terms;
      if (!r.match) c["mismatch"] = r.mismatch;
      j["checks"].push_back(c);
    }
    j["match"] = all_ok;
    write_out(j.dump(2) + "\n", opt);
  } else {
    std::string text;
    for (const auto& r : results) {
      text += std::string(r.match ? "[OK]      " : "[MISMATCH] ") + r.target + " (l=" +
              std::to_string(params.l) + " k=" + std::to_string(params.k) +
              " trunc=" + twistchar::rational_str(params.trunc) +
              ", terms=" + std::to_string(r.lhs_terms) + ")";
      if (!r.match) text += "\n           " + r.detail;
      text += "\n";
    }
    write_out(text, opt);
  }
  return all_ok ? 0 : 1;
}

MultiSeries oracle_series(const std::string& target, const ModelParams& params) {
  if (target == "principal") return twistchar::oracle_principal(params);
  if (target == "parafermionic") return twistchar::oracle_parafermionic(params);
  if (target == "standard") return twistchar::oracle_standard(params);
  if (target == "vacuum-slice") return twistchar::oracle_standard_vacuum_slice(params);
  if (target == "basic") return twistchar::oracle_basic_module(params);
  if (target == "freudenthal") return freudenthal_series(params);
  throw std::domain_error("oracle: unknown target '" + target + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded characters of twisted vacuum modules: fermionic formulas, "
               "brute-force oracles, and cross-verification"};
  app.require_subcommand(1);

  Options opt;
  std::string oracle_target = "principal";
  std::string verify_target = "all";

  CLI::App* c_principal =
      app.add_subcommand("principal", "fermionic character of the principal subspace");
  add_common(c_principal, opt);
  CLI::App* c_para =
      app.add_subcommand("parafermionic", "fermionic character of the parafermionic space");
  add_common(c_para, opt);
  CLI::App* c_standard =
      app.add_subcommand("standard", "character of the level-k vacuum module");
  add_common(c_standard, opt);

  CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force reference series");
  c_oracle
      ->add_option("target", oracle_target,
                   "principal|parafermionic|standard|vacuum-slice|basic|freudenthal")
      ->required()
      ->check(CLI::IsMember(
          {"principal", "parafermionic", "standard", "vacuum-slice", "basic", "freudenthal"}));
  add_common(c_oracle, opt);

  CLI::App* c_verify =
      app.add_subcommand("verify", "compare formula characters against the oracles");
  c_verify
      ->add_option("target", verify_target,
                   "principal|parafermionic|standard|basic|factorization|freudenthal|all")
      ->check(CLI::IsMember({"principal", "parafermionic", "standard", "basic", "factorization",
                             "freudenthal", "all"}));
  add_common(c_verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 returns 0 for --help/--version; anything else is a usage error.
    return code == 0 ? 0 : 2;
  }

  try {
    ModelParams params = make_params(opt);
    if (c_principal->parsed()) {
      emit_series(twistchar::char_principal(params), params, opt, "principal");
    } else if (c_para->parsed()) {
      emit_series(twistchar::char_parafermionic(params), params, opt, "parafermionic");
    } else if (c_standard->parsed()) {
      emit_series(twistchar::char_standard(params), params, opt, "standard");
    } else if (c_oracle->parsed()) {
      emit_series(oracle_series(oracle_target, params), params, opt,
                  "oracle-" + oracle_target);
    } else if (c_verify->parsed()) {
      return run_verify(verify_target, params, opt);
    }
    return 0;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
