// Command-line front end: Hilbert functions, rank matrices, Jordan types,
// candidate-matrix checks, the nilpotent-linear-form classification, and the
// realization search, with JSON or plain-text output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gjt/apolarity.hpp"
#include "gjt/classify3.hpp"
#include "gjt/jordan.hpp"
#include "gjt/polynomial.hpp"
#include "gjt/search.hpp"
#include "gjt/sequences.hpp"
#include "gjt/serialization.hpp"

namespace {

using gjt::json;

struct CommandResult {
  json data;
  std::string text;   // used when --format text
  int exit_code = 0;  // 0 ok, 1 verification failure
};

gjt::DualGenerator parse_generator(const std::string& poly, int vars) {
  gjt::Polynomial f = gjt::parse_polynomial(poly, vars);
  return gjt::DualGenerator(std::move(f));
}

std::string hilbert_text(const gjt::HilbertFunction& h) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  os << ')';
  return os.str();
}

CommandResult run_hilbert(const std::string& poly, int vars) {
  const auto h = gjt::hilbert_function(parse_generator(poly, vars));
  return {json(h), "h = " + hilbert_text(h) + "\n", 0};
}

CommandResult run_rank_matrix(const std::string& poly, const std::string& linear, int vars) {
  const auto f = parse_generator(poly, vars);
  const auto ell = gjt::parse_linear_form(linear, vars);
  const auto m = gjt::rank_matrix(f, ell);
  return {gjt::to_json(m), m.to_string(), 0};
}

CommandResult run_jordan_type(const std::string& poly, const std::string& linear, int vars) {
  const auto f = parse_generator(poly, vars);
  const auto ell = gjt::parse_linear_form(linear, vars);
  const auto p = gjt::jordan_type(f, ell);
  const auto s = gjt::jordan_degree_type(f, ell);
  json out{{"partition", gjt::to_json(p)},
           {"jordan_degree_type", gjt::to_json(s)},
           {"dimension", p.sum()}};
  std::ostringstream text;
  text << "P = " << p.to_string() << "\nS = " << s.to_string() << "\n";
  return {out, text.str(), 0};
}

CommandResult run_jdt(const std::string& poly, const std::string& linear, int vars) {
  const auto f = parse_generator(poly, vars);
  const auto ell = gjt::parse_linear_form(linear, vars);
  const auto m = gjt::rank_matrix(f, ell);
  const auto [jp, j] = gjt::jdt_with_intermediate(m);
  json out{{"j", gjt::to_json(j)},
           {"j_prime", gjt::to_json(jp)},
           {"jordan_degree_type", gjt::to_json(gjt::jordan_degree_type(j))}};
  std::ostringstream text;
  text << "J' =\n" << jp.to_string() << "J =\n" << j.to_string();
  return {out, text.str(), 0};
}

CommandResult run_check_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  const auto m = gjt::triangular_from_json(j);
  const auto report = gjt::check_rank_matrix_conditions(m);
  std::ostringstream text;
  text << (report.passed ? "all conditions satisfied\n" : "conditions violated\n");
  for (const auto& v : report.violations)
    text << "  (" << v.condition << ") " << v.detail << "\n";
  for (const auto& w : report.warnings) text << "  warning: " << w << "\n";
  return {gjt::to_json(report), text.str(), report.passed ? 0 : 1};
}

json profile_json(const gjt::ParamTriple& p, const gjt::ClassifiedProfile& profile) {
  json out = gjt::to_json(profile);
  out["witness"] = gjt::witness_generator(p, profile.variant).polynomial().to_string();
  return out;
}

CommandResult run_classify(int d, const std::optional<std::vector<int>>& params) {
  json triples = json::array();
  long listed = 0;
  for (const auto& p : gjt::valid_parameters_l3(d)) {
    if (params && !(p.r == (*params)[0] && p.s == (*params)[1] && p.t == (*params)[2])) continue;
    json entry = gjt::to_json(p);
    entry["profiles"] = json::array();
    for (const auto& profile : gjt::predicted_profile(p))
      entry["profiles"].push_back(profile_json(p, profile));
    triples.push_back(std::move(entry));
    ++listed;
  }
  if (params && listed == 0)
    throw std::invalid_argument("parameters (" + std::to_string((*params)[0]) + "," +
                                std::to_string((*params)[1]) + "," + std::to_string((*params)[2]) +
                                ") are not admissible for socle degree " + std::to_string(d));
  json pairs = json::array();
  if (!params) {
    for (const auto& p : gjt::valid_parameters_l2(d)) {
      json entry = gjt::to_json(p);
      entry["profile"] = gjt::to_json(gjt::predicted_profile_l2(p));
      entry["witness"] = gjt::witness_generator_l2(p).polynomial().to_string();
      pairs.push_back(std::move(entry));
    }
  }
  json out{{"socle_degree", d}, {"triples", triples}, {"pairs", pairs}};
  std::ostringstream text;
  text << triples.size() << " parameter triples";
  if (!params) text << ", " << pairs.size() << " two-line pairs";
  text << " for socle degree " << d << "\n";
  for (const auto& t : triples)
    text << "  (r,s,t)=(" << t["r"] << "," << t["s"] << "," << t["t"] << ") clause "
         << t["clause"].get<std::string>() << "\n";
  return {out, text.str(), 0};
}

CommandResult run_verify(int max_degree) {
  const auto report = gjt::verify_classification(max_degree);
  json out{{"ok", report.ok},
           {"profiles_checked", report.profiles_checked},
           {"failures", report.failures}};
  std::ostringstream text;
  if (report.ok)
    text << "all profiles verified (" << report.profiles_checked << " checked, max degree "
         << max_degree << ")\n";
  else
    for (const auto& f : report.failures) text << "FAIL " << f << "\n";
  return {out, text.str(), report.ok ? 0 : 1};
}

CommandResult run_search(int d, int bounds, long budget, std::uint64_t seed,
                         const std::string& log_path, bool resume) {
  std::vector<std::string> skip;
  long prior_realized = 0, prior_unrealized = 0;
  std::vector<std::string> prior_resistant;
  if (resume) {
    std::ifstream in(log_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      skip.push_back(j.at("hash").get<std::string>());
      if (j.at("status").get<std::string>() == "realized") {
        ++prior_realized;
      } else {
        ++prior_unrealized;
        prior_resistant.push_back(j.at("hash").get<std::string>());
      }
    }
  }
  std::ofstream log(log_path, resume ? std::ios::app : std::ios::trunc);
  if (!log) throw std::invalid_argument("cannot open log " + log_path);
  const auto summary = gjt::run_search(d, bounds, budget, seed,
                                       [&](const gjt::SearchVerdict& v) {
                                         log << gjt::to_json(v).dump() << "\n";
                                       },
                                       skip);
  json resistant = json::array();
  for (const auto& h : prior_resistant) resistant.push_back(h);
  for (const auto& h : summary.resistant_hashes) resistant.push_back(h);
  json out{{"socle_degree", d},
           {"candidates", summary.candidates},
           {"realized", summary.realized + prior_realized},
           {"unrealized", summary.unrealized + prior_unrealized},
           {"resistant", resistant},
           {"log", log_path}};
  std::ostringstream text;
  text << summary.candidates << " candidates, " << (summary.realized + prior_realized)
       << " realized, " << (summary.unrealized + prior_unrealized)
       << " unrealized (inconclusive), log " << log_path << "\n";
  return {out, text.str(), 0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computation of rank matrices and Jordan types for graded Artinian "
      "Gorenstein algebras presented by dual generators"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  std::string out_path;
  app.add_option("--out", out_path, "also write the output to this file");

  std::string poly, linear, file;
  int vars = 3;
  int socle_degree = 0;
  int max_degree = 10;
  int bounds = 20;
  long budget = 200;
  std::uint64_t seed = 0;
  std::string log_path = "search-verdicts.ndjson";
  bool resume = false;
  std::string params_text;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of S/Ann(F)");
  hilbert->add_option("--poly", poly, "dual generator F")->required();
  hilbert->add_option("--vars", vars, "number of variables");

  auto* rank_cmd = app.add_subcommand("rank-matrix", "rank matrix of (F, ell)");
  rank_cmd->add_option("--poly", poly)->required();
  rank_cmd->add_option("--linear", linear, "linear form ell")->required();
  rank_cmd->add_option("--vars", vars);

  auto* jordan_cmd = app.add_subcommand("jordan-type", "Jordan type and Jordan degree type");
  jordan_cmd->add_option("--poly", poly)->required();
  jordan_cmd->add_option("--linear", linear)->required();
  jordan_cmd->add_option("--vars", vars);

  auto* jdt_cmd = app.add_subcommand("jdt", "Jordan-degree-type matrix and its intermediate");
  jdt_cmd->add_option("--poly", poly)->required();
  jdt_cmd->add_option("--linear", linear)->required();
  jdt_cmd->add_option("--vars", vars);

  auto* check_cmd = app.add_subcommand("check-matrix", "necessary conditions on a candidate matrix");
  check_cmd->add_option("--file", file, "JSON file with an array of matrix rows")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "admissible parameters, profiles and witnesses");
  classify_cmd->add_option("--socle-degree", socle_degree)->required();
  classify_cmd->add_option("--params", params_text, "restrict to one triple r,s,t");

  auto* verify_cmd =
      app.add_subcommand("verify-classification", "recompute every witness against its profile");
  verify_cmd->add_option("--max-degree", max_degree);

  int ceiling = 9;
  auto* search_cmd = app.add_subcommand("search", "attempt to realize condition-passing matrices");
  search_cmd->add_option("--socle-degree", socle_degree)->required();
  search_cmd->add_option("--budget", budget, "attempts per candidate");
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--bounds", bounds, "entry cap for enumeration");
  search_cmd->add_option("--log", log_path, "newline-delimited JSON verdict log");
  search_cmd->add_flag("--resume", resume, "skip candidates already in the log");
  search_cmd->add_option("--ceiling", ceiling, "largest allowed socle degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CommandResult result;
    if (app.got_subcommand(hilbert)) {
      result = run_hilbert(poly, vars);
    } else if (app.got_subcommand(rank_cmd)) {
      result = run_rank_matrix(poly, linear, vars);
    } else if (app.got_subcommand(jordan_cmd)) {
      result = run_jordan_type(poly, linear, vars);
    } else if (app.got_subcommand(jdt_cmd)) {
      result = run_jdt(poly, linear, vars);
    } else if (app.got_subcommand(check_cmd)) {
      result = run_check_matrix(file);
    } else if (app.got_subcommand(classify_cmd)) {
      std::optional<std::vector<int>> triple;
      if (!params_text.empty()) {
        std::vector<int> values;
        std::stringstream ss(params_text);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
        if (values.size() != 3) throw std::invalid_argument("--params expects r,s,t");
        triple = values;
      }
      result = run_classify(socle_degree, triple);
    } else if (app.got_subcommand(verify_cmd)) {
      result = run_verify(max_degree);
    } else {
      if (socle_degree > ceiling)
        throw std::invalid_argument("socle degree " + std::to_string(socle_degree) +
                                    " exceeds the ceiling of " + std::to_string(ceiling) +
                                    "; raise --ceiling to override");
      result = run_search(socle_degree, bounds, budget, seed, log_path, resume);
    }

    const std::string rendered =
        format == "json" ? result.data.dump() + "\n" : result.text;
    std::cout << rendered;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot open " + out_path);
      out << rendered;
    }
    return result.exit_code;
  } catch (const gjt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
