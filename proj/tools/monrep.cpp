// monrep: batch front end for the exact representation-theory kernels.
//
// Subcommands: char, plethysm, kron, symkron, monoid (sat|holes),
// chow (holes|family|bound|alon-tarsi), scan (problem1|det3gap).
// Exit codes: 0 success, 1 internal assertion failure, 2 usage error,
// 3 resource-guard violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "monrep/characters.hpp"
#include "monrep/chow.hpp"
#include "monrep/errors.hpp"
#include "monrep/kronecker.hpp"
#include "monrep/monoid.hpp"
#include "monrep/obstructions.hpp"
#include "monrep/partition.hpp"
#include "monrep/power_sum.hpp"

namespace {

using monrep::BigInt;
using monrep::FGMonoid;
using monrep::IntVec;
using monrep::Partition;
using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  std::string format = "text";  // text | json | csv
  std::string out_path;         // empty = stdout
  int threads = 1;
  bool acknowledge_expensive = false;

  // Guards may only be raised through --acknowledge-expensive.
  int guard_or(int requested, int default_cap) const {
    return acknowledge_expensive ? std::max(requested, default_cap)
                                 : default_cap;
  }
};

// Results are accumulated and written in one shot: to stdout, or atomically
// (temp file + rename) when --out is given.
void emit(const RunConfig& config, const std::string& content) {
  if (config.out_path.empty()) {
    std::cout << content;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(config.out_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot open output file " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

IntVec parse_vector(const std::string& text) {
  IntVec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    v.push_back(std::stoll(tok));
  if (v.empty()) throw std::invalid_argument("empty vector literal");
  return v;
}

std::vector<IntVec> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read generator file " + path);
  std::vector<IntVec> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    gens.push_back(parse_vector(line));
  }
  if (gens.empty())
    throw std::invalid_argument("generator file has no vectors: " + path);
  for (const auto& g : gens)
    if (g.size() != gens[0].size())
      throw std::invalid_argument("generator file mixes dimensions");
  return gens;
}

std::string vector_str(const IntVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// Single integer result; JSON keeps arbitrary precision by quoting.
std::string scalar(const RunConfig& config, const std::string& value) {
  if (config.format == "json") {
    ordered_json j;
    j["value"] = value;
    return j.dump() + "\n";
  }
  return value + "\n";
}

std::string format_holes(const RunConfig& config,
                         const std::vector<monrep::HoleRecord>& holes) {
  std::string out;
  if (config.format == "json") {
    for (const auto& rec : holes) {
      ordered_json j;
      j["partition"] = rec.lambda.parts();
      j["degree"] = rec.degree;
      j["ambient"] = static_cast<long long>(rec.ambient_mult);
      j["normalization"] = static_cast<long long>(rec.normalization_mult);
      out += j.dump() + "\n";
    }
  } else if (config.format == "csv") {
    out = "partition,degree,ambient,normalization\n";
    for (const auto& rec : holes)
      out += "\"" + rec.lambda.str() + "\"," + std::to_string(rec.degree) +
             "," + rec.ambient_mult.str() + "," +
             rec.normalization_mult.str() + "\n";
  } else {
    for (const auto& rec : holes)
      out += rec.lambda.str() + " d=" + std::to_string(rec.degree) +
             " ambient=" + rec.ambient_mult.str() + "\n";
  }
  return out;
}

int run(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"exact plethysm / Kronecker / monoid-saturation workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too
  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag_callback(
      "--json", [&config] { config.format = "json"; },
      "shorthand for --format json");
  app.add_option("--out", config.out_path,
                 "write output to this file (atomic replace)");
  app.add_option("--threads", config.threads, "worker threads for scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--acknowledge-expensive", config.acknowledge_expensive,
               "raise the built-in resource guards; runs can get very costly");

  std::string lambda_text, mu_text, nu_text, query_text, gens_path;
  int outer = 0, inner = 0, max_rows = 0;
  int dmax = 0, n_param = 0, family_j = 0, family_k = 0;
  long long box_bound = 0;

  CLI::App* cmd_char = app.add_subcommand("char", "character value chi^lambda(mu)");
  cmd_char->add_option("lambda", lambda_text, "partition, e.g. 7,3,2")->required();
  cmd_char->add_option("mu", mu_text, "cycle type, same size")->required();

  CLI::App* cmd_pleth =
      app.add_subcommand("plethysm", "Schur expansion of Sym^outer Sym^inner");
  cmd_pleth->add_option("--outer", outer, "outer symmetric power")->required();
  cmd_pleth->add_option("--inner", inner, "inner symmetric power")->required();
  cmd_pleth->add_option("--max-rows", max_rows, "limit printed rows");

  CLI::App* cmd_kron = app.add_subcommand("kron", "Kronecker coefficient");
  cmd_kron->add_option("lambda", lambda_text)->required();
  cmd_kron->add_option("mu", mu_text)->required();
  cmd_kron->add_option("nu", nu_text)->required();

  CLI::App* cmd_symkron =
      app.add_subcommand("symkron", "symmetric Kronecker coefficient");
  cmd_symkron->add_option("lambda", lambda_text)->required();
  cmd_symkron->add_option("mu", mu_text)->required();

  CLI::App* cmd_monoid = app.add_subcommand("monoid", "finitely generated submonoids of Z^r");
  cmd_monoid->require_subcommand(1);
  CLI::App* cmd_sat = cmd_monoid->add_subcommand("sat", "saturation membership");
  cmd_sat->add_option("--gens", gens_path, "file with one vector per line")->required();
  cmd_sat->add_option("--query", query_text, "vector, e.g. 0,1")->required();
  CLI::App* cmd_holes_m = cmd_monoid->add_subcommand("holes", "holes inside a box");
  cmd_holes_m->add_option("--gens", gens_path, "file with one vector per line")->required();
  cmd_holes_m->add_option("--box", box_bound, "per-coordinate bound")->required();

  CLI::App* cmd_chow = app.add_subcommand("chow", "Chow-variety computations");
  cmd_chow->require_subcommand(1);
  CLI::App* cmd_chow_holes = cmd_chow->add_subcommand(
      "holes", "scan for holes certified by the normalization");
  cmd_chow_holes->add_option("--dmax", dmax, "largest degree")->required();
  CLI::App* cmd_family = cmd_chow->add_subcommand(
      "family", "check one member of the infinite hole family");
  cmd_family->add_option("--j", family_j)->required();
  cmd_family->add_option("--k", family_k)->required();
  CLI::App* cmd_bound = cmd_chow->add_subcommand(
      "bound", "exact module-generator count D against n^(n^2-2n)");
  cmd_bound->add_option("--n", n_param)->required();
  CLI::App* cmd_at = cmd_chow->add_subcommand(
      "alon-tarsi", "even minus odd Latin squares, full enumeration");
  cmd_at->add_option("--n", n_param)->required();

  CLI::App* cmd_scan = app.add_subcommand("scan", "batch obstruction searches");
  cmd_scan->require_subcommand(1);
  CLI::App* cmd_p1 = cmd_scan->add_subcommand(
      "problem1", "plethysm-positive, symkron-zero candidates");
  cmd_p1->add_option("--n", n_param)->required();
  cmd_p1->add_option("--dmax", dmax)->required();
  CLI::App* cmd_gap = cmd_scan->add_subcommand(
      "det3gap", "plethysm multiplicity exceeding symkron, nine rows");
  cmd_gap->add_option("--dmax", dmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  std::string out;
  if (cmd_char->parsed()) {
    out = scalar(config, monrep::mn_character(Partition::parse(lambda_text),
                                              Partition::parse(mu_text))
                             .str());
  } else if (cmd_pleth->parsed()) {
    const auto& f = monrep::h_plethysm_h(outer, inner);
    monrep::SchurExpansion expansion = monrep::schur_expansion(f, max_rows);
    if (config.format == "json") {
      for (auto it = expansion.mults.rbegin(); it != expansion.mults.rend(); ++it) {
        ordered_json j;
        j["partition"] = it->first.parts();
        j["mult"] = static_cast<long long>(it->second);
        out += j.dump() + "\n";
      }
    } else if (config.format == "csv") {
      out = "partition,mult\n";
      for (auto it = expansion.mults.rbegin(); it != expansion.mults.rend(); ++it)
        out += "\"" + it->first.str() + "\"," + it->second.str() + "\n";
    } else {
      for (auto it = expansion.mults.rbegin(); it != expansion.mults.rend(); ++it)
        out += it->first.str() + "\t" + it->second.str() + "\n";
    }
  } else if (cmd_kron->parsed()) {
    out = scalar(config,
                 monrep::kron(Partition::parse(lambda_text),
                              Partition::parse(mu_text),
                              Partition::parse(nu_text))
                     .str());
  } else if (cmd_symkron->parsed()) {
    out = scalar(config, monrep::sym_kron(Partition::parse(lambda_text),
                                          Partition::parse(mu_text))
                             .str());
  } else if (cmd_sat->parsed()) {
    auto gens = read_generator_file(gens_path);
    const int rank = static_cast<int>(gens[0].size());
    FGMonoid monoid(rank, std::move(gens));
    const bool inside = monoid.in_saturation(parse_vector(query_text));
    if (config.format == "json") {
      ordered_json j;
      j["in_saturation"] = inside;
      out = j.dump() + "\n";
    } else {
      out = inside ? "true\n" : "false\n";
    }
  } else if (cmd_holes_m->parsed()) {
    auto gens = read_generator_file(gens_path);
    const int rank = static_cast<int>(gens[0].size());
    FGMonoid monoid(rank, std::move(gens));
    IntVec box(static_cast<size_t>(rank), box_bound);
    auto holes = monrep::holes_in_box(
        monoid, monoid.generator_oracle(box_bound), box);
    for (const auto& v : holes) {
      if (config.format == "json") {
        ordered_json j;
        j["vector"] = v;
        out += j.dump() + "\n";
      } else {
        out += vector_str(v) + "\n";
      }
    }
  } else if (cmd_chow_holes->parsed()) {
    auto holes = monrep::chow3_hole_scan(dmax, config.threads,
                                         config.guard_or(dmax, 10));
    out = format_holes(config, holes);
  } else if (cmd_family->parsed()) {
    auto verdict = monrep::infinite_family_check(
        family_j, family_k, config.guard_or(4 + 4 * family_k + family_j, 10));
    if (config.format == "json") {
      ordered_json j;
      j["lambda"] = verdict.lambda.parts();
      j["degree"] = verdict.degree;
      j["ambient"] = static_cast<long long>(verdict.ambient_mult);
      j["normalization"] = static_cast<long long>(verdict.normalization_mult);
      j["chain_consistent"] = verdict.chain_consistent;
      j["hole"] = verdict.confirmed_hole;
      out = j.dump() + "\n";
    } else {
      out = "lambda=" + verdict.lambda.str() +
            " d=" + std::to_string(verdict.degree) +
            " ambient=" + verdict.ambient_mult.str() +
            " normalization=" + verdict.normalization_mult.str() +
            " chain_consistent=" + (verdict.chain_consistent ? "true" : "false") +
            " hole=" + (verdict.confirmed_hole ? "true" : "false") + "\n";
    }
  } else if (cmd_bound->parsed()) {
    auto report = monrep::bound_D(n_param);
    if (config.format == "json") {
      ordered_json j;
      j["n"] = report.n;
      j["D"] = report.d_value.str();
      j["bound"] = report.bound.str();
      j["holds"] = report.holds;
      j["hilbert_leading_ok"] = report.hilbert_leading_ok;
      out = j.dump() + "\n";
    } else {
      out = "D=" + report.d_value.str() + " bound=" + report.bound.str() +
            " holds=" + (report.holds ? "true" : "false") + "\n";
    }
  } else if (cmd_at->parsed()) {
    out = scalar(config,
                 std::to_string(monrep::alon_tarsi_delta(
                     n_param, config.guard_or(n_param, 5))));
  } else if (cmd_p1->parsed()) {
    auto report = monrep::problem1_scan(
        n_param, dmax, config.threads, config.out_path,
        config.guard_or(n_param * dmax, 20));
    // The scan checkpoints into --out itself; print only when it did not.
    if (config.out_path.empty()) std::cout << monrep::report_to_json(report);
    return 0;
  } else if (cmd_gap->parsed()) {
    auto report = monrep::det3_gap_scan(dmax, config.threads, config.out_path,
                                        config.guard_or(dmax, 7));
    if (config.out_path.empty()) std::cout << monrep::report_to_json(report);
    return 0;
  }

  emit(config, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const monrep::GuardViolation& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return 3;
  } catch (const monrep::InternalArithmeticError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
