#include "monrep/obstructions.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "monrep/errors.hpp"
#include "monrep/kronecker.hpp"
#include "monrep/parallel.hpp"
#include "monrep/power_sum.hpp"

namespace monrep {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_longlong(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw InternalArithmeticError(what);
  return static_cast<long long>(v);
}

ordered_json candidate_json(const ScanCandidate& c) {
  ordered_json j;
  j["partition"] = c.lambda.parts();
  j["plethysm"] = to_longlong(c.plethysm_mult, "scan: multiplicity overflow");
  j["symkron"] = to_longlong(c.symkron, "scan: symkron overflow");
  return j;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

// Loads an existing checkpoint if it matches kind/n/max_rows and does not
// extend past d_max; returns the last completed degree (0 when starting).
int maybe_resume(ScanReport& report, const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) return 0;
  std::ifstream in(path, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  ScanReport prev;
  try {
    prev = report_from_json(text);
  } catch (const std::exception&) {
    return 0;  // unreadable checkpoint: recompute from scratch
  }
  if (prev.kind != report.kind || prev.n != report.n ||
      prev.max_rows != report.max_rows)
    return 0;
  int done = 0;
  for (const auto& s : prev.per_degree) done = std::max(done, s.d);
  if (done > report.d_max) return 0;
  for (auto& c : prev.candidates) report.candidates.push_back(std::move(c));
  for (auto& s : prev.per_degree) report.per_degree.push_back(s);
  return done;
}

void checkpoint(const ScanReport& report, const std::string& path) {
  if (path.empty()) return;
  write_atomically(path, report_to_json(report));
}

// Shared scan driver: for each degree d in (resume, d_max], runs `probe`
// over the row-bounded partitions of size·d in enumeration order, collects
// accepted candidates, and checkpoints.
template <typename Probe>
void run_scan(ScanReport& report, int size_per_degree, int threads,
              const std::string& checkpoint_path, Probe probe) {
  const int resume = maybe_resume(report, checkpoint_path);
  for (int d = resume + 1; d <= report.d_max; ++d) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Partition> lambdas =
        enumerate_partitions(size_per_degree * d, report.max_rows);
    std::vector<ScanCandidate> slots(lambdas.size());
    std::vector<char> accepted(lambdas.size(), 0);
    parallel_for(lambdas.size(), threads, [&](size_t i) {
      if (probe(d, lambdas[i], slots[i])) accepted[i] = 1;
    });
    for (size_t i = 0; i < lambdas.size(); ++i)
      if (accepted[i]) report.candidates.push_back(std::move(slots[i]));
    DegreeStats stats;
    stats.d = d;
    stats.checked = static_cast<long long>(lambdas.size());
    stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report.per_degree.push_back(stats);
    checkpoint(report, checkpoint_path);
  }
}

}  // namespace

std::string report_to_json(const ScanReport& report) {
  ordered_json j;
  j["params"] = {{"kind", report.kind},
                 {"n", report.n},
                 {"dmax", report.d_max},
                 {"max_rows", report.max_rows}};
  j["candidates"] = ordered_json::array();
  for (const auto& c : report.candidates)
    j["candidates"].push_back(candidate_json(c));
  j["per_degree"] = ordered_json::array();
  for (const auto& s : report.per_degree)
    j["per_degree"].push_back(
        {{"d", s.d}, {"checked", s.checked}, {"seconds", s.seconds}});
  return j.dump() + "\n";
}

ScanReport report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  ScanReport report;
  report.kind = j.at("params").at("kind").get<std::string>();
  report.n = j.at("params").at("n").get<int>();
  report.d_max = j.at("params").at("dmax").get<int>();
  report.max_rows = j.at("params").at("max_rows").get<int>();
  for (const auto& c : j.at("candidates")) {
    ScanCandidate cand;
    cand.lambda = Partition(c.at("partition").get<std::vector<int>>());
    cand.plethysm_mult = c.at("plethysm").get<long long>();
    cand.symkron = c.at("symkron").get<long long>();
    report.candidates.push_back(std::move(cand));
  }
  for (const auto& s : j.at("per_degree")) {
    DegreeStats stats;
    stats.d = s.at("d").get<int>();
    stats.checked = s.at("checked").get<long long>();
    stats.seconds = s.at("seconds").get<double>();
    report.per_degree.push_back(stats);
  }
  return report;
}

bool reports_equivalent(const ScanReport& a, const ScanReport& b) {
  if (a.kind != b.kind || a.n != b.n || a.d_max != b.d_max ||
      a.max_rows != b.max_rows)
    return false;
  if (a.candidates.size() != b.candidates.size()) return false;
  for (size_t i = 0; i < a.candidates.size(); ++i) {
    if (a.candidates[i].lambda != b.candidates[i].lambda ||
        a.candidates[i].plethysm_mult != b.candidates[i].plethysm_mult ||
        a.candidates[i].symkron != b.candidates[i].symkron)
      return false;
  }
  if (a.per_degree.size() != b.per_degree.size()) return false;
  for (size_t i = 0; i < a.per_degree.size(); ++i)
    if (a.per_degree[i].d != b.per_degree[i].d ||
        a.per_degree[i].checked != b.per_degree[i].checked)
      return false;
  return true;
}

ScanReport problem1_scan(int n, int d_max, int threads,
                         const std::string& checkpoint_path, int nd_guard) {
  if (n < 2) throw std::invalid_argument("problem1_scan: need n >= 2");
  if (d_max < 1) throw std::invalid_argument("problem1_scan: need d_max >= 1");
  if (n * d_max > nd_guard)
    throw GuardViolation("problem1_scan: n*d_max exceeds the resource guard");

  ScanReport report;
  report.kind = "problem1";
  report.n = n;
  report.d_max = d_max;
  report.max_rows = n;
  run_scan(report, n, threads, checkpoint_path,
           [n](int d, const Partition& la, ScanCandidate& out) {
             BigInt p = mult_sym_sym(la, d, n);
             if (p <= 0) return false;
             BigInt s = sym_kron(la, rectangle(n, d));
             if (s != 0) return false;
             out = ScanCandidate{la, std::move(p), std::move(s)};
             return true;
           });
  return report;
}

ScanReport det3_gap_scan(int d_max, int threads,
                         const std::string& checkpoint_path, int d_guard) {
  if (d_max < 1) throw std::invalid_argument("det3_gap_scan: need d_max >= 1");
  if (d_max > d_guard)
    throw GuardViolation("det3_gap_scan: d_max exceeds the resource guard");

  ScanReport report;
  report.kind = "det3gap";
  report.n = 3;
  report.d_max = d_max;
  report.max_rows = 9;
  run_scan(report, 3, threads, checkpoint_path,
           [](int d, const Partition& la, ScanCandidate& out) {
             BigInt p = mult_sym_sym(la, d, 3);
             if (p <= 0) return false;
             BigInt s = sym_kron(la, rectangle(3, d));
             if (p <= s) return false;
             out = ScanCandidate{la, std::move(p), std::move(s)};
             return true;
           });
  return report;
}

bool padded_filter(const Partition& la, int n, int m) {
  if (m < 1 || n <= m)
    throw std::invalid_argument("padded_filter: need n > m >= 1");
  return static_cast<long long>(n) * la.part(0) >=
         static_cast<long long>(n - m) * la.size();
}

}  // namespace monrep
