// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: acceptance <path-to-cli> <samples-dir> [seed]

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hss/verify.hpp"
#include "process.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome from_suite(const hss::SuiteResult& r, double elapsed, double budget) {
  std::ostringstream s;
  s << r.checks << " checks, " << r.failure_count << " failures, " << std::fixed;
  s.precision(1);
  s << elapsed << " s";
  if (budget > 0) s << " (limit " << budget << " s)";
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    s << "; first failure: " << f.check << " expected " << f.expected << " got " << f.actual << " at "
      << f.instance.substr(0, 400);
  }
  return {r.passed() && (budget <= 0 || elapsed < budget), s.str()};
}

Outcome timed(const std::function<hss::SuiteResult()>& suite, double budget) {
  const auto t0 = Clock::now();
  const auto r = suite();
  return from_suite(r, seconds_since(t0), budget);
}

Outcome cli_determinism(const std::string& cli, const std::string& samples) {
  using hss::fixture::quoted;
  std::vector<std::string> commands;
  for (const auto& entry : std::filesystem::directory_iterator(samples)) {
    if (entry.path().extension() != ".json") continue;
    const std::string file = quoted(entry.path().string());
    std::string origin;
    const auto doc = nlohmann::json::parse(std::ifstream(entry.path()));
    const int n = doc.at("n").get<int>();
    for (int i = 0; i < n; ++i) origin += (i ? ",1" : "1");
    std::string first_word = n == 1 ? "1" : "12";
    std::string final_word;
    for (int j = 1; j <= n && n <= 9; ++j) final_word += std::to_string(j) + "^e";
    commands.push_back("limit --input " + file);
    commands.push_back("page --input " + file + " --word '' --position " + origin);
    commands.push_back("page --input " + file + " --word " + first_word + " --position " + origin);
    commands.push_back("page --input " + file + " --word '" + final_word + "' --position " + origin);
  }
  std::sort(commands.begin(), commands.end());
  for (const char* normal : {"3,5 --j1 1", "3,5 --j1 2", "8,13 --j1 1 --k 2", "1,0 --j1 2"})
    commands.push_back(std::string("plan --normal ") + normal);
  for (const char* draw : {"--word 1", "--word ''", "--word 12121^e2^e --format svg", "--word 1^e2 --truncation 4",
                           "--word 123 --n 3 --format svg"})
    commands.push_back(std::string("draw-b ") + draw);

  for (const auto& args : commands) {
    const auto a = hss::fixture::run_command(quoted(cli) + " " + args);
    const auto b = hss::fixture::run_command(quoted(cli) + " " + args);
    if (a.exit_code != 0) return {false, "exit code " + std::to_string(a.exit_code) + " for: " + args};
    if (a.out.empty() || a.out != b.out) return {false, "output differs between runs for: " + args};
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical across two runs"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli> <samples-dir> [seed]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string samples = argv[2];
  const std::uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 20240601;
  const hss::VerifyOptions options = hss::VerifyOptions::scaled(seed, 100);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "word-calculus lemma suite", [] { return timed([] { return hss::word_lemma_suite(7, 5); }, 60); }},
      {2, "worked values", [] { return timed(hss::worked_values_suite, 0); }},
      {3, "main theorem randomized suite",
       [&] { return timed([&] { return hss::main_theorem_suite(options); }, 600); }},
      {4, "n=1 classical equivalence", [&] { return timed([&] { return hss::classical_suite(options); }, 0); }},
      {5, "dual S-term algorithms", [&] { return timed([&] { return hss::dual_s_term_suite(options); }, 0); }},
      {6, "short exact sequence lemma", [&] { return timed([&] { return hss::exact_sequence_suite(options); }, 0); }},
      {7, "planner round trip", [] { return timed([] { return hss::planner_suite(20); }, 5); }},
      {8, "CLI determinism", [&] { return cli_determinism(cli, samples); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
