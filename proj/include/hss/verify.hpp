#pragma once

// Property suites that cross-check the word calculus, the engine and the
// planner against each other and against the brute-force oracle.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hss/complex.hpp"
#include "hss/downset.hpp"
#include "hss/oracle.hpp"
#include "hss/word.hpp"

namespace hss {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  /// The first few failures, each with a replayable instance description.
  std::vector<OracleReport> failures;

  bool passed() const noexcept { return failure_count == 0 && checks > 0; }
  /// Counts one check; returns `ok`.
  bool tally(bool ok) noexcept {
    ++checks;
    if (!ok) ++failure_count;
    return ok;
  }
  /// Keeps the description of a failure (only the first few are stored).
  void note(OracleReport report);
};

/// Deliberate corruption of an expected value, used to confirm that the
/// suites actually detect disagreement.
enum class Fault { None, HomologyOffByOne };

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 100;                        // random complexes for the main theorem suite
  std::vector<std::uint32_t> primes{2, 5};
  Fault fault = Fault::None;
  int max_word_length = 4;
  int classical_trials = 50;
  int dual_quads = 500;
  int ses_chains = 200;

  /// Sizes every randomized suite from one trial count (100 gives the defaults).
  static VerifyOptions scaled(std::uint64_t seed, int trials);
};

/// Every admissible word over n letters with at most `max_length` letters, in
/// length-then-lexicographic order.
std::vector<Word> admissible_words(int n, int max_length);
/// Words over [n] only.
std::vector<Word> plain_words(int n, int max_length);

/// Downward closure of `generators` inside the box.
Downset downset_closure(const Box& box, const std::vector<IVec>& generators);
/// Closure of a few uniformly drawn points of the box.
Downset random_downset(std::mt19937_64& rng, const Box& box, int points);

std::string dims_string(const DegreeDims& dims);

SuiteResult word_lemma_suite(int max_length_n2 = 7, int max_length_n3 = 5);
SuiteResult worked_values_suite();
SuiteResult main_theorem_suite(const VerifyOptions& options);
SuiteResult classical_suite(const VerifyOptions& options);
SuiteResult dual_s_term_suite(const VerifyOptions& options);
SuiteResult exact_sequence_suite(const VerifyOptions& options);
SuiteResult planner_suite(std::int64_t bound = 20);

/// All suites; with trials == 0 only the enumerated (deterministic) ones.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

nlohmann::ordered_json verification_summary(const std::vector<SuiteResult>& results);

}  // namespace hss
