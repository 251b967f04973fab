#pragma once

// Brute-force reference computations used to cross-check the engine. They
// use their own elimination routine and never touch Subspace or Downset.

#include <cstdint>
#include <string>
#include <vector>

#include "hss/complex.hpp"

namespace hss {

struct OracleReport {
  std::string check;
  std::string instance;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// dim H(C) per degree, by rank-nullity.
DegreeDims homology_total(const MultifilteredComplex& c);

/// The classical spectral sequence of a singly filtered complex.
struct ClassicalSpectralSequence {
  std::int64_t lo = 0;  // smallest filtration position with generators
  std::int64_t hi = -1; // largest
  /// pages[r - 1][P - lo] = dim E^r_P, r = 1 .. pages.size().
  std::vector<std::vector<DegreeDims>> pages;
  /// infinity[P - lo] = dim E^inf_P.
  std::vector<DegreeDims> infinity;

  /// E^r_P (r >= 1), zero outside [lo, hi] and constant past the last stored page.
  DegreeDims page(std::int64_t r, std::int64_t position) const;
  DegreeDims limit_term(std::int64_t position) const;
};

/// Pages r = 1 .. max_page (at least until the sequence has degenerated).
ClassicalSpectralSequence classical_ss(const MultifilteredComplex& c, std::int64_t max_page);

struct RandomComplexOptions {
  int n = 2;
  IVec lo;
  IVec hi;
  int max_per_cell = 2;
  std::uint32_t prime = 2;
  bool graded = true;
  std::int64_t degree_lo = 0;
  std::int64_t degree_hi = 3;
  double pair_probability = 0.7;
  double mix_probability = 0.35;
};

/// Deterministic in the seed. Built as a sum of elementary pieces x -> y and
/// single cycles, conjugated by a random position-nonincreasing automorphism.
MultifilteredComplex random_complex(std::uint64_t seed, const RandomComplexOptions& options);

}  // namespace hss
