#pragma once

// Finite multigraded chain complexes over a prime field: C is the direct sum
// of its position components C_P, and d only moves generators downward.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hss/downset.hpp"
#include "hss/intmat.hpp"
#include "hss/linalg.hpp"

namespace hss {

struct Generator {
  std::string id;
  std::optional<std::int64_t> degree;
  IVec position;
};

struct DifferentialEntry {
  std::string from;
  std::string to;
  std::int64_t coeff = 1;
};

/// Dimensions keyed by homological degree. Ungraded complexes put every
/// generator in degree 0 and report that single entry as "total".
using DegreeDims = std::map<std::int64_t, std::size_t>;

class MultifilteredComplex {
 public:
  /// Validates every invariant: unique ids, positions of length n, degrees
  /// on all generators or none, nonzero coefficients without duplicates,
  /// position monotonicity, degree -1, and d∘d = 0.
  MultifilteredComplex(int n, PrimeField field, std::vector<Generator> generators,
                       const std::vector<DifferentialEntry>& differential);

  int n() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool graded() const noexcept { return graded_; }

  /// Row i is d(g_i).
  const LinearMap& differential() const noexcept { return d_; }

  /// Bounding box of all generator positions (the origin box when empty).
  Box support_box() const;
  /// The support box enlarged to contain `point`, then inflated by one.
  Box working_box(const IVec& point) const;

  std::vector<bool> mask(const Downset& d) const;
  /// F_d: the span of generators whose position lies in d.
  Subspace filtration_subspace(const Downset& d) const;

  /// Distinct degrees in ascending order.
  std::vector<std::int64_t> degrees() const;
  std::int64_t degree_of(std::size_t generator) const { return generators_[generator].degree.value_or(0); }
  /// Zero for every degree of the complex.
  DegreeDims zero_dims() const;

  /// Dimensions of a graded subspace split by degree (every key present).
  DegreeDims graded_dims(const Subspace& s) const;
  DegreeDims graded_dims(const Subquotient& s) const;

  nlohmann::ordered_json to_json() const;
  nlohmann::ordered_json dims_json(const DegreeDims& dims) const;

 private:
  int n_;
  PrimeField field_;
  std::vector<Generator> generators_;
  bool graded_ = false;
  LinearMap d_;
};

MultifilteredComplex load_mfc(const nlohmann::json& document);
MultifilteredComplex load_mfc_file(const std::filesystem::path& path);

}  // namespace hss
