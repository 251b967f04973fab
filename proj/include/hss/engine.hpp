#pragma once

// E-terms, S-terms and the pages of a word for a multifiltered complex. Every
// value is a subquotient of the single ambient chain space C.

#include <cstdint>
#include <unordered_map>
#include <mutex>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hss/complex.hpp"
#include "hss/downset.hpp"
#include "hss/linalg.hpp"
#include "hss/word.hpp"

namespace hss {

enum class STermAlgorithm { ClosedForm, ViaMaps };

struct ETerm {
  Subquotient value;
  Downset p, q;
};

struct STerm {
  Subquotient value;
  DownsetQuad quad;
};

struct PageTerm {
  Word word;
  IVec position_class;
  DegreeDims dims;
  STerm realization;
};

/// S(P+a;w) --incoming--> S(P;w) --outgoing--> S(P-a;w) for a = a^j_w.
/// Matrices use column convention in the canonical quotient bases.
struct PageDifferential {
  STerm source;
  STerm middle;
  STerm target;
  Matrix incoming;
  Matrix outgoing;
};

struct ExtensionReport {
  /// Index of the first entry of `filtration`; F_{first_index} is zero.
  std::int64_t first_index = 0;
  /// dim F_i for i = first_index, first_index + 1, ...; the last entry is the total.
  std::vector<DegreeDims> filtration;
  /// dim S(P + i*delta; w*j^inf) for i = first_index + 1, ...
  std::vector<DegreeDims> graded_pieces;
  DegreeDims total;
  /// The subspaces F_i as subquotients of the total term.
  std::vector<Subquotient> pieces;
};

/// Computation context for one complex. Caches the subspaces
/// A(p, z) = F_p ∩ d⁻¹(F_z) and closed-form S-terms keyed by which generators
/// each downset contains; the caches are filled idempotently under a lock, so
/// one engine may serve concurrent callers.
class Engine {
 public:
  explicit Engine(const MultifilteredComplex& complex) : c_(complex) {}

  const MultifilteredComplex& complex() const noexcept { return c_; }

  Subspace filtration(const Downset& d) const { return c_.filtration_subspace(d); }
  /// F_p ∩ d⁻¹(F_z).
  Subspace cycles(const Downset& p, const Downset& z) const;
  /// d(F_b ∩ d⁻¹(F_p)).
  Subspace boundaries(const Downset& b, const Downset& p) const;

  ETerm e_term(const Downset& p, const Downset& q) const;
  STerm s_term(const DownsetQuad& quad, STermAlgorithm algorithm = STermAlgorithm::ClosedForm) const;

  /// The quad realizing S(P;w) (see page()).
  DownsetQuad page_quad(const Word& w, const IVec& point) const;
  PageTerm page(const Word& w, const IVec& point) const;
  PageDifferential page_differential(const Word& w, const IVec& point, int j) const;
  PageTerm saturate(const Word& w, const IVec& point, int j) const;
  /// S(P; w*j^k) realized in the frame of (w, j).
  STerm finite_stage(const Word& w, const IVec& point, int j, std::int64_t k) const;
  /// Smallest k with S(P; w*j^k) realized by the saturated quad on this support.
  std::int64_t stabilization_index(const Word& w, const IVec& point, int j) const;
  ExtensionReport extension_filtration(const Word& w, const IVec& point, int j) const;
  DegreeDims limit() const;

  /// The d-induced map between two S-terms whose quads satisfy
  /// d(A(p,z)) ⊆ target numerator; throws IllDefinedMap otherwise.
  Matrix connecting_map(const STerm& source, const STerm& target) const;

  DegreeDims dims(const Subquotient& s) const { return c_.graded_dims(s); }

 private:
  const MultifilteredComplex& c_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::vector<bool>, Subspace> cycles_cache_;
  mutable std::unordered_map<std::vector<bool>, Subquotient> s_term_cache_;
};

nlohmann::ordered_json page_report(const MultifilteredComplex& c, const PageTerm& term);

}  // namespace hss
