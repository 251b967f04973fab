#include "hss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hss/engine.hpp"
#include "hss/error.hpp"
#include "hss/planner.hpp"

namespace hss {

namespace {

constexpr std::size_t kStoredFailures = 20;

using json = nlohmann::ordered_json;

std::string word_label(const Word& w) { return w.empty() ? "ε" : w.to_string(); }

std::string set_string(const std::set<IVec>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + to_string(x);
  return out + "}";
}

std::string matrix_string(const IMat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) out += (i ? "," : "") + to_string(m.row(i));
  return out + "]";
}

bool dims_leq(const DegreeDims& a, const DegreeDims& b) {
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (v > (it == b.end() ? 0 : it->second)) return false;
  }
  return true;
}

DegreeDims dims_difference(const DegreeDims& a, const DegreeDims& b, bool& negative) {
  DegreeDims out;
  negative = false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    std::size_t w = it == b.end() ? 0 : it->second;
    if (w > v) negative = true;
    out[k] = v >= w ? v - w : 0;
  }
  return out;
}

bool dims_zero(const DegreeDims& d) {
  return std::all_of(d.begin(), d.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<IVec> box_points(const Box& box) {
  std::vector<IVec> out;
  for (std::size_t i = 0; i < box.size(); ++i) out.push_back(box.point(i));
  return out;
}

/// Keeps only the coordinates selected by `mask`.
Subspace project(const Subspace& s, const std::vector<bool>& mask) {
  Matrix rows(0, s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector v(s.basis().row(i).begin(), s.basis().row(i).end());
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!mask[c]) v[c] = 0;
    rows.append_row(v);
  }
  return Subspace::span(s.field(), std::move(rows));
}

/// The diagonal block d_PP as a map on the whole chain space.
LinearMap diagonal_block(const MultifilteredComplex& c, const std::vector<bool>& mask) {
  Matrix m(c.size(), c.size());
  const Matrix& d = c.differential().images();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!mask[i]) continue;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (mask[j]) m.at(i, j) = d.at(i, j);
  }
  return LinearMap(c.field(), std::move(m));
}

std::vector<Vector> columns_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vector col(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
    out.push_back(std::move(col));
  }
  return out;
}

DegreeDims with_fault(DegreeDims dims, Fault fault) {
  if (fault == Fault::HomologyOffByOne && !dims.empty()) dims.begin()->second += 1;
  return dims;
}

std::string instance_json(std::initializer_list<std::pair<const char*, json>> fields,
                          const MultifilteredComplex* complex = nullptr) {
  json doc = json::object();
  for (const auto& [k, v] : fields) doc[k] = v;
  if (complex) doc["complex"] = complex->to_json();
  return doc.dump();
}

/// Seeds for independent trials drawn from one master seed.
std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, std::uint64_t salt, int count) {
  std::mt19937_64 master(seed ^ (salt * 0x9E3779B97F4A7C15ull));
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(master());
  return out;
}

std::uint32_t prime_for(const VerifyOptions& options, int trial) {
  if (options.primes.empty()) return 2;
  return options.primes[static_cast<std::size_t>(trial) % options.primes.size()];
}

}  // namespace

void SuiteResult::note(OracleReport report) {
  if (failures.size() < kStoredFailures) failures.push_back(std::move(report));
}

VerifyOptions VerifyOptions::scaled(std::uint64_t seed, int trials) {
  VerifyOptions o;
  o.seed = seed;
  o.trials = std::max(0, trials);
  o.classical_trials = o.trials == 0 ? 0 : std::max(1, o.trials / 2);
  o.dual_quads = 5 * o.trials;
  o.ses_chains = 2 * o.trials;
  return o;
}

std::string dims_string(const DegreeDims& dims) {
  std::string out = "{";
  for (const auto& [k, v] : dims) out += (out.size() > 1 ? "," : "") + std::to_string(k) + ":" + std::to_string(v);
  return out + "}";
}

std::vector<Word> admissible_words(int n, int max_length) {
  std::vector<Letter> alphabet;
  for (int j = 1; j <= n; ++j) alphabet.push_back(Letter::finite(j));
  for (int j = 1; j <= n; ++j) alphabet.push_back(Letter::saturate(j));
  alphabet.push_back(Letter::extend());

  std::vector<Word> out{Word(n)};
  std::vector<Word> frontier{Word(n)};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& letter : alphabet) {
        Word candidate = w.then(letter);
        if (is_admissible(candidate)) next.push_back(std::move(candidate));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<Word> plain_words(int n, int max_length) {
  std::vector<Word> out{Word(n)};
  std::vector<Word> frontier{Word(n)};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int j = 1; j <= n; ++j) next.push_back(w.then(Letter::finite(j)));
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

Downset downset_closure(const Box& box, const std::vector<IVec>& generators) {
  std::vector<bool> members(box.size(), false);
  for (std::size_t i = 0; i < box.size(); ++i) {
    IVec x = box.point(i);
    members[i] = std::any_of(generators.begin(), generators.end(), [&](const IVec& g) { return leq(x, g); });
  }
  return Downset(box, std::move(members), !generators.empty());
}

Downset random_downset(std::mt19937_64& rng, const Box& box, int points) {
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::vector<IVec> gens;
  for (int i = 0; i < points; ++i) gens.push_back(box.point(pick(rng)));
  return downset_closure(box, gens);
}

// ---------------------------------------------------------------------------
// Word calculus

namespace {

void check_word_geometry(SuiteResult& r, const Word& w) {
  const int n = w.n();
  const auto nn = static_cast<std::size_t>(n);
  const std::string label = word_label(w) + " (n=" + std::to_string(n) + ")";
  const std::set<IVec> b = b_region(w);
  const IMat t = t_matrix(w);
  const IVec u = u_vec(w);
  const IVec zero(nn, 0);

  std::set<IVec> bt;
  for (const auto& x : b) bt.insert(t.apply(x));

  // Path lemma: a monotone unit-step path from 0 to u inside [0, u].
  {
    std::vector<IVec> path(bt.begin(), bt.end());
    auto weight = [](const IVec& x) { return std::accumulate(x.begin(), x.end(), std::int64_t{0}); };
    std::sort(path.begin(), path.end(), [&](const IVec& x, const IVec& y) {
      return weight(x) != weight(y) ? weight(x) < weight(y) : x < y;
    });
    bool ok = path.front() == zero && path.back() == u &&
              static_cast<std::int64_t>(path.size()) == weight(u) + 1;
    for (const auto& x : path) ok = ok && leq(zero, x) && leq(x, u);
    for (std::size_t i = 1; ok && i < path.size(); ++i) {
      IVec step = path[i] - path[i - 1];
      ok = std::count(step.begin(), step.end(), 1) == 1 && std::count(step.begin(), step.end(), 0) == n - 1;
    }
    if (!r.tally(ok)) r.note({"path lemma", label, "monotone path 0 -> " + to_string(u), set_string(bt)});
  }

  // Symmetry: B^T = u - B^T.
  {
    std::set<IVec> mirrored;
    for (const auto& x : bt) mirrored.insert(u - x);
    if (!r.tally(mirrored == bt)) r.note({"symmetry", label, set_string(bt), set_string(mirrored)});
  }

  // Neighborhood lemma, both halves.
  {
    bool ok = true;
    std::string witness;
    for (const auto& x : bt) {
      for (std::size_t i = 0; i < nn; ++i) {
        const IVec col = t.column(i);
        const IVec down = x - col;
        const IVec up = x + col;
        if (!bt.count(down) && !leq(down, zero)) {
          ok = false;
          witness = to_string(x) + " - T e_" + std::to_string(i + 1);
        }
        if (!bt.count(up) && !leq(u, up)) {
          ok = false;
          witness = to_string(x) + " + T e_" + std::to_string(i + 1);
        }
      }
    }
    if (!r.tally(ok)) r.note({"neighborhood lemma", label, "every neighbor inside or beyond [0,u]", witness});
  }

  // Connectivity of B itself.
  if (!r.tally(comp0(b) == b)) r.note({"connectivity", label, set_string(b), set_string(comp0(b))});

  // Unimodularity of the delta basis.
  {
    const auto data = differential_data(w);
    const auto det = determinant(IMat::from_columns(data.delta));
    if (!r.tally(det == 1)) r.note({"delta unimodularity", label, "1", std::to_string(det)});
  }

  // Both equations of the lexicographic-downset lemma, for every j and every
  // slot order that puts j last.
  const auto data = differential_data(w);
  for (int j = 1; j <= n; ++j) {
    const IVec a = data.a[static_cast<std::size_t>(j - 1)];
    const Word wj = w.then(Letter::finite(j));
    const std::set<IVec> b_next = b_region(wj);
    std::vector<IVec> anchors(b.begin(), b.end());
    for (const auto& x : b) {
      anchors.push_back(x + a);
      anchors.push_back(x - a);
    }
    anchors.insert(anchors.end(), b_next.begin(), b_next.end());
    const Box box = Box::hull(anchors, nn).inflated(1);
    const auto points = box_points(box);

    std::vector<int> others;
    for (int i = 1; i <= n; ++i)
      if (i != j) others.push_back(i);
    do {
      SlotPermutation slots(nn);
      for (std::size_t s = 0; s < others.size(); ++s) slots[static_cast<std::size_t>(others[s] - 1)] = static_cast<int>(s);
      slots[static_cast<std::size_t>(j - 1)] = n - 1;

      const Downset strict_a = lex_downset(a, t, slots, box, true);
      const Downset weak_a = lex_downset(a, t, slots, box, false);
      const Downset strict_0 = lex_downset(zero, t, slots, box, true);
      std::set<IVec> first, second;
      for (const auto& x : points) {
        if (strict_0.contains(x)) continue;
        if (strict_a.contains(x)) first.insert(x);
        if (weak_a.contains(x)) second.insert(x);
      }
      const std::string where = label + ", j=" + std::to_string(j);
      const auto c1 = comp0(first);
      if (!r.tally(c1 == b)) r.note({"lex-downset equation 1", where, set_string(b), set_string(c1)});
      const auto c2 = comp0(second);
      if (!r.tally(c2 == b_next)) r.note({"lex-downset equation 2", where, set_string(b_next), set_string(c2)});
    } while (std::next_permutation(others.begin(), others.end()));
  }
}

}  // namespace

SuiteResult word_lemma_suite(int max_length_n2, int max_length_n3) {
  SuiteResult r;
  r.name = "word calculus lemmas";
  for (const auto& [n, len] : {std::pair{2, max_length_n2}, std::pair{3, max_length_n3}}) {
    for (const auto& w : plain_words(n, len)) {
      try {
        check_word_geometry(r, w);
      } catch (const std::exception& e) {
        r.tally(false);
        r.note({"word geometry", word_label(w), "no error", e.what()});
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exactly stated values

SuiteResult worked_values_suite() {
  SuiteResult r;
  r.name = "worked values";
  auto expect_eq = [&](const std::string& check, const std::string& expected, const std::string& actual) {
    if (!r.tally(expected == actual)) r.note({check, "", expected, actual});
  };
  auto trace_string = [](const std::vector<int>& t) {
    std::string s;
    for (int q : t) s += std::to_string(q);
    return s;
  };
  try {
    const Plan p1 = plan_word({3, 5}, 1);
    expect_eq("plan (3,5), j1=1", "12121^e2^e", p1.omega.to_string());
    expect_eq("row trace (3,5), j1=1", "2121", trace_string(p1.trace));
    const Plan p2 = plan_word({3, 5}, 2);
    expect_eq("plan (3,5), j1=2", "12112^e1^e", p2.omega.to_string());
    expect_eq("row trace (3,5), j1=2", "1121", trace_string(p2.trace));
    expect_eq("normal vector of 12121^e2^e", "(3,5)", to_string(normal_vector(Word::parse("12121^e2^e", 2))));
    expect_eq("normal vector of 12112^e1^e", "(3,5)", to_string(normal_vector(Word::parse("12112^e1^e", 2))));
    for (int k = 1; k <= 10; ++k) {
      expect_eq("Fibonacci form of T_(12)^" + std::to_string(k), matrix_string(fibonacci_matrix(k)),
                matrix_string(fibonacci_check(k)));
    }
    const IMat t10 = fibonacci_check(10);
    const double ratio = static_cast<double>(t10.at(1, 1)) / static_cast<double>(t10.at(1, 0));
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    if (!r.tally(std::abs(ratio - golden) < 1e-3)) {
      r.note({"golden ratio limit", "k=10", std::to_string(golden), std::to_string(ratio)});
    }
    const Word exemplary = Word::parse("123122^e133313^e111^e", 3);
    expect_eq("exemplary word admissible", "true", is_admissible(exemplary) ? "true" : "false");
    expect_eq("exemplary word final", "true", is_final(exemplary) ? "true" : "false");
  } catch (const std::exception& e) {
    r.tally(false);
    r.note({"worked values", "", "no error", e.what()});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Main theorem on random complexes

namespace {

struct TheoremContext {
  const MultifilteredComplex& c;
  const Engine& e;
  DegreeDims homology;
  std::uint64_t seed;
  SuiteResult& r;

  std::string instance(const Word& w, const IVec& point, int j = 0) const {
    return instance_json({{"seed", seed},
                          {"prime", c.field().characteristic()},
                          {"word", w.to_string()},
                          {"position", point},
                          {"j", j}},
                         &c);
  }
};

void check_first_page(TheoremContext& ctx, const IVec& point, std::mt19937_64& rng) {
  const auto& c = ctx.c;
  std::vector<bool> at_point(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) at_point[i] = c.generators()[i].position == point;
  const LinearMap block = diagonal_block(c, at_point);
  const Subspace cp = Subspace::coordinate(c.field(), at_point);
  const Subspace ker = intersect(cp, kernel(block));
  const Subspace im = image(block, cp);

  const PageTerm page = ctx.e.page(Word(c.n()), point);
  const Subquotient& s = page.realization.value;
  bool ok = project(s.numerator(), at_point) == ker && project(s.denominator(), at_point) == im;
  if (!ctx.r.tally(ok)) ctx.r.note({"first page projects to H(C_P)", ctx.instance(Word(c.n()), point), "", ""});

  // Another realization E^p_q with p \ q = {P}: P together with random points not above it.
  const Box box = c.working_box(point);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::vector<IVec> gens{point};
  for (int i = 0; i < 3; ++i) {
    IVec x = box.point(pick(rng));
    if (!leq(point, x)) gens.push_back(x);
  }
  const Downset p = downset_closure(box, gens);
  std::vector<bool> members(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) members[i] = p.contains(box.point(i)) && box.point(i) != point;
  const Downset q(box, std::move(members), true);
  const ETerm et = ctx.e.e_term(p, q);
  ok = project(et.value.numerator(), at_point) == ker && project(et.value.denominator(), at_point) == im &&
       ctx.e.dims(et.value) == page.dims;
  if (!ctx.r.tally(ok)) {
    ctx.r.note({"E^p_q with p\\q={P} matches", ctx.instance(Word(c.n()), point), dims_string(page.dims),
                dims_string(ctx.e.dims(et.value))});
  }
}

void check_differential(TheoremContext& ctx, const Word& w, const IVec& point, int j) {
  const auto& c = ctx.c;
  const PageDifferential pd = ctx.e.page_differential(w, point, j);
  const bool chain = multiply(pd.outgoing, pd.incoming, c.field()).is_zero();
  if (!ctx.r.tally(chain)) {
    ctx.r.note({"d∘d = 0", ctx.instance(w, point, j), "0", "nonzero"});
    return;
  }
  const Subquotient& mid = pd.middle.value;
  const Subspace kernel_lift = mid.lift_subspace(matrix_kernel(pd.outgoing, c.field()));
  const Subspace image_lift = mid.lift_subspace(columns_of(pd.incoming));
  const Subquotient homology(kernel_lift, image_lift);

  const StepQuads steps = step_quads(w, j, point, c.working_box(point));
  const STerm next = ctx.e.s_term(steps.next);
  if (!ctx.r.tally(kernel_lift == next.value.numerator())) {
    ctx.r.note({"kernel equals next numerator", ctx.instance(w, point, j), "", ""});
  }
  if (!ctx.r.tally(image_lift == next.value.denominator())) {
    ctx.r.note({"image equals next denominator", ctx.instance(w, point, j), "", ""});
  }
  const DegreeDims expected = ctx.e.page(w.then(Letter::finite(j)), point).dims;
  const DegreeDims actual = ctx.e.dims(homology);
  if (!ctx.r.tally(expected == actual)) {
    ctx.r.note({"homology equals next page", ctx.instance(w, point, j), dims_string(expected), dims_string(actual)});
  }
}

void check_saturation(TheoremContext& ctx, const Word& w, const IVec& point, int j) {
  const std::int64_t s = ctx.e.stabilization_index(w, point, j);
  const DegreeDims limit = ctx.e.saturate(w, point, j).dims;
  for (std::int64_t k = 0; k <= s + 1; ++k) {
    const DegreeDims stage = ctx.e.dims(ctx.e.finite_stage(w, point, j, k).value);
    if (!ctx.r.tally(dims_leq(limit, stage))) {
      ctx.r.note({"saturated page is no larger than stage " + std::to_string(k), ctx.instance(w, point, j),
                  dims_string(limit), dims_string(stage)});
    }
    if (k >= s && !ctx.r.tally(stage == limit)) {
      ctx.r.note({"stage " + std::to_string(k) + " past stabilization equals the saturated page",
                  ctx.instance(w, point, j), dims_string(limit), dims_string(stage)});
    }
  }
  const DegreeDims via_frame = ctx.e.dims(ctx.e.finite_stage(w, point, j, 1).value);
  const DegreeDims via_page = ctx.e.page(w.then(Letter::finite(j)), point).dims;
  if (!ctx.r.tally(via_frame == via_page)) {
    ctx.r.note({"first stage equals the next page", ctx.instance(w, point, j), dims_string(via_page),
                dims_string(via_frame)});
  }
}

void check_extension(TheoremContext& ctx, const Word& w, const IVec& point, int j) {
  const ExtensionReport rep = ctx.e.extension_filtration(w, point, j);
  const Word extended = w.then(Letter::saturate(j)).then(Letter::extend());
  const DegreeDims page_dims = ctx.e.page(extended, point).dims;
  bool ok = dims_zero(rep.filtration.front()) && rep.filtration.back() == rep.total && rep.total == page_dims &&
            rep.graded_pieces.size() + 1 == rep.filtration.size();
  if (!ctx.r.tally(ok)) {
    ctx.r.note({"filtration runs from 0 to the extended page", ctx.instance(extended, point, j),
                dims_string(page_dims), dims_string(rep.total)});
    return;
  }
  for (std::size_t i = 0; i < rep.graded_pieces.size(); ++i) {
    bool negative = false;
    const DegreeDims step = dims_difference(rep.filtration[i + 1], rep.filtration[i], negative);
    if (!ctx.r.tally(!negative && step == rep.graded_pieces[i])) {
      ctx.r.note({"graded piece " + std::to_string(rep.first_index + 1 + static_cast<std::int64_t>(i)),
                  ctx.instance(extended, point, j), dims_string(rep.graded_pieces[i]), dims_string(step)});
    }
  }
  if (is_final(extended) && !ctx.r.tally(page_dims == ctx.homology)) {
    ctx.r.note({"final page equals homology", ctx.instance(extended, point, j), dims_string(ctx.homology),
                dims_string(page_dims)});
  }
}

}  // namespace

SuiteResult main_theorem_suite(const VerifyOptions& options) {
  SuiteResult r;
  r.name = "main theorem";
  const auto words = admissible_words(2, options.max_word_length);
  const auto seeds = trial_seeds(options.seed, 3, options.trials);
  for (int t = 0; t < options.trials; ++t) {
    RandomComplexOptions ro;
    ro.n = 2;
    ro.lo = {0, 0};
    ro.hi = {3, 3};
    ro.max_per_cell = 2;
    ro.prime = prime_for(options, t);
    const auto seed = seeds[static_cast<std::size_t>(t)];
    const MultifilteredComplex c = random_complex(seed, ro);
    const Engine e(c);
    TheoremContext ctx{c, e, with_fault(homology_total(c), options.fault), seed, r};
    std::mt19937_64 rng(seed);
    const auto positions = box_points(c.support_box().joined(Box(ro.lo, ro.hi)).inflated(1));

    for (const auto& w : words) {
      for (const auto& point : positions) {
        try {
          if (w.empty()) check_first_page(ctx, point, rng);
          if (is_final(w)) {
            const DegreeDims d = e.page(w, point).dims;
            if (!r.tally(d == ctx.homology)) {
              r.note({"final page equals homology", ctx.instance(w, point), dims_string(ctx.homology),
                      dims_string(d)});
            }
            continue;
          }
          for (int j = 1; j <= 2; ++j) {
            if (is_admissible(w.then(Letter::finite(j)))) check_differential(ctx, w, point, j);
            if (is_admissible(w.then(Letter::saturate(j)))) check_saturation(ctx, w, point, j);
            if (is_admissible(w.then(Letter::saturate(j)).then(Letter::extend()))) check_extension(ctx, w, point, j);
          }
        } catch (const std::exception& ex) {
          r.tally(false);
          r.note({"main theorem evaluation", ctx.instance(w, point), "no error", ex.what()});
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Singly filtered complexes against the textbook spectral sequence

SuiteResult classical_suite(const VerifyOptions& options) {
  SuiteResult r;
  r.name = "classical n=1";
  const auto seeds = trial_seeds(options.seed, 4, options.classical_trials);
  for (int t = 0; t < options.classical_trials; ++t) {
    RandomComplexOptions ro;
    ro.n = 1;
    ro.lo = {0};
    ro.hi = {5};
    ro.max_per_cell = 2;
    ro.prime = prime_for(options, t);
    ro.graded = t % 4 != 3;
    const auto seed = seeds[static_cast<std::size_t>(t)];
    const MultifilteredComplex c = random_complex(seed, ro);
    const Engine e(c);
    const ClassicalSpectralSequence ss = classical_ss(c, 1);
    const DegreeDims homology = with_fault(homology_total(c), options.fault);
    const auto last = static_cast<std::int64_t>(ss.pages.size());
    for (std::int64_t r_page = 1; r_page <= last; ++r_page) {
      const Word w(1, std::vector<Letter>(static_cast<std::size_t>(r_page - 1), Letter::finite(1)));
      const Word sat = w.then(Letter::saturate(1));
      const Word fin = sat.then(Letter::extend());
      for (std::int64_t pos = ss.lo - 1; pos <= ss.hi + 1; ++pos) {
        auto inst = [&](const Word& word) {
          return instance_json({{"seed", seed}, {"word", word.to_string()}, {"position", IVec{pos}}}, &c);
        };
        try {
          const auto d = e.page(w, {pos}).dims;
          const auto expected = ss.page(r_page, pos);
          if (!r.tally(d == expected)) r.note({"E^r page", inst(w), dims_string(expected), dims_string(d)});
          const auto dinf = e.page(sat, {pos}).dims;
          const auto einf = ss.limit_term(pos);
          if (!r.tally(dinf == einf)) r.note({"E^inf page", inst(sat), dims_string(einf), dims_string(dinf)});
          const auto dfin = e.page(fin, {pos}).dims;
          if (!r.tally(dfin == homology)) r.note({"final page", inst(fin), dims_string(homology), dims_string(dfin)});
        } catch (const std::exception& ex) {
          r.tally(false);
          r.note({"classical evaluation", inst(w), "no error", ex.what()});
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// S-terms: closed form against the kernel/image construction

namespace {

MultifilteredComplex quad_complex(std::uint64_t seed, std::uint32_t prime) {
  RandomComplexOptions ro;
  ro.n = 2;
  ro.lo = {0, 0};
  ro.hi = {3, 3};
  ro.max_per_cell = 2;
  ro.prime = prime;
  return random_complex(seed, ro);
}

/// A chain of `length` nested random downsets, smallest first.
std::vector<Downset> random_chain(std::mt19937_64& rng, const Box& box, std::size_t length) {
  std::vector<Downset> chain{random_downset(rng, box, 1)};
  std::uniform_int_distribution<int> extra(0, 2);
  while (chain.size() < length) chain.push_back(chain.back().unite(random_downset(rng, box, extra(rng))));
  return chain;
}

}  // namespace

SuiteResult dual_s_term_suite(const VerifyOptions& options) {
  SuiteResult r;
  r.name = "dual S-term algorithms";
  constexpr int kPerComplex = 25;
  const int complexes = (options.dual_quads + kPerComplex - 1) / kPerComplex;
  const auto seeds = trial_seeds(options.seed, 5, complexes);
  int drawn = 0;
  for (int t = 0; t < complexes && drawn < options.dual_quads; ++t) {
    const auto seed = seeds[static_cast<std::size_t>(t)];
    const MultifilteredComplex c = quad_complex(seed, prime_for(options, t));
    const Engine e(c);
    const Box box = c.support_box().inflated(1);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kPerComplex && drawn < options.dual_quads; ++i, ++drawn) {
      auto chain = random_chain(rng, box, 4);
      const DownsetQuad quad{chain[3], chain[2], chain[1], chain[0]};
      try {
        const STerm closed = e.s_term(quad, STermAlgorithm::ClosedForm);
        const STerm maps = e.s_term(quad, STermAlgorithm::ViaMaps);
        if (!r.tally(closed.value == maps.value)) {
          r.note({"closed form equals kernel/image", instance_json({{"seed", seed}, {"quad", i}}, &c),
                  dims_string(e.dims(closed.value)), dims_string(e.dims(maps.value))});
        }
      } catch (const std::exception& ex) {
        r.tally(false);
        r.note({"S-term evaluation", instance_json({{"seed", seed}, {"quad", i}}, &c), "no error", ex.what()});
      }
    }
  }
  return r;
}

SuiteResult exact_sequence_suite(const VerifyOptions& options) {
  SuiteResult r;
  r.name = "extension short exact sequence";
  constexpr int kPerComplex = 20;
  const int complexes = (options.ses_chains + kPerComplex - 1) / kPerComplex;
  const auto seeds = trial_seeds(options.seed, 6, complexes);
  int drawn = 0;
  for (int t = 0; t < complexes && drawn < options.ses_chains; ++t) {
    const auto seed = seeds[static_cast<std::size_t>(t)];
    const MultifilteredComplex c = quad_complex(seed, prime_for(options, t));
    const Engine e(c);
    const Box box = c.support_box().inflated(1);
    const LinearMap id = LinearMap::identity(c.field(), c.size());
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kPerComplex && drawn < options.ses_chains; ++i, ++drawn) {
      auto ch = random_chain(rng, box, 5);  // z, p1, p2, p3, b
      const std::string inst = instance_json({{"seed", seed}, {"chain", i}}, &c);
      try {
        const STerm left = e.s_term({ch[4], ch[2], ch[1], ch[0]});
        const STerm middle = e.s_term({ch[4], ch[3], ch[1], ch[0]});
        const STerm right = e.s_term({ch[4], ch[3], ch[2], ch[0]});
        const Matrix f = induced_map(id, left.value, middle.value);
        const Matrix g = induced_map(id, middle.value, right.value);
        if (!r.tally(rank(f, c.field()) == left.value.dim())) r.note({"inclusion is injective", inst, "", ""});
        if (!r.tally(rank(g, c.field()) == right.value.dim())) r.note({"projection is surjective", inst, "", ""});
        if (!r.tally(multiply(g, f, c.field()).is_zero())) r.note({"composite vanishes", inst, "", ""});
        bool negative = false;
        const DegreeDims rest = dims_difference(e.dims(middle.value), e.dims(left.value), negative);
        if (!r.tally(!negative && rest == e.dims(right.value))) {
          r.note({"dimension additivity", inst, dims_string(e.dims(right.value)), dims_string(rest)});
        }
      } catch (const std::exception& ex) {
        r.tally(false);
        r.note({"exact sequence evaluation", inst, "no error", ex.what()});
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Planner

SuiteResult planner_suite(std::int64_t bound) {
  SuiteResult r;
  r.name = "planner round trip";
  for (std::int64_t x = 0; x <= bound; ++x) {
    for (std::int64_t y = 0; y <= bound; ++y) {
      if (std::gcd(x, y) != 1) continue;
      const IVec n{x, y};
      for (int j1 = 1; j1 <= 2; ++j1) {
        if (n == unit_vector(2, static_cast<std::size_t>(j1 - 1))) continue;
        const std::string inst = "N=" + to_string(n) + ", j1=" + std::to_string(j1);
        try {
          const Plan plan = plan_word(n, j1);
          if (!r.tally(normal_vector(plan.omega) == n)) {
            r.note({"normal vector round trip", inst, to_string(n), to_string(normal_vector(plan.omega))});
          }
          if (!r.tally(is_final(plan.omega) && normalize(plan.omega) == plan.omega)) {
            r.note({"plan is final and normalized", inst, "", plan.omega.to_string()});
          }
          const Word cf_tau = tau_from_continued_fraction(n, j1);
          if (!r.tally(cf_tau == plan.tau)) {
            r.note({"continued fraction agrees with row subtraction", inst, plan.tau.to_string(), cf_tau.to_string()});
          }
          for (std::int64_t k = 1; k <= 2; ++k) {
            const Plan family = plan_word(n, j1, k);
            Word expected_tau = plan.tau;
            for (std::int64_t i = 0; i < k; ++i) expected_tau = expected_tau.then(Letter::finite(j1));
            const bool ok = normal_vector(family.omega) == n && family.tau == expected_tau &&
                            normalize(family.omega) == plan.omega;
            if (!r.tally(ok)) r.note({"N' family member k=" + std::to_string(k), inst, expected_tau.to_string(),
                                      family.tau.to_string()});
          }
        } catch (const std::exception& ex) {
          r.tally(false);
          r.note({"planner evaluation", inst, "no error", ex.what()});
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  std::vector<SuiteResult> results{word_lemma_suite(), worked_values_suite(), planner_suite()};
  if (options.trials > 0) {
    results.push_back(main_theorem_suite(options));
    results.push_back(classical_suite(options));
    results.push_back(dual_s_term_suite(options));
    results.push_back(exact_sequence_suite(options));
  }
  return results;
}

nlohmann::ordered_json verification_summary(const std::vector<SuiteResult>& results) {
  json doc;
  bool all = true;
  auto suites = json::array();
  for (const auto& s : results) {
    json item;
    item["suite"] = s.name;
    item["checks"] = s.checks;
    item["failures"] = s.failure_count;
    item["passed"] = s.passed();
    if (!s.failures.empty()) {
      const auto& f = s.failures.front();
      item["first_failure"] = {{"check", f.check}, {"instance", f.instance}, {"expected", f.expected},
                               {"actual", f.actual}};
    }
    suites.push_back(std::move(item));
    all = all && s.passed();
  }
  doc["passed"] = all;
  doc["suites"] = std::move(suites);
  return doc;
}

}  // namespace hss
