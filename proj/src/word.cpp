#include "hss/word.hpp"

#include <algorithm>
#include <cctype>

#include "hss/error.hpp"

namespace hss {

Word::Word(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  if (n_ < 1) throw ValidationError("word dimension must be at least 1");
  for (const auto& l : letters_) {
    if (l.kind != Letter::Kind::Extend && (l.index < 1 || l.index > n_)) {
      throw ValidationError("letter index " + std::to_string(l.index) + " out of range for n=" +
                            std::to_string(n_));
    }
  }
}

Word Word::parse(std::string_view text, int n) {
  if (n < 1) throw ValidationError("word dimension must be at least 1");
  std::vector<Letter> letters;
  auto push_index = [&](std::int64_t value, bool saturate, std::size_t pos) {
    if (value < 1 || value > n) {
      throw ParseError("letter " + std::to_string(value) + " out of range for n=" + std::to_string(n), pos);
    }
    letters.push_back(saturate ? Letter::saturate(static_cast<int>(value))
                               : Letter::finite(static_cast<int>(value)));
  };

  if (n <= 9) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == 'e') {
        letters.push_back(Letter::extend());
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        bool sat = i + 1 < text.size() && text[i + 1] == '^';
        push_index(c - '0', sat, i);
        if (sat) ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in word", i);
      }
    }
    return Word(n, std::move(letters));
  }

  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t end = text.find('.', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    if (token == "e") {
      letters.push_back(Letter::extend());
    } else {
      bool sat = !token.empty() && token.back() == '^';
      auto digits = sat ? token.substr(0, token.size() - 1) : token;
      if (digits.empty() || digits.size() > 9 ||
          !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw ParseError("malformed token '" + std::string(token) + "'", start);
      }
      push_index(std::stoll(std::string(digits)), sat, start);
    }
    start = end + 1;
  }
  return Word(n, std::move(letters));
}

Word Word::then(Letter letter) const {
  auto letters = letters_;
  letters.push_back(letter);
  return Word(n_, std::move(letters));
}

Word Word::then(const Word& suffix) const {
  auto letters = letters_;
  letters.insert(letters.end(), suffix.letters_.begin(), suffix.letters_.end());
  return Word(n_, std::move(letters));
}

bool Word::is_plain() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.kind == Letter::Kind::Finite; });
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (n_ > 9 && i > 0) out += '.';
    if (l.kind == Letter::Kind::Extend) {
      out += 'e';
      continue;
    }
    out += std::to_string(l.index);
    if (l.kind == Letter::Kind::Saturate) out += '^';
  }
  return out;
}

// ---------------------------------------------------------------------------

AdmissibilityVerdict check_admissible(const Word& w) {
  std::vector<bool> saturated(static_cast<std::size_t>(w.n()) + 1, false);
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& l = letters[i];
    bool after_saturate = i > 0 && letters[i - 1].kind == Letter::Kind::Saturate;
    std::string where = " (letter " + std::to_string(i + 1) + ")";
    if (l.kind != Letter::Kind::Extend && saturated[static_cast<std::size_t>(l.index)]) {
      return {1, "condition 1: index " + std::to_string(l.index) + " reappears after " +
                     std::to_string(l.index) + "^inf" + where};
    }
    if (after_saturate && l.kind != Letter::Kind::Extend) {
      return {2, "condition 2: only e may follow a saturate letter" + where};
    }
    if (l.kind == Letter::Kind::Extend && !after_saturate) {
      return {3, "condition 3: e must directly follow a saturate letter" + where};
    }
    if (l.kind == Letter::Kind::Saturate) saturated[static_cast<std::size_t>(l.index)] = true;
  }
  return {};
}

bool is_admissible(const Word& w) { return static_cast<bool>(check_admissible(w)); }

void require_admissible(const Word& w) {
  auto verdict = check_admissible(w);
  if (!verdict) {
    throw InadmissibleWord("word '" + w.to_string() + "' is not admissible: " + verdict.message,
                           verdict.condition);
  }
}

SaturatedSets saturated_sets(const Word& w) {
  require_admissible(w);
  std::vector<bool> in_x(static_cast<std::size_t>(w.n()) + 1, false);
  const auto& letters = w.letters();
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].kind == Letter::Kind::Extend) in_x[static_cast<std::size_t>(letters[i - 1].index)] = true;
  }
  SaturatedSets out;
  for (int j = 1; j <= w.n(); ++j) (in_x[static_cast<std::size_t>(j)] ? out.saturated : out.unsaturated).push_back(j);
  return out;
}

bool is_final(const Word& w) { return saturated_sets(w).unsaturated.empty(); }

namespace {

/// Left-to-right evaluation of every inductively defined quantity.
struct WordFold {
  std::size_t n;
  std::vector<IVec> a;
  std::vector<IVec> delta;
  std::vector<bool> in_x;
  std::vector<IVec> lattice_generators;
  IMat t;
  IVec u;
  int pending_saturate = 0;

  explicit WordFold(std::size_t dim) : n(dim), in_x(dim, false), t(IMat::identity(dim)), u(dim, 0) {
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(unit_vector(n, i));
      delta.push_back(unit_vector(n, i));
    }
  }

  IMat step(std::size_t k) const {
    IMat m = IMat::identity(n);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k && !in_x[j]) m.at(k, j) = 1;
    return m;
  }

  void apply(const Letter& l) {
    switch (l.kind) {
      case Letter::Kind::Finite: {
        auto j = static_cast<std::size_t>(l.index - 1);
        IMat s = step(j);
        t = s * t;
        u = unit_vector(n, j) + s.apply(u);
        a[j] = a[j] + delta[j];
        for (std::size_t i = 0; i < n; ++i)
          if (i != j && !in_x[i]) delta[i] = delta[i] - delta[j];
        break;
      }
      case Letter::Kind::Saturate:
        pending_saturate = l.index;
        break;
      case Letter::Kind::Extend: {
        auto j = static_cast<std::size_t>(pending_saturate - 1);
        in_x[j] = true;
        lattice_generators.push_back(delta[j]);
        break;
      }
    }
  }
};

WordFold fold(const Word& w) {
  require_admissible(w);
  WordFold f(static_cast<std::size_t>(w.n()));
  for (const auto& l : w.letters()) f.apply(l);
  return f;
}

}  // namespace

DifferentialData differential_data(const Word& w) {
  auto f = fold(w);
  return {f.a, f.delta};
}

IMat t_matrix(const Word& w) { return fold(w).t; }

IMat step_matrix(const Word& w, int k) {
  if (k < 1 || k > w.n()) throw ValidationError("step index out of range");
  return fold(w).step(static_cast<std::size_t>(k - 1));
}

IVec u_vec(const Word& w) {
  auto f = fold(w);
  if (w.n() >= 2 && w.is_plain()) {
    IVec ones(f.n, 1);
    IVec numer = f.t.apply(ones) - ones;
    for (std::size_t i = 0; i < f.n; ++i) {
      if (numer[i] % (w.n() - 1) != 0 || numer[i] / (w.n() - 1) != f.u[i]) {
        throw InternalError("u_vec: recursion disagrees with (T*1 - 1)/(n-1) for '" + w.to_string() + "'");
      }
    }
  }
  return f.u;
}

std::vector<IVec> lattice(const Word& w) {
  auto f = fold(w);
  return hermite_normal_form(f.lattice_generators, f.n);
}

std::set<IVec> b_region(const Word& w, std::int64_t truncation) {
  require_admissible(w);
  if (truncation < 0) throw ValidationError("truncation must be nonnegative");
  const auto n = static_cast<std::size_t>(w.n());
  WordFold f(n);
  std::set<IVec> b{IVec(n, 0)};
  auto minkowski = [&b](const IVec& dir, std::int64_t lo, std::int64_t hi) {
    std::set<IVec> out;
    for (const auto& x : b)
      for (std::int64_t i = lo; i <= hi; ++i) out.insert(x + scaled(dir, i));
    b = std::move(out);
  };
  for (const auto& l : w.letters()) {
    switch (l.kind) {
      case Letter::Kind::Finite:
        minkowski(f.delta[static_cast<std::size_t>(l.index - 1)], 0, 1);
        break;
      case Letter::Kind::Saturate:
        minkowski(f.delta[static_cast<std::size_t>(l.index - 1)], 0, truncation);
        break;
      case Letter::Kind::Extend:
        minkowski(f.delta[static_cast<std::size_t>(f.pending_saturate - 1)], -truncation, 0);
        break;
    }
    f.apply(l);
  }
  return b;
}

Word normalize(const Word& w) {
  require_admissible(w);
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.kind == Letter::Kind::Saturate) {
      while (!out.empty() && out.back() == Letter::finite(l.index)) out.pop_back();
    }
    out.push_back(l);
  }
  return Word(w.n(), std::move(out));
}

}  // namespace hss
