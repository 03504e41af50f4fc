#pragma once

// Experimental probe of the sufficiency direction: enumerate candidate
// matrices passing the three necessary conditions and try to realize each as
// the rank matrix of an actual pair (F, ell).  A candidate that resists the
// budget is reported as inconclusive, never as a counterexample.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gjt/classify3.hpp"
#include "gjt/jordan.hpp"
#include "gjt/parallel.hpp"
#include "gjt/sequences.hpp"
#include "gjt/serialization.hpp"

namespace gjt {

/// FNV-1a over the size and entries; stable across runs and platforms.
inline std::uint64_t candidate_hash_value(const TriangularIntMatrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(m.size()));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) mix(static_cast<std::uint64_t>(m.at(r, c)));
  return h;
}

inline std::string candidate_hash(const TriangularIntMatrix& m) {
  std::ostringstream os;
  os << std::hex << candidate_hash_value(m);
  return os.str();
}

/// All upper-triangular matrices of size d+1 passing the necessary
/// conditions whose diagonals are all symmetric (every genuine diagonal is
/// the Hilbert function of a Gorenstein algebra), with h(0) = 1 and
/// h(1) <= 3 on the main diagonal and entries capped by max_entry.
/// Diagonals are filled outward, pruning partial assignments; candidates
/// stream in lexicographic order of their concatenated diagonals.
inline void enumerate_candidates(int d, int max_entry,
                                 const std::function<void(const TriangularIntMatrix&)>& emit) {
  if (d < 1) throw std::invalid_argument("search: socle degree must be >= 1");
  if (max_entry < 1) throw std::invalid_argument("search: entry bound must be >= 1");
  const int size = d + 1;

  // Diagonal k has length size-k; diagonals[0] is h_A.
  std::vector<std::vector<int>> diagonals(static_cast<std::size_t>(size));

  const auto within_o_growth = [](const std::vector<int>& v, std::size_t upto) {
    // Prefix feasibility: growth bounds only look one step back.
    if (v[0] > 1) return false;
    for (std::size_t i = 0; i + 1 <= upto; ++i) {
      if (v[i] == 0 && v[i + 1] != 0) return false;
      if (i >= 1 && v[i + 1] > macaulay_growth_bound(v[i], static_cast<int>(i))) return false;
    }
    return true;
  };

  TriangularIntMatrix matrix(size);

  const std::function<void(int)> fill_diagonal = [&](int k) {
    if (k == size) {
      for (int kk = 0; kk < size; ++kk) matrix.set_diagonal(kk, diagonals[static_cast<std::size_t>(kk)]);
      if (check_rank_matrix_conditions(matrix).passed) emit(matrix);
      return;
    }
    const int len = size - k;
    auto& diag = diagonals[static_cast<std::size_t>(k)];
    diag.assign(static_cast<std::size_t>(len), 0);
    const auto& prev = diagonals[static_cast<std::size_t>(k) - 1];
    const auto* prev2 =
        k >= 2 ? &diagonals[static_cast<std::size_t>(k) - 2] : nullptr;

    const std::function<void(int)> fill_entry = [&](int i) {
      if (i == len) {
        // Full difference vector check for condition (ii) at level k-1.
        std::vector<int> diff(prev.size());
        diff[0] = prev[0];
        for (std::size_t p = 1; p < prev.size(); ++p) diff[p] = prev[p] - diag[p - 1];
        if (!is_o_sequence(diff).ok) return;
        fill_diagonal(k + 1);
        return;
      }
      int low = 0;
      // Condition (iii): prev2(i+1) + diag(i) >= prev(i) + prev(i+1).
      if (prev2 && i + 1 < static_cast<int>(prev.size()))
        low = std::max(low, prev[static_cast<std::size_t>(i)] +
                                prev[static_cast<std::size_t>(i) + 1] -
                                (*prev2)[static_cast<std::size_t>(i) + 1]);
      // Condition (ii) non-negativity: diag(i) <= prev(i+1).
      int high = std::min(max_entry, prev[static_cast<std::size_t>(i) + 1]);
      if (i == 0) high = std::min(high, 1);
      if (i >= (len + 1) / 2) {
        // Second half mirrors the first.
        const int forced = diag[static_cast<std::size_t>(len - 1 - i)];
        if (forced < low || forced > high) return;
        diag[static_cast<std::size_t>(i)] = forced;
        if (within_o_growth(diag, static_cast<std::size_t>(i))) fill_entry(i + 1);
        diag[static_cast<std::size_t>(i)] = 0;
        return;
      }
      for (int v = low; v <= high; ++v) {
        diag[static_cast<std::size_t>(i)] = v;
        if (!within_o_growth(diag, static_cast<std::size_t>(i))) continue;
        fill_entry(i + 1);
      }
      diag[static_cast<std::size_t>(i)] = 0;
    };

    fill_entry(0);
  };

  // Main diagonal: symmetric O-sequences with h(0)=1, h(1) <= 3.
  auto& main = diagonals[0];
  main.assign(static_cast<std::size_t>(size), 0);
  const std::function<void(int)> fill_main = [&](int i) {
    const int half = size / 2;
    if (i == (size + 1) / 2) {
      for (int p = 0; p < half; ++p) main[static_cast<std::size_t>(size - 1 - p)] = main[static_cast<std::size_t>(p)];
      if (!is_o_sequence(main).ok) return;
      fill_diagonal(1);
      return;
    }
    int high = max_entry;
    if (i == 0) high = 1;
    if (i == 1) high = std::min(high, 3);
    // A zero inside h_A would truncate the socle, so entries start at 1.
    for (int v = 1; v <= high; ++v) {
      main[static_cast<std::size_t>(i)] = v;
      if (!within_o_growth(main, static_cast<std::size_t>(i))) continue;
      fill_main(i + 1);
    }
  };
  fill_main(0);
}

inline std::vector<TriangularIntMatrix> enumerate_candidates(int d, int max_entry) {
  std::vector<TriangularIntMatrix> out;
  enumerate_candidates(d, max_entry, [&](const TriangularIntMatrix& m) { out.push_back(m); });
  return out;
}

enum class SearchStatus { Realized, Unrealized };

struct SearchVerdict {
  TriangularIntMatrix candidate{1};
  SearchStatus status = SearchStatus::Unrealized;
  std::optional<Polynomial> witness;
  std::optional<LinearForm> witness_linear;
  long attempts = 0;
  std::uint64_t seed = 0;
  std::string note;
};

namespace detail {

/// Deterministic small-integer draw; avoids distribution objects so byte
/// streams do not depend on the standard library implementation.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline int count_non_zero_diagonals(const TriangularIntMatrix& m) {
  int count = 0;
  for (int k = 0; k < m.size(); ++k) {
    const auto diag = m.diagonal(k);
    for (int v : diag)
      if (v != 0) {
        ++count;
        break;
      }
  }
  return count;
}

/// Random homogeneous form of degree d in Y,Z plus X up to x_cap, with
/// integer coefficients in [-9,9].
inline Polynomial random_capped_form(std::mt19937_64& rng, int d, int x_cap, int terms) {
  Polynomial f(3, Ring::Dual);
  const auto monomials = monomial_basis(3, d);
  std::vector<Exponents> allowed;
  for (const auto& e : monomials)
    if (e[0] <= x_cap) allowed.push_back(e);
  for (int t = 0; t < terms && !allowed.empty(); ++t) {
    const auto& e = allowed[static_cast<std::size_t>(draw(rng, 0, static_cast<long>(allowed.size()) - 1))];
    long c = draw(rng, -9, 9);
    if (c == 0) c = 1;
    f.add_term(e, Rational(c));
  }
  return f;
}

/// d-th powers of small-coefficient linear forms; used to hit prescribed
/// Hilbert functions when the linear form acts as zero.
inline Polynomial random_power_sum(std::mt19937_64& rng, int d, int summands, int num_directions) {
  Polynomial f(3, Ring::Dual);
  for (int k = 0; k < summands; ++k) {
    Polynomial linear(3, Ring::Dual);
    for (int v = 0; v < num_directions; ++v) {
      long c = draw(rng, -3, 3);
      if (v == k % num_directions && c == 0) c = 1;
      if (c != 0) {
        Exponents e{0, 0, 0};
        e[static_cast<std::size_t>(v)] = 1;
        linear.add_term(e, Rational(c));
      }
    }
    if (linear.is_zero()) linear.add_term({0, 1, 0}, Rational(1));
    f += linear.pow(d);
  }
  return f;
}

}  // namespace detail

/// Try to realize a candidate as rank_matrix(F, ell): first the
/// classification witnesses when at most three diagonals are non-zero, then
/// structured monomial generators, then pseudorandom forms with the right
/// nilpotency forced by capping the X-degree.  Deterministic given the seed.
inline SearchVerdict attempt_realization(const TriangularIntMatrix& candidate, long budget,
                                         std::uint64_t seed) {
  SearchVerdict verdict;
  verdict.candidate = candidate;
  verdict.seed = seed;

  const auto conditions = check_rank_matrix_conditions(candidate);
  if (!conditions.passed) {
    verdict.note = "not attempted: candidate fails condition (" +
                   conditions.violations.front().condition + ")";
    return verdict;
  }

  const int d = candidate.size() - 1;
  const int lines = detail::count_non_zero_diagonals(candidate);
  const LinearForm x({Rational(1), Rational(0), Rational(0)});
  const LinearForm zero = LinearForm::zero(3);
  const bool use_zero_form = lines <= 1;
  const LinearForm& ell = use_zero_form ? zero : x;

  const auto matches = [&](const DualGenerator& f) {
    return rank_matrix(f, ell) == candidate;
  };
  const auto record = [&](const DualGenerator& f) {
    verdict.status = SearchStatus::Realized;
    verdict.witness = f.polynomial();
    verdict.witness_linear = ell;
  };

  // (a) classification-backed witnesses.
  if (d >= 2 && lines == 3) {
    const auto d0 = candidate.diagonal(0), d1 = candidate.diagonal(1), d2 = candidate.diagonal(2);
    for (const auto& p : valid_parameters_l3(d)) {
      for (const auto& profile : predicted_profile(p)) {
        if (profile.h_a != d0 || profile.h_a1 != d1 || profile.h_a2 != d2) continue;
        ++verdict.attempts;
        const DualGenerator f = witness_generator(p, profile.variant);
        if (matches(f)) {
          record(f);
          verdict.note = "classification witness";
          return verdict;
        }
      }
    }
  }
  if (d >= 2 && lines == 2) {
    const auto d0 = candidate.diagonal(0), d1 = candidate.diagonal(1);
    for (const auto& p : valid_parameters_l2(d)) {
      const auto profile = predicted_profile_l2(p);
      if (profile.h_a != d0 || profile.h_a1 != d1) continue;
      ++verdict.attempts;
      const DualGenerator f = witness_generator_l2(p);
      if (matches(f)) {
        record(f);
        verdict.note = "classification witness";
        return verdict;
      }
    }
  }

  std::mt19937_64 rng(seed ^ candidate_hash_value(candidate));
  const int x_cap = lines - 1;

  // (b) structured generators.
  if (use_zero_form) {
    // Sums of d-th powers of random linear forms in h(1) directions reach
    // the generic Hilbert functions level by level; the summand count
    // cycles so every target dimension is attempted repeatedly.
    const int directions = candidate.at(1, 1);
    for (long tries = 0; tries < budget && verdict.attempts < budget; ++tries) {
      const int summands = 1 + static_cast<int>(tries % (3 * (d + 1)));
      const Polynomial f = detail::random_power_sum(rng, d, summands, std::max(1, directions));
      if (f.is_zero() || !f.is_homogeneous()) continue;
      ++verdict.attempts;
      const DualGenerator gen{f};
      if (matches(gen)) {
        record(gen);
        verdict.note = "power-sum generator";
        return verdict;
      }
    }
    verdict.note = "unrealized after budget";
    return verdict;
  }

  // (b) structured monomial generators: unit-coefficient supports drawn from
  // the degree-d monomials with the X-exponent capped, by increasing support
  // size in deterministic order.  Each support must contain a top X-power or
  // the nilpotency drops below the candidate's diagonal count.
  {
    const auto pool = [&] {
      std::vector<Exponents> out;
      for (const auto& e : monomial_basis(3, d))
        if (e[0] <= x_cap) out.push_back(e);
      return out;
    }();
    const long structured_budget = std::min(budget, budget / 2 + 1);
    bool done = false;
    const auto try_support = [&](const std::vector<std::size_t>& support) {
      bool has_top = false;
      for (std::size_t k : support) has_top |= pool[k][0] == x_cap;
      if (!has_top) return;
      Polynomial f(3, Ring::Dual);
      for (std::size_t k : support) f.add_term(pool[k], Rational(1));
      ++verdict.attempts;
      const DualGenerator gen{f};
      if (matches(gen)) {
        record(gen);
        verdict.note = "structured monomial generator";
        done = true;
      }
    };
    const std::size_t n = pool.size();
    for (std::size_t a = 0; a < n && !done && verdict.attempts < structured_budget; ++a)
      try_support({a});
    for (std::size_t a = 0; a < n && !done && verdict.attempts < structured_budget; ++a)
      for (std::size_t b = a + 1; b < n && !done && verdict.attempts < structured_budget; ++b)
        try_support({a, b});
    for (std::size_t a = 0; a < n && !done && verdict.attempts < structured_budget; ++a)
      for (std::size_t b = a + 1; b < n && !done && verdict.attempts < structured_budget; ++b)
        for (std::size_t c = b + 1; c < n && !done && verdict.attempts < structured_budget; ++c)
          try_support({a, b, c});
    if (done) return verdict;
  }

  // (c) pseudorandom capped forms.
  while (verdict.attempts < budget) {
    const int terms = static_cast<int>(detail::draw(rng, 2, 8));
    Polynomial f = detail::random_capped_form(rng, d, x_cap, terms);
    // The top X-power must be present or the nilpotency drops.
    bool has_top = false;
    for (const auto& [e, c] : f.terms())
      if (e[0] == x_cap) has_top = true;
    if (!has_top) {
      const auto tail = monomial_basis(2, d - x_cap);
      const auto& yz = tail[static_cast<std::size_t>(detail::draw(
          rng, 0, static_cast<long>(tail.size()) - 1))];
      f.add_term({x_cap, yz[0], yz[1]}, Rational(1));
    }
    if (f.is_zero()) continue;
    ++verdict.attempts;
    const DualGenerator gen{f};
    if (matches(gen)) {
      record(gen);
      verdict.note = "random generator";
      return verdict;
    }
  }
  verdict.note = "unrealized after budget";
  return verdict;
}

inline json to_json(const SearchVerdict& v) {
  json out{{"candidate", to_json(v.candidate)},
           {"hash", candidate_hash(v.candidate)},
           {"status", v.status == SearchStatus::Realized ? "realized" : "unrealized"},
           {"attempts", v.attempts},
           {"seed", v.seed},
           {"note", v.note}};
  if (v.witness) out["witness_poly"] = v.witness->to_string();
  if (v.witness_linear) out["witness_linear"] = v.witness_linear->to_string();
  return out;
}

struct SearchSummary {
  long candidates = 0;
  long realized = 0;
  long unrealized = 0;
  std::vector<std::string> resistant_hashes;
};

/// Run the search over all candidates for socle degree d.  Verdicts are
/// computed in parallel but appended to the log in enumeration order, so a
/// fixed (seed, budget) pair reproduces the log byte for byte.  Hashes in
/// skip are not re-attempted (resume support).
inline SearchSummary run_search(int d, int max_entry, long budget, std::uint64_t seed,
                                const std::function<void(const SearchVerdict&)>& sink,
                                const std::vector<std::string>& skip = {}) {
  const auto candidates = enumerate_candidates(d, max_entry);
  std::vector<std::optional<SearchVerdict>> verdicts(candidates.size());

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::string h = candidate_hash(candidates[i]);
    bool skipped = false;
    for (const auto& s : skip)
      if (s == h) {
        skipped = true;
        break;
      }
    if (!skipped) todo.push_back(i);
  }

  parallel_for(todo.size(), [&](std::size_t k) {
    const std::size_t i = todo[k];
    verdicts[i] = attempt_realization(candidates[i], budget, seed);
  });

  SearchSummary summary;
  summary.candidates = static_cast<long>(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!verdicts[i]) continue;
    const SearchVerdict& v = *verdicts[i];
    if (v.status == SearchStatus::Realized) {
      ++summary.realized;
    } else {
      ++summary.unrealized;
      summary.resistant_hashes.push_back(candidate_hash(v.candidate));
    }
    sink(v);
  }
  return summary;
}

}  // namespace gjt
