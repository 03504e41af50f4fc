#pragma once

// Classification of rank matrices in three variables for linear forms with
// vanishing third power: admissible parameter triples, closed-form Hilbert
// function profiles, explicit monomial witness generators, and the
// small-parts Jordan type computed from at most three mixed-Hessian ranks.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gjt/apolarity.hpp"
#include "gjt/jordan.hpp"
#include "gjt/parallel.hpp"
#include "gjt/sequences.hpp"

namespace gjt {

/// Case analysis for the admissible (r,s,t) ranges: two clauses for even
/// socle degree, three for odd.
enum class Clause { Even1, Even2, Odd1, Odd2, Odd3 };

inline const char* clause_name(Clause c) {
  switch (c) {
    case Clause::Even1: return "even1";
    case Clause::Even2: return "even2";
    case Clause::Odd1: return "odd1";
    case Clause::Odd2: return "odd2";
    case Clause::Odd3: return "odd3";
  }
  return "?";
}

/// (r, s, t) are the middle values of the Hilbert functions of A^(2), A^(1)
/// and A for a pair (A, ell) with ell^2 != 0 and ell^3 = 0.
struct ParamTriple {
  int d = 0;
  int r = 0, s = 0, t = 0;
  Clause clause = Clause::Even1;

  friend bool operator==(const ParamTriple& a, const ParamTriple& b) {
    return a.d == b.d && a.r == b.r && a.s == b.s && a.t == b.t && a.clause == b.clause;
  }
};

/// Profile variant.  Triples with t = 3r in the generic clauses admit two
/// Hilbert functions for A, distinguished by the value in degree r:
///   A: h_A(r) = 3r-1, realized by the single-monomial witness;
///   B: h_A(r) = 3r,   realized by the two-monomial witness.
enum class Variant { Unique, A, B };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Unique: return "unique";
    case Variant::A: return "a";
    case Variant::B: return "b";
  }
  return "?";
}

/// The full Hilbert functions of A, A^(1), A^(2) determined by a parameter
/// triple (lengths d+1, d, d-1; each symmetric).
struct ClassifiedProfile {
  HilbertFunction h_a, h_a1, h_a2;
  Variant variant = Variant::Unique;
};

inline bool has_two_variants(const ParamTriple& p) {
  return (p.clause == Clause::Even1 || p.clause == Clause::Odd1) && p.t == 3 * p.r;
}

/// Every admissible (r,s,t) for socle degree d, ordered by (clause, r, s, t).
inline std::vector<ParamTriple> valid_parameters_l3(int d) {
  if (d < 2) throw std::invalid_argument("classification: socle degree must be >= 2");
  std::vector<ParamTriple> out;
  if (d % 2 == 0) {
    const int m = d / 2;
    if (d >= 4)
      for (int r = 1; r <= m - 1; ++r)
        for (int s = 2 * r; s <= m + r; ++s)
          for (int t = 2 * s - r; t <= m + s + 1; ++t)
            out.push_back({d, r, s, t, Clause::Even1});
    for (int t = 3 * m - 2; t <= 3 * m; ++t)
      out.push_back({d, m, d - 1, t, Clause::Even2});
  } else {
    const int m = (d - 1) / 2;
    if (d >= 5) {
      for (int r = 1; r <= m - 1; ++r)
        for (int s = 2 * r; s <= m + r; ++s)
          for (int t = 2 * s - r; t <= m + s + 1; ++t)
            out.push_back({d, r, s, t, Clause::Odd1});
      for (int r = 1; r <= m - 1; ++r)
        out.push_back({d, r, m + r + 1, d + r, Clause::Odd2});
    }
    for (int s = d - 1; s <= d; ++s)
      for (int t = m + s - 1; t <= 3 * m; ++t)
        out.push_back({d, m, s, t, Clause::Odd3});
  }
  return out;
}

namespace detail {

/// Length socle+1, values f(min(i, socle-i)); f need only be valid up to the
/// middle degree.
template <typename Fn>
HilbertFunction symmetric_profile(int socle, Fn&& f) {
  HilbertFunction h(static_cast<std::size_t>(socle) + 1);
  for (int i = 0; i <= socle; ++i) h[static_cast<std::size_t>(i)] = f(std::min(i, socle - i));
  return h;
}

inline Rational inverse_factorials(int a, int b) {
  Integer fa, fb;
  mpz_fac_ui(fa.get_mpz_t(), static_cast<unsigned long>(a));
  mpz_fac_ui(fb.get_mpz_t(), static_cast<unsigned long>(b));
  Rational r(Integer(1), fa * fb);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// The closed-form profiles for a parameter triple: one profile, or two
/// exactly when t = 3r in a generic clause (returned in variant order A, B).
inline std::vector<ClassifiedProfile> predicted_profile(const ParamTriple& p) {
  const int d = p.d, r = p.r, s = p.s, t = p.t;
  std::vector<ClassifiedProfile> out;

  const auto generic_h_a2 = [&](int i) { return std::min(i + 1, r); };
  const auto generic_h_a1 = [&](int i) {
    if (i < r) return 2 * i + 1;
    if (i <= s - r - 1) return i + r + 1;
    return s;
  };

  switch (p.clause) {
    case Clause::Even1:
    case Clause::Odd1: {
      const HilbertFunction h_a2 = detail::symmetric_profile(d - 2, generic_h_a2);
      const HilbertFunction h_a1 = detail::symmetric_profile(d - 1, generic_h_a1);
      if (has_two_variants(p)) {
        const auto dip = [&](int i) {
          if (i == 0) return 1;
          if (i < r) return 3 * i;
          if (i == r) return 3 * r - 1;
          return 3 * r;
        };
        const auto plateau = [&](int i) {
          if (i == 0) return 1;
          if (i < r) return 3 * i;
          return 3 * r;
        };
        out.push_back({detail::symmetric_profile(d, dip), h_a1, h_a2, Variant::A});
        out.push_back({detail::symmetric_profile(d, plateau), h_a1, h_a2, Variant::B});
      } else {
        const auto h_a = [&](int i) {
          if (i == 0) return 1;
          if (i <= r) return 3 * i;
          if (i <= s - r - 1) return 2 * i + r + 1;
          if (i == s - r && i <= t - s - 1) return s > 2 * r ? 2 * i + r + 1 : 2 * i + r;
          if (i <= t - s - 1) return i + s + 1;
          return t;
        };
        out.push_back({detail::symmetric_profile(d, h_a), h_a1, h_a2, Variant::Unique});
      }
      break;
    }
    case Clause::Even2: {
      const int m = d / 2;
      out.push_back({detail::symmetric_profile(d,
                                               [&](int i) {
                                                 if (i == 0) return 1;
                                                 return i < m ? 3 * i : t;
                                               }),
                     detail::symmetric_profile(d - 1, [](int i) { return 2 * i + 1; }),
                     detail::symmetric_profile(d - 2, [](int i) { return i + 1; }),
                     Variant::Unique});
      break;
    }
    case Clause::Odd2: {
      out.push_back({detail::symmetric_profile(d,
                                               [&](int i) {
                                                 if (i == 0) return 1;
                                                 return i <= r + 1 ? 3 * i : 2 * i + 1 + r;
                                               }),
                     detail::symmetric_profile(d - 1,
                                               [&](int i) {
                                                 return i <= r ? 2 * i + 1 : i + 1 + r;
                                               }),
                     detail::symmetric_profile(d - 2, generic_h_a2), Variant::Unique});
      break;
    }
    case Clause::Odd3: {
      const int m = (d - 1) / 2;
      out.push_back({detail::symmetric_profile(d,
                                               [&](int i) {
                                                 if (i == 0) return 1;
                                                 return i < m ? 3 * i : t;
                                               }),
                     detail::symmetric_profile(d - 1,
                                               [&](int i) {
                                                 return i < m ? 2 * i + 1 : s;
                                               }),
                     detail::symmetric_profile(d - 2, [&](int i) { return std::min(i + 1, m); }),
                     Variant::Unique});
      break;
    }
  }
  return out;
}

/// The explicit dual generator F = X^2 G_{d-2} + X G_{d-1} + G_d assembled
/// from single monomials in Y and Z whose factorial coefficients make the
/// catalecticant entries 0 or 1.
inline DualGenerator witness_generator(const ParamTriple& p, Variant variant = Variant::Unique) {
  if (has_two_variants(p)) {
    if (variant == Variant::Unique)
      throw std::invalid_argument("witness: triple with t = 3r needs an explicit variant");
  } else if (variant != Variant::Unique) {
    throw std::invalid_argument("witness: variant given for a uniquely determined triple");
  }
  const int d = p.d, r = p.r, s = p.s, t = p.t;
  Polynomial f(3, Ring::Dual);
  const auto add = [&](int xe, int ye, int ze) {
    f.add_term({xe, ye, ze}, detail::inverse_factorials(ye, ze));
  };

  switch (p.clause) {
    case Clause::Even1:
    case Clause::Odd1:
      add(2, r - 1, d - r - 1);
      if (has_two_variants(p)) {
        if (variant == Variant::B) add(0, r, d - r);
      } else {
        if (s > 2 * r) add(1, d - s + 2 * r, s - 2 * r - 1);
        if (t > 2 * s - r) add(0, d - t + 3 * r + 1, t - 3 * r - 1);
      }
      break;
    case Clause::Even2: {
      const int m = d / 2;
      add(2, m - 1, m - 1);
      if (t >= 3 * m - 1) add(0, d, 0);
      if (t == 3 * m) add(0, 0, d);
      break;
    }
    case Clause::Odd2: {
      // The middle-degree Hankel block of the degree-(d-1) part must reach
      // full rank, which pins the single coefficient at index m-r.
      const int m = (d - 1) / 2;
      add(2, r - 1, d - r - 1);
      add(1, m + r, m - r);
      break;
    }
    case Clause::Odd3: {
      const int m = (d - 1) / 2;
      add(2, m, m - 1);
      if (s == d) {
        add(1, 0, d - 1);
      } else if (t == 3 * m) {
        add(0, 0, d);
      }
      break;
    }
  }
  return DualGenerator(std::move(f));
}

/// Admissible (r, s) for linear forms with ell != 0 and ell^2 = 0.
struct ParamPair {
  int d = 0;
  int r = 0, s = 0;
  bool boundary = false;  // the r = ceil(d/2) clause

  friend bool operator==(const ParamPair& a, const ParamPair& b) {
    return a.d == b.d && a.r == b.r && a.s == b.s && a.boundary == b.boundary;
  }
};

/// Two-diagonal profile: the Hilbert functions of A and A^(1).
struct TwoLineProfile {
  HilbertFunction h_a, h_a1;
};

/// The generic upper bound for s is floor(d/2)+r+1, the full-rank case of
/// the middle-degree Hankel block; for odd d this coincides with the
/// staircase bound ceil(d/2)+r, for even d it exceeds it by one (the pair
/// (1,4) at d = 4 is realized by X Z^3 + Y^3 Z).
inline std::vector<ParamPair> valid_parameters_l2(int d) {
  if (d < 2) throw std::invalid_argument("classification: socle degree must be >= 2");
  std::vector<ParamPair> out;
  const int ceil_half = (d + 1) / 2;
  const int s_max_offset = d / 2 + 1;
  if (d >= 3)
    for (int r = 1; r <= ceil_half - 1; ++r)
      for (int s = 2 * r; s <= s_max_offset + r; ++s) out.push_back({d, r, s, false});
  if (d % 2 == 1) {
    out.push_back({d, ceil_half, d, true});
  } else {
    out.push_back({d, ceil_half, d, true});
    out.push_back({d, ceil_half, d + 1, true});
  }
  return out;
}

inline TwoLineProfile predicted_profile_l2(const ParamPair& p) {
  const int d = p.d, r = p.r, s = p.s;
  return {detail::symmetric_profile(d,
                                    [&](int i) {
                                      if (i < r) return 2 * i + 1;
                                      if (i <= s - r - 1) return i + r + 1;
                                      return s;
                                    }),
          detail::symmetric_profile(d - 1, [&](int i) { return std::min(i + 1, r); })};
}

/// Witness for a two-diagonal profile: F = X Y^(r-1) Z^(d-r) / ((r-1)!(d-r)!)
/// plus, when s exceeds 2r, the rank-lifting monomial
/// Y^(d-s+2r+1) Z^(s-2r-1) / ((d-s+2r+1)!(s-2r-1)!).
inline DualGenerator witness_generator_l2(const ParamPair& p) {
  const int d = p.d, r = p.r, s = p.s;
  Polynomial f(3, Ring::Dual);
  f.add_term({1, r - 1, d - r}, detail::inverse_factorials(r - 1, d - r));
  if (s > 2 * r)
    f.add_term({0, d - s + 2 * r + 1, s - 2 * r - 1},
               detail::inverse_factorials(d - s + 2 * r + 1, s - 2 * r - 1));
  return DualGenerator(std::move(f));
}

/// Jordan type for a linear form whose fourth power annihilates F, computed
/// from the classification: the nilpotency order picks the path, at most
/// three mixed-Hessian ranks pick the profiles, and the second difference of
/// the derived-algebra dimension vector gives the parts.
struct SmallPartReport {
  Partition partition;
  int nilpotency = 0;
  std::vector<int> parameters;  // (r,s,t), (r,s), (r) or empty by path
  Variant variant = Variant::Unique;
};

inline SmallPartReport small_part_jordan_type(const DualGenerator& f, const LinearForm& ell) {
  if (f.num_vars() != 3)
    throw std::invalid_argument("small-part jordan type: requires exactly three variables");
  const int d = f.degree();
  const int nil = nilpotency_order(f, ell);
  if (nil > 4)
    throw std::invalid_argument(
        "small-part jordan type: fourth power of the linear form does not annihilate F");

  SmallPartReport report;
  report.nilpotency = nil;
  const long dim_a = algebra_dimension(f.polynomial());

  if (nil <= 1) {
    report.partition = partition_from_dimension_vector({dim_a});
    return report;
  }

  const int mid = (d - 1) / 2;
  if (nil == 2) {
    const int r = mixed_hessian_rank(f, ell, mid, mid + 1);
    report.parameters = {r};
    const HilbertFunction h1 =
        detail::symmetric_profile(d - 1, [&](int i) { return std::min(i + 1, r); });
    report.partition =
        partition_from_dimension_vector({dim_a, vector_space_dimension(h1)});
    return report;
  }

  if (nil == 3) {
    // Two-diagonal parameters of the derived pair (A^(1), A^(2)) at socle d-1.
    const int r = mixed_hessian_rank(f, ell, mid, mid + 2);
    const int s = mixed_hessian_rank(f, ell, mid, mid + 1);
    report.parameters = {r, s};
    HilbertFunction h1, h2;
    if (d - 1 >= 2) {
      bool found = false;
      for (const auto& pair : valid_parameters_l2(d - 1)) {
        if (pair.r == r && pair.s == s) {
          const TwoLineProfile profile = predicted_profile_l2(pair);
          h1 = profile.h_a;
          h2 = profile.h_a1;
          found = true;
          break;
        }
      }
      if (!found)
        throw std::domain_error("small-part jordan type: parameters (" + std::to_string(r) +
                                "," + std::to_string(s) + ") not admissible at socle degree " +
                                std::to_string(d - 1));
    } else {
      h1 = {1, 1};
      h2 = {1};
    }
    report.partition = partition_from_dimension_vector(
        {dim_a, vector_space_dimension(h1), vector_space_dimension(h2)});
    return report;
  }

  // nil == 4: three-diagonal parameters of the derived algebra at socle d-1.
  const int i0 = d / 2 - 1;
  const int r = mixed_hessian_rank(f, ell, i0, i0 + 3);
  const int s = mixed_hessian_rank(f, ell, i0, i0 + 2);
  const int t = mixed_hessian_rank(f, ell, mid, mid + 1);
  report.parameters = {r, s, t};

  const ParamTriple* match = nullptr;
  const auto triples = valid_parameters_l3(d - 1);
  for (const auto& p : triples)
    if (p.r == r && p.s == s && p.t == t) {
      match = &p;
      break;
    }
  if (!match)
    throw std::domain_error("small-part jordan type: parameters (" + std::to_string(r) + "," +
                            std::to_string(s) + "," + std::to_string(t) +
                            ") not admissible at socle degree " + std::to_string(d - 1));

  auto profiles = predicted_profile(*match);
  const ClassifiedProfile* chosen = &profiles.front();
  if (has_two_variants(*match)) {
    // The selector rank is h of the first derived algebra in degree r, which
    // is exactly the value the two variants disagree on.
    const int selector = mixed_hessian_rank(f, ell, r, r + 1);
    report.variant = selector == 3 * r - 1 ? Variant::A : Variant::B;
    for (const auto& profile : profiles)
      if (profile.variant == report.variant) chosen = &profile;
  }
  report.partition = partition_from_dimension_vector(
      {dim_a, vector_space_dimension(chosen->h_a), vector_space_dimension(chosen->h_a1),
       vector_space_dimension(chosen->h_a2)});
  return report;
}

struct SweepReport {
  bool ok = true;
  long profiles_checked = 0;
  std::vector<std::string> failures;
};

/// Recompute every witness for socle degrees 2..max_degree and compare its
/// Hilbert function chain against the predicted profiles; also re-check the
/// necessary conditions on each predicted profile.
inline SweepReport verify_classification(int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("verification: max degree must be >= 2");

  struct Item {
    int d;
    std::optional<ParamTriple> triple;
    Variant variant = Variant::Unique;
    std::optional<ParamPair> pair;
  };
  std::vector<Item> items;
  for (int d = 2; d <= max_degree; ++d) {
    for (const auto& p : valid_parameters_l3(d)) {
      if (has_two_variants(p)) {
        items.push_back({d, p, Variant::A, std::nullopt});
        items.push_back({d, p, Variant::B, std::nullopt});
      } else {
        items.push_back({d, p, Variant::Unique, std::nullopt});
      }
    }
    for (const auto& p : valid_parameters_l2(d)) items.push_back({d, std::nullopt, Variant::Unique, p});
  }

  std::vector<std::vector<std::string>> failures(items.size());
  parallel_for(items.size(), [&](std::size_t idx) {
    const Item& item = items[idx];
    auto fail = [&](const std::string& what) { failures[idx].push_back(what); };
    const LinearForm x({Rational(1), Rational(0), Rational(0)});

    if (item.triple) {
      const ParamTriple& p = *item.triple;
      std::ostringstream tag;
      tag << "d=" << p.d << " clause=" << clause_name(p.clause) << " (r,s,t)=(" << p.r << ","
          << p.s << "," << p.t << ") variant=" << variant_name(item.variant);
      ClassifiedProfile expected;
      bool have_profile = false;
      for (const auto& profile : predicted_profile(p))
        if (profile.variant == item.variant) {
          expected = profile;
          have_profile = true;
        }
      if (!have_profile) {
        fail(tag.str() + ": no profile for variant");
        return;
      }

      const DualGenerator witness = witness_generator(p, item.variant);
      const auto chain = derived_chain(witness, x);
      if (chain.size() != 3) {
        fail(tag.str() + ": witness nilpotency is " + std::to_string(chain.size()) +
             ", expected 3");
        return;
      }
      if (hilbert_function(chain[0]) != expected.h_a) fail(tag.str() + ": h_A mismatch");
      if (hilbert_function(chain[1]) != expected.h_a1) fail(tag.str() + ": h_A1 mismatch");
      if (hilbert_function(chain[2]) != expected.h_a2) fail(tag.str() + ": h_A2 mismatch");

      TriangularIntMatrix predicted(p.d + 1);
      predicted.set_diagonal(0, expected.h_a);
      predicted.set_diagonal(1, expected.h_a1);
      predicted.set_diagonal(2, expected.h_a2);
      const auto conditions = check_rank_matrix_conditions(predicted);
      if (!conditions.passed) {
        for (const auto& violation : conditions.violations)
          fail(tag.str() + ": predicted profile violates condition (" + violation.condition +
               "): " + violation.detail);
      }
    } else {
      const ParamPair& p = *item.pair;
      std::ostringstream tag;
      tag << "d=" << p.d << " two-line (r,s)=(" << p.r << "," << p.s << ")";
      const TwoLineProfile expected = predicted_profile_l2(p);
      const DualGenerator witness = witness_generator_l2(p);
      const auto chain = derived_chain(witness, x);
      if (chain.size() != 2) {
        fail(tag.str() + ": witness nilpotency is " + std::to_string(chain.size()) +
             ", expected 2");
        return;
      }
      if (hilbert_function(chain[0]) != expected.h_a) fail(tag.str() + ": h_A mismatch");
      if (hilbert_function(chain[1]) != expected.h_a1) fail(tag.str() + ": h_A1 mismatch");

      TriangularIntMatrix predicted(p.d + 1);
      predicted.set_diagonal(0, expected.h_a);
      predicted.set_diagonal(1, expected.h_a1);
      const auto conditions = check_rank_matrix_conditions(predicted);
      if (!conditions.passed) {
        for (const auto& violation : conditions.violations)
          fail(tag.str() + ": predicted profile violates condition (" + violation.condition +
               "): " + violation.detail);
      }
    }
  });

  SweepReport report;
  report.profiles_checked = static_cast<long>(items.size());
  for (auto& f : failures)
    for (auto& msg : f) {
      report.failures.push_back(msg);
      report.ok = false;
    }
  return report;
}

}  // namespace gjt
