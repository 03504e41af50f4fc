#pragma once

// Catalecticant matrices and Hilbert functions of the Artinian Gorenstein
// algebra A = S/Ann(F) presented by a dual generator F, the derived algebras
// cut out by powers of a linear form, mixed-Hessian ranks, and the exact
// multiplication-by-ell matrix on a monomial basis of A.

#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

#include "gjt/matrix.hpp"
#include "gjt/polynomial.hpp"

namespace gjt {

using HilbertFunction = std::vector<int>;

/// A non-zero homogeneous dual form of degree >= 1.  Its annihilator under
/// the differentiation action presents the algebra A = S/Ann(F).
class DualGenerator {
 public:
  explicit DualGenerator(Polynomial f) : f_(std::move(f)) {
    if (f_.is_zero()) throw std::invalid_argument("dual generator: zero polynomial");
    if (!f_.is_homogeneous())
      throw std::invalid_argument("dual generator: polynomial is not homogeneous");
    if (f_.ring() != Ring::Dual)
      throw std::invalid_argument("dual generator: expected a dual-ring polynomial");
    if (f_.degree() < 1)
      throw std::invalid_argument("dual generator: degree must be at least 1");
  }

  const Polynomial& polynomial() const { return f_; }
  int degree() const { return f_.degree(); }
  int num_vars() const { return f_.num_vars(); }

 private:
  Polynomial f_;
};

namespace detail {

inline Integer factorial_product(const Exponents& e) {
  Integer out = 1, f;
  for (int v : e) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
    out *= f;
  }
  return out;
}

/// (x^g) applied to f, contracted to a scalar.  Non-zero only when f has a
/// term with exponent g, in which case the value is coeff * prod(g_i!).
inline Rational scalar_pairing(const Polynomial& f, const Exponents& g) {
  const Rational c = f.coefficient(g);
  if (c == 0) return Rational(0);
  return c * Rational(factorial_product(g));
}

}  // namespace detail

/// Catalecticant matrix of a non-zero homogeneous dual form in degree j:
/// rows indexed by monomials of degree j, columns by degree deg(f)-j, entry
/// (u,v) the scalar (m_u m_v) applied to f.
inline RationalMatrix catalecticant(const Polynomial& f, int j) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("catalecticant: need a non-zero homogeneous form");
  const int d = f.degree();
  if (j < 0 || j > d) throw std::out_of_range("catalecticant: degree out of range");
  const auto rows = monomial_basis(f.num_vars(), j);
  const auto cols = monomial_basis(f.num_vars(), d - j);
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  Exponents g(static_cast<std::size_t>(f.num_vars()));
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (std::size_t v = 0; v < cols.size(); ++v) {
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = rows[u][i] + cols[v][i];
      m.at(static_cast<int>(u), static_cast<int>(v)) = detail::scalar_pairing(f, g);
    }
  return m;
}

inline RationalMatrix catalecticant(const DualGenerator& f, int j) {
  return catalecticant(f.polynomial(), j);
}

/// Hilbert function of S/Ann(f): h_j = rank of the j-th catalecticant.
/// Empty for the zero polynomial.  The result of a non-zero homogeneous f is
/// symmetric with 1 at both ends.
inline HilbertFunction hilbert_function(const Polynomial& f) {
  if (f.is_zero()) return {};
  const int d = f.degree();
  HilbertFunction h(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) h[static_cast<std::size_t>(j)] = rank(catalecticant(f, j));
  assert(h.front() == 1 && h.back() == 1);
#ifndef NDEBUG
  for (int j = 0; j <= d; ++j) assert(h[j] == h[d - j]);
#endif
  return h;
}

inline HilbertFunction hilbert_function(const DualGenerator& f) {
  return hilbert_function(f.polynomial());
}

inline long vector_space_dimension(const HilbertFunction& h) {
  long out = 0;
  for (int v : h) out += v;
  return out;
}

/// dim_K S/Ann(f); zero for the zero polynomial.
inline long algebra_dimension(const Polynomial& f) {
  return vector_space_dimension(hilbert_function(f));
}

/// ell^i applied to F, the dual generator of the derived algebra A^(i).
/// The zero polynomial signals A^(i) = 0.
inline Polynomial derived_dual_generator(const DualGenerator& f, const LinearForm& ell, int i) {
  if (ell.num_vars() != f.num_vars())
    throw std::invalid_argument("derived generator: variable count mismatch");
  return linear_power_derivative(ell, i, f.polynomial());
}

/// Least i with ell^i applied to F equal to zero; at most deg(F)+1.
inline int nilpotency_order(const DualGenerator& f, const LinearForm& ell) {
  Polynomial g = f.polynomial();
  const Polynomial op = ell.to_polynomial();
  int i = 0;
  while (!g.is_zero()) {
    g = apply_operator(op, g);
    ++i;
  }
  return i;
}

/// The dual generators of A^(0), A^(1), ... up to the first zero power,
/// computed incrementally.  chain[i] is non-zero for every stored entry.
inline std::vector<Polynomial> derived_chain(const DualGenerator& f, const LinearForm& ell) {
  std::vector<Polynomial> chain;
  Polynomial g = f.polynomial();
  const Polynomial op = ell.to_polynomial();
  while (!g.is_zero()) {
    chain.push_back(g);
    g = apply_operator(op, g);
  }
  return chain;
}

/// Rank of the pairing matrix with rows indexed by monomials of degree i,
/// columns by monomials of degree d-j, and entry (u,v) the scalar value of
/// (m_u m_v ell^(j-i)) applied to F.  Equals the rank of multiplication by
/// ell^(j-i) from A_i to A_j; full monomial spanning sets do not change it.
inline int mixed_hessian_rank(const DualGenerator& f, const LinearForm& ell, int i, int j) {
  const int d = f.degree();
  if (i < 0 || i > j || j > d)
    throw std::out_of_range("mixed hessian: need 0 <= i <= j <= degree");
  const int n = f.num_vars();
  const Polynomial power = ell.to_polynomial().pow(j - i);
  const auto rows = monomial_basis(n, i);
  const auto cols = monomial_basis(n, d - j);

  // (x^g * ell^(j-i)) applied to F, cached per combined exponent g.
  std::map<Exponents, Rational> cache;
  auto value = [&](const Exponents& g) -> const Rational& {
    auto it = cache.find(g);
    if (it == cache.end()) {
      const Polynomial op = Polynomial::monomial(g, 1, Ring::Operator) * power;
      const Polynomial r = apply_operator(op, f.polynomial());
      Rational v = r.is_zero() ? Rational(0)
                               : r.coefficient(Exponents(static_cast<std::size_t>(n), 0));
      it = cache.emplace(g, std::move(v)).first;
    }
    return it->second;
  };

  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  Exponents g(static_cast<std::size_t>(n));
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (std::size_t v = 0; v < cols.size(); ++v) {
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = rows[u][k] + cols[v][k];
      m.at(static_cast<int>(u), static_cast<int>(v)) = value(g);
    }
  return rank(m);
}

/// Monomial bases of A_0, ..., A_d: in each degree the pivot-row monomials
/// of the catalecticant, found by eliminating its transpose.  The degree-j
/// list has h_A(j) entries.
inline std::vector<std::vector<Exponents>> algebra_basis(const DualGenerator& f) {
  const int d = f.degree();
  std::vector<std::vector<Exponents>> bases(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    const auto rows = monomial_basis(f.num_vars(), j);
    const auto pivots = pivot_columns(catalecticant(f, j).transpose());
    for (int p : pivots) bases[static_cast<std::size_t>(j)].push_back(rows[static_cast<std::size_t>(p)]);
  }
  return bases;
}

/// The exact matrix of multiplication by ell on the concatenated monomial
/// basis of A (degrees 0..d in order).  Nilpotent; the image of a degree-j
/// basis monomial is expressed in the degree-(j+1) basis by solving the
/// corresponding catalecticant pairing system, which is always consistent.
inline RationalMatrix multiplication_matrix(const DualGenerator& f, const LinearForm& ell) {
  if (ell.num_vars() != f.num_vars())
    throw std::invalid_argument("multiplication matrix: variable count mismatch");
  const int n = f.num_vars(), d = f.degree();
  const auto bases = algebra_basis(f);

  std::vector<int> offset(static_cast<std::size_t>(d) + 2, 0);
  for (int j = 0; j <= d; ++j)
    offset[static_cast<std::size_t>(j) + 1] =
        offset[static_cast<std::size_t>(j)] + static_cast<int>(bases[static_cast<std::size_t>(j)].size());
  const int dim = offset[static_cast<std::size_t>(d) + 1];

  RationalMatrix big(dim, dim);
  if (ell.is_zero()) return big;

  const Polynomial& F = f.polynomial();
  Exponents g(static_cast<std::size_t>(n));
  auto pairing_row = [&](const Exponents& mono, const std::vector<Exponents>& duals) {
    std::vector<Rational> row(duals.size());
    for (std::size_t v = 0; v < duals.size(); ++v) {
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = mono[k] + duals[v][k];
      row[v] = detail::scalar_pairing(F, g);
    }
    return row;
  };

  for (int j = 0; j < d; ++j) {
    const auto& from = bases[static_cast<std::size_t>(j)];
    const auto& to = bases[static_cast<std::size_t>(j) + 1];
    if (from.empty() || to.empty()) continue;
    const auto duals = monomial_basis(n, d - j - 1);

    RationalMatrix system(static_cast<int>(duals.size()), static_cast<int>(to.size()));
    for (std::size_t q = 0; q < to.size(); ++q) {
      const auto col = pairing_row(to[q], duals);
      for (std::size_t p = 0; p < duals.size(); ++p)
        system.at(static_cast<int>(p), static_cast<int>(q)) = col[p];
    }

    for (std::size_t q0 = 0; q0 < from.size(); ++q0) {
      std::vector<Rational> rhs(duals.size(), Rational(0));
      for (int v = 0; v < n; ++v) {
        const Rational& cv = ell.coefficients()[static_cast<std::size_t>(v)];
        if (cv == 0) continue;
        Exponents shifted = from[q0];
        ++shifted[static_cast<std::size_t>(v)];
        const auto col = pairing_row(shifted, duals);
        for (std::size_t p = 0; p < duals.size(); ++p) rhs[p] += cv * col[p];
      }
      const auto coords = solve_exact(system, rhs);
      for (std::size_t q = 0; q < coords.size(); ++q)
        big.at(offset[static_cast<std::size_t>(j) + 1] + static_cast<int>(q),
               offset[static_cast<std::size_t>(j)] + static_cast<int>(q0)) = coords[q];
    }
  }
  return big;
}

}  // namespace gjt
