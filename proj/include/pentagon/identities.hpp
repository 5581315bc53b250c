#pragma once

// Coefficientwise verification of the q-series identities around the
// pentagonal number theorem. Identities with denominators are cross-multiplied
// so that every check runs in the integer ring; bivariate checks size their
// working window from valuation bounds so the compared box is exact.

#include <cstddef>
#include <vector>

#include <pentagon/bi_series.hpp>
#include <pentagon/report.hpp>
#include <pentagon/series.hpp>

namespace pentagon {

/// prod (1 - x^m) against the signed pentagonal series, up to x^N.
IdentityReport check_pentagonal(std::size_t n);

/// prod (1 - x^m) = 1 - x - sum_{j>=2} x^j prod_{i<j} (1 - x^i).
IdentityReport check_lemma(std::size_t n);

/// prod (1 - x^m) = 1 + sum_{j>=1} (-1)^j x^{j(j+1)/2} / prod_{i<=j} (1 - x^i),
/// checked after multiplying both sides by prod_{i<=J} (1 - x^i) where J is
/// the last j whose triangular number fits in the truncation.
IdentityReport check_s_expansion(std::size_t n);

/// Right-hand side of the s-expansion expanded directly with series inverses.
IntSeries s_expansion_rhs(std::size_t n);

/// prod_{k>=1} (1 + m^k z) = sum_k m^{k(k+1)/2} z^k / (m;m)_k over m <= nm, z <= nz.
IdentityReport check_qbinomial_plus(std::size_t nm, std::size_t nz);

/// 1 / prod_{k>=1} (1 - m^k z) = sum_k m^k z^k / (m;m)_k over m <= nm, z <= nz.
IdentityReport check_qbinomial_inv(std::size_t nm, std::size_t nz);

/// Expansion of prod_{k<=nm} (1 + m^k z) as a bivariate series (m, z).
BiSeries qbinomial_plus_product(std::size_t nm, std::size_t nz);

/// B = C * prod_{odd m <= n} (1 - x^m), B the pentagonal series and C = B(x^2).
/// The letter states the ratio the other way up (C/B = odd product), which is false
/// already at x^1; check_goldbach_cb_as_written checks that form and reports the witness.
IdentityReport check_goldbach_cb(std::size_t n);
IdentityReport check_goldbach_cb_as_written(std::size_t n);

/// A(y^2) * prod_{k>=1} (1 - y^{2k-1}) = pentagonal series in y.
IdentityReport check_half_integer(std::size_t n);

/// Signed exponents (sign * exponent, exponent 0 reported as +0) of the
/// product A(y^2) * prod (1 - y^{2k-1}) up to y^n.
std::vector<std::pair<std::size_t, int>> half_integer_sign_pattern(std::size_t n);

/// Jacobi triple product in the (q, z) box q <= nq, z in [-2 z_max, 2 z_max].
/// Requires z_max >= 1.
IdentityReport check_jacobi_triple(std::size_t nq, std::size_t z_max);

/// prod (1 - x^{3m})(1 - x^{3m-1})(1 - x^{3m-2}) = sum_n (-1)^n x^{n(3n+1)/2}.
IdentityReport check_jtp_specialization(std::size_t n);

/// prod (1 - x^m)^3 = sum_{n>=0} (-1)^n (2n+1) x^{n(n+1)/2}.
IdentityReport check_cube(std::size_t n);

/// Right-hand side of the cube identity.
IntSeries cube_series(std::size_t n);

/// 1 - sum_{m>=1} (zq; q)_{m-1} z^{m+1} q^m
///   = 1 + sum_{n>=1} (-1)^n (z^{3n-1} q^{n(3n-1)/2} + z^{3n} q^{n(3n+1)/2})
/// over q <= nq, z <= nz, plus the z = 1 collapse onto the pentagonal series.
IdentityReport check_andrews(std::size_t nq, std::size_t nz);

/// Left-hand side of the bivariate identity above, z window [0, nz].
BiSeries andrews_lhs(std::size_t nq, std::size_t nz);

} // namespace pentagon
