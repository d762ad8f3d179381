#pragma once

#include <cstddef>
#include <vector>

#include "bintrans/integer.hpp"
#include "bintrans/rational.hpp"
#include "bintrans/sequence.hpp"

namespace bintrans {

/// Harmonic numbers H_0 = 0, H_n = H_{n-1} + 1/n, as a length-n prefix.
Sequence harmonic(std::size_t n);

/// Generalized harmonic numbers: partial sums of 1/k^r, term 0 is 0.
/// r = 1 reproduces harmonic().
Sequence generalized_harmonic(std::size_t n, unsigned r);

/// Skew-harmonic numbers: partial sums of (-1)^(k-1)/k, term 0 is 0.
Sequence skew_harmonic(std::size_t n);

/// Stirling numbers of the second kind S(p, n) for 0 <= n, p <= p_max,
/// built once from the recurrence S(p, n) = n S(p-1, n) + S(p-1, n-1) and
/// read-only afterwards (safe for shared concurrent reads).
/// S(p, n) = 0 when n > p; S(n, n) = 1.
class StirlingTable {
  public:
    explicit StirlingTable(unsigned p_max);

    unsigned p_max() const { return p_max_; }

    /// S(p, n); requires p <= p_max (n may be anything, values past p are 0).
    const Integer& at(unsigned p, unsigned n) const;

  private:
    unsigned p_max_;
    std::vector<std::vector<Integer>> rows_;  // rows_[p][n], n <= p
    Integer zero_;
};

/// Single Stirling-2 value as an (integer-valued) rational.
Rational stirling2(unsigned p, unsigned n);

/// Value of (x d/dx)^p applied to (1+x)^n, i.e.
/// sum_{j=0}^{min(p,n)} C(n,j) S(p,j) j! x^j (1+x)^(n-j).
/// This is the closed form of sum_k C(n,k) k^p x^k.
Rational stirling_expansion(unsigned p, unsigned long n, const Rational& x);

/// Fibonacci prefix F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
Sequence fibonacci(std::size_t n);

/// Lucas prefix L_0 = 2, L_1 = 1, same recurrence.
Sequence lucas(std::size_t n);

/// F_n at any integer index; negative n uses the backward recurrence
/// F_{n-2} = F_n - F_{n-1} (F_{-1} = 1, F_{-2} = -1, ...).
Rational fibonacci_at(long n);

/// L_n at any integer index, extended backward the same way.
Rational lucas_at(long n);

/// Power sums sigma_n(q) = 1^q + 2^q + ... + n^q, sigma_0(q) = 0.
Sequence power_sum(std::size_t n, unsigned q);

/// Multiple harmonic sums: term n is sum 1/(k_1 k_2 ... k_m) over weakly
/// increasing m-tuples 1 <= k_1 <= ... <= k_m <= n, term 0 is 0. Computed
/// by the O(m*n) recursion d(m, n) = sum_{k=1}^{n} d(m-1, k)/k, d(0, .) = 1;
/// m = 1 reproduces harmonic().
Sequence multiple_harmonic_sum(std::size_t n, unsigned m);

/// Laguerre polynomial values L_0(x) .. L_{n-1}(x) at exact rational x,
/// via the three-term recurrence
/// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}, L_0 = 1, L_1 = 1 - x.
Sequence laguerre(std::size_t n, const Rational& x);

/// Geometric terms x^k, with x^0 = 1.
Sequence geometric(std::size_t n, const Rational& x);

/// Index powers k^p, with 0^0 = 1.
Sequence index_powers(std::size_t n, unsigned p);

/// Binomial-coefficient column C(p, k) for k = 0 .. n-1 (0 past k = p).
Sequence binomial_column(std::size_t n, unsigned p);

}  // namespace bintrans
