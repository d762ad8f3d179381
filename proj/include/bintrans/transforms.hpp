#pragma once

#include <cstddef>
#include <vector>

#include "bintrans/integer.hpp"
#include "bintrans/rational.hpp"
#include "bintrans/sequence.hpp"

namespace bintrans {

/// C(n, k), exactly; 0 when k > n. Computed by the multiplicative formula,
/// O(k) big-integer operations per query.
Rational binomial(unsigned long n, unsigned long k);

/// The full row C(n, 0) .. C(n, n).
std::vector<Integer> binomial_row(unsigned long n);

/// (-1)^(k-1): +1 for odd k, -1 for even k.
inline int alternating_sign(unsigned long k)
{
    return k % 2 == 1 ? 1 : -1;
}

/// Signed binomial transform b_n = sum_{k=0}^{n} C(n,k) (-1)^(k-1) a_k.
/// Self-inverse: applying it twice reproduces the input exactly.
/// Requires a.valid_from == 0 (throws std::domain_error otherwise).
Sequence binomial_transform(const Sequence& a);

/// b_n = sum_{k=0}^{n} C(n,k) a_k, without the alternating factor.
Sequence unsigned_binomial_transform(const Sequence& a);

/// a_n = sum_{k=0}^{n} C(n,k) (-1)^(n-k) b_k; round-trips with
/// unsigned_binomial_transform.
Sequence inverse_unsigned_binomial_transform(const Sequence& b);

/// Backward difference: result_n = s_n - s_{n-1}. The entry at
/// s.valid_from has no predecessor, so the result's valid_from moves up
/// by one; throws std::domain_error when that leaves no defined entry.
Sequence backward_difference(const Sequence& s);

/// result_n = n * (s_n - s_{n-1}).
Sequence n_nabla(const Sequence& s);

/// p-fold composition of n_nabla, p >= 1. The result is defined from
/// max(s.valid_from + p, p).
Sequence n_nabla_pow(const Sequence& s, unsigned p);

/// Polynomial g(t) = sum_j coefficient(j) * t^j in the operator t = n*nabla.
/// The degree is not canonicalized: trailing zero coefficients are kept and
/// do not tighten the validity range beyond the highest nonzero one.
class OperatorPolynomial {
  public:
    explicit OperatorPolynomial(std::vector<Rational> coefficients);
    OperatorPolynomial(std::initializer_list<Rational> coefficients)
        : OperatorPolynomial(std::vector<Rational>(coefficients))
    {
    }

    std::size_t coefficient_count() const { return coefficients_.size(); }
    const Rational& coefficient(std::size_t j) const { return coefficients_[j]; }

    /// Highest j with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t degree_bound() const;

  private:
    std::vector<Rational> coefficients_;
};

/// g(n nabla) applied to s: sum_j g_j (n nabla)^j s, where (n nabla)^0 is
/// the identity operator. The result is defined from
/// s.valid_from + g.degree_bound().
Sequence apply_operator_polynomial(const OperatorPolynomial& g, const Sequence& s);

/// result_k = k^p * a_k, with 0^0 = 1; valid_from is preserved.
Sequence multiply_by_index_pow(const Sequence& a, unsigned p);

/// result_n = (n + lambda) * b_n - n * b_{n-1}; equals n_nabla at
/// lambda = 0. Defined from b.valid_from + 1.
Sequence shifted_transform_rhs(const Sequence& b, const Rational& lambda);

/// Weighted partial sums undoing multiplication by (k + lambda) on the
/// source side:
///   result_n = n! * sum_{m=1}^{n} b_m / (m! (lambda+m)(lambda+m+1)...(lambda+n)),
/// with result_0 = 0. At lambda = 0 this reduces to sum_{m=1}^{n} b_m / m.
///
/// Requires b_0 = 0 (checked when index 0 is defined) and b.valid_from <= 1.
/// lambda must avoid {-1, ..., -n}; the check runs per evaluated index, and
/// the thrown std::domain_error names the first offending n, so shorter
/// inputs still work with a lambda that is only forbidden further out.
Sequence divided_transform(const Sequence& b, const Rational& lambda);

/// Running average: result_n = (b_0 + ... + b_n) / (n + 1). Equals the
/// signed transform of {a_k / (k+1)} when b is the signed transform of a,
/// with no restriction on a_0. Requires b.valid_from == 0.
Sequence average_transform(const Sequence& b);

}  // namespace bintrans
