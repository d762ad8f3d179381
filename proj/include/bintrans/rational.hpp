#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bintrans/integer.hpp"

namespace bintrans {

/// Exact rational scalar: arbitrary-precision numerator over a positive
/// arbitrary-precision denominator, always kept in lowest terms (zero is
/// 0/1). Every operation is exact; division by zero throws
/// std::domain_error rather than producing a sentinel.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v)
    {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(const Integer& v)
    {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    /// Parses "n" or "n/d" with an optional leading sign and a positive
    /// decimal denominator. Throws std::invalid_argument otherwise.
    explicit Rational(std::string_view text);

    Rational(const Rational& other)
    {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }
    Rational(Rational&& other) noexcept
    {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }
    Rational& operator=(const Rational& other)
    {
        if (this != &other) {
            mpq_set(q_, other.q_);
        }
        return *this;
    }
    Rational& operator=(Rational&& other) noexcept
    {
        mpq_swap(q_, other.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    Rational& operator+=(const Rational& rhs)
    {
        mpq_add(q_, q_, rhs.q_);
        return *this;
    }
    Rational& operator-=(const Rational& rhs)
    {
        mpq_sub(q_, q_, rhs.q_);
        return *this;
    }
    Rational& operator*=(const Rational& rhs)
    {
        mpq_mul(q_, q_, rhs.q_);
        return *this;
    }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const
    {
        Rational r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = mpq_cmp(a.q_, b.q_);
        return c <=> 0;
    }
    friend bool operator==(const Rational& a, long b) { return mpq_cmp_si(a.q_, b, 1) == 0; }

    /// Integer power with the 0^0 = 1 convention. Negative exponents invert;
    /// raising zero to a negative power throws std::domain_error.
    Rational pow(long e) const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Integer numerator() const;
    Integer denominator() const;

    /// Integer value as a machine long; throws std::domain_error when the
    /// value is not an integer, std::overflow_error when it does not fit.
    long to_long() const;

    /// Canonical text form "p/q", with "/q" omitted when q == 1.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

  private:
    mpq_t q_;
};

}  // namespace bintrans
