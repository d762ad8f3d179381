#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bintrans {

/// Arbitrary-precision signed integer. A thin value-semantic wrapper over
/// GMP's mpz_t; copyable, movable, and safe to share across threads once
/// constructed (all operations on const objects are reads).
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }

    /// Parses an optionally signed decimal literal. Throws
    /// std::invalid_argument on anything else.
    explicit Integer(std::string_view text);

    Integer(const Integer& other) { mpz_init_set(z_, other.z_); }
    Integer(Integer&& other) noexcept
    {
        mpz_init(z_);
        mpz_swap(z_, other.z_);
    }
    Integer& operator=(const Integer& other)
    {
        if (this != &other) {
            mpz_set(z_, other.z_);
        }
        return *this;
    }
    Integer& operator=(Integer&& other) noexcept
    {
        mpz_swap(z_, other.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    Integer& operator+=(const Integer& rhs)
    {
        mpz_add(z_, z_, rhs.z_);
        return *this;
    }
    Integer& operator-=(const Integer& rhs)
    {
        mpz_sub(z_, z_, rhs.z_);
        return *this;
    }
    Integer& operator*=(const Integer& rhs)
    {
        mpz_mul(z_, z_, rhs.z_);
        return *this;
    }
    Integer& operator*=(long rhs)
    {
        mpz_mul_si(z_, z_, rhs);
        return *this;
    }

    /// Quotient when the division is known to be exact (no remainder).
    /// The binomial-row construction relies on this.
    Integer& divide_exact(const Integer& divisor);

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
    Integer operator-() const
    {
        Integer r(*this);
        mpz_neg(r.z_, r.z_);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b)
    {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b)
    {
        const int c = mpz_cmp(a.z_, b.z_);
        return c <=> 0;
    }
    friend bool operator==(const Integer& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }

    /// n! for n >= 0.
    static Integer factorial(unsigned long n)
    {
        Integer r;
        mpz_fac_ui(r.z_, n);
        return r;
    }

    static Integer pow(const Integer& base, unsigned long e)
    {
        Integer r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }

    /// Throws std::overflow_error when the value does not fit a long.
    long to_long() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

    /// Access to the underlying GMP value (used by Rational).
    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    mpz_t z_;
};

}  // namespace bintrans
