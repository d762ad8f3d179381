#include "bintrans/rational.hpp"

#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace bintrans {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_init(q_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    if (den.sign() < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational::Rational(std::string_view text)
{
    std::string_view num = text;
    std::string_view den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }

    std::string_view digits = num;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        digits.remove_prefix(1);
    }
    const bool ok = all_digits(digits) && (den.data() == nullptr || all_digits(den));
    if (!ok) {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }

    const Integer n{num};
    if (den.data() == nullptr) {
        mpq_init(q_);
        mpq_set_z(q_, n.raw());
        return;
    }
    const Integer d{den};
    if (d.is_zero()) {
        throw std::invalid_argument("zero denominator in rational literal: '" +
                                    std::string(text) + "'");
    }
    mpq_init(q_);
    mpz_set(mpq_numref(q_), n.raw());
    mpz_set(mpq_denref(q_), d.raw());
    mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    mpq_div(q_, q_, rhs.q_);
    return *this;
}

Rational Rational::pow(long e) const
{
    if (e == 0) {
        return Rational{1};  // includes 0^0 = 1
    }
    if (is_zero()) {
        if (e < 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        return Rational{};
    }
    const auto mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), mag);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), mag);
    if (e < 0) {
        mpq_inv(r.q_, r.q_);
    }
    return r;  // powers of a canonical value stay canonical
}

Integer Rational::numerator() const
{
    Integer n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
}

Integer Rational::denominator() const
{
    Integer d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
}

long Rational::to_long() const
{
    if (!is_integer()) {
        throw std::domain_error("rational is not an integer: " + str());
    }
    if (!mpz_fits_slong_p(mpq_numref(q_))) {
        throw std::overflow_error("rational does not fit a machine long: " + str());
    }
    return mpz_get_si(mpq_numref(q_));
}

std::string Rational::str() const
{
    const std::unique_ptr<char, decltype(&std::free)> buf(mpq_get_str(nullptr, 10, q_),
                                                          &std::free);
    return std::string(buf.get());
}

std::ostream& operator<<(std::ostream& os, const Rational& v)
{
    return os << v.str();
}

}  // namespace bintrans
