#include "bintrans/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace bintrans {

namespace {

void require_valid_from_zero(const Sequence& s, const char* op)
{
    if (s.valid_from() != 0) {
        throw std::domain_error(std::string(op) + " requires valid_from = 0, got " +
                                std::to_string(s.valid_from()));
    }
}

}  // namespace

Rational binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        return Rational{};
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer c{1};
    for (unsigned long i = 1; i <= k; ++i) {
        c *= Integer{static_cast<long>(n - k + i)};
        c.divide_exact(Integer{static_cast<long>(i)});
    }
    return Rational{c};
}

std::vector<Integer> binomial_row(unsigned long n)
{
    std::vector<Integer> row;
    row.reserve(n + 1);
    row.emplace_back(1);
    for (unsigned long k = 1; k <= n; ++k) {
        Integer c = row.back();
        c *= Integer{static_cast<long>(n - k + 1)};
        c.divide_exact(Integer{static_cast<long>(k)});
        row.push_back(std::move(c));
    }
    return row;
}

Sequence binomial_transform(const Sequence& a)
{
    require_valid_from_zero(a, "binomial_transform");
    const std::size_t n_len = a.size();
    std::vector<Rational> out(n_len);
    for (std::size_t n = 0; n < n_len; ++n) {
        const auto row = binomial_row(n);
        Rational sum;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = Rational{row[k]} * a.at(k);
            if (alternating_sign(k) < 0) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        out[n] = std::move(sum);
    }
    return Sequence(std::move(out), 0);
}

Sequence unsigned_binomial_transform(const Sequence& a)
{
    require_valid_from_zero(a, "unsigned_binomial_transform");
    const std::size_t n_len = a.size();
    std::vector<Rational> out(n_len);
    for (std::size_t n = 0; n < n_len; ++n) {
        const auto row = binomial_row(n);
        Rational sum;
        for (std::size_t k = 0; k <= n; ++k) {
            sum += Rational{row[k]} * a.at(k);
        }
        out[n] = std::move(sum);
    }
    return Sequence(std::move(out), 0);
}

Sequence inverse_unsigned_binomial_transform(const Sequence& b)
{
    require_valid_from_zero(b, "inverse_unsigned_binomial_transform");
    const std::size_t n_len = b.size();
    std::vector<Rational> out(n_len);
    for (std::size_t n = 0; n < n_len; ++n) {
        const auto row = binomial_row(n);
        Rational sum;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = Rational{row[k]} * b.at(k);
            if ((n - k) % 2 == 1) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        out[n] = std::move(sum);
    }
    return Sequence(std::move(out), 0);
}

Sequence backward_difference(const Sequence& s)
{
    const std::size_t vf = s.valid_from() + 1;
    if (vf >= s.size()) {
        throw std::domain_error("backward_difference leaves no defined entry (length " +
                                std::to_string(s.size()) + ", valid_from would be " +
                                std::to_string(vf) + ")");
    }
    std::vector<Rational> out(s.size());
    for (std::size_t n = vf; n < s.size(); ++n) {
        out[n] = s.at(n) - s.at(n - 1);
    }
    return Sequence(std::move(out), vf);
}

Sequence n_nabla(const Sequence& s)
{
    const std::size_t vf = s.valid_from() + 1;
    if (vf >= s.size()) {
        throw std::domain_error("n_nabla leaves no defined entry (length " +
                                std::to_string(s.size()) + ", valid_from would be " +
                                std::to_string(vf) + ")");
    }
    std::vector<Rational> out(s.size());
    for (std::size_t n = vf; n < s.size(); ++n) {
        out[n] = Rational{static_cast<long>(n)} * (s.at(n) - s.at(n - 1));
    }
    return Sequence(std::move(out), vf);
}

Sequence n_nabla_pow(const Sequence& s, unsigned p)
{
    if (p == 0) {
        throw std::invalid_argument("n_nabla_pow requires p >= 1");
    }
    if (s.valid_from() + p >= s.size()) {
        throw std::domain_error("(n nabla)^" + std::to_string(p) +
                                " leaves no defined entry (length " + std::to_string(s.size()) +
                                ", valid_from would be " + std::to_string(s.valid_from() + p) +
                                ")");
    }
    Sequence r = n_nabla(s);
    for (unsigned i = 1; i < p; ++i) {
        r = n_nabla(r);
    }
    return r;
}

OperatorPolynomial::OperatorPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty()) {
        throw std::invalid_argument("operator polynomial needs at least one coefficient");
    }
}

std::size_t OperatorPolynomial::degree_bound() const
{
    for (std::size_t j = coefficients_.size(); j-- > 0;) {
        if (!coefficients_[j].is_zero()) {
            return j;
        }
    }
    return 0;
}

Sequence apply_operator_polynomial(const OperatorPolynomial& g, const Sequence& s)
{
    const std::size_t deg = g.degree_bound();
    const std::size_t vf = s.valid_from() + deg;
    if (vf >= s.size()) {
        throw std::domain_error("operator polynomial of degree " + std::to_string(deg) +
                                " leaves no defined entry (length " + std::to_string(s.size()) +
                                ")");
    }

    std::vector<Rational> out(s.size());
    Sequence power = s;  // (n nabla)^j s, starting at j = 0
    for (std::size_t j = 0; j <= deg; ++j) {
        if (j > 0) {
            power = n_nabla(power);
        }
        const Rational& c = g.coefficient(j);
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t n = vf; n < s.size(); ++n) {
            out[n] += c * power.at(n);
        }
    }
    return Sequence(std::move(out), vf);
}

Sequence multiply_by_index_pow(const Sequence& a, unsigned p)
{
    std::vector<Rational> out(a.size());
    for (std::size_t k = a.valid_from(); k < a.size(); ++k) {
        out[k] = Rational{static_cast<long>(k)}.pow(p) * a.at(k);
    }
    return Sequence(std::move(out), a.valid_from());
}

Sequence shifted_transform_rhs(const Sequence& b, const Rational& lambda)
{
    const std::size_t vf = b.valid_from() + 1;
    if (vf >= b.size()) {
        throw std::domain_error("shifted_transform_rhs leaves no defined entry (length " +
                                std::to_string(b.size()) + ")");
    }
    std::vector<Rational> out(b.size());
    for (std::size_t n = vf; n < b.size(); ++n) {
        const Rational nn{static_cast<long>(n)};
        out[n] = (nn + lambda) * b.at(n) - nn * b.at(n - 1);
    }
    return Sequence(std::move(out), vf);
}

Sequence divided_transform(const Sequence& b, const Rational& lambda)
{
    if (b.valid_from() > 1) {
        throw std::domain_error("divided_transform requires valid_from <= 1, got " +
                                std::to_string(b.valid_from()));
    }
    if (b.size() < 2) {
        throw std::domain_error("divided_transform leaves no defined entry (length 1)");
    }
    if (b.valid_from() == 0 && !b.at(0).is_zero()) {
        throw std::invalid_argument("divided_transform requires b_0 = 0, got b_0 = " +
                                    b.at(0).str());
    }

    const std::size_t n_len = b.size();
    std::vector<Rational> out(n_len);
    for (std::size_t n = 1; n < n_len; ++n) {
        const Rational shifted = lambda + Rational{static_cast<long>(n)};
        if (shifted.is_zero()) {
            throw std::domain_error("divided_transform: lambda = " + lambda.str() +
                                    " is forbidden at n = " + std::to_string(n));
        }
        // tail(m) = (lambda+m)(lambda+m+1)...(lambda+n), built from m = n down
        Rational tail{1};
        Rational m_factorial{Integer::factorial(n)};  // runs down to m! as m decreases
        Rational sum;
        for (std::size_t m = n; m >= 1; --m) {
            tail *= lambda + Rational{static_cast<long>(m)};
            sum += b.at(m) / (m_factorial * tail);
            m_factorial /= Rational{static_cast<long>(m)};
        }
        out[n] = Rational{Integer::factorial(n)} * sum;
    }
    return Sequence(std::move(out), std::max<std::size_t>(b.valid_from(), 1));
}

Sequence average_transform(const Sequence& b)
{
    require_valid_from_zero(b, "average_transform");
    std::vector<Rational> out(b.size());
    Rational running;
    for (std::size_t n = 0; n < b.size(); ++n) {
        running += b.at(n);
        out[n] = running / Rational{static_cast<long>(n + 1)};
    }
    return Sequence(std::move(out), 0);
}

}  // namespace bintrans
