#include "bintrans/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "bintrans/transforms.hpp"

namespace bintrans {

namespace {

void require_length(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("generator length must be >= 1");
    }
}

}  // namespace

Sequence harmonic(std::size_t n)
{
    return generalized_harmonic(n, 1);
}

Sequence generalized_harmonic(std::size_t n, unsigned r)
{
    require_length(n);
    if (r == 0) {
        throw std::invalid_argument("generalized harmonic order must be >= 1");
    }
    std::vector<Rational> out(n);
    for (std::size_t k = 1; k < n; ++k) {
        out[k] = out[k - 1] + Rational{1} / Rational{static_cast<long>(k)}.pow(r);
    }
    return Sequence(std::move(out), 0);
}

Sequence skew_harmonic(std::size_t n)
{
    require_length(n);
    std::vector<Rational> out(n);
    for (std::size_t k = 1; k < n; ++k) {
        const Rational step{alternating_sign(k), static_cast<long>(k)};
        out[k] = out[k - 1] + step;
    }
    return Sequence(std::move(out), 0);
}

StirlingTable::StirlingTable(unsigned p_max) : p_max_(p_max)
{
    rows_.reserve(p_max + 1);
    rows_.push_back({Integer{1}});  // S(0, 0) = 1
    for (unsigned p = 1; p <= p_max; ++p) {
        const auto& prev = rows_.back();  // length p: S(p-1, 0..p-1)
        std::vector<Integer> row(p + 1);  // S(p, 0) stays 0
        for (unsigned n = 1; n <= p; ++n) {
            Integer v = (n < prev.size()) ? prev[n] : Integer{};
            v *= static_cast<long>(n);
            v += prev[n - 1];
            row[n] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

const Integer& StirlingTable::at(unsigned p, unsigned n) const
{
    if (p > p_max_) {
        throw std::out_of_range("Stirling table built to p_max = " + std::to_string(p_max_) +
                                ", asked for p = " + std::to_string(p));
    }
    if (n > p) {
        return zero_;
    }
    return rows_[p][n];
}

Rational stirling2(unsigned p, unsigned n)
{
    if (n > p) {
        return Rational{};
    }
    return Rational{StirlingTable(p).at(p, n)};
}

Rational stirling_expansion(unsigned p, unsigned long n, const Rational& x)
{
    const StirlingTable table(p);
    const Rational one_plus_x = Rational{1} + x;
    Rational sum;
    const unsigned long j_max = std::min<unsigned long>(p, n);
    for (unsigned long j = 0; j <= j_max; ++j) {
        const Integer& s = table.at(p, static_cast<unsigned>(j));
        if (s.is_zero()) {
            continue;
        }
        Rational term = binomial(n, j) * Rational{s} * Rational{Integer::factorial(j)};
        term *= x.pow(static_cast<long>(j));
        term *= one_plus_x.pow(static_cast<long>(n - j));
        sum += term;
    }
    return sum;
}

Sequence fibonacci(std::size_t n)
{
    require_length(n);
    std::vector<Rational> out(n);
    if (n > 1) {
        out[1] = Rational{1};
    }
    for (std::size_t k = 2; k < n; ++k) {
        out[k] = out[k - 1] + out[k - 2];
    }
    return Sequence(std::move(out), 0);
}

Sequence lucas(std::size_t n)
{
    require_length(n);
    std::vector<Rational> out(n);
    out[0] = Rational{2};
    if (n > 1) {
        out[1] = Rational{1};
    }
    for (std::size_t k = 2; k < n; ++k) {
        out[k] = out[k - 1] + out[k - 2];
    }
    return Sequence(std::move(out), 0);
}

namespace {

Rational recurrence_at(long n, Rational f0, Rational f1)
{
    if (n >= 0) {
        if (n == 0) {
            return f0;
        }
        Rational prev = std::move(f0);
        Rational cur = std::move(f1);
        for (long k = 2; k <= n; ++k) {
            Rational next = cur + prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    // F_{k-2} = F_k - F_{k-1}, walking down from (f0, f1)
    Rational above = std::move(f1);   // F_{k+1}
    Rational cur = std::move(f0);     // F_k, k descending from 0
    for (long k = 0; k > n; --k) {
        Rational below = above - cur;
        above = std::move(cur);
        cur = std::move(below);
    }
    return cur;
}

}  // namespace

Rational fibonacci_at(long n)
{
    return recurrence_at(n, Rational{0}, Rational{1});
}

Rational lucas_at(long n)
{
    return recurrence_at(n, Rational{2}, Rational{1});
}

Sequence power_sum(std::size_t n, unsigned q)
{
    require_length(n);
    std::vector<Rational> out(n);
    for (std::size_t k = 1; k < n; ++k) {
        out[k] = out[k - 1] + Rational{static_cast<long>(k)}.pow(q);
    }
    return Sequence(std::move(out), 0);
}

Sequence multiple_harmonic_sum(std::size_t n, unsigned m)
{
    require_length(n);
    if (m == 0) {
        throw std::invalid_argument("multiple harmonic sum depth must be >= 1");
    }
    // d(0, k) = 1; d(depth, k) = sum_{j<=k} d(depth-1, j)/j. Updated in
    // place: each previous-depth value is read once, before being written.
    std::vector<Rational> d(n, Rational{1});
    d[0] = Rational{};
    for (unsigned depth = 1; depth <= m; ++depth) {
        Rational running;
        for (std::size_t k = 1; k < n; ++k) {
            running += d[k] / Rational{static_cast<long>(k)};
            d[k] = running;
        }
    }
    return Sequence(std::move(d), 0);
}

Sequence laguerre(std::size_t n, const Rational& x)
{
    require_length(n);
    std::vector<Rational> out(n);
    out[0] = Rational{1};
    if (n > 1) {
        out[1] = Rational{1} - x;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const Rational kk{static_cast<long>(k)};
        out[k + 1] = ((Rational{2} * kk + Rational{1} - x) * out[k] - kk * out[k - 1]) /
                     (kk + Rational{1});
    }
    return Sequence(std::move(out), 0);
}

Sequence geometric(std::size_t n, const Rational& x)
{
    require_length(n);
    std::vector<Rational> out(n);
    out[0] = Rational{1};
    for (std::size_t k = 1; k < n; ++k) {
        out[k] = out[k - 1] * x;
    }
    return Sequence(std::move(out), 0);
}

Sequence index_powers(std::size_t n, unsigned p)
{
    require_length(n);
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = Rational{static_cast<long>(k)}.pow(p);
    }
    return Sequence(std::move(out), 0);
}

Sequence binomial_column(std::size_t n, unsigned p)
{
    require_length(n);
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = binomial(p, k);
    }
    return Sequence(std::move(out), 0);
}

}  // namespace bintrans
