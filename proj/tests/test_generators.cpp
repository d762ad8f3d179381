#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "bintrans/generators.hpp"
#include "bintrans/transforms.hpp"

using namespace bintrans;

namespace {

Rational rat(long n, long d = 1)
{
    return Rational{n, d};
}

// Tuple-enumeration oracle for the multiple harmonic sum: sums 1/(k_1...k_m)
// over 1 <= k_1 <= ... <= k_m <= n by explicit recursion.
Rational mhs_brute_force(long n, unsigned m)
{
    std::function<Rational(long, unsigned)> go = [&](long lo, unsigned depth) -> Rational {
        if (depth == 0) {
            return Rational{1};
        }
        Rational sum;
        for (long k = lo; k <= n; ++k) {
            sum += Rational{1, k} * go(k, depth - 1);
        }
        return sum;
    };
    return go(1, m);
}

}  // namespace

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic(4) == Sequence{rat(0), rat(1), rat(3, 2), rat(11, 6)});
    CHECK(harmonic(1).at(0) == 0);
    CHECK(harmonic(2).at(1) == 1);
    CHECK_THROWS_AS(harmonic(0), std::invalid_argument);
}

TEST_CASE("generalized harmonic numbers")
{
    CHECK(generalized_harmonic(3, 2) == Sequence{rat(0), rat(1), rat(5, 4)});
    CHECK(generalized_harmonic(9, 1) == harmonic(9));
    CHECK(generalized_harmonic(3, 3).at(2) == rat(9, 8));
    CHECK_THROWS_AS(generalized_harmonic(3, 0), std::invalid_argument);
}

TEST_CASE("skew-harmonic numbers")
{
    CHECK(skew_harmonic(4) == Sequence{rat(0), rat(1), rat(1, 2), rat(5, 6)});
    CHECK(skew_harmonic(2).at(1) == 1);
    CHECK(skew_harmonic(3).at(2) == rat(1, 2));
}

TEST_CASE("stirling table examples and recurrence")
{
    CHECK(stirling2(4, 2) == 7);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(stirling2(n, n) == 1);
    }
    CHECK(stirling2(3, 5) == 0);

    const StirlingTable table(20);
    CHECK(table.at(0, 0) == 1);
    for (unsigned p = 1; p <= 20; ++p) {
        CHECK(table.at(p, 0) == 0);
        CHECK(table.at(p, p) == 1);
        for (unsigned n = 1; n <= p; ++n) {
            Integer expected = table.at(p - 1, n);
            expected *= static_cast<long>(n);
            expected += table.at(p - 1, n - 1);
            CHECK(table.at(p, n) == expected);
        }
    }
    CHECK_THROWS_AS(table.at(21, 1), std::out_of_range);
}

TEST_CASE("stirling numbers via the signed transform of k^p")
{
    // sum C(n,k)(-1)^(k-1) k^p = (-1)^(n-1) n! S(p,n), exact for p, n <= 10
    for (unsigned p = 1; p <= 10; ++p) {
        for (unsigned long n = 1; n <= 10; ++n) {
            const Sequence powers = index_powers(n + 1, p);
            const Rational lhs = binomial_transform(powers).at(n);
            Rational rhs = Rational{Integer::factorial(n)} * stirling2(p, n);
            if (n % 2 == 0) {
                rhs = -rhs;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("inverted representation: sum C(n,k) k! S(q+1,k) = n^(q+1)")
{
    for (unsigned q = 0; q <= 6; ++q) {
        const StirlingTable table(q + 1);
        for (unsigned long n = 0; n <= 12; ++n) {
            Rational sum;
            const auto row = binomial_row(n);
            for (unsigned long k = 0; k <= n; ++k) {
                const unsigned kk = static_cast<unsigned>(k);
                if (kk > q + 1) {
                    break;  // S(q+1, k) = 0 past k = q+1
                }
                sum += Rational{row[k]} * Rational{Integer::factorial(k)} *
                       Rational{table.at(q + 1, kk)};
            }
            CHECK(sum == Rational{static_cast<long>(n)}.pow(static_cast<long>(q) + 1));
        }
    }
}

TEST_CASE("stirling_expansion matches the direct power sum")
{
    const std::vector<Rational> xs{rat(1, 2), rat(2), rat(-3), rat(-1)};
    for (unsigned p = 0; p <= 4; ++p) {
        for (unsigned long n = 0; n <= 8; ++n) {
            for (const Rational& x : xs) {
                Rational direct;
                const auto row = binomial_row(n);
                for (unsigned long k = 0; k <= n; ++k) {
                    direct += Rational{row[k]} *
                              Rational{static_cast<long>(k)}.pow(p) *
                              x.pow(static_cast<long>(k));
                }
                CHECK(stirling_expansion(p, n, x) == direct);
            }
        }
    }
}

TEST_CASE("fibonacci and lucas prefixes")
{
    CHECK(fibonacci(7) ==
          Sequence{rat(0), rat(1), rat(1), rat(2), rat(3), rat(5), rat(8)});
    CHECK(lucas(5) == Sequence{rat(2), rat(1), rat(3), rat(4), rat(7)});
    CHECK(fibonacci_at(-1) == 1);
}

TEST_CASE("negative-index extension satisfies the recurrence on [-6, 20]")
{
    for (long n = -4; n <= 20; ++n) {
        CHECK(fibonacci_at(n) == fibonacci_at(n - 1) + fibonacci_at(n - 2));
        CHECK(lucas_at(n) == lucas_at(n - 1) + lucas_at(n - 2));
    }
    // prefix and accessor agree
    const Sequence f = fibonacci(21);
    const Sequence l = lucas(21);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(f.at(n) == fibonacci_at(static_cast<long>(n)));
        CHECK(l.at(n) == lucas_at(static_cast<long>(n)));
    }
    // known backward values
    CHECK(fibonacci_at(-2) == -1);
    CHECK(fibonacci_at(-3) == 2);
    CHECK(fibonacci_at(-4) == -3);
}

TEST_CASE("power sums")
{
    CHECK(power_sum(4, 2) == Sequence{rat(0), rat(1), rat(5), rat(14)});
    CHECK(power_sum(6, 0).at(5) == 5);
    CHECK(power_sum(4, 3).at(3) == 36);
}

TEST_CASE("multiple harmonic sums")
{
    CHECK(multiple_harmonic_sum(9, 1) == harmonic(9));
    CHECK(multiple_harmonic_sum(3, 2).at(2) == rat(7, 4));
    CHECK(multiple_harmonic_sum(4, 2).at(3) == rat(85, 36));

    // recursion equals tuple enumeration for m <= 3, n <= 10
    for (unsigned m = 1; m <= 3; ++m) {
        const Sequence s = multiple_harmonic_sum(11, m);
        for (long n = 1; n <= 10; ++n) {
            CHECK(s.at(static_cast<std::size_t>(n)) == mhs_brute_force(n, m));
        }
    }

    // m = 2 term n equals sum_{k<=n} H_k/k
    const Sequence h = harmonic(11);
    const Sequence m2 = multiple_harmonic_sum(11, 2);
    Rational acc;
    for (long k = 1; k <= 10; ++k) {
        acc += h.at(static_cast<std::size_t>(k)) / rat(k);
        CHECK(m2.at(static_cast<std::size_t>(k)) == acc);
    }
}

TEST_CASE("sum of H_k/k in closed form for n <= 30")
{
    const Sequence h = harmonic(31);
    const Sequence h2 = generalized_harmonic(31, 2);
    Rational acc;
    for (long n = 1; n <= 30; ++n) {
        const auto i = static_cast<std::size_t>(n);
        acc += h.at(i) / rat(n);
        CHECK(acc == (h.at(i) * h.at(i) + h2.at(i)) / rat(2));
    }
}

TEST_CASE("laguerre values")
{
    CHECK(laguerre(1, rat(17, 5)).at(0) == 1);
    CHECK(laguerre(2, rat(3)).at(1) == rat(-2));
    CHECK(laguerre(3, rat(1)).at(2) == rat(-1, 2));

    // recurrence equals the finite binomial sum for n <= 15
    const std::vector<Rational> xs{rat(1, 2), rat(2), rat(-3)};
    for (const Rational& x : xs) {
        const Sequence lag = laguerre(16, x);
        for (unsigned long n = 0; n <= 15; ++n) {
            Rational direct;
            const auto row = binomial_row(n);
            for (unsigned long k = 0; k <= n; ++k) {
                direct += Rational{row[k]} * (-x).pow(static_cast<long>(k)) /
                          Rational{Integer::factorial(k)};
            }
            CHECK(lag.at(n) == direct);
        }
    }
}

TEST_CASE("elementary generators")
{
    CHECK(geometric(3, rat(1, 2)) == Sequence{rat(1), rat(1, 2), rat(1, 4)});
    CHECK(index_powers(3, 2) == Sequence{rat(0), rat(1), rat(4)});
    CHECK(index_powers(3, 0) == Sequence{rat(1), rat(1), rat(1)});  // 0^0 = 1
    CHECK(binomial_column(4, 2) == Sequence{rat(1), rat(2), rat(1), rat(0)});
}
