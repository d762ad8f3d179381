#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "bintrans/sequence.hpp"
#include "bintrans/transforms.hpp"

using namespace bintrans;

namespace {

Rational rat(long n, long d = 1)
{
    return Rational{n, d};
}

// deterministic random sequences shared by the property tests
Sequence random_sequence(std::mt19937_64& rng, std::size_t len, bool zero_first = false)
{
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    std::vector<Rational> v(len);
    for (std::size_t i = zero_first ? 1 : 0; i < len; ++i) {
        v[i] = Rational{num(rng), den(rng)};
    }
    return Sequence(std::move(v), 0);
}

// independent summation oracle for the signed transform
Rational signed_sum_oracle(const Sequence& a, std::size_t n)
{
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) {
        Rational t = binomial(n, k) * a.at(k);
        sum += (k % 2 == 1) ? t : -t;
    }
    return sum;
}

}  // namespace

TEST_CASE("sequence valid_from contract")
{
    const Sequence s({rat(1), rat(2), rat(3)}, 1);
    CHECK(s.at(1) == 2);
    CHECK_THROWS_AS(s.at(0), std::domain_error);
    CHECK_THROWS_AS(s.at(3), std::out_of_range);
    CHECK_THROWS_AS(Sequence(std::vector<Rational>{}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Sequence({rat(1), rat(2)}, 2), std::invalid_argument);

    // placeholders are normalized to zero, so equality is well defined
    CHECK(Sequence({rat(9), rat(2)}, 1) == Sequence({rat(8), rat(2)}, 1));
}

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(40, 20).str() == "137846528820");

    // Pascal recurrence against the row builder
    for (unsigned long n = 1; n <= 25; ++n) {
        const auto row = binomial_row(n);
        const auto prev = binomial_row(n - 1);
        for (unsigned long k = 1; k < n; ++k) {
            CHECK(row[k] == prev[k] + prev[k - 1]);
        }
        CHECK(row[0] == 1);
        CHECK(row[n] == 1);
    }
}

TEST_CASE("difference lemma: C(n,k) - C(n-1,k) = (k/n) C(n,k) for n <= 40")
{
    for (unsigned long n = 1; n <= 40; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            const Rational lhs = binomial(n, k) - binomial(n - 1, k);
            const Rational rhs =
                Rational{static_cast<long>(k), static_cast<long>(n)} * binomial(n, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("signed binomial transform examples")
{
    CHECK(binomial_transform(Sequence{rat(1), rat(1), rat(1), rat(1)}) ==
          Sequence{rat(-1), rat(0), rat(0), rat(0)});
    CHECK(binomial_transform(Sequence{rat(0), rat(1), rat(1, 2), rat(1, 3)}) ==
          Sequence{rat(0), rat(1), rat(3, 2), rat(11, 6)});
    const Sequence fib{rat(0), rat(1), rat(1), rat(2), rat(3), rat(5)};
    CHECK(binomial_transform(fib) == fib);

    CHECK_THROWS_AS(binomial_transform(Sequence({rat(0), rat(1)}, 1)), std::domain_error);
}

TEST_CASE("unsigned transform examples and round-trip")
{
    CHECK(unsigned_binomial_transform(Sequence{rat(0), rat(1), rat(1), rat(2), rat(3)}) ==
          Sequence{rat(0), rat(1), rat(3), rat(8), rat(21)});
    CHECK(unsigned_binomial_transform(Sequence{rat(0), rat(0), rat(0)}) ==
          Sequence{rat(0), rat(0), rat(0)});
    CHECK(unsigned_binomial_transform(Sequence{rat(1), rat(1), rat(1)}) ==
          Sequence{rat(1), rat(2), rat(4)});

    CHECK(inverse_unsigned_binomial_transform(Sequence{rat(1), rat(2), rat(4)}) ==
          Sequence{rat(1), rat(1), rat(1)});
    CHECK(inverse_unsigned_binomial_transform(
              Sequence{rat(0), rat(1), rat(3), rat(8), rat(21)}) ==
          Sequence{rat(0), rat(1), rat(1), rat(2), rat(3)});
    CHECK(inverse_unsigned_binomial_transform(Sequence{rat(1), rat(0), rat(0)}) ==
          Sequence{rat(1), rat(-1), rat(1)});
}

TEST_CASE("involution and unsigned round-trip on random sequences")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<std::size_t> len(1, 24);
        const Sequence a = random_sequence(rng, len(rng));
        CHECK(binomial_transform(binomial_transform(a)) == a);
        CHECK(inverse_unsigned_binomial_transform(unsigned_binomial_transform(a)) == a);

        // spot-check the transform itself against the summation oracle
        const Sequence b = binomial_transform(a);
        const std::size_t n = a.size() - 1;
        CHECK(b.at(n) == signed_sum_oracle(a, n));
    }
}

TEST_CASE("transforms are linear")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        const Sequence a = random_sequence(rng, 12);
        const Sequence b = random_sequence(rng, 12);
        const Rational alpha{3, 7};
        const Rational beta{-5, 2};
        std::vector<Rational> combo(12);
        for (std::size_t k = 0; k < 12; ++k) {
            combo[k] = alpha * a.at(k) + beta * b.at(k);
        }
        const Sequence ta = binomial_transform(a);
        const Sequence tb = binomial_transform(b);
        const Sequence tc = binomial_transform(Sequence(std::move(combo), 0));
        const Sequence ua = unsigned_binomial_transform(a);
        const Sequence ub = unsigned_binomial_transform(b);
        for (std::size_t n = 0; n < 12; ++n) {
            CHECK(tc.at(n) == alpha * ta.at(n) + beta * tb.at(n));
        }
        // unsigned variant, single point suffices alongside the full signed sweep
        std::vector<Rational> sum_ab(12);
        for (std::size_t k = 0; k < 12; ++k) {
            sum_ab[k] = a.at(k) + b.at(k);
        }
        CHECK(unsigned_binomial_transform(Sequence(std::move(sum_ab), 0)).at(11) ==
              ua.at(11) + ub.at(11));
    }
}

TEST_CASE("backward difference")
{
    const Sequence tri{rat(0), rat(1), rat(3), rat(6)};
    const Sequence d = backward_difference(tri);
    CHECK(d.valid_from() == 1);
    CHECK(d.size() == 4);
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == 2);
    CHECK(d.at(3) == 3);
    CHECK_THROWS_AS(d.at(0), std::domain_error);

    const Sequence c = backward_difference(Sequence{rat(5), rat(5), rat(5)});
    CHECK(c.at(1) == 0);
    CHECK(c.at(2) == 0);

    const Sequence h = backward_difference(Sequence{rat(0), rat(1), rat(3, 2), rat(11, 6)});
    CHECK(h.at(1) == 1);
    CHECK(h.at(2) == rat(1, 2));
    CHECK(h.at(3) == rat(1, 3));

    CHECK_THROWS_AS(backward_difference(Sequence({rat(1), rat(2)}, 1)), std::domain_error);
}

TEST_CASE("n_nabla")
{
    // s_n = 1/n from n = 1
    const Sequence inv_n({rat(0), rat(1), rat(1, 2), rat(1, 3)}, 1);
    const Sequence r = n_nabla(inv_n);
    CHECK(r.valid_from() == 2);
    CHECK(r.at(2) == rat(-1));  // 2(1/2 - 1)

    const Sequence two_over_n2({rat(0), rat(2), rat(1, 2), rat(2, 9)}, 1);
    CHECK(n_nabla(two_over_n2).at(2) == rat(-3));

    const Sequence c = n_nabla(Sequence{rat(7), rat(7), rat(7)});
    CHECK(c.valid_from() == 1);
    CHECK(c.at(1) == 0);
    CHECK(c.at(2) == 0);
}

TEST_CASE("n_nabla_pow")
{
    std::vector<Rational> v(5);
    for (long n = 1; n <= 4; ++n) {
        v[n] = rat(1, n);
    }
    const Sequence inv_n(std::move(v), 1);
    const Sequence r2 = n_nabla_pow(inv_n, 2);
    CHECK(r2.valid_from() == 3);
    CHECK(r2.at(3) == rat(3, 2));  // n/((n-1)(n-2)) at n = 3

    const Sequence once = n_nabla_pow(inv_n, 1);
    const Sequence direct = n_nabla(inv_n);
    CHECK(once == direct);

    // (n nabla)^2 x^n at x = 1/2, n = 3 equals the frozen Stirling-sum value
    const Sequence geo{rat(1), rat(1, 2), rat(1, 4), rat(1, 8)};
    CHECK(n_nabla_pow(geo, 2).at(3) == rat(3, 8));

    CHECK_THROWS_AS(n_nabla_pow(inv_n, 4), std::domain_error);
    CHECK_THROWS_AS(n_nabla_pow(inv_n, 0), std::invalid_argument);
}

TEST_CASE("transform of k^p a_k equals (n nabla)^p b_n")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> len(6, 24);
    for (int i = 0; i < 25; ++i) {
        const Sequence a = random_sequence(rng, len(rng));
        const Sequence b = binomial_transform(a);
        for (unsigned p = 1; p <= 4; ++p) {
            if (p >= a.size()) {
                continue;
            }
            const Sequence lhs = binomial_transform(multiply_by_index_pow(a, p));
            const Sequence rhs = n_nabla_pow(b, p);
            for (std::size_t n = p; n < a.size(); ++n) {
                CHECK(lhs.at(n) == rhs.at(n));
            }
        }
    }
}

TEST_CASE("multiply_by_index_pow")
{
    CHECK(multiply_by_index_pow(Sequence{rat(1), rat(1), rat(1)}, 1) ==
          Sequence{rat(0), rat(1), rat(2)});
    CHECK(multiply_by_index_pow(Sequence{rat(1), rat(1), rat(1)}, 0) ==
          Sequence{rat(1), rat(1), rat(1)});  // 0^0 = 1
    CHECK(multiply_by_index_pow(Sequence{rat(0), rat(1), rat(1, 2)}, 2) ==
          Sequence{rat(0), rat(1), rat(2)});

    const Sequence s({rat(0), rat(5)}, 1);
    CHECK(multiply_by_index_pow(s, 3).valid_from() == 1);
}

TEST_CASE("operator polynomials")
{
    // g = (lambda, 1) acts as (n + lambda) b_n - n b_{n-1}; at lambda = 0, n = 2 on H
    const Sequence h{rat(0), rat(1), rat(3, 2), rat(11, 6)};
    const OperatorPolynomial g0{rat(0), rat(1)};
    CHECK(apply_operator_polynomial(g0, h).at(2) == rat(1));

    const OperatorPolynomial identity{rat(1)};
    CHECK(apply_operator_polynomial(identity, h) == h);

    const OperatorPolynomial square{rat(0), rat(0), rat(1)};
    CHECK(apply_operator_polynomial(square, h) == n_nabla_pow(h, 2));

    // trailing zeros do not shrink the defined range
    const OperatorPolynomial padded{rat(1), rat(0), rat(0)};
    CHECK(padded.degree_bound() == 0);
    CHECK(apply_operator_polynomial(padded, Sequence{rat(4)}) == Sequence{rat(4)});

    // the zero polynomial annihilates everything and keeps valid_from
    const OperatorPolynomial zero{rat(0)};
    const Sequence z = apply_operator_polynomial(zero, Sequence({rat(0), rat(2), rat(5)}, 1));
    CHECK(z.valid_from() == 1);
    CHECK(z.at(1) == 0);
    CHECK(z.at(2) == 0);

    // g = (lambda, 1) is exactly the (n + lambda) b_n - n b_{n-1} route
    for (const Rational& lambda : {rat(1), rat(-1, 2), rat(5)}) {
        const OperatorPolynomial shift{lambda, rat(1)};
        CHECK(apply_operator_polynomial(shift, h) == shifted_transform_rhs(h, lambda));
    }

    CHECK_THROWS_AS(OperatorPolynomial{std::vector<Rational>{}}, std::invalid_argument);
    CHECK_THROWS_AS(apply_operator_polynomial(square, (Sequence{rat(1), rat(2)})),
                    std::domain_error);
}

TEST_CASE("g(n nabla) b equals the transform of g(k) a_k")
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int i = 0; i < 20; ++i) {
        const Sequence a = random_sequence(rng, 14);
        const Sequence b = binomial_transform(a);
        std::vector<Rational> gc(4);
        for (auto& c : gc) {
            c = Rational{coeff(rng), 1 + (coeff(rng) + 6) % 3};
        }
        const OperatorPolynomial g(gc);
        const std::size_t deg = g.degree_bound();

        std::vector<Rational> weighted(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            Rational gk;
            for (std::size_t j = 0; j < 4; ++j) {
                gk += gc[j] * Rational{static_cast<long>(k)}.pow(static_cast<long>(j));
            }
            weighted[k] = gk * a.at(k);
        }
        const Sequence lhs = binomial_transform(Sequence(std::move(weighted), 0));
        const Sequence rhs = apply_operator_polynomial(g, b);
        for (std::size_t n = deg; n < a.size(); ++n) {
            CHECK(lhs.at(n) == rhs.at(n));
        }
    }
}

TEST_CASE("transform of k * nabla a_k equals n b_n")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const Sequence a = random_sequence(rng, 16);
        const Sequence b = binomial_transform(a);
        std::vector<Rational> knabla(a.size());  // term at k = 0 set to 0
        for (std::size_t k = 1; k < a.size(); ++k) {
            knabla[k] = Rational{static_cast<long>(k)} * (a.at(k) - a.at(k - 1));
        }
        const Sequence lhs = binomial_transform(Sequence(std::move(knabla), 0));
        for (std::size_t n = 1; n < a.size(); ++n) {
            CHECK(lhs.at(n) == Rational{static_cast<long>(n)} * b.at(n));
        }
    }
}

TEST_CASE("shifted_transform_rhs")
{
    const Sequence h{rat(0), rat(1), rat(3, 2), rat(11, 6)};
    CHECK(shifted_transform_rhs(h, rat(1)).at(2) == rat(5, 2));  // 3(3/2) - 2(1)

    const Sequence r0 = shifted_transform_rhs(h, rat(0));
    const Sequence nn = n_nabla(h);
    CHECK(r0 == nn);

    const Sequence z = shifted_transform_rhs(Sequence{rat(0), rat(0), rat(0)}, rat(7, 3));
    CHECK(z.at(1) == 0);
    CHECK(z.at(2) == 0);

    // matches the direct summation of (k + lambda) a_k for random input
    std::mt19937_64 rng(6);
    const std::vector<Rational> lambdas{rat(0), rat(1), rat(-1, 2), rat(5)};
    for (int i = 0; i < 10; ++i) {
        const Sequence a = random_sequence(rng, 21);
        const Sequence b = binomial_transform(a);
        for (const Rational& lambda : lambdas) {
            const Sequence rhs = shifted_transform_rhs(b, lambda);
            for (std::size_t n = 1; n <= 20; ++n) {
                Rational direct;
                for (std::size_t k = 0; k <= n; ++k) {
                    Rational t =
                        binomial(n, k) * (Rational{static_cast<long>(k)} + lambda) * a.at(k);
                    direct += (k % 2 == 1) ? t : -t;
                }
                CHECK(direct == rhs.at(n));
            }
        }
    }
}

TEST_CASE("divided_transform examples")
{
    const Sequence h{rat(0), rat(1), rat(3, 2), rat(11, 6)};
    CHECK(divided_transform(h, rat(0)).at(2) == rat(7, 4));  // H_1/1 + H_2/2

    const Sequence delta{rat(0), rat(1), rat(0), rat(0)};
    CHECK(divided_transform(delta, rat(2)).at(3) == rat(1, 10));

    const Sequence z = divided_transform(Sequence{rat(0), rat(0), rat(0)}, rat(1, 2));
    CHECK(z.at(1) == 0);
    CHECK(z.at(2) == 0);

    CHECK_THROWS_AS(divided_transform((Sequence{rat(1), rat(2)}), rat(0)),
                    std::invalid_argument);  // b_0 != 0
}

TEST_CASE("divided_transform forbidden lambda is lazy and names the index")
{
    const Sequence b{rat(0), rat(1), rat(2), rat(3), rat(4)};
    try {
        divided_transform(b, rat(-3));
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("n = 3") != std::string::npos);
    }
    // a shorter prefix stays usable with the same lambda
    const Sequence short_b{rat(0), rat(1), rat(2)};
    CHECK_NOTHROW(divided_transform(short_b, rat(-3)));
}

TEST_CASE("divided transform matches direct summation of a_k/(k+lambda)")
{
    std::mt19937_64 rng(7);
    const std::vector<Rational> lambdas{rat(0), rat(1), rat(1, 2), rat(-1, 2), rat(5)};
    for (int i = 0; i < 10; ++i) {
        const Sequence a = random_sequence(rng, 21, /*zero_first=*/true);
        const Sequence b = binomial_transform(a);
        for (const Rational& lambda : lambdas) {
            const Sequence got = divided_transform(b, lambda);
            for (std::size_t n = 1; n <= 20; ++n) {
                Rational direct;
                for (std::size_t k = 1; k <= n; ++k) {
                    Rational t =
                        binomial(n, k) * a.at(k) / (Rational{static_cast<long>(k)} + lambda);
                    direct += (k % 2 == 1) ? t : -t;
                }
                CHECK(direct == got.at(n));
            }
        }
    }
}

TEST_CASE("divided transform at lambda = 0 is the partial sum of b_m/m")
{
    std::mt19937_64 rng(8);
    const Sequence a = random_sequence(rng, 18, /*zero_first=*/true);
    const Sequence b = binomial_transform(a);
    const Sequence got = divided_transform(b, rat(0));
    Rational partial;
    for (std::size_t m = 1; m < b.size(); ++m) {
        partial += b.at(m) / Rational{static_cast<long>(m)};
        CHECK(got.at(m) == partial);
    }
}

TEST_CASE("average_transform")
{
    CHECK(average_transform(Sequence{rat(0), rat(1), rat(1), rat(2), rat(3)}).at(2) ==
          rat(2, 3));
    CHECK(average_transform(Sequence{rat(0), rat(0), rat(0)}) ==
          Sequence{rat(0), rat(0), rat(0)});
    CHECK(average_transform(Sequence{rat(1), rat(0), rat(0), rat(0)}) ==
          Sequence{rat(1), rat(1, 2), rat(1, 3), rat(1, 4)});

    // equals the signed transform of a_k/(k+1), no a_0 = 0 restriction
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        const Sequence a = random_sequence(rng, 21);
        const Sequence b = binomial_transform(a);
        std::vector<Rational> scaled(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            scaled[k] = a.at(k) / Rational{static_cast<long>(k + 1)};
        }
        CHECK(binomial_transform(Sequence(std::move(scaled), 0)) == average_transform(b));
    }
}

TEST_CASE("partial sums of (n nabla b)_m / m recover b when b_0 = 0")
{
    std::mt19937_64 rng(10);
    for (int i = 0; i < 20; ++i) {
        const Sequence a = random_sequence(rng, 16, /*zero_first=*/true);
        const Sequence b = binomial_transform(a);
        const Sequence nb = n_nabla(b);
        Rational partial;
        for (std::size_t n = 1; n < b.size(); ++n) {
            partial += nb.at(n) / Rational{static_cast<long>(n)};
            CHECK(partial == b.at(n));
        }
    }
}
