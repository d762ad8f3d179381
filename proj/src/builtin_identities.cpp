#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bintrans/generators.hpp"
#include "bintrans/identities.hpp"
#include "bintrans/transforms.hpp"

// The built-in identity catalog. Every LHS below is a literal summation
// over the binomial row (or a raw operator application when the identity
// is about the operator itself); every RHS is an independent closed form,
// so a pass checks the two routes against each other exactly.

namespace bintrans {

namespace {

using Term = std::function<Rational(long)>;

// sum_{k=0}^{n} C(n,k) (-1)^(k-1) f(k)
Rational alt_sum(long n, const Term& f)
{
    const auto row = binomial_row(static_cast<unsigned long>(n));
    Rational sum;
    for (long k = 0; k <= n; ++k) {
        Rational t = Rational{row[static_cast<std::size_t>(k)]} * f(k);
        if (alternating_sign(static_cast<unsigned long>(k)) < 0) {
            sum -= t;
        } else {
            sum += t;
        }
    }
    return sum;
}

// sum_{k=0}^{n} C(n,k) f(k)
Rational plain_sum(long n, const Term& f)
{
    const auto row = binomial_row(static_cast<unsigned long>(n));
    Rational sum;
    for (long k = 0; k <= n; ++k) {
        sum += Rational{row[static_cast<std::size_t>(k)]} * f(k);
    }
    return sum;
}

Rational harmonic_value(long n)
{
    return harmonic(static_cast<std::size_t>(n) + 1).at(static_cast<std::size_t>(n));
}

Rational gen_harmonic_value(long n, unsigned r)
{
    return generalized_harmonic(static_cast<std::size_t>(n) + 1, r)
        .at(static_cast<std::size_t>(n));
}

Rational factorial_value(long n)
{
    return Rational{Integer::factorial(static_cast<unsigned long>(n))};
}

// prod_{i=from}^{to} (lambda + i); 1 for an empty range
Rational rising_product(const Rational& lambda, long from, long to)
{
    Rational p{1};
    for (long i = from; i <= to; ++i) {
        p *= lambda + Rational{i};
    }
    return p;
}

// the sequence 0, 1, 1/2, 1/3, ... of length n+1 (b_m = 1/m)
Sequence reciprocal_prefix(long n)
{
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (long m = 1; m <= n; ++m) {
        v[static_cast<std::size_t>(m)] = Rational{1, m};
    }
    return Sequence(std::move(v), n >= 1 ? 1 : 0);
}

std::vector<ParamSet> int_grid(const std::string& name, long lo, long hi)
{
    std::vector<ParamSet> grid;
    for (long v = lo; v <= hi; ++v) {
        grid.push_back(ParamSet{}.set(name, Rational{v}));
    }
    return grid;
}

std::vector<ParamSet> value_grid(const std::string& name,
                                 std::initializer_list<const char*> literals)
{
    std::vector<ParamSet> grid;
    for (const char* lit : literals) {
        grid.push_back(ParamSet{}.set(name, Rational{lit}));
    }
    return grid;
}

std::vector<ParamSet> cross(const std::vector<ParamSet>& a, const std::vector<ParamSet>& b)
{
    std::vector<ParamSet> grid;
    for (const ParamSet& left : a) {
        for (const ParamSet& right : b) {
            ParamSet both = left;
            for (const auto& [name, value] : right) {
                both.set(name, value);
            }
            grid.push_back(std::move(both));
        }
    }
    return grid;
}

std::function<long(const ParamSet&)> fixed(long v)
{
    return [v](const ParamSet&) { return v; };
}

std::string require_int_at_least(const ParamSet& ps, const std::string& name, long lo)
{
    if (ps.get_integer(name) < lo) {
        return name + " must be >= " + std::to_string(lo);
    }
    return {};
}

// --- family: powers of the index (Stirling-2 representations) ---

void add_stirling_family(IdentityRegistry& reg)
{
    reg.add({
        .id = "stirling_rep",
        .description = "sum C(n,k)(-1)^(k-1) k^p = (-1)^(n-1) n! S(p,n)",
        .params = {{"p", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const long p = ps.get_integer("p");
                return alt_sum(n, [&](long k) { return Rational{k}.pow(p); });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned p = static_cast<unsigned>(ps.get_integer("p"));
                Rational v = factorial_value(n) * stirling2(p, static_cast<unsigned>(n));
                return alternating_sign(static_cast<unsigned long>(n)) < 0 ? -v : v;
            },
        .valid_from = fixed(1),
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 1); },
        .default_grid = int_grid("p", 1, 10),
    });

    reg.add({
        .id = "unsigned_power_expansion",
        .description = "sum C(n,k) k^p x^k = sum_j C(n,j) S(p,j) j! x^j (1+x)^(n-j)",
        .params = {{"p", ParamKind::integer}, {"x", ParamKind::rational}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const long p = ps.get_integer("p");
                const Rational& x = ps.get("x");
                return plain_sum(n,
                                 [&](long k) { return Rational{k}.pow(p) * x.pow(k); });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned p = static_cast<unsigned>(ps.get_integer("p"));
                return stirling_expansion(p, static_cast<unsigned long>(n), ps.get("x"));
            },
        .valid_from = fixed(0),
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 1); },
        .default_grid = cross(int_grid("p", 1, 4), value_grid("x", {"1/2", "2", "-3", "-1"})),
    });

    reg.add({
        .id = "nnabla_xn_rule",
        .description =
            "(n nabla)^p x^n = sum_j C(n,j) S(p,j) j! (x-1)^j x^(n-j)  (n >= p)",
        .params = {{"p", ParamKind::integer}, {"x", ParamKind::rational}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const unsigned p = static_cast<unsigned>(ps.get_integer("p"));
                const Sequence s = geometric(static_cast<std::size_t>(n) + 1, ps.get("x"));
                return n_nabla_pow(s, p).at(static_cast<std::size_t>(n));
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned p = static_cast<unsigned>(ps.get_integer("p"));
                return stirling_expansion(p, static_cast<unsigned long>(n),
                                          ps.get("x") - Rational{1});
            },
        .valid_from = [](const ParamSet& ps) { return ps.get_integer("p"); },
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 1); },
        .default_grid = cross(int_grid("p", 1, 4), value_grid("x", {"1/2", "2", "-3", "-1"})),
        .note = "corrected operand order: the sometimes-quoted variant with "
                "(-1)^j x^j (1-x)^(n-j) exchanges x and 1-x and fails the operator "
                "evaluation at p=1, n=1, x=2 (n nabla x^n gives 1, the variant -2); "
                "the two readings coincide at x = 1/2",
    });

    reg.add({
        .id = "sigma_truncate",
        .description =
            "sum C(n,k)(-1)^(k-1) sigma_k(q) = (-1)^(n-1) (n-1)! S(q+1,n); 0 for n > q+1",
        .params = {{"q", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const unsigned q = static_cast<unsigned>(ps.get_integer("q"));
                const Sequence sigma = power_sum(static_cast<std::size_t>(n) + 1, q);
                return alt_sum(n, [&](long k) { return sigma.at(static_cast<std::size_t>(k)); });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned q = static_cast<unsigned>(ps.get_integer("q"));
                Rational v = factorial_value(n - 1) * stirling2(q + 1, static_cast<unsigned>(n));
                return alternating_sign(static_cast<unsigned long>(n)) < 0 ? -v : v;
            },
        .valid_from = fixed(1),
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "q", 0); },
        .default_grid = int_grid("q", 0, 6),
    });

    reg.add({
        .id = "stirling_avg",
        .description = "sum C(n,k) k! S(q,k)/(k+1) = sigma_n(q)/(n+1)",
        .params = {{"q", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const unsigned q = static_cast<unsigned>(ps.get_integer("q"));
                const StirlingTable table(q);
                return plain_sum(n, [&](long k) {
                    const Rational s{table.at(q, static_cast<unsigned>(k))};
                    return factorial_value(k) * s / Rational{k + 1};
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned q = static_cast<unsigned>(ps.get_integer("q"));
                const Sequence sigma = power_sum(static_cast<std::size_t>(n) + 1, q);
                return sigma.at(static_cast<std::size_t>(n)) / Rational{n + 1};
            },
        .valid_from = fixed(1),
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "q", 1); },
        .default_grid = int_grid("q", 1, 6),
    });
}

// --- family: harmonic numbers ---

void add_harmonic_family(IdentityRegistry& reg)
{
    reg.add({
        .id = "harmonic_bt",
        .description = "sum C(n,k)(-1)^(k-1)/k = H_n",
        .lhs =
            [](long n, const ParamSet&) {
                return alt_sum(n, [](long k) { return k == 0 ? Rational{} : Rational{1, k}; });
            },
        .rhs = [](long n, const ParamSet&) { return harmonic_value(n); },
    });

    reg.add({
        .id = "inv_harmonic",
        .description = "sum C(n,k)(-1)^(k-1) H_k = 1/n",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) { return h.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return Rational{1, n}; },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "h_over_k",
        .description = "sum C(n,k)(-1)^(k-1) H_k/k = H_n^(2)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) {
                    return k == 0 ? Rational{}
                                  : h.at(static_cast<std::size_t>(k)) / Rational{k};
                });
            },
        .rhs = [](long n, const ParamSet&) { return gen_harmonic_value(n, 2); },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "dilcher",
        .description = "sum C(n,k)(-1)^(k-1)/k^m = sum 1/(k_1...k_m), k_1<=...<=k_m<=n",
        .params = {{"m", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const long m = ps.get_integer("m");
                return alt_sum(n, [&](long k) {
                    return k == 0 ? Rational{} : Rational{1, k}.pow(m);
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned m = static_cast<unsigned>(ps.get_integer("m"));
                return multiple_harmonic_sum(static_cast<std::size_t>(n) + 1, m)
                    .at(static_cast<std::size_t>(n));
            },
        .valid_from = fixed(1),
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "m", 1); },
        .default_grid = int_grid("m", 1, 5),
    });

    reg.add({
        .id = "harmonic_k",
        .description = "sum C(n,k)(-1)^(k-1) k H_k = -1/(n-1)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(
                    n, [&](long k) { return Rational{k} * h.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return Rational{-1, n - 1}; },
        .valid_from = fixed(2),
    });

    reg.add({
        .id = "harmonic_k2",
        .description = "sum C(n,k)(-1)^(k-1) k^2 H_k = n/((n-1)(n-2))",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) {
                    return Rational{k * k} * h.at(static_cast<std::size_t>(k));
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return Rational{n} / Rational{(n - 1) * (n - 2)};
            },
        .valid_from = fixed(3),
    });

    reg.add({
        .id = "harmonic_kp",
        .description =
            "sum C(n,k)(-1)^(k-1) k^p H_k = (-1)^(n-1) n! S(p,n) H_n "
            "+ sum_{k=1}^{n-1} (-1)^k k! S(p,k)/(n-k)",
        .params = {{"p", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const long p = ps.get_integer("p");
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) {
                    return Rational{k}.pow(p) * h.at(static_cast<std::size_t>(k));
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned p = static_cast<unsigned>(ps.get_integer("p"));
                const StirlingTable table(p);
                Rational first = factorial_value(n) *
                                 Rational{table.at(p, static_cast<unsigned>(n))} *
                                 harmonic_value(n);
                if (alternating_sign(static_cast<unsigned long>(n)) < 0) {
                    first = -first;
                }
                Rational tail;
                for (long k = 1; k <= n - 1; ++k) {
                    Rational term = factorial_value(k) *
                                    Rational{table.at(p, static_cast<unsigned>(k))} /
                                    Rational{n - k};
                    if (k % 2 == 1) {
                        tail -= term;
                    } else {
                        tail += term;
                    }
                }
                return first + tail;
            },
        .valid_from = fixed(1),
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 1); },
        .default_grid = int_grid("p", 1, 4),
    });

    reg.add({
        .id = "nnabla_inv_n",
        .description = "(n nabla)^p (1/n) = sum_{k=1}^{n-1} (-1)^k k! S(p,k)/(n-k)  (n > p)",
        .params = {{"p", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const unsigned p = static_cast<unsigned>(ps.get_integer("p"));
                return n_nabla_pow(reciprocal_prefix(n), p).at(static_cast<std::size_t>(n));
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const unsigned p = static_cast<unsigned>(ps.get_integer("p"));
                const StirlingTable table(p);
                Rational sum;
                for (long k = 1; k <= n - 1; ++k) {
                    Rational term = factorial_value(k) *
                                    Rational{table.at(p, static_cast<unsigned>(k))} /
                                    Rational{n - k};
                    if (k % 2 == 1) {
                        sum -= term;
                    } else {
                        sum += term;
                    }
                }
                return sum;
            },
        .valid_from = [](const ParamSet& ps) { return ps.get_integer("p") + 1; },
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 1); },
        .default_grid = int_grid("p", 1, 4),
    });
}

// --- family: squared harmonic / generalized harmonic ---

void add_harmonic_power_family(IdentityRegistry& reg)
{
    const auto h_pair = [](const Sequence& h, const Sequence& h2, long k) {
        const auto i = static_cast<std::size_t>(k);
        return h.at(i) * h.at(i) + h2.at(i);
    };

    reg.add({
        .id = "h2_pair_inv",
        .description = "sum C(n,k)(-1)^(k-1) (H_k^2 + H_k^(2)) = 2/n^2",
        .lhs =
            [h_pair](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(n, [&](long k) { return h_pair(h, h2, k); });
            },
        .rhs = [](long n, const ParamSet&) { return Rational{2} / Rational{n * n}; },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "h2_pair_k",
        .description = "sum C(n,k)(-1)^(k-1) k (H_k^2 + H_k^(2)) = 2(1-2n)/(n(n-1)^2)",
        .lhs =
            [h_pair](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(n, [&](long k) { return Rational{k} * h_pair(h, h2, k); });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return Rational{2 * (1 - 2 * n)} / (Rational{n} * Rational{n - 1}.pow(2));
            },
        .valid_from = fixed(2),
    });

    reg.add({
        .id = "h2_pair_k2",
        .description =
            "sum C(n,k)(-1)^(k-1) k^2 (H_k^2 + H_k^(2)) = 2(4n^2-9n+4)/((n-1)^2 (n-2)^2)",
        .lhs =
            [h_pair](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(n,
                               [&](long k) { return Rational{k * k} * h_pair(h, h2, k); });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return Rational{2 * (4 * n * n - 9 * n + 4)} /
                       (Rational{n - 1}.pow(2) * Rational{n - 2}.pow(2));
            },
        .valid_from = fixed(3),
        .note = "closed form obtained by applying n*nabla to the k^1 result; the "
                "sometimes-quoted 4/((n-1)(n-2)) fails direct summation at n=3 "
                "(sum is 13/2, not 2)",
    });

    reg.add({
        .id = "h2_pair_k3",
        .description = "sum C(n,k)(-1)^(k-1) k^3 (H_k^2 + H_k^(2)) = "
                       "2n(-8n^3+39n^2-54n+19)/((n-1)^2 (n-2)^2 (n-3)^2)",
        .lhs =
            [h_pair](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(
                    n, [&](long k) { return Rational{k * k * k} * h_pair(h, h2, k); });
            },
        .rhs =
            [](long n, const ParamSet&) {
                const long cubic = -8 * n * n * n + 39 * n * n - 54 * n + 19;
                return Rational{2 * n} * Rational{cubic} /
                       (Rational{n - 1}.pow(2) * Rational{n - 2}.pow(2) *
                        Rational{n - 3}.pow(2));
            },
        .valid_from = fixed(4),
        .note = "closed form obtained by applying n*nabla to the corrected k^2 result; "
                "the sometimes-quoted 8n(n-2)/((n-1)(n-3)) fails direct summation at n=4 "
                "(sum is -170/9, not 64/3)",
    });

    reg.add({
        .id = "h2_pair_over_k",
        .description = "sum C(n,k)(-1)^(k-1) (H_k^2 + H_k^(2))/k = 2 H_n^(3)",
        .lhs =
            [h_pair](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(n, [&](long k) {
                    return k == 0 ? Rational{} : h_pair(h, h2, k) / Rational{k};
                });
            },
        .rhs = [](long n, const ParamSet&) { return Rational{2} * gen_harmonic_value(n, 3); },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "h3_inv",
        .description = "sum C(n,k)(-1)^(k-1) H_k^(3) = (H_n^2 + H_n^(2))/(2n)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h3 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 3);
                return alt_sum(n, [&](long k) { return h3.at(static_cast<std::size_t>(k)); });
            },
        .rhs =
            [](long n, const ParamSet&) {
                const Rational h = harmonic_value(n);
                return (h * h + gen_harmonic_value(n, 2)) / Rational{2 * n};
            },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "h2_inv",
        .description = "sum C(n,k)(-1)^(k-1) H_k^(2) = H_n/n",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(n, [&](long k) { return h2.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return harmonic_value(n) / Rational{n}; },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "h2_k",
        .description = "sum C(n,k)(-1)^(k-1) k H_k^(2) = (1 - H_n)/(n-1)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(
                    n, [&](long k) { return Rational{k} * h2.at(static_cast<std::size_t>(k)); });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return (Rational{1} - harmonic_value(n)) / Rational{n - 1};
            },
        .valid_from = fixed(2),
    });

    reg.add({
        .id = "h2_k2",
        .description = "sum C(n,k)(-1)^(k-1) k^2 H_k^(2) = (1 - 2n + n H_n)/((n-1)(n-2))",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h2 = generalized_harmonic(static_cast<std::size_t>(n) + 1, 2);
                return alt_sum(n, [&](long k) {
                    return Rational{k * k} * h2.at(static_cast<std::size_t>(k));
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return (Rational{1 - 2 * n} + Rational{n} * harmonic_value(n)) /
                       Rational{(n - 1) * (n - 2)};
            },
        .valid_from = fixed(3),
    });

    reg.add({
        .id = "h_squared",
        .description = "sum C(n,k)(-1)^(k-1) H_k^2 = 2/n^2 - H_n/n",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) {
                    const auto& v = h.at(static_cast<std::size_t>(k));
                    return v * v;
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return Rational{2} / Rational{n * n} - harmonic_value(n) / Rational{n};
            },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "h_squared_k",
        .description =
            "sum C(n,k)(-1)^(k-1) k H_k^2 = H_n/(n-1) + (2 - 3n - n^2)/(n(n-1)^2)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) {
                    const auto& v = h.at(static_cast<std::size_t>(k));
                    return Rational{k} * v * v;
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return harmonic_value(n) / Rational{n - 1} +
                       Rational{2 - 3 * n - n * n} / (Rational{n} * Rational{n - 1}.pow(2));
            },
        .valid_from = fixed(2),
        .note = "validated against direct summation (difference of the k-weighted "
                "pair results)",
    });
}

// --- family: geometric sequences x^k ---

void add_geometric_family(IdentityRegistry& reg)
{
    const auto x_grid = value_grid("x", {"1/2", "2", "-3", "-1"});

    reg.add({
        .id = "geometric_bt",
        .description = "sum C(n,k)(-1)^(k-1) x^k = -(1-x)^n",
        .params = {{"x", ParamKind::rational}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const Rational& x = ps.get("x");
                return alt_sum(n, [&](long k) { return x.pow(k); });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                return -(Rational{1} - ps.get("x")).pow(n);
            },
        .default_grid = x_grid,
    });

    reg.add({
        .id = "geometric_inv",
        .description = "sum C(n,k)(-1)^(k-1) (1 - (1-x)^k) = x^n",
        .params = {{"x", ParamKind::rational}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const Rational one_minus_x = Rational{1} - ps.get("x");
                return alt_sum(n, [&](long k) {
                    return Rational{1} - one_minus_x.pow(k);
                });
            },
        .rhs = [](long n, const ParamSet& ps) { return ps.get("x").pow(n); },
        .valid_from = fixed(1),
        .default_grid = x_grid,
    });

    reg.add({
        .id = "geometric_over_k",
        .description = "sum C(n,k)(-1)^(k-1) (1 - (1-x)^k)/k = sum_{k<=n} x^k/k",
        .params = {{"x", ParamKind::rational}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const Rational one_minus_x = Rational{1} - ps.get("x");
                return alt_sum(n, [&](long k) {
                    return k == 0 ? Rational{}
                                  : (Rational{1} - one_minus_x.pow(k)) / Rational{k};
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const Rational& x = ps.get("x");
                Rational sum;
                for (long k = 1; k <= n; ++k) {
                    sum += x.pow(k) / Rational{k};
                }
                return sum;
            },
        .valid_from = fixed(1),
        .default_grid = x_grid,
    });
}

// --- family: skew-harmonic numbers ---

void add_skew_family(IdentityRegistry& reg)
{
    reg.add({
        .id = "skew_pre",
        .description = "sum C(n,k)(-1)^(k-1) (1-2^k)/k = -Hbar_n",
        .lhs =
            [](long n, const ParamSet&) {
                return alt_sum(n, [&](long k) {
                    return k == 0 ? Rational{}
                                  : (Rational{1} - Rational{2}.pow(k)) / Rational{k};
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return -skew_harmonic(static_cast<std::size_t>(n) + 1)
                            .at(static_cast<std::size_t>(n));
            },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "skew_inv",
        .description = "sum C(n,k)(-1)^(k-1) Hbar_k = (2^n - 1)/n",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence hs = skew_harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) { return hs.at(static_cast<std::size_t>(k)); });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return (Rational{2}.pow(n) - Rational{1}) / Rational{n};
            },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "skew_k",
        .description = "sum C(n,k)(-1)^(k-1) k Hbar_k = 2^(n-1)(n-2)/(n-1) + 1/(n-1)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence hs = skew_harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(
                    n, [&](long k) { return Rational{k} * hs.at(static_cast<std::size_t>(k)); });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return Rational{2}.pow(n - 1) * Rational{n - 2, n - 1} +
                       Rational{1, n - 1};
            },
        .valid_from = fixed(2),
    });

    reg.add({
        .id = "skew_over_k",
        .description = "sum C(n,k)(-1)^(k-1) Hbar_k/k = sum_{k<=n} 2^k/k^2 - H_n^(2)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence hs = skew_harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) {
                    return k == 0 ? Rational{}
                                  : hs.at(static_cast<std::size_t>(k)) / Rational{k};
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                Rational sum;
                for (long k = 1; k <= n; ++k) {
                    sum += Rational{2}.pow(k) / Rational{k * k};
                }
                return sum - gen_harmonic_value(n, 2);
            },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "skew_over_k1",
        .description =
            "sum C(n,k)(-1)^(k-1) Hbar_k/(k+1) = (sum_{k<=n} 2^k/k - H_n)/(n+1)",
        .lhs =
            [](long n, const ParamSet&) {
                const Sequence hs = skew_harmonic(static_cast<std::size_t>(n) + 1);
                return alt_sum(n, [&](long k) {
                    return hs.at(static_cast<std::size_t>(k)) / Rational{k + 1};
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                Rational sum;
                for (long k = 1; k <= n; ++k) {
                    sum += Rational{2}.pow(k) / Rational{k};
                }
                return (sum - harmonic_value(n)) / Rational{n + 1};
            },
        .valid_from = fixed(1),
    });
}

// --- family: Fibonacci and Lucas numbers ---

void add_fibonacci_family(IdentityRegistry& reg)
{
    const auto fib_prefix = [](long n) { return fibonacci(static_cast<std::size_t>(n) + 1); };
    const auto lucas_prefix = [](long n) { return lucas(static_cast<std::size_t>(n) + 1); };

    reg.add({
        .id = "fib_self",
        .description = "sum C(n,k)(-1)^(k-1) F_k = F_n",
        .lhs =
            [fib_prefix](long n, const ParamSet&) {
                const Sequence f = fib_prefix(n);
                return alt_sum(n, [&](long k) { return f.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return fibonacci_at(n); },
    });

    reg.add({
        .id = "fib_k",
        .description = "sum C(n,k)(-1)^(k-1) k F_k = n F_(n-2)",
        .lhs =
            [fib_prefix](long n, const ParamSet&) {
                const Sequence f = fib_prefix(n);
                return alt_sum(
                    n, [&](long k) { return Rational{k} * f.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return Rational{n} * fibonacci_at(n - 2); },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "fib_k2",
        .description = "sum C(n,k)(-1)^(k-1) k^2 F_k = n^2 F_(n-4) + n F_(n-3)",
        .lhs =
            [fib_prefix](long n, const ParamSet&) {
                const Sequence f = fib_prefix(n);
                return alt_sum(n, [&](long k) {
                    return Rational{k * k} * f.at(static_cast<std::size_t>(k));
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return Rational{n * n} * fibonacci_at(n - 4) +
                       Rational{n} * fibonacci_at(n - 3);
            },
        .valid_from = fixed(2),
    });

    reg.add({
        .id = "fib_lucas_unsigned",
        .description = "sum C(n,k) F_k = F_(2n)",
        .lhs =
            [fib_prefix](long n, const ParamSet&) {
                const Sequence f = fib_prefix(n);
                return plain_sum(n, [&](long k) { return f.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return fibonacci_at(2 * n); },
    });

    reg.add({
        .id = "fib_lucas_unsigned_k",
        .description = "sum C(n,k) k F_k = n F_(2n-1)",
        .lhs =
            [fib_prefix](long n, const ParamSet&) {
                const Sequence f = fib_prefix(n);
                return plain_sum(
                    n, [&](long k) { return Rational{k} * f.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return Rational{n} * fibonacci_at(2 * n - 1); },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "fib_lucas_unsigned_k2",
        .description = "sum C(n,k) k^2 F_k = n^2 F_(2n-2) + n F_(2n-3)",
        .lhs =
            [fib_prefix](long n, const ParamSet&) {
                const Sequence f = fib_prefix(n);
                return plain_sum(n, [&](long k) {
                    return Rational{k * k} * f.at(static_cast<std::size_t>(k));
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return Rational{n * n} * fibonacci_at(2 * n - 2) +
                       Rational{n} * fibonacci_at(2 * n - 3);
            },
        .valid_from = fixed(1),
    });

    reg.add({
        .id = "lucas_pair",
        .description = "sum C(n,k)(-1)^k L_k = L_n",
        .lhs =
            [lucas_prefix](long n, const ParamSet&) {
                const Sequence l = lucas_prefix(n);
                return -alt_sum(n, [&](long k) { return l.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return lucas_at(n); },
    });

    reg.add({
        .id = "lucas_pair_unsigned",
        .description = "sum C(n,k) L_k = L_(2n)",
        .lhs =
            [lucas_prefix](long n, const ParamSet&) {
                const Sequence l = lucas_prefix(n);
                return plain_sum(n, [&](long k) { return l.at(static_cast<std::size_t>(k)); });
            },
        .rhs = [](long n, const ParamSet&) { return lucas_at(2 * n); },
    });

    reg.add({
        .id = "fib_avg",
        .description = "sum C(n,k)(-1)^(k-1) F_k/(k+1) = (F_(n+2) - 1)/(n+1)",
        .lhs =
            [fib_prefix](long n, const ParamSet&) {
                const Sequence f = fib_prefix(n);
                return alt_sum(n, [&](long k) {
                    return f.at(static_cast<std::size_t>(k)) / Rational{k + 1};
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return (fibonacci_at(n + 2) - Rational{1}) / Rational{n + 1};
            },
    });

    reg.add({
        .id = "lucas_avg",
        .description = "sum C(n,k)(-1)^k L_k/(k+1) = (L_(n+2) - 1)/(n+1)",
        .lhs =
            [lucas_prefix](long n, const ParamSet&) {
                const Sequence l = lucas_prefix(n);
                return -alt_sum(n, [&](long k) {
                    return l.at(static_cast<std::size_t>(k)) / Rational{k + 1};
                });
            },
        .rhs =
            [](long n, const ParamSet&) {
                return (lucas_at(n + 2) - Rational{1}) / Rational{n + 1};
            },
    });
}

// --- family: division by k + lambda ---

void add_lambda_family(IdentityRegistry& reg)
{
    const auto harmonic_lambda_lhs = [](long n, const Rational& lambda) {
        const Sequence h = harmonic(static_cast<std::size_t>(n) + 1);
        return alt_sum(n, [&](long k) {
            return h.at(static_cast<std::size_t>(k)) / (Rational{k} + lambda);
        });
    };

    reg.add({
        .id = "harmonic_lambda",
        .description = "sum C(n,k)(-1)^(k-1) H_k/(k+lambda) = "
                       "n! sum_m 1/(m m! (lambda+m)...(lambda+n))",
        .params = {{"lambda", ParamKind::rational}},
        .lhs = [harmonic_lambda_lhs](long n,
                                     const ParamSet& ps) { return harmonic_lambda_lhs(n, ps.get("lambda")); },
        .rhs =
            [](long n, const ParamSet& ps) {
                // weighted partial sums of b_m = 1/m (the transform of H)
                return divided_transform(reciprocal_prefix(n), ps.get("lambda"))
                    .at(static_cast<std::size_t>(n));
            },
        .valid_from = fixed(1),
        .constraint =
            [](const ParamSet& ps) {
                const Rational& lambda = ps.get("lambda");
                if (lambda.is_integer() && lambda.sign() < 0) {
                    return std::string{"lambda is a forbidden negative integer"};
                }
                return std::string{};
            },
        .default_grid = value_grid("lambda", {"1", "2", "3", "4", "1/2", "-1/2"}),
    });

    const struct {
        const char* id;
        const char* description;
        Rational lambda;
        IdentitySpec::Evaluator rhs;
    } closed_forms[] = {
        {"harmonic_lambda_1", "sum C(n,k)(-1)^(k-1) H_k/(k+1) = H_n/(n+1)", Rational{1},
         [](long n, const ParamSet&) { return harmonic_value(n) / Rational{n + 1}; }},
        {"harmonic_lambda_2", "sum C(n,k)(-1)^(k-1) H_k/(k+2) = (H_n + n)/((n+1)(n+2))",
         Rational{2},
         [](long n, const ParamSet&) {
             return (harmonic_value(n) + Rational{n}) / Rational{(n + 1) * (n + 2)};
         }},
        {"harmonic_lambda_3",
         "sum C(n,k)(-1)^(k-1) H_k/(k+3) = (n^2 + 7n + 4H_n)/(2(n+1)(n+2)(n+3))", Rational{3},
         [](long n, const ParamSet&) {
             return (Rational{n * n + 7 * n} + Rational{4} * harmonic_value(n)) /
                    Rational{2 * (n + 1) * (n + 2) * (n + 3)};
         }},
        {"harmonic_lambda_4",
         "sum C(n,k)(-1)^(k-1) H_k/(k+4) = "
         "(2n^3 + 21n^2 + 85n + 36H_n)/(6(n+1)(n+2)(n+3)(n+4))",
         Rational{4},
         [](long n, const ParamSet&) {
             return (Rational{2 * n * n * n + 21 * n * n + 85 * n} +
                     Rational{36} * harmonic_value(n)) /
                    Rational{6 * (n + 1) * (n + 2) * (n + 3) * (n + 4)};
         }},
    };
    for (const auto& row : closed_forms) {
        reg.add({
            .id = row.id,
            .description = row.description,
            .lhs =
                [harmonic_lambda_lhs, lambda = row.lambda](long n, const ParamSet&) {
                    return harmonic_lambda_lhs(n, lambda);
                },
            .rhs = row.rhs,
            .valid_from = fixed(1),
        });
    }

    reg.add({
        .id = "reciprocal_shift",
        .description = "sum C(n,k)(-1)^k/(k+lambda) = n!/(lambda(lambda+1)...(lambda+n))",
        .params = {{"lambda", ParamKind::rational}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const Rational& lambda = ps.get("lambda");
                return -alt_sum(n, [&](long k) {
                    return Rational{1} / (Rational{k} + lambda);
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const Rational& lambda = ps.get("lambda");
                return factorial_value(n) / rising_product(lambda, 0, n);
            },
        .valid_from = fixed(0),
        .constraint =
            [](const ParamSet& ps) {
                const Rational& lambda = ps.get("lambda");
                if (lambda.is_integer() && lambda.sign() <= 0) {
                    return std::string{"lambda is a forbidden non-positive integer"};
                }
                return std::string{};
            },
        .default_grid = value_grid("lambda", {"1", "2", "3", "4", "1/2", "-1/2"}),
    });
}

// --- family: Laguerre polynomial values ---

void add_laguerre_family(IdentityRegistry& reg)
{
    const auto minus_x_pow_over_fact = [](const Rational& x, long k) {
        return (-x).pow(k) / Rational{Integer::factorial(static_cast<unsigned long>(k))};
    };

    reg.add({
        .id = "laguerre_sum",
        .description = "sum C(n,k) (-x)^k/k! = L_n(x)",
        .params = {{"x", ParamKind::rational}},
        .lhs =
            [minus_x_pow_over_fact](long n, const ParamSet& ps) {
                const Rational& x = ps.get("x");
                return plain_sum(n, [&](long k) { return minus_x_pow_over_fact(x, k); });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                return laguerre(static_cast<std::size_t>(n) + 1, ps.get("x"))
                    .at(static_cast<std::size_t>(n));
            },
        .default_grid = value_grid("x", {"1/2", "2", "-3"}),
    });

    reg.add({
        .id = "laguerre_over_k",
        .description = "sum C(n,k) (-x)^k/(k! k) = sum_{k<=n} L_k(x)/k - H_n",
        .params = {{"x", ParamKind::rational}},
        .lhs =
            [minus_x_pow_over_fact](long n, const ParamSet& ps) {
                const Rational& x = ps.get("x");
                return plain_sum(n, [&](long k) {
                    return k == 0 ? Rational{} : minus_x_pow_over_fact(x, k) / Rational{k};
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const Sequence lag = laguerre(static_cast<std::size_t>(n) + 1, ps.get("x"));
                Rational sum;
                for (long k = 1; k <= n; ++k) {
                    sum += lag.at(static_cast<std::size_t>(k)) / Rational{k};
                }
                return sum - harmonic_value(n);
            },
        .valid_from = fixed(1),
        .default_grid = value_grid("x", {"1/2", "2", "-3"}),
    });

    reg.add({
        .id = "laguerre_avg",
        .description = "sum C(n,k) (-x)^k/(k!(k+1)) = (sum_{k<=n} (L_k(x) - 1))/(n+1)",
        .params = {{"x", ParamKind::rational}},
        .lhs =
            [minus_x_pow_over_fact](long n, const ParamSet& ps) {
                const Rational& x = ps.get("x");
                return plain_sum(n, [&](long k) {
                    return k == 0 ? Rational{}
                                  : minus_x_pow_over_fact(x, k) / Rational{k + 1};
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const Sequence lag = laguerre(static_cast<std::size_t>(n) + 1, ps.get("x"));
                Rational sum;
                for (long k = 1; k <= n; ++k) {
                    sum += lag.at(static_cast<std::size_t>(k)) - Rational{1};
                }
                return sum / Rational{n + 1};
            },
        .valid_from = fixed(1),
        .default_grid = value_grid("x", {"1/2", "2", "-3"}),
    });
}

// --- family: Vandermonde convolution ---

void add_vandermonde_family(IdentityRegistry& reg)
{
    reg.add({
        .id = "vandermonde",
        .description = "sum C(n,k) C(p,k) = C(p+n, p)",
        .params = {{"p", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const auto p = static_cast<unsigned long>(ps.get_integer("p"));
                return plain_sum(
                    n, [&](long k) { return binomial(p, static_cast<unsigned long>(k)); });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const long p = ps.get_integer("p");
                return binomial(static_cast<unsigned long>(p + n),
                                static_cast<unsigned long>(p));
            },
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 0); },
        .default_grid = int_grid("p", 0, 6),
    });

    reg.add({
        .id = "vandermonde_k",
        .description = "sum C(n,k) C(p,k) k = n C(p+n-1, p-1)",
        .params = {{"p", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const auto p = static_cast<unsigned long>(ps.get_integer("p"));
                return plain_sum(n, [&](long k) {
                    return Rational{k} * binomial(p, static_cast<unsigned long>(k));
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const long p = ps.get_integer("p");
                if (p == 0) {
                    return Rational{};  // C(n-1, -1) = 0
                }
                return Rational{n} * binomial(static_cast<unsigned long>(p + n - 1),
                                              static_cast<unsigned long>(p - 1));
            },
        .valid_from = fixed(1),
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 0); },
        .default_grid = int_grid("p", 0, 6),
    });

    reg.add({
        .id = "vandermonde_avg",
        .description = "sum C(n,k) C(p,k)/(k+1) = C(p+n+1, p+1)/(n+1)",
        .params = {{"p", ParamKind::integer}},
        .lhs =
            [](long n, const ParamSet& ps) {
                const auto p = static_cast<unsigned long>(ps.get_integer("p"));
                return plain_sum(n, [&](long k) {
                    return binomial(p, static_cast<unsigned long>(k)) / Rational{k + 1};
                });
            },
        .rhs =
            [](long n, const ParamSet& ps) {
                const long p = ps.get_integer("p");
                return binomial(static_cast<unsigned long>(p + n + 1),
                                static_cast<unsigned long>(p + 1)) /
                       Rational{n + 1};
            },
        .constraint = [](const ParamSet& ps) { return require_int_at_least(ps, "p", 0); },
        .default_grid = int_grid("p", 0, 6),
    });
}

}  // namespace

IdentityRegistry register_builtin_identities()
{
    IdentityRegistry reg;
    add_stirling_family(reg);
    add_harmonic_family(reg);
    add_harmonic_power_family(reg);
    add_geometric_family(reg);
    add_skew_family(reg);
    add_fibonacci_family(reg);
    add_lambda_family(reg);
    add_laguerre_family(reg);
    add_vandermonde_family(reg);
    return reg;
}

}  // namespace bintrans
