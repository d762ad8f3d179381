#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bintrans/rational.hpp"

namespace bintrans {

/// Named exact parameters (lambda, x, p, q, m, ...) bound into an identity
/// at verification time. Values are exact rationals; integer-kind
/// parameters are validated against the identity's schema when bound.
class ParamSet {
  public:
    ParamSet() = default;

    ParamSet& set(const std::string& name, Rational value)
    {
        values_[name] = std::move(value);
        return *this;
    }

    bool contains(const std::string& name) const { return values_.count(name) != 0; }
    bool empty() const { return values_.empty(); }

    /// Throws std::out_of_range when the parameter is missing.
    const Rational& get(const std::string& name) const;

    /// Integer parameter as a machine long; throws std::domain_error when
    /// the bound value is not an integer.
    long get_integer(const std::string& name) const { return get(name).to_long(); }

    /// "name=value,..." in name order; "-" when empty.
    std::string str() const;

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

  private:
    std::map<std::string, Rational> values_;
};

enum class ParamKind { integer, rational };

struct ParamSpec {
    std::string name;
    ParamKind kind;
};

struct Counterexample {
    long n = 0;
    Rational lhs;
    Rational rhs;
};

/// Outcome of checking one identity, with one bound parameter set, over
/// [n_min, n_max]. A fail always carries the first counterexample.
struct VerificationReport {
    enum class Status { pass, fail, skipped };

    std::string identity_id;
    ParamSet params;
    long n_min = 0;
    long n_max = 0;
    Status status = Status::pass;
    std::string skip_reason;  // set when skipped
    std::optional<Counterexample> counterexample;
};

/// One key=value record per line; rationals as "p/q" with "/q" omitted when
/// the denominator is 1; counterexample fields only on fail; the skip
/// reason double-quoted.
std::string machine_line(const VerificationReport& report);

/// One aligned PASS/FAIL/SKIP line for terminal output.
std::string human_line(const VerificationReport& report);

/// A named, parameterized identity: LHS by direct summation, RHS closed
/// form, both exact. The LHS must stay independent of any operator
/// shortcut the identity itself is exercising, so a pass is double-entry
/// verification.
struct IdentitySpec {
    using Evaluator = std::function<Rational(long n, const ParamSet&)>;

    std::string id;
    std::string description;  // the identity, in plain math text
    std::vector<ParamSpec> params;
    Evaluator lhs;
    Evaluator rhs;
    /// Smallest n at which the identity is claimed.
    std::function<long(const ParamSet&)> valid_from = [](const ParamSet&) { return 0L; };
    /// Nonempty result = reason this parameter binding cannot be evaluated.
    std::function<std::string(const ParamSet&)> constraint =
        [](const ParamSet&) { return std::string{}; };
    /// Parameter bindings swept by verify_all; exactly {{}} when the
    /// identity has no parameters.
    std::vector<ParamSet> default_grid = {ParamSet{}};
    std::string note;  // remarks, e.g. corrected closed forms
};

/// Immutable-after-registration catalog of identities, with exact
/// verification over concrete index ranges. Verification calls are pure
/// and independent; a registry may be shared across threads once built.
class IdentityRegistry {
  public:
    /// Throws std::invalid_argument on a duplicate id or an ill-formed spec.
    void add(IdentitySpec spec);

    bool contains(const std::string& id) const { return specs_.count(id) != 0; }

    /// Throws std::out_of_range for unknown ids.
    const IdentitySpec& lookup(const std::string& id) const;

    std::vector<std::string> ids() const;  // sorted
    std::size_t size() const { return specs_.size(); }

    /// Checks one identity with fully bound parameters over
    /// [valid_from(params), n_max]. Throws std::invalid_argument when the
    /// binding does not satisfy the schema; returns a skipped report when
    /// n_max is below valid_from or a value constraint is violated.
    VerificationReport verify(const std::string& id, long n_max, const ParamSet& params) const;

    /// Sweeps the identity's default grid, keeping only bindings that agree
    /// with every parameter given in `partial`. When `partial` fully binds
    /// the schema it is used directly (one report), whether or not it is on
    /// the grid.
    std::vector<VerificationReport> verify_matching(const std::string& id, long n_max,
                                                    const ParamSet& partial) const;

    /// Every identity over its documented default grid, reports ordered by
    /// id (then grid order).
    std::vector<VerificationReport> verify_all(long n_max) const;

  private:
    std::map<std::string, IdentitySpec> specs_;
};

/// The built-in catalog: every identity this toolkit ships, keyed by id.
IdentityRegistry register_builtin_identities();

}  // namespace bintrans
