#include "bintrans/identities.hpp"

#include <sstream>
#include <stdexcept>

namespace bintrans {

const Rational& ParamSet::get(const std::string& name) const
{
    const auto it = values_.find(name);
    if (it == values_.end()) {
        throw std::out_of_range("parameter '" + name + "' is not bound");
    }
    return it->second;
}

std::string ParamSet::str() const
{
    if (values_.empty()) {
        return "-";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : values_) {
        if (!first) {
            os << ',';
        }
        os << name << '=' << value;
        first = false;
    }
    return os.str();
}

std::string machine_line(const VerificationReport& report)
{
    std::ostringstream os;
    os << "id=" << report.identity_id << " params=" << report.params.str()
       << " n_min=" << report.n_min << " n_max=" << report.n_max << " status=";
    switch (report.status) {
        case VerificationReport::Status::pass:
            os << "pass";
            break;
        case VerificationReport::Status::fail:
            os << "fail";
            if (report.counterexample) {
                os << " counterexample.n=" << report.counterexample->n
                   << " counterexample.lhs=" << report.counterexample->lhs
                   << " counterexample.rhs=" << report.counterexample->rhs;
            }
            break;
        case VerificationReport::Status::skipped:
            os << "skipped reason=\"" << report.skip_reason << '"';
            break;
    }
    return os.str();
}

std::string human_line(const VerificationReport& report)
{
    std::ostringstream os;
    switch (report.status) {
        case VerificationReport::Status::pass:
            os << "PASS  ";
            break;
        case VerificationReport::Status::fail:
            os << "FAIL  ";
            break;
        case VerificationReport::Status::skipped:
            os << "SKIP  ";
            break;
    }
    os << report.identity_id;
    if (!report.params.empty()) {
        os << "  " << report.params.str();
    }
    if (report.status == VerificationReport::Status::skipped) {
        os << "  (" << report.skip_reason << ')';
    } else {
        os << "  n=[" << report.n_min << ',' << report.n_max << ']';
    }
    if (report.status == VerificationReport::Status::fail && report.counterexample) {
        os << "  first counterexample at n=" << report.counterexample->n
           << ": lhs=" << report.counterexample->lhs << " rhs=" << report.counterexample->rhs;
    }
    return os.str();
}

void IdentityRegistry::add(IdentitySpec spec)
{
    if (spec.id.empty()) {
        throw std::invalid_argument("identity id must be nonempty");
    }
    if (!spec.lhs || !spec.rhs || !spec.valid_from || !spec.constraint) {
        throw std::invalid_argument("identity '" + spec.id + "' is missing an evaluator");
    }
    if (spec.default_grid.empty()) {
        throw std::invalid_argument("identity '" + spec.id + "' has an empty default grid");
    }
    const auto [it, inserted] = specs_.emplace(spec.id, std::move(spec));
    if (!inserted) {
        throw std::invalid_argument("identity '" + it->first + "' is already registered");
    }
}

const IdentitySpec& IdentityRegistry::lookup(const std::string& id) const
{
    const auto it = specs_.find(id);
    if (it == specs_.end()) {
        throw std::out_of_range("unknown identity '" + id + "'");
    }
    return it->second;
}

std::vector<std::string> IdentityRegistry::ids() const
{
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& [id, spec] : specs_) {
        out.push_back(id);
    }
    return out;  // std::map iteration is already sorted
}

namespace {

void check_schema(const IdentitySpec& spec, const ParamSet& params)
{
    for (const auto& p : spec.params) {
        if (!params.contains(p.name)) {
            throw std::invalid_argument("identity '" + spec.id + "' needs parameter '" +
                                        p.name + "'");
        }
        if (p.kind == ParamKind::integer && !params.get(p.name).is_integer()) {
            throw std::invalid_argument("parameter '" + p.name + "' of identity '" + spec.id +
                                        "' must be an integer, got " +
                                        params.get(p.name).str());
        }
    }
}

}  // namespace

VerificationReport IdentityRegistry::verify(const std::string& id, long n_max,
                                            const ParamSet& params) const
{
    const IdentitySpec& spec = lookup(id);
    check_schema(spec, params);

    VerificationReport report;
    report.identity_id = id;
    report.params = params;
    report.n_max = n_max;

    if (const std::string reason = spec.constraint(params); !reason.empty()) {
        report.n_min = 0;
        report.status = VerificationReport::Status::skipped;
        report.skip_reason = reason;
        return report;
    }

    const long n_min = spec.valid_from(params);
    report.n_min = n_min;
    if (n_max < n_min) {
        report.status = VerificationReport::Status::skipped;
        report.skip_reason = "below valid_from (" + std::to_string(n_min) + ")";
        return report;
    }

    for (long n = n_min; n <= n_max; ++n) {
        Rational lhs = spec.lhs(n, params);
        Rational rhs = spec.rhs(n, params);
        if (!(lhs == rhs)) {
            report.status = VerificationReport::Status::fail;
            report.counterexample = Counterexample{n, std::move(lhs), std::move(rhs)};
            return report;
        }
    }
    report.status = VerificationReport::Status::pass;
    return report;
}

std::vector<VerificationReport> IdentityRegistry::verify_matching(const std::string& id,
                                                                  long n_max,
                                                                  const ParamSet& partial) const
{
    const IdentitySpec& spec = lookup(id);

    bool fully_bound = true;
    for (const auto& p : spec.params) {
        if (!partial.contains(p.name)) {
            fully_bound = false;
            break;
        }
    }
    if (fully_bound) {
        return {verify(id, n_max, partial)};
    }

    std::vector<VerificationReport> reports;
    for (const ParamSet& binding : spec.default_grid) {
        bool matches = true;
        for (const auto& [name, value] : partial) {
            if (!binding.contains(name) || !(binding.get(name) == value)) {
                matches = false;
                break;
            }
        }
        if (matches) {
            reports.push_back(verify(id, n_max, binding));
        }
    }
    return reports;
}

std::vector<VerificationReport> IdentityRegistry::verify_all(long n_max) const
{
    std::vector<VerificationReport> reports;
    for (const auto& [id, spec] : specs_) {
        for (const ParamSet& binding : spec.default_grid) {
            reports.push_back(verify(id, n_max, binding));
        }
    }
    return reports;
}

}  // namespace bintrans
