// bintrans: exact binomial-transform toolkit.
//
// Subcommands:
//   transform [--unsigned] [--inverse] FILE
//   op (nabla | n-nabla) [--p P] [--valid-from K] [--machine] FILE
//   gen NAME --count N [--param k=v]...
//   verify (ID | --all) --n-max N [--param k=v]... [--machine]
//
// Exit codes: 0 success / all identities pass, 1 identity failure,
// 2 usage or parse error. All numeric I/O is exact "p/q" text.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bintrans/generators.hpp"
#include "bintrans/identities.hpp"
#include "bintrans/sequence_io.hpp"
#include "bintrans/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

std::vector<bintrans::Rational> read_terms(const std::string& path)
{
    if (path == "-") {
        return bintrans::read_sequence_file(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    return bintrans::read_sequence_file(in);
}

std::map<std::string, bintrans::Rational> parse_params(const std::vector<std::string>& raw)
{
    std::map<std::string, bintrans::Rational> params;
    for (const std::string& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("--param expects name=value, got '" + item + "'");
        }
        const std::string name = item.substr(0, eq);
        params.insert_or_assign(name,
                                bintrans::parse_rational_literal(item.substr(eq + 1)));
    }
    return params;
}

long integer_param(const std::map<std::string, bintrans::Rational>& params,
                   const std::string& name, long minimum)
{
    const auto it = params.find(name);
    if (it == params.end()) {
        throw std::invalid_argument("missing required parameter '" + name + "'");
    }
    if (!it->second.is_integer()) {
        throw std::invalid_argument("parameter '" + name + "' must be an integer, got " +
                                    it->second.str());
    }
    const long v = it->second.to_long();
    if (v < minimum) {
        throw std::invalid_argument("parameter '" + name + "' must be >= " +
                                    std::to_string(minimum) + ", got " + std::to_string(v));
    }
    return v;
}

bintrans::Rational rational_param(const std::map<std::string, bintrans::Rational>& params,
                                  const std::string& name)
{
    const auto it = params.find(name);
    if (it == params.end()) {
        throw std::invalid_argument("missing required parameter '" + name + "'");
    }
    return it->second;
}

void reject_unknown_params(const std::map<std::string, bintrans::Rational>& params,
                           std::initializer_list<const char*> known)
{
    for (const auto& [name, value] : params) {
        bool ok = false;
        for (const char* k : known) {
            ok = ok || name == k;
        }
        if (!ok) {
            throw std::invalid_argument("unknown parameter '" + name + "'");
        }
    }
}

struct TransformArgs {
    std::string file;
    bool unsigned_variant = false;
    bool inverse = false;
};

int run_transform(const TransformArgs& args)
{
    const bintrans::Sequence input(read_terms(args.file), 0);
    bintrans::Sequence output = [&] {
        if (!args.unsigned_variant) {
            return bintrans::binomial_transform(input);  // the signed pair is an involution
        }
        return args.inverse ? bintrans::inverse_unsigned_binomial_transform(input)
                            : bintrans::unsigned_binomial_transform(input);
    }();
    bintrans::write_sequence_lines(std::cout, output);
    return kExitOk;
}

struct OpArgs {
    std::string op_name;
    std::string file;
    long p = 1;
    long valid_from = 0;
    bool p_given = false;
    bool machine = false;
};

int run_op(const OpArgs& args)
{
    if (args.valid_from < 0) {
        throw std::invalid_argument("--valid-from must be >= 0");
    }
    const bintrans::Sequence input(read_terms(args.file),
                                   static_cast<std::size_t>(args.valid_from));
    bintrans::Sequence output = [&] {
        if (args.op_name == "nabla") {
            if (args.p_given) {
                throw std::invalid_argument("--p applies only to n-nabla");
            }
            return bintrans::backward_difference(input);
        }
        if (args.p < 1) {
            throw std::invalid_argument("--p must be >= 1");
        }
        return bintrans::n_nabla_pow(input, static_cast<unsigned>(args.p));
    }();
    bintrans::write_sequence_lines(std::cout, output, args.machine);
    return kExitOk;
}

struct GenArgs {
    std::string name;
    long count = 0;
    std::vector<std::string> raw_params;
};

int run_gen(const GenArgs& args)
{
    if (args.count < 1) {
        throw std::invalid_argument("--count must be >= 1");
    }
    const auto n = static_cast<std::size_t>(args.count);
    const auto params = parse_params(args.raw_params);

    bintrans::Sequence out = [&]() -> bintrans::Sequence {
        using namespace bintrans;
        if (args.name == "harmonic") {
            reject_unknown_params(params, {});
            return harmonic(n);
        }
        if (args.name == "gen-harmonic") {
            reject_unknown_params(params, {"r"});
            return generalized_harmonic(n, static_cast<unsigned>(integer_param(params, "r", 1)));
        }
        if (args.name == "skew-harmonic") {
            reject_unknown_params(params, {});
            return skew_harmonic(n);
        }
        if (args.name == "fibonacci") {
            reject_unknown_params(params, {});
            return fibonacci(n);
        }
        if (args.name == "lucas") {
            reject_unknown_params(params, {});
            return lucas(n);
        }
        if (args.name == "power-sum") {
            reject_unknown_params(params, {"q"});
            return power_sum(n, static_cast<unsigned>(integer_param(params, "q", 0)));
        }
        if (args.name == "geometric") {
            reject_unknown_params(params, {"x"});
            return geometric(n, rational_param(params, "x"));
        }
        if (args.name == "index-powers") {
            reject_unknown_params(params, {"p"});
            return index_powers(n, static_cast<unsigned>(integer_param(params, "p", 0)));
        }
        if (args.name == "laguerre") {
            reject_unknown_params(params, {"x"});
            return laguerre(n, rational_param(params, "x"));
        }
        if (args.name == "mhs") {
            reject_unknown_params(params, {"m"});
            return multiple_harmonic_sum(n,
                                         static_cast<unsigned>(integer_param(params, "m", 1)));
        }
        if (args.name == "binomial-column") {
            reject_unknown_params(params, {"p"});
            return binomial_column(n, static_cast<unsigned>(integer_param(params, "p", 0)));
        }
        throw std::invalid_argument(
            "unknown generator '" + args.name +
            "' (available: harmonic, gen-harmonic, skew-harmonic, fibonacci, lucas, "
            "power-sum, geometric, index-powers, laguerre, mhs, binomial-column)");
    }();
    bintrans::write_sequence_lines(std::cout, out);
    return kExitOk;
}

struct VerifyArgs {
    std::string id;
    bool all = false;
    long n_max = -1;
    std::vector<std::string> raw_params;
    bool machine = false;
    bool inject_falsified = false;
};

bintrans::IdentitySpec falsified_selftest()
{
    return {
        .id = "falsified_selftest",
        .description = "deliberately false: sum C(n,k)(-1)^(k-1)/k = H_n + 1",
        .lhs =
            [](long n, const bintrans::ParamSet&) {
                return bintrans::harmonic(static_cast<std::size_t>(n) + 1)
                    .at(static_cast<std::size_t>(n));
            },
        .rhs =
            [](long n, const bintrans::ParamSet&) {
                return bintrans::harmonic(static_cast<std::size_t>(n) + 1)
                           .at(static_cast<std::size_t>(n)) +
                       bintrans::Rational{1};
            },
        .valid_from = [](const bintrans::ParamSet&) { return 1L; },
    };
}

int run_verify(const VerifyArgs& args)
{
    if (args.n_max < 0) {
        throw std::invalid_argument("--n-max must be >= 0");
    }
    if (args.all != args.id.empty()) {
        throw std::invalid_argument("pass exactly one of an identity id or --all");
    }

    bintrans::IdentityRegistry registry = bintrans::register_builtin_identities();
    if (args.inject_falsified) {
        registry.add(falsified_selftest());
    }

    std::vector<bintrans::VerificationReport> reports;
    if (args.all) {
        if (!args.raw_params.empty()) {
            throw std::invalid_argument("--param requires a specific identity, not --all");
        }
        reports = registry.verify_all(args.n_max);
    } else {
        const auto raw = parse_params(args.raw_params);
        const bintrans::IdentitySpec* spec = nullptr;
        try {
            spec = &registry.lookup(args.id);
        } catch (const std::out_of_range&) {
            std::ostringstream os;
            os << "unknown identity '" << args.id << "'; available:";
            for (const auto& id : registry.ids()) {
                os << ' ' << id;
            }
            throw std::invalid_argument(os.str());
        }
        for (const auto& [name, value] : raw) {
            bool in_schema = false;
            for (const auto& p : spec->params) {
                in_schema = in_schema || p.name == name;
            }
            if (!in_schema) {
                throw std::invalid_argument("identity '" + args.id +
                                            "' has no parameter '" + name + "'");
            }
        }
        bintrans::ParamSet partial;
        for (const auto& [name, value] : raw) {
            partial.set(name, value);
        }
        reports = registry.verify_matching(args.id, args.n_max, partial);
        if (reports.empty()) {
            throw std::invalid_argument("no default parameter binding of '" + args.id +
                                        "' matches the given --param values");
        }
    }

    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& report : reports) {
        std::cout << (args.machine ? bintrans::machine_line(report)
                                   : bintrans::human_line(report))
                  << '\n';
        switch (report.status) {
            case bintrans::VerificationReport::Status::pass:
                ++passed;
                break;
            case bintrans::VerificationReport::Status::fail:
                ++failed;
                break;
            case bintrans::VerificationReport::Status::skipped:
                ++skipped;
                break;
        }
    }
    if (!args.machine) {
        std::cout << passed << " pass, " << failed << " fail, " << skipped << " skipped\n";
    }
    return failed == 0 ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact binomial-transform toolkit (arbitrary-precision rationals)"};
    app.require_subcommand(1);

    TransformArgs transform_args;
    CLI::App* transform = app.add_subcommand(
        "transform", "apply the signed (self-inverse) or unsigned binomial transform");
    transform->add_flag("--unsigned", transform_args.unsigned_variant,
                        "use the transform without the alternating sign");
    transform->add_flag("--inverse", transform_args.inverse,
                        "invert (signed forward and inverse coincide)");
    transform->add_option("FILE", transform_args.file,
                          "sequence file, one p/q term per line ('-' for stdin)")
        ->required();

    OpArgs op_args;
    CLI::App* op = app.add_subcommand("op", "apply nabla or (n nabla)^p to a sequence");
    op->add_option("OP", op_args.op_name, "operator: nabla | n-nabla")
        ->required()
        ->check(CLI::IsMember({"nabla", "n-nabla"}));
    op->add_option("--p", op_args.p, "power of n-nabla (default 1)");
    op->add_option("--valid-from", op_args.valid_from,
                   "index of the first defined input entry (default 0)");
    op->add_flag("--machine", op_args.machine,
                 "render placeholder entries as '_' instead of '·'");
    op->add_option("FILE", op_args.file, "sequence file ('-' for stdin)")->required();

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a built-in sequence");
    gen->add_option("NAME", gen_args.name, "generator name")->required();
    gen->add_option("--count", gen_args.count, "number of terms")->required();
    gen->add_option("--param", gen_args.raw_params,
                    "generator parameter name=value (rational literal)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check identities exactly over 0..n-max");
    verify->add_option("ID", verify_args.id, "identity id");
    verify->add_flag("--all", verify_args.all, "verify every registered identity");
    verify->add_option("--n-max", verify_args.n_max, "largest index to check")->required();
    verify->add_option("--param", verify_args.raw_params, "identity parameter name=value");
    verify->add_flag("--machine", verify_args.machine, "one key=value record per line");
    verify->add_flag("--inject-falsified", verify_args.inject_falsified,
                     "add a deliberately false identity (exit-code self-test)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    op_args.p_given = op->count("--p") > 0;

    try {
        if (transform->parsed()) {
            return run_transform(transform_args);
        }
        if (op->parsed()) {
            return run_op(op_args);
        }
        if (gen->parsed()) {
            return run_gen(gen_args);
        }
        if (verify->parsed()) {
            return run_verify(verify_args);
        }
    } catch (const bintrans::SequenceParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;  // unreachable: a subcommand is required
}
