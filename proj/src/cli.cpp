#include "quadring/cli.hpp"

#include "quadring/builder.hpp"
#include "quadring/coverage.hpp"
#include "quadring/document.hpp"
#include "quadring/oracle.hpp"
#include "quadring/pell.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace quadring {

namespace {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

RingElement parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("expected X,Y but got '" + text + "'");
    try {
        return {parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("expected LO:HI but got '" + text + "'");
    try {
        const long lo = std::stol(text.substr(0, colon));
        const long hi = std::stol(text.substr(colon + 1));
        if (lo > hi) throw InputError("empty range '" + text + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InputError("bad range '" + text + "'");
    }
}

RingContext make_context(const std::string& d_text) {
    try {
        return RingContext(parse_integer(d_text));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::size_t default_budget() {
    if (const char* env = std::getenv("QUADRING_RETRY_BUDGET")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::logic_error&) {
        }
        throw InputError(std::string("QUADRING_RETRY_BUDGET must be a positive integer, got '") + env + "'");
    }
    return kDefaultRetryBudget;
}

SupportStatus document_status(const RingContext& ctx, const RingElement& n) {
    if (auto ex = classify_exceptional(ctx, n)) return *ex;
    return classify_support(ctx, n);
}

bool fully_verified(const RingContext& ctx, const QuadrupleCertificate& cert) {
    return verify_quadruple(ctx, cert.elements, cert.n).has_value() && certificate_holds(ctx, cert);
}

std::string read_source(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return source;
    std::ifstream in(source);
    if (!in) throw InputError("cannot read '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ConstructArgs {
    std::string d, n, method = "auto", out_path;
    long t = -1;
    long budget = 0;
    SearchBounds bounds;
    bool allow_inadmissible = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    const RingContext ctx = make_context(a.d);
    if (!a.allow_inadmissible && !is_admissible(ctx.d())) {
        throw InputError("d=" + ctx.d().get_str() + " is not admissible (use --allow-inadmissible to override)");
    }
    const RingElement n = parse_pair(a.n);
    if (n.is_zero()) throw InputError("n must be non-zero");
    const std::size_t budget = a.budget > 0 ? static_cast<std::size_t>(a.budget) : default_budget();

    const SupportStatus status = classify_support(ctx, n);
    if (status.tag == SupportTag::ExcludedS) {
        err << "excluded: " << status.detail << ", no D(n)-quadruple exists\n";
        return kExitExcluded;
    }

    std::optional<QuadrupleCertificate> cert;
    try {
        if (a.method == "auto") {
            cert = construct_auto(ctx, n, budget, a.bounds);
        } else if (a.method == "thm12") {
            cert = construct_thm12(ctx, n, budget);
        } else if (a.method == "thm13") {
            cert = construct_thm13(ctx, n, budget);
        } else if (a.method == "ex3" || a.method == "ex4") {
            const auto member = d10_family(n);
            const bool ex3 = member && (member->family == D10Family::Ex3First || member->family == D10Family::Ex3Second);
            if (!member || ex3 != (a.method == "ex3")) {
                throw PreconditionError("n=" + ctx.format(n) + " is not in the " + a.method + " families");
            }
            unsigned long t = 0;
            if (a.t >= 0) {
                t = static_cast<unsigned long>(a.t);
            } else {
                t = (member->family == D10Family::Ex3First || member->family == D10Family::Ex4Second) ? 1 : 0;
            }
            cert = construct_d10(ctx, n, t);
        } else if (a.method == "search") {
            cert = lemma21_search(ctx, n, a.bounds);
            if (!cert) throw NotFound("search bounds exhausted for n=" + ctx.format(n));
        } else {
            throw InputError("unknown method '" + a.method + "'");
        }
    } catch (const ExcludedError& e) {
        err << "excluded: " << e.what() << '\n';
        return e.status.tag == SupportTag::DelegatedPriorWork ? kExitNotFound : kExitExcluded;
    } catch (const WrongResidueClass& e) {
        throw InputError(e.what());
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    } catch (const BudgetExhausted& e) {
        err << "not found: " << e.what() << '\n';
        return kExitNotFound;
    } catch (const NotFound& e) {
        err << "not found: " << e.what() << '\n';
        return kExitNotFound;
    }

    const bool verified = fully_verified(ctx, *cert);
    const std::string text = certificate_to_json(*cert, verified, document_status(ctx, n)).dump(2) + "\n";
    if (a.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(a.out_path);
        if (!file) throw InputError("cannot write '" + a.out_path + "'");
        file << text;
    }
    return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const std::string& source, std::ostream& out) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_source(source));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }
    ParsedDocument parsed;
    try {
        parsed = certificate_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
    const QuadrupleCertificate& cert = parsed.certificate;
    const RingContext ctx = make_context(cert.d.get_str());

    const VerifyReport report = verify_report(ctx, cert.elements, cert.n);
    std::string failure = report.failure;
    if (failure.empty() || failure.rfind("pair", 0) == 0) {
        for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
            const auto [i, j] = kPairs[slot];
            out << "pair " << pair_key(slot) << ": ";
            if (report.roots[slot]) {
                out << "root " << ctx.format(*report.roots[slot]);
            } else {
                out << "not a square";
            }
            if (parsed.has_witnesses) {
                const RingElement target = ctx.mul(cert.elements[i], cert.elements[j]) + cert.n;
                const bool witness_ok = ctx.square(cert.witnesses[slot]) == target;
                out << (witness_ok ? ", witness ok" : ", witness wrong");
                if (!witness_ok && failure.empty()) failure = "witness " + pair_key(slot);
            }
            out << '\n';
        }
    }
    if (failure.empty()) {
        out << "verdict: verified\n";
        return kExitOk;
    }
    out << "verdict: FAILED (" << failure << ")\n";
    return kExitVerificationFailed;
}

int cmd_search(const std::string& d, const std::string& n_text, long bound, long limit, std::ostream& out) {
    const RingContext ctx = make_context(d);
    const RingElement n = parse_pair(n_text);
    if (limit < 0) throw InputError("limit must be non-negative");
    std::vector<QuadrupleCertificate> found;
    try {
        found = brute_force_search(ctx, n, bound, static_cast<std::size_t>(limit));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    nlohmann::json docs = nlohmann::json::array();
    const SupportStatus status = n.is_zero() ? SupportStatus{} : document_status(ctx, n);
    for (const auto& cert : found) docs.push_back(certificate_to_json(cert, fully_verified(ctx, cert), status));
    out << docs.dump(2) << '\n';
    return found.empty() ? kExitNotFound : kExitOk;
}

int cmd_pell(const std::string& d, std::ostream& out) {
    const RingContext ctx = make_context(d);
    const CFExpansion cf = cf_expand(ctx);
    out << "d: " << ctx.d().get_str() << '\n';
    out << "continued fraction: [" << cf.a0.get_str() << ";";
    for (std::size_t i = 0; i < cf.period.size(); ++i) out << (i ? "," : " ") << cf.period[i].get_str();
    out << "]\nperiod length: " << cf.period_length() << '\n';
    out << "norm +1: " << ctx.format(fundamental_unit(ctx).value) << '\n';
    if (auto neg = fundamental_neg(ctx)) {
        out << "norm -1: " << ctx.format(neg->value) << '\n';
    } else {
        out << "norm -1: none\n";
    }
    return kExitOk;
}

int cmd_norm6(const std::string& d, long count, std::ostream& out) {
    const RingContext ctx = make_context(d);
    if (count < 1) throw InputError("count must be positive");
    for (int sign : {+1, -1}) {
        const long target = 6 * sign;
        out << "norm " << target << ":";
        const auto reps = solve_norm6(ctx, sign);
        if (reps.empty()) {
            out << " none\n";
            continue;
        }
        out << '\n';
        for (const auto& e : enumerate_norm_class(ctx, target, static_cast<std::size_t>(count))) {
            out << "  " << ctx.format(e);
            if (auto form = classify_form(ctx, e)) {
                out << "  " << to_string(form->kind) << " (" << form->first.get_str() << ","
                    << form->second.get_str() << ")";
            }
            out << '\n';
        }
    }
    return kExitOk;
}

int cmd_scan(long limit, std::ostream& out) {
    if (limit < 2) throw InputError("limit must be at least 2");
    const auto ds = admissible_d_scan(limit);
    for (long d : ds) out << d << '\n';
    out << "count: " << ds.size() << '\n';
    return kExitOk;
}

struct CoverageArgs {
    std::string d, family = "4m,4k", m_range = "-6:6", k_range = "-6:6", csv_path;
    long budget = 0;
    bool skip_delegated = false;
    SearchBounds bounds;
};

int cmd_coverage(const CoverageArgs& a, std::ostream& out) {
    const RingContext ctx = make_context(a.d);
    CoverageFamily family;
    try {
        family = coverage_family_from_string(a.family);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto [m_lo, m_hi] = parse_range(a.m_range);
    const auto [k_lo, k_hi] = parse_range(a.k_range);
    CoverageOptions options;
    options.budget = a.budget > 0 ? static_cast<std::size_t>(a.budget) : default_budget();
    options.bounds = a.bounds;
    options.attempt_delegated = !a.skip_delegated;
    const auto rows = coverage(ctx, family, m_lo, m_hi, k_lo, k_hi, options);
    out << coverage_text(ctx, rows);
    if (!a.csv_path.empty()) {
        std::ofstream file(a.csv_path);
        if (!file) throw InputError("cannot write '" + a.csv_path + "'");
        file << coverage_csv(ctx, rows);
    }
    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const CoverageRow& r) {
        return r.tag != SupportTag::ConstructibleHere || r.verified;
    });
    return all_ok ? kExitOk : kExitVerificationFailed;
}

void add_bounds(CLI::App* cmd, SearchBounds& bounds) {
    cmd->add_option("--factor-norm-bound", bounds.factor_norm_bound, "largest |norm| of the first factor");
    cmd->add_option("--a-norm-bound", bounds.a_norm_bound, "largest |norm| of a");
    cmd->add_option("--unit-power-bound", bounds.unit_power_bound, "largest unit power");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Diophantine D(n)-quadruples in Z[sqrt(d)]", "quadring"};
    app.require_subcommand(1);

    std::string d, n, source;
    long limit = 0, bound = 0, count = 8;

    auto* pell = app.add_subcommand("pell", "continued fraction and units of sqrt(d)");
    pell->add_option("--d", d, "d")->required();

    auto* norm6 = app.add_subcommand("norm6", "elements of norm 6 and -6");
    norm6->add_option("--d", d, "d")->required();
    norm6->add_option("--count", count, "elements listed per class");

    long scan_limit = 0;
    auto* scan = app.add_subcommand("scan", "admissible d up to a limit");
    scan->add_option("--limit", scan_limit, "largest d")->required();

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "build and verify a D(n)-quadruple");
    construct->add_option("--d", cargs.d, "d")->required();
    construct->add_option("--n", cargs.n, "n as X,Y")->required();
    construct->add_option("--method", cargs.method, "auto|thm12|thm13|ex3|ex4|search");
    construct->add_option("--t", cargs.t, "unit power for ex3/ex4");
    construct->add_option("--budget", cargs.budget, "retry budget");
    construct->add_option("--out", cargs.out_path, "write the document here");
    construct->add_flag("--allow-inadmissible", cargs.allow_inadmissible, "skip the admissibility check");
    add_bounds(construct, cargs.bounds);

    auto* verify = app.add_subcommand("verify", "re-verify a certificate document");
    verify->add_option("document", source, "path or inline JSON")->required();

    auto* search = app.add_subcommand("search", "exhaustive search in a box");
    search->add_option("--d", d, "d")->required();
    search->add_option("--n", n, "n as X,Y")->required();
    search->add_option("--bound", bound, "box bound on |x| and |y|")->required();
    search->add_option("--limit", limit, "maximum certificates (0 = all)");

    CoverageArgs vargs;
    auto* cover = app.add_subcommand("coverage", "status of every cell in a grid");
    cover->add_option("--d", vargs.d, "d")->required();
    cover->add_option("--family", vargs.family, "4m,4k | 4m+2,4k | S1 | S2 | S3 | S4");
    cover->add_option("--m-range", vargs.m_range, "LO:HI");
    cover->add_option("--k-range", vargs.k_range, "LO:HI");
    cover->add_option("--csv", vargs.csv_path, "write CSV here");
    cover->add_option("--budget", vargs.budget, "retry budget");
    cover->add_flag("--skip-delegated", vargs.skip_delegated, "do not search prior-work cells");
    add_bounds(cover, vargs.bounds);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (*pell) return cmd_pell(d, out);
        if (*norm6) return cmd_norm6(d, count, out);
        if (*scan) return cmd_scan(scan_limit, out);
        if (*construct) return cmd_construct(cargs, out, err);
        if (*verify) return cmd_verify(source, out);
        if (*search) return cmd_search(d, n, bound, limit, out);
        if (*cover) return cmd_coverage(vargs, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace quadring
