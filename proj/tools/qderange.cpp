// Command-line front end: verification sweeps, closed-form proportions,
// brute-force oracle comparisons and partition listings.
//
// Exit codes: 0 all checks passed, 2 at least one verified inequality,
// 1 usage or runtime error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "qder/cyclesums.hpp"
#include "qder/group_oracle.hpp"
#include "qder/partition_sets.hpp"
#include "qder/series.hpp"
#include "qder/version.hpp"

using namespace qder;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnequal = 2;

struct OutputOptions {
    std::string path;
    std::string format = "pretty";
    bool no_timing = false;
};

void add_output_options(CLI::App* cmd, OutputOptions* out) {
    cmd->add_option("--output", out->path, "write the report to this file");
    cmd->add_option("--format", out->format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_flag("--no-timing", out->no_timing,
                  "zero all elapsed fields (byte-stable reports across runs)");
}

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::json;
    if (f == "csv") return OutputFormat::csv;
    return OutputFormat::pretty;
}

int emit(Report& report, const OutputOptions& out) {
    if (out.no_timing) report.strip_timing();
    std::string text = report.render(parse_format(out.format));
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out.path);
        if (!os) {
            std::cerr << "cannot write " << out.path << "\n";
            return kExitError;
        }
        os << text;
    }
    return report.all_equal() ? kExitOk : kExitUnequal;
}

Family parse_family(const std::string& name) {
    if (name == "agl") return Family::agl;
    if (name == "au") return Family::au;
    if (name == "asp") return Family::asp;
    if (name == "ao-odd") return Family::ao_odd;
    if (name == "ao-plus") return Family::ao_plus;
    if (name == "ao-minus") return Family::ao_minus;
    throw CLI::ValidationError("unknown family: " + name);
}

void require_valid_q(Family f, int q) {
    int p = 0;
    if (!is_prime_power(q, &p, nullptr))
        throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    if (f != Family::agl && f != Family::au && p == 2)
        throw std::invalid_argument("the symplectic/orthogonal families need odd q");
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string family = "all";
    int min_m = 1;
    int max_m = 10;
    int order = 16;
    int degree = 20;
    int max_n = 40;
    int max_parts = 12;
    int max_a = 14;
    int max_size = 10;
    int threads = 0;
    OutputOptions out;
};

void run_bijection(int max_a, std::vector<Record>& records) {
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= a; ++b) {
            Record r;
            r.family = "bijection";
            r.params = {{"a", a}, {"b", b}};
            long long na = static_cast<long long>(bijection_sets(a, b, PairSet::A).size());
            long long nb = static_cast<long long>(bijection_sets(a, b, PairSet::B).size());
            r.lhs = std::to_string(na);
            r.rhs = std::to_string(nb);
            r.equal = na == nb;
            r.terms = na + nb;
            records.push_back(std::move(r));
        }
}

void run_signed_reduced(int max_size, int threads, std::vector<Record>& records) {
    SumOptions opts{threads};
    auto push = [&](const std::string& fam, int n, const SumResult& lhs, const SumResult& rhs) {
        Record r;
        r.family = fam;
        r.params = {{"n", n}};
        r.lhs = lhs.value.to_string();
        r.rhs = rhs.value.to_string();
        r.equal = lhs.value == rhs.value;
        r.terms = lhs.terms + rhs.terms;
        records.push_back(std::move(r));
    };
    for (int m = 1; 2 * m <= max_size; ++m)
        push("signed-reduced-sympl", 2 * m, sum_sympl_lhs(m, SumMode::with_signs, opts),
             sum_sympl_lhs(m, SumMode::reduced, opts));
    for (int n = 1; n <= max_size; ++n)
        push("signed-reduced-orth-sum", n,
             sum_orth_lhs(n, OrthVariant::sum, SumMode::with_signs, 1, opts),
             sum_orth_lhs(n, OrthVariant::sum, SumMode::reduced, 1, opts));
    for (int n = 2; n <= max_size; n += 2) {
        SumResult reduced = sum_orth_lhs(n, OrthVariant::diff, SumMode::reduced, 1, opts);
        for (int qmod : {1, 3}) {
            Record r;
            r.family = "signed-reduced-orth-diff";
            r.params = {{"n", n}, {"q_mod4", qmod}};
            SumResult lhs = sum_orth_lhs(n, OrthVariant::diff, SumMode::with_signs, qmod, opts);
            r.lhs = lhs.value.to_string();
            r.rhs = reduced.value.to_string();
            r.equal = lhs.value == reduced.value;
            r.terms = lhs.terms;
            records.push_back(std::move(r));
        }
    }
}

void run_steinberg(int max_m, int threads, std::vector<Record>& records) {
    SumOptions opts{threads};
    auto push = [&](const std::string& fam, int n, const RationalFunction& lhs,
                    const RationalFunction& rhs, long long terms) {
        Record r;
        r.family = fam;
        r.params = {{"n", n}};
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
        r.equal = lhs == rhs;
        r.terms = terms;
        records.push_back(std::move(r));
    };
    for (int m = 1; m <= max_m; ++m) {
        auto s = steinberg_sum_unitary(m, opts);
        push("steinberg-u", m, s.value, steinberg_proportion(LinearFamily::u, m), s.terms);
    }
    for (int m = 1; 2 * m <= max_m; ++m) {
        auto s = steinberg_sum_sympl(m, opts);
        push("steinberg-sp", 2 * m, s.value, steinberg_proportion(LinearFamily::sp, m), s.terms);
    }
    for (int n = 2; n <= max_m; ++n) {
        auto s = steinberg_sum_orth(n, OrthVariant::sum, 1, opts);
        RationalFunction expect =
            n % 2 == 0 ? steinberg_proportion(LinearFamily::o_plus, n / 2) +
                             steinberg_proportion(LinearFamily::o_minus, n / 2)
                       : RationalFunction(2) * steinberg_proportion(LinearFamily::o_odd, n / 2);
        push("steinberg-o", n, s.value, expect, s.terms);
    }
}

int cmd_verify(const VerifyArgs& args) {
    Report report;
    report.command = "verify";
    report.config = {{"family", args.family},
                     {"min_m", std::to_string(args.min_m)},
                     {"max_m", std::to_string(args.max_m)},
                     {"order", std::to_string(args.order)},
                     {"degree", std::to_string(args.degree)},
                     {"max_n", std::to_string(args.max_n)},
                     {"max_parts", std::to_string(args.max_parts)},
                     {"max_a", std::to_string(args.max_a)},
                     {"max_size", std::to_string(args.max_size)}};

    VerifyOptions vopts{args.threads, args.max_n, args.max_parts};
    auto want = [&](const std::string& name) {
        return args.family == "all" || args.family == name;
    };
    bool matched = false;

    const std::pair<std::string, IdentityFamily> identity_families[] = {
        {"unitary-p", IdentityFamily::unitary_p}, {"sympl", IdentityFamily::sympl},
        {"orth-odd", IdentityFamily::orth_odd},   {"orth-even", IdentityFamily::orth_even},
        {"orth-diff", IdentityFamily::orth_diff}, {"h-decomposition", IdentityFamily::h_decomposition},
    };
    for (const auto& [name, fam] : identity_families) {
        if (!want(name)) continue;
        matched = true;
        auto recs = verify_identity(fam, args.min_m, args.max_m, vopts);
        report.records.insert(report.records.end(), recs.begin(), recs.end());
    }
    if (want("cute-genfun")) {
        matched = true;
        auto recs = verify_identity(IdentityFamily::cute_genfun, 1, args.max_parts, vopts);
        report.records.insert(report.records.end(), recs.begin(), recs.end());
    }
    if (want("bijection")) {
        matched = true;
        run_bijection(args.max_a, report.records);
    }
    if (want("signed-reduced")) {
        matched = true;
        run_signed_reduced(args.max_size, args.threads, report.records);
    }
    if (want("steinberg")) {
        matched = true;
        run_steinberg(args.max_m, args.threads, report.records);
    }
    const std::pair<std::string, ChainFamily> chains[] = {{"chain-u", ChainFamily::u},
                                                          {"chain-sp", ChainFamily::sp},
                                                          {"chain-o-sum", ChainFamily::o_sum},
                                                          {"chain-o-diff", ChainFamily::o_diff}};
    for (const auto& [name, fam] : chains) {
        if (!want(name)) continue;
        matched = true;
        auto recs = verify_chain(fam, args.order);
        report.records.insert(report.records.end(), recs.begin(), recs.end());
    }
    if (want("euler")) {
        matched = true;
        Record r;
        r.family = "euler";
        r.params = {{"order", args.order}};
        r.equal = euler_check(args.order);
        r.lhs = "series";
        r.rhs = "product";
        report.records.push_back(std::move(r));
    }
    if (want("jacobi")) {
        matched = true;
        Record r;
        r.family = "jacobi";
        r.params = {{"degree", args.degree}};
        r.equal = jacobi_check(args.degree);
        r.lhs = "bilateral-sum";
        r.rhs = "triple-product";
        report.records.push_back(std::move(r));
        Record r2;
        r2.family = "jacobi-specialization";
        r2.params = {{"degree", args.degree}};
        r2.equal = jacobi_specialization_check(args.degree);
        r2.lhs = "bilateral-difference";
        r2.rhs = "product-form";
        report.records.push_back(std::move(r2));
    }
    if (!matched) {
        std::cerr << "unknown verify family: " << args.family << "\n";
        return kExitError;
    }
    return emit(report, args.out);
}

// --- delta -----------------------------------------------------------------

struct DeltaArgs {
    std::string family;
    int m = 1;
    int q = 0;
    bool p_power = false;
    OutputOptions out;
};

int cmd_delta(const DeltaArgs& args) {
    Family f = parse_family(args.family);
    require_valid_q(f, args.q);

    RationalFunction value;
    bool conjectural = false;
    if (!args.p_power) {
        switch (f) {
            case Family::agl: value = delta_agl(args.m); break;
            case Family::au: value = delta_au(args.m); break;
            default:
                value = conj_delta(f, args.m);
                conjectural = true;
        }
    } else {
        switch (f) {
            case Family::au: value = delta_p_au(args.m); break;
            case Family::asp:
                value = conj_identity_rhs(ConjIdentity::sympl, args.m);
                conjectural = true;
                break;
            case Family::ao_odd:
                value = conj_identity_rhs(ConjIdentity::orth_odd, args.m) *
                        RationalFunction(BigRational(1, 2));
                conjectural = true;
                break;
            case Family::ao_plus:
            case Family::ao_minus: {
                RationalFunction u = conj_identity_rhs(ConjIdentity::orth_even, args.m);
                RationalFunction ubar = orth_diff_rhs(args.m);
                RationalFunction half(BigRational(1, 2));
                value = f == Family::ao_plus ? (u + ubar) * half : (u - ubar) * half;
                conjectural = true;
                break;
            }
            default:
                throw std::invalid_argument("no p-power formula for this family");
        }
    }

    BigRational at_q = value.eval_at_q(BigRational(args.q));
    if (args.out.format == "json") {
        nlohmann::ordered_json j;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["family"] = args.family;
        j["m"] = args.m;
        j["q"] = args.q;
        j["p_power"] = args.p_power;
        j["value"] = at_q.get_str();
        j["decimal"] = rational_to_decimal(at_q);
        j["formula"] = value.to_string();
        j["conjectural"] = conjectural;
        std::string text = j.dump(2) + "\n";
        if (args.out.path.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(args.out.path);
            if (!os) return kExitError;
            os << text;
        }
        return kExitOk;
    }
    std::cout << at_q.get_str() << " (" << rational_to_decimal(at_q) << ")"
              << (conjectural ? " conjectural" : "") << "\n";
    return kExitOk;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
    std::string family;
    int m = 1;
    int q = 0;
    bool p_power = false;
    long long budget = 30'000'000;
    int threads = 0;
    OutputOptions out;
};

int cmd_oracle(const OracleArgs& args) {
    Family f = parse_family(args.family);
    if (f == Family::agl) throw std::invalid_argument("oracle covers au/asp/ao-* families");
    require_valid_q(f, args.q);
    OracleOptions opts;
    opts.budget = args.budget;
    opts.threads = args.threads;

    Report report;
    report.command = "oracle";
    report.config = {{"family", args.family},
                     {"m", std::to_string(args.m)},
                     {"q", std::to_string(args.q)},
                     {"p_power", args.p_power ? "true" : "false"},
                     {"budget", std::to_string(args.budget)}};
    report.records = compare_with_formula(f, args.m, args.q, args.p_power, opts);
    return emit(report, args.out);
}

// --- partitions ------------------------------------------------------------

struct PartitionArgs {
    int n = 0;
    std::string constraint = "none";
    int parts = 0;
    int max_part = 0;
    bool cute = false;
    bool fixed_point = false;
    OutputOptions out;
};

int cmd_partitions(const PartitionArgs& args) {
    if (args.n < 0 || args.n > 200)
        throw std::invalid_argument("partition listing supports 0 <= n <= 200");
    PartitionConstraint c;
    if (args.constraint == "odd-even-mult")
        c.rule = PartitionConstraint::MultRule::odd_parts_even_mult;
    else if (args.constraint == "even-even-mult")
        c.rule = PartitionConstraint::MultRule::even_parts_even_mult;
    else if (args.constraint == "all-even-mult")
        c.rule = PartitionConstraint::MultRule::all_even_mult;
    else if (args.constraint != "none")
        throw std::invalid_argument("unknown constraint: " + args.constraint);
    if (args.parts > 0) c.exact_parts = args.parts;
    if (args.max_part > 0) c.max_part = args.max_part;

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!args.out.path.empty()) {
        file.open(args.out.path);
        if (!file) return kExitError;
        os = &file;
    }
    auto keep = [&](const Partition& p) {
        if (args.cute && !p.is_cute()) return false;
        if (args.fixed_point && !p.has_fixed_point()) return false;
        return true;
    };
    long long count = 0;
    if (args.out.format == "json") {
        std::vector<std::string> lines;
        enumerate_partitions(args.n, c, [&](const Partition& p) {
            if (!keep(p)) return;
            ++count;
            lines.push_back(p.to_string());
        });
        nlohmann::ordered_json j;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["n"] = args.n;
        j["constraint"] = args.constraint;
        j["partitions"] = lines;
        j["count"] = count;
        *os << j.dump(2) << "\n";
    } else {
        // streamed: no materialization of the full listing
        enumerate_partitions(args.n, c, [&](const Partition& p) {
            if (!keep(p)) return;
            ++count;
            *os << p.to_string() << "\n";
        });
        *os << "count " << count << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) +
                 " -- exact derangement proportions in affine classical groups"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "run identity/series/bijection verifications");
    verify->add_option("--family", vargs.family,
                       "unitary-p|sympl|orth-odd|orth-even|orth-diff|h-decomposition|cute-genfun|"
                       "bijection|signed-reduced|steinberg|chain-u|chain-sp|chain-o-sum|"
                       "chain-o-diff|euler|jacobi|all");
    verify->add_option("--min-m", vargs.min_m);
    verify->add_option("--max-m", vargs.max_m);
    verify->add_option("--order", vargs.order, "series truncation order");
    verify->add_option("--degree", vargs.degree, "jacobi total degree bound");
    verify->add_option("--max-n", vargs.max_n, "cute-genfun size window");
    verify->add_option("--max-parts", vargs.max_parts, "cute-genfun part bound");
    verify->add_option("--max-a", vargs.max_a, "bijection size bound");
    verify->add_option("--max-size", vargs.max_size, "signed-reduced size bound");
    verify->add_option("--threads", vargs.threads);
    add_output_options(verify, &vargs.out);

    DeltaArgs dargs;
    CLI::App* delta = app.add_subcommand("delta", "evaluate a closed-form proportion");
    delta->add_option("--family", dargs.family, "agl|au|asp|ao-odd|ao-plus|ao-minus")->required();
    delta->add_option("--m", dargs.m)->required();
    delta->add_option("--q", dargs.q)->required();
    delta->add_flag("--p-power", dargs.p_power, "derangements of p-power order");
    add_output_options(delta, &dargs.out);

    OracleArgs oargs;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force group comparison");
    oracle->add_option("--family", oargs.family, "au|asp|ao-odd|ao-plus|ao-minus")->required();
    oracle->add_option("--m", oargs.m)->required();
    oracle->add_option("--q", oargs.q)->required();
    oracle->add_flag("--p-power", oargs.p_power);
    oracle->add_option("--budget", oargs.budget, "bound on |GL_m(q^e)|");
    oracle->add_option("--threads", oargs.threads);
    add_output_options(oracle, &oargs.out);

    PartitionArgs pargs;
    CLI::App* partitions = app.add_subcommand("partitions", "enumerate partitions");
    partitions->add_option("--n", pargs.n)->required();
    partitions->add_option("--constraint", pargs.constraint,
                           "none|odd-even-mult|even-even-mult|all-even-mult");
    partitions->add_option("--parts", pargs.parts, "exactly this many parts");
    partitions->add_option("--max-part", pargs.max_part, "size cap per part");
    partitions->add_flag("--cute", pargs.cute);
    partitions->add_flag("--fixed-point", pargs.fixed_point);
    add_output_options(partitions, &pargs.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(vargs);
        if (delta->parsed()) return cmd_delta(dargs);
        if (oracle->parsed()) return cmd_oracle(oargs);
        if (partitions->parsed()) return cmd_partitions(pargs);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
