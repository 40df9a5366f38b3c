#pragma once

// Command implementations behind tools/eaqmds_cli. Each command writes data
// to `out`, diagnostics to `err`, and returns the process exit code.

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosets.hpp"
#include "errata.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "record.hpp"
#include "tower.hpp"
#include "verify.hpp"

namespace eaqmds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct CosetsOptions {
    std::uint64_t q = 0;
    std::optional<std::int64_t> n;
    std::string format = "text";
};

struct CodeOptions {
    std::uint64_t q = 0;
    std::int64_t m = 0;
    bool oracle = false;
    bool allow_degenerate = false;
    bool allow_large = false;
    std::string format = "json";
};

struct EnumerateOptions {
    std::string family;
    std::uint64_t q_max = 200;
    std::string format = "table";
};

struct ErrataOptions {
    std::uint64_t q_max = 200;
    std::string format = "text";
};

struct VerifyOptions {
    std::string level;
    std::uint64_t q_max = 200;
    std::size_t samples = 50;
    std::uint64_t seed = RankOracleOptions{}.seed;
    bool allow_large = false;
    bool verbose = false;
};

inline int cmd_cosets(const CosetsOptions& opt, std::ostream& out, std::ostream& err) {
    std::optional<CycContext> ctx;
    try {
        const auto q = PrimePower::from_value(opt.q);
        ctx = opt.n ? CycContext(q, *opt.n) : CycContext::family(q);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto cosets = all_cosets(*ctx);
    if (opt.format == "json") {
        nlohmann::ordered_json j{{"q", opt.q}, {"n", ctx->n()}, {"count", cosets.size()}};
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : cosets) arr.push_back({{"rep", c.rep}, {"elements", c.elements}});
        j["cosets"] = arr;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "q = " << opt.q << ", n = " << ctx->n() << ", " << cosets.size() << " cosets\n";
    for (const auto& c : cosets) {
        out << "C_" << c.rep << " = {";
        for (std::size_t i = 0; i < c.elements.size(); ++i) out << (i ? ", " : "") << c.elements[i];
        out << "}\n";
    }
    return kExitOk;
}

namespace detail {

inline void write_records(std::ostream& out, const std::vector<CodeRecord>& recs, const std::string& format) {
    if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : recs) arr.push_back(r);
        out << arr.dump(2) << '\n';
    } else if (format == "csv") {
        out << csv_header() << '\n';
        for (const auto& r : recs) out << to_csv_row(r) << '\n';
    } else {
        write_table_header(out);
        for (const auto& r : recs) write_table_row(out, r);
    }
}

inline bool valid_format(const std::string& f) { return f == "json" || f == "csv" || f == "table"; }

}  // namespace detail

inline int cmd_code(const CodeOptions& opt, std::ostream& out, std::ostream& err) {
    if (!detail::valid_format(opt.format)) {
        err << "error: unknown format '" << opt.format << "'\n";
        return kExitUsage;
    }
    const auto cls = classify(opt.q);
    if (!cls.spec) {
        err << "error: q = " << opt.q << " is not in any family: " << cls.reason << '\n';
        return kExitUsage;
    }
    const auto& spec = *cls.spec;
    try {
        require_m(spec, opt.m, opt.allow_degenerate);
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (opt.oracle && opt.q > kOracleDefaultCap && !opt.allow_large) {
        err << "error: rank oracle limited to q <= " << kOracleDefaultCap << " (pass --allow-large)\n";
        return kExitUsage;
    }

    const auto fc = verify_family_code(spec, opt.m, opt.allow_degenerate);
    int status = fc.ok() ? kExitOk : kExitViolation;
    for (const auto& d : fc.discrepancies) err << "violation: " << d << '\n';

    bool oracle_checked = false;
    if (opt.oracle) {
        const gf::FieldTower tower(spec.q);
        const auto oc = check_rank_oracle(fc.z, tower);
        oracle_checked = oc.ok() && oc.rank == fc.verified.c;
        if (!oracle_checked) {
            err << "violation: rank(HH^dagger) = " << oc.rank << " but c = " << fc.verified.c << '\n';
            status = kExitViolation;
        }
    }
    const auto rec = make_record(fc, oracle_checked);
    if (opt.format == "json") {
        out << nlohmann::ordered_json(rec).dump(2) << '\n';
    } else {
        detail::write_records(out, {rec}, opt.format);
    }
    return status;
}

inline int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
    const auto id = parse_family_id(opt.family);
    if (!id) {
        err << "error: unknown family '" << opt.family << "' (expected q10k3, q10k7, e1mod4 or e3mod4)\n";
        return kExitUsage;
    }
    if (!detail::valid_format(opt.format)) {
        err << "error: unknown format '" << opt.format << "'\n";
        return kExitUsage;
    }
    std::vector<CodeRecord> recs;
    int status = kExitOk;
    for (const auto& fc : enumerate_family(*id, opt.q_max)) {
        for (const auto& d : fc.discrepancies) {
            err << "violation: q=" << fc.spec.q.q << " m=" << fc.m << ": " << d << '\n';
            status = kExitViolation;
        }
        recs.push_back(make_record(fc, false));
    }
    detail::write_records(out, recs, opt.format);
    return status;
}

inline int cmd_errata(const ErrataOptions& opt, std::ostream& out, std::ostream& err) {
    const auto entries = build_errata_report(opt.q_max);
    int status = kExitOk;
    for (const auto& e : entries) {
        if (!e.consistent()) {
            err << "violation: " << e.id << " derivations disagree\n";
            status = kExitViolation;
        }
    }
    if (opt.format == "json") {
        out << errata_to_json(entries).dump(2) << '\n';
    } else if (opt.format == "text") {
        write_errata_text(out, entries);
    } else {
        err << "error: unknown format '" << opt.format << "'\n";
        return kExitUsage;
    }
    return status;
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    SuiteResult r;
    if (opt.level == "coset") {
        r = run_coset_suite(opt.q_max);
    } else if (opt.level == "lemma") {
        r = run_lemma_suite(opt.q_max);
    } else if (opt.level == "theorem") {
        r = run_theorem_suite(opt.q_max);
    } else if (opt.level == "rank-oracle") {
        r = run_rank_oracle_suite({opt.q_max, opt.samples, opt.seed, opt.allow_large});
    } else {
        err << "error: unknown level '" << opt.level << "' (expected coset, lemma, theorem or rank-oracle)\n";
        return kExitUsage;
    }
    out << "verify " << r.level << " (qmax " << opt.q_max << "): " << (r.passed() ? "PASS" : "FAIL") << ", "
        << r.checks << " checks\n";
    for (const auto& line : r.info) out << "  " << line << '\n';
    if (!r.passed()) {
        out << "  counterexample: " << r.failures.front() << '\n';
        if (opt.verbose) {
            for (std::size_t i = 1; i < r.failures.size(); ++i) err << "  " << r.failures[i] << '\n';
        } else if (r.failures.size() > 1) {
            out << "  (" << r.failures.size() - 1 << " more; --verbose lists them)\n";
        }
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace eaqmds::cli
