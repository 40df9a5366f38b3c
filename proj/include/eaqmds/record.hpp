#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "families.hpp"

namespace eaqmds {

/// One verified (q, m) code as emitted by the CLI. Field order is fixed and
/// shared by the JSON object, the CSV header and the table columns.
struct CodeRecord {
    std::string family_id;
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned e = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::int64_t c = 0;
    bool singleton_equality = false;
    bool distance_precondition_ok = false;
    bool rank_oracle_checked = false;
    std::vector<std::string> errata_flags;

    friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

inline const std::vector<std::string>& code_record_fields() {
    static const std::vector<std::string> fields = {
        "family_id", "q", "p", "e", "n", "m", "k", "d", "c",
        "singleton_equality", "distance_precondition_ok", "rank_oracle_checked", "errata_flags"};
    return fields;
}

inline CodeRecord make_record(const FamilyCode& fc, bool rank_oracle_checked) {
    CodeRecord r;
    r.family_id = to_string(fc.spec.id);
    r.q = fc.spec.q.q;
    r.p = fc.spec.q.p;
    r.e = fc.spec.q.e;
    r.n = fc.verified.n;
    r.m = fc.m;
    r.k = fc.verified.k;
    r.d = fc.verified.d;
    r.c = fc.verified.c;
    r.singleton_equality = fc.verified.singleton_equality;
    r.distance_precondition_ok = fc.verified.distance_precondition_ok;
    r.rank_oracle_checked = rank_oracle_checked;
    r.errata_flags = fc.errata_flags;
    return r;
}

inline void to_json(nlohmann::ordered_json& j, const CodeRecord& r) {
    j = nlohmann::ordered_json{{"family_id", r.family_id},
                               {"q", r.q},
                               {"p", r.p},
                               {"e", r.e},
                               {"n", r.n},
                               {"m", r.m},
                               {"k", r.k},
                               {"d", r.d},
                               {"c", r.c},
                               {"singleton_equality", r.singleton_equality},
                               {"distance_precondition_ok", r.distance_precondition_ok},
                               {"rank_oracle_checked", r.rank_oracle_checked},
                               {"errata_flags", r.errata_flags}};
}

inline void from_json(const nlohmann::ordered_json& j, CodeRecord& r) {
    j.at("family_id").get_to(r.family_id);
    j.at("q").get_to(r.q);
    j.at("p").get_to(r.p);
    j.at("e").get_to(r.e);
    j.at("n").get_to(r.n);
    j.at("m").get_to(r.m);
    j.at("k").get_to(r.k);
    j.at("d").get_to(r.d);
    j.at("c").get_to(r.c);
    j.at("singleton_equality").get_to(r.singleton_equality);
    j.at("distance_precondition_ok").get_to(r.distance_precondition_ok);
    j.at("rank_oracle_checked").get_to(r.rank_oracle_checked);
    j.at("errata_flags").get_to(r.errata_flags);
}

inline std::string csv_header() {
    std::string out;
    for (const auto& f : code_record_fields()) {
        if (!out.empty()) out += ',';
        out += f;
    }
    return out;
}

namespace detail {

inline std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const auto& f : flags) {
        if (!out.empty()) out += ';';
        out += f;
    }
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("expected true/false, got '" + s + "'");
}

template <typename T>
T parse_int(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters in integer field '" + s + "'");
    return static_cast<T>(v);
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Comma separated; errata flags are joined with ';' (none contain commas).
inline std::string to_csv_row(const CodeRecord& r) {
    std::ostringstream os;
    os << r.family_id << ',' << r.q << ',' << r.p << ',' << r.e << ',' << r.n << ',' << r.m << ',' << r.k << ','
       << r.d << ',' << r.c << ',' << detail::bool_str(r.singleton_equality) << ','
       << detail::bool_str(r.distance_precondition_ok) << ',' << detail::bool_str(r.rank_oracle_checked) << ','
       << detail::join_flags(r.errata_flags);
    return os.str();
}

inline CodeRecord parse_csv_row(const std::string& line) {
    const auto cells = detail::split(line, ',');
    if (cells.size() != code_record_fields().size()) {
        throw std::invalid_argument("expected " + std::to_string(code_record_fields().size()) + " CSV fields, got " +
                                    std::to_string(cells.size()));
    }
    CodeRecord r;
    r.family_id = cells[0];
    r.q = detail::parse_int<std::uint64_t>(cells[1]);
    r.p = detail::parse_int<std::uint64_t>(cells[2]);
    r.e = detail::parse_int<unsigned>(cells[3]);
    r.n = detail::parse_int<std::int64_t>(cells[4]);
    r.m = detail::parse_int<std::int64_t>(cells[5]);
    r.k = detail::parse_int<std::int64_t>(cells[6]);
    r.d = detail::parse_int<std::int64_t>(cells[7]);
    r.c = detail::parse_int<std::int64_t>(cells[8]);
    r.singleton_equality = detail::parse_bool(cells[9]);
    r.distance_precondition_ok = detail::parse_bool(cells[10]);
    r.rank_oracle_checked = detail::parse_bool(cells[11]);
    if (!cells[12].empty()) r.errata_flags = detail::split(cells[12], ';');
    return r;
}

inline std::string format_bracket(const CodeRecord& r) {
    return "[[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + ";" +
           std::to_string(r.c) + "]]";
}

inline void write_table_header(std::ostream& os) {
    os << std::left << std::setw(8) << "family" << std::right << std::setw(6) << "q" << std::setw(4) << "m"
       << "  " << std::left << std::setw(26) << "code" << std::setw(10) << "singleton" << std::setw(14)
       << "d<=(n+2)/2" << std::setw(8) << "oracle" << "flags" << '\n';
}

inline void write_table_row(std::ostream& os, const CodeRecord& r) {
    os << std::left << std::setw(8) << r.family_id << std::right << std::setw(6) << r.q << std::setw(4) << r.m
       << "  " << std::left << std::setw(26) << format_bracket(r) << std::setw(10)
       << (r.singleton_equality ? "yes" : "no") << std::setw(14) << (r.distance_precondition_ok ? "yes" : "no")
       << std::setw(8) << (r.rank_oracle_checked ? "yes" : "-") << detail::join_flags(r.errata_flags) << '\n';
}

}  // namespace eaqmds
