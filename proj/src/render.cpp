#include "ehp/render.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ehp/bounds.hpp"

namespace ehp {

using ordered_json = nlohmann::ordered_json;

Format format_from_string(std::string_view name)
{
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    if (name == "md")
        return Format::Md;
    throw domain_error("unknown format: " + std::string(name));
}

const char* to_string(Format format)
{
    switch (format) {
        case Format::Csv: return "csv";
        case Format::Json: return "json";
        case Format::Md: return "md";
    }
    return "?";
}

std::string format_real(long double v, int significant)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lg", significant, v);
    return buf;
}

namespace {

std::string dec(const BoundValue& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

// Quotes a CSV field only when it needs it.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string md_row(const std::vector<std::string>& cells)
{
    std::string out = "|";
    for (const auto& cell : cells)
        out += " " + cell + " |";
    out += "\n";
    return out;
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows)
{
    std::string out = md_row(header);
    std::vector<std::string> rule(header.size(), "---");
    out += md_row(rule);
    for (const auto& row : rows)
        out += md_row(row);
    return out;
}

std::string json_dump(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_value(const BoundValue& value)
{
    return dec(value) + "\n";
}

std::string render_stem_table(const StemTable& table, Format format)
{
    switch (format) {
        case Format::Csv: {
            std::string out = "n,t,via_splitting\n";
            for (const auto& row : table.rows)
                out += std::to_string(row.n) + "," + dec(row.value) + "," +
                       (row.via_splitting ? "true" : "false") + "\n";
            return out;
        }
        case Format::Json: {
            ordered_json j;
            j["p"] = table.p;
            j["stem"] = table.stem;
            j["rows"] = ordered_json::array();
            for (const auto& row : table.rows)
                j["rows"].push_back({{"n", row.n},
                                     {"t", dec(row.value)},
                                     {"via_splitting", row.via_splitting}});
            return json_dump(j);
        }
        case Format::Md: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : table.rows)
                rows.push_back({std::to_string(row.n), dec(row.value),
                                row.via_splitting ? "yes" : ""});
            return md_table({"n", "t", "splitting"}, rows);
        }
    }
    return "";
}

std::string render_sequence(const std::vector<BoundValue>& h, Format format)
{
    switch (format) {
        case Format::Csv: {
            std::string out = "j,H\n";
            for (std::size_t j = 0; j < h.size(); ++j)
                out += std::to_string(j + 1) + "," + dec(h[j]) + "\n";
            return out;
        }
        case Format::Json: {
            ordered_json j;
            j["H"] = ordered_json::array();
            for (const auto& value : h)
                j["H"].push_back(dec(value));
            return json_dump(j);
        }
        case Format::Md: {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t j = 0; j < h.size(); ++j)
                rows.push_back({std::to_string(j + 1), dec(h[j])});
            return md_table({"j", "H_j"}, rows);
        }
    }
    return "";
}

std::vector<BoundsRow> bounds_rows(long long p, int n, int q)
{
    std::vector<BoundsRow> rows;
    const bool odd_domain = p == 2 || n % 2 == 1;

    if (odd_domain) {
        const MainBound main = main_bound(p, n, q);
        rows.push_back({"main", "2", main.form.exponent_string(),
                        format_real(main.form.value()), dec(main.strong), ""});
        const ExpForm simple = simple_bound(p, n, q);
        rows.push_back({"simple", "2", simple.exponent_string(),
                        format_real(simple.value()), "", ""});
    } else {
        rows.push_back({"main", "", "", "", "", "even n at odd p: bound applies via splitting"});
        rows.push_back({"simple", "", "", "", "", "even n at odd p: bound applies via splitting"});
    }

    const BoundValue henn = henn_bound(n, q);
    const ExpForm henn_form{2.0, Rational(static_cast<long long>(q) - n + 1)};
    rows.push_back({"henn", "2", henn_form.exponent_string(), format_real(henn_form.value()),
                    dec(henn), ""});

    const ExpForm bh = bodigheimer_henn_bound(n, q);
    rows.push_back({"bodigheimer-henn", "3", bh.exponent_string(), format_real(bh.value()), "",
                    "stated for odd n, all p"});

    const ExpForm selick = selick_rank_bound(q);
    rows.push_back({"selick-rank", "3", selick.exponent_string(),
                    q <= 120 ? format_real(selick.value()) : "", "", "rank bound, depends on q only"});

    const LimitationConstants lim = limitation_constants(p);
    rows.push_back({"golden-base", format_real(lim.golden_base.base, 17),
                    lim.golden_base.exponent_string(), format_real(lim.golden_base.value()), "",
                    "lower limit for any base from the recursion"});
    rows.push_back({"cp-lower", "1/2", lim.cp_lower.exponent_string(),
                    format_real(lim.cp_lower.value()), "", "radius-of-convergence constant"});
    return rows;
}

std::string render_bounds(const std::vector<BoundsRow>& rows, Format format)
{
    switch (format) {
        case Format::Csv: {
            std::string out = "bound,base,exponent,value,integer,note\n";
            for (const auto& row : rows)
                out += csv_field(row.name) + "," + csv_field(row.base) + "," +
                       csv_field(row.exponent) + "," + csv_field(row.value) + "," +
                       csv_field(row.integer) + "," + csv_field(row.note) + "\n";
            return out;
        }
        case Format::Json: {
            ordered_json j = ordered_json::array();
            for (const auto& row : rows)
                j.push_back({{"bound", row.name},
                             {"base", row.base},
                             {"exponent", row.exponent},
                             {"value", row.value},
                             {"integer", row.integer},
                             {"note", row.note}});
            return json_dump(j);
        }
        case Format::Md: {
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : rows)
                cells.push_back({row.name, row.base, row.exponent, row.value, row.integer, row.note});
            return md_table({"bound", "base", "exponent", "value", "integer", "note"}, cells);
        }
    }
    return "";
}

std::string render_reports(const std::vector<VerificationReport>& reports, Format format)
{
    switch (format) {
        case Format::Csv: {
            std::string out = "suite,ranges,checks,violations,passed\n";
            for (const auto& report : reports)
                out += csv_field(report.suite) + "," + csv_field(report.ranges) + "," +
                       std::to_string(report.checks_run) + "," +
                       std::to_string(report.violations.size()) + "," +
                       (report.passed() ? "true" : "false") + "\n";
            bool any = false;
            for (const auto& report : reports)
                any = any || !report.passed();
            if (any) {
                out += "\nsuite,p,n,q,relation,lhs,rhs\n";
                for (const auto& report : reports)
                    for (const auto& v : report.violations)
                        out += csv_field(report.suite) + "," + std::to_string(v.p) + "," +
                               std::to_string(v.n) + "," + std::to_string(v.q) + "," +
                               csv_field(v.relation) + "," + csv_field(v.lhs) + "," +
                               csv_field(v.rhs) + "\n";
            }
            return out;
        }
        case Format::Json: {
            ordered_json j = ordered_json::array();
            for (const auto& report : reports) {
                ordered_json entry;
                entry["suite"] = report.suite;
                entry["ranges"] = report.ranges;
                entry["checks"] = report.checks_run;
                entry["passed"] = report.passed();
                entry["violations"] = ordered_json::array();
                for (const auto& v : report.violations)
                    entry["violations"].push_back({{"p", v.p},
                                                   {"n", v.n},
                                                   {"q", v.q},
                                                   {"relation", v.relation},
                                                   {"lhs", v.lhs},
                                                   {"rhs", v.rhs}});
                j.push_back(std::move(entry));
            }
            return json_dump(j);
        }
        case Format::Md: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& report : reports)
                rows.push_back({report.suite, report.ranges, std::to_string(report.checks_run),
                                std::to_string(report.violations.size()),
                                report.passed() ? "pass" : "FAIL"});
            std::string out = md_table({"suite", "ranges", "checks", "violations", "result"}, rows);
            std::vector<std::vector<std::string>> vrows;
            for (const auto& report : reports)
                for (const auto& v : report.violations)
                    vrows.push_back({report.suite, std::to_string(v.p), std::to_string(v.n),
                                     std::to_string(v.q), v.relation, v.lhs, v.rhs});
            if (!vrows.empty()) {
                out += "\n";
                out += md_table({"suite", "p", "n", "q", "relation", "lhs", "rhs"}, vrows);
            }
            return out;
        }
    }
    return "";
}

std::string render_estimate(const GrowthEstimate& estimate, Format format)
{
    switch (format) {
        case Format::Csv: {
            std::string out = "nu_hat,k_hat,q_max,window,method,residual\n";
            out += format_real(estimate.nu_hat) + "," + format_real(estimate.k_hat) + "," +
                   std::to_string(estimate.q_used) + "," + std::to_string(estimate.window) + "," +
                   estimate.method + "," + format_real(estimate.residual, 6) + "\n";
            return out;
        }
        case Format::Json: {
            ordered_json j;
            j["nu_hat"] = estimate.nu_hat;
            j["k_hat"] = estimate.k_hat;
            j["q_max"] = estimate.q_used;
            j["window"] = estimate.window;
            j["method"] = estimate.method;
            j["residual"] = estimate.residual;
            return json_dump(j);
        }
        case Format::Md:
            return md_table({"nu_hat", "k_hat", "q_max", "window", "method", "residual"},
                            {{format_real(estimate.nu_hat), format_real(estimate.k_hat),
                              std::to_string(estimate.q_used), std::to_string(estimate.window),
                              estimate.method, format_real(estimate.residual, 6)}});
    }
    return "";
}

std::string render_comparison(const ComparisonReport& report, Format format)
{
    switch (format) {
        case Format::Csv: {
            std::string out = "p,n,q,s,bound,value,margin,ok,splitting,source\n";
            for (const auto& row : report.rows)
                out += std::to_string(row.rec.p) + "," + std::to_string(row.rec.n) + "," +
                       std::to_string(row.rec.q) + "," + std::to_string(row.rec.s) + "," +
                       csv_field(row.bound) + "," + csv_field(row.value_text) + "," +
                       csv_field(row.margin_text) + "," + (row.ok ? "true" : "false") + "," +
                       (row.via_splitting ? "true" : "false") + "," + csv_field(row.rec.source) +
                       "\n";
            return out;
        }
        case Format::Json: {
            ordered_json j;
            j["rows"] = ordered_json::array();
            for (const auto& row : report.rows)
                j["rows"].push_back({{"p", row.rec.p},
                                     {"n", row.rec.n},
                                     {"q", row.rec.q},
                                     {"s", row.rec.s},
                                     {"bound", row.bound},
                                     {"value", row.value_text},
                                     {"margin", row.margin_text},
                                     {"ok", row.ok},
                                     {"splitting", row.via_splitting},
                                     {"source", row.rec.source}});
            j["summary"] = {{"records", report.records},
                            {"rows_ok", report.rows_ok},
                            {"rows_violating", report.rows_violating}};
            return json_dump(j);
        }
        case Format::Md: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : report.rows)
                rows.push_back({std::to_string(row.rec.p), std::to_string(row.rec.n),
                                std::to_string(row.rec.q), std::to_string(row.rec.s), row.bound,
                                row.value_text, row.margin_text, row.ok ? "ok" : "VIOLATION",
                                row.rec.source});
            return md_table({"p", "n", "q", "s", "bound", "value", "margin", "ok", "source"},
                            rows);
        }
    }
    return "";
}

}  // namespace ehp
