#include "ehp/known_data.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "ehp/bounds.hpp"

namespace ehp {

bool operator==(const KnownTorsionRecord& a, const KnownTorsionRecord& b)
{
    return a.p == b.p && a.n == b.n && a.q == b.q && a.s == b.s && a.source == b.source;
}

parse_error::parse_error(std::string what, std::vector<LineIssue> issues)
    : std::runtime_error(std::move(what)), issues_(std::move(issues))
{
}

namespace {

std::string strip(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool parse_ll(const std::string& text, long long& out)
{
    const std::string t = strip(text);
    if (t.empty())
        return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(t, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == t.size();
}

std::string make_message(const std::vector<LineIssue>& issues)
{
    std::ostringstream os;
    os << "known-data parse failed (" << issues.size() << " issue"
       << (issues.size() == 1 ? "" : "s") << "):";
    for (const auto& issue : issues) {
        os << "\n  line " << issue.line;
        if (issue.field > 0)
            os << ", field " << issue.field;
        os << ": " << issue.reason;
    }
    return os.str();
}

}  // namespace

std::vector<KnownTorsionRecord> parse_known(std::istream& in)
{
    std::vector<KnownTorsionRecord> records;
    std::vector<LineIssue> issues;
    std::string line;
    int line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty() || text[0] == '#')
            continue;
        if (!header_seen) {
            if (text != "p,n,q,s,source")
                issues.push_back({line_no, 0, "expected header 'p,n,q,s,source'"});
            header_seen = true;
            continue;
        }

        // Four integer fields, then free text (may itself contain commas).
        std::array<std::string, 4> fields;
        std::size_t start = 0;
        bool short_line = false;
        for (auto& field : fields) {
            const auto comma = text.find(',', start);
            if (comma == std::string::npos) {
                short_line = true;
                break;
            }
            field = text.substr(start, comma - start);
            start = comma + 1;
        }
        if (short_line) {
            issues.push_back({line_no, 0, "expected 'p,n,q,s,source'"});
            continue;
        }

        long long values[4];
        bool numeric_ok = true;
        for (int i = 0; i < 4; ++i)
            if (!parse_ll(fields[i], values[i])) {
                issues.push_back({line_no, i + 1,
                                  "not an integer: '" + strip(fields[i]) + "'"});
                numeric_ok = false;
            }
        if (!numeric_ok)
            continue;

        KnownTorsionRecord rec;
        rec.p = values[0];
        rec.n = static_cast<int>(values[1]);
        rec.q = static_cast<int>(values[2]);
        rec.s = values[3];
        rec.source = strip(text.substr(start));

        if (!is_prime(rec.p))
            issues.push_back({line_no, 1, "p is not prime"});
        else if (rec.n < 1 || rec.q < 1)
            issues.push_back({line_no, 2, "n and q must be >= 1"});
        else if (rec.s < 0)
            issues.push_back({line_no, 4, "s must be >= 0"});
        else if (rec.q < rec.n && rec.s != 0)
            issues.push_back({line_no, 4, "q < n forces s = 0"});
        else if (rec.q == rec.n && rec.s != 0)
            issues.push_back({line_no, 4, "q = n forces s = 0 (pi_n(S^n) is torsion free)"});
        else
            records.push_back(std::move(rec));
    }

    if (!header_seen)
        issues.push_back({line_no, 0, "missing header 'p,n,q,s,source'"});
    if (!issues.empty()) {
        std::string message = make_message(issues);
        throw parse_error(std::move(message), std::move(issues));
    }
    return records;
}

std::vector<KnownTorsionRecord> load_known(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open known-data file: " + path, {});
    return parse_known(in);
}

std::string to_csv(const std::vector<KnownTorsionRecord>& records)
{
    std::ostringstream os;
    os << "p,n,q,s,source\n";
    for (const auto& rec : records)
        os << rec.p << ',' << rec.n << ',' << rec.q << ',' << rec.s << ',' << rec.source << '\n';
    return os.str();
}

namespace {

std::string dec(const BoundValue& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string real_text(long double v)
{
    std::ostringstream os;
    os.precision(12);
    os << static_cast<double>(v);
    return os.str();
}

void push_int_row(ComparisonReport& report, const KnownTorsionRecord& rec, std::string name,
                  const BoundValue& bound, bool via_splitting)
{
    ComparisonRow row;
    row.rec = rec;
    row.bound = std::move(name);
    row.value_text = dec(bound);
    row.margin_int = bound - rec.s;
    row.margin_text = dec(row.margin_int);
    row.exact = true;
    row.ok = row.margin_int >= 0;
    row.via_splitting = via_splitting;
    report.rows.push_back(std::move(row));
}

}  // namespace

ComparisonReport compare_known(const std::vector<KnownTorsionRecord>& records, P2Policy policy)
{
    ComparisonReport report;
    report.records = static_cast<int>(records.size());
    std::map<long long, std::unique_ptr<EvalContext>> contexts;

    for (const auto& rec : records) {
        auto& ctx = contexts[rec.p];
        if (!ctx)
            ctx = std::make_unique<EvalContext>(rec.p, policy);

        const bool splitting = rec.p != 2 && rec.n % 2 == 0;
        BoundValue t;
        BoundValue strong;
        if (splitting) {
            t = ctx->even_sphere_value(rec.n, rec.q);
            strong = main_bound(rec.p, 2 * rec.n - 1, rec.q).strong;
            if (rec.q >= 2)
                strong += main_bound(rec.p, rec.n - 1, rec.q - 1).strong;
        } else {
            t = ctx->t_value({rec.n, rec.q});
            strong = main_bound(rec.p, rec.n, rec.q).strong;
        }
        push_int_row(report, rec, "t", t, splitting);
        push_int_row(report, rec, "strong", strong, splitting);
        push_int_row(report, rec, "henn", henn_bound(rec.n, rec.q), false);

        ComparisonRow bh;
        bh.rec = rec;
        bh.bound = "bodigheimer-henn";
        const long double value = bodigheimer_henn_bound(rec.n, rec.q).value();
        bh.value_text = real_text(value);
        bh.margin_real = value - static_cast<long double>(rec.s);
        bh.margin_text = real_text(bh.margin_real);
        bh.exact = false;
        bh.ok = bh.margin_real >= 0.0L;
        report.rows.push_back(std::move(bh));
    }

    for (const auto& row : report.rows)
        (row.ok ? report.rows_ok : report.rows_violating)++;
    return report;
}

}  // namespace ehp
