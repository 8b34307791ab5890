#include "sl2ext/verify.hpp"

#include "sl2ext/golden.hpp"
#include "sl2ext/h2.hpp"
#include "sl2ext/strings.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl2ext {

namespace {

std::string row_text(const TableRow& row) {
    std::ostringstream out;
    out << "weight=" << row.weight << " dim=" << row.dim;
    return out.str();
}

std::string join_counts(const std::vector<DimCount>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
    return out.str();
}

std::string string_text(const std::vector<unsigned>& entries) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries.size(); ++i)
        out << (i ? "," : "") << entries[i];
    out << ')';
    return out.str();
}

void add_check(SuiteReport& report, std::string name, bool pass, std::string expected,
               std::string actual) {
    report.checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
}

void add_equal(SuiteReport& report, std::string name, const DimCount& expected,
               const DimCount& actual) {
    add_check(report, std::move(name), expected == actual, expected.str(), actual.str());
}

SuiteReport verify_tables(ExtEngine& engine) {
    SuiteReport report{"tables", {}};
    auto self_rows = self_twist_table(engine, 31);
    std::erase_if(self_rows, [](const TableRow& r) { return r.degree < 4; });
    auto self_checks = compare_tables("self-twist", golden_self_twist(), self_rows);
    report.checks.insert(report.checks.end(), self_checks.begin(), self_checks.end());

    const auto r3_rows = r_twist_table(engine, 3, 3, 32);
    auto r3_checks = compare_tables("r3-twist", golden_r3_twist(), r3_rows);
    report.checks.insert(report.checks.end(), r3_checks.begin(), r3_checks.end());
    return report;
}

SuiteReport verify_towers() {
    SuiteReport report{"towers", {}};
    for (std::uint32_t p : {5u, 7u})
        for (unsigned n = 0; n <= 8; ++n) {
            const DimCount total = ext2_self_tower({n, Characteristic(p)});
            add_equal(report, "tower p=" + std::to_string(p) + " n=" + std::to_string(n), n,
                      total);
        }
    return report;
}

SuiteReport verify_h2_cross(ExtEngine& engine) {
    SuiteReport report{"h2-cross", {}};
    for (std::uint32_t p : {5u, 7u}) {
        const Weight mu_max = 2 * ipow(p, 3);
        const auto mismatches = h2_cross_check(engine, Characteristic(p), mu_max);
        std::ostringstream actual;
        actual << mismatches.size() << " mismatches";
        if (!mismatches.empty())
            actual << " (first at mu=" << mismatches.front() << ')';
        add_check(report,
                  "closed form vs engine p=" + std::to_string(p) + " (mu<=" + mu_max.str() + ")",
                  mismatches.empty(), "0 mismatches", actual.str());
    }
    return report;
}

SuiteReport verify_bijection() {
    SuiteReport report{"bijection", {}};
    for (unsigned m = 1; m <= 10; ++m)
        for (unsigned n = 1; n <= 10; ++n) {
            std::multiset<std::vector<unsigned>> from_b;
            for_each_b_string(m, n, kDefaultEnumerationCap, [&from_b](const BString& b) {
                from_b.insert(strip_trailing_zeros(b.recovered_a_string()));
            });
            std::multiset<std::vector<unsigned>> from_traces;
            for_each_trace(m, ipow(2, n), kDefaultEnumerationCap, [&from_traces](const TraceView& t) {
                if (t.status == TraceStatus::NontrivialLeaf)
                    from_traces.insert({t.a_string.begin(), t.a_string.end()});
            });
            const bool pass = from_b == from_traces;
            std::ostringstream expected, actual;
            expected << from_traces.size() << " strings, matching the nontrivial traces";
            actual << from_b.size() << " strings, "
                   << (pass ? "matching" : "NOT matching the nontrivial traces");
            add_check(report, "b-strings m=" + std::to_string(m) + " n=" + std::to_string(n),
                      pass, expected.str(), actual.str());
        }
    return report;
}

SuiteReport verify_stability(ExtEngine& engine) {
    SuiteReport report{"stability", {}};
    for (unsigned m = 2; m <= 10; ++m) {
        const auto profile = stability_profile(engine, m, m + 3);
        const DimCount& stable = profile[m];
        bool pass = true;
        for (unsigned r = 0; r < m; ++r)
            pass &= profile[r] < stable;
        for (unsigned r = m; r <= m + 3; ++r)
            pass &= profile[r] == stable;
        add_check(report, "stability m=" + std::to_string(m), pass,
                  "strictly below " + stable.str() + " before r=" + std::to_string(m) +
                      ", then constant",
                  join_counts(profile));
    }
    return report;
}

SuiteReport verify_bounds(ExtEngine& engine) {
    SuiteReport report{"bounds", {}};
    const Characteristic two(2);

    // The identification chain: partitions of unity into m parts, c-strings
    // of m - 1, and dim H^m(G, L(2^m)) agree.
    for (unsigned m = 2; m <= 31; ++m) {
        const DimCount parts = partitions_of_unity(m);
        const DimCount cstr = count_c_strings(m - 1);
        const DimCount coh = engine.cohomology_dim(m, ipow(2, m), two);
        const bool pass = parts == cstr && cstr == coh;
        add_check(report, "identification m=" + std::to_string(m), pass,
                  "partitions = c-strings = cohomology",
                  parts.str() + " / " + cstr.str() + " / " + coh.str());
    }

    const GrowthReport growth = growth_bounds(31);
    add_check(report, "growth bounds k=4..31", growth.all_bounds_hold,
              "Fib(k-1) <= count(k) <= 2^(k-1) for all k",
              growth.all_bounds_hold ? "all bounds hold" : "bound violated");
    const double ratio = growth.rows.back().next_ratio;
    {
        std::ostringstream actual;
        actual << ratio;
        add_check(report, "growth ratio count(32)/count(31)", ratio >= 1.79 && ratio <= 1.80,
                  "in [1.79, 1.80] (approximate)", actual.str());
    }

    for (unsigned t = 0; t <= 12; ++t) {
        const auto family = doubling_family(t);
        std::set<std::vector<unsigned>> distinct;
        bool valid = family.size() == (std::size_t{1} << t);
        for (const CString& s : family) {
            valid &= s.entries.size() == 2 * std::size_t{t} + 1 && is_c_string(s.entries);
            distinct.insert(s.entries);
        }
        valid &= distinct.size() == family.size();
        valid &= count_c_strings(2 * t + 1) >= DimCount(1) << t;
        add_check(report, "doubling family t=" + std::to_string(t), valid,
                  std::to_string(std::size_t{1} << t) + " distinct c-strings of " +
                      std::to_string(2 * t + 1),
                  valid ? "as expected" : "violated");
    }

    // Doubling the degree at the matching weight at least doubles the
    // dimension every two steps: dim H^(2m)(G, L(4^m)) >= 2^(m-1).
    for (unsigned m = 3; m <= 12; ++m) {
        const DimCount coh = engine.cohomology_dim(2 * m, ipow(4, m), two);
        const DimCount bound = ipow(2, m - 1);
        add_check(report, "degree-doubling m=" + std::to_string(m), coh >= bound,
                  ">= " + bound.str(), coh.str());
    }
    return report;
}

}  // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::size_t SuiteReport::pass_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::vector<CheckResult> compare_tables(const std::string& label,
                                        const std::vector<TableRow>& expected,
                                        const std::vector<TableRow>& computed) {
    std::vector<CheckResult> checks;
    if (expected.size() != computed.size()) {
        checks.push_back({label + " row count", false, std::to_string(expected.size()),
                          std::to_string(computed.size())});
        return checks;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const TableRow& want = expected[i];
        const TableRow& got = computed[i];
        checks.push_back({label + " m=" + std::to_string(want.degree), want == got,
                          row_text(want),
                          got.degree == want.degree ? row_text(got)
                                                    : "m=" + std::to_string(got.degree) + " " +
                                                          row_text(got)});
    }
    return checks;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"tables",    "towers",    "h2-cross",
                                               "bijection", "stability", "bounds"};
    return names;
}

SuiteReport run_verify_suite(const std::string& name, ExtEngine& engine) {
    if (name == "tables")
        return verify_tables(engine);
    if (name == "towers")
        return verify_towers();
    if (name == "h2-cross")
        return verify_h2_cross(engine);
    if (name == "bijection")
        return verify_bijection();
    if (name == "stability")
        return verify_stability(engine);
    if (name == "bounds")
        return verify_bounds(engine);
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

std::vector<SuiteReport> verify_all(ExtEngine& engine) {
    std::vector<SuiteReport> reports;
    reports.reserve(verify_suite_names().size());
    for (const std::string& name : verify_suite_names())
        reports.push_back(run_verify_suite(name, engine));
    return reports;
}

}  // namespace sl2ext
