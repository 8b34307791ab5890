// Acceptance gate: one release-blocking criterion per entry, each printing a
// single [PASS]/[FAIL] line (plus indented detail). Criteria with a stated
// runtime budget also fail when they exceed it. Exits nonzero if any
// selected criterion fails.
//
// Criterion 12 encodes a conjectured monotone-doubling growth property for
// the odd-characteristic self-twist sequence dim H^m(G, L(2 p^m)). The exact
// values computed here refute the monotone and doubling clauses (the
// sequence oscillates); the criterion is kept as stated and fails honestly,
// documenting the measured sequences. Every engine value feeding it is
// cross-checked elsewhere (criteria 6 and 7) by independent references.

#include "sl2ext/engine.hpp"
#include "sl2ext/golden.hpp"
#include "sl2ext/h2.hpp"
#include "sl2ext/strings.hpp"
#include "sl2ext/weights.hpp"

#include "reference_impl.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sl2ext;

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome check_table(const std::vector<TableRow>& golden) {
    ExtEngine engine;
    const Characteristic two(2);
    std::ostringstream detail;
    bool pass = true;
    for (const TableRow& row : golden) {
        const DimCount got = engine.cohomology_dim(row.degree, row.weight, two);
        if (got != row.dim) {
            pass = false;
            detail << "m=" << row.degree << " expected " << row.dim << " got " << got << "; ";
        }
    }
    if (pass)
        detail << golden.size() << " rows exact";
    return {pass, detail.str()};
}

Outcome criterion_1() { return check_table(golden_self_twist()); }

Outcome criterion_2() { return check_table(golden_r3_twist()); }

Outcome criterion_3() {
    ExtEngine engine;
    const Characteristic two(2);
    std::ostringstream detail;
    bool pass = true;
    for (unsigned m = 2; m <= 31; ++m) {
        const DimCount parts = partitions_of_unity(m);
        const DimCount cstr = count_c_strings(m - 1);
        const DimCount coh = engine.cohomology_dim(m, ipow(2, m), two);
        if (parts != cstr || cstr != coh) {
            pass = false;
            detail << "m=" << m << ": " << parts << '/' << cstr << '/' << coh << "; ";
        }
    }
    if (pass)
        detail << "partitions = c-strings = cohomology for m=2..31";
    return {pass, detail.str()};
}

Outcome criterion_4() {
    ExtEngine engine;
    const Characteristic two(2);
    std::ostringstream detail;
    bool pass = true;
    for (unsigned m = 3; m <= 12; ++m) {
        const DimCount coh = engine.cohomology_dim(2 * m, ipow(2, 2 * m), two);
        if (coh < ipow(2, m - 1)) {
            pass = false;
            detail << "dimension bound fails at m=" << m << "; ";
        }
    }
    for (unsigned t = 0; t <= 12; ++t) {
        const auto family = doubling_family(t);
        std::set<std::vector<unsigned>> distinct;
        bool ok = family.size() == std::size_t{1} << t;
        for (const CString& s : family) {
            ok = ok && s.entries.size() == 2 * std::size_t{t} + 1 && is_c_string(s.entries);
            distinct.insert(s.entries);
        }
        if (!ok || distinct.size() != family.size()) {
            pass = false;
            detail << "doubling family t=" << t << " invalid; ";
        }
    }
    if (pass)
        detail << "2^(m-1) bound m=3..12; families t<=12 valid and distinct";
    return {pass, detail.str()};
}

Outcome criterion_5() {
    std::ostringstream detail;
    bool pass = true;
    for (std::uint32_t p : {5u, 7u, 11u})
        for (unsigned n = 0; n <= 10; ++n) {
            const DimCount total = ext2_self_tower({n, Characteristic(p)});
            if (total != n) {
                pass = false;
                detail << "p=" << p << " n=" << n << " got " << total << "; ";
            }
        }
    if (pass)
        detail << "tower sum equals height for p=5,7,11, n=0..10";
    return {pass, detail.str()};
}

Outcome criterion_6() {
    ExtEngine engine;
    std::ostringstream detail;
    bool pass = true;
    for (std::uint32_t p : {5u, 7u}) {
        const Weight mu_max = 2 * ipow(p, 3);
        const auto mismatches = h2_cross_check(engine, Characteristic(p), mu_max);
        detail << "p=" << p << ": " << mismatches.size() << " disagreements up to " << mu_max
               << "; ";
        if (!mismatches.empty()) {
            pass = false;
            detail << "first at mu=" << mismatches.front() << "; ";
        }
    }
    return {pass, detail.str()};
}

Outcome criterion_7() {
    ExtEngine engine;
    const Characteristic two(2);
    std::uint64_t trace_mismatches = 0;
    for (unsigned m = 1; m <= 8; ++m)
        for (std::uint64_t mu = 0; mu <= 1024; ++mu)
            if (engine.cohomology_dim(m, mu, two) != ref::count_traces(2, m, 0, mu))
                ++trace_mismatches;

    ref::TwoRuleTable literal;
    std::uint64_t literal_mismatches = 0;
    for (unsigned q = 0; q <= 8; ++q)
        for (std::uint64_t lambda = 0; lambda <= 512; ++lambda)
            for (std::uint64_t mu = 0; mu <= 512; ++mu)
                if (engine.ext_dim(q, lambda, mu, two) != literal.ext(q, lambda, mu))
                    ++literal_mismatches;

    std::ostringstream detail;
    detail << "trace count m<=8, mu<=1024: " << trace_mismatches
           << " mismatches; two-rule reference q<=8, weights<=512: " << literal_mismatches
           << " mismatches";
    return {trace_mismatches == 0 && literal_mismatches == 0, detail.str()};
}

Outcome criterion_8() {
    ExtEngine engine;
    std::ostringstream detail;
    bool pass = true;
    for (unsigned m = 2; m <= 10; ++m) {
        const auto profile = stability_profile(engine, m, m + 3);
        const DimCount& stable = profile[m];
        bool ok = true;
        for (unsigned r = 0; r < m; ++r)
            ok = ok && profile[r] < stable;
        for (unsigned r = m; r <= m + 3; ++r)
            ok = ok && profile[r] == stable;
        if (!ok) {
            pass = false;
            detail << "profile not stable at m=" << m << "; ";
        }
    }
    if (pass)
        detail << "profiles strictly below the stable value before r=m, constant through r=m+3";
    return {pass, detail.str()};
}

Outcome criterion_9() {
    ExtEngine engine;
    const Characteristic two(2);
    std::ostringstream detail;
    bool pass = true;
    for (unsigned m = 1; m <= 10; ++m)
        for (unsigned n = 1; n <= 10; ++n) {
            std::multiset<std::vector<unsigned>> recovered, nontrivial;
            for_each_b_string(m, n, kDefaultEnumerationCap, [&recovered](const BString& b) {
                recovered.insert(strip_trailing_zeros(b.recovered_a_string()));
            });
            for_each_trace(m, ipow(2, n), kDefaultEnumerationCap,
                           [&nontrivial](const TraceView& t) {
                               if (t.status == TraceStatus::NontrivialLeaf)
                                   nontrivial.insert({t.a_string.begin(), t.a_string.end()});
                           });
            const DimCount coh = engine.cohomology_dim(m, ipow(2, n), two);
            if (DimCount(recovered.size()) != coh || recovered != nontrivial) {
                pass = false;
                detail << "(m=" << m << ",n=" << n << ") ";
            }
        }
    if (pass)
        detail << "all 100 (m,n) pairs: counts match, recovered strings all nontrivial";
    return {pass, detail.str()};
}

Outcome criterion_10() {
    const DimCount c30 = count_c_strings(30);
    const DimCount c31 = count_c_strings(31);
    const double ratio = c31.convert_to<double>() / c30.convert_to<double>();
    std::ostringstream detail;
    detail << c31 << " / " << c30 << " = " << std::setprecision(6) << ratio;
    return {ratio >= 1.79 && ratio <= 1.80, detail.str()};
}

Outcome criterion_11() {
    const auto traces = expand_trace(6, 24);
    const auto find = [&traces](const std::vector<unsigned>& a) -> const LeafTrace* {
        for (const LeafTrace& t : traces)
            if (t.a_string == a)
                return &t;
        return nullptr;
    };
    const LeafTrace* good = find({4, 0, 2});
    const LeafTrace* dead = find({4, 2});
    ExtEngine engine;
    const bool pass = good != nullptr && good->status == TraceStatus::NontrivialLeaf &&
                      dead != nullptr && dead->status == TraceStatus::TrivialLeaf &&
                      find({3, 3}) == nullptr && find({3, 2, 1}) == nullptr &&
                      engine.ext_dim(6, 0, 24, Characteristic(2)) >= 1;
    std::ostringstream detail;
    detail << traces.size() << " traces; (4,0,2) "
           << (good ? (good->status == TraceStatus::NontrivialLeaf ? "nontrivial" : "wrong status")
                    : "missing")
           << ", (4,2) "
           << (dead ? (dead->status == TraceStatus::TrivialLeaf ? "trivial" : "wrong status")
                    : "missing")
           << ", (3,3)/(3,2,1) " << (find({3, 3}) == nullptr && find({3, 2, 1}) == nullptr
                                         ? "absent"
                                         : "PRESENT");
    return {pass, detail.str()};
}

Outcome criterion_12() {
    ExtEngine engine;
    std::ostringstream detail;
    bool computable = true;
    bool monotone = true;
    bool doubling = true;
    for (std::uint32_t pv : {3u, 5u}) {
        const Characteristic p(pv);
        std::vector<DimCount> values;
        for (unsigned m = 0; m <= 16; ++m)
            values.push_back(engine.cohomology_dim(m, 2 * ipow(pv, m), p));
        detail << "p=" << pv << " m=0..16:";
        for (const DimCount& v : values)
            detail << ' ' << v;
        detail << '\n';
        for (unsigned m = 6; m < 16; ++m)
            if (values[m + 1] < values[m])
                monotone = false;
        for (unsigned m = 6; m + 3 <= 16; ++m)
            if (values[m + 3] < 2 * values[m])
                doubling = false;
    }
    detail << "computable m<=16: " << (computable ? "yes" : "no")
           << "; non-decreasing from m=6: " << (monotone ? "yes" : "no")
           << "; doubles over every 4-window in [6,16]: " << (doubling ? "yes" : "no");
    return {computable && monotone && doubling, detail.str()};
}

struct Criterion {
    int id;
    const char* summary;
    Outcome (*run)();
    double budget_seconds;  // 0 = no stated budget
};

constexpr Criterion kCriteria[] = {
    {1, "self-twist cohomology table m=4..31", criterion_1, 5.0},
    {2, "r=3 twist cohomology table m=3..32", criterion_2, 10.0},
    {3, "partition / c-string / cohomology identification", criterion_3, 0.0},
    {4, "degree-doubling bound and doubling families", criterion_4, 0.0},
    {5, "self-Ext towers equal their height", criterion_5, 0.0},
    {6, "closed-form H^2 against the engine", criterion_6, 60.0},
    {7, "engine against trace-count and two-rule references", criterion_7, 0.0},
    {8, "twist profiles stabilise at r = degree", criterion_8, 0.0},
    {9, "b-string bijection with nontrivial traces", criterion_9, 0.0},
    {10, "c-string growth ratio in [1.79, 1.80]", criterion_10, 0.0},
    {11, "trace classification for degree 6, weight 24", criterion_11, 0.0},
    {12, "odd-p self-twist growth: monotone and doubling", criterion_12, 0.0},
};

bool run_one(const Criterion& criterion) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = criterion.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool pass = outcome.pass;
    std::string over_budget;
    if (criterion.budget_seconds > 0.0 && seconds > criterion.budget_seconds) {
        pass = false;
        over_budget = " [over the " + std::to_string(criterion.budget_seconds) + "s budget]";
    }

    std::cout << (pass ? "[PASS]" : "[FAIL]") << " C" << criterion.id << ' '
              << criterion.summary << " (" << std::fixed << std::setprecision(2) << seconds
              << "s)" << over_budget << '\n';
    std::istringstream lines(outcome.detail);
    for (std::string line; std::getline(lines, line);)
        if (!line.empty())
            std::cout << "       " << line << '\n';
    return pass;
}

void print_usage(std::ostream& os) {
    os << "usage: acceptance [--list | --criterion N]\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<const Criterion*> selected;
    if (argc == 1) {
        for (const Criterion& c : kCriteria)
            selected.push_back(&c);
    } else if (argc == 2 && std::strcmp(argv[1], "--list") == 0) {
        for (const Criterion& c : kCriteria)
            std::cout << 'C' << c.id << ' ' << c.summary << '\n';
        return 0;
    } else if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        const int id = std::atoi(argv[2]);
        for (const Criterion& c : kCriteria)
            if (c.id == id)
                selected.push_back(&c);
        if (selected.empty()) {
            print_usage(std::cerr);
            return 2;
        }
    } else {
        print_usage(std::cerr);
        return 2;
    }

    int failures = 0;
    for (const Criterion* c : selected)
        if (!run_one(*c))
            ++failures;
    if (selected.size() > 1)
        std::cout << selected.size() - failures << '/' << selected.size()
                  << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
