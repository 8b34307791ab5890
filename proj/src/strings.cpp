#include "sl2ext/strings.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace sl2ext {

std::vector<unsigned> strip_trailing_zeros(std::vector<unsigned> entries) {
    while (!entries.empty() && entries.back() == 0)
        entries.pop_back();
    return entries;
}

std::vector<unsigned> BString::recovered_a_string() const {
    const std::size_t n = entries.size();
    std::vector<unsigned> a(n);
    unsigned prev = 0;  // b_0
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a[i] = 2 * entries[i] - prev;
        prev = entries[i];
    }
    if (n > 0)
        a[n - 1] = entries[n - 1];
    return a;
}

namespace {

struct BStringWalker {
    unsigned length;
    std::uint64_t cap;
    const std::function<void(const BString&)>& visit;
    std::uint64_t emitted = 0;
    std::vector<unsigned> entries;

    void emit() {
        if (emitted == cap)
            throw CapExceeded(cap);
        ++emitted;
        visit(BString{entries});
    }

    // Fills positions i..n-1 given b_{i-1} = prev and the remaining sum that
    // b_i..b_{n-1} must contribute (positions are 0-based here).
    void fill(unsigned i, unsigned prev, unsigned remaining) {
        const unsigned half_up = (prev + 1) / 2;  // least v with 2v >= prev
        if (i + 2 == length) {
            // b_{n-1} is pinned to the remaining sum and must be 0 or 1, so
            // that b_n = 1 - b_{n-1} is a valid entry.
            if (remaining <= 1 && remaining >= half_up) {
                entries[i] = remaining;
                entries[i + 1] = 1 - remaining;
                emit();
            }
            return;
        }
        for (unsigned v = half_up; v <= remaining; ++v) {
            entries[i] = v;
            fill(i + 1, v, remaining - v);
        }
    }
};

}  // namespace

void for_each_b_string(unsigned degree, unsigned length, std::uint64_t cap,
                       const std::function<void(const BString&)>& visit) {
    if (degree < 1 || length < 1)
        throw std::invalid_argument("b-strings need degree >= 1 and length >= 1");
    if (length == 1) {
        // Boundary condition b_0 + b_1 = 1 forces the single string (1).
        if (degree == 1) {
            if (cap == 0)
                throw CapExceeded(cap);
            visit(BString{{1}});
        }
        return;
    }
    BStringWalker walker{length, cap, visit};
    walker.entries.resize(length);
    walker.fill(0, 0, degree - 1);
}

std::vector<BString> enumerate_b_strings(unsigned degree, unsigned length, std::uint64_t cap) {
    std::vector<BString> out;
    for_each_b_string(degree, length, cap, [&out](const BString& b) { out.push_back(b); });
    return out;
}

bool is_c_string(std::span<const unsigned> entries) {
    if (entries.empty() || entries.front() != 1)
        return false;
    unsigned long long sum = entries.front();
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i] > 2 * entries[i - 1])
            return false;
        sum += entries[i];
    }
    return sum == entries.size();
}

DimCount count_c_strings(unsigned length) {
    if (length < 1)
        throw std::invalid_argument("c-strings need length >= 1");
    const unsigned k = length;
    // state[last][remaining] = number of prefixes ending in `last` with
    // `remaining` of the total sum still to place. Entries never exceed the
    // remaining sum, so a (k+1) x (k+1) table suffices.
    std::vector<std::vector<DimCount>> state(k + 1, std::vector<DimCount>(k + 1));
    state[1][k - 1] = 1;  // c_1 = 1
    for (unsigned pos = 2; pos <= k; ++pos) {
        std::vector<std::vector<DimCount>> next(k + 1, std::vector<DimCount>(k + 1));
        for (unsigned last = 0; last <= k; ++last)
            for (unsigned rem = 0; rem <= k; ++rem) {
                const DimCount& ways = state[last][rem];
                if (ways == 0)
                    continue;
                const unsigned vmax = std::min(2 * last, rem);
                for (unsigned v = 0; v <= vmax; ++v)
                    next[v][rem - v] += ways;
            }
        state = std::move(next);
    }
    DimCount total = 0;
    for (unsigned last = 0; last <= k; ++last)
        total += state[last][0];
    return total;
}

namespace {

// Partitions of unity, after rescaling so the largest permitted part is 1:
// residue(parts, r) counts multisets of `parts` powers of 1/2, each <= 1,
// summing to r. Choosing j parts equal to 1 and doubling what is left gives
// residue(parts, r) = sum_j residue(parts - j, 2 * (r - j)).
struct UnityTable {
    unsigned size;
    std::vector<DimCount> value;
    std::vector<bool> known;

    explicit UnityTable(unsigned m) : size(m + 1), value(size * size), known(size * size) {}

    DimCount& at(unsigned parts, unsigned r) { return value[parts * size + r]; }

    DimCount residue(unsigned parts, unsigned r) {
        if (parts == 0)
            return r == 0 ? 1 : 0;
        if (r == 0 || r > parts)
            return 0;  // every remaining part is positive and at most 1
        if (known[parts * size + r])
            return at(parts, r);
        DimCount total = 0;
        for (unsigned j = 0; j <= r; ++j)
            total += residue(parts - j, 2 * (r - j));
        known[parts * size + r] = true;
        at(parts, r) = total;
        return total;
    }
};

}  // namespace

DimCount partitions_of_unity(unsigned parts) {
    if (parts < 1)
        throw std::invalid_argument("partitions of unity need at least one part");
    UnityTable table(parts);
    return table.residue(parts, 1);
}

std::vector<CString> doubling_family(unsigned rounds) {
    if (rounds > 20)
        throw std::invalid_argument("doubling family limited to 20 rounds (2^t strings)");
    std::vector<CString> family{CString{{1}}};
    for (unsigned t = 0; t < rounds; ++t) {
        std::vector<CString> next;
        next.reserve(2 * family.size());
        for (const CString& s : family) {
            // Insert the extension pair after the last nonzero entry, so the
            // chain condition c_i <= 2*c_{i-1} survives on both sides.
            std::size_t cut = s.entries.size();
            while (cut > 0 && s.entries[cut - 1] == 0)
                --cut;
            for (const auto& pair : {std::pair<unsigned, unsigned>{1, 1}, {2, 0}}) {
                CString child;
                child.entries.reserve(s.entries.size() + 2);
                child.entries.assign(s.entries.begin(), s.entries.begin() + cut);
                child.entries.push_back(pair.first);
                child.entries.push_back(pair.second);
                child.entries.insert(child.entries.end(), s.entries.begin() + cut,
                                     s.entries.end());
                next.push_back(std::move(child));
            }
        }
        family = std::move(next);
    }
    return family;
}

GrowthReport growth_bounds(unsigned max_length) {
    if (max_length < 4)
        throw std::invalid_argument("growth report starts at length 4");
    std::vector<DimCount> counts(max_length + 2);
    for (unsigned k = 1; k <= max_length + 1; ++k)
        counts[k] = count_c_strings(k);
    // Fibonacci with Fib(1) = Fib(2) = 1.
    std::vector<DimCount> fib(max_length + 1);
    fib[1] = 1;
    if (max_length >= 2)
        fib[2] = 1;
    for (unsigned i = 3; i <= max_length; ++i)
        fib[i] = fib[i - 1] + fib[i - 2];

    GrowthReport report{{}, true};
    for (unsigned k = 4; k <= max_length; ++k) {
        GrowthRow row;
        row.length = k;
        row.count = counts[k];
        row.within_power_bound = counts[k] <= ipow(2, k - 1);
        row.above_fibonacci = counts[k] >= fib[k - 1];
        row.next_ratio = counts[k + 1].convert_to<double>() / counts[k].convert_to<double>();
        report.all_bounds_hold &= row.within_power_bound && row.above_fibonacci;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace sl2ext
