#pragma once

// Combinatorial models counting the p = 2 cohomology of twists of L(2):
// b-strings (which biject with the nontrivial expansion traces), c-strings,
// and binary partitions of unity, plus the doubling construction and growth
// bounds for the c-string counts.

#include "sl2ext/common.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sl2ext {

// Drops trailing zeros, turning a padded (a, n)-form string into the
// canonical a-string of its expansion trace.
std::vector<unsigned> strip_trailing_zeros(std::vector<unsigned> entries);

// A b-string of degree m and length n: entries b_1..b_n >= 0 with
//   2*b_i - b_{i-1} >= 0   for 1 <= i <= n-1 (b_0 = 0),
//   b_{n-1} + b_n = 1,
//   sum of b_1..b_{n-1} = m - 1.
// For n = 1 the boundary condition reads b_0 + b_1 = 1, so (1) is the only
// b-string, of degree 1.
struct BString {
    std::vector<unsigned> entries;

    // The padded (a, n)-form string a_i = 2*b_i - b_{i-1} (i < n), a_n = b_n.
    std::vector<unsigned> recovered_a_string() const;

    friend bool operator==(const BString&, const BString&) = default;
};

// Streams the b-strings of degree m and length n in lexicographic order.
// Throws CapExceeded once more than `cap` strings would be emitted.
void for_each_b_string(unsigned degree, unsigned length, std::uint64_t cap,
                       const std::function<void(const BString&)>& visit);

std::vector<BString> enumerate_b_strings(unsigned degree, unsigned length,
                                         std::uint64_t cap = kDefaultEnumerationCap);

// A c-string of k: entries c_1..c_k >= 0 with c_1 = 1, c_i <= 2*c_{i-1}, and
// total sum k.
struct CString {
    std::vector<unsigned> entries;

    friend bool operator==(const CString&, const CString&) = default;
};

bool is_c_string(std::span<const unsigned> entries);

// Number of c-strings of k, by dynamic programming over
// (position, previous entry, remaining sum).
DimCount count_c_strings(unsigned length);

// Number of ways to write 1 as an ordered-by-size sum of `parts` powers of
// 1/2 (repetition allowed). Computed by a recursion independent of
// count_c_strings: scale so the largest permitted part is 1, choose how many
// parts take it, double the residue. Equals count_c_strings(parts - 1) for
// parts >= 2.
DimCount partitions_of_unity(unsigned parts);

// The doubling construction: starting from (1), each of t rounds replaces a
// string by two extensions, inserting (1, 1) or (2, 0) after the last
// nonzero entry. Returns all 2^t resulting c-strings of 2t + 1, in choice
// order. Rounds are limited to t <= 20 to keep the output bounded.
std::vector<CString> doubling_family(unsigned rounds);

// Growth of count_c_strings(k) for k = 4..max_length: each row checks the
// bounds Fib(k-1) <= count(k) <= 2^(k-1) and records the ratio
// count(k+1) / count(k) for asymptotic inspection.
struct GrowthRow {
    unsigned length;
    DimCount count;
    bool within_power_bound;
    bool above_fibonacci;
    double next_ratio;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool all_bounds_hold;
};

GrowthReport growth_bounds(unsigned max_length);

}  // namespace sl2ext
