#pragma once

// Exact computation of dim Ext^q_{SL2}(Delta(lambda), L(mu)) in
// characteristic p by peeling one base-p digit of mu per step:
//
//   q = 0                    dim Hom = [lambda == mu]
//   mu = 0, q > 0            0   (Weyl modules have no higher Ext with k)
//   lambda = p*b + c, mu = mu_0 + p*mu', and then by digit case:
//     SameDigit, p = 2       sum over n = 0..q of ext(q - n, b + n, mu')
//     SameDigit, p odd       same sum restricted to even n
//     MirrorDigit            same sum restricted to odd n
//     SteinbergDigit         ext(q, b, mu')
//     NoMatch                0
//
// Every step strictly shortens mu's digit expansion, so the recursion
// terminates; the engine evaluates it iteratively with an explicit work list
// and a global memo, so deep degree/weight combinations neither overflow the
// call stack nor get recomputed.

#include "sl2ext/common.hpp"
#include "sl2ext/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sl2ext {

// A single dimension query dim Ext^degree(Delta(weyl), L(simple)) over a
// field of the given characteristic.
struct ExtQuery {
    unsigned degree;
    Weight weyl;
    Weight simple;
    Characteristic p;
};

class ExtEngine {
public:
    DimCount ext_dim(const ExtQuery& query);
    DimCount ext_dim(unsigned degree, const Weight& weyl, const Weight& simple, Characteristic p);

    // dim H^degree(G, L(simple)) = dim Ext^degree(Delta(0), L(simple)).
    DimCount cohomology_dim(unsigned degree, const Weight& simple, Characteristic p);

    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Key {
        unsigned degree;
        std::uint32_t p;
        Weight weyl;
        Weight simple;

        friend bool operator==(const Key&, const Key&) = default;
    };

    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    std::unordered_map<Key, DimCount, KeyHash> memo_;
};

// ---------------------------------------------------------------------------
// Expansion traces (p = 2, Weyl weight 0).
//
// For dim H^m(G, L(mu)) with p = 2 the recursion above becomes a tree whose
// branches are the degree drops n chosen at each even stage; odd stages are
// forced and contribute no entry. A root-to-leaf path is recorded as its
// "a-string" of chosen entries. The final chosen entry spends the remaining
// degree, so canonical strings never end in 0 on a completed path.

enum class TraceStatus {
    Failed,          // path pruned: simple weight hit 0 early or parities split
    TrivialLeaf,     // terminal Hom between distinct weights: contributes 0
    NontrivialLeaf,  // terminal Hom(Delta(w), L(w)): contributes 1
};

// One root-to-leaf (or root-to-pruning-point) path. `terminal` holds the
// (Weyl weight, simple weight) pair at which the path ended.
struct LeafTrace {
    std::vector<unsigned> a_string;
    TraceStatus status;
    std::pair<Weight, Weight> terminal;

    // The string padded with trailing zeros to length n (the "(a, n)-form").
    std::vector<unsigned> padded(std::size_t n) const;
};

// Borrowed view of a trace during streaming enumeration; valid only inside
// the visitor call.
struct TraceView {
    std::span<const unsigned> a_string;
    TraceStatus status;
    const Weight& terminal_weyl;
    const Weight& terminal_simple;
};

// Streams every path of the expansion tree of dim H^degree(G, L(simple)),
// p = 2, in lexicographic order of a-strings. Throws CapExceeded once more
// than `cap` paths would be emitted. Requires degree >= 1.
void for_each_trace(unsigned degree, const Weight& simple, std::uint64_t cap,
                    const std::function<void(const TraceView&)>& visit);

std::vector<LeafTrace> expand_trace(unsigned degree, const Weight& simple,
                                    std::uint64_t cap = kDefaultEnumerationCap);

// Number of NontrivialLeaf paths; equals dim H^degree(G, L(simple)).
DimCount count_nontrivial_traces(unsigned degree, const Weight& simple,
                                 std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Tables and profiles.

struct TableRow {
    unsigned degree;
    Weight weight;
    DimCount dim;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Rows (m, 2^m, dim H^m(G, L(2^m))) for m = 1..max_degree, p = 2.
std::vector<TableRow> self_twist_table(ExtEngine& engine, unsigned max_degree);

// Rows (m, r * 2^(m-2), dim H^m(G, L(r * 2^(m-2)))) for
// m = min_degree..max_degree, p = 2. Requires odd r and min_degree >= 2 so
// the weight is integral.
std::vector<TableRow> r_twist_table(ExtEngine& engine, const Weight& r, unsigned min_degree,
                                    unsigned max_degree);

// dim H^degree(G, L(2^r)) for r = 0..max_twist, p = 2. Requires
// max_twist >= degree so the stable range is visible.
std::vector<DimCount> stability_profile(ExtEngine& engine, unsigned degree, unsigned max_twist);

// ---------------------------------------------------------------------------
// Rank-2 wall reduction.

// An SL3 dominant weight in fundamental-weight coordinates.
struct Sl3Weight {
    Weight w1;
    Weight w2;

    friend bool operator==(const Sl3Weight&, const Sl3Weight&) = default;
};

// dim Ext^degree_{SL3}(Delta(weyl), L(simple)) for weight pairs that differ
// by a multiple of the wall root beta = (-1, 2): such a pair lies on a common
// alcove wall and the Ext group agrees with the SL2 group at the doubled
// second coordinates, Ext^degree_{SL2}(Delta(2 * weyl.w2), L(2 * simple.w2)).
// Throws std::invalid_argument if the pair is not beta-aligned, i.e. unless
// simple.w2 - weyl.w2 == 2 * (weyl.w1 - simple.w1).
DimCount wall_reduce_sl3(ExtEngine& engine, const Sl3Weight& weyl, const Sl3Weight& simple,
                         unsigned degree, Characteristic p);

}  // namespace sl2ext
