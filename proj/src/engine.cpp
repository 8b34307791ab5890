#include "sl2ext/engine.hpp"

#include <stdexcept>

namespace sl2ext {

namespace {

struct Child {
    unsigned degree;
    Weight weyl;
    Weight simple;
};

// One digit-peeling step. Preconditions: degree >= 1, simple >= 1.
std::vector<Child> children_of(unsigned degree, const Weight& weyl, const Weight& simple,
                               Characteristic p) {
    const std::uint32_t pv = p.value();
    const auto [mu0, rest] = split_simple(simple, p);
    const auto weyl_digit = static_cast<std::uint32_t>(weyl % pv);
    const Weight base = weyl / pv;
    const DigitCase dc = digit_case(weyl_digit, mu0, p);

    std::vector<Child> out;
    switch (dc.tag) {
    case DigitCase::Tag::NoMatch:
        break;
    case DigitCase::Tag::SteinbergDigit:
        out.push_back({degree, base, rest});
        break;
    case DigitCase::Tag::SameDigit:
    case DigitCase::Tag::MirrorDigit: {
        // Degree drop n shifts the Weyl side by n. For odd p the parity of n
        // is pinned by the digit case; p = 2 folds both parities into its
        // single matched case, so every n appears.
        const unsigned start = dc.tag == DigitCase::Tag::MirrorDigit ? 1 : 0;
        const unsigned step = pv == 2 ? 1 : 2;
        out.reserve(degree / step + 1);
        for (unsigned n = start; n <= degree; n += step)
            out.push_back({degree - n, base + n, rest});
        break;
    }
    }
    return out;
}

}  // namespace

std::size_t ExtEngine::KeyHash::operator()(const Key& k) const {
    std::size_t seed = std::hash<unsigned>{}(k.degree);
    const auto mix = [&seed](std::size_t h) {
        seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    };
    mix(std::hash<std::uint32_t>{}(k.p));
    mix(std::hash<Weight>{}(k.weyl));
    mix(std::hash<Weight>{}(k.simple));
    return seed;
}

DimCount ExtEngine::ext_dim(const ExtQuery& query) {
    if (query.weyl < 0 || query.simple < 0)
        throw std::invalid_argument("weights must be dominant (non-negative)");
    if (query.degree == 0)
        return query.weyl == query.simple ? 1 : 0;
    if (query.simple == 0)
        return 0;

    const std::uint32_t pv = query.p.value();
    const Key root{query.degree, pv, query.weyl, query.simple};
    if (auto it = memo_.find(root); it != memo_.end())
        return it->second;

    // Post-order over the dependency dag: a node is finalised once every
    // child is memoised; until then the missing children sit above it.
    std::vector<Key> work{root};
    while (!work.empty()) {
        const Key cur = work.back();
        if (memo_.contains(cur)) {
            work.pop_back();
            continue;
        }
        bool ready = true;
        DimCount total = 0;
        for (Child& ch : children_of(cur.degree, cur.weyl, cur.simple, query.p)) {
            if (ch.degree == 0) {
                if (ch.weyl == ch.simple)
                    ++total;
                continue;
            }
            if (ch.simple == 0)
                continue;
            Key key{ch.degree, pv, std::move(ch.weyl), std::move(ch.simple)};
            if (auto it = memo_.find(key); it != memo_.end())
                total += it->second;
            else {
                work.push_back(std::move(key));
                ready = false;
            }
        }
        if (ready) {
            memo_.emplace(cur, std::move(total));
            work.pop_back();
        }
    }
    return memo_.at(root);
}

DimCount ExtEngine::ext_dim(unsigned degree, const Weight& weyl, const Weight& simple,
                            Characteristic p) {
    return ext_dim(ExtQuery{degree, weyl, simple, p});
}

DimCount ExtEngine::cohomology_dim(unsigned degree, const Weight& simple, Characteristic p) {
    return ext_dim(ExtQuery{degree, 0, simple, p});
}

// ---------------------------------------------------------------------------
// Trace enumeration.

std::vector<unsigned> LeafTrace::padded(std::size_t n) const {
    if (n < a_string.size())
        throw std::invalid_argument("pad length is shorter than the a-string");
    std::vector<unsigned> out = a_string;
    out.resize(n, 0);
    return out;
}

namespace {

struct TraceWalker {
    std::uint64_t cap;
    const std::function<void(const TraceView&)>& visit;
    std::uint64_t emitted = 0;
    std::vector<unsigned> path;

    void emit(TraceStatus status, const Weight& weyl, const Weight& simple) {
        if (emitted == cap)
            throw CapExceeded(cap);
        ++emitted;
        visit(TraceView{path, status, weyl, simple});
    }

    // Invariant: degree >= 1. Recursion depth is bounded by the bit length
    // of the simple weight, since each level halves it.
    void walk(unsigned degree, Weight weyl, Weight simple) {
        // Forced stages before a choice of degree drop exists: positive-degree
        // Ext against the trivial module vanishes, weights in different
        // linkage classes (parities) see nothing, and an odd/odd pair halves
        // both sides without spending degree or recording an entry.
        for (;;) {
            if (simple == 0)
                return emit(TraceStatus::Failed, weyl, simple);
            const bool weyl_odd = bit_test(weyl, 0);
            if (weyl_odd != bit_test(simple, 0))
                return emit(TraceStatus::Failed, weyl, simple);
            if (!weyl_odd)
                break;
            weyl >>= 1;
            simple >>= 1;
        }
        weyl >>= 1;
        simple >>= 1;
        for (unsigned n = 0; n <= degree; ++n) {
            path.push_back(n);
            Weight next = weyl + n;
            if (n == degree)
                emit(next == simple ? TraceStatus::NontrivialLeaf : TraceStatus::TrivialLeaf,
                     next, simple);
            else
                walk(degree - n, std::move(next), simple);
            path.pop_back();
        }
    }
};

}  // namespace

void for_each_trace(unsigned degree, const Weight& simple, std::uint64_t cap,
                    const std::function<void(const TraceView&)>& visit) {
    if (degree == 0)
        throw std::invalid_argument("trace expansion needs degree >= 1");
    if (simple < 0)
        throw std::invalid_argument("weights must be dominant (non-negative)");
    TraceWalker walker{cap, visit};
    walker.walk(degree, 0, simple);
}

std::vector<LeafTrace> expand_trace(unsigned degree, const Weight& simple, std::uint64_t cap) {
    std::vector<LeafTrace> out;
    for_each_trace(degree, simple, cap, [&out](const TraceView& t) {
        out.push_back(LeafTrace{{t.a_string.begin(), t.a_string.end()},
                                t.status,
                                {t.terminal_weyl, t.terminal_simple}});
    });
    return out;
}

DimCount count_nontrivial_traces(unsigned degree, const Weight& simple, std::uint64_t cap) {
    DimCount count = 0;
    for_each_trace(degree, simple, cap, [&count](const TraceView& t) {
        if (t.status == TraceStatus::NontrivialLeaf)
            ++count;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Tables and profiles.

std::vector<TableRow> self_twist_table(ExtEngine& engine, unsigned max_degree) {
    const Characteristic two(2);
    std::vector<TableRow> rows;
    rows.reserve(max_degree);
    for (unsigned m = 1; m <= max_degree; ++m) {
        Weight w = ipow(2, m);
        DimCount d = engine.cohomology_dim(m, w, two);
        rows.push_back({m, std::move(w), std::move(d)});
    }
    return rows;
}

std::vector<TableRow> r_twist_table(ExtEngine& engine, const Weight& r, unsigned min_degree,
                                    unsigned max_degree) {
    if (r < 1 || !bit_test(r, 0))
        throw std::invalid_argument("twist multiplier r must be odd and positive");
    if (min_degree < 2)
        throw std::invalid_argument("r-twist rows need degree >= 2 so the weight r * 2^(m-2) is integral");
    const Characteristic two(2);
    std::vector<TableRow> rows;
    for (unsigned m = min_degree; m <= max_degree; ++m) {
        Weight w = r * ipow(2, m - 2);
        DimCount d = engine.cohomology_dim(m, w, two);
        rows.push_back({m, std::move(w), std::move(d)});
    }
    return rows;
}

std::vector<DimCount> stability_profile(ExtEngine& engine, unsigned degree, unsigned max_twist) {
    if (max_twist < degree)
        throw std::invalid_argument("stability profile needs max_twist >= degree to reach the stable range");
    const Characteristic two(2);
    std::vector<DimCount> out;
    out.reserve(max_twist + 1);
    for (unsigned r = 0; r <= max_twist; ++r)
        out.push_back(engine.cohomology_dim(degree, ipow(2, r), two));
    return out;
}

// ---------------------------------------------------------------------------
// Wall reduction.

DimCount wall_reduce_sl3(ExtEngine& engine, const Sl3Weight& weyl, const Sl3Weight& simple,
                         unsigned degree, Characteristic p) {
    if (weyl.w1 < 0 || weyl.w2 < 0 || simple.w1 < 0 || simple.w2 < 0)
        throw std::invalid_argument("SL3 weights must be dominant (non-negative coordinates)");
    if (simple.w2 - weyl.w2 != 2 * (weyl.w1 - simple.w1))
        throw std::invalid_argument("weight pair is not aligned along the wall root (-1, 2)");
    return engine.ext_dim(degree, 2 * weyl.w2, 2 * simple.w2, p);
}

}  // namespace sl2ext
