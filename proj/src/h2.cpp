#include "sl2ext/h2.hpp"

#include <stdexcept>

namespace sl2ext {

namespace {

void require_large_characteristic(Characteristic p) {
    if (p.value() <= 3)
        throw std::invalid_argument("H^2 classification requires characteristic p > 3");
}

// If r = 2p - 2 + (2p - 2) * p^e with e >= 2, returns e; otherwise 0.
unsigned family_exponent(const Weight& r, std::uint32_t p) {
    const std::uint32_t base = 2 * p - 2;
    if (r <= base || r % base != 0)
        return 0;
    Weight t = r / base - 1;  // should be p^e
    unsigned e = 0;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    return (t == 1 && e >= 2) ? e : 0;
}

}  // namespace

std::pair<DimCount, H2Witness> h2_dim(const Weight& mu, Characteristic p) {
    require_large_characteristic(p);
    if (mu < 0)
        throw std::invalid_argument("weights must be dominant (non-negative)");
    const std::uint32_t pv = p.value();
    const Weight two_p = 2 * Weight(pv);
    const Weight quadratic = 2 * Weight(pv) * pv - 2 * pv - 2;

    if (mu != 0) {
        Weight r = mu;
        for (unsigned d = 0;; ++d) {
            if (r == two_p)
                return {1, {H2Witness::Reason::TwoP, d, 0}};
            if (r == quadratic)
                return {1, {H2Witness::Reason::TwoPSquaredMinus, d, 0}};
            if (unsigned e = family_exponent(r, pv); e != 0)
                return {1, {H2Witness::Reason::PowerFamily, d, e}};
            if (r % pv != 0)
                break;
            r /= pv;
        }
    }
    return {0, {}};
}

DimCount ext2_self_tower(const TowerSpec& tower) {
    require_large_characteristic(tower.p);
    if (tower.height > 20)
        throw std::invalid_argument("tower height limited to 20 (2^(height+1) subsets)");
    const unsigned twists = tower.height + 1;
    DimCount total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << twists); ++mask) {
        std::vector<unsigned> subset;
        for (unsigned i = 0; i < twists; ++i)
            if (mask & (std::uint64_t{1} << i))
                subset.push_back(i);
        total += h2_dim(subset_tensor_weight(subset, tower.p), tower.p).first;
    }
    return total;
}

std::vector<Weight> h2_cross_check(ExtEngine& engine, Characteristic p, const Weight& mu_max) {
    require_large_characteristic(p);
    std::vector<Weight> mismatches;
    for (Weight mu = 0; mu <= mu_max; ++mu)
        if (h2_dim(mu, p).first != engine.ext_dim(2, 0, mu, p))
            mismatches.push_back(mu);
    return mismatches;
}

}  // namespace sl2ext
