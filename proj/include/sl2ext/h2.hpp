#pragma once

// Closed-form classification of dim H^2(G, L(mu)) for p > 3: the dimension
// is 1 exactly when mu is a p-power twist of one of
//   2p,
//   2p^2 - 2p - 2,
//   2p - 2 + (2p - 2) * p^e   with e >= 2,
// and 0 otherwise. Because 2p is itself divisible by p, every level of
// untwisting is tested, not only the maximal one.

#include "sl2ext/common.hpp"
#include "sl2ext/engine.hpp"
#include "sl2ext/weights.hpp"

#include <utility>
#include <vector>

namespace sl2ext {

struct H2Witness {
    enum class Reason {
        TwoP,             // mu = p^d * 2p
        TwoPSquaredMinus, // mu = p^d * (2p^2 - 2p - 2)
        PowerFamily,      // mu = p^d * (2p - 2 + (2p - 2) * p^e), e >= 2
        NotInList,        // H^2 vanishes
    };

    Reason reason = Reason::NotInList;
    unsigned twist = 0;            // the d above (smallest that matches)
    unsigned family_exponent = 0;  // the e above; only set for PowerFamily

    friend bool operator==(const H2Witness&, const H2Witness&) = default;
};

// Requires p > 3 (the small characteristics have genuinely different H^2).
std::pair<DimCount, H2Witness> h2_dim(const Weight& mu, Characteristic p);

// A self-Ext tower: all tensor products of L(2)^[i] over subsets of the
// twists {0, ..., height}.
struct TowerSpec {
    unsigned height;
    Characteristic p;
};

// Sum of dim H^2(G, L(w)) over the subset weights w of the tower (weights
// via subset_tensor_weight). Only the singleton subsets {d} with d >= 1
// land in the classified list, so the sum equals the height. Requires
// p > 3 and height <= 20.
DimCount ext2_self_tower(const TowerSpec& spec);

// Compares the closed form against the recursion engine for every
// mu = 0..mu_max and returns the weights where they disagree (expected to
// be none).
std::vector<Weight> h2_cross_check(ExtEngine& engine, Characteristic p, const Weight& mu_max);

}  // namespace sl2ext
