#pragma once

// Weight combinatorics for SL2 in characteristic p: base-p digit expansions,
// the Steinberg tensor factorisation of simple modules, and the
// classification of restricted digit pairs that drives the Ext recursion.

#include "sl2ext/common.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sl2ext {

// The characteristic of the ground field. Primality is validated once at
// construction so everything downstream can assume it.
class Characteristic {
public:
    explicit Characteristic(std::uint32_t p);

    std::uint32_t value() const { return p_; }
    bool is_two() const { return p_ == 2; }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;

private:
    std::uint32_t p_;
};

// Base-p digits of a dominant weight, least significant first, with no
// trailing zeros (so the zero weight has an empty digit vector). Digit i is
// the restricted weight tensored in through the i-th Frobenius twist.
struct DigitExpansion {
    std::vector<std::uint32_t> digits;
    Characteristic p;

    Weight reconstruct() const;
};

DigitExpansion p_adic_digits(const Weight& weight, Characteristic p);

// Restricted highest weights of the Steinberg factorisation
// L(w) = L(d_0) (x) L(d_1)^[1] (x) L(d_2)^[2] (x) ...; these are exactly the
// base-p digits of w.
std::vector<std::uint32_t> steinberg_factors(const Weight& weight, Characteristic p);

// Splits mu = mu_0 + p * rest with 0 <= mu_0 < p, i.e. peels the restricted
// first factor off L(mu) = L(mu_0) (x) L(rest)^[1].
std::pair<std::uint32_t, Weight> split_simple(const Weight& mu, Characteristic p);

// How the lowest digit of a Weyl weight can interact with the lowest digit of
// a simple weight. Exactly one of four cases applies:
//   SameDigit      both digits equal some i <= p-2
//   MirrorDigit    the digits are i and p-2-i for some i <= p-2 (and differ)
//   SteinbergDigit both digits are p-1
//   NoMatch        anything else; the Ext group vanishes
// For p = 2 the pair (0, 0) is reported as SameDigit(0); the engine widens
// that case to the full degree-shifting sum, which is the correct p = 2 rule.
struct DigitCase {
    enum class Tag { SameDigit, MirrorDigit, SteinbergDigit, NoMatch };

    Tag tag;
    // The Weyl-side digit i, meaningful for every tag except NoMatch.
    std::uint32_t digit = 0;

    friend bool operator==(const DigitCase&, const DigitCase&) = default;
};

DigitCase digit_case(std::uint32_t weyl_digit, std::uint32_t simple_digit, Characteristic p);

// Highest weight of (x)_{i in twists} L(2)^[i], i.e. sum of 2p^i over the
// given Frobenius twists. Twists must be distinct and p must be odd, so the
// tensor product is simple and the map from twist sets to weights injective.
Weight subset_tensor_weight(const std::vector<unsigned>& twists, Characteristic p);

}  // namespace sl2ext
