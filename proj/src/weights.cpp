#include "sl2ext/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace sl2ext {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

void require_dominant(const Weight& w, const char* what) {
    if (w < 0)
        throw std::invalid_argument(std::string(what) + " must be a dominant (non-negative) weight");
}

}  // namespace

Characteristic::Characteristic(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
}

Weight DigitExpansion::reconstruct() const {
    Weight w = 0;
    // Horner from the most significant digit down.
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        w = w * p.value() + *it;
    return w;
}

DigitExpansion p_adic_digits(const Weight& weight, Characteristic p) {
    require_dominant(weight, "weight");
    DigitExpansion out{{}, p};
    Weight rest = weight;
    while (rest != 0) {
        out.digits.push_back(static_cast<std::uint32_t>(rest % p.value()));
        rest /= p.value();
    }
    return out;
}

std::vector<std::uint32_t> steinberg_factors(const Weight& weight, Characteristic p) {
    return p_adic_digits(weight, p).digits;
}

std::pair<std::uint32_t, Weight> split_simple(const Weight& mu, Characteristic p) {
    require_dominant(mu, "simple weight");
    return {static_cast<std::uint32_t>(mu % p.value()), mu / p.value()};
}

DigitCase digit_case(std::uint32_t weyl_digit, std::uint32_t simple_digit, Characteristic p) {
    const std::uint32_t pv = p.value();
    if (weyl_digit >= pv || simple_digit >= pv)
        throw std::invalid_argument("digit_case arguments must be restricted (< p)");
    if (weyl_digit == pv - 1 && simple_digit == pv - 1)
        return {DigitCase::Tag::SteinbergDigit, weyl_digit};
    if (weyl_digit == simple_digit)  // both <= p-2 here
        return {DigitCase::Tag::SameDigit, weyl_digit};
    if (weyl_digit <= pv - 2 && simple_digit == pv - 2 - weyl_digit)
        return {DigitCase::Tag::MirrorDigit, weyl_digit};
    return {DigitCase::Tag::NoMatch, 0};
}

Weight subset_tensor_weight(const std::vector<unsigned>& twists, Characteristic p) {
    if (p.is_two())
        throw std::invalid_argument("subset_tensor_weight requires odd characteristic");
    std::set<unsigned> seen(twists.begin(), twists.end());
    if (seen.size() != twists.size())
        throw std::invalid_argument("subset_tensor_weight twists must be distinct");
    Weight w = 0;
    for (unsigned i : twists)
        w += 2 * ipow(p.value(), i);
    return w;
}

}  // namespace sl2ext
