#include "sl2ext/weights.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace sl2ext;

TEST_CASE("characteristic validates primality") {
    CHECK(Characteristic(2).value() == 2);
    CHECK(Characteristic(97).value() == 97);
    CHECK(Characteristic(2).is_two());
    CHECK(!Characteristic(5).is_two());
    CHECK_THROWS_AS(Characteristic(0), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic(1), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic(4), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic(91), std::invalid_argument);  // 7 * 13
}

TEST_CASE("digit expansions") {
    CHECK(p_adic_digits(24, Characteristic(2)).digits ==
          std::vector<std::uint32_t>{0, 0, 0, 1, 1});
    CHECK(p_adic_digits(0, Characteristic(5)).digits.empty());
    CHECK(p_adic_digits(38, Characteristic(5)).digits == std::vector<std::uint32_t>{3, 2, 1});
    CHECK_THROWS_AS(p_adic_digits(Weight(-1), Characteristic(2)), std::invalid_argument);
}

TEST_CASE("digit round trip over a weight sweep") {
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
        const Characteristic p(pv);
        for (unsigned w = 0; w <= 2000; ++w) {
            const DigitExpansion d = p_adic_digits(w, p);
            CHECK(d.reconstruct() == w);
            if (!d.digits.empty())
                CHECK(d.digits.back() != 0);  // no trailing zeros
        }
    }
    // large weights beyond 64 bits
    std::mt19937_64 rng(20260823);
    const Characteristic seven(7);
    for (int i = 0; i < 50; ++i) {
        const Weight w = Weight(rng()) * Weight(rng());
        CHECK(p_adic_digits(w, seven).reconstruct() == w);
    }
}

TEST_CASE("steinberg factors are the base-p digits") {
    CHECK(steinberg_factors(3, Characteristic(2)) == std::vector<std::uint32_t>{1, 1});
    CHECK(steinberg_factors(10, Characteristic(5)) == std::vector<std::uint32_t>{0, 2});
    CHECK(steinberg_factors(1, Characteristic(7)) == std::vector<std::uint32_t>{1});
}

TEST_CASE("split_simple peels the restricted factor") {
    CHECK(split_simple(24, Characteristic(2)) == std::pair<std::uint32_t, Weight>{0, 12});
    CHECK(split_simple(38, Characteristic(5)) == std::pair<std::uint32_t, Weight>{3, 7});
    CHECK(split_simple(1, Characteristic(2)) == std::pair<std::uint32_t, Weight>{1, 0});
    CHECK(split_simple(0, Characteristic(3)) == std::pair<std::uint32_t, Weight>{0, 0});
}

TEST_CASE("digit case classification") {
    const Characteristic five(5);
    CHECK(digit_case(0, 3, five) == DigitCase{DigitCase::Tag::MirrorDigit, 0});
    CHECK(digit_case(2, 2, five) == DigitCase{DigitCase::Tag::SameDigit, 2});
    CHECK(digit_case(4, 4, five) == DigitCase{DigitCase::Tag::SteinbergDigit, 4});
    CHECK(digit_case(1, 2, five) == DigitCase{DigitCase::Tag::MirrorDigit, 1});
    CHECK(digit_case(1, 3, five).tag == DigitCase::Tag::NoMatch);

    const Characteristic two(2);
    CHECK(digit_case(0, 0, two) == DigitCase{DigitCase::Tag::SameDigit, 0});
    CHECK(digit_case(1, 1, two) == DigitCase{DigitCase::Tag::SteinbergDigit, 1});
    CHECK(digit_case(0, 1, two).tag == DigitCase::Tag::NoMatch);
    CHECK(digit_case(1, 0, two).tag == DigitCase::Tag::NoMatch);

    CHECK_THROWS_AS(digit_case(5, 0, five), std::invalid_argument);
    CHECK_THROWS_AS(digit_case(0, 7, five), std::invalid_argument);
}

TEST_CASE("digit case is total and self-consistent on restricted pairs") {
    for (std::uint32_t pv : {3u, 5u, 7u}) {
        const Characteristic p(pv);
        for (std::uint32_t a = 0; a < pv; ++a)
            for (std::uint32_t b = 0; b < pv; ++b) {
                const DigitCase dc = digit_case(a, b, p);
                switch (dc.tag) {
                case DigitCase::Tag::SameDigit:
                    CHECK(a == b);
                    CHECK(a <= pv - 2);
                    CHECK(dc.digit == a);
                    break;
                case DigitCase::Tag::MirrorDigit:
                    CHECK(a <= pv - 2);
                    CHECK(b == pv - 2 - a);
                    CHECK(a != b);  // same/mirror cannot coincide for odd p
                    break;
                case DigitCase::Tag::SteinbergDigit:
                    CHECK(a == pv - 1);
                    CHECK(b == pv - 1);
                    break;
                case DigitCase::Tag::NoMatch:
                    CHECK(a != b);
                    break;
                }
            }
    }
}

TEST_CASE("subset tensor weights") {
    CHECK(subset_tensor_weight({1}, Characteristic(5)) == 10);
    CHECK(subset_tensor_weight({}, Characteristic(7)) == 0);
    CHECK(subset_tensor_weight({0, 1}, Characteristic(3)) == 8);
    CHECK_THROWS_AS(subset_tensor_weight({0}, Characteristic(2)), std::invalid_argument);
    CHECK_THROWS_AS(subset_tensor_weight({2, 2}, Characteristic(5)), std::invalid_argument);

    // distinct twist subsets of {0..7} give distinct weights
    for (std::uint32_t pv : {3u, 5u}) {
        std::set<Weight> seen;
        for (unsigned mask = 0; mask < 256; ++mask) {
            std::vector<unsigned> twists;
            for (unsigned i = 0; i < 8; ++i)
                if (mask & (1u << i))
                    twists.push_back(i);
            seen.insert(subset_tensor_weight(twists, Characteristic(pv)));
        }
        CHECK(seen.size() == 256);
    }
}
