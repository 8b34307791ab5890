#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sl2ext {

// All weights and dimension counts are exact, unbounded integers. Counts grow
// like 1.794^m and leave the 64-bit range near m ~ 90, and table weights
// already exceed 32 bits, so nothing here uses fixed-width arithmetic.
using BigInt = boost::multiprecision::cpp_int;
using Weight = BigInt;    // dominant weight of SL2, always >= 0
using DimCount = BigInt;  // an Ext dimension or a string count, always >= 0

inline BigInt ipow(unsigned base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r *= base;
    return r;
}

constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Thrown when an exhaustive enumeration would emit more items than the
// caller's cap allows.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(std::uint64_t cap)
        : std::runtime_error("enumeration exceeded cap of " + std::to_string(cap) + " items"),
          cap_(cap) {}
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

}  // namespace sl2ext
