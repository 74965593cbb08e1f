#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check.

#include <cstdint>
#include <vector>

#include "morphocrc/gf2/polynomial.hpp"

namespace oracles {

// Remainder by plain long division over a bit array: the message is treated
// as one very large binary number, premultiplied by x^width (the circuit
// clocks data into the feedback tap), with the initial register contents
// folded into its leading bits. Returns the remainder as a value (the x^0
// coefficient in the lowest bit).
inline std::uint64_t long_division_crc(const std::vector<std::uint8_t>& message,
                                       const morphocrc::gf2::GeneratorPolynomial& poly,
                                       std::uint64_t init_value) {
    const int w = poly.width;
    const std::size_t len = message.size() * 8;
    std::vector<std::uint8_t> dividend(len + w, 0);
    for (std::size_t i = 0; i < len; ++i)
        dividend[i] = (message[i / 8] >> (7 - i % 8)) & 1;
    // init * x^len folded in: bit j of the dividend carries x^(len+w-1-j)
    for (int j = 0; j < w; ++j)
        dividend[j] ^= static_cast<std::uint8_t>((init_value >> (w - 1 - j)) & 1);

    for (std::size_t i = 0; i < len; ++i) {
        if (!dividend[i]) continue;
        dividend[i] = 0; // the implicit x^width coefficient of the generator
        for (int e = 0; e < w; ++e)
            if (poly.has_tap(e)) dividend[i + w - e] ^= 1;
    }
    std::uint64_t remainder = 0;
    for (int j = 0; j < w; ++j)
        if (dividend[len + j]) remainder |= 1ull << (w - 1 - j);
    return remainder;
}

// GF(2) polynomial product, accumulating partial products.
inline std::vector<std::uint8_t> poly_multiply(const std::vector<std::uint8_t>& a,
                                               const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] ^= static_cast<std::uint8_t>((a[i] & b[j]) & 1);
    return out;
}

} // namespace oracles
