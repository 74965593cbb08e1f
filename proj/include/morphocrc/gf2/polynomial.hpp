#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace morphocrc::gf2 {

// A CRC generator polynomial over GF(2). `taps` holds the coefficients of
// x^0..x^(width-1) as a bitmask; the coefficient of x^width is implicit and
// always 1. Width 16 for the CRC-16 family, 12 for CRC-12, 32 for Ethernet.
struct GeneratorPolynomial {
    int width = 0;
    std::uint32_t taps = 0;
    std::string name;

    GeneratorPolynomial() = default;
    GeneratorPolynomial(int width, std::uint32_t taps, std::string name = {});

    bool operator==(const GeneratorPolynomial&) const = default;

    // True if the x^e coefficient is set (e < width).
    bool has_tap(int exponent) const { return (taps >> exponent) & 1u; }

    // Algebraic rendering, e.g. "x^16 + x^12 + x^5 + 1".
    std::string to_string() const;

    // The six standard generators. All of them have the x^0 coefficient
    // set, which the constructor asserts.
    static GeneratorPolynomial ccitt();          // x^16 + x^12 + x^5 + 1
    static GeneratorPolynomial sdlc_reverse();   // x^16 + x^11 + x^4 + 1
    static GeneratorPolynomial crc16();          // x^16 + x^15 + x^2 + 1
    static GeneratorPolynomial crc16_reverse();  // x^16 + x^14 + x^1 + 1
    static GeneratorPolynomial crc12();          // x^12 + x^11 + x^3 + x^2 + x + 1
    static GeneratorPolynomial ethernet();       // the 32-bit Ethernet generator

    // Accepts the named generators ("ccitt", "sdlc-reverse", "crc16",
    // "crc16-reverse", "crc12", "ethernet") or "poly:<width>:<hex taps>".
    // Throws std::invalid_argument on anything else.
    static GeneratorPolynomial parse(const std::string& spec);
};

} // namespace morphocrc::gf2
