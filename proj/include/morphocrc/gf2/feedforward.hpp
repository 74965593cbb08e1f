#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace morphocrc::gf2 {

// A tapped delay line: taps[j] is the coefficient of D^j, j = 0..N. Encoding
// a stream multiplies it by the tap polynomial over GF(2).
struct FeedForwardCircuit {
    std::vector<std::uint8_t> taps;

    FeedForwardCircuit() = default;
    explicit FeedForwardCircuit(std::vector<std::uint8_t> taps);

    int stages() const { return static_cast<int>(taps.size()) - 1; }

    // Parses "1101" as taps of D^0, D^1, ... in order.
    static FeedForwardCircuit from_bit_string(const std::string& bits);
};

// y_k = XOR over j of taps[j] * x[k-j], out-of-range x treated as 0; the
// output has len(x) + N bits. Throws on empty input.
std::vector<std::uint8_t> feedforward_encode(const std::vector<std::uint8_t>& input,
                                             const FeedForwardCircuit& circuit);

} // namespace morphocrc::gf2
