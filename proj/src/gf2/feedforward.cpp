#include "morphocrc/gf2/feedforward.hpp"

#include <stdexcept>

namespace morphocrc::gf2 {

FeedForwardCircuit::FeedForwardCircuit(std::vector<std::uint8_t> taps_) : taps(std::move(taps_)) {
    bool any = false;
    for (auto t : taps) any |= t != 0;
    if (!any) throw std::invalid_argument("feed-forward circuit needs at least one tap");
}

FeedForwardCircuit FeedForwardCircuit::from_bit_string(const std::string& bits) {
    std::vector<std::uint8_t> taps;
    taps.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("tap string must be 0s and 1s");
        taps.push_back(c == '1');
    }
    return FeedForwardCircuit(std::move(taps));
}

std::vector<std::uint8_t> feedforward_encode(const std::vector<std::uint8_t>& input,
                                             const FeedForwardCircuit& circuit) {
    if (input.empty()) throw std::invalid_argument("feedforward_encode: empty input");
    const int n = static_cast<int>(input.size());
    const int stages = circuit.stages();
    std::vector<std::uint8_t> out(n + stages, 0);
    for (int k = 0; k < n + stages; ++k) {
        std::uint8_t y = 0;
        for (int j = 0; j <= stages; ++j) {
            const int i = k - j;
            if (i >= 0 && i < n && circuit.taps[j]) y ^= input[i] & 1;
        }
        out[k] = y;
    }
    return out;
}

} // namespace morphocrc::gf2
