#include "morphocrc/gf2/polynomial.hpp"

#include <stdexcept>

namespace morphocrc::gf2 {

GeneratorPolynomial::GeneratorPolynomial(int width_, std::uint32_t taps_, std::string name_)
    : width(width_), taps(taps_), name(std::move(name_)) {
    if (width < 1 || width > 32)
        throw std::invalid_argument("polynomial width must be in 1..32");
    if (width < 32 && (taps >> width) != 0)
        throw std::invalid_argument("tap set above x^" + std::to_string(width - 1) +
                                    " (x^width is implicit)");
    if (!name.empty() && !has_tap(0))
        throw std::invalid_argument("named generator without x^0 coefficient");
}

std::string GeneratorPolynomial::to_string() const {
    std::string out = "x^" + std::to_string(width);
    for (int e = width - 1; e > 0; --e)
        if (has_tap(e)) out += " + x^" + std::to_string(e);
    if (has_tap(0)) out += " + 1";
    return out;
}

GeneratorPolynomial GeneratorPolynomial::ccitt() {
    return {16, (1u << 12) | (1u << 5) | 1u, "ccitt"};
}

GeneratorPolynomial GeneratorPolynomial::sdlc_reverse() {
    return {16, (1u << 11) | (1u << 4) | 1u, "sdlc-reverse"};
}

GeneratorPolynomial GeneratorPolynomial::crc16() {
    return {16, (1u << 15) | (1u << 2) | 1u, "crc16"};
}

GeneratorPolynomial GeneratorPolynomial::crc16_reverse() {
    return {16, (1u << 14) | (1u << 1) | 1u, "crc16-reverse"};
}

GeneratorPolynomial GeneratorPolynomial::crc12() {
    return {12, (1u << 11) | (1u << 3) | (1u << 2) | (1u << 1) | 1u, "crc12"};
}

GeneratorPolynomial GeneratorPolynomial::ethernet() {
    return {32, 0x04C11DB7u, "ethernet"};
}

GeneratorPolynomial GeneratorPolynomial::parse(const std::string& spec) {
    if (spec == "ccitt") return ccitt();
    if (spec == "sdlc-reverse") return sdlc_reverse();
    if (spec == "crc16") return crc16();
    if (spec == "crc16-reverse") return crc16_reverse();
    if (spec == "crc12") return crc12();
    if (spec == "ethernet") return ethernet();
    if (spec.rfind("poly:", 0) == 0) {
        auto rest = spec.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected poly:<width>:<hex taps>: " + spec);
        int width = 0;
        std::uint32_t taps = 0;
        try {
            width = std::stoi(rest.substr(0, colon));
            taps = static_cast<std::uint32_t>(std::stoul(rest.substr(colon + 1), nullptr, 16));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed polynomial spec: " + spec);
        }
        return {width, taps, {}};
    }
    throw std::invalid_argument("unknown polynomial spec: " + spec);
}

} // namespace morphocrc::gf2
