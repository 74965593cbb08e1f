#include "morphocrc/gf2/lfsr.hpp"

#include <cstdio>
#include <stdexcept>

#include "morphocrc/gf2/network.hpp"

namespace morphocrc::gf2 {

std::vector<BitConvention> BitConvention::all_four() {
    return {
        {RegisterOrder::Index0IsOutputStage, DataBitOrder::MsbFirst},
        {RegisterOrder::Index0IsOutputStage, DataBitOrder::LsbFirst},
        {RegisterOrder::Index0IsInputStage, DataBitOrder::MsbFirst},
        {RegisterOrder::Index0IsInputStage, DataBitOrder::LsbFirst},
    };
}

std::string BitConvention::to_string() const {
    std::string out = register_order == RegisterOrder::Index0IsOutputStage
                          ? "register0=output-stage"
                          : "register0=input-stage";
    out += data_bit_order == DataBitOrder::MsbFirst ? ", data=msb-first" : ", data=lsb-first";
    return out;
}

std::uint64_t LfsrState::to_bits() const {
    std::uint64_t bits = 0;
    for (int i = 0; i < width(); ++i)
        if (registers[i]) bits |= 1ull << i;
    return bits;
}

LfsrState LfsrState::from_bits(std::uint64_t bits, int width) {
    LfsrState s(width);
    for (int i = 0; i < width; ++i) s.registers[i] = (bits >> i) & 1;
    return s;
}

std::uint64_t LfsrState::to_value(const BitConvention& conv) const {
    const int w = width();
    std::uint64_t value = 0;
    for (int i = 0; i < w; ++i) {
        const int bit = conv.register_order == RegisterOrder::Index0IsOutputStage ? w - 1 - i : i;
        if (registers[i]) value |= 1ull << bit;
    }
    return value;
}

LfsrState LfsrState::from_value(std::uint64_t value, int width, const BitConvention& conv) {
    LfsrState s(width);
    for (int i = 0; i < width; ++i) {
        const int bit =
            conv.register_order == RegisterOrder::Index0IsOutputStage ? width - 1 - i : i;
        s.registers[i] = (value >> bit) & 1;
    }
    return s;
}

std::string LfsrState::to_hex(const BitConvention& conv) const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%0*llx", (width() + 3) / 4,
                  static_cast<unsigned long long>(to_value(conv)));
    return buf;
}

namespace {

// Feedback injection positions, bit i = Register_i.
std::uint64_t tap_mask_register_space(const GeneratorPolynomial& poly, RegisterOrder order) {
    std::uint64_t mask = 0;
    for (int e = 0; e < poly.width; ++e)
        if (poly.has_tap(e))
            mask |= 1ull << (order == RegisterOrder::Index0IsOutputStage ? poly.width - 1 - e : e);
    return mask;
}

} // namespace

std::uint64_t serial_shift_bits(std::uint64_t state_bits, const GeneratorPolynomial& poly,
                                int bit, const BitConvention& conv) {
    const int w = poly.width;
    const std::uint64_t mask = tap_mask_register_space(poly, conv.register_order);
    if (conv.register_order == RegisterOrder::Index0IsOutputStage) {
        const std::uint64_t f = (state_bits ^ static_cast<std::uint64_t>(bit)) & 1u;
        state_bits >>= 1;
        if (f) state_bits ^= mask;
    } else {
        const std::uint64_t f = ((state_bits >> (w - 1)) ^ static_cast<std::uint64_t>(bit)) & 1u;
        state_bits = (state_bits << 1) & ((w == 64) ? ~0ull : ((1ull << w) - 1));
        if (f) state_bits ^= mask;
    }
    return state_bits;
}

LfsrState serial_shift(const LfsrState& state, const GeneratorPolynomial& poly, int bit,
                       const BitConvention& conv) {
    if (state.width() != poly.width)
        throw std::invalid_argument("state width " + std::to_string(state.width()) +
                                    " does not match polynomial width " +
                                    std::to_string(poly.width));
    return LfsrState::from_bits(serial_shift_bits(state.to_bits(), poly, bit, conv), poly.width);
}

LfsrState crc_compute(std::span<const std::uint8_t> message, const GeneratorPolynomial& poly,
                      const LfsrState& init, CrcEngine engine, const BitConvention& conv) {
    if (init.width() != poly.width)
        throw std::invalid_argument("initial state width does not match polynomial width");
    std::uint64_t bits = init.to_bits();
    if (engine == CrcEngine::Serial) {
        for (std::uint8_t byte : message) {
            if (conv.data_bit_order == DataBitOrder::MsbFirst) {
                for (int k = 7; k >= 0; --k)
                    bits = serial_shift_bits(bits, poly, (byte >> k) & 1, conv);
            } else {
                for (int k = 0; k < 8; ++k)
                    bits = serial_shift_bits(bits, poly, (byte >> k) & 1, conv);
            }
        }
    } else {
        const CompiledNetwork net = compile_network(derive_network(poly, 8, conv));
        for (std::uint8_t byte : message) bits = net.apply_byte(bits, byte);
    }
    return LfsrState::from_bits(bits, poly.width);
}

} // namespace morphocrc::gf2
