#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "morphocrc/gf2/polynomial.hpp"

namespace morphocrc::gf2 {

// Orientation of the shift register chain. With Index0IsOutputStage,
// Register_0 is the stage whose content leaves the register first (it drives
// the feedback); with Index0IsInputStage the chain is mirrored.
enum class RegisterOrder {
    Index0IsOutputStage,
    Index0IsInputStage,
};

// Which end of a data byte is clocked in first. DataIn_i always denotes byte
// bit (7-i), so MsbFirst clocks DataIn_0, DataIn_1, ... and LsbFirst clocks
// DataIn_7 down to DataIn_0.
enum class DataBitOrder {
    MsbFirst,
    LsbFirst,
};

struct BitConvention {
    RegisterOrder register_order = RegisterOrder::Index0IsOutputStage;
    DataBitOrder data_bit_order = DataBitOrder::MsbFirst;

    bool operator==(const BitConvention&) const = default;

    // The convention under which the derived 8-shift CCITT network matches
    // the reference listing term for term. Uniqueness is enforced by test.
    static BitConvention canonical() { return {}; }

    static std::vector<BitConvention> all_four();
    std::string to_string() const;
};

// The register vector of the serial circuit, registers[i] = Register_i.
struct LfsrState {
    std::vector<std::uint8_t> registers;

    LfsrState() = default;
    explicit LfsrState(int width) : registers(width, 0) {}

    bool operator==(const LfsrState&) const = default;

    int width() const { return static_cast<int>(registers.size()); }

    // Bit-packed form, bit i = Register_i.
    std::uint64_t to_bits() const;
    static LfsrState from_bits(std::uint64_t bits, int width);

    // The register contents read as a remainder value: under the canonical
    // register order Register_0 is the most significant bit.
    std::uint64_t to_value(const BitConvention& conv) const;
    static LfsrState from_value(std::uint64_t value, int width, const BitConvention& conv);

    // Lowercase hex, width/4 digits, "0x" prefix.
    std::string to_hex(const BitConvention& conv) const;
};

// One clock of the serial circuit: the incoming bit XORed with the feedback
// stage drives the tap positions while every register shifts one stage.
LfsrState serial_shift(const LfsrState& state, const GeneratorPolynomial& poly, int bit,
                       const BitConvention& conv);

// Word-level serial shift on the bit-packed register vector (bit i =
// Register_i). Same circuit as serial_shift, used on hot paths.
std::uint64_t serial_shift_bits(std::uint64_t state_bits, const GeneratorPolynomial& poly,
                                int bit, const BitConvention& conv);

enum class CrcEngine { Serial, Parallel };

// Remainder register contents after clocking every bit of `message` through
// the circuit. Serial and parallel engines agree bit-exactly; the parallel
// engine folds one byte at a time through the derived 8-shift network.
LfsrState crc_compute(std::span<const std::uint8_t> message, const GeneratorPolynomial& poly,
                      const LfsrState& init, CrcEngine engine,
                      const BitConvention& conv = BitConvention::canonical());

} // namespace morphocrc::gf2
