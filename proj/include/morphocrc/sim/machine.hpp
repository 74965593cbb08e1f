#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morphocrc/sim/isa.hpp"

namespace morphocrc::sim {

inline constexpr int kGridSize = 8;
inline constexpr int kFrameBufferBytes = 128;
inline constexpr int kContextPlanes = 2;
inline constexpr int kContextWordsPerPlane = 16;
inline constexpr std::uint32_t kDataInBase = 0x10000;
inline constexpr std::uint32_t kInitRegistersBase = 0x20000;
inline constexpr std::uint32_t kContextBase = 0x30000;

// Cell operation broadcast to a column. XorAB takes both operands from the
// frame buffer banks; XorLeft takes one from the frame buffer and one from
// the left-adjacent cell's output register. row_enable gates which rows of
// the column latch a result.
struct ContextWord {
    enum class Op : std::uint8_t { XorAB = 0, XorLeft = 1 };
    Op op = Op::XorAB;
    std::uint8_t row_enable = 0xFF;

    bool operator==(const ContextWord&) const = default;
};

// Two context blocks (column, row) per plane; the bundled programs only load
// the column block.
struct ContextMemory {
    static constexpr int kBlocks = 2; // 0 = column block, 1 = row block
    std::array<std::array<std::array<std::optional<ContextWord>, kContextWordsPerPlane>, kBlocks>,
               kContextPlanes>
        words{};
};

// Two sets of two byte-addressable banks. Reads of bytes that were never
// loaded or written back fault, which is how the tests pin down that the
// bundled programs only consume defined data.
struct FrameBuffer {
    static constexpr int kSets = 2;
    static constexpr int kBanks = 2; // 0 = A, 1 = B

    std::array<std::array<std::array<std::uint8_t, kFrameBufferBytes>, kBanks>, kSets> bytes{};
    std::array<std::array<std::array<bool, kFrameBufferBytes>, kBanks>, kSets> written{};
};

struct RcArray {
    // outputs[row][column], one byte per cell output register.
    std::array<std::array<std::uint8_t, kGridSize>, kGridSize> outputs{};
};

struct SimulationFault : std::runtime_error {
    int pc;
    std::uint64_t cycle;
    SimulationFault(int pc_, std::uint64_t cycle_, const std::string& what)
        : std::runtime_error("cycle " + std::to_string(cycle_) + " pc " + std::to_string(pc_) +
                             ": " + what),
          pc(pc_), cycle(cycle_) {}
};

struct MachineState {
    std::array<std::uint32_t, 16> regs{}; // r0 hard-wired to zero
    int pc = 0;
    std::uint64_t cycles = 0;
    std::map<std::uint32_t, std::uint8_t> memory; // sparse, unwritten reads as 0
    FrameBuffer fb;
    ContextMemory ctx;
    RcArray array;

    std::uint8_t fb_read(int set, int bank, int addr) const;
    void fb_write(int set, int bank, int addr, std::uint8_t value);
    std::uint8_t mem_read(std::uint32_t addr) const;
    void mem_write(std::uint32_t addr, std::uint8_t value);
};

// Executes program.instructions[state.pc]; one instruction retires per call
// and the cycle counter advances by exactly one.
void step(MachineState& state, const Program& program);

// Per-channel simulation input. `data` is the input byte (DataIn_i = bit
// 7-i), `init_value` the initial register contents in remainder-value form.
struct ChannelInput {
    std::uint8_t data = 0;
    std::uint16_t init_value = 0;
};

// Where one circuit register ends up in the frame buffer when the program
// terminates.
struct ExtractEntry {
    int bank = 0;
    int addr = 0;
};

// A runnable program plus the data contract around it: the context words to
// stage at 0x30000 and the frame-buffer layout of the results.
struct ProgramBundle {
    std::string name;
    std::string poly_spec;
    Program program;
    std::vector<ContextWord> context_words;
    std::array<ExtractEntry, 16> extract{};

    // Bundled byte-step programs (30 and 26 instructions respectively).
    static const ProgramBundle& ccitt16();
    static const ProgramBundle& crc16();

    // Loads `<path>.masm` alongside `<path>.meta.json`, or a listing path
    // plus explicit metadata path.
    static ProgramBundle load(const std::string& listing_path, const std::string& meta_path);
};

struct RunResult {
    MachineState state;
    std::uint64_t cycles = 0;
    std::vector<std::uint16_t> registers; // extracted per channel, value form
};

// Runs the bundle on 1..8 channels. Channel k occupies bit-lane k of every
// staged byte, so the cycle count is channel-count independent.
RunResult run(const ProgramBundle& bundle, const std::vector<ChannelInput>& channels);

// Extraction only, for mid-run inspection of a finished machine.
std::vector<std::uint16_t> extract_registers(const MachineState& state,
                                             const ProgramBundle& bundle, int channel_count);

// ---- Dump formats (golden-file stable) ----------------------------------

// `tag` header plus 8 rows of 8 hex bytes.
std::string dump_array(const MachineState& state, const std::string& tag);

// One line per written byte: addr(hex) bank set value(hex) label?
std::string dump_frame_buffer(const MachineState& state, const ProgramBundle* bundle = nullptr);

// Per-cycle `cycle pc mnemonic` lines for a full run.
std::string trace_run(const ProgramBundle& bundle, const std::vector<ChannelInput>& channels);

} // namespace morphocrc::sim
