#include "morphocrc/sim/machine.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "morphocrc/gf2/lfsr.hpp"

namespace morphocrc::sim {

using nlohmann::json;

std::uint8_t MachineState::fb_read(int set, int bank, int addr) const {
    if (set < 0 || set >= FrameBuffer::kSets || bank < 0 || bank >= FrameBuffer::kBanks ||
        addr < 0 || addr >= kFrameBufferBytes)
        throw SimulationFault(pc, cycles, "frame buffer read out of range (set " +
                                              std::to_string(set) + " bank " + std::to_string(bank) +
                                              " addr " + std::to_string(addr) + ")");
    if (!fb.written[set][bank][addr])
        throw SimulationFault(pc, cycles,
                              "frame buffer read of a byte never written (set " +
                                  std::to_string(set) + " bank " + std::to_string(bank) + " addr " +
                                  std::to_string(addr) + ")");
    return fb.bytes[set][bank][addr];
}

void MachineState::fb_write(int set, int bank, int addr, std::uint8_t value) {
    if (set < 0 || set >= FrameBuffer::kSets || bank < 0 || bank >= FrameBuffer::kBanks ||
        addr < 0 || addr >= kFrameBufferBytes)
        throw SimulationFault(pc, cycles, "frame buffer write out of range (set " +
                                              std::to_string(set) + " bank " + std::to_string(bank) +
                                              " addr " + std::to_string(addr) + ")");
    fb.bytes[set][bank][addr] = value;
    fb.written[set][bank][addr] = true;
}

std::uint8_t MachineState::mem_read(std::uint32_t addr) const {
    const auto it = memory.find(addr);
    return it == memory.end() ? 0 : it->second;
}

void MachineState::mem_write(std::uint32_t addr, std::uint8_t value) { memory[addr] = value; }

namespace {

ContextWord fetch_context_word(const MachineState& state, int plane, int block, int word,
                               const char* what) {
    if (plane < 0 || plane >= kContextPlanes || block < 0 || block >= ContextMemory::kBlocks ||
        word < 0 || word >= kContextWordsPerPlane)
        throw SimulationFault(state.pc, state.cycles,
                              std::string(what) + ": context address out of range");
    const auto& slot = state.ctx.words[plane][block][word];
    if (!slot)
        throw SimulationFault(state.pc, state.cycles,
                              std::string(what) + ": context word " + std::to_string(word) +
                                  " of plane " + std::to_string(plane) + " was never loaded");
    return *slot;
}

void require_zero(const MachineState& state, int value, const char* what) {
    if (value != 0)
        throw SimulationFault(state.pc, state.cycles,
                              std::string(what) + ": reserved operand must be zero");
}

} // namespace

void step(MachineState& state, const Program& program) {
    if (state.pc < 0 || state.pc >= program.size())
        throw SimulationFault(state.pc, state.cycles, "program counter outside the program");
    const Instruction& instr = program.instructions[state.pc];
    const auto& op = instr.operands;

    switch (instr.opcode) {
        case Opcode::Ldui: {
            if (op[0] != 0) state.regs[op[0]] = static_cast<std::uint32_t>(op[1]) << 16;
            break;
        }
        case Opcode::Ldfb: {
            const std::uint32_t base = state.regs[op[0]];
            const int bank = op[1], set = op[2], count = op[3];
            for (int i = 0; i < 4 * count; ++i)
                state.fb_write(set, bank, i, state.mem_read(base + static_cast<std::uint32_t>(i)));
            break;
        }
        case Opcode::Ldctxt: {
            const std::uint32_t base = state.regs[op[0]];
            const int plane = op[1], block = op[2], word = op[3], count = op[4];
            if (plane < 0 || plane >= kContextPlanes || block < 0 ||
                block >= ContextMemory::kBlocks || word < 0 ||
                word + count > kContextWordsPerPlane)
                throw SimulationFault(state.pc, state.cycles, "ldctxt: target out of range");
            for (int i = 0; i < count; ++i) {
                const std::uint8_t opcode_byte = state.mem_read(base + 2 * i);
                const std::uint8_t mask = state.mem_read(base + 2 * i + 1);
                if (opcode_byte > 1)
                    throw SimulationFault(state.pc, state.cycles,
                                          "ldctxt: invalid context word opcode " +
                                              std::to_string(opcode_byte));
                state.ctx.words[plane][block][word + i] =
                    ContextWord{static_cast<ContextWord::Op>(opcode_byte), mask};
            }
            break;
        }
        case Opcode::Dbcdc: {
            const std::uint32_t base = state.regs[op[0]];
            const int b_off = op[1], set = op[2], column = op[3], plane = op[4], word = op[5],
                      a_addr = op[6];
            if (column < 0 || column >= kGridSize)
                throw SimulationFault(state.pc, state.cycles, "dbcdc: column out of range");
            const ContextWord ctx = fetch_context_word(state, plane, 0, word, "dbcdc");
            if (ctx.op != ContextWord::Op::XorAB)
                throw SimulationFault(state.pc, state.cycles,
                                      "dbcdc: context word is not an A-B cell operation");
            for (int row = 0; row < kGridSize; ++row) {
                if (!((ctx.row_enable >> row) & 1)) continue;
                const std::uint8_t a = state.fb_read(set, 0, static_cast<int>(base) + a_addr + row);
                const std::uint8_t b = state.fb_read(set, 1, static_cast<int>(base) + b_off + row);
                state.array.outputs[row][column] = a ^ b;
            }
            break;
        }
        case Opcode::Sbcdb: {
            const int bank = op[0], column = op[1], set = op[2], word = op[3], plane = op[4],
                      addr = op[6];
            require_zero(state, op[5], "sbcdb");
            if (column < 0 || column >= kGridSize)
                throw SimulationFault(state.pc, state.cycles, "sbcdb: column out of range");
            const ContextWord ctx = fetch_context_word(state, plane, 0, word, "sbcdb");
            if (ctx.op != ContextWord::Op::XorLeft)
                throw SimulationFault(state.pc, state.cycles,
                                      "sbcdb: context word is not a left-neighbor cell operation");
            for (int row = 0; row < kGridSize; ++row) {
                if (!((ctx.row_enable >> row) & 1)) continue;
                std::uint8_t v = state.fb_read(set, bank, addr + row);
                if (column > 0) v ^= state.array.outputs[row][column - 1];
                state.array.outputs[row][column] = v;
            }
            break;
        }
        case Opcode::Wfbi: {
            const int column = op[0], set = op[1], bank = op[2], addr = op[4];
            require_zero(state, op[3], "wfbi");
            if (column < 0 || column >= kGridSize)
                throw SimulationFault(state.pc, state.cycles, "wfbi: column out of range");
            for (int row = 0; row < kGridSize; ++row)
                state.fb_write(set, bank, addr + row, state.array.outputs[row][column]);
            break;
        }
        case Opcode::Add: {
            if (op[0] != 0) state.regs[op[0]] = state.regs[op[1]] + state.regs[op[2]];
            break;
        }
    }

    state.regs[0] = 0;
    ++state.pc;
    ++state.cycles;
}

// ---- Running a bundle ----------------------------------------------------

namespace {

void stage_inputs(MachineState& state, const ProgramBundle& bundle,
                  const std::vector<ChannelInput>& channels) {
    if (channels.empty() || channels.size() > 8)
        throw std::invalid_argument("channel count must be in 1..8");
    const gf2::BitConvention conv = gf2::BitConvention::canonical();
    for (int i = 0; i < 8; ++i) {
        std::uint8_t packed = 0;
        for (std::size_t k = 0; k < channels.size(); ++k) {
            const int bit = (channels[k].data >> (7 - i)) & 1; // DataIn_i = byte bit 7-i
            packed |= static_cast<std::uint8_t>(bit) << k;
        }
        state.mem_write(kDataInBase + i, packed);
    }
    for (int i = 0; i < 16; ++i) {
        std::uint8_t packed = 0;
        for (std::size_t k = 0; k < channels.size(); ++k) {
            const auto init = gf2::LfsrState::from_value(channels[k].init_value, 16, conv);
            packed |= static_cast<std::uint8_t>(init.registers[i]) << k;
        }
        state.mem_write(kInitRegistersBase + i, packed);
    }
    for (std::size_t w = 0; w < bundle.context_words.size(); ++w) {
        state.mem_write(kContextBase + 2 * w, static_cast<std::uint8_t>(bundle.context_words[w].op));
        state.mem_write(kContextBase + 2 * w + 1, bundle.context_words[w].row_enable);
    }
}

} // namespace

std::vector<std::uint16_t> extract_registers(const MachineState& state,
                                             const ProgramBundle& bundle, int channel_count) {
    const gf2::BitConvention conv = gf2::BitConvention::canonical();
    std::vector<std::uint16_t> out;
    for (int k = 0; k < channel_count; ++k) {
        gf2::LfsrState regs(16);
        for (int i = 0; i < 16; ++i) {
            const auto& where = bundle.extract[i];
            regs.registers[i] = (state.fb_read(0, where.bank, where.addr) >> k) & 1;
        }
        out.push_back(static_cast<std::uint16_t>(regs.to_value(conv)));
    }
    return out;
}

RunResult run(const ProgramBundle& bundle, const std::vector<ChannelInput>& channels) {
    RunResult result;
    stage_inputs(result.state, bundle, channels);
    while (result.state.pc < bundle.program.size()) step(result.state, bundle.program);
    result.cycles = result.state.cycles;
    result.registers = extract_registers(result.state, bundle, static_cast<int>(channels.size()));
    return result;
}

// ---- Dumps ----------------------------------------------------------------

std::string dump_array(const MachineState& state, const std::string& tag) {
    std::string out = "== " + tag + " ==\n";
    char buf[8];
    for (int row = 0; row < kGridSize; ++row) {
        for (int col = 0; col < kGridSize; ++col) {
            std::snprintf(buf, sizeof buf, col ? " %02x" : "%02x", state.array.outputs[row][col]);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

std::string dump_frame_buffer(const MachineState& state, const ProgramBundle* bundle) {
    std::string out;
    char buf[32];
    for (int set = 0; set < FrameBuffer::kSets; ++set) {
        for (int bank = 0; bank < FrameBuffer::kBanks; ++bank) {
            for (int addr = 0; addr < kFrameBufferBytes; ++addr) {
                if (!state.fb.written[set][bank][addr]) continue;
                std::snprintf(buf, sizeof buf, "%02x %c %d %02x", addr, bank == 0 ? 'A' : 'B', set,
                              state.fb.bytes[set][bank][addr]);
                out += buf;
                if (bundle && set == 0) {
                    for (int i = 0; i < 16; ++i)
                        if (bundle->extract[i].bank == bank && bundle->extract[i].addr == addr)
                            out += " Register_" + std::to_string(i);
                }
                out += "\n";
            }
        }
    }
    return out;
}

std::string trace_run(const ProgramBundle& bundle, const std::vector<ChannelInput>& channels) {
    MachineState state;
    stage_inputs(state, bundle, channels);
    std::string out;
    while (state.pc < bundle.program.size()) {
        const int pc = state.pc;
        step(state, bundle.program);
        out += std::to_string(state.cycles) + " " + std::to_string(pc) + " " +
               bundle.program.instructions[pc].to_string() + "\n";
    }
    return out;
}

// ---- Bundle loading --------------------------------------------------------

namespace {

ProgramBundle parse_bundle(const std::string& listing, const std::string& meta_text) {
    ProgramBundle bundle;
    bundle.program = assemble(listing);
    const json meta = json::parse(meta_text);
    bundle.name = meta.at("name").get<std::string>();
    bundle.poly_spec = meta.at("poly").get<std::string>();
    for (const auto& w : meta.at("context_words")) {
        ContextWord word;
        const std::string op = w.at("op").get<std::string>();
        if (op == "xor-ab") word.op = ContextWord::Op::XorAB;
        else if (op == "xor-left") word.op = ContextWord::Op::XorLeft;
        else throw std::invalid_argument("unknown context word op: " + op);
        word.row_enable = static_cast<std::uint8_t>(w.at("mask").get<int>());
        bundle.context_words.push_back(word);
    }
    const auto& extract = meta.at("extract");
    if (extract.size() != 16) throw std::invalid_argument("extract map must cover 16 registers");
    for (const auto& e : extract) {
        const int reg = e.at("register").get<int>();
        if (reg < 0 || reg > 15) throw std::invalid_argument("extract register out of range");
        const std::string bank = e.at("bank").get<std::string>();
        bundle.extract[reg].bank = bank == "A" ? 0 : 1;
        bundle.extract[reg].addr =
            static_cast<int>(std::stoul(e.at("addr").get<std::string>(), nullptr, 16));
    }
    return bundle;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

} // namespace

ProgramBundle ProgramBundle::load(const std::string& listing_path, const std::string& meta_path) {
    return parse_bundle(read_file(listing_path), read_file(meta_path));
}

// The bundled listings live in embedded_programs.inc; data/programs/ ships
// byte-identical copies for CLI use (a test keeps them in sync).
#include "embedded_programs.inc"

const ProgramBundle& ProgramBundle::ccitt16() {
    static const ProgramBundle bundle = parse_bundle(kCcitt16Listing, kCcitt16Meta);
    return bundle;
}

const ProgramBundle& ProgramBundle::crc16() {
    static const ProgramBundle bundle = parse_bundle(kCrc16Listing, kCrc16Meta);
    return bundle;
}

} // namespace morphocrc::sim
