#include <doctest.h>

#include <random>

#include "morphocrc/gf2/network.hpp"
#include "morphocrc/sim/machine.hpp"

using namespace morphocrc;
using namespace morphocrc::sim;

namespace {

const gf2::BitConvention kConv = gf2::BitConvention::canonical();

// The byte-step oracle for a bundle's polynomial.
std::uint16_t network_step(const std::string& poly_spec, std::uint16_t init, std::uint8_t data) {
    const auto poly = gf2::GeneratorPolynomial::parse(poly_spec);
    const auto net = gf2::compile_network(gf2::derive_network(poly, 8, kConv));
    const auto state = gf2::LfsrState::from_value(init, 16, kConv);
    return static_cast<std::uint16_t>(
        gf2::LfsrState::from_bits(net.apply_byte(state.to_bits(), data), 16).to_value(kConv));
}

// Single-channel staging of main memory, mirroring what run() sets up, for
// tests that step the machine to a mid-program moment.
MachineState staged_machine(const ProgramBundle& bundle, std::uint8_t data_byte,
                            std::uint16_t init_value) {
    MachineState m;
    const auto init = gf2::LfsrState::from_value(init_value, 16, kConv);
    for (int i = 0; i < 8; ++i)
        m.mem_write(kDataInBase + i, static_cast<std::uint8_t>((data_byte >> (7 - i)) & 1));
    for (int i = 0; i < 16; ++i) m.mem_write(kInitRegistersBase + i, init.registers[i]);
    for (std::size_t w = 0; w < bundle.context_words.size(); ++w) {
        m.mem_write(kContextBase + 2 * w, static_cast<std::uint8_t>(bundle.context_words[w].op));
        m.mem_write(kContextBase + 2 * w + 1, bundle.context_words[w].row_enable);
    }
    return m;
}

} // namespace

TEST_CASE("assembler basics") {
    CHECK(assemble("").empty());
    CHECK(assemble("# only a comment\n\n").empty());

    const auto nop = assemble("add r0, r0, r0");
    REQUIRE(nop.size() == 1);
    CHECK(nop.instructions[0].opcode == Opcode::Add);
    CHECK(nop.instructions[0].to_string() == "add r0, r0, r0");

    // line numbers, trailing semicolons and hex spellings are accepted
    const auto prog = assemble("12: ldui r3, 0x3;\nwfbi 0, 0, 0, 0, 30hex\n");
    REQUIRE(prog.size() == 2);
    CHECK(prog.instructions[0].opcode == Opcode::Ldui);
    CHECK(prog.instructions[1].operands[4] == 0x30);
}

TEST_CASE("assembler rejects bad input with line numbers") {
    CHECK_THROWS_WITH_AS(assemble("frobnicate r1, 2"), "line 1: unknown mnemonic 'frobnicate'",
                         AssemblyError);
    CHECK_THROWS_AS(assemble("ldui r1"), AssemblyError);
    CHECK_THROWS_AS(assemble("add r0, r0, 5"), AssemblyError);
    CHECK_THROWS_AS(assemble("ldui r99, 1"), AssemblyError);
    try {
        assemble("add r0, r0, r0\nbogus 1, 2\n");
        FAIL("expected an assembly error");
    } catch (const AssemblyError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("bundled programs assemble to the documented cycle counts") {
    CHECK(ProgramBundle::ccitt16().program.size() == 30);
    CHECK(ProgramBundle::crc16().program.size() == 26);
}

TEST_CASE("embedded bundles match the shipped data files") {
    const std::string dir = std::string(MORPHOCRC_DATA_DIR) + "/programs/";
    const std::pair<std::string, const ProgramBundle*> bundles[] = {
        {"ccitt16", &ProgramBundle::ccitt16()},
        {"crc16", &ProgramBundle::crc16()},
    };
    for (const auto& [name, embedded] : bundles) {
        const auto loaded = ProgramBundle::load(dir + name + ".masm", dir + name + ".meta.json");
        REQUIRE(loaded.program.size() == embedded->program.size());
        for (int i = 0; i < loaded.program.size(); ++i)
            CHECK(loaded.program.instructions[i].to_string() ==
                  embedded->program.instructions[i].to_string());
        CHECK(loaded.poly_spec == embedded->poly_spec);
        CHECK(loaded.context_words == embedded->context_words);
        for (int i = 0; i < 16; ++i) {
            CHECK(loaded.extract[i].bank == embedded->extract[i].bank);
            CHECK(loaded.extract[i].addr == embedded->extract[i].addr);
        }
    }
}

TEST_CASE("broadcast over all-zero banks leaves zero outputs") {
    MachineState state;
    for (int i = 0; i < 8; ++i) {
        state.fb_write(0, 0, i, 0);
        state.fb_write(0, 1, i, 0);
    }
    state.ctx.words[0][0][0] = ContextWord{ContextWord::Op::XorAB, 0xFF};
    const auto prog = assemble("dbcdc r0, 0, 0, 0, 0, 0, 0");
    step(state, prog);
    for (int row = 0; row < 8; ++row) CHECK(state.array.outputs[row][0] == 0);
    CHECK(state.cycles == 1);
}

TEST_CASE("first broadcast computes Register_i ^ DataIn_i down column 0") {
    const auto& bundle = ProgramBundle::ccitt16();
    const std::uint8_t data_byte = 0xB5;
    const auto init = gf2::LfsrState::from_value(0x1234, 16, kConv);
    MachineState m = staged_machine(bundle, data_byte, 0x1234);
    int first_dbcdc = -1;
    for (int i = 0; i < bundle.program.size(); ++i)
        if (bundle.program.instructions[i].opcode == Opcode::Dbcdc) {
            first_dbcdc = i;
            break;
        }
    REQUIRE(first_dbcdc >= 0);
    while (m.pc <= first_dbcdc) step(m, bundle.program);
    for (int row = 0; row < 8; ++row) {
        const int expected = init.registers[row] ^ ((data_byte >> (7 - row)) & 1);
        CHECK(m.array.outputs[row][0] == expected);
    }
    const std::string grid = dump_array(m, "after xor broadcast");
    CHECK(grid.starts_with("== after xor broadcast ==\n"));

    // the two writebacks that follow park XOR_0..7 at 0x10..0x17 of both banks
    step(m, bundle.program);
    step(m, bundle.program);
    for (int i = 0; i < 8; ++i) {
        const int xor_i = init.registers[i] ^ ((data_byte >> (7 - i)) & 1);
        CHECK(m.fb_read(0, 0, 0x10 + i) == xor_i);
        CHECK(m.fb_read(0, 1, 0x10 + i) == xor_i);
    }
}

TEST_CASE("pair step leaves XOR_{i+4}^XOR_i in rows 0..3 of column 0") {
    const auto& bundle = ProgramBundle::ccitt16();
    const std::uint8_t data_byte = 0xC7;
    const std::uint16_t init_value = 0xA50F;
    const auto init = gf2::LfsrState::from_value(init_value, 16, kConv);
    MachineState m = staged_machine(bundle, data_byte, init_value);
    int dbcdc_seen = 0, stop_pc = -1;
    for (int i = 0; i < bundle.program.size(); ++i)
        if (bundle.program.instructions[i].opcode == Opcode::Dbcdc && ++dbcdc_seen == 2) {
            stop_pc = i;
            break;
        }
    REQUIRE(stop_pc >= 0);
    while (m.pc <= stop_pc) step(m, bundle.program);

    auto xor_bit = [&](int i) {
        return init.registers[i] ^ ((data_byte >> (7 - i)) & 1);
    };
    for (int i = 0; i < 4; ++i) CHECK(m.array.outputs[i][0] == (xor_bit(i + 4) ^ xor_bit(i)));
}

TEST_CASE("simulator faults carry the pc and cycle") {
    MachineState state;
    const auto prog = assemble("dbcdc r0, 0, 0, 0, 0, 0, 0");
    // no context word loaded
    CHECK_THROWS_AS(step(state, prog), SimulationFault);

    MachineState oob;
    oob.ctx.words[0][0][0] = ContextWord{ContextWord::Op::XorAB, 0xFF};
    const auto prog2 = assemble("dbcdc r0, 0x7d, 0, 0, 0, 0, 0");
    try {
        step(oob, prog2);
        FAIL("expected a fault");
    } catch (const SimulationFault& e) {
        CHECK(e.pc == 0);
        CHECK(std::string(e.what()).find("frame buffer read") != std::string::npos);
    }

    // reading a byte never written faults even in range
    MachineState unwritten;
    unwritten.ctx.words[0][0][0] = ContextWord{ContextWord::Op::XorAB, 0xFF};
    CHECK_THROWS_AS(step(unwritten, prog), SimulationFault);
}

TEST_CASE("bundled programs never read an unwritten frame-buffer byte") {
    // fb_read faults on unwritten bytes, so a clean run is the property.
    std::mt19937_64 rng(0x77);
    for (const auto* bundle : {&ProgramBundle::ccitt16(), &ProgramBundle::crc16()}) {
        for (int i = 0; i < 32; ++i) {
            std::vector<ChannelInput> channels;
            const int n = 1 + static_cast<int>(rng() % 8);
            for (int k = 0; k < n; ++k)
                channels.push_back({static_cast<std::uint8_t>(rng()),
                                    static_cast<std::uint16_t>(rng())});
            CHECK_NOTHROW(run(*bundle, channels));
        }
    }
}

TEST_CASE("runs are deterministic and cycle counts are input-independent") {
    for (const auto* bundle : {&ProgramBundle::ccitt16(), &ProgramBundle::crc16()}) {
        const auto a = run(*bundle, {{0x00, 0x0000}});
        const auto b = run(*bundle, {{0xFF, 0xFFFF}});
        CHECK(a.cycles == b.cycles);
        const auto c = run(*bundle, {{0x00, 0x0000}});
        CHECK(a.registers == c.registers);
        CHECK(dump_frame_buffer(a.state, bundle) == dump_frame_buffer(c.state, bundle));
    }
}

TEST_CASE("extracted registers equal the byte-step network for random inputs") {
    std::mt19937_64 rng(0x5150);
    for (const auto* bundle : {&ProgramBundle::ccitt16(), &ProgramBundle::crc16()}) {
        for (int i = 0; i < 1000; ++i) {
            const ChannelInput input{static_cast<std::uint8_t>(rng()),
                                     static_cast<std::uint16_t>(rng())};
            const auto result = run(*bundle, {input});
            REQUIRE(result.registers[0] ==
                    network_step(bundle->poly_spec, input.init_value, input.data));
        }
    }
}

TEST_CASE("eight channels behave as eight independent single-channel runs") {
    std::mt19937_64 rng(0x888);
    for (const auto* bundle : {&ProgramBundle::ccitt16(), &ProgramBundle::crc16()}) {
        std::vector<ChannelInput> channels;
        for (int k = 0; k < 8; ++k)
            channels.push_back(
                {static_cast<std::uint8_t>(rng()), static_cast<std::uint16_t>(rng())});
        const auto multi = run(*bundle, channels);
        CHECK(multi.cycles == run(*bundle, {channels[0]}).cycles);
        for (int k = 0; k < 8; ++k)
            CHECK(multi.registers[k] == run(*bundle, {channels[k]}).registers[0]);
    }
}

TEST_CASE("funnel chain leaves the full XOR accumulation in column 7 row 0") {
    const auto& bundle = ProgramBundle::crc16();
    const std::uint8_t data_byte = 0x3C;
    const std::uint16_t init_value = 0x9DB2;
    const auto init = gf2::LfsrState::from_value(init_value, 16, kConv);
    MachineState m = staged_machine(bundle, data_byte, init_value);
    int last_chain_pc = -1;
    for (int i = 0; i < bundle.program.size(); ++i) {
        const auto& instr = bundle.program.instructions[i];
        if (instr.opcode == Opcode::Sbcdb && instr.operands[1] == 7) last_chain_pc = i;
    }
    REQUIRE(last_chain_pc >= 0);
    while (m.pc <= last_chain_pc) step(m, bundle.program);

    int x = 0;
    for (int i = 0; i < 8; ++i) x ^= init.registers[i] ^ ((data_byte >> (7 - i)) & 1);
    CHECK(m.array.outputs[0][7] == x);
    // row 0 of the grid is the running prefix across columns
    int prefix = 0;
    for (int c = 0; c < 8; ++c) {
        prefix ^= init.registers[c] ^ ((data_byte >> (7 - c)) & 1);
        CHECK(m.array.outputs[0][c] == prefix);
    }
}

TEST_CASE("trace and dumps are byte-identical across runs") {
    const auto& bundle = ProgramBundle::crc16();
    const std::vector<ChannelInput> input = {{0x42, 0xBEEF}};
    CHECK(trace_run(bundle, input) == trace_run(bundle, input));
    const auto a = run(bundle, input);
    const auto b = run(bundle, input);
    CHECK(dump_array(a.state, "final") == dump_array(b.state, "final"));
    const auto trace = trace_run(bundle, input);
    CHECK(trace.find("1 0 ldui r1, 1\n") == 0);
}

TEST_CASE("channel count is validated") {
    CHECK_THROWS_AS(run(ProgramBundle::ccitt16(), {}), std::invalid_argument);
    CHECK_THROWS_AS(run(ProgramBundle::ccitt16(), std::vector<ChannelInput>(9)),
                    std::invalid_argument);
}
