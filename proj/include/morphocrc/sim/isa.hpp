#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace morphocrc::sim {

// The control-processor subset used by the bundled programs. One retired
// instruction costs one cycle, DMA instructions included.
enum class Opcode {
    Ldui,   // ldui rD, imm          rD = imm << 16 (segment address)
    Ldfb,   // ldfb rS, bank, set, count       main memory -> frame buffer
    Ldctxt, // ldctxt rS, plane, block, word, count   main memory -> context memory
    Dbcdc,  // dbcdc rS, bOff, set, col, plane, word, aAddr   double-bank column broadcast
    Sbcdb,  // sbcdb bank, col, set, word, plane, 0, addr     single-bank column broadcast
    Wfbi,   // wfbi col, set, bank, 0, addr    column outputs -> frame buffer
    Add,    // add rD, rS, rT        (add r0, r0, r0 is the NOP)
};

struct Instruction {
    Opcode opcode = Opcode::Add;
    std::array<int, 7> operands{}; // register operands hold the register number
    int operand_count = 0;
    int source_line = 0;

    std::string mnemonic() const;
    std::string to_string() const;
};

struct Program {
    std::vector<Instruction> instructions;

    int size() const { return static_cast<int>(instructions.size()); }
    bool empty() const { return instructions.empty(); }
};

// Raised on unknown mnemonics or malformed operands, carries the line number.
struct AssemblyError : std::runtime_error {
    int line;
    AssemblyError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// One instruction per line, `mnemonic op1, op2, ...`. `#` starts a comment,
// `N:` line numbers and labels are ignored, hex accepts 0x or a trailing
// `hex`, register operands are r0..r15.
Program assemble(const std::string& source);

} // namespace morphocrc::sim
