#include "morphocrc/sim/isa.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace morphocrc::sim {

namespace {

struct OpcodeInfo {
    const char* mnemonic;
    Opcode opcode;
    int operand_count;
    // Bitmask of operand slots that must be register names.
    unsigned reg_slots;
};

constexpr OpcodeInfo kOpcodes[] = {
    {"ldui", Opcode::Ldui, 2, 0b0000001},
    {"ldfb", Opcode::Ldfb, 4, 0b0000001},
    {"ldctxt", Opcode::Ldctxt, 5, 0b0000001},
    {"dbcdc", Opcode::Dbcdc, 7, 0b0000001},
    {"sbcdb", Opcode::Sbcdb, 7, 0b0000000},
    {"wfbi", Opcode::Wfbi, 5, 0b0000000},
    {"add", Opcode::Add, 3, 0b0000111},
};

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

int parse_number(const std::string& token, int line) {
    std::string t = to_lower(token);
    int base = 10;
    if (t.rfind("0x", 0) == 0) {
        base = 16;
        t = t.substr(2);
    } else if (t.size() > 3 && t.compare(t.size() - 3, 3, "hex") == 0) {
        base = 16;
        t = trim(t.substr(0, t.size() - 3));
    }
    if (t.empty()) throw AssemblyError(line, "empty numeric operand");
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(t, &pos, base);
    } catch (const std::exception&) {
        throw AssemblyError(line, "malformed operand '" + token + "'");
    }
    if (pos != t.size()) throw AssemblyError(line, "malformed operand '" + token + "'");
    return value;
}

int parse_register(const std::string& token, int line) {
    std::string t = to_lower(token);
    if (t.size() < 2 || t[0] != 'r') throw AssemblyError(line, "expected register, got '" + token + "'");
    const int n = parse_number(t.substr(1), line);
    if (n < 0 || n > 15) throw AssemblyError(line, "register out of range: " + token);
    return n;
}

} // namespace

std::string Instruction::mnemonic() const {
    for (const auto& info : kOpcodes)
        if (info.opcode == opcode) return info.mnemonic;
    return "?";
}

std::string Instruction::to_string() const {
    std::string out = mnemonic();
    for (const auto& info : kOpcodes) {
        if (info.opcode != opcode) continue;
        for (int i = 0; i < operand_count; ++i) {
            out += i ? ", " : " ";
            if ((info.reg_slots >> i) & 1) out += "r" + std::to_string(operands[i]);
            else out += std::to_string(operands[i]);
        }
    }
    return out;
}

Program assemble(const std::string& source) {
    Program program;
    std::istringstream stream(source);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        // Strip a leading "12:" line number or label.
        if (const auto colon = line.find(':'); colon != std::string::npos &&
                                               line.find_first_of(" \t") > colon) {
            line = trim(line.substr(colon + 1));
            if (line.empty()) continue;
        }
        while (!line.empty() && line.back() == ';') line = trim(line.substr(0, line.size() - 1));
        if (line.empty()) continue;

        const auto mnemonic_end = line.find_first_of(" \t");
        const std::string mnemonic = to_lower(line.substr(0, mnemonic_end));
        std::string rest =
            mnemonic_end == std::string::npos ? std::string{} : trim(line.substr(mnemonic_end));

        const OpcodeInfo* info = nullptr;
        for (const auto& candidate : kOpcodes)
            if (mnemonic == candidate.mnemonic) info = &candidate;
        if (!info) throw AssemblyError(line_no, "unknown mnemonic '" + mnemonic + "'");

        std::vector<std::string> tokens;
        std::string token;
        std::istringstream ops(rest);
        while (std::getline(ops, token, ',')) {
            token = trim(token);
            if (token.empty()) throw AssemblyError(line_no, "empty operand");
            tokens.push_back(token);
        }
        if (static_cast<int>(tokens.size()) != info->operand_count)
            throw AssemblyError(line_no, mnemonic + " expects " +
                                             std::to_string(info->operand_count) + " operands, got " +
                                             std::to_string(tokens.size()));

        Instruction instr;
        instr.opcode = info->opcode;
        instr.operand_count = info->operand_count;
        instr.source_line = line_no;
        for (int i = 0; i < info->operand_count; ++i) {
            instr.operands[i] = ((info->reg_slots >> i) & 1) ? parse_register(tokens[i], line_no)
                                                             : parse_number(tokens[i], line_no);
        }
        program.instructions.push_back(instr);
    }
    return program;
}

} // namespace morphocrc::sim
