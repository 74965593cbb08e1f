#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morphocrc/gf2/lfsr.hpp"
#include "morphocrc/gf2/polynomial.hpp"

namespace morphocrc::gf2 {

// One symbol in an update equation. Canonical term order is Register < XOR <
// DataIn, then by index (pairs cancel eagerly, so no term repeats).
struct Term {
    enum class Kind { Register = 0, Xor = 1, DataIn = 2 };
    Kind kind = Kind::Register;
    int index = 0;

    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;

    std::string to_string() const;
};

using TermList = std::vector<Term>;

// The state of the circuit after `step_bits` shifts, expressed symbolically:
// XOR_i = Register_i ^ DataIn_i for i in 0..step_bits-1, and one canonical
// term list per output register. The whole network is a linear map over
// GF(2) on (state, data).
struct UpdateNetwork {
    int width = 0;
    int step_bits = 0;
    BitConvention convention;
    std::vector<int> xor_defs;           // indices i with XOR_i defined
    std::vector<TermList> register_defs; // register_defs[i] = terms of Register_i'

    bool operator==(const UpdateNetwork&) const = default;

    // Text listing, one definition per line, byte-identical across runs:
    //   XOR_0 = Register_0 ^ DataIn_0
    //   ...
    //   Register_11' = XOR_3
    std::string to_listing() const;

    // Structured golden-file form: { "xor": [...], "registers": [[terms]] }
    // with terms as {"kind": "reg"|"xor"|"in", "index": n}.
    std::string to_json() const;
};

// Symbolic simulation of `step_bits` serial shifts, factoring XOR_i wherever
// Register_i and DataIn_i co-occur.
UpdateNetwork derive_network(const GeneratorPolynomial& poly, int step_bits,
                             const BitConvention& conv = BitConvention::canonical());

// Evaluates the network on concrete values. `data` supplies step_bits bits,
// bit i of `data` = DataIn_i. Throws on width mismatch.
LfsrState apply_network(const LfsrState& state, std::uint64_t data, const UpdateNetwork& net);

// Same network compiled to per-output parity masks over (state | data <<
// width); used by the exhaustive equivalence check and the parallel engine.
struct CompiledNetwork {
    int width = 0;
    int step_bits = 0;
    BitConvention convention;
    std::vector<std::uint64_t> output_masks;

    std::uint64_t apply_bits(std::uint64_t state_bits, std::uint64_t data_bits) const;

    // Folds one data byte (network convention decides bit order).
    std::uint64_t apply_byte(std::uint64_t state_bits, std::uint8_t byte) const;
};

CompiledNetwork compile_network(const UpdateNetwork& net);

// DataIn_i <-> byte mapping: DataIn_i is byte bit (7-i), so bit i of the
// returned word = DataIn_i.
std::uint64_t data_bits_from_byte(std::uint8_t byte);

// ---- Reference listings and audits ------------------------------------

// A register definition as literally printed in a reference listing. Besides
// reg/xor/in terms these may use the funnel shorthand X = XOR_0 ^ ... ^
// XOR_7 and may cite out-of-range XOR indices.
struct ReferenceTerm {
    enum class Kind { Register, Xor, DataIn, Funnel };
    Kind kind = Kind::Register;
    int index = 0;
};

struct ReferenceListing {
    std::string name;
    int width = 0;
    int step_bits = 0;
    std::vector<int> xor_defs;
    bool has_funnel = false; // listing defines X = XOR_0 ^ ... ^ XOR_{step-1}
    std::vector<std::vector<ReferenceTerm>> register_defs;

    static ReferenceListing from_json(const std::string& json_text);
};

// One register line compared between the derived network and a reference
// listing (reference terms canonicalized, funnel X expanded).
struct LineDiff {
    int register_index = 0;
    bool matches = false;
    std::vector<int> undefined_xor_indices; // XOR_i cited with i >= step_bits
    TermList derived;
    TermList reference;   // canonicalized; undefined symbols dropped
    std::string reference_literal;
};

struct NetworkDiff {
    std::string reference_name;
    bool xor_defs_match = false;
    std::vector<LineDiff> lines;

    bool all_match() const;
    int mismatch_count() const;

    std::string to_text() const; // the audit artifact, machine-generated
    std::string to_json() const;
};

NetworkDiff diff_against_reference(const UpdateNetwork& derived, const ReferenceListing& ref);

// ---- Exhaustive oracle equivalence -------------------------------------

struct ExhaustiveResult {
    std::uint64_t cases_total = 0;
    std::uint64_t cases_passed = 0;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> first_failures; // (state, data)

    bool all_passed() const { return cases_total == cases_passed; }
};

// Checks apply_network == step_bits serial shifts over every width-bit state
// and every data byte. Shardable by state prefix; the aggregation is a
// deterministic in-order merge.
ExhaustiveResult exhaustive_equivalence_check(const GeneratorPolynomial& poly,
                                              const BitConvention& conv, int shards = 0);

} // namespace morphocrc::gf2
