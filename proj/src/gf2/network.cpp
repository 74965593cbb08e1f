#include "morphocrc/gf2/network.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace morphocrc::gf2 {

using nlohmann::json;

std::string Term::to_string() const {
    switch (kind) {
        case Kind::Register: return "Register_" + std::to_string(index);
        case Kind::Xor: return "XOR_" + std::to_string(index);
        case Kind::DataIn: return "DataIn_" + std::to_string(index);
    }
    return "?";
}

namespace {

std::string render_terms(const TermList& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " ^ ";
        out += terms[i].to_string();
    }
    return out;
}

const char* kind_tag(Term::Kind kind) {
    switch (kind) {
        case Term::Kind::Register: return "reg";
        case Term::Kind::Xor: return "xor";
        case Term::Kind::DataIn: return "in";
    }
    return "?";
}

} // namespace

std::string UpdateNetwork::to_listing() const {
    std::string out;
    for (int i : xor_defs)
        out += "XOR_" + std::to_string(i) + " = Register_" + std::to_string(i) + " ^ DataIn_" +
               std::to_string(i) + "\n";
    for (int i = 0; i < width; ++i)
        out += "Register_" + std::to_string(i) + "' = " + render_terms(register_defs[i]) + "\n";
    return out;
}

std::string UpdateNetwork::to_json() const {
    json j;
    j["width"] = width;
    j["step_bits"] = step_bits;
    j["xor"] = xor_defs;
    json regs = json::array();
    for (const auto& terms : register_defs) {
        json line = json::array();
        for (const auto& t : terms) line.push_back({{"kind", kind_tag(t.kind)}, {"index", t.index}});
        regs.push_back(line);
    }
    j["registers"] = regs;
    return j.dump(2) + "\n";
}

UpdateNetwork derive_network(const GeneratorPolynomial& poly, int step_bits,
                             const BitConvention& conv) {
    if (step_bits < 0) throw std::invalid_argument("step_bits must be >= 0");
    const int w = poly.width;
    if (w + step_bits > 64)
        throw std::invalid_argument("width + step_bits beyond 64 is not supported");

    // Symbolic state: bit j = Register_j, bit w+j = DataIn_j.
    std::vector<std::uint64_t> sym(w);
    for (int i = 0; i < w; ++i) sym[i] = 1ull << i;

    for (int t = 0; t < step_bits; ++t) {
        const int data_index = conv.data_bit_order == DataBitOrder::MsbFirst ? t : step_bits - 1 - t;
        const std::uint64_t d = 1ull << (w + data_index);
        std::vector<std::uint64_t> next(w, 0);
        if (conv.register_order == RegisterOrder::Index0IsOutputStage) {
            const std::uint64_t f = sym[0] ^ d;
            for (int i = 0; i + 1 < w; ++i) next[i] = sym[i + 1];
            for (int e = 0; e < w; ++e)
                if (poly.has_tap(e)) next[w - 1 - e] ^= f;
        } else {
            const std::uint64_t f = sym[w - 1] ^ d;
            for (int i = 1; i < w; ++i) next[i] = sym[i - 1];
            for (int e = 0; e < w; ++e)
                if (poly.has_tap(e)) next[e] ^= f;
        }
        sym = std::move(next);
    }

    UpdateNetwork net;
    net.width = w;
    net.step_bits = step_bits;
    net.convention = conv;
    const int xor_count = std::min(w, step_bits);
    for (int i = 0; i < xor_count; ++i) net.xor_defs.push_back(i);
    net.register_defs.resize(w);
    for (int i = 0; i < w; ++i) {
        std::uint64_t bits = sym[i];
        TermList terms;
        // Factor XOR_j = Register_j ^ DataIn_j wherever both co-occur.
        for (int j = 0; j < xor_count; ++j) {
            const std::uint64_t pair = (1ull << j) | (1ull << (w + j));
            if ((bits & pair) == pair) {
                bits &= ~pair;
                terms.push_back({Term::Kind::Xor, j});
            }
        }
        for (int j = 0; j < w; ++j)
            if ((bits >> j) & 1) terms.push_back({Term::Kind::Register, j});
        for (int j = 0; j < step_bits; ++j)
            if ((bits >> (w + j)) & 1) terms.push_back({Term::Kind::DataIn, j});
        std::sort(terms.begin(), terms.end());
        net.register_defs[i] = std::move(terms);
    }
    return net;
}

LfsrState apply_network(const LfsrState& state, std::uint64_t data, const UpdateNetwork& net) {
    if (state.width() != net.width)
        throw std::invalid_argument("state width does not match network width");
    if (net.step_bits < 64 && (data >> net.step_bits) != 0)
        throw std::invalid_argument("data has bits beyond step_bits");
    const CompiledNetwork compiled = compile_network(net);
    return LfsrState::from_bits(compiled.apply_bits(state.to_bits(), data), net.width);
}

CompiledNetwork compile_network(const UpdateNetwork& net) {
    CompiledNetwork c;
    c.width = net.width;
    c.step_bits = net.step_bits;
    c.convention = net.convention;
    c.output_masks.resize(net.width, 0);
    for (int i = 0; i < net.width; ++i) {
        std::uint64_t mask = 0;
        for (const Term& t : net.register_defs[i]) {
            switch (t.kind) {
                case Term::Kind::Register: mask ^= 1ull << t.index; break;
                case Term::Kind::DataIn: mask ^= 1ull << (net.width + t.index); break;
                case Term::Kind::Xor:
                    mask ^= (1ull << t.index) | (1ull << (net.width + t.index));
                    break;
            }
        }
        c.output_masks[i] = mask;
    }
    return c;
}

std::uint64_t CompiledNetwork::apply_bits(std::uint64_t state_bits, std::uint64_t data_bits) const {
    const std::uint64_t combined = state_bits | (data_bits << width);
    std::uint64_t out = 0;
    for (int i = 0; i < width; ++i)
        out |= static_cast<std::uint64_t>(__builtin_parityll(combined & output_masks[i])) << i;
    return out;
}

std::uint64_t data_bits_from_byte(std::uint8_t byte) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        if ((byte >> (7 - i)) & 1) bits |= 1ull << i;
    return bits;
}

std::uint64_t CompiledNetwork::apply_byte(std::uint64_t state_bits, std::uint8_t byte) const {
    return apply_bits(state_bits, data_bits_from_byte(byte));
}

// ---- Reference listings -------------------------------------------------

ReferenceListing ReferenceListing::from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    ReferenceListing ref;
    ref.name = j.at("name").get<std::string>();
    ref.width = j.at("width").get<int>();
    ref.step_bits = j.at("step_bits").get<int>();
    ref.xor_defs = j.at("xor_defs").get<std::vector<int>>();
    ref.has_funnel = j.value("funnel", false);
    for (const auto& line : j.at("registers")) {
        std::vector<ReferenceTerm> terms;
        for (const auto& t : line) {
            ReferenceTerm term;
            const std::string kind = t.at("kind").get<std::string>();
            if (kind == "reg") term.kind = ReferenceTerm::Kind::Register;
            else if (kind == "xor") term.kind = ReferenceTerm::Kind::Xor;
            else if (kind == "in") term.kind = ReferenceTerm::Kind::DataIn;
            else if (kind == "funnel") term.kind = ReferenceTerm::Kind::Funnel;
            else throw std::invalid_argument("unknown reference term kind: " + kind);
            term.index = t.value("index", 0);
            terms.push_back(term);
        }
        ref.register_defs.push_back(std::move(terms));
    }
    if (static_cast<int>(ref.register_defs.size()) != ref.width)
        throw std::invalid_argument("reference listing has wrong register count");
    return ref;
}

namespace {

std::string render_reference_terms(const std::vector<ReferenceTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " ^ ";
        const auto& t = terms[i];
        switch (t.kind) {
            case ReferenceTerm::Kind::Register: out += "Register_" + std::to_string(t.index); break;
            case ReferenceTerm::Kind::Xor: out += "XOR_" + std::to_string(t.index); break;
            case ReferenceTerm::Kind::DataIn: out += "DataIn_" + std::to_string(t.index); break;
            case ReferenceTerm::Kind::Funnel: out += "X"; break;
        }
    }
    return out;
}

// Canonical GF(2) form of a reference line: funnel X expanded to its XOR
// terms, pairs cancelled, out-of-range XOR indices reported separately.
std::pair<TermList, std::vector<int>> canonicalize_reference(
    const std::vector<ReferenceTerm>& terms, int step_bits) {
    std::map<Term, int> toggles;
    std::vector<int> undefined;
    auto toggle = [&toggles](Term t) { toggles[t] ^= 1; };
    for (const auto& t : terms) {
        switch (t.kind) {
            case ReferenceTerm::Kind::Register: toggle({Term::Kind::Register, t.index}); break;
            case ReferenceTerm::Kind::DataIn: toggle({Term::Kind::DataIn, t.index}); break;
            case ReferenceTerm::Kind::Xor:
                if (t.index >= step_bits) undefined.push_back(t.index);
                else toggle({Term::Kind::Xor, t.index});
                break;
            case ReferenceTerm::Kind::Funnel:
                for (int j = 0; j < step_bits; ++j) toggle({Term::Kind::Xor, j});
                break;
        }
    }
    TermList out;
    for (const auto& [term, on] : toggles)
        if (on) out.push_back(term);
    std::sort(out.begin(), out.end());
    std::sort(undefined.begin(), undefined.end());
    undefined.erase(std::unique(undefined.begin(), undefined.end()), undefined.end());
    return {out, undefined};
}

} // namespace

NetworkDiff diff_against_reference(const UpdateNetwork& derived, const ReferenceListing& ref) {
    if (derived.width != ref.width || derived.step_bits != ref.step_bits)
        throw std::invalid_argument("derived network and reference listing differ in shape");
    NetworkDiff diff;
    diff.reference_name = ref.name;
    diff.xor_defs_match = derived.xor_defs == ref.xor_defs;
    for (int i = 0; i < derived.width; ++i) {
        LineDiff line;
        line.register_index = i;
        line.derived = derived.register_defs[i];
        auto [canon, undefined] = canonicalize_reference(ref.register_defs[i], ref.step_bits);
        line.reference = std::move(canon);
        line.undefined_xor_indices = std::move(undefined);
        line.reference_literal = render_reference_terms(ref.register_defs[i]);
        line.matches = line.undefined_xor_indices.empty() && line.derived == line.reference;
        diff.lines.push_back(std::move(line));
    }
    return diff;
}

bool NetworkDiff::all_match() const {
    if (!xor_defs_match) return false;
    return std::all_of(lines.begin(), lines.end(), [](const LineDiff& l) { return l.matches; });
}

int NetworkDiff::mismatch_count() const {
    int n = 0;
    for (const auto& l : lines)
        if (!l.matches) ++n;
    return n;
}

std::string NetworkDiff::to_text() const {
    std::ostringstream out;
    out << "audit of derived network against reference listing '" << reference_name << "'\n";
    out << "xor definitions: " << (xor_defs_match ? "match" : "MISMATCH") << "\n";
    int undefined_lines = 0;
    for (const auto& l : lines) {
        out << "Register_" << l.register_index << "': ";
        if (l.matches) {
            out << "match (" << render_terms(l.derived) << ")\n";
            continue;
        }
        out << "MISMATCH\n";
        out << "  derived:   " << render_terms(l.derived) << "\n";
        out << "  reference: " << l.reference_literal << "\n";
        if (!l.undefined_xor_indices.empty()) {
            ++undefined_lines;
            out << "  undefined symbols:";
            for (int idx : l.undefined_xor_indices) out << " XOR_" << idx;
            out << "\n";
        }
    }
    out << "summary: " << (lines.size() - mismatch_count()) << "/" << lines.size()
        << " register lines match, " << mismatch_count() << " mismatches, " << undefined_lines
        << " lines cite undefined XOR terms\n";
    return out.str();
}

std::string NetworkDiff::to_json() const {
    json j;
    j["reference"] = reference_name;
    j["xor_defs_match"] = xor_defs_match;
    j["all_match"] = all_match();
    json jlines = json::array();
    for (const auto& l : lines) {
        json e;
        e["register"] = l.register_index;
        e["matches"] = l.matches;
        e["derived"] = render_terms(l.derived);
        e["reference"] = l.reference_literal;
        e["undefined_xor"] = l.undefined_xor_indices;
        jlines.push_back(e);
    }
    j["lines"] = jlines;
    return j.dump(2) + "\n";
}

// ---- Exhaustive oracle equivalence -------------------------------------

namespace {

struct ShardResult {
    std::uint64_t passed = 0;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> failures;
};

ShardResult run_shard(std::uint64_t state_begin, std::uint64_t state_end,
                      const GeneratorPolynomial& poly, const BitConvention& conv,
                      const CompiledNetwork& net) {
    ShardResult result;
    for (std::uint64_t state = state_begin; state < state_end; ++state) {
        for (std::uint32_t data = 0; data < 256; ++data) {
            std::uint64_t serial = state;
            const auto byte = static_cast<std::uint8_t>(data);
            if (conv.data_bit_order == DataBitOrder::MsbFirst) {
                for (int k = 7; k >= 0; --k)
                    serial = serial_shift_bits(serial, poly, (byte >> k) & 1, conv);
            } else {
                for (int k = 0; k < 8; ++k)
                    serial = serial_shift_bits(serial, poly, (byte >> k) & 1, conv);
            }
            if (net.apply_byte(state, byte) == serial) {
                ++result.passed;
            } else if (result.failures.size() < 8) {
                result.failures.emplace_back(state, data);
            }
        }
    }
    return result;
}

} // namespace

ExhaustiveResult exhaustive_equivalence_check(const GeneratorPolynomial& poly,
                                              const BitConvention& conv, int shards) {
    const CompiledNetwork net = compile_network(derive_network(poly, 8, conv));
    const std::uint64_t states = 1ull << poly.width;
    if (shards <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        shards = hw ? static_cast<int>(hw) : 1;
    }
    shards = static_cast<int>(std::min<std::uint64_t>(shards, states));

    std::vector<std::future<ShardResult>> futures;
    const std::uint64_t chunk = states / shards;
    for (int s = 0; s < shards; ++s) {
        const std::uint64_t begin = chunk * s;
        const std::uint64_t end = (s + 1 == shards) ? states : chunk * (s + 1);
        futures.push_back(std::async(std::launch::async, run_shard, begin, end, poly, conv, net));
    }

    ExhaustiveResult result;
    result.cases_total = states * 256;
    for (auto& f : futures) { // in-order merge keeps the report deterministic
        ShardResult shard = f.get();
        result.cases_passed += shard.passed;
        for (const auto& failure : shard.failures)
            if (result.first_failures.size() < 8) result.first_failures.push_back(failure);
    }
    return result;
}

} // namespace morphocrc::gf2
