#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morphocrc/gf2/feedforward.hpp"
#include "morphocrc/gf2/network.hpp"
#include "morphocrc/perf/report.hpp"
#include "morphocrc/sim/machine.hpp"

#ifndef MORPHOCRC_DATA_DIR
#define MORPHOCRC_DATA_DIR ""
#endif

namespace {

using namespace morphocrc;

std::vector<std::uint8_t> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        const std::string s = ss.str();
        return {s.begin(), s.end()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    const std::string s = ss.str();
    return {s.begin(), s.end()};
}

std::uint16_t parse_init(const std::string& text) {
    return static_cast<std::uint16_t>(std::stoul(text, nullptr, 16));
}

std::string data_dir() {
    if (const char* env = std::getenv("MORPHOCRC_DATA_DIR")) return env;
    return MORPHOCRC_DATA_DIR;
}

sim::ProgramBundle resolve_program(const std::string& name, const std::string& meta) {
    if (name == "ccitt16") return sim::ProgramBundle::ccitt16();
    if (name == "crc16") return sim::ProgramBundle::crc16();
    std::string meta_path = meta;
    if (meta_path.empty()) {
        meta_path = name;
        const auto dot = meta_path.rfind(".masm");
        if (dot != std::string::npos) meta_path.resize(dot);
        meta_path += ".meta.json";
    }
    return sim::ProgramBundle::load(name, meta_path);
}

gf2::ReferenceListing load_reference(const std::string& name) {
    const std::string path = data_dir() + "/reference/" + name + ".json";
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open reference listing " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    return gf2::ReferenceListing::from_json(ss.str());
}

std::vector<std::uint8_t> parse_byte_list(const std::string& text) {
    std::vector<std::uint8_t> bytes;
    std::istringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        bytes.push_back(static_cast<std::uint8_t>(std::stoul(token, nullptr, 16)));
    return bytes;
}

perf::MeasuredCycles measure_cycles() {
    const std::vector<sim::ChannelInput> input = {{0x00, 0x0000}};
    return {static_cast<std::int64_t>(sim::run(sim::ProgramBundle::ccitt16(), input).cycles),
            static_cast<std::int64_t>(sim::run(sim::ProgramBundle::crc16(), input).cycles)};
}

int run_properties(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto conv = gf2::BitConvention::canonical();
    const auto poly = gf2::GeneratorPolynomial::ccitt();
    const auto net = gf2::derive_network(poly, 8, conv);
    const auto compiled = gf2::compile_network(net);
    int failures = 0;

    // Linearity over 1000 random (state, data) pairs.
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t s1 = rng() & 0xFFFF, s2 = rng() & 0xFFFF;
        const std::uint64_t d1 = rng() & 0xFF, d2 = rng() & 0xFF;
        const auto lhs = compiled.apply_bits(s1 ^ s2, d1 ^ d2);
        const auto rhs = compiled.apply_bits(s1, d1) ^ compiled.apply_bits(s2, d2);
        if (lhs != rhs) ++failures;
    }
    std::cout << "linearity: " << (1000 - failures) << "/1000 cases pass\n";

    // Single-bit and short-burst errors always change the remainder.
    int burst_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<std::uint8_t> message(1 + rng() % 64);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng());
        const auto clean =
            gf2::crc_compute(message, poly, gf2::LfsrState(16), gf2::CrcEngine::Serial, conv);
        const int total_bits = static_cast<int>(message.size()) * 8;
        const int burst_len = 1 + static_cast<int>(rng() % 16);
        const int start = static_cast<int>(rng() % std::max(1, total_bits - burst_len));
        auto corrupted = message;
        // a burst is nonzero in its first and last bit
        corrupted[start / 8] ^= static_cast<std::uint8_t>(1u << (7 - start % 8));
        const int last = start + burst_len - 1;
        if (burst_len > 1) corrupted[last / 8] ^= static_cast<std::uint8_t>(1u << (7 - last % 8));
        const auto dirty =
            gf2::crc_compute(corrupted, poly, gf2::LfsrState(16), gf2::CrcEngine::Serial, conv);
        if (clean == dirty) ++burst_failures;
    }
    std::cout << "burst-error detection: " << (1000 - burst_failures) << "/1000 cases pass\n";

    // Serial and parallel engines agree on random messages.
    int engine_failures = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint8_t> message(rng() % 256);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng());
        const gf2::LfsrState init = gf2::LfsrState::from_bits(rng() & 0xFFFF, 16);
        const auto a = gf2::crc_compute(message, poly, init, gf2::CrcEngine::Serial, conv);
        const auto b = gf2::crc_compute(message, poly, init, gf2::CrcEngine::Parallel, conv);
        if (!(a == b)) ++engine_failures;
    }
    std::cout << "engine cross-check: " << (200 - engine_failures) << "/200 cases pass\n";

    return failures + burst_failures + engine_failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Byte-parallel CRC equation networks, an 8x8 array simulator, and the "
                 "accompanying throughput reports"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are accepted after the subcommand name

    std::string format = "text";
    std::uint64_t seed = 12345;
    double tolerance = 0.5;
    app.add_option("--format", format, "Output format: text, md, csv, structured")
        ->check(CLI::IsMember({"text", "md", "csv", "structured"}));
    app.add_option("--seed", seed, "Seed for randomized property runs");
    app.add_option("--tolerance", tolerance, "Rate tolerance in percent for bench comparisons");

    // crc
    auto* crc = app.add_subcommand("crc", "Compute a CRC remainder");
    std::string crc_poly, crc_init = "0", crc_engine = "serial", crc_input = "-";
    crc->add_option("--poly", crc_poly, "Generator polynomial spec")->required();
    crc->add_option("--init", crc_init, "Initial register value (hex)");
    crc->add_option("--engine", crc_engine, "serial or parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
    crc->add_option("input", crc_input, "Input file, - for standard input");

    // derive
    auto* derive = app.add_subcommand("derive", "Derive byte-step update equations");
    std::string derive_poly, derive_diff;
    int derive_steps = 8;
    derive->add_option("--poly", derive_poly, "Generator polynomial spec")->required();
    derive->add_option("--steps", derive_steps, "Number of shifts to compose");
    derive->add_option("--diff", derive_diff, "Reference listing to audit against")
        ->check(CLI::IsMember({"table2", "table3"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run a program on the array simulator");
    std::string sim_program, sim_meta, sim_data = "00", sim_init = "0";
    int sim_channels = 1;
    bool sim_trace = false, sim_grid = false, sim_fb = false;
    simulate->add_option("--program", sim_program, "ccitt16, crc16, or a listing path")->required();
    simulate->add_option("--meta", sim_meta, "Metadata path for a listing file");
    simulate->add_option("--data", sim_data, "Input byte per channel, comma-separated hex");
    simulate->add_option("--init", sim_init, "Initial registers per channel, comma-separated hex");
    simulate->add_option("--channels", sim_channels, "Channel count 1..8")
        ->check(CLI::Range(1, 8));
    simulate->add_flag("--trace", sim_trace, "Print a per-cycle trace");
    simulate->add_flag("--dump-grid", sim_grid, "Print the final cell output grid");
    simulate->add_flag("--dump-fb", sim_fb, "Print the written frame buffer bytes");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the oracle and property suites");
    std::string verify_exhaustive;
    bool verify_properties = false;
    int verify_shards = 0;
    verify->add_option("--exhaustive", verify_exhaustive,
                       "Exhaustive serial-vs-network check: ccitt, crc16, or all")
        ->check(CLI::IsMember({"ccitt", "crc16", "all"}));
    verify->add_flag("--properties", verify_properties, "Randomized property checks");
    verify->add_option("--shards", verify_shards, "Worker count for the exhaustive check");

    // bench
    auto* bench = app.add_subcommand("bench", "Reproduce the reference comparison tables");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(crc)) {
            const auto poly = gf2::GeneratorPolynomial::parse(crc_poly);
            const auto conv = gf2::BitConvention::canonical();
            const auto init = gf2::LfsrState::from_value(parse_init(crc_init), poly.width, conv);
            const auto engine =
                crc_engine == "serial" ? gf2::CrcEngine::Serial : gf2::CrcEngine::Parallel;
            const auto message = read_input(crc_input);
            std::cout << gf2::crc_compute(message, poly, init, engine, conv).to_hex(conv) << "\n";
        } else if (app.got_subcommand(derive)) {
            const auto poly = gf2::GeneratorPolynomial::parse(derive_poly);
            const auto net = gf2::derive_network(poly, derive_steps, gf2::BitConvention::canonical());
            if (!derive_diff.empty()) {
                const auto diff = gf2::diff_against_reference(net, load_reference(derive_diff));
                std::cout << (format == "structured" ? diff.to_json() : diff.to_text());
                return diff.all_match() ? 0 : 1;
            }
            std::cout << (format == "structured" ? net.to_json() : net.to_listing());
        } else if (app.got_subcommand(simulate)) {
            const auto bundle = resolve_program(sim_program, sim_meta);
            const auto data = parse_byte_list(sim_data);
            std::vector<std::uint16_t> inits;
            {
                std::istringstream ss(sim_init);
                std::string token;
                while (std::getline(ss, token, ',')) inits.push_back(parse_init(token));
            }
            std::vector<sim::ChannelInput> channels;
            for (int k = 0; k < sim_channels; ++k)
                channels.push_back({data[k % data.size()], inits[k % inits.size()]});
            if (sim_trace) std::cout << sim::trace_run(bundle, channels);
            const auto result = sim::run(bundle, channels);
            std::cout << "cycles: " << result.cycles << "\n";
            for (int k = 0; k < sim_channels; ++k) {
                const auto state = gf2::LfsrState::from_value(result.registers[k], 16,
                                                              gf2::BitConvention::canonical());
                std::cout << "channel " << k << ": "
                          << state.to_hex(gf2::BitConvention::canonical()) << "\n";
            }
            if (sim_grid) std::cout << sim::dump_array(result.state, bundle.name + " final");
            if (sim_fb) std::cout << sim::dump_frame_buffer(result.state, &bundle);
        } else if (app.got_subcommand(verify)) {
            if (verify_exhaustive.empty() && !verify_properties) {
                std::cerr << "verify: nothing to do; pass --exhaustive or --properties\n";
                return 2;
            }
            int rc = 0;
            std::vector<gf2::GeneratorPolynomial> polys;
            if (verify_exhaustive == "ccitt" || verify_exhaustive == "all")
                polys.push_back(gf2::GeneratorPolynomial::ccitt());
            if (verify_exhaustive == "crc16" || verify_exhaustive == "all")
                polys.push_back(gf2::GeneratorPolynomial::crc16());
            for (const auto& poly : polys) {
                const auto result = gf2::exhaustive_equivalence_check(
                    poly, gf2::BitConvention::canonical(), verify_shards);
                std::cout << poly.name << ": " << result.cases_passed << "/" << result.cases_total
                          << " cases pass\n";
                if (!result.all_passed()) rc = 1;
            }
            if (verify_properties) rc |= run_properties(seed);
            return rc;
        } else if (app.got_subcommand(bench)) {
            const auto fmt = format == "csv"        ? perf::ReportFormat::Csv
                             : format == "structured" ? perf::ReportFormat::Structured
                                                      : perf::ReportFormat::Markdown;
            std::cout << perf::render_report(perf::ReferenceDataset::standard(), measure_cycles(),
                                             fmt, tolerance);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
