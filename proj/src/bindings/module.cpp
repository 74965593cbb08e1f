#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "morphocrc/gf2/feedforward.hpp"
#include "morphocrc/gf2/network.hpp"
#include "morphocrc/perf/report.hpp"
#include "morphocrc/sim/machine.hpp"

namespace py = pybind11;
using namespace morphocrc;

namespace {

gf2::CrcEngine engine_from_string(const std::string& engine) {
    if (engine == "serial") return gf2::CrcEngine::Serial;
    if (engine == "parallel") return gf2::CrcEngine::Parallel;
    throw std::invalid_argument("engine must be 'serial' or 'parallel'");
}

const sim::ProgramBundle& bundle_from_name(const std::string& name) {
    if (name == "ccitt16") return sim::ProgramBundle::ccitt16();
    if (name == "crc16") return sim::ProgramBundle::crc16();
    throw std::invalid_argument("unknown program: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Byte-parallel CRC equation networks, an 8x8 reconfigurable-array simulator, "
              "and throughput report tooling";

    m.def(
        "crc",
        [](py::bytes message, const std::string& poly_spec, std::uint64_t init,
           const std::string& engine) {
            const auto poly = gf2::GeneratorPolynomial::parse(poly_spec);
            const auto conv = gf2::BitConvention::canonical();
            const std::string data = message;
            const std::vector<std::uint8_t> bytes(data.begin(), data.end());
            return gf2::crc_compute(bytes, poly, gf2::LfsrState::from_value(init, poly.width, conv),
                                    engine_from_string(engine), conv)
                .to_value(conv);
        },
        py::arg("message"), py::arg("poly") = "ccitt", py::arg("init") = 0,
        py::arg("engine") = "serial",
        "CRC remainder of a byte string, as an integer");

    m.def(
        "derive_listing",
        [](const std::string& poly_spec, int steps, bool structured) {
            const auto net = gf2::derive_network(gf2::GeneratorPolynomial::parse(poly_spec), steps,
                                                 gf2::BitConvention::canonical());
            return structured ? net.to_json() : net.to_listing();
        },
        py::arg("poly") = "ccitt", py::arg("steps") = 8, py::arg("structured") = false,
        "Equation listing for the composed serial shifts");

    m.def(
        "apply_network",
        [](const std::string& poly_spec, std::uint64_t state, int data_byte) {
            const auto poly = gf2::GeneratorPolynomial::parse(poly_spec);
            const auto conv = gf2::BitConvention::canonical();
            const auto net = gf2::compile_network(gf2::derive_network(poly, 8, conv));
            const auto in = gf2::LfsrState::from_value(state, poly.width, conv);
            const auto out =
                net.apply_byte(in.to_bits(), static_cast<std::uint8_t>(data_byte));
            return gf2::LfsrState::from_bits(out, poly.width).to_value(conv);
        },
        py::arg("poly"), py::arg("state"), py::arg("data_byte"),
        "One byte-step of the update network");

    m.def(
        "feedforward_encode",
        [](const std::vector<std::uint8_t>& input, const std::string& taps) {
            return gf2::feedforward_encode(input, gf2::FeedForwardCircuit::from_bit_string(taps));
        },
        py::arg("input"), py::arg("taps"),
        "Feed-forward coding of a bit sequence; taps are D^0, D^1, ... coefficients");

    m.def(
        "simulate",
        [](const std::string& program, const std::vector<int>& data,
           const std::vector<int>& init) {
            const auto& bundle = bundle_from_name(program);
            if (data.empty() || data.size() != init.size() || data.size() > 8)
                throw std::invalid_argument("need 1..8 channels with one data byte and one "
                                            "init value each");
            std::vector<sim::ChannelInput> channels;
            for (std::size_t k = 0; k < data.size(); ++k)
                channels.push_back({static_cast<std::uint8_t>(data[k]),
                                    static_cast<std::uint16_t>(init[k])});
            const auto result = sim::run(bundle, channels);
            py::dict out;
            out["cycles"] = result.cycles;
            out["registers"] = result.registers;
            return out;
        },
        py::arg("program"), py::arg("data"), py::arg("init"),
        "Run a bundled program; returns cycles and per-channel register values");

    m.def(
        "metrics",
        [](std::int64_t cycles, std::int64_t bits, std::int64_t frequency_hz) {
            const auto row = perf::compute_metrics({"", frequency_hz, cycles, bits});
            py::dict out;
            out["bits_per_cycle"] = row.bits_per_cycle.to_double();
            out["mbps"] = row.mbps.to_double();
            out["cycles_per_bit"] = row.cycles_per_bit.to_double();
            out["time_us"] = row.time_us.to_double();
            return out;
        },
        py::arg("cycles"), py::arg("bits"), py::arg("frequency_hz"));

    m.def(
        "speedup",
        [](std::int64_t baseline_cycles, std::int64_t other_cycles) {
            return perf::speedup(baseline_cycles, other_cycles).to_double();
        },
        py::arg("baseline_cycles"), py::arg("other_cycles"));

    m.def(
        "bench_report",
        [](const std::string& format) {
            const auto fmt = format == "csv"          ? perf::ReportFormat::Csv
                             : format == "structured" ? perf::ReportFormat::Structured
                                                      : perf::ReportFormat::Markdown;
            const std::vector<sim::ChannelInput> input = {{0x00, 0x0000}};
            const perf::MeasuredCycles measured = {
                static_cast<std::int64_t>(sim::run(sim::ProgramBundle::ccitt16(), input).cycles),
                static_cast<std::int64_t>(sim::run(sim::ProgramBundle::crc16(), input).cycles)};
            return perf::render_report(perf::ReferenceDataset::standard(), measured, fmt);
        },
        py::arg("format") = "md",
        "Comparison tables recomputed from measured cycle counts");
}
