#include <doctest.h>

#include "morphocrc/perf/report.hpp"

using namespace morphocrc::perf;

TEST_CASE("rational arithmetic and decimal rendering") {
    CHECK(Rational(8, 30).to_decimal_string(3) == "0.267");
    CHECK(Rational(30, 8).to_decimal_string(2) == "3.75");
    CHECK(Rational(8, 26).to_decimal_string(3) == "0.308");
    CHECK(Rational(1, 3).to_decimal_string(0) == "0");
    CHECK(Rational(5, 2).to_decimal_string(0) == "3"); // half away from zero
    CHECK((Rational(1, 3) + Rational(2, 3)) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("throughput metrics of the two byte-step programs") {
    const auto ccitt = compute_metrics({"M1", 100'000'000, 30, 8});
    CHECK(ccitt.bits_per_cycle.to_decimal_string(3) == "0.267");
    CHECK(ccitt.cycles_per_bit.to_decimal_string(2) == "3.75");
    CHECK(ccitt.time_us.to_decimal_string(1) == "0.3");
    CHECK(ccitt.mbps.to_decimal_string(2) == "26.67");

    const auto crc16 = compute_metrics({"M1", 100'000'000, 26, 8});
    CHECK(crc16.cycles_per_bit.to_decimal_string(2) == "3.25");
    CHECK(crc16.mbps.to_decimal_string(2) == "30.77"); // reference prints 30.76
    CHECK((crc16.mbps - Rational(3076, 100)).abs() < Rational(1, 50));

    // unit case: N cycles, N bits, 1 MHz
    const auto unit = compute_metrics({"unit", 1'000'000, 7, 7});
    CHECK(unit.bits_per_cycle == Rational(1));
    CHECK(unit.mbps == Rational(1));

    // consistency: bits/cycle x cycles/bit == 1 exactly
    for (const auto& row : {ccitt, crc16}) CHECK(row.bits_per_cycle * row.cycles_per_bit == Rational(1));

    CHECK_THROWS_AS(compute_metrics({"bad", 0, 30, 8}), std::invalid_argument);
}

TEST_CASE("speedup is the cycle-count ratio") {
    CHECK(speedup(30, 128).to_decimal_string(3) == "4.267"); // reference prints 4.26
    CHECK((speedup(30, 128) - Rational(426, 100)).abs() < Rational(1, 100));
    CHECK(speedup(30, 30) == Rational(1));
    CHECK(speedup(26, 1520).to_decimal_string(2) == "58.46");
    CHECK(speedup(8, 30).to_decimal_string(2) == "3.75");
    CHECK(speedup(17, 26).to_decimal_string(2) == "1.53");
    CHECK_THROWS_AS(speedup(0, 1), std::invalid_argument);
}

TEST_CASE("every gated reference cell is reproduced within tolerance") {
    const auto eval = evaluate_reference(ReferenceDataset::standard(), {30, 26});
    for (const auto& cell : eval.cells) {
        const bool gated = cell.kind == CellKind::Mbps || cell.kind == CellKind::BitsPerCycle ||
                           cell.kind == CellKind::Speedup || cell.kind == CellKind::Cycles;
        if (gated) {
            INFO(cell.provenance, " rec=", cell.recomputed_text, " ref=", cell.printed);
            CHECK(cell.status != CellStatus::Off);
        }
    }
    // the known flagged-rounding cell
    const auto* mbps8 = eval.find("ccitt-8ch", "M1", CellKind::Mbps);
    REQUIRE(mbps8 != nullptr);
    CHECK(mbps8->status == CellStatus::Rounding);
    CHECK(mbps8->recomputed_text == "213.33");
    CHECK(mbps8->printed == "213.13");
    // the compounded-rounding cells stay flagged rather than silently chosen
    const auto* cpb = eval.find("ccitt-1ch", "80486", CellKind::CyclesPerBit);
    REQUIRE(cpb != nullptr);
    CHECK(cpb->status == CellStatus::Off);
    CHECK(cpb->recomputed_text == "17.75");
}

TEST_CASE("all eight intel speedups and both rc-1000 speedups") {
    const auto eval = evaluate_reference(ReferenceDataset::standard(), {30, 26});
    const std::pair<const char*, const char*> expected[] = {
        {"ccitt-1ch", "4.26"}, {"crc16-1ch", "6.23"}, {"ccitt-8ch", "34.13"},
        {"crc16-8ch", "49.84"},
    };
    for (const auto& [algo, printed] : expected) {
        const auto* pentium = eval.find(algo, "Pentium", CellKind::Speedup);
        REQUIRE(pentium != nullptr);
        CHECK(pentium->printed == printed);
        CHECK(pentium->status != CellStatus::Off);
    }
    const auto* rc_ccitt = eval.find("ccitt", "RC-1000", CellKind::Speedup);
    REQUIRE(rc_ccitt != nullptr);
    CHECK(rc_ccitt->recomputed_text == "3.75");
    CHECK(rc_ccitt->status == CellStatus::Exact);
    const auto* rc_crc16 = eval.find("crc16", "RC-1000", CellKind::Speedup);
    REQUIRE(rc_crc16 != nullptr);
    CHECK(rc_crc16->recomputed_text == "1.53");
    CHECK(rc_crc16->status == CellStatus::Exact);
}

TEST_CASE("measured cycles flow into the report") {
    // a wrong measured cycle count must surface as an off cells
    const auto eval = evaluate_reference(ReferenceDataset::standard(), {31, 26});
    const auto* cycles = eval.find("ccitt-1ch", "M1", CellKind::Cycles);
    REQUIRE(cycles != nullptr);
    CHECK(cycles->status == CellStatus::Off);
    const auto* speedup_cell = eval.find("ccitt-1ch", "Pentium", CellKind::Speedup);
    REQUIRE(speedup_cell != nullptr);
    CHECK(speedup_cell->recomputed_text != "4.27");
}

TEST_CASE("report formats") {
    const auto& dataset = ReferenceDataset::standard();
    const auto md = render_report(dataset, {30, 26}, ReportFormat::Markdown);
    CHECK(md.find("| Algorithm | System | N# of Cycles | Speedup | Time in Micro Sec. | Bits per "
                  "Cycle | Mega Bits Per Second | Cycles per Bits |") == 0);
    CHECK(md.find("| RC-1000 | 8 | 3.75 |") != std::string::npos);

    const auto csv = render_report(dataset, {30, 26}, ReportFormat::Csv);
    CHECK(csv.find("algorithm,system,metric,recomputed,reference,status,provenance") == 0);
    CHECK(csv.find("ccitt-1ch,Pentium,speedup,4.27,4.26,rounding,"
                   "intel-comparison:ccitt-1ch:pentium:speedup") != std::string::npos);

    const auto structured = render_report(dataset, {30, 26}, ReportFormat::Structured);
    CHECK(structured.find("\"provenance\"") != std::string::npos);

    // an empty dataset still renders headers
    const auto empty = render_report(ReferenceDataset::empty(), {30, 26}, ReportFormat::Markdown);
    CHECK(empty.find("| Algorithm |") == 0);
    const auto empty_csv = render_report(ReferenceDataset::empty(), {30, 26}, ReportFormat::Csv);
    CHECK(empty_csv == "algorithm,system,metric,recomputed,reference,status,provenance\n");
}
