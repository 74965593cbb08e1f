#include "morphocrc/perf/report.hpp"

#include <nlohmann/json.hpp>

namespace morphocrc::perf {

using nlohmann::json;

std::string cell_kind_name(CellKind kind) {
    switch (kind) {
        case CellKind::Cycles: return "cycles";
        case CellKind::Speedup: return "speedup";
        case CellKind::TimeMicros: return "time-us";
        case CellKind::BitsPerCycle: return "bits-per-cycle";
        case CellKind::Mbps: return "mbps";
        case CellKind::CyclesPerBit: return "cycles-per-bit";
    }
    return "?";
}

std::string cell_status_name(CellStatus status) {
    switch (status) {
        case CellStatus::Exact: return "exact";
        case CellStatus::Rounding: return "rounding";
        case CellStatus::Off: return "off";
    }
    return "?";
}

namespace {

CellStatus classify(CellKind kind, const Rational& recomputed, const ReferenceCell& printed,
                    double rate_tolerance_pct, double speedup_tolerance) {
    if (recomputed.to_decimal_string(printed.decimals()) == printed.printed)
        return CellStatus::Exact;
    const Rational ref = printed.value();
    if (kind == CellKind::Cycles) return CellStatus::Off; // constants must agree exactly
    if (kind == CellKind::Speedup) {
        const double delta = (recomputed - ref).abs().to_double();
        return delta <= speedup_tolerance ? CellStatus::Rounding : CellStatus::Off;
    }
    const double rel = (recomputed - ref).abs().to_double() / ref.to_double();
    return rel * 100.0 <= rate_tolerance_pct ? CellStatus::Rounding : CellStatus::Off;
}

CellEvaluation make_cell(const std::string& algorithm, const std::string& system, CellKind kind,
                         const Rational& recomputed, const ReferenceCell& printed,
                         const std::string& provenance, double rate_tolerance_pct,
                         double speedup_tolerance) {
    CellEvaluation cell;
    cell.algorithm = algorithm;
    cell.system = system;
    cell.kind = kind;
    cell.recomputed = recomputed;
    cell.recomputed_text = recomputed.to_decimal_string(printed.decimals());
    cell.printed = printed.printed;
    cell.status = classify(kind, recomputed, printed, rate_tolerance_pct, speedup_tolerance);
    cell.provenance = provenance + ":" + cell_kind_name(kind);
    return cell;
}

std::int64_t measured_for(const std::string& algo_key, MeasuredCycles measured) {
    return algo_key.rfind("ccitt", 0) == 0 ? measured.ccitt : measured.crc16;
}

} // namespace

const CellEvaluation* ReportEvaluation::find(const std::string& algo_key,
                                             const std::string& system, CellKind kind) const {
    for (const auto& cell : cells)
        if (cell.algorithm == algo_key && cell.system == system && cell.kind == kind) return &cell;
    return nullptr;
}

ReportEvaluation evaluate_reference(const ReferenceDataset& dataset, MeasuredCycles measured,
                                    double rate_tolerance_pct, double speedup_tolerance) {
    ReportEvaluation eval;
    for (const auto& row : dataset.intel_rows) {
        const bool is_m1 = row.system == "M1";
        const std::int64_t cycles = is_m1 ? measured_for(row.algo_key, measured) : row.cycles;

        eval.cells.push_back(make_cell(row.algo_key, row.system, CellKind::Cycles, Rational(cycles),
                                       ReferenceCell{std::to_string(row.cycles)}, row.provenance,
                                       rate_tolerance_pct, speedup_tolerance));
        if (row.speedup) {
            const Rational s = speedup(measured_for(row.algo_key, measured), cycles);
            eval.cells.push_back(make_cell(row.algo_key, row.system, CellKind::Speedup, s,
                                           *row.speedup, row.provenance, rate_tolerance_pct,
                                           speedup_tolerance));
        }
        const MetricsRow metrics = compute_metrics(
            {row.system, row.frequency_mhz * 1'000'000, cycles, row.bits});
        eval.cells.push_back(make_cell(row.algo_key, row.system, CellKind::TimeMicros,
                                       metrics.time_us, row.time_us, row.provenance,
                                       rate_tolerance_pct, speedup_tolerance));
        eval.cells.push_back(make_cell(row.algo_key, row.system, CellKind::BitsPerCycle,
                                       metrics.bits_per_cycle, row.bits_per_cycle, row.provenance,
                                       rate_tolerance_pct, speedup_tolerance));
        eval.cells.push_back(make_cell(row.algo_key, row.system, CellKind::Mbps, metrics.mbps,
                                       row.mbps, row.provenance, rate_tolerance_pct,
                                       speedup_tolerance));
        eval.cells.push_back(make_cell(row.algo_key, row.system, CellKind::CyclesPerBit,
                                       metrics.cycles_per_bit, row.cycles_per_bit, row.provenance,
                                       rate_tolerance_pct, speedup_tolerance));
    }
    for (const auto& row : dataset.rc1000_rows) {
        const Rational s = speedup(row.rc1000_cycles, measured_for(row.algo_key, measured));
        eval.cells.push_back(make_cell(row.algo_key, "RC-1000", CellKind::Speedup, s, row.speedup,
                                       row.provenance, rate_tolerance_pct, speedup_tolerance));
    }
    return eval;
}

namespace {

std::string md_cell(const ReportEvaluation& eval, const std::string& algo_key,
                    const std::string& system, CellKind kind) {
    const CellEvaluation* cell = eval.find(algo_key, system, kind);
    if (!cell) return "";
    if (cell->status == CellStatus::Exact) return cell->recomputed_text;
    return cell->recomputed_text + " (ref " + cell->printed + ", " +
           cell_status_name(cell->status) + ")";
}

std::string render_markdown(const ReferenceDataset& dataset, const ReportEvaluation& eval,
                            MeasuredCycles measured) {
    std::string out;
    out += "| Algorithm | System | N# of Cycles | Speedup | Time in Micro Sec. | Bits per Cycle "
           "| Mega Bits Per Second | Cycles per Bits |\n";
    out += "|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : dataset.intel_rows) {
        out += "| " + row.algorithm + " | " + row.system + " | ";
        out += md_cell(eval, row.algo_key, row.system, CellKind::Cycles) + " | ";
        out += md_cell(eval, row.algo_key, row.system, CellKind::Speedup) + " | ";
        out += md_cell(eval, row.algo_key, row.system, CellKind::TimeMicros) + " | ";
        out += md_cell(eval, row.algo_key, row.system, CellKind::BitsPerCycle) + " | ";
        out += md_cell(eval, row.algo_key, row.system, CellKind::Mbps) + " | ";
        out += md_cell(eval, row.algo_key, row.system, CellKind::CyclesPerBit) + " |\n";
    }
    out += "\n| Algorithm | System | N# of Cycles | Speedup |\n|---|---|---|---|\n";
    for (const auto& row : dataset.rc1000_rows) {
        const std::int64_t m1 = row.algo_key == "ccitt" ? measured.ccitt : measured.crc16;
        out += "| " + row.algorithm + " | M1 | " + std::to_string(m1) + " | |\n";
        out += "| " + row.algorithm + " | RC-1000 | " + std::to_string(row.rc1000_cycles) + " | " +
               md_cell(eval, row.algo_key, "RC-1000", CellKind::Speedup) + " |\n";
    }
    return out;
}

std::string render_csv(const ReportEvaluation& eval) {
    std::string out = "algorithm,system,metric,recomputed,reference,status,provenance\n";
    for (const auto& cell : eval.cells) {
        out += cell.algorithm + "," + cell.system + "," + cell_kind_name(cell.kind) + "," +
               cell.recomputed_text + "," + cell.printed + "," + cell_status_name(cell.status) +
               "," + cell.provenance + "\n";
    }
    return out;
}

std::string render_structured(const ReportEvaluation& eval) {
    json cells = json::array();
    for (const auto& cell : eval.cells) {
        cells.push_back({{"algorithm", cell.algorithm},
                         {"system", cell.system},
                         {"metric", cell_kind_name(cell.kind)},
                         {"recomputed", cell.recomputed_text},
                         {"recomputed_exact",
                          std::to_string(cell.recomputed.num()) + "/" +
                              std::to_string(cell.recomputed.den())},
                         {"reference", cell.printed},
                         {"status", cell_status_name(cell.status)},
                         {"provenance", cell.provenance}});
    }
    return json{{"cells", cells}}.dump(2) + "\n";
}

} // namespace

std::string render_report(const ReferenceDataset& dataset, MeasuredCycles measured,
                          ReportFormat format, double rate_tolerance_pct,
                          double speedup_tolerance) {
    const ReportEvaluation eval =
        evaluate_reference(dataset, measured, rate_tolerance_pct, speedup_tolerance);
    switch (format) {
        case ReportFormat::Markdown: return render_markdown(dataset, eval, measured);
        case ReportFormat::Csv: return render_csv(eval);
        case ReportFormat::Structured: return render_structured(eval);
    }
    throw std::invalid_argument("unknown report format");
}

} // namespace morphocrc::perf
