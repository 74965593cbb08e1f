#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morphocrc/perf/metrics.hpp"
#include "morphocrc/perf/reference.hpp"

namespace morphocrc::perf {

enum class ReportFormat { Markdown, Csv, Structured };

// Cycle counts measured by the simulator; never hard-coded into the report.
struct MeasuredCycles {
    std::int64_t ccitt = 0;
    std::int64_t crc16 = 0;
};

enum class CellKind { Cycles, Speedup, TimeMicros, BitsPerCycle, Mbps, CyclesPerBit };

enum class CellStatus {
    Exact,    // recomputation equals the printed text at its own precision
    Rounding, // differs in printed digits but within tolerance (informational)
    Off,      // beyond tolerance
};

struct CellEvaluation {
    std::string algorithm;
    std::string system;
    CellKind kind = CellKind::Mbps;
    Rational recomputed;
    std::string recomputed_text;
    std::string printed; // reference text; empty when the table has no such cell
    CellStatus status = CellStatus::Exact;
    std::string provenance;
};

struct ReportEvaluation {
    std::vector<CellEvaluation> cells;

    const CellEvaluation* find(const std::string& algo_key, const std::string& system,
                               CellKind kind) const;
};

// Recomputes every derived cell of the reference dataset from its constants
// (plus the measured M1 cycles) and classifies it against the printed text.
// Speedups compare within `speedup_tolerance` absolutely, rate cells within
// `rate_tolerance_pct` relatively; matching at the printed precision always
// counts as a match.
ReportEvaluation evaluate_reference(const ReferenceDataset& dataset, MeasuredCycles measured,
                                    double rate_tolerance_pct = 0.5,
                                    double speedup_tolerance = 0.01);

// Rendered comparison document (column order of the reference table for
// markdown; one row per cell with provenance for CSV; JSON for structured).
std::string render_report(const ReferenceDataset& dataset, MeasuredCycles measured,
                          ReportFormat format, double rate_tolerance_pct = 0.5,
                          double speedup_tolerance = 0.01);

std::string cell_kind_name(CellKind kind);
std::string cell_status_name(CellStatus status);

} // namespace morphocrc::perf
