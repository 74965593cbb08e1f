#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morphocrc/perf/rational.hpp"

namespace morphocrc::perf {

// One printed cell of the reference comparison tables: the literal text as
// published plus its decimal places, so recomputed values can be compared at
// the same precision.
struct ReferenceCell {
    std::string printed;
    int decimals() const;
    Rational value() const;
};

// Constant row of the reference dataset. For M1 rows `cycles` is only the
// printed reference value; recomputation always uses simulator-measured
// cycles.
struct ReferenceRow {
    std::string algorithm; // e.g. "CRC-CCITT-16 parallel algorithm for one channel"
    std::string algo_key;  // "ccitt-1ch", "ccitt-8ch", "crc16-1ch", "crc16-8ch"
    std::string system;    // "M1", "Pentium", "80486"
    std::int64_t cycles = 0;
    std::int64_t frequency_mhz = 0;
    std::int64_t bits = 0;
    std::optional<ReferenceCell> speedup; // vs the M1 row of the same algorithm
    ReferenceCell time_us;
    ReferenceCell bits_per_cycle;
    ReferenceCell mbps;
    ReferenceCell cycles_per_bit;
    std::string provenance; // table cell the constants come from
};

struct Rc1000Row {
    std::string algorithm;
    std::string algo_key; // "ccitt", "crc16"
    std::int64_t rc1000_cycles = 0;
    ReferenceCell speedup; // M1 cycles / RC-1000 cycles
    std::string provenance;
};

struct ReferenceDataset {
    std::vector<ReferenceRow> intel_rows; // the comparison-with-Intel table
    std::vector<Rc1000Row> rc1000_rows;   // the RC-1000 comparison table

    static const ReferenceDataset& standard();
    static ReferenceDataset empty();
};

} // namespace morphocrc::perf
