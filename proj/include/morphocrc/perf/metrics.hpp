#pragma once

#include <cstdint>
#include <string>

#include "morphocrc/perf/rational.hpp"

namespace morphocrc::perf {

struct SystemProfile {
    std::string name;
    std::int64_t frequency_hz = 0;
    std::int64_t cycles = 0;
    std::int64_t bits_processed = 0;
};

// Derived throughput figures. bits_per_cycle * cycles_per_bit == 1 exactly.
struct MetricsRow {
    Rational bits_per_cycle;
    Rational mbps;
    Rational cycles_per_bit;
    Rational time_us;
};

// Exact rational recomputation; throws on non-positive profile fields.
MetricsRow compute_metrics(const SystemProfile& profile);

// other_cycles / baseline_cycles, the ratio between the systems' cycle
// counts. Throws on non-positive arguments.
Rational speedup(std::int64_t baseline_cycles, std::int64_t other_cycles);

} // namespace morphocrc::perf
