#include "morphocrc/perf/metrics.hpp"

namespace morphocrc::perf {

std::string Rational::to_decimal_string(int decimals) const {
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    const bool negative = num_ < 0;
    const std::int64_t n = negative ? -num_ : num_;
    // round(n * scale / den) half away from zero
    const std::int64_t scaled = (2 * n * scale + den_) / (2 * den_);
    std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(scaled / scale);
    if (decimals > 0) {
        std::string digits = std::to_string(scaled % scale);
        digits.insert(0, static_cast<std::size_t>(decimals) - digits.size(), '0');
        out += "." + digits;
    }
    return out;
}

MetricsRow compute_metrics(const SystemProfile& profile) {
    if (profile.frequency_hz <= 0 || profile.cycles <= 0 || profile.bits_processed <= 0)
        throw std::invalid_argument("system profile fields must be positive");
    MetricsRow row;
    row.bits_per_cycle = Rational(profile.bits_processed, profile.cycles);
    row.cycles_per_bit = Rational(profile.cycles, profile.bits_processed);
    row.mbps = Rational(profile.bits_processed * profile.frequency_hz,
                        profile.cycles * 1'000'000);
    row.time_us = Rational(profile.cycles * 1'000'000, profile.frequency_hz);
    return row;
}

Rational speedup(std::int64_t baseline_cycles, std::int64_t other_cycles) {
    if (baseline_cycles <= 0 || other_cycles <= 0)
        throw std::invalid_argument("cycle counts must be positive");
    return {other_cycles, baseline_cycles};
}

} // namespace morphocrc::perf
