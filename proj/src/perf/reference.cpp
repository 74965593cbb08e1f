#include "morphocrc/perf/reference.hpp"

#include <stdexcept>

namespace morphocrc::perf {

int ReferenceCell::decimals() const {
    const auto dot = printed.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

Rational ReferenceCell::value() const {
    const auto dot = printed.find('.');
    const std::string integral = dot == std::string::npos ? printed : printed.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : printed.substr(dot + 1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t whole = integral.empty() ? 0 : std::stoll(integral);
    const std::int64_t part = frac.empty() ? 0 : std::stoll(frac);
    return {whole * scale + part, scale};
}

namespace {

constexpr const char* kCcitt1 = "CRC-CCITT-16 parallel algorithm for one channel";
constexpr const char* kCrc161 = "CRC-16 parallel algorithm for one channel";
constexpr const char* kCcitt8 = "CRC-CCITT-16 parallel algorithm for 8-channel";
constexpr const char* kCrc168 = "CRC-16 parallel algorithms for 8-channels";

ReferenceDataset build_standard() {
    ReferenceDataset d;
    using Cell = ReferenceCell;
    // Constants (cycles, MHz, bits) plus the printed derived cells. M1 cycle
    // counts here are the printed reference; recomputation uses measured ones.
    d.intel_rows = {
        {kCcitt1, "ccitt-1ch", "M1", 30, 100, 8, std::nullopt, Cell{"0.3"}, Cell{"0.267"},
         Cell{"26.67"}, Cell{"3.75"}, "intel-comparison:ccitt-1ch:m1"},
        {kCcitt1, "ccitt-1ch", "Pentium", 128, 133, 8, Cell{"4.26"}, Cell{"0.96"}, Cell{"0.0625"},
         Cell{"8.3"}, Cell{"16"}, "intel-comparison:ccitt-1ch:pentium"},
        {kCcitt1, "ccitt-1ch", "80486", 142, 100, 8, Cell{"4.73"}, Cell{"1.42"}, Cell{"0.056"},
         Cell{"5.6"}, Cell{"17.86"}, "intel-comparison:ccitt-1ch:80486"},
        {kCrc161, "crc16-1ch", "M1", 26, 100, 8, std::nullopt, Cell{"0.26"}, Cell{"0.307"},
         Cell{"30.76"}, Cell{"3.25"}, "intel-comparison:crc16-1ch:m1"},
        {kCrc161, "crc16-1ch", "Pentium", 162, 133, 8, Cell{"6.23"}, Cell{"1.22"}, Cell{"0.049"},
         Cell{"6.56"}, Cell{"20.25"}, "intel-comparison:crc16-1ch:pentium"},
        {kCrc161, "crc16-1ch", "80486", 190, 100, 8, Cell{"7.3"}, Cell{"1.9"}, Cell{"0.042"},
         Cell{"4.2"}, Cell{"23.75"}, "intel-comparison:crc16-1ch:80486"},
        {kCcitt8, "ccitt-8ch", "M1", 30, 100, 64, std::nullopt, Cell{"0.3"}, Cell{"2.13"},
         Cell{"213.13"}, Cell{"0.46"}, "intel-comparison:ccitt-8ch:m1"},
        {kCcitt8, "ccitt-8ch", "Pentium", 1024, 133, 64, Cell{"34.13"}, Cell{"7.69"},
         Cell{"0.0625"}, Cell{"8.32"}, Cell{"16"}, "intel-comparison:ccitt-8ch:pentium"},
        {kCcitt8, "ccitt-8ch", "80486", 1136, 100, 64, Cell{"37.86"}, Cell{"11.36"}, Cell{"0.056"},
         Cell{"5.63"}, Cell{"17.75"}, "intel-comparison:ccitt-8ch:80486"},
        {kCrc168, "crc16-8ch", "M1", 26, 100, 64, std::nullopt, Cell{"0.26"}, Cell{"2.46"},
         Cell{"246.15"}, Cell{"0.41"}, "intel-comparison:crc16-8ch:m1"},
        {kCrc168, "crc16-8ch", "Pentium", 1296, 133, 64, Cell{"49.84"}, Cell{"9.74"}, Cell{"0.05"},
         Cell{"6.57"}, Cell{"20.25"}, "intel-comparison:crc16-8ch:pentium"},
        {kCrc168, "crc16-8ch", "80486", 1520, 100, 64, Cell{"58.46"}, Cell{"15.2"}, Cell{"0.042"},
         Cell{"4.21"}, Cell{"23.75"}, "intel-comparison:crc16-8ch:80486"},
    };
    d.rc1000_rows = {
        {"CRC-CCITT-16 parallel algorithm", "ccitt", 8, Cell{"3.75"}, "rc1000-comparison:ccitt"},
        {"CRC-16 parallel algorithm", "crc16", 17, Cell{"1.53"}, "rc1000-comparison:crc16"},
    };
    return d;
}

} // namespace

const ReferenceDataset& ReferenceDataset::standard() {
    static const ReferenceDataset dataset = build_standard();
    return dataset;
}

ReferenceDataset ReferenceDataset::empty() { return {}; }

} // namespace morphocrc::perf
