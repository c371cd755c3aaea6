#pragma once

#include <cstdint>

namespace lsacran {

using Hertz = std::int64_t;       // frequency in Hz
using Bps = std::int64_t;         // data rate in bits per second
using MoneyMicro = std::int64_t;  // currency in exact micro-units
using TimeUs = std::int64_t;      // simulated time in microseconds

inline constexpr Hertz kMegaHertz = 1'000'000;
inline constexpr Bps kMbps = 1'000'000;
inline constexpr TimeUs kSecondUs = 1'000'000;
inline constexpr TimeUs kMillisecondUs = 1'000;

}  // namespace lsacran
