#pragma once

// Parametric achievable-rate model for an MVNO on the shared MD-MIMO pool.
// Every group of `antennas_per_stream` antennas carries one spatial stream
// and each stream contributes sigma bps per Hz of assigned bandwidth:
//
//     rate(m, b) = b * floor(m / m0) * sigma
//
// Defaults (m0 = 10, sigma = 10 bps/Hz) reproduce the two operating points
// the simulator is calibrated against: 20 antennas on 10 MHz give 200 Mbps,
// and 40 antennas meet the same 200 Mbps in a single 5 MHz channel.
//
// sigma is stored in milli-(bps/Hz) so that all rates stay exact integers
// for channel-granular bandwidths.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

#include "lsacran/units.hpp"

namespace lsacran {

struct RateModelParams {
  int antennas_per_stream = 10;                 // m0
  std::int64_t sigma_millibps_per_hz = 10'000;  // per-stream spectral efficiency

  bool operator==(const RateModelParams&) const = default;
};

inline Bps rate(const RateModelParams& p, int antennas, Hertz bandwidth_hz) {
  if (p.antennas_per_stream < 1 || p.sigma_millibps_per_hz <= 0)
    throw std::invalid_argument("rate: invalid rate model parameters");
  if (antennas < 0 || bandwidth_hz < 0)
    throw std::invalid_argument("rate: antennas and bandwidth must be non-negative");
  const std::int64_t streams = antennas / p.antennas_per_stream;
  const __int128 bits = static_cast<__int128>(bandwidth_hz) * streams * p.sigma_millibps_per_hz / 1000;
  if (bits > std::numeric_limits<Bps>::max()) throw std::overflow_error("rate: result overflows");
  return static_cast<Bps>(bits);
}

// Smallest antenna count in [m_min, m_max] meeting required_rate_bps on the
// given bandwidth, or nullopt when even m_max falls short. Exact: solves the
// stream count needed and rounds up to the next antenna group.
inline std::optional<int> min_antennas(const RateModelParams& p, Hertz bandwidth_hz,
                                       Bps required_rate_bps, int m_min, int m_max) {
  if (p.antennas_per_stream < 1 || p.sigma_millibps_per_hz <= 0)
    throw std::invalid_argument("min_antennas: invalid rate model parameters");
  if (bandwidth_hz <= 0) throw std::invalid_argument("min_antennas: bandwidth must be > 0");
  if (m_min < 0 || m_min > m_max) throw std::invalid_argument("min_antennas: bad antenna range");
  if (required_rate_bps <= 0) return m_min;
  // rate >= r  <=>  b * s * sigma_milli / 1000 >= r  <=>  s >= ceil(1000 r / (b sigma_milli))
  const __int128 num = static_cast<__int128>(required_rate_bps) * 1000;
  const __int128 den = static_cast<__int128>(bandwidth_hz) * p.sigma_millibps_per_hz;
  const __int128 streams_needed = (num + den - 1) / den;
  const __int128 antennas_needed = streams_needed * p.antennas_per_stream;
  __int128 m = antennas_needed > m_min ? antennas_needed : static_cast<__int128>(m_min);
  if (m > m_max) return std::nullopt;
  return static_cast<int>(m);
}

}  // namespace lsacran
