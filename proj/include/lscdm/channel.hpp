#ifndef LSCDM_CHANNEL_HPP
#define LSCDM_CHANNEL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lscdm/txchain.hpp"

namespace lscdm {

// One multipath echo: integer sample delay and real gain (sign carries
// the BPSK-visible phase).
struct PathTap {
    int delay = 0;
    double gain = 1.0;
};

// 2x2 tapped delay line; taps[r][t] is the path list from transmit
// antenna t to receive antenna r.
struct MimoChannel {
    std::array<std::array<std::vector<PathTap>, 2>, 2> taps;

    int max_delay() const;
    void validate() const;
};

struct NoiseSpec {
    double snr_db = 0.0;  // +inf means noiseless
    std::uint64_t seed = 0;
};

// rx_r[n] = sum_t sum_p gain * tx_t[n - delay]; output grows by max_delay.
std::array<IqWaveform, 2> apply_mimo(const MimoChannel& ch,
                                     const std::array<IqWaveform, 2>& tx);

// AWGN at the requested SNR relative to the measured signal power.
// Deterministic per seed (own Box-Muller over mt19937_64).
IqWaveform add_awgn(const IqWaveform& w, const NoiseSpec& noise);

// Warnings when the channel's delay spread reaches the zero-window.
std::vector<std::string> validate_delay_spread(const MimoChannel& ch,
                                               long long ifw_chips, int sps);

MimoChannel load_channel_file(const std::string& path);
void save_channel_file(const MimoChannel& ch, const std::string& path);

}  // namespace lscdm

#endif
