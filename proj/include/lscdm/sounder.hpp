#ifndef LSCDM_SOUNDER_HPP
#define LSCDM_SOUNDER_HPP

#include <array>
#include <optional>
#include <vector>

#include "lscdm/channel.hpp"
#include "lscdm/lscode.hpp"
#include "lscdm/txchain.hpp"

namespace lscdm {

struct CirPeak {
    int delay = 0;        // samples
    double gain = 0.0;    // peak magnitude / ref energy
    double level_db = 0.0;  // relative to the strongest peak, <= 0
};

struct CirEstimate {
    std::vector<double> magnitudes;  // |corr(lag)| / ref energy, lag 0..max_lag
    double ref_energy = 0.0;
    std::vector<CirPeak> peaks;      // sorted by delay
};

// Sliding correlation of rx against the pulse-shaped reference over
// lags 0..max_lag. Peaks above threshold_db of the main peak are
// reported after suppressing each peak's own pulse-shape skirt.
CirEstimate matched_cir(const IqWaveform& rx, const IqWaveform& ref,
                        int max_lag, double threshold_db = -40.0,
                        int peak_guard = 64);

// One matched_cir per (receive antenna, code reference).
std::array<std::array<CirEstimate, 2>, 2> estimate_mimo(
    const std::array<IqWaveform, 2>& rx, const std::array<IqWaveform, 2>& refs,
    int max_lag, double threshold_db = -40.0, int peak_guard = 64);

struct EvalConfig {
    long long ifw_chips = 4000;
    int sps = 4;
    double chip_rate = 7.68e6;
    int peak_guard = 64;  // samples excluded around a true tap
};

struct PathEval {
    bool detected = false;
    bool out_of_window = false;   // truth delay >= ifw
    long long delay_error = 0;    // samples, est - truth (detected taps)
    double gain_error = 0.0;      // relative
    double interference_floor_db = 0.0;  // worst spurious level inside IFW
};

struct SoundingMetrics {
    std::array<std::array<std::vector<PathEval>, 2>, 2> paths;  // per (r,t), per tap
    double worst_floor_db = 0.0;
    double dynamic_range_db = 0.0;
    double min_resolvable_delay_us = 0.0;  // one chip
    double max_resolvable_delay_us = 0.0;  // the zero window
    std::vector<std::string> warnings;
};

SoundingMetrics evaluate(const std::array<std::array<CirEstimate, 2>, 2>& est,
                         const MimoChannel& truth, const EvalConfig& cfg);

// BPSK decision points: fs/4 downconversion, RRC matched filter, one
// point per non-gap chip. align_delay is the channel delay in samples.
std::vector<double> constellation(const IqWaveform& rx, const Seq& chips,
                                  const RrcSpec& spec, int align_delay = 0);

}  // namespace lscdm

#endif
