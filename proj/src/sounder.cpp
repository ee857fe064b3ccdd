#include "lscdm/sounder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lscdm/fft.hpp"

namespace lscdm {

CirEstimate matched_cir(const IqWaveform& rx, const IqWaveform& ref,
                        int max_lag, double threshold_db, int peak_guard) {
    if (rx.samples.empty() || ref.samples.empty())
        throw std::invalid_argument("matched_cir: empty input");
    if (rx.sample_rate != ref.sample_rate)
        throw std::invalid_argument("matched_cir: sample rates differ");
    if (max_lag < 0) throw std::invalid_argument("matched_cir: negative max_lag");

    CirEstimate est;
    for (double s : ref.samples) est.ref_energy += s * s;
    if (est.ref_energy <= 0.0)
        throw std::invalid_argument("matched_cir: zero-energy reference");

    const auto corr = xcorr_fft(rx.samples, ref.samples, max_lag);
    est.magnitudes.resize(corr.size());
    for (std::size_t i = 0; i < corr.size(); ++i)
        est.magnitudes[i] = std::abs(corr[i]) / est.ref_energy;

    // greedy peak picking with skirt suppression
    std::vector<double> residual = est.magnitudes;
    const double main_peak =
        *std::max_element(est.magnitudes.begin(), est.magnitudes.end());
    if (main_peak > 0.0) {
        const double floor_level = main_peak * std::pow(10.0, threshold_db / 20.0);
        for (;;) {
            const auto it = std::max_element(residual.begin(), residual.end());
            if (*it < floor_level || *it <= 0.0) break;
            const auto idx = static_cast<int>(it - residual.begin());
            est.peaks.push_back({idx, est.magnitudes[idx],
                                 20.0 * std::log10(est.magnitudes[idx] / main_peak)});
            const int lo = std::max(0, idx - peak_guard);
            const int hi = std::min<int>(residual.size() - 1, idx + peak_guard);
            for (int i = lo; i <= hi; ++i) residual[i] = 0.0;
        }
        std::sort(est.peaks.begin(), est.peaks.end(),
                  [](const CirPeak& a, const CirPeak& b) { return a.delay < b.delay; });
    }
    return est;
}

std::array<std::array<CirEstimate, 2>, 2> estimate_mimo(
    const std::array<IqWaveform, 2>& rx, const std::array<IqWaveform, 2>& refs,
    int max_lag, double threshold_db, int peak_guard) {
    std::array<std::array<CirEstimate, 2>, 2> est;
    for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t)
            est[r][t] = matched_cir(rx[r], refs[t], max_lag, threshold_db, peak_guard);
    return est;
}

SoundingMetrics evaluate(const std::array<std::array<CirEstimate, 2>, 2>& est,
                         const MimoChannel& truth, const EvalConfig& cfg) {
    SoundingMetrics m;
    m.min_resolvable_delay_us = 1e6 / cfg.chip_rate;
    m.max_resolvable_delay_us = cfg.ifw_chips * 1e6 / cfg.chip_rate;
    const long long window = cfg.ifw_chips * cfg.sps;
    m.worst_floor_db = -std::numeric_limits<double>::infinity();

    for (int r = 0; r < 2; ++r) {
        // reference level: strongest response seen at this antenna
        double ref_level = 0.0;
        for (int t = 0; t < 2; ++t)
            for (double v : est[r][t].magnitudes) ref_level = std::max(ref_level, v);

        for (int t = 0; t < 2; ++t) {
            const CirEstimate& e = est[r][t];
            for (const PathTap& tap : truth.taps[r][t]) {
                PathEval pe;
                if (tap.delay >= window) {
                    pe.out_of_window = true;
                    m.warnings.push_back("truth tap at " + std::to_string(tap.delay) +
                                         " samples lies outside the zero window");
                    m.paths[r][t].push_back(pe);
                    continue;
                }
                const CirPeak* best = nullptr;
                for (const CirPeak& p : e.peaks) {
                    if (std::abs(p.delay - tap.delay) <= cfg.peak_guard &&
                        (!best || p.gain > best->gain))
                        best = &p;
                }
                if (best) {
                    pe.detected = true;
                    pe.delay_error = best->delay - tap.delay;
                    const double g = std::abs(tap.gain);
                    pe.gain_error = g > 0.0 ? std::abs(best->gain - g) / g : best->gain;
                }
                m.paths[r][t].push_back(pe);
            }

            // worst spurious level inside the window, away from true taps
            double spurious = 0.0;
            const long long reach =
                std::min<long long>(window, static_cast<long long>(e.magnitudes.size()));
            for (long long lag = 0; lag < reach; ++lag) {
                bool near_tap = false;
                for (const PathTap& tap : truth.taps[r][t])
                    if (std::abs(lag - tap.delay) <= 2 * cfg.peak_guard) near_tap = true;
                if (!near_tap) spurious = std::max(spurious, e.magnitudes[lag]);
            }
            const double floor_db =
                ref_level > 0.0 && spurious > 0.0
                    ? 20.0 * std::log10(spurious / ref_level)
                    : -std::numeric_limits<double>::infinity();
            for (PathEval& pe : m.paths[r][t]) pe.interference_floor_db = floor_db;
            if (m.paths[r][t].empty()) {
                PathEval pe;  // no truth taps; still report the floor
                pe.interference_floor_db = floor_db;
                m.paths[r][t].push_back(pe);
            }
            m.worst_floor_db = std::max(m.worst_floor_db, floor_db);
        }
    }
    m.dynamic_range_db = -m.worst_floor_db;
    return m;
}

std::vector<double> constellation(const IqWaveform& rx, const Seq& chips,
                                  const RrcSpec& spec, int align_delay) {
    if (rx.samples.empty()) throw std::invalid_argument("constellation: empty input");
    const std::vector<double> taps = design_rrc(spec);
    static const int pattern[4] = {2, 0, -2, 0};  // 2*cos(pi*n/2)
    std::vector<double> mixed(rx.samples.size());
    for (std::size_t n = 0; n < rx.samples.size(); ++n) {
        const int phase = static_cast<int>(
            ((static_cast<long long>(n) - align_delay) % 4 + 4) % 4);
        mixed[n] = pattern[phase] * rx.samples[n];
    }
    // matched filter
    std::vector<double> filtered(mixed.size() + taps.size() - 1, 0.0);
    for (std::size_t n = 0; n < mixed.size(); ++n) {
        if (mixed[n] == 0.0) continue;
        for (std::size_t k = 0; k < taps.size(); ++k)
            filtered[n + k] += mixed[n] * taps[k];
    }
    std::vector<double> points;
    for (std::size_t k = 0; k < chips.size(); ++k) {
        if (chips[k] == 0) continue;  // gap chips carry no decision
        const std::size_t idx = align_delay + k * spec.sps + spec.order;
        if (idx < filtered.size()) points.push_back(filtered[idx]);
    }
    return points;
}

}  // namespace lscdm
