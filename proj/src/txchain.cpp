#include "lscdm/txchain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lscdm/fft.hpp"

namespace lscdm {

namespace {
constexpr double kPi = std::numbers::pi;
}

void RrcSpec::validate() const {
    if (rolloff < 0.0 || rolloff > 1.0)
        throw std::invalid_argument("RrcSpec: rolloff outside [0,1]");
    if (sps < 1) throw std::invalid_argument("RrcSpec: sps must be >= 1");
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("RrcSpec: order must be even and >= 2");
    if (chip_rate <= 0.0)
        throw std::invalid_argument("RrcSpec: chip_rate must be > 0");
}

std::vector<double> design_rrc(const RrcSpec& spec) {
    spec.validate();
    const double b = spec.rolloff;
    std::vector<double> h(spec.order + 1);
    for (int i = 0; i <= spec.order; ++i) {
        const double t = (i - spec.order / 2) / static_cast<double>(spec.sps);
        double v;
        if (std::abs(t) < 1e-12) {
            v = 1.0 - b + 4.0 * b / kPi;
        } else if (b > 0.0 && std::abs(std::abs(t) - 1.0 / (4.0 * b)) < 1e-9) {
            v = (b / std::numbers::sqrt2) *
                ((1.0 + 2.0 / kPi) * std::sin(kPi / (4.0 * b)) +
                 (1.0 - 2.0 / kPi) * std::cos(kPi / (4.0 * b)));
        } else if (b == 0.0) {
            v = std::sin(kPi * t) / (kPi * t);
        } else {
            const double num = std::sin(kPi * t * (1.0 - b)) +
                               4.0 * b * t * std::cos(kPi * t * (1.0 + b));
            const double den = kPi * t * (1.0 - 16.0 * b * b * t * t);
            v = num / den;
        }
        h[i] = v;
    }
    double energy = 0.0;
    for (double v : h) energy += v * v;
    const double norm = 1.0 / std::sqrt(energy);
    for (double& v : h) v *= norm;
    // enforce exact symmetry against rounding differences
    for (int i = 0; i < spec.order / 2; ++i) h[spec.order - i] = h[i];
    return h;
}

IqWaveform shape(const Seq& chips, const RrcSpec& spec) {
    const std::vector<double> taps = design_rrc(spec);
    IqWaveform w;
    w.sample_rate = spec.sample_rate();
    w.stage = Stage::baseband;
    if (chips.empty()) return w;
    w.samples.assign((chips.size() - 1) * spec.sps + taps.size(), 0.0);
    for (std::size_t k = 0; k < chips.size(); ++k) {
        const int c = chips[k];
        if (c == 0) continue;
        const std::size_t off = k * spec.sps;
        for (std::size_t i = 0; i < taps.size(); ++i)
            w.samples[off + i] += c * taps[i];
    }
    return w;
}

IqWaveform upconvert_fs4(const IqWaveform& baseband) {
    if (baseband.stage != Stage::baseband)
        throw std::invalid_argument("upconvert_fs4: input is not baseband");
    IqWaveform out;
    out.sample_rate = baseband.sample_rate;
    out.stage = Stage::intermediate;
    out.samples.resize(baseband.samples.size());
    static const int pattern[4] = {1, 0, -1, 0};
    for (std::size_t n = 0; n < baseband.samples.size(); ++n)
        out.samples[n] = pattern[n % 4] * baseband.samples[n];
    return out;
}

QuantizeResult quantize_q15(const IqWaveform& w, double scale) {
    if (scale <= 0.0) throw std::invalid_argument("quantize_q15: scale must be > 0");
    QuantizeResult r;
    r.words.reserve(w.samples.size());
    for (double s : w.samples) {
        const double v = std::nearbyint(s * scale * 32768.0);
        if (v > 32767.0) {
            r.words.push_back(32767);
            ++r.saturated;
        } else if (v < -32768.0) {
            r.words.push_back(-32768);
            ++r.saturated;
        } else {
            r.words.push_back(static_cast<std::int16_t>(v));
        }
    }
    return r;
}

SpectrumReport spectrum(const std::vector<double>& samples, double fs,
                        double analysis_bw, bool apply_zoh) {
    if (samples.empty()) throw std::invalid_argument("spectrum: empty input");
    if (fs <= 0.0 || analysis_bw <= 0.0)
        throw std::invalid_argument("spectrum: rates must be > 0");
    const std::size_t nfft = std::max<std::size_t>(8, next_pow2(samples.size()));
    const auto bins = rfft(samples, nfft);
    std::vector<double> base_mag(nfft / 2 + 1);
    for (std::size_t k = 0; k <= nfft / 2; ++k) base_mag[k] = std::abs(bins[k]);

    const double df = fs / static_cast<double>(nfft);
    SpectrumReport rep;
    rep.zoh_applied = apply_zoh;
    rep.bin_hz = df;

    auto folded = [&](std::size_t j) {
        std::size_t r = j % nfft;
        if (r > nfft / 2) r = nfft - r;
        return base_mag[r];
    };
    auto zoh = [&](double f) {
        if (!apply_zoh || f == 0.0) return 1.0;
        const double x = kPi * f / fs;
        return std::abs(std::sin(x) / x);
    };

    const auto nbins = static_cast<std::size_t>(analysis_bw / df);
    rep.freq_hz.reserve(nbins + 1);
    rep.mag_db.reserve(nbins + 1);
    for (std::size_t j = 0; j <= nbins; ++j) {
        const double f = j * df;
        rep.freq_hz.push_back(f);
        rep.mag_db.push_back(20.0 * std::log10(folded(j) * zoh(f) + 1e-300));
    }
    if (analysis_bw < fs / 2.0) return rep;  // in-band only, no image survey

    // One image per fs/2 segment: location from the power centroid (the
    // band is mirror-symmetric inside a segment), level from the segment
    // maximum. Segments whose peak is negligible (e.g. zoh nulls) are
    // dropped.
    const std::size_t half = nfft / 2;
    double global_max = 0.0;
    std::vector<double> seg_hz, seg_db, seg_peak;
    for (std::size_t seg = 0; (seg + 1) * half <= nbins; ++seg) {
        double psum = 0.0, fsum = 0.0, peak = 0.0;
        for (std::size_t j = seg * half; j <= (seg + 1) * half; ++j) {
            const double m = folded(j);
            psum += m * m;
            fsum += m * m * (j * df);
            peak = std::max(peak, m * zoh(j * df));
        }
        if (psum <= 0.0) continue;
        seg_hz.push_back(fsum / psum);
        seg_db.push_back(20.0 * std::log10(peak + 1e-300));
        seg_peak.push_back(peak);
        global_max = std::max(global_max, peak);
    }
    for (std::size_t i = 0; i < seg_hz.size(); ++i) {
        if (seg_peak[i] >= 1e-4 * global_max) {
            rep.image_peaks_hz.push_back(seg_hz[i]);
            rep.image_peaks_db.push_back(seg_db[i]);
        }
    }
    return rep;
}

SpectrumReport spectrum(const std::vector<std::int16_t>& words, double fs,
                        double analysis_bw, bool apply_zoh) {
    std::vector<double> s(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) s[i] = words[i] / 32768.0;
    return spectrum(s, fs, analysis_bw, apply_zoh);
}

std::vector<std::string> format_mem_lines(const std::vector<std::int16_t>& words) {
    static const char* hex = "0123456789abcdef";
    std::vector<std::string> lines;
    lines.reserve(words.size());
    for (std::int16_t w : words) {
        const auto u = static_cast<std::uint16_t>(w);
        std::string line(4, '0');
        line[0] = hex[(u >> 12) & 0xF];
        line[1] = hex[(u >> 8) & 0xF];
        line[2] = hex[(u >> 4) & 0xF];
        line[3] = hex[u & 0xF];
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<std::int16_t> parse_mem_lines(const std::vector<std::string>& lines) {
    std::vector<std::int16_t> words;
    words.reserve(lines.size());
    for (const std::string& line : lines) {
        if (line.size() != 4)
            throw std::invalid_argument("parse_mem_lines: bad line '" + line + "'");
        const auto u = static_cast<std::uint16_t>(std::stoul(line, nullptr, 16));
        words.push_back(static_cast<std::int16_t>(u));
    }
    return words;
}

}  // namespace lscdm
