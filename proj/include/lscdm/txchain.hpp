#ifndef LSCDM_TXCHAIN_HPP
#define LSCDM_TXCHAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lscdm/golay.hpp"

namespace lscdm {

// Root-raised-cosine shaping parameters. order+1 taps, order even.
struct RrcSpec {
    double rolloff = 0.25;
    int sps = 4;               // samples per chip
    int order = 32;
    double chip_rate = 7.68e6;  // Hz

    double sample_rate() const { return chip_rate * sps; }
    void validate() const;
};

enum class Stage { baseband, intermediate };

struct IqWaveform {
    std::vector<double> samples;
    double sample_rate = 0.0;
    Stage stage = Stage::baseband;
};

// Unit-energy symmetric RRC taps; t=0 and t=+-Tc/(4*rolloff) use the
// analytic limits, rolloff=0 degenerates to a sinc.
std::vector<double> design_rrc(const RrcSpec& spec);

// Zero-stuff by sps and convolve with the RRC. Group delay order/2 samples.
IqWaveform shape(const Seq& chips, const RrcSpec& spec);

// Multiply by cos(pi*n/2), i.e. the pattern 1, 0, -1, 0. Centers the
// signal at sample_rate/4.
IqWaveform upconvert_fs4(const IqWaveform& baseband);

// Q1.15: round(sample*scale*32768) saturated to [-32768, 32767].
struct QuantizeResult {
    std::vector<std::int16_t> words;
    std::size_t saturated = 0;
};
QuantizeResult quantize_q15(const IqWaveform& w, double scale);

struct SpectrumReport {
    std::vector<double> freq_hz;
    std::vector<double> mag_db;
    std::vector<double> image_peaks_hz;  // ascending
    std::vector<double> image_peaks_db;
    bool zoh_applied = false;
    double bin_hz = 0.0;
};

// Magnitude spectrum over [0, analysis_bw] including the spectral
// replicas of the sampled signal; apply_zoh weights by the DAC sinc
// |sin(pi f/fs)/(pi f/fs)|. Image peaks are reported per fs/2 segment
// (power centroid for location, segment maximum for level). With
// analysis_bw < fs/2 only the in-band spectrum is produced.
SpectrumReport spectrum(const std::vector<double>& samples, double fs,
                        double analysis_bw, bool apply_zoh);
SpectrumReport spectrum(const std::vector<std::int16_t>& words, double fs,
                        double analysis_bw, bool apply_zoh);

// ROM init lines: one word per line, 4 lowercase hex digits.
std::vector<std::string> format_mem_lines(const std::vector<std::int16_t>& words);
std::vector<std::int16_t> parse_mem_lines(const std::vector<std::string>& lines);

}  // namespace lscdm

#endif
