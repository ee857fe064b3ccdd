#include "lscdm/channel.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lscdm {

int MimoChannel::max_delay() const {
    int d = 0;
    for (const auto& row : taps)
        for (const auto& path : row)
            for (const PathTap& tap : path) d = std::max(d, tap.delay);
    return d;
}

void MimoChannel::validate() const {
    for (const auto& row : taps)
        for (const auto& path : row)
            for (const PathTap& tap : path) {
                if (tap.delay < 0)
                    throw std::invalid_argument("MimoChannel: negative tap delay");
                if (std::abs(tap.gain) > 10.0)
                    throw std::invalid_argument("MimoChannel: |gain| > 10");
            }
}

std::array<IqWaveform, 2> apply_mimo(const MimoChannel& ch,
                                     const std::array<IqWaveform, 2>& tx) {
    ch.validate();
    if (tx[0].sample_rate != tx[1].sample_rate)
        throw std::invalid_argument("apply_mimo: tx sample rates differ");
    if (tx[0].samples.size() != tx[1].samples.size())
        throw std::invalid_argument("apply_mimo: tx lengths differ");
    const std::size_t in_len = tx[0].samples.size();
    const std::size_t out_len = in_len + ch.max_delay();
    std::array<IqWaveform, 2> rx;
    for (int r = 0; r < 2; ++r) {
        rx[r].sample_rate = tx[0].sample_rate;
        rx[r].stage = tx[0].stage;
        rx[r].samples.assign(out_len, 0.0);
        for (int t = 0; t < 2; ++t)
            for (const PathTap& tap : ch.taps[r][t])
                for (std::size_t n = 0; n < in_len; ++n)
                    rx[r].samples[n + tap.delay] += tap.gain * tx[t].samples[n];
    }
    return rx;
}

IqWaveform add_awgn(const IqWaveform& w, const NoiseSpec& noise) {
    if (std::isinf(noise.snr_db)) return w;
    double power = 0.0;
    for (double s : w.samples) power += s * s;
    power /= static_cast<double>(w.samples.empty() ? 1 : w.samples.size());
    if (power <= 0.0)
        throw std::invalid_argument("add_awgn: zero-power signal");
    const double sigma = std::sqrt(power / std::pow(10.0, noise.snr_db / 10.0));
    std::mt19937_64 rng(noise.seed);
    // Box-Muller, fixed algorithm so the byte stream is reproducible.
    auto uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
    };
    IqWaveform out = w;
    double cached = 0.0;
    bool has_cached = false;
    for (double& s : out.samples) {
        double g;
        if (has_cached) {
            g = cached;
            has_cached = false;
        } else {
            const double u1 = uniform();
            const double u2 = uniform();
            const double r = std::sqrt(-2.0 * std::log(u1));
            g = r * std::cos(2.0 * std::numbers::pi * u2);
            cached = r * std::sin(2.0 * std::numbers::pi * u2);
            has_cached = true;
        }
        s += sigma * g;
    }
    return out;
}

std::vector<std::string> validate_delay_spread(const MimoChannel& ch,
                                               long long ifw_chips, int sps) {
    std::vector<std::string> warnings;
    const long long limit = ifw_chips * sps;
    const int d = ch.max_delay();
    if (d >= limit) {
        std::ostringstream os;
        os << "channel delay spread " << d << " samples reaches the "
           << ifw_chips << "-chip zero window (" << limit << " samples)";
        warnings.push_back(os.str());
    }
    return warnings;
}

MimoChannel load_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open channel file: " + path);
    MimoChannel ch;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream is(line);
        std::string kw;
        int r, t, delay;
        double gain;
        if (!(is >> kw >> r >> t >> delay >> gain) || kw != "tap")
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'tap <rx> <tx> <delay> <gain>'");
        if (r < 0 || r > 1 || t < 0 || t > 1)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": antenna index outside 0..1");
        ch.taps[r][t].push_back({delay, gain});
    }
    ch.validate();
    return ch;
}

void save_channel_file(const MimoChannel& ch, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write channel file: " + path);
    out << "# tap <rx> <tx> <delay_samples> <gain>\n";
    for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t)
            for (const PathTap& tap : ch.taps[r][t])
                out << "tap " << r << " " << t << " " << tap.delay << " "
                    << tap.gain << "\n";
}

}  // namespace lscdm
