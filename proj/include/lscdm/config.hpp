#ifndef LSCDM_CONFIG_HPP
#define LSCDM_CONFIG_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "lscdm/txchain.hpp"

namespace lscdm {

// Run parameters; defaults are the sounder's reference configuration
// (4096-chip seed, 4000-chip gaps, 7.68 MHz chips at 4 samples each).
struct RunConfig {
    int k = 12;
    int depth = 0;
    long long gap = 4000;
    long long trailing_gap = -1;  // -1: follow gap
    double rolloff = 0.25;
    int sps = 4;
    int order = 32;
    double chip_rate = 7.68e6;
    std::string channel_file;
    double snr_db = std::numeric_limits<double>::infinity();
    std::uint64_t noise_seed = 1;
    double scale = 0.5;
    double threshold_db = -40.0;
    int peak_guard = 64;

    long long effective_trailing_gap() const {
        return trailing_gap < 0 ? gap : trailing_gap;
    }
    RrcSpec rrc() const { return {rolloff, sps, order, chip_rate}; }
    void validate() const;  // throws with the offending field name
};

// key=value lines, '#' comments, unknown keys rejected. Empty file
// yields all defaults.
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text,
                            const std::string& origin = "<config>");

std::string config_to_text(const RunConfig& cfg);

}  // namespace lscdm

#endif
