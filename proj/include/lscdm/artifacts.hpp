#ifndef LSCDM_ARTIFACTS_HPP
#define LSCDM_ARTIFACTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lscdm/correlation.hpp"
#include "lscdm/lscode.hpp"
#include "lscdm/txchain.hpp"

namespace lscdm {

// Code file: '# key value' header lines, then one chip per line.
void write_code_file(const LsCode& code, const std::string& path);
LsCode load_code_file(const std::string& path);
// All code_*.txt in a directory, sorted by filename.
std::vector<LsCode> load_code_dir(const std::string& dir);

void write_profile_csv(const CorrelationProfile& profile, const std::string& path);

// Raw waveform: headerless little-endian int16 plus a text sidecar.
void write_wave_raw(const std::vector<std::int16_t>& words, const std::string& path);
std::vector<std::int16_t> read_wave_raw(const std::string& path);
void write_wave_meta(const std::string& path, double sample_rate, double scale,
                     const std::string& stage, std::size_t count,
                     std::size_t saturated);

void write_mem_file(const std::vector<std::int16_t>& words, const std::string& path);
std::vector<std::int16_t> read_mem_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace lscdm

#endif
