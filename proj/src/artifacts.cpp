#include "lscdm/artifacts.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lscdm {

namespace fs = std::filesystem;

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void write_code_file(const LsCode& code, const std::string& path) {
    std::ostringstream os;
    os << "# id " << to_string(code.id) << "\n"
       << "# part_length " << code.part_length() << "\n"
       << "# gap " << code.gap << "\n"
       << "# trailing_gap " << code.trailing_gap << "\n";
    for (int chip : code.chips) os << chip << "\n";
    write_text_file(path, os.str());
}

LsCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    std::string line;
    long long part_length = -1, gap = -1, trailing_gap = -1;
    CodeId id;
    Seq chips;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream is(line.substr(1));
            std::string key;
            is >> key;
            if (key == "part_length") is >> part_length;
            else if (key == "gap") is >> gap;
            else if (key == "trailing_gap") is >> trailing_gap;
            else if (key == "id") {
                std::string v;
                is >> v;
                // LnnNmm.base / .mate
                std::sscanf(v.c_str(), "L%d.N%d", &id.layer, &id.node);
                id.family = v.find(".mate") != std::string::npos ? Family::mate
                                                                 : Family::base;
            }
            continue;
        }
        chips.push_back(std::stoi(line));
    }
    if (part_length < 0 || gap < 0 || trailing_gap < 0)
        throw std::runtime_error(path + ": missing header fields");
    if (static_cast<long long>(chips.size()) !=
        2 * part_length + gap + trailing_gap)
        throw std::runtime_error(path + ": chip count does not match header");
    Seq c(chips.begin(), chips.begin() + part_length);
    Seq s(chips.begin() + part_length + gap,
          chips.begin() + 2 * part_length + gap);
    return assemble(std::move(c), std::move(s), gap, trailing_gap, id);
}

std::vector<LsCode> load_code_dir(const std::string& dir) {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("code_", 0) == 0 && name.size() > 4 &&
            name.substr(name.size() - 4) == ".txt")
            names.push_back(entry.path().string());
    }
    std::sort(names.begin(), names.end());
    if (names.empty())
        throw std::runtime_error("no code_*.txt files in " + dir);
    std::vector<LsCode> codes;
    codes.reserve(names.size());
    for (const std::string& n : names) codes.push_back(load_code_file(n));
    return codes;
}

void write_profile_csv(const CorrelationProfile& profile, const std::string& path) {
    std::ostringstream os;
    os << "lag,value\n";
    for (long long lag = profile.lag_min; lag <= profile.lag_max; ++lag)
        os << lag << "," << profile.at(lag) << "\n";
    write_text_file(path, os.str());
}

void write_wave_raw(const std::vector<std::int16_t>& words, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (std::int16_t w : words) {
        const auto u = static_cast<std::uint16_t>(w);
        const char bytes[2] = {static_cast<char>(u & 0xFF),
                               static_cast<char>((u >> 8) & 0xFF)};
        out.write(bytes, 2);
    }
}

std::vector<std::int16_t> read_wave_raw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::int16_t> words;
    char bytes[2];
    while (in.read(bytes, 2)) {
        const auto u = static_cast<std::uint16_t>(
            (static_cast<unsigned char>(bytes[1]) << 8) |
            static_cast<unsigned char>(bytes[0]));
        words.push_back(static_cast<std::int16_t>(u));
    }
    return words;
}

void write_wave_meta(const std::string& path, double sample_rate, double scale,
                     const std::string& stage, std::size_t count,
                     std::size_t saturated) {
    std::ostringstream os;
    os << "sample_rate = " << sample_rate << "\n"
       << "scale = " << scale << "\n"
       << "stage = " << stage << "\n"
       << "samples = " << count << "\n"
       << "saturated = " << saturated << "\n"
       << "format = int16le\n";
    write_text_file(path, os.str());
}

void write_mem_file(const std::vector<std::int16_t>& words, const std::string& path) {
    std::ostringstream os;
    for (const std::string& line : format_mem_lines(words)) os << line << "\n";
    write_text_file(path, os.str());
}

std::vector<std::int16_t> read_mem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return parse_mem_lines(lines);
}

}  // namespace lscdm
