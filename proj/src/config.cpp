#include "lscdm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lscdm {

void RunConfig::validate() const {
    if (k < 0 || k > 16) throw std::invalid_argument("config: k outside 0..16");
    if (depth < 0 || depth > 8)
        throw std::invalid_argument("config: depth outside 0..8");
    if (gap < 0) throw std::invalid_argument("config: gap must be >= 0");
    if (trailing_gap < -1)
        throw std::invalid_argument("config: trailing_gap must be >= 0 (or -1)");
    if (scale <= 0.0) throw std::invalid_argument("config: scale must be > 0");
    if (peak_guard < 0)
        throw std::invalid_argument("config: peak_guard must be >= 0");
    rrc().validate();
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_num(const std::string& value, const std::string& where) {
    std::istringstream is(value);
    T v;
    if (value == "inf") {
        if constexpr (std::is_floating_point_v<T>)
            return std::numeric_limits<T>::infinity();
    }
    if (!(is >> v) || !(is >> std::ws).eof())
        throw std::invalid_argument(where + ": bad numeric value '" + value + "'");
    return v;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos)
            throw std::invalid_argument(where + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "k") cfg.k = parse_num<int>(value, where);
        else if (key == "depth") cfg.depth = parse_num<int>(value, where);
        else if (key == "gap") cfg.gap = parse_num<long long>(value, where);
        else if (key == "trailing_gap") cfg.trailing_gap = parse_num<long long>(value, where);
        else if (key == "rolloff") cfg.rolloff = parse_num<double>(value, where);
        else if (key == "sps") cfg.sps = parse_num<int>(value, where);
        else if (key == "order") cfg.order = parse_num<int>(value, where);
        else if (key == "chip_rate") cfg.chip_rate = parse_num<double>(value, where);
        else if (key == "channel_file") cfg.channel_file = value;
        else if (key == "snr_db") cfg.snr_db = parse_num<double>(value, where);
        else if (key == "noise_seed") cfg.noise_seed = parse_num<std::uint64_t>(value, where);
        else if (key == "scale") cfg.scale = parse_num<double>(value, where);
        else if (key == "threshold_db") cfg.threshold_db = parse_num<double>(value, where);
        else if (key == "peak_guard") cfg.peak_guard = parse_num<int>(value, where);
        else throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::string config_to_text(const RunConfig& cfg) {
    std::ostringstream os;
    os << "k = " << cfg.k << "\n"
       << "depth = " << cfg.depth << "\n"
       << "gap = " << cfg.gap << "\n"
       << "trailing_gap = " << cfg.effective_trailing_gap() << "\n"
       << "rolloff = " << cfg.rolloff << "\n"
       << "sps = " << cfg.sps << "\n"
       << "order = " << cfg.order << "\n"
       << "chip_rate = " << cfg.chip_rate << "\n";
    if (!cfg.channel_file.empty()) os << "channel_file = " << cfg.channel_file << "\n";
    if (std::isinf(cfg.snr_db)) os << "snr_db = inf\n";
    else os << "snr_db = " << cfg.snr_db << "\n";
    os << "noise_seed = " << cfg.noise_seed << "\n"
       << "scale = " << cfg.scale << "\n"
       << "threshold_db = " << cfg.threshold_db << "\n"
       << "peak_guard = " << cfg.peak_guard << "\n";
    return os.str();
}

}  // namespace lscdm
