// Command line front end: code generation, correlation analysis, waveform
// synthesis, spectrum survey, ROM export and the end-to-end 2x2 sounding
// simulation.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lscdm/artifacts.hpp"
#include "lscdm/channel.hpp"
#include "lscdm/config.hpp"
#include "lscdm/correlation.hpp"
#include "lscdm/golay.hpp"
#include "lscdm/lscode.hpp"
#include "lscdm/sounder.hpp"
#include "lscdm/txchain.hpp"

namespace fs = std::filesystem;
using namespace lscdm;

namespace {

constexpr double kAllowedBandwidthHz = 16e6;

struct Options {
    RunConfig cfg;
    std::string config_path;
    std::string output;
    std::string codes_dir;
    long long lags = 8192;
    std::string mode = "aperiodic";
    bool on_chips = false;
    std::vector<int> pair{0, 1};
    double analysis_bw = 80e6;
    bool no_zoh = false;
    std::string input;
    double fs_override = 0.0;
};

void add_config_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "run configuration file (key = value)");
    cmd->add_option("--k", opt.cfg.k, "seed exponent, part length 2^k");
    cmd->add_option("--depth", opt.cfg.depth, "code tree depth");
    cmd->add_option("--gap", opt.cfg.gap, "zero gap between C and S parts, chips");
    cmd->add_option("--trailing-gap", opt.cfg.trailing_gap, "trailing zero gap, chips (-1: same as gap)");
    cmd->add_option("--rolloff", opt.cfg.rolloff, "RRC roll-off factor");
    cmd->add_option("--sps", opt.cfg.sps, "samples per chip");
    cmd->add_option("--order", opt.cfg.order, "RRC filter order");
    cmd->add_option("--chip-rate", opt.cfg.chip_rate, "chip rate, Hz");
    cmd->add_option("--channel", opt.cfg.channel_file, "channel description file");
    cmd->add_option("--snr", opt.cfg.snr_db, "receiver SNR, dB");
    cmd->add_option("--seed", opt.cfg.noise_seed, "noise seed");
    cmd->add_option("--scale", opt.cfg.scale, "quantizer scale");
}

RunConfig resolve_config(const Options& opt, const CLI::App* cmd) {
    RunConfig cfg = opt.cfg;
    if (!opt.config_path.empty()) {
        cfg = load_config(opt.config_path);
        // command line overrides file values
        const RunConfig defaults;
        auto seen = [&](const std::string& flag) { return cmd->count(flag) > 0; };
        if (seen("--k")) cfg.k = opt.cfg.k;
        if (seen("--depth")) cfg.depth = opt.cfg.depth;
        if (seen("--gap")) cfg.gap = opt.cfg.gap;
        if (seen("--trailing-gap")) cfg.trailing_gap = opt.cfg.trailing_gap;
        if (seen("--rolloff")) cfg.rolloff = opt.cfg.rolloff;
        if (seen("--sps")) cfg.sps = opt.cfg.sps;
        if (seen("--order")) cfg.order = opt.cfg.order;
        if (seen("--chip-rate")) cfg.chip_rate = opt.cfg.chip_rate;
        if (seen("--channel")) cfg.channel_file = opt.cfg.channel_file;
        if (seen("--snr")) cfg.snr_db = opt.cfg.snr_db;
        if (seen("--seed")) cfg.noise_seed = opt.cfg.noise_seed;
        if (seen("--scale")) cfg.scale = opt.cfg.scale;
    }
    cfg.validate();
    const double occupied = (1.0 + cfg.rolloff) * cfg.chip_rate;
    if (occupied > kAllowedBandwidthHz)
        std::cerr << "warning: occupied bandwidth " << occupied / 1e6
                  << " MHz exceeds the " << kAllowedBandwidthHz / 1e6
                  << " MHz allowance\n";
    return cfg;
}

LsCodeSet build_set(const RunConfig& cfg) {
    const LsCodeTree tree = expand(generate_pair(cfg.k), cfg.depth);
    return code_set(tree, cfg.depth, cfg.gap, cfg.effective_trailing_gap());
}

IqWaveform build_tx(const LsCode& code, const RrcSpec& spec) {
    return upconvert_fs4(shape(code.chips, spec));
}

std::string manifest_text(const RunConfig& cfg) {
    const long long n = 1LL << cfg.k;
    std::ostringstream os;
    os << config_to_text(cfg);
    os << "part_length_chips = " << (n << cfg.depth) << "\n"
       << "code_length_chips = "
       << 2 * (n << cfg.depth) + cfg.gap + cfg.effective_trailing_gap() << "\n"
       << "codes_in_set = " << (2LL << cfg.depth) << "\n"
       << "ifw_chips = " << cfg.gap << "\n"
       << "chip_duration_us = " << std::setprecision(10) << 1e6 / cfg.chip_rate << "\n"
       << "ifw_duration_us = " << cfg.gap * 1e6 / cfg.chip_rate << "\n"
       << "sample_rate_hz = " << cfg.rrc().sample_rate() << "\n"
       << "if_center_hz = " << cfg.rrc().sample_rate() / 4.0 << "\n";
    return os.str();
}

int cmd_gen(const Options& opt, const CLI::App* cmd) {
    const RunConfig cfg = resolve_config(opt, cmd);
    fs::create_directories(opt.output);
    const LsCodeSet set = build_set(cfg);
    for (const LsCode& code : set.codes)
        write_code_file(code, (fs::path(opt.output) /
                               ("code_" + to_string(code.id) + ".txt")).string());
    write_text_file((fs::path(opt.output) / "manifest.txt").string(),
                    manifest_text(cfg));
    std::cout << "wrote " << set.codes.size() << " codes to " << opt.output << "\n";
    return 0;
}

int cmd_corr(const Options& opt) {
    const std::vector<LsCode> codes = load_code_dir(opt.codes_dir);
    for (int idx : opt.pair)
        if (idx < 0 || static_cast<std::size_t>(idx) >= codes.size())
            throw std::invalid_argument("corr: pair index out of range");
    const CorrMode mode =
        opt.mode == "periodic" ? CorrMode::periodic : CorrMode::aperiodic;
    const LsCode& a = codes[opt.pair[0]];
    const LsCode& b = codes[opt.pair[1]];
    const CorrelationProfile p =
        opt.on_chips ? chip_corr_profile(a, b, -opt.lags, opt.lags)
                     : corr_profile(a, b, -opt.lags, opt.lags, mode);
    write_profile_csv(p, opt.output);
    const IfwMeasurement ifw = measure_ifw(p);
    std::cout << "pair " << to_string(a.id) << " x " << to_string(b.id)
              << ": ifw_chips=" << ifw.width << " peak=" << p.at(0) << "\n";
    return 0;
}

int cmd_wave(const Options& opt, const CLI::App* cmd) {
    const RunConfig cfg = resolve_config(opt, cmd);
    fs::create_directories(opt.output);
    const LsCodeSet set = build_set(cfg);
    const std::size_t n_tx = std::min<std::size_t>(2, set.codes.size());
    for (std::size_t t = 0; t < n_tx; ++t) {
        const IqWaveform w = build_tx(set.codes[t], cfg.rrc());
        const QuantizeResult q = quantize_q15(w, cfg.scale);
        const std::string stem = "tx" + std::to_string(t);
        write_wave_raw(q.words, (fs::path(opt.output) / (stem + ".raw")).string());
        write_wave_meta((fs::path(opt.output) / (stem + ".meta")).string(),
                        w.sample_rate, cfg.scale, "if", q.words.size(), q.saturated);
    }
    write_text_file((fs::path(opt.output) / "manifest.txt").string(),
                    manifest_text(cfg));
    std::cout << "wrote " << n_tx << " waveforms to " << opt.output << "\n";
    return 0;
}

int cmd_spectrum(const Options& opt, const CLI::App* cmd) {
    const RunConfig cfg = resolve_config(opt, cmd);
    SpectrumReport rep;
    if (!opt.input.empty()) {
        const auto words = read_wave_raw(opt.input);
        const double fs = opt.fs_override > 0 ? opt.fs_override : cfg.rrc().sample_rate();
        rep = spectrum(words, fs, opt.analysis_bw, !opt.no_zoh);
    } else {
        const LsCodeSet set = build_set(cfg);
        const QuantizeResult q =
            quantize_q15(build_tx(set.codes[0], cfg.rrc()), cfg.scale);
        rep = spectrum(q.words, cfg.rrc().sample_rate(), opt.analysis_bw, !opt.no_zoh);
    }
    std::ostringstream os;
    os << "# zoh " << (rep.zoh_applied ? 1 : 0) << "\n"
       << "# bin_hz " << rep.bin_hz << "\n";
    for (std::size_t i = 0; i < rep.image_peaks_hz.size(); ++i)
        os << "# image_peak " << std::setprecision(10) << rep.image_peaks_hz[i]
           << " " << rep.image_peaks_db[i] << "\n";
    os << "freq_hz,mag_db\n" << std::setprecision(9);
    for (std::size_t i = 0; i < rep.freq_hz.size(); ++i)
        os << rep.freq_hz[i] << "," << rep.mag_db[i] << "\n";
    write_text_file(opt.output, os.str());
    std::cout << "spectrum with " << rep.image_peaks_hz.size() << " image peaks -> "
              << opt.output << "\n";
    return 0;
}

int cmd_mem(const Options& opt, const CLI::App* cmd) {
    const RunConfig cfg = resolve_config(opt, cmd);
    fs::create_directories(opt.output);
    const LsCodeSet set = build_set(cfg);
    const std::size_t n_tx = std::min<std::size_t>(2, set.codes.size());
    for (std::size_t t = 0; t < n_tx; ++t) {
        // chip-domain ROM contents: 0 -> 0x0000, +1 -> 0x7fff, -1 -> 0x8000
        IqWaveform w;
        w.sample_rate = cfg.chip_rate;
        for (int chip : set.codes[t].chips) w.samples.push_back(chip);
        const QuantizeResult q = quantize_q15(w, 1.0);
        write_mem_file(q.words, (fs::path(opt.output) /
                                 ("code" + std::to_string(t) + ".mem")).string());
    }
    write_text_file((fs::path(opt.output) / "manifest.txt").string(),
                    manifest_text(cfg));
    std::cout << "wrote " << n_tx << " .mem files to " << opt.output << "\n";
    return 0;
}

int cmd_simulate(const Options& opt, const CLI::App* cmd) {
    const RunConfig cfg = resolve_config(opt, cmd);
    fs::create_directories(opt.output);
    const LsCodeSet set = build_set(cfg);
    if (set.codes.size() < 2)
        throw std::invalid_argument("simulate: need at least two codes");

    MimoChannel ch;
    if (!cfg.channel_file.empty()) {
        ch = load_channel_file(cfg.channel_file);
    } else {
        ch.taps[0][0] = {{0, 1.0}};
        ch.taps[1][1] = {{0, 1.0}};
    }
    for (const std::string& w : validate_delay_spread(ch, cfg.gap, cfg.sps))
        std::cerr << "warning: " << w << "\n";

    const std::array<IqWaveform, 2> tx = {build_tx(set.codes[0], cfg.rrc()),
                                          build_tx(set.codes[1], cfg.rrc())};
    std::array<IqWaveform, 2> rx = apply_mimo(ch, tx);
    for (int r = 0; r < 2; ++r)
        rx[r] = add_awgn(rx[r], {cfg.snr_db, cfg.noise_seed + r});

    const int max_lag = static_cast<int>(cfg.gap) * cfg.sps + 2 * cfg.order;
    const auto est = estimate_mimo(rx, tx, max_lag, cfg.threshold_db, cfg.peak_guard);
    const SoundingMetrics metrics =
        evaluate(est, ch, {cfg.gap, cfg.sps, cfg.chip_rate, cfg.peak_guard});

    for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t) {
            std::ostringstream os;
            os << "lag_samples,magnitude\n" << std::setprecision(9);
            for (std::size_t lag = 0; lag < est[r][t].magnitudes.size(); ++lag)
                os << lag << "," << est[r][t].magnitudes[lag] << "\n";
            write_text_file((fs::path(opt.output) / ("cir_rx" + std::to_string(r) +
                                                     "_tx" + std::to_string(t) + ".csv"))
                                .string(),
                            os.str());
        }

    std::ostringstream rep;
    rep << std::setprecision(9);
    rep << "min_resolvable_delay_us = " << metrics.min_resolvable_delay_us << "\n"
        << "max_resolvable_delay_us = " << metrics.max_resolvable_delay_us << "\n"
        << "worst_floor_db = " << metrics.worst_floor_db << "\n"
        << "dynamic_range_db = " << metrics.dynamic_range_db << "\n";
    for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t) {
            int i = 0;
            for (const PathEval& pe : metrics.paths[r][t]) {
                const std::string key =
                    "path_rx" + std::to_string(r) + "_tx" + std::to_string(t) +
                    "_" + std::to_string(i++);
                rep << key << "_detected = " << pe.detected << "\n"
                    << key << "_out_of_window = " << pe.out_of_window << "\n"
                    << key << "_delay_error_samples = " << pe.delay_error << "\n"
                    << key << "_gain_error_rel = " << pe.gain_error << "\n"
                    << key << "_interference_floor_db = " << pe.interference_floor_db
                    << "\n";
            }
        }
    for (const std::string& w : metrics.warnings) rep << "warning = " << w << "\n";
    write_text_file((fs::path(opt.output) / "metrics.txt").string(), rep.str());
    write_text_file((fs::path(opt.output) / "manifest.txt").string(),
                    manifest_text(cfg));
    std::cout << "simulation metrics -> "
              << (fs::path(opt.output) / "metrics.txt").string() << "\n";
    return 0;
}

int cmd_constellation(const Options& opt, const CLI::App* cmd) {
    const RunConfig cfg = resolve_config(opt, cmd);
    const LsCodeSet set = build_set(cfg);
    const LsCode& code = set.codes[0];
    IqWaveform rx = build_tx(code, cfg.rrc());
    if (!std::isinf(cfg.snr_db)) rx = add_awgn(rx, {cfg.snr_db, cfg.noise_seed});
    const std::vector<double> points = constellation(rx, code.chips, cfg.rrc());
    std::ostringstream os;
    os << "chip_index,value\n" << std::setprecision(9);
    std::size_t i = 0;
    for (std::size_t k = 0; k < code.chips.size() && i < points.size(); ++k) {
        if (code.chips[k] == 0) continue;
        os << k << "," << points[i++] << "\n";
    }
    write_text_file(opt.output, os.str());
    std::cout << points.size() << " constellation points -> " << opt.output << "\n";
    return 0;
}

int cmd_report(const Options& opt) {
    const std::vector<LsCode> codes = load_code_dir(opt.codes_dir);
    LsCodeSet set;
    set.codes = codes;
    set.seed_length = codes.front().part_length();
    const CorrMode mode =
        opt.mode == "periodic" ? CorrMode::periodic : CorrMode::aperiodic;
    const CorrelationReport rep = correlation_report(set, opt.lags, mode);
    std::ostringstream os;
    os << "codes = " << set.codes.size() << "\n"
       << "max_lag = " << opt.lags << "\n"
       << "min_ifw_chips = " << rep.min_ifw << "\n";
    for (const PairReport& pr : rep.pairs)
        os << "pair " << to_string(pr.id_a) << " " << to_string(pr.id_b)
           << " ifw_chips=" << pr.ifw.width << " peak=" << pr.peak
           << " worst_outside=" << pr.worst_outside << "\n";
    write_text_file(opt.output, os.str());
    std::cout << "report -> " << opt.output << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LS code generation and 2x2 CDM channel sounder simulation"};
    app.require_subcommand(1);
    Options opt;

    auto* gen = app.add_subcommand("gen", "generate an LS code set");
    add_config_flags(gen, opt);
    gen->add_option("-o,--output", opt.output, "output directory")->required();

    auto* corr = app.add_subcommand("corr", "correlation profile of a code pair");
    corr->add_option("--codes", opt.codes_dir, "directory with code_*.txt")->required();
    corr->add_option("--lags", opt.lags, "profile extent, +-lags");
    corr->add_option("--mode", opt.mode, "aperiodic | periodic")
        ->check(CLI::IsMember({"aperiodic", "periodic"}));
    corr->add_flag("--chips", opt.on_chips, "correlate assembled chips instead of parts");
    corr->add_option("--pair", opt.pair, "two code indices")->expected(2);
    corr->add_option("-o,--output", opt.output, "output CSV")->required();

    auto* wave = app.add_subcommand("wave", "synthesize quantized IF waveforms");
    add_config_flags(wave, opt);
    wave->add_option("-o,--output", opt.output, "output directory")->required();

    auto* spec = app.add_subcommand("spectrum", "DAC output spectrum survey");
    add_config_flags(spec, opt);
    spec->add_option("--input", opt.input, "raw int16 waveform (default: synthesize)");
    spec->add_option("--fs", opt.fs_override, "sample rate of --input, Hz");
    spec->add_option("--bw", opt.analysis_bw, "analysis bandwidth, Hz");
    spec->add_flag("--no-zoh", opt.no_zoh, "skip the DAC sinc weighting");
    spec->add_option("-o,--output", opt.output, "output CSV")->required();

    auto* mem = app.add_subcommand("mem", "export chip ROM .mem files");
    add_config_flags(mem, opt);
    mem->add_option("-o,--output", opt.output, "output directory")->required();

    auto* sim = app.add_subcommand("simulate", "end-to-end 2x2 sounding run");
    add_config_flags(sim, opt);
    sim->add_option("-o,--output", opt.output, "output directory")->required();

    auto* cons = app.add_subcommand("constellation", "BPSK decision points");
    add_config_flags(cons, opt);
    cons->add_option("-o,--output", opt.output, "output CSV")->required();

    auto* rept = app.add_subcommand("report", "pairwise correlation report");
    rept->add_option("--codes", opt.codes_dir, "directory with code_*.txt")->required();
    rept->add_option("--lags", opt.lags, "profile extent, +-lags");
    rept->add_option("--mode", opt.mode, "aperiodic | periodic")
        ->check(CLI::IsMember({"aperiodic", "periodic"}));
    rept->add_option("-o,--output", opt.output, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(opt, gen);
        if (corr->parsed()) return cmd_corr(opt);
        if (wave->parsed()) return cmd_wave(opt, wave);
        if (spec->parsed()) return cmd_spectrum(opt, spec);
        if (mem->parsed()) return cmd_mem(opt, mem);
        if (sim->parsed()) return cmd_simulate(opt, sim);
        if (cons->parsed()) return cmd_constellation(opt, cons);
        if (rept->parsed()) return cmd_report(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 1;
}
