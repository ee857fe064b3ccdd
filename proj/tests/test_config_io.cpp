#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "lscdm/artifacts.hpp"
#include "lscdm/config.hpp"

using namespace lscdm;

TEST_CASE("empty config text yields the defaults") {
    const RunConfig cfg = parse_config_text("");
    CHECK(cfg.k == 12);
    CHECK(cfg.depth == 0);
    CHECK(cfg.gap == 4000);
    CHECK(cfg.effective_trailing_gap() == 4000);
    CHECK(cfg.rolloff == 0.25);
    CHECK(cfg.sps == 4);
    CHECK(cfg.order == 32);
    CHECK(cfg.chip_rate == 7.68e6);
    CHECK(std::isinf(cfg.snr_db));
    CHECK(cfg.scale == 0.5);
    CHECK(cfg.peak_guard == 64);
    cfg.validate();  // defaults are valid
}

TEST_CASE("config overrides and comments") {
    const RunConfig cfg = parse_config_text(
        "# comment line\n"
        "rolloff = 0.2\n"
        "k = 6\n"
        "gap = 60\n"
        "trailing_gap = 10\n"
        "snr_db = 20\n"
        "noise_seed = 99\n"
        "channel_file = ch.txt\n");
    CHECK(cfg.rolloff == 0.2);
    CHECK(cfg.k == 6);
    CHECK(cfg.gap == 60);
    CHECK(cfg.effective_trailing_gap() == 10);
    CHECK(cfg.snr_db == 20.0);
    CHECK(cfg.noise_seed == 99);
    CHECK(cfg.channel_file == "ch.txt");
    CHECK(parse_config_text("snr_db = inf\n").snr_db ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("config validation names the offending field") {
    RunConfig cfg;
    cfg.gap = -1;
    CHECK_THROWS_WITH_AS(cfg.validate(),
                         doctest::Contains("gap"), std::invalid_argument);
    cfg = RunConfig{};
    cfg.k = 17;
    CHECK_THROWS_WITH_AS(cfg.validate(),
                         doctest::Contains("k"), std::invalid_argument);
    cfg = RunConfig{};
    cfg.rolloff = 1.5;
    CHECK_THROWS_WITH_AS(cfg.validate(),
                         doctest::Contains("rolloff"), std::invalid_argument);
    cfg = RunConfig{};
    cfg.scale = 0.0;
    CHECK_THROWS_WITH_AS(cfg.validate(),
                         doctest::Contains("scale"), std::invalid_argument);
}

TEST_CASE("config parse errors carry the location") {
    CHECK_THROWS_WITH_AS(parse_config_text("bogus_key = 1\n", "f.cfg"),
                         doctest::Contains("f.cfg:1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config_text("k\n", "f.cfg"),
                         doctest::Contains("f.cfg:1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config_text("k = banana\n", "f.cfg"),
                         doctest::Contains("f.cfg:1"), std::invalid_argument);
}

TEST_CASE("config text round trip") {
    RunConfig cfg;
    cfg.k = 8;
    cfg.gap = 123;
    cfg.rolloff = 0.2;
    cfg.snr_db = 15.5;
    const RunConfig back = parse_config_text(config_to_text(cfg));
    CHECK(back.k == 8);
    CHECK(back.gap == 123);
    CHECK(back.rolloff == 0.2);
    CHECK(back.snr_db == 15.5);
}

TEST_CASE("load_config reads a file") {
    const std::string path = "test_cfg_tmp.txt";
    write_text_file(path, "k = 5\ngap = 7\n");
    const RunConfig cfg = load_config(path);
    CHECK(cfg.k == 5);
    CHECK(cfg.gap == 7);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config("no_such_config.txt"), std::runtime_error);
}

TEST_CASE("code file round trip") {
    const LsCodeSet set = code_set(expand(generate_pair(4), 1), 1, 9, 3);
    const std::string path = "test_code_tmp.txt";
    for (const LsCode& code : set.codes) {
        write_code_file(code, path);
        const LsCode back = load_code_file(path);
        CHECK(back.chips == code.chips);
        CHECK(back.c_part == code.c_part);
        CHECK(back.s_part == code.s_part);
        CHECK(back.gap == code.gap);
        CHECK(back.trailing_gap == code.trailing_gap);
        CHECK(back.id == code.id);
    }
    std::remove(path.c_str());
}

TEST_CASE("wave raw round trip") {
    std::mt19937 rng(7);
    std::vector<std::int16_t> words(777);
    for (auto& w : words) w = static_cast<std::int16_t>(rng());
    const std::string path = "test_wave_tmp.raw";
    write_wave_raw(words, path);
    CHECK(read_wave_raw(path) == words);
    std::remove(path.c_str());
}

TEST_CASE("mem file round trip") {
    std::mt19937 rng(8);
    std::vector<std::int16_t> words(321);
    for (auto& w : words) w = static_cast<std::int16_t>(rng());
    const std::string path = "test_mem_tmp.mem";
    write_mem_file(words, path);
    CHECK(read_mem_file(path) == words);
    std::remove(path.c_str());
}

TEST_CASE("profile csv") {
    const LsCodeSet set = code_set(expand(generate_pair(1), 0), 0, 2, 2);
    const CorrelationProfile p = corr_profile(set.codes[0], set.codes[0], -2, 2);
    const std::string path = "test_profile_tmp.csv";
    write_profile_csv(p, path);
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f);
    char line[64];
    REQUIRE(std::fgets(line, sizeof line, f));
    CHECK(std::string(line) == "lag,value\n");
    REQUIRE(std::fgets(line, sizeof line, f));
    CHECK(std::string(line) == "-2,0\n");
    REQUIRE(std::fgets(line, sizeof line, f));
    REQUIRE(std::fgets(line, sizeof line, f));
    CHECK(std::string(line) == "0,4\n");
    std::fclose(f);
    std::remove(path.c_str());
}
