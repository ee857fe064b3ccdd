#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <random>

#include "lscdm/channel.hpp"

using namespace lscdm;

namespace {

std::array<IqWaveform, 2> random_tx(std::mt19937& rng, std::size_t len) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<IqWaveform, 2> tx;
    for (auto& w : tx) {
        w.sample_rate = 30.72e6;
        w.samples.resize(len);
        for (auto& v : w.samples) v = g(rng);
    }
    return tx;
}

}  // namespace

TEST_CASE("apply_mimo identity and shift") {
    std::mt19937 rng(1);
    const auto tx = random_tx(rng, 64);

    MimoChannel identity;
    identity.taps[0][0] = {{0, 1.0}};
    identity.taps[1][1] = {{0, 1.0}};
    const auto rx = apply_mimo(identity, tx);
    for (int r = 0; r < 2; ++r) {
        REQUIRE(rx[r].samples.size() == 64);
        for (std::size_t n = 0; n < 64; ++n)
            CHECK(rx[r].samples[n] == tx[r].samples[n]);
    }

    MimoChannel delayed;
    delayed.taps[0][0] = {{5, 1.0}};
    const auto rxd = apply_mimo(delayed, tx);
    REQUIRE(rxd[0].samples.size() == 69);
    for (std::size_t n = 0; n < 5; ++n) CHECK(rxd[0].samples[n] == 0.0);
    for (std::size_t n = 0; n < 64; ++n)
        CHECK(rxd[0].samples[n + 5] == tx[0].samples[n]);
    for (double v : rxd[1].samples) CHECK(v == 0.0);
}

TEST_CASE("apply_mimo two-tap superposition") {
    std::mt19937 rng(2);
    const auto tx = random_tx(rng, 200);
    MimoChannel ch;
    ch.taps[0][0] = {{0, 1.0}, {100, 0.5}};
    const auto rx = apply_mimo(ch, tx);
    for (std::size_t n = 0; n < rx[0].samples.size(); ++n) {
        double expect = 0.0;
        if (n < 200) expect += tx[0].samples[n];
        if (n >= 100 && n - 100 < 200) expect += 0.5 * tx[0].samples[n - 100];
        CHECK(rx[0].samples[n] == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("apply_mimo linearity and cross-transmitter superposition") {
    std::mt19937 rng(3);
    const auto x = random_tx(rng, 128);
    const auto y = random_tx(rng, 128);
    MimoChannel ch;
    ch.taps[0][0] = {{0, 0.7}, {13, -0.3}};
    ch.taps[0][1] = {{7, 0.9}};
    ch.taps[1][0] = {{2, -0.5}};
    ch.taps[1][1] = {{0, 1.0}, {40, 0.25}};

    std::array<IqWaveform, 2> combo = x;
    for (int t = 0; t < 2; ++t)
        for (std::size_t n = 0; n < 128; ++n)
            combo[t].samples[n] = 2.0 * x[t].samples[n] - 3.0 * y[t].samples[n];
    const auto rx_combo = apply_mimo(ch, combo);
    const auto rx_x = apply_mimo(ch, x);
    const auto rx_y = apply_mimo(ch, y);
    for (int r = 0; r < 2; ++r)
        for (std::size_t n = 0; n < rx_combo[r].samples.size(); ++n)
            CHECK(rx_combo[r].samples[n] ==
                  doctest::Approx(2.0 * rx_x[r].samples[n] -
                                  3.0 * rx_y[r].samples[n])
                      .epsilon(1e-12));

    // both transmitters at once equals the sum of single-transmitter runs
    std::array<IqWaveform, 2> only0 = x, only1 = x;
    std::fill(only0[1].samples.begin(), only0[1].samples.end(), 0.0);
    std::fill(only1[0].samples.begin(), only1[0].samples.end(), 0.0);
    const auto rx0 = apply_mimo(ch, only0);
    const auto rx1 = apply_mimo(ch, only1);
    for (int r = 0; r < 2; ++r)
        for (std::size_t n = 0; n < rx_x[r].samples.size(); ++n)
            CHECK(rx_x[r].samples[n] ==
                  doctest::Approx(rx0[r].samples[n] + rx1[r].samples[n])
                      .epsilon(1e-12));
}

TEST_CASE("apply_mimo input validation") {
    std::mt19937 rng(4);
    auto tx = random_tx(rng, 32);
    tx[1].sample_rate = 1.0;
    MimoChannel ch;
    CHECK_THROWS_AS(apply_mimo(ch, tx), std::invalid_argument);
    tx[1].sample_rate = tx[0].sample_rate;
    tx[1].samples.pop_back();
    CHECK_THROWS_AS(apply_mimo(ch, tx), std::invalid_argument);

    MimoChannel bad;
    bad.taps[0][0] = {{-1, 1.0}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.taps[0][0] = {{0, 11.0}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("add_awgn determinism and scaling") {
    std::mt19937 rng(5);
    auto tx = random_tx(rng, 1 << 20);
    const IqWaveform& w = tx[0];

    const IqWaveform same = add_awgn(w, {std::numeric_limits<double>::infinity(), 9});
    CHECK(same.samples == w.samples);

    const IqWaveform n1 = add_awgn(w, {20.0, 42});
    const IqWaveform n2 = add_awgn(w, {20.0, 42});
    CHECK(n1.samples == n2.samples);
    const IqWaveform n3 = add_awgn(w, {20.0, 43});
    CHECK(n1.samples != n3.samples);

    // noise power within 2% of 1% of signal power at 20 dB over 2^20 samples
    double sig = 0.0, noise = 0.0;
    for (std::size_t i = 0; i < w.samples.size(); ++i) {
        sig += w.samples[i] * w.samples[i];
        const double d = n1.samples[i] - w.samples[i];
        noise += d * d;
    }
    CHECK(noise / sig == doctest::Approx(0.01).epsilon(0.02));

    IqWaveform silent;
    silent.sample_rate = 1.0;
    silent.samples.assign(16, 0.0);
    CHECK_THROWS_AS(add_awgn(silent, {20.0, 1}), std::invalid_argument);
}

TEST_CASE("validate_delay_spread boundary") {
    MimoChannel ch;
    CHECK(validate_delay_spread(ch, 4000, 4).empty());  // max_delay 0
    ch.taps[0][0] = {{4000 * 4 - 1, 1.0}};
    CHECK(validate_delay_spread(ch, 4000, 4).empty());  // just below
    ch.taps[0][0] = {{4000 * 4, 1.0}};
    CHECK(validate_delay_spread(ch, 4000, 4).size() == 1);  // boundary warns
}

TEST_CASE("channel file round trip and errors") {
    MimoChannel ch;
    ch.taps[0][0] = {{0, 1.0}, {100, -0.5}};
    ch.taps[1][0] = {{3, 0.25}};
    ch.taps[1][1] = {{7, 2.0}};
    const std::string path = "test_channel_tmp.txt";
    save_channel_file(ch, path);
    const MimoChannel back = load_channel_file(path);
    for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t) {
            REQUIRE(back.taps[r][t].size() == ch.taps[r][t].size());
            for (std::size_t i = 0; i < ch.taps[r][t].size(); ++i) {
                CHECK(back.taps[r][t][i].delay == ch.taps[r][t][i].delay);
                CHECK(back.taps[r][t][i].gain == ch.taps[r][t][i].gain);
            }
        }
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_channel_file("does_not_exist.txt"), std::runtime_error);
    {
        std::FILE* f = std::fopen(path.c_str(), "w");
        std::fputs("tap 2 0 0 1.0\n", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(load_channel_file(path), std::runtime_error);
    std::remove(path.c_str());
}
