#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "lscdm/correlation.hpp"

using namespace lscdm;

namespace {

LsCodeSet layer0_set(int k, long long gap) {
    return code_set(expand(generate_pair(k), 0), 0, gap, gap);
}

// literal mod-N evaluation, independent of the library path
long long periodic_oracle(const LsCode& a, const LsCode& b, long long tau) {
    const long long n = static_cast<long long>(a.part_length());
    long long sum = 0;
    for (long long i = 0; i < n; ++i) {
        long long j = (i + tau) % n;
        if (j < 0) j += n;
        sum += static_cast<long long>(a.c_part[i]) * b.c_part[j];
        sum += static_cast<long long>(a.s_part[i]) * b.s_part[j];
    }
    return sum;
}

}  // namespace

TEST_CASE("combined_corr endpoints") {
    const LsCodeSet set = layer0_set(1, 2);
    const LsCode& base = set.codes[0];
    const LsCode& mte = set.codes[1];
    CHECK(combined_corr(base, base, 0) == 4);  // 2N
    CHECK(combined_corr(mte, mte, 0) == 4);
    CHECK(combined_corr(base, mte, 0) == 0);
    CHECK(combined_corr(base, mte, 1) == 0);  // 1 + (-1)
}

TEST_CASE("periodic mode matches the literal mod-N oracle") {
    for (int k = 1; k <= 4; ++k) {
        const LsCodeSet set = layer0_set(k, 3);
        const long long n = 1LL << k;
        for (const LsCode& a : set.codes)
            for (const LsCode& b : set.codes)
                for (long long tau = -n; tau <= n; ++tau)
                    CHECK(combined_corr(a, b, tau, CorrMode::periodic) ==
                          periodic_oracle(a, b, tau));
    }
}

TEST_CASE("corr_profile small cases") {
    const LsCodeSet set = layer0_set(1, 2);
    const CorrelationProfile auto1 = corr_profile(set.codes[0], set.codes[0], -3, 3);
    CHECK(auto1.values == std::vector<long long>{0, 0, 0, 4, 0, 0, 0});
    CHECK(auto1.is_auto);

    const CorrelationProfile cross = corr_profile(set.codes[0], set.codes[1], -3, 3);
    for (long long v : cross.values) CHECK(v == 0);
    CHECK_FALSE(cross.is_auto);

    const CorrelationProfile empty = corr_profile(set.codes[0], set.codes[0], 3, -3);
    CHECK(empty.values.empty());
}

TEST_CASE("aperiodic symmetry R_ij(t) = R_ji(-t)") {
    const LsCodeSet set = layer0_set(3, 4);
    for (const LsCode& a : set.codes)
        for (const LsCode& b : set.codes)
            for (long long tau = -10; tau <= 10; ++tau)
                CHECK(combined_corr(a, b, tau) == combined_corr(b, a, -tau));
}

TEST_CASE("parts correlation equals full-chip correlation inside the gap") {
    for (int k = 1; k <= 4; ++k) {
        for (long long gap : {1LL, 3LL, 1LL << k}) {
            const LsCodeSet set = layer0_set(k, gap);
            for (const LsCode& a : set.codes)
                for (const LsCode& b : set.codes)
                    for (long long tau = -gap; tau <= gap; ++tau)
                        CHECK(combined_corr(a, b, tau) == chip_corr(a, b, tau));
        }
    }
}

TEST_CASE("measure_ifw definitions") {
    LsCodeSet set = layer0_set(2, 100);
    CorrelationProfile p = corr_profile(set.codes[0], set.codes[1], -100, 100);
    CHECK(measure_ifw(p).width == 100);  // all-zero cross profile
    CHECK(std::isinf(measure_ifw(p).dynamic_range_db));

    // synthetic: first nonzero at |tau| = 4000
    CorrelationProfile synth;
    synth.lag_min = -4200;
    synth.lag_max = 4200;
    synth.is_auto = true;
    synth.values.assign(8401, 0);
    synth.values[4200] = 8192;         // tau = 0
    synth.values[4200 + 4000] = -12;   // tau = 4000
    CHECK(measure_ifw(synth).width == 4000);

    // nonzero right at tau = 1 leaves no window
    CorrelationProfile tight;
    tight.lag_min = -2;
    tight.lag_max = 2;
    tight.is_auto = true;
    tight.values = {0, 0, 4, 1, 0};
    CHECK(measure_ifw(tight).width == 1);
}

TEST_CASE("auto peak is 2N for every generated code") {
    for (int k = 0; k <= 8; ++k) {
        const LsCodeSet set = layer0_set(k, 5);
        for (const LsCode& c : set.codes)
            CHECK(combined_corr(c, c, 0) == 2LL << k);
    }
}

TEST_CASE("correlation_report aggregates") {
    const LsCodeSet set = layer0_set(4, 16);
    const CorrelationReport rep = correlation_report(set, 16);
    CHECK(rep.pairs.size() == 3);  // (0,0), (0,1), (1,1)
    CHECK(rep.min_ifw == 16);
    for (const PairReport& pr : rep.pairs) CHECK(pr.ifw.width == 16);
    CHECK(rep.pairs[0].peak == 32);

    LsCodeSet single;
    single.codes.push_back(set.codes[0]);
    single.seed_length = set.seed_length;
    const CorrelationReport solo = correlation_report(single, 8);
    CHECK(solo.pairs.size() == 1);  // auto only
    CHECK(solo.pairs[0].peak == 32);

    CHECK_THROWS_AS(correlation_report(LsCodeSet{}, 8), std::invalid_argument);
}

TEST_CASE("window grows with seed length at gap = seed length") {
    // full-chip windows: the gap bounds them, larger seeds allow larger gaps
    const LsCodeSet small = layer0_set(2, 4);
    const LsCodeSet large = layer0_set(4, 16);
    auto min_width = [](const LsCodeSet& set) {
        long long w = 1LL << 60;
        const long long reach = static_cast<long long>(set.codes[0].chips.size());
        for (std::size_t i = 0; i < set.codes.size(); ++i)
            for (std::size_t j = i; j < set.codes.size(); ++j)
                w = std::min(w, measure_ifw(chip_corr_profile(
                                    set.codes[i], set.codes[j], -reach, reach))
                                    .width);
        return w;
    };
    CHECK(min_width(large) > min_width(small));
}
