#include "lscdm/correlation.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace lscdm {

long long combined_corr(const LsCode& a, const LsCode& b, long long lag,
                        CorrMode mode) {
    if (a.part_length() != b.part_length())
        throw std::invalid_argument("combined_corr: part lengths differ");
    if (mode == CorrMode::aperiodic) {
        return aperiodic_xcorr(a.c_part, b.c_part, lag) +
               aperiodic_xcorr(a.s_part, b.s_part, lag);
    }
    const long long n = static_cast<long long>(a.part_length());
    long long sum = 0;
    for (long long i = 0; i < n; ++i) {
        const long long j = ((i + lag) % n + n) % n;
        sum += static_cast<long long>(a.c_part[i]) * b.c_part[j];
        sum += static_cast<long long>(a.s_part[i]) * b.s_part[j];
    }
    return sum;
}

long long chip_corr(const LsCode& a, const LsCode& b, long long lag) {
    return aperiodic_xcorr(a.chips, b.chips, lag);
}

namespace {

CorrelationProfile make_profile(const LsCode& a, const LsCode& b,
                                long long lag_min, long long lag_max,
                                CorrMode mode, bool on_chips) {
    if (lag_min > lag_max)
        return {lag_min, lag_max, {}, mode, a.id == b.id, a.id, b.id};
    CorrelationProfile p;
    p.lag_min = lag_min;
    p.lag_max = lag_max;
    p.mode = mode;
    p.is_auto = a.id == b.id && a.chips == b.chips;
    p.id_a = a.id;
    p.id_b = b.id;
    p.values.reserve(lag_max - lag_min + 1);
    for (long long lag = lag_min; lag <= lag_max; ++lag)
        p.values.push_back(on_chips ? chip_corr(a, b, lag)
                                    : combined_corr(a, b, lag, mode));
    return p;
}

}  // namespace

CorrelationProfile corr_profile(const LsCode& a, const LsCode& b,
                                long long lag_min, long long lag_max,
                                CorrMode mode) {
    return make_profile(a, b, lag_min, lag_max, mode, false);
}

CorrelationProfile chip_corr_profile(const LsCode& a, const LsCode& b,
                                     long long lag_min, long long lag_max) {
    return make_profile(a, b, lag_min, lag_max, CorrMode::aperiodic, true);
}

IfwMeasurement measure_ifw(const CorrelationProfile& profile) {
    if (profile.values.empty()) return {0, 0.0};
    if (profile.lag_min > 0 || profile.lag_max < 0)
        throw std::invalid_argument("measure_ifw: profile must cover lag 0");
    IfwMeasurement m;
    const long long reach = std::min(-profile.lag_min, profile.lag_max);
    long long width = reach;  // all examined lags clean
    if (!profile.is_auto && profile.at(0) != 0) {
        width = 0;
    } else {
        for (long long tau = 1; tau <= reach; ++tau) {
            if (profile.at(tau) != 0 || profile.at(-tau) != 0) {
                width = tau;
                break;
            }
        }
    }
    m.width = width;
    long long peak = 0;
    for (long long v : profile.values) peak = std::max(peak, std::llabs(v));
    long long worst_in = 0;
    for (long long tau = 1; tau < width; ++tau) {
        worst_in = std::max(worst_in, std::llabs(profile.at(tau)));
        worst_in = std::max(worst_in, std::llabs(profile.at(-tau)));
    }
    m.dynamic_range_db =
        worst_in == 0
            ? std::numeric_limits<double>::infinity()
            : 20.0 * std::log10(static_cast<double>(peak) / worst_in);
    return m;
}

CorrelationReport correlation_report(const LsCodeSet& set, long long max_lag,
                                     CorrMode mode) {
    if (set.codes.empty())
        throw std::invalid_argument("correlation_report: empty code set");
    CorrelationReport rep;
    rep.min_ifw = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < set.codes.size(); ++i) {
        for (std::size_t j = i; j < set.codes.size(); ++j) {
            const CorrelationProfile p =
                corr_profile(set.codes[i], set.codes[j], -max_lag, max_lag, mode);
            PairReport pr;
            pr.id_a = set.codes[i].id;
            pr.id_b = set.codes[j].id;
            pr.ifw = measure_ifw(p);
            pr.peak = std::llabs(p.at(0));
            for (long long tau = -max_lag; tau <= max_lag; ++tau) {
                if (std::llabs(tau) >= pr.ifw.width && !(i == j && tau == 0))
                    pr.worst_outside = std::max(pr.worst_outside, std::llabs(p.at(tau)));
            }
            rep.pairs.push_back(pr);
            rep.min_ifw = std::min(rep.min_ifw, pr.ifw.width);
        }
    }
    return rep;
}

}  // namespace lscdm
