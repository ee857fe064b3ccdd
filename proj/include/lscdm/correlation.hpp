#ifndef LSCDM_CORRELATION_HPP
#define LSCDM_CORRELATION_HPP

#include <vector>

#include "lscdm/lscode.hpp"

namespace lscdm {

enum class CorrMode { aperiodic, periodic };

// Combined C+S correlation of two LS codes at one lag.
//   aperiodic: sum of aperiodic part correlations (no wraparound);
//              the variant behind the zero-window claims.
//   periodic:  (n+tau) mod N indexing on both parts.
// Exact integers.
long long combined_corr(const LsCode& a, const LsCode& b, long long lag,
                        CorrMode mode = CorrMode::aperiodic);

// Aperiodic correlation of the assembled ternary chip sequences; equals
// combined_corr for |lag| <= gap.
long long chip_corr(const LsCode& a, const LsCode& b, long long lag);

struct CorrelationProfile {
    long long lag_min = 0;
    long long lag_max = 0;
    std::vector<long long> values;  // one per lag, lag_min..lag_max
    CorrMode mode = CorrMode::aperiodic;
    bool is_auto = false;
    CodeId id_a, id_b;

    long long at(long long lag) const { return values[lag - lag_min]; }
};

CorrelationProfile corr_profile(const LsCode& a, const LsCode& b,
                                long long lag_min, long long lag_max,
                                CorrMode mode = CorrMode::aperiodic);

// Same lag sweep on the full assembled chips.
CorrelationProfile chip_corr_profile(const LsCode& a, const LsCode& b,
                                     long long lag_min, long long lag_max);

struct IfwMeasurement {
    long long width = 0;            // first nonzero |lag|, capped at max lag
    double dynamic_range_db = 0.0;  // peak over worst in-window value; inf when clean
};

// Profile must cover lag 0; lag 0 itself is ignored for auto profiles.
IfwMeasurement measure_ifw(const CorrelationProfile& profile);

struct PairReport {
    CodeId id_a, id_b;
    IfwMeasurement ifw;
    long long peak = 0;               // |value| at lag 0
    long long worst_outside = 0;      // max |value| at |lag| >= width
};

struct CorrelationReport {
    std::vector<PairReport> pairs;  // all unordered pairs incl. self
    long long min_ifw = 0;
};

CorrelationReport correlation_report(const LsCodeSet& set, long long max_lag,
                                     CorrMode mode = CorrMode::aperiodic);

}  // namespace lscdm

#endif
