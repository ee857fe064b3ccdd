#include "lscdm/golay.hpp"

#include <algorithm>
#include <stdexcept>

namespace lscdm {

long long aperiodic_xcorr(const Seq& a, const Seq& b, long long lag) {
    const long long na = static_cast<long long>(a.size());
    const long long nb = static_cast<long long>(b.size());
    const long long n_lo = std::max<long long>(0, -lag);
    const long long n_hi = std::min(na, nb - lag);  // exclusive
    long long sum = 0;
    for (long long n = n_lo; n < n_hi; ++n)
        sum += static_cast<long long>(a[n]) * b[n + lag];
    return sum;
}

GolayPair generate_pair(int k) {
    if (k < 0) throw std::invalid_argument("generate_pair: k must be >= 0");
    if (k > 16) throw std::length_error("generate_pair: k > 16 (length limit 65536)");
    Seq c{1};
    Seq s{1};
    for (int step = 0; step < k; ++step) {
        Seq nc(c);
        nc.insert(nc.end(), s.begin(), s.end());
        Seq ns(c);
        for (int v : s) ns.push_back(-v);
        c = std::move(nc);
        s = std::move(ns);
    }
    return {std::move(c), std::move(s)};
}

GolayPair mate(const GolayPair& p) {
    Seq c(p.s.rbegin(), p.s.rend());
    Seq s;
    s.reserve(p.c.size());
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) s.push_back(-*it);
    return {std::move(c), std::move(s)};
}

ComplementarityReport verify_complementary(const GolayPair& p) {
    ComplementarityReport r;
    if (p.c.size() != p.s.size())
        throw std::invalid_argument("verify_complementary: part lengths differ");
    const long long n = static_cast<long long>(p.length());
    r.peak = aperiodic_xcorr(p.c, p.c, 0) + aperiodic_xcorr(p.s, p.s, 0);
    r.is_complementary = true;
    for (long long tau = 1; tau < n; ++tau) {
        const long long v =
            aperiodic_xcorr(p.c, p.c, tau) + aperiodic_xcorr(p.s, p.s, tau);
        if (std::abs(v) > std::abs(r.worst_value)) {
            r.worst_value = v;
            r.worst_lag = tau;
        }
        if (v != 0) r.is_complementary = false;
    }
    return r;
}

}  // namespace lscdm
