#ifndef LSCDM_GOLAY_HPP
#define LSCDM_GOLAY_HPP

#include <cstdint>
#include <vector>

namespace lscdm {

// Chip sequence over {-1, 0, +1}. Bipolar sequences never contain 0.
using Seq = std::vector<int>;

// Golay complementary pair: aperiodic ACFs of c and s sum to zero at
// every nonzero lag and to 2N at lag zero.
struct GolayPair {
    Seq c;
    Seq s;
    std::size_t length() const { return c.size(); }
};

struct ComplementarityReport {
    bool is_complementary = false;
    long long worst_lag = 0;
    long long worst_value = 0;
    long long peak = 0;  // ACF sum at lag 0
};

// sum_n a[n]*b[n+lag] over indices where both are in range. Exact
// integer arithmetic; empty overlap gives 0.
long long aperiodic_xcorr(const Seq& a, const Seq& b, long long lag);

// Recursive doubling from seed c=(+1), s=(+1): (c,s) -> (c|s, c|-s).
// Length 2^k. Throws std::length_error for k > 16.
GolayPair generate_pair(int k);

// (reverse(s), -reverse(c)). Cross-correlation sums of a pair with its
// mate are zero at every lag.
GolayPair mate(const GolayPair& p);

// Exhaustive ACF-sum check over lags 1..N-1.
ComplementarityReport verify_complementary(const GolayPair& p);

}  // namespace lscdm

#endif
