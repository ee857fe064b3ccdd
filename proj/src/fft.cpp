#include "lscdm/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lscdm {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<std::complex<double>>& x, bool inverse) {
    const std::size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: size must be a power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang =
            (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = x[i + k];
                const std::complex<double> v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& c : x) c *= inv;
    }
}

std::vector<std::complex<double>> rfft(const std::vector<double>& x,
                                       std::size_t nfft) {
    std::vector<std::complex<double>> c(nfft);
    for (std::size_t i = 0; i < x.size() && i < nfft; ++i) c[i] = x[i];
    fft(c);
    return c;
}

std::vector<double> xcorr_fft(const std::vector<double>& a,
                              const std::vector<double>& b,
                              std::size_t max_lag) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("xcorr_fft: empty input");
    const std::size_t nfft = next_pow2(a.size() + b.size() + max_lag);
    auto fa = rfft(a, nfft);
    const auto fb = rfft(b, nfft);
    for (std::size_t i = 0; i < nfft; ++i) fa[i] *= std::conj(fb[i]);
    fft(fa, true);
    std::vector<double> out(max_lag + 1);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) out[lag] = fa[lag].real();
    return out;
}

}  // namespace lscdm
