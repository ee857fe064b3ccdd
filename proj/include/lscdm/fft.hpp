#ifndef LSCDM_FFT_HPP
#define LSCDM_FFT_HPP

#include <complex>
#include <vector>

namespace lscdm {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& x, bool inverse = false);

std::size_t next_pow2(std::size_t n);

// FFT of a real sequence zero-padded to nfft (power of two).
std::vector<std::complex<double>> rfft(const std::vector<double>& x,
                                       std::size_t nfft);

// corr[lag] = sum_n a[n+lag]*b[n] for lag = 0..max_lag, via FFT.
std::vector<double> xcorr_fft(const std::vector<double>& a,
                              const std::vector<double>& b,
                              std::size_t max_lag);

}  // namespace lscdm

#endif
