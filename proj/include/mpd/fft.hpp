#pragma once

#include <complex>

namespace mpd::fft {

// Complex-to-complex transforms backed by FFTW with thread-local plan
// caches. Convention: unnormalized forward, 1/N (per axis product) on the
// inverse. in and out may alias.
void fft1(const std::complex<double>* in, std::complex<double>* out, int n, bool inverse);
void fft2(const std::complex<double>* in, std::complex<double>* out, int ny, int nx,
          bool inverse);

}  // namespace mpd::fft
