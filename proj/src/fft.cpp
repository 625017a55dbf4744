#include "nlkg/fft.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace nlkg {

namespace {

// Forward-sign twiddles exp(-2*pi*i*j/n), j < n/2, shared across threads.
const std::vector<Complex>& twiddles(int n) {
  static std::mutex mtx;
  static std::unordered_map<int, std::unique_ptr<std::vector<Complex>>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<std::vector<Complex>>(n / 2);
    for (int j = 0; j < n / 2; ++j) {
      const double a = -2.0 * kPi * j / n;
      (*t)[j] = Complex(std::cos(a), std::sin(a));
    }
    slot = std::move(t);
  }
  return *slot;
}

// In-place radix-2 along one strided line. dir = -1 forward, +1 inverse.
void line_fft(Complex* a, int n, Eigen::Index stride, int dir, const std::vector<Complex>& tw) {
  // bit-reversal permutation
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i * stride], a[j * stride]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const int half = len >> 1;
    const int step = n / len;
    for (int i = 0; i < n; i += len) {
      for (int j = 0; j < half; ++j) {
        Complex w = tw[j * step];
        if (dir > 0) w = std::conj(w);
        Complex* lo = a + (i + j) * stride;
        Complex* hi = a + (i + j + half) * stride;
        const Complex u = *lo;
        const Complex v = *hi * w;
        *lo = u + v;
        *hi = u - v;
      }
    }
  }
}

ComplexArray transform(const Grid& g, ComplexArray data, int dir) {
  const int n = g.n;
  const auto& tw = twiddles(n);
  // Row-major layout: axis a has stride n^(dim-1-a).
  Eigen::Index stride = 1;
  for (int a = g.dim - 1; a >= 0; --a) {
    const Eigen::Index block = stride * n;       // contiguous block containing the axis
    const Eigen::Index nblocks = g.size() / block;
    for (Eigen::Index b = 0; b < nblocks; ++b)
      for (Eigen::Index off = 0; off < stride; ++off)
        line_fft(data.data() + b * block + off, n, stride, dir, tw);
    stride = block;
  }
  data *= 1.0 / std::sqrt(static_cast<double>(g.size()));
  return data;
}

}  // namespace

ComplexArray fft_forward(const Grid& g, const ComplexArray& x) {
  if (x.size() != g.size()) throw std::invalid_argument("fft_forward: size mismatch");
  return transform(g, x, -1);
}

ComplexArray fft_inverse(const Grid& g, const ComplexArray& x) {
  if (x.size() != g.size()) throw std::invalid_argument("fft_inverse: size mismatch");
  return transform(g, x, +1);
}

ComplexArray fft_forward(const Grid& g, const RealArray& x) {
  return fft_forward(g, x.cast<Complex>().eval());
}

RealArray fft_inverse_real(const Grid& g, const ComplexArray& x, double imag_tol) {
  ComplexArray z = fft_inverse(g, x);
  const double residue = z.imag().abs().maxCoeff();
  if (!(residue < imag_tol))
    throw std::runtime_error("fft_inverse_real: imaginary residue " + std::to_string(residue) +
                             " exceeds tolerance");
  return z.real();
}

}  // namespace nlkg
