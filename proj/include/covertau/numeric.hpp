#ifndef COVERTAU_NUMERIC_HPP
#define COVERTAU_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace covertau {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline const Complex iu{0.0, 1.0};

/// Error type shared by all modules; the message carries the condition name.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Neumaier compensated accumulator; keeps lattice sums reproducible.
struct Kahan {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct KahanC {
  Kahan re, im;
  void add(Complex z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

inline double rel_err(Complex lhs, Complex rhs) {
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

/// Fold an angle difference into (-period/2, period/2].
inline double fold_phase(double diff, double period = 2.0 * pi) {
  double k = std::round(diff / period);
  return diff - k * period;
}

/// Distance between two phases measured modulo `period` (e.g. 2*pi/48 for
/// values defined up to 48th roots of unity).
inline double phase_dist_mod(double a, double b, double period) {
  return std::abs(fold_phase(a - b, period));
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace covertau

#endif
