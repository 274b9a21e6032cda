#include "cooc/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cooc {
namespace {

// Direct terms are taken until the base reaches tail_start(s). The first
// omitted Euler-Maclaurin term is about ((s+3)/a)^7 / 1.2e6 relative to the
// sum, which stays under 1e-12 once a >= 8(s+3).
double tail_start(double s) { return std::max(24.0, 8.0 * (s + 3.0)); }

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: s must be > 1");
  if (!(q >= 1.0)) throw std::domain_error("hurwitz_zeta: q must be >= 1");

  double sum = 0.0;
  double base = q;
  const double start = tail_start(s);
  for (; base < start; base += 1.0) sum += std::pow(base, -s);

  const double a = base;
  const double a_s = std::pow(a, -s);
  const double inv_a2 = 1.0 / (a * a);
  double tail = a * a_s / (s - 1.0) + 0.5 * a_s;
  // B2/2!, B4/4!, B6/6! with the rising factorial of s.
  double rising = s;
  double power = a_s / a;
  tail += rising * power / 12.0;
  rising *= (s + 1.0) * (s + 2.0);
  power *= inv_a2;
  tail -= rising * power / 720.0;
  rising *= (s + 3.0) * (s + 4.0);
  power *= inv_a2;
  tail += rising * power / 30240.0;
  return sum + tail;
}

}  // namespace cooc
