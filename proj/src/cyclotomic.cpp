#include "siegel/cyclotomic.hpp"

#include <cmath>
#include <sstream>

namespace siegel {

Cyclotomic8 Cyclotomic8::zeta(long k) {
  k %= 8;
  if (k < 0) k += 8;
  Cyclotomic8 r;
  r.c_[k % 4] = k < 4 ? 1 : -1;
  return r;
}

int Cyclotomic8::root_index() const {
  for (int k = 0; k < 8; ++k)
    if (*this == zeta(k)) return k;
  return -1;
}

std::complex<double> Cyclotomic8::to_complex() const {
  std::complex<double> s = 0;
  for (int k = 0; k < 4; ++k) s += static_cast<double>(c_[k]) * std::polar(1.0, M_PI * k / 4.0);
  return s;
}

std::string Cyclotomic8::to_string() const {
  static const char* names[] = {"", "z", "z^2", "z^3"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const long a = c_[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    const long m = a < 0 ? -a : a;
    if (k == 0) os << m;
    else if (m == 1) os << names[k];
    else os << m << "*" << names[k];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic8& Cyclotomic8::operator+=(const Cyclotomic8& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic8& Cyclotomic8::operator-=(const Cyclotomic8& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic8& Cyclotomic8::operator*=(const Cyclotomic8& o) {
  std::array<long, 4> r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const long p = c_[i] * o.c_[j];
      if (i + j < 4)
        r[i + j] += p;
      else
        r[i + j - 4] -= p;  // ζ⁴ = -1
    }
  c_ = r;
  return *this;
}

}  // namespace siegel
