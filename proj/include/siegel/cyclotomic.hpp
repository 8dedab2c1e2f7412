#pragma once

#include <array>
#include <complex>
#include <string>

namespace siegel {

/// Exact element a₀ + a₁ζ + a₂ζ² + a₃ζ³ of Z[ζ₈], ζ = e^{2πi/8}, with ζ⁴ = -1.
class Cyclotomic8 {
 public:
  constexpr Cyclotomic8() = default;
  constexpr explicit Cyclotomic8(long a0, long a1 = 0, long a2 = 0, long a3 = 0) : c_{a0, a1, a2, a3} {}

  /// ζ^k for any integer k.
  static Cyclotomic8 zeta(long k);
  static Cyclotomic8 i_pow(long k) { return zeta(2 * k); }

  const std::array<long, 4>& coefficients() const { return c_; }
  bool is_zero() const { return c_ == std::array<long, 4>{0, 0, 0, 0}; }
  /// k with this == ζ^k, or -1 if this is not an 8th root of unity.
  int root_index() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic8& operator+=(const Cyclotomic8& o);
  Cyclotomic8& operator-=(const Cyclotomic8& o);
  Cyclotomic8& operator*=(const Cyclotomic8& o);
  friend Cyclotomic8 operator+(Cyclotomic8 a, const Cyclotomic8& b) { return a += b; }
  friend Cyclotomic8 operator-(Cyclotomic8 a, const Cyclotomic8& b) { return a -= b; }
  friend Cyclotomic8 operator*(Cyclotomic8 a, const Cyclotomic8& b) { return a *= b; }
  friend Cyclotomic8 operator-(const Cyclotomic8& a) { return Cyclotomic8() - a; }
  friend bool operator==(const Cyclotomic8& a, const Cyclotomic8& b) = default;

 private:
  std::array<long, 4> c_{0, 0, 0, 0};
};

}  // namespace siegel
