#pragma once

#include <complex>

namespace dskg {

using cplx = std::complex<double>;

enum class MassConvention { imaginary_mass, real_mass };

/// Curved mass M of u_tt - e^{-2t} A u - M^2 u = f.
///
/// The real-mass equation (+m^2 u) is the same operator with M = -i m, so a
/// physical mass is stored in that rotated form and tagged accordingly.
struct Mass {
  cplx value{0.0, 0.0};
  MassConvention convention = MassConvention::imaginary_mass;

  static Mass curved(cplx m);
  static Mass curved(double re, double im = 0.0) { return curved(cplx{re, im}); }
  static Mass physical(double m);

  cplx squared() const { return value * value; }

  /// M real or purely imaginary: every kernel and M^2 are then real.
  bool is_real_or_imaginary() const {
    return value.imag() == 0.0 || value.real() == 0.0;
  }
};

}  // namespace dskg
