#pragma once

// Skew-orthogonal companion of the Hermite polynomials: monic O_n orthogonal
// for exp(-x^2), S_n skew-orthogonal for the Gaussian sign-kernel product
// (no 1/2 prefactor), and the two closed three-point relations they satisfy.
// Everything here is exact rational arithmetic except the quadrature checks.

#include <utility>
#include <vector>

#include "freud/poly.hpp"
#include "freud/quadrature.hpp"

namespace freud {

struct HermiteFamilies {
    std::vector<Poly<Rational>> O;  // x O_n = O_{n+1} + (n/2) O_{n-1}
    std::vector<Poly<Rational>> S;  // S_2n = O_2n, S_{2n+1} = O_{2n+1} - n O_{2n-1}
};

HermiteFamilies build_hermite(int n_max);

// Exact residuals of the closed relations; both must be identically zero.
//   even: S_{2n+2} - (x^2 - 2n - 1/2) S_2n + n (n - 1/2) S_{2n-2}
//   odd:  2 (x^2 - 4n + 1) S_{2n+3} - (2x^4 - 3(1+4n)x^2 + 8n(2n+1) - 5) S_{2n+1}
//         + n (2n-1) (x^2 - 4n - 3) S_{2n-1}
std::pair<Poly<Rational>, Poly<Rational>> hermite_closed_residuals(const HermiteFamilies& fam,
                                                                   int n);

// Gaussian sign-kernel product <f, g> = iint f(x) g(y) sgn(y-x)
// exp(-x^2/2) exp(-y^2/2) dx dy, evaluated by quadrature.
Scalar hermite_skew_product(const Poly<Rational>& f, const Poly<Rational>& g, int bits = 256);

Poly<Scalar> to_scalar_poly(const Poly<Rational>& p);

}  // namespace freud
