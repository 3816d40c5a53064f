#include <doctest.h>

#include "freud/hermite.hpp"

using namespace freud;

TEST_CASE("low-degree members from the three-point recurrence") {
    HermiteFamilies fam = build_hermite(4);
    // O_3 = x^3 - (3/2) x
    CHECK(fam.O.at(3).coeff(3) == Rational(1));
    CHECK(fam.O.at(3).coeff(1) == Rational(-3, 2));
    CHECK(fam.O.at(3).coeff(0) == 0);
    // S_3 = O_3 - O_1 = x^3 - (5/2) x
    CHECK(fam.S.at(3).coeff(3) == Rational(1));
    CHECK(fam.S.at(3).coeff(1) == Rational(-5, 2));
    // even members coincide with the orthogonal ones
    CHECK(max_abs_coeff(fam.S.at(6) - fam.O.at(6)) == 0);
}

TEST_CASE("closed relations hold exactly in rational arithmetic") {
    HermiteFamilies fam = build_hermite(15);
    for (int n = 0; n <= 15; ++n) {
        auto [even, odd] = hermite_closed_residuals(fam, n);
        CHECK(even.is_zero());
        CHECK(odd.is_zero());
    }
}

TEST_CASE("skew-Gaussian pairing structure by quadrature") {
    set_working_precision(256);
    HermiteFamilies fam = build_hermite(5);
    // <S_0, S_2> = 0 (same parity)
    Scalar v02 = hermite_skew_product(fam.S.at(0), fam.S.at(2));
    Scalar diag1 = hermite_skew_product(fam.S.at(2), fam.S.at(3));
    CHECK(abs(v02) < Scalar("1e-12") * abs(diag1));
    CHECK(abs(diag1) > Scalar("1e-6"));
    // off-diagonal even-odd pair vanishes, diagonal does not
    Scalar off = hermite_skew_product(fam.S.at(0), fam.S.at(3));
    CHECK(abs(off) < Scalar("1e-12") * abs(diag1));
    for (int i = 0; i <= 3; ++i) {
        Scalar d = hermite_skew_product(fam.S.at(static_cast<size_t>(2 * i)),
                                        fam.S.at(static_cast<size_t>(2 * i) + 1));
        CHECK(d > 0);
    }
}
