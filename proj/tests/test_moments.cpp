#include <doctest.h>

#include "freud/moments.hpp"

using namespace freud;

// frozen from the Gamma oracle (see test_numerics.cpp)
static const char* kM0T0 = "1.524381187466075842517428560520753138876";
static const char* kM2T0 = "0.3643185653536904339826538387276947827139";
static const char* kM4T0 = "0.1905476484332594803146785700650941423595";  // m0/8

namespace {

// Independent 2-D oracle for the skew moments: nested interval quadrature of
//   mu_{i,j} = (A_{i,j} - A_{j,i})/2,  A_{i,j} = int x^i w(x) (int_x^X y^j w dy) dx,
// never touching the cumulative-reduction path.
Scalar skew_moment_2d_oracle(const WeightSpec& spec, int i, int j) {
    QuadratureConfig outer = spec.quad;
    outer.target_rel_tol = Scalar("1e-30");
    QuadratureConfig inner = outer;
    auto A = [&](int a, int b) {
        return integrate(
            [&](const Scalar& x) {
                Scalar tail = integrate(
                    [&](const Scalar& y) { return pow(y, b) * freud_w(spec, y); }, x,
                    outer.domain_cut, inner);
                return pow(x, a) * freud_w(spec, x) * tail;
            },
            outer);
    };
    return (A(i, j) - A(j, i)) / 2;
}

}  // namespace

TEST_CASE("symmetric moments at t = 0 match the Gamma oracle") {
    set_working_precision(256);
    WeightSpec spec = make_weight_spec(Scalar(0));
    CHECK(abs(sym_moment(spec, 0) - Scalar(kM0T0)) < Scalar("1e-38"));
    CHECK(abs(sym_moment(spec, 2) - Scalar(kM2T0)) < Scalar("1e-38"));
    CHECK(abs(sym_moment(spec, 4) - Scalar(kM4T0)) < Scalar("1e-38"));
    CHECK(sym_moment(spec, 1) == 0);
    CHECK(sym_moment(spec, 7) == 0);
}

TEST_CASE("moment recurrence holds to quadrature tolerance") {
    set_working_precision(256);
    for (const char* ts : {"0", "2", "-2.5"}) {
        Scalar t(ts);
        WeightSpec spec = make_weight_spec(t);
        auto table = moment_table_for(spec, 40, 0);
        for (int k = 0; k + 4 <= 40; k += 2) {
            Scalar res = abs((2 * (k / 2) + 1) * table->sym(k) + 4 * t * table->sym(k + 2) -
                             8 * table->sym(k + 4));
            CHECK(res < 10 * spec.quad.target_rel_tol * abs(table->sym(k + 4)) +
                            Scalar("1e-60"));
            CHECK(table->sym(k) > 0);
        }
    }
}

TEST_CASE("skew moments: symmetry, parity, trivial values") {
    set_working_precision(256);
    WeightSpec spec = make_weight_spec(Scalar(2));
    auto table = moment_table_for(spec, 10, 7);
    CHECK(table->skew(0, 0) == 0);
    CHECK(table->skew(2, 2) == 0);
    CHECK(table->skew(1, 3) == 0);  // even index sum
    for (int i = 0; i <= 7; ++i)
        for (int j = 0; j <= 7; ++j)
            CHECK(table->skew(i, j) + table->skew(j, i) == 0);  // exact by construction
    CHECK(table->skew(0, 1) > 0);
}

TEST_CASE("1-D reduction equals the independent 2-D quadrature oracle") {
    set_working_precision(256);
    for (const char* ts : {"0", "2"}) {
        WeightSpec spec = make_weight_spec(Scalar(ts));
        auto table = moment_table_for(spec, 10, 5);
        for (auto [i, j] : {std::pair{0, 1}, {0, 3}, {1, 2}, {2, 3}, {4, 5}, {2, 5}}) {
            Scalar oracle = skew_moment_2d_oracle(spec, i, j);
            Scalar reduced = table->skew(i, j);
            CHECK(abs(oracle - reduced) <= Scalar("1e-20") * abs(reduced));
        }
    }
}

TEST_CASE("skew_moment operation agrees with the table") {
    set_working_precision(256);
    WeightSpec spec = make_weight_spec(Scalar("-2.5"));
    Scalar direct = skew_moment(spec, 0, 1);
    auto table = moment_table_for(spec, 2, 1);
    CHECK(direct == table->skew(0, 1));
    CHECK(skew_moment(spec, 3, 1) == 0);
}

TEST_CASE("memoized tables are shared per (t, precision)") {
    set_working_precision(256);
    WeightSpec spec = make_weight_spec(Scalar("6.5"));
    auto a = moment_table_for(spec, 8, 3);
    auto b = moment_table_for(spec, 8, 3);
    CHECK(a.get() == b.get());
    auto c = moment_table_for(spec, 12, 5);  // grows, still one table afterwards
    CHECK(c->sym_order() >= 12);
    CHECK(c->skew(0, 1) == a->skew(0, 1));
}
