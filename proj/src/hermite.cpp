#include "freud/hermite.hpp"

#include <map>
#include <mutex>

namespace freud {

HermiteFamilies build_hermite(int n_max) {
    HermiteFamilies fam;
    int omax = 2 * n_max + 4;
    fam.O.reserve(static_cast<size_t>(omax) + 1);
    fam.O.push_back(Poly<Rational>::one());
    fam.O.push_back(Poly<Rational>::x());
    for (int n = 1; n < omax; ++n) {
        Poly<Rational> next =
            fam.O[static_cast<size_t>(n)].shifted(1) -
            Rational(n, 2) * fam.O[static_cast<size_t>(n) - 1];
        fam.O.push_back(std::move(next));
    }
    int smax = 2 * n_max + 3;
    fam.S.reserve(static_cast<size_t>(smax) + 1);
    for (int m = 0; m <= smax; ++m) {
        if (m % 2 == 0) {
            fam.S.push_back(fam.O[static_cast<size_t>(m)]);
        } else {
            int n = (m - 1) / 2;
            Poly<Rational> s = fam.O[static_cast<size_t>(m)];
            if (n >= 1) s = s - Rational(n) * fam.O[static_cast<size_t>(m) - 2];
            fam.S.push_back(std::move(s));
        }
    }
    return fam;
}

std::pair<Poly<Rational>, Poly<Rational>> hermite_closed_residuals(const HermiteFamilies& fam,
                                                                   int n) {
    auto S = [&](int k) -> const Poly<Rational>& { return fam.S.at(static_cast<size_t>(k)); };
    Poly<Rational> x2({Rational(0), Rational(0), Rational(1)});

    Poly<Rational> even = S(2 * n + 2) -
                          (x2 - Poly<Rational>::constant(Rational(4 * n + 1, 2))) * S(2 * n) +
                          Rational(n) * Rational(2 * n - 1, 2) *
                              (n >= 1 ? S(2 * n - 2) : Poly<Rational>::zero());

    Poly<Rational> quartic({Rational(8 * n * (2 * n + 1) - 5), Rational(0),
                            Rational(-3 * (1 + 4 * n)), Rational(0), Rational(2)});
    Poly<Rational> odd =
        Rational(2) * (x2 + Poly<Rational>::constant(Rational(1 - 4 * n))) * S(2 * n + 3) -
        quartic * S(2 * n + 1) +
        Rational(n * (2 * n - 1)) *
            (x2 - Poly<Rational>::constant(Rational(4 * n + 3))) *
            (n >= 1 ? S(2 * n - 1) : Poly<Rational>::zero());
    return {even, odd};
}

Poly<Scalar> to_scalar_poly(const Poly<Rational>& p) {
    std::vector<Scalar> c(p.c.size());
    for (size_t k = 0; k < p.c.size(); ++k) {
        Scalar num(boost::multiprecision::numerator(p.c[k]).str());
        Scalar den(boost::multiprecision::denominator(p.c[k]).str());
        c[k] = num / den;
    }
    return Poly<Scalar>(std::move(c));
}

namespace {

// skew moments <x^a, y^b> for the Gaussian weight, cached per (order, bits)
const std::vector<std::vector<Scalar>>& gaussian_skew_moments(int order, int bits) {
    static std::map<std::pair<int, int>, std::vector<std::vector<Scalar>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({order, bits});
    if (it != cache.end()) return it->second;

    QuadratureConfig cfg;
    cfg.precision_bits = bits;
    cfg.target_rel_tol = Scalar("1e-30");
    cfg.max_refinement_levels = 12;
    cfg.domain_cut = gaussian_domain_cut(bits);
    const Scalar X = cfg.domain_cut;
    Integrand wg = [](const Scalar& x) { return exp(-x * x / 2); };
    MonomialCumulatives cum(wg, order, -X, X, cfg);
    std::vector<Scalar> cvals;
    std::vector<std::vector<Scalar>> table(static_cast<size_t>(order) + 1,
                                           std::vector<Scalar>(static_cast<size_t>(order) + 1,
                                                               Scalar(0)));
    // <x^a, y^b> = M_a M_b - 2 int x^a w(x) C_b(x) dx  (no 1/2 prefactor)
    for (int a = 0; a <= order; ++a) {
        for (int b = a + 1; b <= order; ++b) {
            if ((a + b) % 2 == 0) continue;
            Scalar part2 = integrate(
                [&](const Scalar& x) {
                    cum.eval_all(x, cvals);
                    return pow(x, a) * wg(x) * cvals[static_cast<size_t>(b)];
                },
                cfg);
            Scalar val = cum.total(a) * cum.total(b) - 2 * part2;
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] = val;
            table[static_cast<size_t>(b)][static_cast<size_t>(a)] = -val;
        }
    }
    return cache.emplace(std::make_pair(order, bits), std::move(table)).first->second;
}

}  // namespace

Scalar hermite_skew_product(const Poly<Rational>& f, const Poly<Rational>& g, int bits) {
    int order = std::max(f.degree(), g.degree());
    if (order < 1) order = 1;
    const auto& table = gaussian_skew_moments(order, bits);
    Poly<Scalar> fs = to_scalar_poly(f), gs = to_scalar_poly(g);
    Scalar s = 0;
    for (int a = 0; a <= fs.degree(); ++a) {
        Scalar fa = fs.coeff(a);
        if (fa == 0) continue;
        for (int b = 0; b <= gs.degree(); ++b) {
            Scalar gb = gs.coeff(b);
            if (gb == 0) continue;
            if ((a + b) % 2 == 0) continue;
            s += fa * gb * table[static_cast<size_t>(a)][static_cast<size_t>(b)];
        }
    }
    return s;
}

}  // namespace freud
