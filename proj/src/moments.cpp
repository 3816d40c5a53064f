#include "freud/moments.hpp"

#include <map>
#include <mutex>

namespace freud {

WeightSpec make_weight_spec(const Scalar& t, int bits, const Scalar& quad_tol) {
    WeightSpec spec;
    spec.t = t;
    spec.quad = make_quad_config(t, bits, quad_tol);
    return spec;
}

Scalar freud_w(const WeightSpec& spec, const Scalar& x) {
    Scalar x2 = x * x;
    return exp((spec.t - x2) * x2);
}

Scalar freud_omega(const WeightSpec& spec, const Scalar& x) {
    Scalar x2 = x * x;
    return exp(2 * (spec.t - x2) * x2);
}

MomentTable::MomentTable(const WeightSpec& spec, int sym_order, int skew_order)
    : spec_(spec), sym_order_(sym_order), skew_order_(skew_order) {
    build_sym();
    if (skew_order_ >= 1) build_skew();
}

void MomentTable::build_sym() {
    if (sym_order_ < 2) sym_order_ = 2;
    sym_.assign(static_cast<size_t>(sym_order_) / 2 + 1, Scalar(0));
    auto omega_moment = [this](int k) {
        // the cut must absorb the x^k amplification of the weight tail
        QuadratureConfig cfg = spec_.quad;
        cfg.domain_cut = quartic_domain_cut_for_power(spec_.t, cfg.precision_bits, k);
        return integrate(
            [this, k](const Scalar& x) { return pow(x, k) * freud_omega(spec_, x); }, cfg);
    };
    sym_[0] = omega_moment(0);
    sym_[1] = omega_moment(2);
    const Scalar& t = spec_.t;
    for (int k = 0; k + 4 <= sym_order_; k += 2) {
        sym_[static_cast<size_t>(k) / 2 + 2] =
            ((k + 1) * sym_[static_cast<size_t>(k) / 2] + 4 * t * sym_[static_cast<size_t>(k) / 2 + 1]) / 8;
    }
    // quadrature spot-check every 8th entry
    for (int k = 8; k <= sym_order_; k += 8) {
        Scalar direct = omega_moment(k);
        Scalar tab = sym_[static_cast<size_t>(k) / 2];
        if (abs(direct - tab) > 10 * spec_.quad.target_rel_tol * abs(tab))
            throw CrossCheckFailure("moment recurrence disagrees with quadrature at order " +
                                        std::to_string(k),
                                    tab, direct);
    }
}

Scalar MomentTable::sym(int k) const {
    if (k < 0 || k > sym_order_) throw std::out_of_range("sym moment order out of range");
    if (k % 2 == 1) return Scalar(0);
    return sym_[static_cast<size_t>(k) / 2];
}

void MomentTable::build_skew() {
    const int jmax = skew_order_;
    const Scalar X = spec_.quad.domain_cut;
    Integrand w = [this](const Scalar& x) { return freud_w(spec_, x); };
    MonomialCumulatives cum(w, jmax, -X, X, spec_.quad);

    // entries i < j with i + j odd
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i <= jmax; ++i)
        for (int j = i + 1; j <= jmax; ++j)
            if ((i + j) % 2 == 1) pairs.emplace_back(i, j);

    const TanhSinhNodes& rule =
        TanhSinhNodes::get(spec_.quad.precision_bits, spec_.quad.max_refinement_levels);
    std::vector<Scalar> sums(pairs.size(), Scalar(0));
    std::vector<Scalar> abs_sums(pairs.size(), Scalar(0));
    std::vector<Scalar> prev(pairs.size(), Scalar(0));
    std::vector<Scalar> cur(pairs.size(), Scalar(0));
    std::vector<Scalar> powx(static_cast<size_t>(jmax) + 1);
    std::vector<Scalar> cvals;

    auto add_node = [&](const Scalar& x, const Scalar& sigma) {
        Scalar wv = w(x);
        cum.eval_all(x, cvals);
        powx[0] = 1;
        for (int k = 1; k <= jmax; ++k) powx[static_cast<size_t>(k)] = powx[static_cast<size_t>(k) - 1] * x;
        for (size_t p = 0; p < pairs.size(); ++p) {
            Scalar term = powx[static_cast<size_t>(pairs[p].first)] * wv *
                          cvals[static_cast<size_t>(pairs[p].second)];
            sums[p] += sigma * term;
            abs_sums[p] += sigma * abs(term);
        }
    };

    bool done = false;
    for (int level = 0; level <= spec_.quad.max_refinement_levels && !done; ++level) {
        for (const auto& node : rule.levels[static_cast<size_t>(level)]) {
            Scalar xr = X * node.tau;
            add_node(xr, node.sigma);
            if (!(level == 0 && node.tau == 0)) add_node(-xr, node.sigma);
        }
        Scalar h = pow(Scalar(2), -level);
        Scalar worst = 0;
        for (size_t p = 0; p < pairs.size(); ++p) {
            const Scalar& Mi = cum.total(pairs[p].first);
            const Scalar& Mj = cum.total(pairs[p].second);
            cur[p] = Mi * Mj / 2 - h * X * sums[p];
            if (level >= 3) {
                Scalar scale = h * X * abs_sums[p] + abs(Mi * Mj) / 2;
                if (scale == 0) scale = 1;
                Scalar d = abs(cur[p] - prev[p]) / scale;
                if (d > worst) worst = d;
            }
        }
        if (level >= 3 && worst <= spec_.quad.target_rel_tol) done = true;
        std::swap(prev, cur);
    }
    if (!done) throw NonConvergence("skew moment table: refinement levels exhausted");

    mu_.assign(static_cast<size_t>(jmax) + 1,
               std::vector<Scalar>(static_cast<size_t>(jmax) + 1, Scalar(0)));
    for (size_t p = 0; p < pairs.size(); ++p) {
        auto [i, j] = pairs[p];
        mu_[static_cast<size_t>(i)][static_cast<size_t>(j)] = prev[p];
        mu_[static_cast<size_t>(j)][static_cast<size_t>(i)] = -prev[p];
    }
}

Scalar MomentTable::skew(int i, int j) const {
    if (i < 0 || j < 0) throw std::out_of_range("skew moment index negative");
    if (i > skew_order_ || j > skew_order_) throw std::out_of_range("skew moment order out of range");
    if ((i + j) % 2 == 0) return Scalar(0);
    return mu_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Scalar sym_moment(const WeightSpec& spec, int k) {
    if (k < 0) throw std::invalid_argument("sym_moment: negative order");
    if (k % 2 == 1) return Scalar(0);
    auto table = moment_table_for(spec, k, 0);
    return table->sym(k);
}

Scalar skew_moment(const WeightSpec& spec, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("skew_moment: negative index");
    if ((i + j) % 2 == 0) return Scalar(0);
    auto table = moment_table_for(spec, 2, std::max(i, j));
    return table->skew(i, j);
}

std::shared_ptr<const MomentTable> moment_table_for(const WeightSpec& spec, int sym_order,
                                                    int skew_order) {
    static std::map<std::string, std::shared_ptr<const MomentTable>> cache;
    static std::mutex mu;
    std::string key = to_decimal(spec.t, 50) + "|" + std::to_string(spec.quad.precision_bits) +
                      "|" + to_decimal(spec.quad.target_rel_tol, 8);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->sym_order() >= sym_order &&
        it->second->skew_order() >= skew_order)
        return it->second;
    int so = sym_order, ko = skew_order;
    if (it != cache.end()) {
        so = std::max(so, it->second->sym_order());
        ko = std::max(ko, it->second->skew_order());
    }
    auto table = std::make_shared<const MomentTable>(spec, so, ko);
    cache[key] = table;
    return table;
}

}  // namespace freud
