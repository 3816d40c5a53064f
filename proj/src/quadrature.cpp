#include "freud/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace freud {

Scalar quartic_domain_cut(const Scalar& t, int bits) {
    // solve 2X^4 - 2|t|X^2 = R, R = (bits + 16) ln 2, then pad
    Scalar R = (Scalar(bits) + 16) * log(Scalar(2));
    Scalar at = abs(t);
    Scalar x2 = (at + sqrt(at * at + 2 * R)) / 2;
    return sqrt(x2) * Scalar("1.01");
}

Scalar quartic_domain_cut_for_power(const Scalar& t, int bits, int k) {
    Scalar base = (Scalar(bits) + 16) * log(Scalar(2));
    Scalar X = quartic_domain_cut(t, bits);
    for (int round = 0; round < 3; ++round) {
        Scalar R = base + k * log(X);
        Scalar at = abs(t);
        Scalar x2 = (at + sqrt(at * at + 2 * R)) / 2;
        X = sqrt(x2) * Scalar("1.01");
    }
    return X;
}

Scalar gaussian_domain_cut(int bits) {
    Scalar R = (Scalar(bits) + 16) * log(Scalar(2));
    return sqrt(R) * Scalar("1.01");
}

QuadratureConfig make_quad_config(const Scalar& t, int bits, const Scalar& rel_tol,
                                  int max_levels) {
    QuadratureConfig cfg;
    cfg.precision_bits = bits;
    cfg.target_rel_tol = rel_tol;
    cfg.max_refinement_levels = max_levels;
    cfg.domain_cut = quartic_domain_cut(t, bits);
    return cfg;
}

// ---------------------------------------------------------------- tanh-sinh

const TanhSinhNodes& TanhSinhNodes::get(int bits, int max_level) {
    static std::map<int, TanhSinhNodes> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    TanhSinhNodes& rule = cache[bits];
    if (static_cast<int>(rule.levels.size()) > max_level) return rule;

    Scalar half_pi = pi_value() / 2;
    // |u| range: stop once 1 - tau would fall below the representable gap at
    // this precision (the node would round onto the interval endpoint)
    Scalar target = (Scalar(bits) - 8) * log(Scalar(2));
    Scalar U = asinh(target / (2 * half_pi));
    auto emit = [&](const Scalar& u, std::vector<Node>& out) {
        Scalar s = half_pi * sinh(u);
        Scalar ch = cosh(s);
        Node n;
        n.tau = tanh(s);
        if (abs(n.tau) >= 1) return;
        n.sigma = half_pi * cosh(u) / (ch * ch);
        out.push_back(std::move(n));
    };
    if (rule.levels.empty()) {
        std::vector<Node> base;
        emit(Scalar(0), base);
        for (long k = 1; Scalar(k) <= U; ++k) emit(Scalar(k), base);
        rule.levels.push_back(std::move(base));
    }
    while (static_cast<int>(rule.levels.size()) <= max_level) {
        int level = static_cast<int>(rule.levels.size());
        Scalar h = pow(Scalar(2), -level);
        std::vector<Node> nodes;
        for (long k = 1; Scalar(k) * h <= U; k += 2) emit(Scalar(k) * h, nodes);
        rule.levels.push_back(std::move(nodes));
    }
    return rule;
}

namespace {

struct TanhSinhAccumulator {
    Scalar center, radius;
    Scalar sum = 0, abs_sum = 0;

    void add_level(const Integrand& f, const TanhSinhNodes& rule, int level) {
        for (const auto& node : rule.levels[static_cast<size_t>(level)]) {
            Scalar xr = radius * node.tau;
            Scalar vp = f(center + xr);
            Scalar mag = abs(vp);
            if (!(level == 0 && node.tau == 0)) {
                Scalar vm = f(center - xr);
                vp += vm;
                mag += abs(vm);
            }
            sum += node.sigma * vp;
            abs_sum += node.sigma * mag;
        }
    }
    Scalar value(int level) const { return pow(Scalar(2), -level) * radius * sum; }
    Scalar mass(int level) const { return pow(Scalar(2), -level) * radius * abs_sum; }
};

}  // namespace

Scalar integrate(const Integrand& f, const Scalar& a, const Scalar& b,
                 const QuadratureConfig& cfg) {
    const TanhSinhNodes& rule = TanhSinhNodes::get(cfg.precision_bits, cfg.max_refinement_levels);
    TanhSinhAccumulator acc;
    acc.center = (a + b) / 2;
    acc.radius = (b - a) / 2;
    Scalar prev = 0;
    for (int level = 0; level <= cfg.max_refinement_levels; ++level) {
        acc.add_level(f, rule, level);
        Scalar cur = acc.value(level);
        if (level >= 3) {
            Scalar scale = acc.mass(level);
            if (scale == 0) return cur;
            if (abs(cur - prev) <= cfg.target_rel_tol * scale) return cur;
        }
        prev = cur;
    }
    throw NonConvergence("integrate: refinement levels exhausted without agreement");
}

Scalar integrate(const Integrand& f, const QuadratureConfig& cfg) {
    return integrate(f, -cfg.domain_cut, cfg.domain_cut, cfg);
}

// ----------------------------------------------------------- Gauss-Legendre

const GaussLegendreRule& GaussLegendreRule::get(int order, int bits) {
    static std::map<std::pair<int, int>, GaussLegendreRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({order, bits});
    if (it != cache.end()) return it->second;

    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<size_t>(order));
    rule.weights.resize(static_cast<size_t>(order));
    Scalar pi = pi_value();
    auto legendre = [&](const Scalar& x, Scalar& p, Scalar& dp) {
        Scalar p0 = 1, p1 = x;
        for (int k = 2; k <= order; ++k) {
            Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        p = p1;
        dp = order * (x * p1 - p0) / (x * x - 1);
    };
    for (int j = 0; j < order; ++j) {
        Scalar x = -cos(pi * (Scalar(4 * j + 3)) / (Scalar(4 * order + 2)));
        Scalar p, dp;
        for (int it2 = 0; it2 < 40; ++it2) {
            legendre(x, p, dp);
            Scalar dx = p / dp;
            x -= dx;
            if (abs(dx) <= abs(x) * pow(Scalar(2), -(bits + 8)) + pow(Scalar(2), -(bits + 8)))
                break;
        }
        legendre(x, p, dp);
        rule.nodes[static_cast<size_t>(j)] = x;
        rule.weights[static_cast<size_t>(j)] = 2 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(std::make_pair(order, bits), std::move(rule)).first->second;
}

// ------------------------------------------------------------- cumulatives

namespace {

constexpr int kPanelOrder = 40;

Scalar panel_partial(const Integrand& f, const GaussLegendreRule& gl, const Scalar& left,
                     const Scalar& right) {
    Scalar mid = (left + right) / 2;
    Scalar half = (right - left) / 2;
    Scalar s = 0;
    for (size_t q = 0; q < gl.nodes.size(); ++q) s += gl.weights[q] * f(mid + half * gl.nodes[q]);
    return s * half;
}

// Choose a panel count where doubling no longer moves the prefix sums.
int converged_panel_count(const Integrand& f, const Scalar& a, const Scalar& b,
                          const QuadratureConfig& cfg, const GaussLegendreRule& gl,
                          std::vector<Scalar>& prefix_out) {
    std::vector<Scalar> prev;
    int panels = 8;
    for (int attempt = 0; attempt < cfg.max_refinement_levels; ++attempt, panels *= 2) {
        Scalar width = (b - a) / panels;
        std::vector<Scalar> prefix(static_cast<size_t>(panels) + 1);
        Scalar mass = 0;
        prefix[0] = 0;
        for (int p = 0; p < panels; ++p) {
            Scalar left = a + p * width;
            Scalar val = panel_partial(f, gl, left, left + width);
            prefix[static_cast<size_t>(p) + 1] = prefix[static_cast<size_t>(p)] + val;
            mass += abs(val);
        }
        if (!prev.empty()) {
            // probe agreement at the coarse panel edges (every second fine edge)
            Scalar worst = 0;
            for (size_t p = 0; p < prev.size(); ++p) {
                Scalar d = abs(prefix[2 * p] - prev[p]);
                if (d > worst) worst = d;
            }
            Scalar scale = mass == 0 ? Scalar(1) : mass;
            if (worst <= cfg.target_rel_tol * scale) {
                prefix_out = std::move(prefix);
                return panels;
            }
        }
        prev = std::move(prefix);
    }
    throw NonConvergence("cumulative_integrate: panel refinement exhausted");
}

}  // namespace

CumulativeIntegral cumulative_integrate(const Integrand& f, const Scalar& a, const Scalar& b,
                                        const QuadratureConfig& cfg) {
    CumulativeIntegral c;
    c.f_ = f;
    c.a_ = a;
    c.b_ = b;
    c.order_ = kPanelOrder;
    c.bits_ = cfg.precision_bits;
    const GaussLegendreRule& gl = GaussLegendreRule::get(c.order_, c.bits_);
    int panels = converged_panel_count(f, a, b, cfg, gl, c.prefix_);
    c.panel_width_ = (b - a) / panels;
    return c;
}

CumulativeIntegral cumulative_integrate(const Integrand& f, const QuadratureConfig& cfg) {
    return cumulative_integrate(f, -cfg.domain_cut, cfg.domain_cut, cfg);
}

Scalar CumulativeIntegral::operator()(const Scalar& x) const {
    if (x <= a_) return Scalar(0);
    if (x >= b_) return prefix_.back();
    long p = static_cast<long>(floor((x - a_) / panel_width_));
    long npanels = static_cast<long>(prefix_.size()) - 1;
    if (p >= npanels) p = npanels - 1;
    if (p < 0) p = 0;
    Scalar left = a_ + p * panel_width_;
    const GaussLegendreRule& gl = GaussLegendreRule::get(order_, bits_);
    return prefix_[static_cast<size_t>(p)] + panel_partial(f_, gl, left, x);
}

const Scalar& CumulativeIntegral::total() const { return prefix_.back(); }

MonomialCumulatives::MonomialCumulatives(Integrand f, int jmax, const Scalar& a, const Scalar& b,
                                         const QuadratureConfig& cfg)
    : f_(std::move(f)), jmax_(jmax), a_(a), b_(b), order_(kPanelOrder),
      bits_(cfg.precision_bits) {
    build(cfg);
}

void MonomialCumulatives::build(const QuadratureConfig& cfg) {
    const GaussLegendreRule& gl = GaussLegendreRule::get(order_, bits_);
    size_t nj = static_cast<size_t>(jmax_) + 1;
    std::vector<std::vector<Scalar>> prev;
    int panels = 8;
    for (int attempt = 0; attempt < cfg.max_refinement_levels; ++attempt, panels *= 2) {
        Scalar width = (b_ - a_) / panels;
        std::vector<std::vector<Scalar>> prefix(nj, std::vector<Scalar>(static_cast<size_t>(panels) + 1, Scalar(0)));
        Scalar mass = 0;
        for (int p = 0; p < panels; ++p) {
            Scalar mid = a_ + (Scalar(p) + Scalar(1) / 2) * width;
            Scalar half = width / 2;
            std::vector<Scalar> acc(nj, Scalar(0));
            for (size_t q = 0; q < gl.nodes.size(); ++q) {
                Scalar y = mid + half * gl.nodes[q];
                Scalar wf = gl.weights[q] * f_(y);
                Scalar powy = 1;
                for (size_t j = 0; j < nj; ++j) {
                    acc[j] += wf * powy;
                    powy *= y;
                }
            }
            for (size_t j = 0; j < nj; ++j)
                prefix[j][static_cast<size_t>(p) + 1] = prefix[j][static_cast<size_t>(p)] + acc[j] * half;
            mass += abs(acc[0]) * half;
        }
        if (!prev.empty()) {
            Scalar worst = 0;
            Scalar scale = 0;
            for (size_t j = 0; j < nj; ++j) {
                for (size_t p = 0; p < prev[j].size(); ++p) {
                    Scalar d = abs(prefix[j][2 * p] - prev[j][p]);
                    if (d > worst) worst = d;
                }
                Scalar tj = abs(prefix[j].back());
                if (tj > scale) scale = tj;
            }
            if (scale == 0) scale = mass == 0 ? Scalar(1) : mass;
            if (worst <= cfg.target_rel_tol * scale) {
                prefix_ = std::move(prefix);
                panel_width_ = width;
                totals_.resize(nj);
                for (size_t j = 0; j < nj; ++j) totals_[j] = prefix_[j].back();
                return;
            }
        }
        prev = std::move(prefix);
    }
    throw NonConvergence("MonomialCumulatives: panel refinement exhausted");
}

void MonomialCumulatives::eval_all(const Scalar& x, std::vector<Scalar>& out) const {
    size_t nj = static_cast<size_t>(jmax_) + 1;
    out.assign(nj, Scalar(0));
    if (x <= a_) return;
    if (x >= b_) {
        out = totals_;
        return;
    }
    long npanels = static_cast<long>(prefix_[0].size()) - 1;
    long p = static_cast<long>(floor((x - a_) / panel_width_));
    if (p >= npanels) p = npanels - 1;
    if (p < 0) p = 0;
    Scalar left = a_ + p * panel_width_;
    Scalar mid = (left + x) / 2;
    Scalar half = (x - left) / 2;
    const GaussLegendreRule& gl = GaussLegendreRule::get(order_, bits_);
    for (size_t j = 0; j < nj; ++j) out[j] = prefix_[j][static_cast<size_t>(p)];
    for (size_t q = 0; q < gl.nodes.size(); ++q) {
        Scalar y = mid + half * gl.nodes[q];
        Scalar wf = gl.weights[q] * f_(y) * half;
        Scalar powy = 1;
        for (size_t j = 0; j < nj; ++j) {
            out[j] += wf * powy;
            powy *= y;
        }
    }
}

}  // namespace freud
