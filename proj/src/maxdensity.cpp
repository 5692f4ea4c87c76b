#include "renyi/maxdensity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "renyi/edgeworth.hpp"

namespace renyi {

namespace {

void require_order(const CumulantVector& c, std::size_t order, const char* who) {
    if (c.order() < order)
        throw std::invalid_argument(std::string(who) + ": cumulants up to order " + std::to_string(order) + " required");
}

Rational q(long num, long den) { return make_rational(num, den); }

}  // namespace

std::pair<Rational, Rational> extremum_series(const CumulantVector& c) {
    require_order(c, 5, "extremum_series");
    const Rational g3 = c.gamma(3), g4 = c.gamma(4), g5 = c.gamma(5);
    const Rational a1 = -g3 / 2;
    const Rational a2 = g3 * g3 * g3 / 4 - q(5, 12) * g3 * g4 + g5 / 8;
    return {a1, a2};
}

SupNormExpansion supnorm_coefficients(const CumulantVector& c) {
    require_order(c, 6, "supnorm_coefficients");
    const Rational g3 = c.gamma(3), g4 = c.gamma(4), g5 = c.gamma(5), g6 = c.gamma(6);
    SupNormExpansion e;
    std::tie(e.a1, e.a2) = extremum_series(c);
    const Rational& a1 = e.a1;
    const Rational& a2 = e.a2;
    const Rational f3 = 6, f4 = 24, f5 = 120, f6 = 720;

    e.b1 = g3 / f3 * (a1 * a1 * a1 - 3 * a2);
    e.b2 = (Rational(45) / (2 * f3 * f3) * g3 * g3 - Rational(6) / f4 * g4) * a1 * a1;
    e.b3 = (Rational(945) / (f3 * f3 * f3 * f3) * g3 * g3 * g3 - Rational(105) / (f3 * f4) * g3 * g4 +
            Rational(15) / f5 * g5) *
           a1;
    e.b4 = Rational(10395) / (f4 * f3 * f3 * f3 * f3) * g3 * g3 * g3 * g3 -
           Rational(945) / (2 * f3 * f3 * f4) * g3 * g3 * g4 + Rational(105) / (f3 * f5) * g3 * g5 +
           Rational(105) / (2 * f4 * f4) * g4 * g4 - Rational(15) / f6 * g6;

    // 1/n coefficient of phi_6(x_6(n)) / phi(0) before simplification
    const Rational first = g3 * g3 / 4 + Rational(3) / f4 * g4 - Rational(15) / (2 * f3 * f3) * g3 * g3;
    e.A = -a1 * a1 / 2 + first;
    e.B = e.b1 + e.b2 + e.b3 + e.b4 + a1 * a1 * a1 * a1 / 8 - a1 * a2 - first * a1 * a1 / 2;
    e.A_tilde = 2 * e.A;
    e.B_tilde = 3 * e.A * e.A - 2 * e.B;
    return e;
}

std::pair<Rational, Rational> ninf_expansion(const CumulantVector& c) {
    const SupNormExpansion e = supnorm_coefficients(c);
    return {e.A_tilde, e.B_tilde};
}

double solve_extremum(const CumulantVector& c, double n) {
    require_order(c, 6, "solve_extremum");
    if (!(n >= 1.0)) throw std::invalid_argument("solve_extremum: n must be >= 1");
    const EdgeworthModel model(6, c);
    std::vector<RationalPoly> dq, ddq;
    for (const auto& p : model.q_polys()) {
        dq.push_back(poly_derivative(p));
        ddq.push_back(poly_derivative(dq.back()));
    }
    const double u = 1.0 / std::sqrt(n);

    // phi_6'(x) = phi(x) G(x) with G = sum Q_k' u^k - x (1 + sum Q_k u^k)
    auto G = [&](double x, double& dG) {
        double s = 1.0, ds = 0.0, dt = 0.0, uk = 1.0;
        for (std::size_t k = 0; k < dq.size(); ++k) {
            uk *= u;
            s += model.q_polys()[k](x) * uk;
            ds += dq[k](x) * uk;
            dt += ddq[k](x) * uk;
        }
        dG = dt - s - x * ds;
        return ds - x * s;
    };

    double dummy;
    double lo = -1.0, hi = 1.0;
    double glo = G(lo, dummy), ghi = G(hi, dummy);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0)) throw std::runtime_error("extremum not localized");

    double x = extremum_series(c).first.get_d() * u;
    if (!(x > lo && x < hi)) x = 0.0;
    for (int it = 0; it < 200; ++it) {
        double dg;
        const double g = G(x, dg);
        if (g == 0.0) break;
        if ((g > 0.0) == (glo > 0.0)) {
            lo = x;
            glo = g;
        } else {
            hi = x;
        }
        double next = dg != 0.0 ? x - g / dg : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - x);
        x = next;
        if (step < 1e-13 || hi - lo < 1e-13) break;
    }
    if (!(edgeworth_density(model, n, x) > 0.0)) throw std::runtime_error("extremum not localized");
    return x;
}

Verdict monotonicity_prediction_inf(const CumulantVector& c) {
    require_order(c, 4, "monotonicity_prediction_inf");
    const Rational g3 = c.gamma(3), g4 = c.gamma(4);
    const int s = cmp(g4, Rational(2, 3) * g3 * g3);
    if (s > 0) return Verdict::eventually_increasing;
    if (s < 0) return Verdict::eventually_decreasing;
    return Verdict::indeterminate;
}

}  // namespace renyi
