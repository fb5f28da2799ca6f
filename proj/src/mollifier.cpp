#include "eiko/mollifier.hpp"

#include <cmath>
#include <numbers>

#include "eiko/util.hpp"

namespace eiko {

namespace {

// int_0^1 g(r) dr by composite trapezoid; superalgebraic for bump-type
// integrands (all derivatives vanish at the endpoints).
double trapezoid01(const std::function<double(double)>& g, int n = 1 << 14) {
    double acc = 0.5 * (g(0.0) + g(1.0));
    for (int k = 1; k < n; ++k) acc += g(double(k) / n);
    return acc / n;
}

} // namespace

double Mollifier::norm_const_2d() {
    static const double c = [] {
        double mass = 2.0 * std::numbers::pi *
                      trapezoid01([](double r) { return r * shape(r * r); });
        return 1.0 / mass;
    }();
    return c;
}

double Mollifier::norm_const_1d() {
    static const double c = [] {
        double mass = 2.0 * trapezoid01([](double s) { return shape(s * s); });
        return 1.0 / mass;
    }();
    return c;
}

double Mollifier::sup_2d() { return norm_const_2d() * shape(0.0); }

double Mollifier::sup_grad_2d() {
    static const double c = [] {
        double best = 0.0;
        const int n = 1 << 16;
        for (int k = 1; k < n; ++k) {
            double r = double(k) / n;
            double t = 1.0 - r * r;
            best = std::max(best, shape(r * r) * 2.0 * r / (t * t));
        }
        return norm_const_2d() * best;
    }();
    return c;
}

DiscreteKernel2 DiscreteKernel2::build(double eps, double h) {
    if (eps < 2.0 * h - 1e-12 * h) throw ValidationError("unresolvable mollifier: eps < 2h");
    int K = static_cast<int>(std::floor(eps / h - 1e-12));
    DiscreteKernel2 k;
    k.reach = K;
    k.weights.resize(2 * K + 1, 2 * K + 1);
    double sum = 0.0;
    for (int l = -K; l <= K; ++l)
        for (int kk = -K; kk <= K; ++kk) {
            double w = Mollifier::shape((kk * kk + l * l) * h * h / (eps * eps));
            k.weights(l + K, kk + K) = w;
            sum += w;
        }
    k.raw_mass = sum * h * h * Mollifier::norm_const_2d() / (eps * eps);
    k.weights /= sum;
    return k;
}

namespace {

GridSpec interior_spec(const GridSpec& g, int K) {
    GridSpec s = g;
    s.nx = g.nx - 2 * K;
    s.ny = g.ny - 2 * K;
    s.x0 = g.x0 + K * g.h;
    s.y0 = g.y0 + K * g.h;
    if (s.nx < 2 || s.ny < 2)
        throw ValidationError("mollifier support leaves fewer than 2x2 interior nodes");
    return s;
}

} // namespace

GridField2 mollify(const GridField2& u, double eps) {
    const GridSpec& g = u.spec;
    auto kern = DiscreteKernel2::build(eps, g.h);
    const int K = kern.reach;
    GridField2 out;
    out.spec = interior_spec(g, K);
    out.values.resize(out.spec.count(), 2);
    out.unit = false;
    parallel_for(out.spec.ny, [&](std::int64_t j0, std::int64_t j1) {
        for (std::int64_t j = j0; j < j1; ++j)
            for (int i = 0; i < out.spec.nx; ++i) {
                double a1 = 0.0, a2 = 0.0;
                for (int l = -K; l <= K; ++l)
                    for (int kk = -K; kk <= K; ++kk) {
                        double w = kern.weights(l + K, kk + K);
                        if (w == 0.0) continue;
                        std::int64_t n = g.index(int(i + K - kk), int(j + K - l));
                        a1 += w * u.values(n, 0);
                        a2 += w * u.values(n, 1);
                    }
                std::int64_t m = out.spec.index(i, int(j));
                out.values(m, 0) = a1;
                out.values(m, 1) = a2;
            }
    });
    return out;
}

GridScalar defect(const GridField2& u, double eps) {
    const GridSpec& g = u.spec;
    auto kern = DiscreteKernel2::build(eps, g.h);
    const int K = kern.reach;
    GridScalar out;
    out.spec = interior_spec(g, K);
    out.values.resize(out.spec.count());
    parallel_for(out.spec.ny, [&](std::int64_t j0, std::int64_t j1) {
        for (std::int64_t j = j0; j < j1; ++j)
            for (int i = 0; i < out.spec.nx; ++i) {
                double a1 = 0.0, a2 = 0.0, asq = 0.0;
                for (int l = -K; l <= K; ++l)
                    for (int kk = -K; kk <= K; ++kk) {
                        double w = kern.weights(l + K, kk + K);
                        if (w == 0.0) continue;
                        std::int64_t n = g.index(int(i + K - kk), int(j + K - l));
                        double u1 = u.values(n, 0), u2 = u.values(n, 1);
                        a1 += w * u1;
                        a2 += w * u2;
                        asq += w * (u1 * u1 + u2 * u2);
                    }
                out.values[out.spec.index(i, int(j))] = asq - (a1 * a1 + a2 * a2);
            }
    });
    return out;
}

GridScalar defect_double_convolution(const GridField2& u, double eps) {
    const GridSpec& g = u.spec;
    auto kern = DiscreteKernel2::build(eps, g.h);
    const int K = kern.reach;
    GridScalar out;
    out.spec = interior_spec(g, K);
    out.values.resize(out.spec.count());
    parallel_for(out.spec.ny, [&](std::int64_t j0, std::int64_t j1) {
        for (std::int64_t j = j0; j < j1; ++j)
            for (int i = 0; i < out.spec.nx; ++i) {
                double acc = 0.0;
                for (int lz = -K; lz <= K; ++lz)
                    for (int kz = -K; kz <= K; ++kz) {
                        double wz = kern.weights(lz + K, kz + K);
                        if (wz == 0.0) continue;
                        std::int64_t nz = g.index(int(i + K - kz), int(j + K - lz));
                        double z1 = u.values(nz, 0), z2 = u.values(nz, 1);
                        for (int lw = -K; lw <= K; ++lw)
                            for (int kw = -K; kw <= K; ++kw) {
                                double ww = kern.weights(lw + K, kw + K);
                                if (ww == 0.0) continue;
                                std::int64_t nw = g.index(int(i + K - kw), int(j + K - lw));
                                double d1 = z1 - u.values(nw, 0);
                                double d2 = z2 - u.values(nw, 1);
                                acc += 0.5 * wz * ww * (d1 * d1 + d2 * d2);
                            }
                    }
                out.values[out.spec.index(i, int(j))] = acc;
            }
    });
    return out;
}

GridField2 mollify_derivative(const GridField2& u, double eps, int j) {
    if (j != 0 && j != 1) throw ValidationError("derivative index must be 0 or 1");
    const GridSpec& g = u.spec;
    if (eps < 2.0 * g.h - 1e-12 * g.h) throw ValidationError("unresolvable mollifier: eps < 2h");
    int K = static_cast<int>(std::floor(eps / g.h - 1e-12));

    // Quadrature of u * d_j(rho_eps), rescaled by the same mass factor as the
    // normalized value weights: with value weights shape/sum(shape), the
    // consistent derivative weights are
    //   d_z = shape_grad(z/eps)_j / (eps * sum(shape)).
    // They sum to 0 exactly (odd symmetry of the lattice).
    double raw = 0.0;
    Eigen::ArrayXXd dw(2 * K + 1, 2 * K + 1);
    for (int l = -K; l <= K; ++l)
        for (int kk = -K; kk <= K; ++kk) {
            raw += Mollifier::shape((kk * kk + l * l) * g.h * g.h / (eps * eps));
            Vec2 zn{kk * g.h / eps, l * g.h / eps};
            dw(l + K, kk + K) = Mollifier::shape_gradient(zn)[j];
        }
    dw /= raw * eps;

    GridField2 out;
    out.spec = interior_spec(g, K);
    out.values.resize(out.spec.count(), 2);
    out.unit = false;
    parallel_for(out.spec.ny, [&](std::int64_t jj0, std::int64_t jj1) {
        for (std::int64_t jj = jj0; jj < jj1; ++jj)
            for (int i = 0; i < out.spec.nx; ++i) {
                double a1 = 0.0, a2 = 0.0;
                for (int l = -K; l <= K; ++l)
                    for (int kk = -K; kk <= K; ++kk) {
                        double w = dw(l + K, kk + K);
                        if (w == 0.0) continue;
                        std::int64_t n = g.index(int(i + K - kk), int(jj + K - l));
                        a1 += w * u.values(n, 0);
                        a2 += w * u.values(n, 1);
                    }
                std::int64_t m = out.spec.index(i, int(jj));
                out.values(m, 0) = a1;
                out.values(m, 1) = a2;
            }
    });
    return out;
}

} // namespace eiko
