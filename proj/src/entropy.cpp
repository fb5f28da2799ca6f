#include "eiko/entropy.hpp"

#include <cmath>
#include <numbers>

namespace eiko {

namespace {

constexpr double kPi = std::numbers::pi;

// wrap to (-pi, pi]
double wrap_angle(double t) {
    double w = std::remainder(t, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

// elementary generator f(w) = cos(w) on |w| < pi/2, else 0, and derivative
double elem_f(double w) { return std::abs(w) < kPi / 2 ? std::cos(w) : 0.0; }
double elem_df(double w) { return std::abs(w) < kPi / 2 ? -std::sin(w) : 0.0; }

} // namespace

Entropy Entropy::fourier(double a0, std::vector<double> cos_coeffs,
                         std::vector<double> sin_coeffs) {
    Entropy e;
    e.gen_ = Generator::Fourier;
    e.a0_ = a0;
    e.a_ = std::move(cos_coeffs);
    e.b_ = std::move(sin_coeffs);
    if (e.a_.size() != e.b_.size()) e.b_.resize(e.a_.size(), 0.0);
    return e;
}

Entropy Entropy::smoothed_elementary(double theta0, int k) {
    if (k < 1) throw ValidationError("smoothing level k must be >= 1");
    Entropy e;
    e.gen_ = Generator::SmoothedElementary;
    e.theta0_ = theta0;
    e.k_ = k;
    e.delta_ = kPi / (4.0 * k);
    return e;
}

double Entropy::phi(double th) const {
    if (gen_ == Generator::Fourier) {
        double v = a0_;
        for (std::size_t m = 0; m < a_.size(); ++m) {
            double mm = double(m + 1);
            v += a_[m] * std::cos(mm * th) + b_[m] * std::sin(mm * th);
        }
        return v;
    }
    // exact box average of the elementary generator over [w-d, w+d];
    //   (1/2d) int cos = (sin(hi) - sin(lo))/(2d)  on the clipped support
    double w = wrap_angle(th - theta0_);
    double lo = std::clamp(w - delta_, -kPi / 2, kPi / 2);
    double hi = std::clamp(w + delta_, -kPi / 2, kPi / 2);
    return (std::sin(hi) - std::sin(lo)) / (2.0 * delta_);
}

double Entropy::dphi(double th) const {
    if (gen_ == Generator::Fourier) {
        double v = 0.0;
        for (std::size_t m = 0; m < a_.size(); ++m) {
            double mm = double(m + 1);
            v += -a_[m] * mm * std::sin(mm * th) + b_[m] * mm * std::cos(mm * th);
        }
        return v;
    }
    double w = wrap_angle(th - theta0_);
    return (elem_f(w + delta_) - elem_f(w - delta_)) / (2.0 * delta_);
}

double Entropy::ddphi(double th) const {
    if (gen_ == Generator::Fourier) {
        double v = 0.0;
        for (std::size_t m = 0; m < a_.size(); ++m) {
            double mm = double(m + 1);
            v += -a_[m] * mm * mm * std::cos(mm * th) - b_[m] * mm * mm * std::sin(mm * th);
        }
        return v;
    }
    // one-sided at the four kink angles (measure zero)
    double w = wrap_angle(th - theta0_);
    return (elem_df(w + delta_) - elem_df(w - delta_)) / (2.0 * delta_);
}

namespace {

// quintic smoothstep: 0 -> 1 with vanishing first and second derivatives
double smooth01(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}
double dsmooth01(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return 30.0 * t * t * (1.0 - t) * (1.0 - t);
}

} // namespace

double ExtendedEntropy::eta(double r) {
    if (r <= 0.5 || r >= 2.0) return 0.0;
    if (r < 0.75) return smooth01((r - 0.5) / 0.25);
    if (r <= 1.5) return 1.0;
    return smooth01((2.0 - r) / 0.5);
}

double ExtendedEntropy::deta(double r) {
    if (r <= 0.5 || r >= 2.0) return 0.0;
    if (r < 0.75) return dsmooth01((r - 0.5) / 0.25) / 0.25;
    if (r <= 1.5) return 0.0;
    return -dsmooth01((2.0 - r) / 0.5) / 0.5;
}

Vec2 ExtendedEntropy::value(const Vec2& z) const {
    double r = z.norm();
    if (r <= 0.5 || r >= 2.0) return Vec2::Zero();
    return eta(r) * base_.value_angle(std::atan2(z.y(), z.x()));
}

Eigen::Matrix2d ExtendedEntropy::jacobian(const Vec2& z) const {
    double r = z.norm();
    Eigen::Matrix2d J = Eigen::Matrix2d::Zero();
    if (r <= 0.5 || r >= 2.0) return J;
    double th = std::atan2(z.y(), z.x());
    Vec2 er = z / r;
    Vec2 et = perp(er);
    // D Phi_tilde = eta'(r) Phi (x) e_r + (eta(r) gamma(theta)/r) e_t (x) e_t
    J += deta(r) * base_.value_angle(th) * er.transpose();
    J += (eta(r) * base_.gamma(th) / r) * et * et.transpose();
    return J;
}

double ExtendedEntropy::gamma_tilde(const Vec2& z) const {
    double r = z.norm();
    if (r < 0.5 || r >= 2.0) return 0.0;
    return eta(r) * base_.gamma(std::atan2(z.y(), z.x())) / r;
}

Vec2 ExtendedEntropy::psi(const Vec2& z) const {
    double r = z.norm();
    if (r < 0.5 || r >= 2.0) return Vec2::Zero();
    double th = std::atan2(z.y(), z.x());
    Vec2 er = z / r;
    return (-r * deta(r) * base_.value_angle(th) + eta(r) * base_.gamma(th) * er) /
           (2.0 * r * r);
}

} // namespace eiko
