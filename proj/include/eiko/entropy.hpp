#ifndef EIKO_ENTROPY_HPP
#define EIKO_ENTROPY_HPP

#include <vector>

#include "eiko/grid.hpp"

namespace eiko {

inline Vec2 perp(const Vec2& v) { return {-v.y(), v.x()}; }
inline Vec2 unit_angle(double th) { return {std::cos(th), std::sin(th)}; }

/// Smooth entropy Phi: S^1 -> R^2 represented through its 2pi-periodic
/// generator phi, either a truncated Fourier series or the exact box-average
/// smoothing of the elementary generator cos(theta-theta0) 1_{|theta-theta0|<pi/2}.
/// Reconstruction: Phi(e^{i theta}) = phi(theta) z + phi'(theta) z^perp, and
/// (d/dtheta) Phi = gamma(theta) z^perp with gamma = phi + phi''.
class Entropy {
public:
    enum class Generator { Fourier, SmoothedElementary };

    static Entropy fourier(double a0, std::vector<double> cos_coeffs,
                           std::vector<double> sin_coeffs);
    static Entropy smoothed_elementary(double theta0, int k);

    double phi(double th) const;
    double dphi(double th) const;
    double ddphi(double th) const;
    double gamma(double th) const { return phi(th) + ddphi(th); }

    Vec2 value_angle(double th) const {
        Vec2 e = unit_angle(th);
        return phi(th) * e + dphi(th) * perp(e);
    }
    /// Phi at a unit vector z (evaluated through its angle).
    Vec2 value(const Vec2& z) const { return value_angle(std::atan2(z.y(), z.x())); }

    Generator generator() const { return gen_; }
    double theta0() const { return theta0_; }
    int smoothing_level() const { return k_; }
    double a0() const { return a0_; }
    const std::vector<double>& cos_coeffs() const { return a_; }
    const std::vector<double>& sin_coeffs() const { return b_; }

private:
    Generator gen_ = Generator::Fourier;
    // fourier data
    double a0_ = 0.0;
    std::vector<double> a_, b_;
    // smoothed-elementary data
    double theta0_ = 0.0;
    int k_ = 1;
    double delta_ = 0.0;  // box half-width pi/(4k)
};

/// from_fourier in the artifact's interface vocabulary.
inline Entropy from_fourier(double a0, std::vector<double> cos_coeffs,
                            std::vector<double> sin_coeffs) {
    return Entropy::fourier(a0, std::move(cos_coeffs), std::move(sin_coeffs));
}

/// Smooth approximation Phi_k of the elementary entropy in direction
/// e^{i theta0}; ||phi_k||_{W^{1,inf}} <= 2 uniformly and Phi_k -> Phi^xi
/// pointwise away from the jump angles theta0 +- pi/2.
inline Entropy approximate_elementary(double theta0, int k) {
    return Entropy::smoothed_elementary(theta0, k);
}

/// Discontinuous elementary entropy Phi^xi(z) = xi for z.xi > 0, else 0.
struct ElementaryEntropy {
    Vec2 xi;
    Vec2 value(const Vec2& z) const { return z.dot(xi) > 0.0 ? xi : Vec2(Vec2::Zero()); }
};

/// Extension of a smooth entropy to the plane by the radial cutoff eta:
/// Phi_tilde(z) = eta(|z|) Phi(z/|z|), with the decomposition fields
/// D Phi_tilde = -2 Psi (x) z + gamma_tilde Id. eta is a C^2 quintic
/// smoothstep bump: 0 on [0,1/2], ramps on [1/2,3/4], 1 on [3/4,3/2],
/// ramps down on [3/2,2], 0 beyond.
class ExtendedEntropy {
public:
    explicit ExtendedEntropy(Entropy base) : base_(std::move(base)) {}

    static double eta(double r);
    static double deta(double r);

    Vec2 value(const Vec2& z) const;             // Phi_tilde
    Eigen::Matrix2d jacobian(const Vec2& z) const;  // D Phi_tilde, closed form
    double gamma_tilde(const Vec2& z) const;     // eta(r) gamma(theta) / r, 0 for r < 1/2
    Vec2 psi(const Vec2& z) const;               // (-r eta' Phi + eta gamma e_r)/(2 r^2), 0 for r < 1/2

    const Entropy& base() const { return base_; }

private:
    Entropy base_;
};

} // namespace eiko

#endif
