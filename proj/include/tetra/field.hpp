#pragma once

#include <cmath>
#include <vector>

namespace tetra {

/// Real spherical-harmonic coefficient vector up to its own band limit l_max.
/// Convention: real orthonormal harmonics, Condon-Shortley phase excluded.
/// m > 0 holds the cos(m phi) component, m < 0 the sin(|m| phi) component.
/// Index layout: l*l + (l + m).
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(int l_max) : l_max_(l_max), c_((l_max + 1) * (l_max + 1), 0.0) {}

    int l_max() const { return l_max_; }
    int size() const { return static_cast<int>(c_.size()); }

    double& at(int l, int m) { return c_[l * l + l + m]; }
    double at(int l, int m) const { return c_[l * l + l + m]; }

    const std::vector<double>& coeffs() const { return c_; }
    std::vector<double>& coeffs() { return c_; }

    /// Copy with band limit extended (or truncated) to new_l_max.
    SpectralField resized(int new_l_max) const
    {
        SpectralField r(new_l_max);
        const int l_common = std::min(l_max_, new_l_max);
        for (int l = 0; l <= l_common; ++l)
            for (int m = -l; m <= l; ++m)
                r.at(l, m) = at(l, m);
        return r;
    }

    SpectralField& operator+=(const SpectralField& o)
    {
        if (o.l_max_ > l_max_)
            *this = resized(o.l_max_);
        for (int l = 0; l <= o.l_max_; ++l)
            for (int m = -l; m <= l; ++m)
                at(l, m) += o.at(l, m);
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o)
    {
        if (o.l_max_ > l_max_)
            *this = resized(o.l_max_);
        for (int l = 0; l <= o.l_max_; ++l)
            for (int m = -l; m <= l; ++m)
                at(l, m) -= o.at(l, m);
        return *this;
    }
    SpectralField& operator*=(double s)
    {
        for (double& v : c_)
            v *= s;
        return *this;
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField f) { return f *= s; }

private:
    int l_max_ = 0;
    std::vector<double> c_ = {0.0};
};

/// Constant field of the given pointwise value (pure l = 0).
inline SpectralField constant_field(double value, int l_max = 0)
{
    SpectralField f(l_max);
    f.at(0, 0) = value * std::sqrt(4.0 * M_PI);
    return f;
}

/// L2 inner product over the sphere via Parseval, paired over the common band.
inline double inner_product(const SpectralField& f, const SpectralField& g)
{
    const int l_common = std::min(f.l_max(), g.l_max());
    double s = 0.0;
    for (int l = 0; l <= l_common; ++l)
        for (int m = -l; m <= l; ++m)
            s += f.at(l, m) * g.at(l, m);
    return s;
}

inline double norm(const SpectralField& f) { return std::sqrt(inner_product(f, f)); }

/// Spherical Laplace-Beltrami operator: a_{l,m} -> -l(l+1) a_{l,m}.
inline SpectralField laplacian(const SpectralField& f)
{
    SpectralField r(f.l_max());
    for (int l = 0; l <= f.l_max(); ++l) {
        const double eig = -double(l) * (l + 1);
        for (int m = -l; m <= l; ++m)
            r.at(l, m) = eig * f.at(l, m);
    }
    return r;
}

/// Total kinetic energy E[f] = 1/2 sum l(l+1) a_{l,m}^2.
inline double energy(const SpectralField& f)
{
    double s = 0.0;
    for (int l = 1; l <= f.l_max(); ++l)
        for (int m = -l; m <= l; ++m)
            s += double(l) * (l + 1) * f.at(l, m) * f.at(l, m);
    return 0.5 * s;
}

/// Subtract the spherical mean (force a_{0,0} = 0).
inline SpectralField zero_mean(SpectralField f)
{
    f.at(0, 0) = 0.0;
    return f;
}

/// psi0(phi + omega t, theta) + omega x3: longitude shift plus the l=1, m=0
/// harmonic carrying x3 = sin(theta) = sqrt(4 pi / 3) Y_1^0.
inline SpectralField traveling_wave(const SpectralField& psi0, double omega, double t)
{
    SpectralField r = psi0.resized(std::max(psi0.l_max(), 1));
    const double shift = omega * t;
    for (int l = 1; l <= psi0.l_max(); ++l) {
        for (int m = 1; m <= l; ++m) {
            const double c = std::cos(m * shift), s = std::sin(m * shift);
            const double ac = psi0.at(l, m), as = psi0.at(l, -m);
            r.at(l, m) = ac * c + as * s;
            r.at(l, -m) = -ac * s + as * c;
        }
    }
    r.at(1, 0) += omega * std::sqrt(4.0 * M_PI / 3.0);
    return r;
}

} // namespace tetra
