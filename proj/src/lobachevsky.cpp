#include "hypack/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hypack {

namespace {

constexpr int kZetaTerms = 40;

// zeta(2), zeta(4), ... zeta(80).  The first three have closed forms; from
// zeta(8) on, the direct sum over 2000 terms already has a tail below 1e-24.
std::array<double, kZetaTerms> make_even_zeta() {
    using std::numbers::pi;
    std::array<double, kZetaTerms> z{};
    z[0] = pi * pi / 6.0;
    z[1] = std::pow(pi, 4) / 90.0;
    z[2] = std::pow(pi, 6) / 945.0;
    for (int n = 3; n < kZetaTerms; ++n) {
        const double s = 2.0 * (n + 1);
        double acc = 0.0;
        for (int k = 2000; k >= 1; --k)
            acc += std::pow(static_cast<double>(k), -s);
        z[n] = acc;
    }
    return z;
}

const std::array<double, kZetaTerms>& even_zeta() {
    static const std::array<double, kZetaTerms> z = make_even_zeta();
    return z;
}

} // namespace

double lobachevsky(double x) {
    using std::numbers::pi;
    // pi-periodicity: reduce to r in [-pi/2, pi/2]; oddness handles the sign.
    const double r = std::remainder(x, pi);
    const double a = std::abs(r);
    if (a < 1e-300)
        return 0.0;

    double sum = a - a * std::log(2.0 * a);
    const double y = (a / pi) * (a / pi);
    double yn = y;
    const auto& z = even_zeta();
    for (int n = 1; n <= kZetaTerms; ++n) {
        const double term = z[n - 1] * a * yn / (n * (2.0 * n + 1.0));
        sum += term;
        if (term < 1e-17)
            break;
        yn *= y;
    }
    return std::copysign(sum, r);
}

} // namespace hypack
