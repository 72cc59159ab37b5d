#include "cavity.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"

namespace qdot {

namespace {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using cd = std::complex<double>;

struct CavityOperators {
    Matrix2c sqrtG;  // real symmetric
    Matrix2c N;      // -iH - G/2
    double decay_floor;  // slowest decay rate of the integrand
};

CavityOperators make_operators(const CavityGeometry& geo) {
    if (geo.Gamma <= 0.0)
        throw std::domain_error("cavity coupling requires Gamma > 0");
    if (geo.gamma < 0.0)
        throw std::domain_error("tunneling rate gamma must be >= 0");
    if (geo.theta < 0.0 || geo.theta > std::numbers::pi / 2.0)
        throw std::domain_error("misalignment angle theta must lie in [0, pi/2)");
    const double c2 = std::cos(geo.theta) * std::cos(geo.theta);
    if (c2 <= 0.0)
        throw std::domain_error(
            "theta = pi/2: the u-polarized cavity mode does not decay and the "
            "emission integral degenerates");

    const double cu = std::cos(geo.phi), su = std::sin(geo.phi);
    Eigen::Vector2d u(cu, su), v(-su, cu);
    const Eigen::Matrix2d Pu = u * u.transpose(), Pv = v * v.transpose();
    const Eigen::Matrix2d G = geo.Gamma * c2 * Pu + geo.Gamma * Pv;
    const Eigen::Matrix2d rootG =
        std::sqrt(geo.Gamma * c2) * Pu + std::sqrt(geo.Gamma) * Pv;

    Matrix2c H = Matrix2c::Zero();
    H(0, 0) = geo.Delta;

    CavityOperators ops;
    ops.sqrtG = rootG.cast<cd>();
    ops.N = cd(0.0, -1.0) * H - 0.5 * G.cast<cd>();
    ops.decay_floor = geo.Gamma * c2 + 4.0 * geo.gamma;
    return ops;
}

// Assembles rho_P = 1/2 sum_ab |a><b| (x) W_ab from the four 2x2 blocks.
Matrix4c assemble(const std::array<std::array<Matrix2c, 2>, 2>& W) {
    Matrix4c rho = Matrix4c::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            rho.block<2, 2>(2 * a, 2 * b) = 0.5 * W[a][b];
    return rho;
}

CavityDensity finalize(Matrix4c rho_P) {
    const double P = rho_P.trace().real();
    CavityDensity out;
    out.pair_fraction = P;
    out.density.rho = rho_P + 0.25 * (1.0 - P) * Matrix4c::Identity();
    // Clean up numerically tiny Hermiticity violations from the assembly.
    out.density.rho = 0.5 * (out.density.rho + out.density.rho.adjoint().eval());
    return out;
}

}  // namespace

CavityDensity cavity_density(const CavityGeometry& geo) {
    const CavityOperators ops = make_operators(geo);
    const Matrix2c& N = ops.N;

    const cd tr = N.trace();
    const cd det = N.determinant();
    const cd disc = std::sqrt(tr * tr - 4.0 * det);
    const cd l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    const double scale = std::max({std::abs(l1), std::abs(l2), 1e-300});

    std::array<std::array<Matrix2c, 2>, 2> W;
    if (std::abs(l1 - l2) > 1e-6 * scale) {
        const Matrix2c P1 = (N - l2 * Matrix2c::Identity()) / (l1 - l2);
        const Matrix2c P2 = Matrix2c::Identity() - P1;
        const std::array<Matrix2c, 2> proj{P1, P2};
        const std::array<cd, 2> lam{l1, l2};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Matrix2c E = Matrix2c::Zero();
                E(a, b) = 1.0;
                Matrix2c acc = Matrix2c::Zero();
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        const cd denom =
                            4.0 * geo.gamma - lam[i] - std::conj(lam[j]);
                        acc += (proj[i] * E * proj[j].adjoint()) / denom;
                    }
                W[a][b] = ops.sqrtG * acc * ops.sqrtG;
            }
    } else {
        // (Near-)defective pair: e^{tN} = e^{lt} (I + t M) exactly at l1 = l2.
        const cd l = 0.5 * (l1 + l2);
        const Matrix2c M = N - l * Matrix2c::Identity();
        const double s = 4.0 * geo.gamma - 2.0 * l.real();
        const double I0 = 1.0 / s, I1 = 1.0 / (s * s), I2 = 2.0 / (s * s * s);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Matrix2c E = Matrix2c::Zero();
                E(a, b) = 1.0;
                const Matrix2c acc = E * I0 + (M * E + E * M.adjoint()) * I1 +
                                     M * E * M.adjoint() * I2;
                W[a][b] = ops.sqrtG * acc * ops.sqrtG;
            }
    }
    return finalize(assemble(W));
}

namespace {

// 2x2 matrix exponential by scaling and squaring of the Taylor series.
Matrix2c expm2(const Matrix2c& A) {
    const double norm = A.cwiseAbs().maxCoeff();
    int squarings = 0;
    Matrix2c B = A;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        B /= std::pow(2.0, squarings);
    }
    Matrix2c term = Matrix2c::Identity(), sum = Matrix2c::Identity();
    for (int k = 1; k <= 18; ++k) {
        term = (term * B) / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

using Integrand = std::function<Matrix4c(double)>;

Matrix4c simpson(const Integrand& f, double a, double b, const Matrix4c& fa,
                 const Matrix4c& fm, const Matrix4c& fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

void adaptive(const Integrand& f, double a, double b, const Matrix4c& fa,
              const Matrix4c& fm, const Matrix4c& fb, const Matrix4c& whole,
              double tol, int depth, Matrix4c& acc) {
    if (depth > 48)
        throw NumericError("cavity quadrature failed to converge");
    const double m = 0.5 * (a + b);
    const Matrix4c fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
    const Matrix4c left = simpson(f, a, m, fa, fl, fm);
    const Matrix4c right = simpson(f, m, b, fm, fr, fb);
    const double err = (left + right - whole).cwiseAbs().maxCoeff();
    if (err < 15.0 * tol) {
        acc += left + right + (left + right - whole) / 15.0;
        return;
    }
    adaptive(f, a, m, fa, fl, fm, left, 0.5 * tol, depth + 1, acc);
    adaptive(f, m, b, fm, fr, fb, right, 0.5 * tol, depth + 1, acc);
}

}  // namespace

CavityDensity cavity_density_quadrature(const CavityGeometry& geo,
                                        double rel_tol) {
    const CavityOperators ops = make_operators(geo);

    Matrix4c sigma = Matrix4c::Zero();  // |xx>+|yy> pure pair, unit trace
    for (int i : {0, 3})
        for (int j : {0, 3}) sigma(i, j) = 0.5;

    const Integrand f = [&](double t) -> Matrix4c {
        const Matrix2c A =
            ops.sqrtG * expm2(ops.N * t) * std::exp(-2.0 * geo.gamma * t);
        Matrix4c lift = Matrix4c::Zero();
        for (int a = 0; a < 2; ++a)
            lift.block<2, 2>(2 * a, 2 * a) = A;
        return lift * sigma * lift.adjoint();
    };

    const double T = 45.0 / ops.decay_floor;
    const double tol = rel_tol * geo.Gamma;  // integrand scale ~ Gamma
    Matrix4c acc = Matrix4c::Zero();
    // Split the range geometrically so the decaying tail converges fast.
    double a = 0.0;
    for (double b = T / 256.0; a < T; b = std::min(2.0 * b, T)) {
        const Matrix4c fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
        adaptive(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb),
                 tol * (b - a) / T, 0, acc);
        a = b;
        if (b >= T) break;
    }
    return finalize(acc);
}

std::vector<CavitySweepRow> cavity_entanglement_sweep(
    const std::vector<double>& thetas, double phi,
    const std::vector<double>& Deltas, double Gamma, double gamma) {
    std::vector<CavitySweepRow> rows;
    rows.reserve(thetas.size() * Deltas.size());
    for (double Delta : Deltas)
        for (double theta : thetas) {
            const CavityDensity cd = cavity_density({theta, phi, Gamma, Delta, gamma});
            const double C = wootters_concurrence(cd.density);
            rows.push_back({theta, phi, Delta, gamma, cd.pair_fraction, C,
                            entropy_from_concurrence(C)});
        }
    return rows;
}

}  // namespace qdot
