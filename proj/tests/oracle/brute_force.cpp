#include "brute_force.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace oracle {

using pcore::ComplexMatrix;

std::optional<ComplexMatrix> brute_force_pseudo_core(const ComplexMatrix& a, int k) {
    const Eigen::Index n = a.rows();
    ComplexMatrix ak = ComplexMatrix::Identity(n, n);
    for (int i = 0; i < k; ++i) {
        ak = ak * a;
    }
    ComplexMatrix ak1 = ak * a;

    Eigen::JacobiSVD<ComplexMatrix> svd(ak, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    const double ak_scale = std::pow(a.norm(), k);
    while (r < sv.size() && sv[r] > 1e-9 * ak_scale) {
        ++r;
    }
    if (r == 0) {
        ak.setZero();
        ak1.setZero();
    }
    const ComplexMatrix u = svd.matrixU().leftCols(r);
    const ComplexMatrix comp = ComplexMatrix::Identity(n, n) - u * u.adjoint();

    const std::vector<std::function<ComplexMatrix(const ComplexMatrix&)>> maps{
        [&](const ComplexMatrix& x) { return ComplexMatrix(x * ak1); },
        [&](const ComplexMatrix& x) { return ComplexMatrix(a * x - (a * x).adjoint()); },
        [&](const ComplexMatrix& x) { return ComplexMatrix(comp * x); },
    };
    const std::vector<ComplexMatrix> rhs{ak, ComplexMatrix::Zero(n, n),
                                         ComplexMatrix::Zero(n, n)};
    // equilibrate the blocks so the rank threshold sees comparable rows
    const auto inv = [](double v) { return v > 0.0 ? 1.0 / v : 1.0; };
    const std::vector<double> weight{inv(ak_scale * a.norm()), inv(a.norm()), 1.0};

    const Eigen::Index unknowns = 2 * n * n;
    const Eigen::Index block = 2 * n * n;
    Eigen::MatrixXd system(block * static_cast<Eigen::Index>(maps.size()), unknowns);
    Eigen::VectorXd target(system.rows());
    for (std::size_t m = 0; m < maps.size(); ++m) {
        const Eigen::Index off = static_cast<Eigen::Index>(m) * block;
        for (Eigen::Index u_ = 0; u_ < unknowns; ++u_) {
            ComplexMatrix e = ComplexMatrix::Zero(n, n);
            const Eigen::Index entry = u_ / 2;
            e(entry % n, entry / n) = (u_ % 2 == 0) ? pcore::Complex(1, 0) : pcore::Complex(0, 1);
            const ComplexMatrix img = maps[m](e);
            for (Eigen::Index q = 0; q < n * n; ++q) {
                system(off + 2 * q, u_) = weight[m] * img(q % n, q / n).real();
                system(off + 2 * q + 1, u_) = weight[m] * img(q % n, q / n).imag();
            }
        }
        for (Eigen::Index q = 0; q < n * n; ++q) {
            target(off + 2 * q) = weight[m] * rhs[m](q % n, q / n).real();
            target(off + 2 * q + 1) = weight[m] * rhs[m](q % n, q / n).imag();
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(system);
    qr.setThreshold(1e-10);
    if (qr.rank() != unknowns) {
        return std::nullopt;
    }
    const Eigen::VectorXd sol = qr.solve(target);
    const double scale = std::max(1.0, target.norm());
    if ((system * sol - target).norm() > 1e-8 * scale) {
        return std::nullopt;
    }
    ComplexMatrix x(n, n);
    for (Eigen::Index q = 0; q < n * n; ++q) {
        x(q % n, q / n) = {sol(2 * q), sol(2 * q + 1)};
    }
    return x;
}

} // namespace oracle
