#include "maslovkit/hamilton.hpp"

#include <cmath>

namespace maslovkit {

SymplecticPath SymplecticPath::constant(const SymplecticMatrix& m) {
    return SymplecticPath(m.n(), [m](double) { return m; });
}

LagrangianPath SymplecticPath::graph_CPsi_path() const {
    auto ev = eval_;
    return LagrangianPath(2 * n_, 0.0, 1.0, [ev](double t) { return graph_CPsi(ev(t)); });
}

LagrangianPath SymplecticPath::orbit(const LagrangianSubspace& l) const {
    if (l.n() != n_) throw PreconditionError("orbit: dimension mismatch");
    auto ev = eval_;
    return LagrangianPath(n_, 0.0, 1.0, [ev, l](double t) { return apply(ev(t), l); });
}

namespace {

Eigen::MatrixXd rk4_step(const SymmetricPath& a, const Eigen::MatrixXd& j, double t, double h,
                         const Eigen::MatrixXd& phi) {
    auto f = [&](double s, const Eigen::MatrixXd& y) -> Eigen::MatrixXd { return j * a(s) * y; };
    Eigen::MatrixXd k1 = f(t, phi);
    Eigen::MatrixXd k2 = f(t + 0.5 * h, phi + 0.5 * h * k1);
    Eigen::MatrixXd k3 = f(t + 0.5 * h, phi + 0.5 * h * k2);
    Eigen::MatrixXd k4 = f(t + h, phi + h * k3);
    return phi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

SymplecticPath integrate_hamiltonian_path(const SymmetricPath& a, int n, int steps) {
    if (steps < 16) throw PreconditionError("integrate_hamiltonian_path: steps must be >= 16");
    const Eigen::MatrixXd j = standard_J(n);
    const double h = 1.0 / steps;
    auto grid = std::make_shared<std::vector<Eigen::MatrixXd>>();
    grid->reserve(steps + 1);
    grid->push_back(Eigen::MatrixXd::Identity(2 * n, 2 * n));
    for (int k = 0; k <= steps; ++k) {
        Eigen::MatrixXd ak = a(k * h);
        if ((ak - ak.transpose()).cwiseAbs().maxCoeff() > 1e-9)
            throw PreconditionError("integrate_hamiltonian_path: coefficient matrix not symmetric");
        if (k < steps) grid->push_back(rk4_step(a, j, k * h, h, grid->back()));
    }
    for (const auto& phi : *grid) {
        double defect = (phi.transpose() * j * phi - j).cwiseAbs().maxCoeff();
        if (defect > 1e-7)
            throw PreconditionError(
                "integrate_hamiltonian_path: symplectic defect " + std::to_string(defect) +
                " exceeds 1e-7; increase steps");
    }
    auto eval = [a, j, grid, h, steps](double t) {
        double tc = std::min(std::max(t, 0.0), 1.0);
        int k = std::min(static_cast<int>(std::floor(tc / h)), steps);
        Eigen::MatrixXd phi = (*grid)[k];
        double rem = tc - k * h;
        if (rem > 1e-15) phi = rk4_step(a, j, k * h, rem, phi);
        return SymplecticMatrix(phi, 1e-6);
    };
    return SymplecticPath(n, eval);
}

SymplecticPath product_split_path(const SymplecticPath& g1, const SymplecticPath& g2) {
    const int n = g1.n();
    if (g2.n() != n) throw PreconditionError("product_split_path: dimension mismatch");
    Eigen::MatrixXd c = conjugation_C(n);
    Eigen::MatrixXd g1_end_inv = g1.at(1.0).inverse().entries();
    auto eval = [g1, g2, c, g1_end_inv, n](double t) {
        Eigen::MatrixXd left = c * g1.at(1.0 - t).entries() * g1_end_inv * c;
        return symplectic_direct_sum(SymplecticMatrix(left, 1e-5), g2.at(t));
    };
    return SymplecticPath(2 * n, eval);
}

SymplecticPath doubled_path(const SymplecticPath& g) {
    const int n = g.n();
    Eigen::MatrixXd c = conjugation_C(n);
    Eigen::MatrixXd mid_inv = g.at(0.5).inverse().entries();
    auto eval = [g, c, mid_inv, n](double t) {
        Eigen::MatrixXd left = c * g.at(0.5 * (1.0 - t)).entries() * mid_inv * c;
        Eigen::MatrixXd right = g.at(0.5 * (1.0 + t)).entries() * mid_inv;
        return symplectic_direct_sum(SymplecticMatrix(left, 1e-5), SymplecticMatrix(right, 1e-5));
    };
    return SymplecticPath(2 * n, eval);
}

}  // namespace maslovkit
