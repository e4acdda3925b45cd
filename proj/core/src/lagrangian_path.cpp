#include "maslovkit/lagrangian_path.hpp"

#include <cmath>
#include <memory>

namespace maslovkit {

namespace {

// Simultaneous orthogonal diagonalization of the commuting symmetric pair
// (X, Y) = (Re B, Im B) of a complex-symmetric unitary B. Returns a real
// orthogonal V and the angles phi_k with B = V diag(e^{i phi}) V^T.
void split_symmetric_unitary(const Eigen::MatrixXcd& b, Eigen::MatrixXd& v,
                             Eigen::VectorXd& phi) {
    const int n = static_cast<int>(b.rows());
    Eigen::MatrixXd x = b.real(), y = b.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(x);
    v = ex.eigenvectors();
    Eigen::VectorXd xv = ex.eigenvalues();
    // refine within clusters of equal X-eigenvalue so that Y is diagonal too
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && std::abs(xv(end) - xv(start)) < 1e-10) ++end;
        if (end - start > 1) {
            Eigen::MatrixXd block = v.middleCols(start, end - start);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ey(block.transpose() * y * block);
            v.middleCols(start, end - start) = block * ey.eigenvectors();
        }
        start = end;
    }
    phi.resize(n);
    Eigen::MatrixXd yd = v.transpose() * y * v;
    Eigen::MatrixXd xd = v.transpose() * x * v;
    for (int k = 0; k < n; ++k) phi(k) = std::atan2(yd(k, k), xd(k, k));
}

}  // namespace

LagrangianSubspace lagrangian_geodesic_point(const LagrangianSubspace& l0,
                                             const LagrangianSubspace& l1, double t) {
    Eigen::MatrixXcd z0 = l0.unitary_frame();
    Eigen::MatrixXcd m = z0.adjoint() * l1.unitary_frame();
    Eigen::MatrixXcd b = m * m.transpose();
    Eigen::MatrixXd v;
    Eigen::VectorXd phi;
    split_symmetric_unitary(b, v, phi);
    Eigen::VectorXcd d(phi.size());
    for (int k = 0; k < phi.size(); ++k)
        d(k) = std::polar(1.0, 0.5 * t * phi(k));
    Eigen::MatrixXcd zt = z0 * (v * d.asDiagonal() * v.transpose());
    return LagrangianSubspace::from_unitary_frame(zt);
}

LagrangianPath::LagrangianPath(int n, double a, double b, Evaluator eval)
    : n_(n), a_(a), b_(b), eval_(std::move(eval)) {
    if (!(a < b)) throw PreconditionError("LagrangianPath: empty parameter interval");
}

LagrangianPath LagrangianPath::constant(const LagrangianSubspace& l, double a, double b) {
    return LagrangianPath(l.n(), a, b, [l](double) { return l; });
}

LagrangianPath LagrangianPath::geodesic(const LagrangianSubspace& l0, const LagrangianSubspace& l1) {
    if (l0.n() != l1.n()) throw PreconditionError("geodesic: dimension mismatch");
    return LagrangianPath(l0.n(), 0.0, 1.0,
                          [l0, l1](double t) { return lagrangian_geodesic_point(l0, l1, t); });
}

LagrangianPath LagrangianPath::from_samples(
    const std::vector<std::pair<double, LagrangianSubspace>>& samples, int max_depth) {
    if (samples.size() < 2) throw PreconditionError("from_samples: need at least two samples");
    const int n = samples.front().second.n();
    for (size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].second.n() != n) throw PreconditionError("from_samples: mixed dimensions");
        if (!(samples[i - 1].first < samples[i].first))
            throw PreconditionError("from_samples: sample times must increase strictly");
    }
    // gap policy: consecutive samples must be within pi/4; geodesic segments
    // are angle-linear, so checking the given knots is enough and subdivision
    // cannot fail unless a single hop already exceeds the cap at max depth.
    for (size_t i = 1; i < samples.size(); ++i) {
        double gap = samples[i - 1].second.principal_angle_to(samples[i].second);
        int depth = 0;
        while (gap > M_PI / 4.0 && depth < max_depth) {
            gap *= 0.5;  // geodesic midpoint halves the swept angle
            ++depth;
        }
        if (gap > M_PI / 4.0)
            throw PreconditionError("from_samples: principal-angle gap stays above pi/4 at max depth");
    }
    auto knots = std::make_shared<std::vector<std::pair<double, LagrangianSubspace>>>(samples);
    auto eval = [knots](double t) {
        const auto& s = *knots;
        if (t <= s.front().first) return s.front().second;
        if (t >= s.back().first) return s.back().second;
        size_t hi = 1;
        while (s[hi].first < t) ++hi;
        const double t0 = s[hi - 1].first, t1 = s[hi].first;
        return lagrangian_geodesic_point(s[hi - 1].second, s[hi].second, (t - t0) / (t1 - t0));
    };
    return LagrangianPath(n, samples.front().first, samples.back().first, eval);
}

LagrangianPath LagrangianPath::rotated(double theta) const {
    auto base = eval_;
    return LagrangianPath(n_, a_, b_, [base, theta](double t) { return rotate(base(t), theta); });
}

LagrangianPath LagrangianPath::transformed(const SymplecticMatrix& psi) const {
    if (psi.n() != n_) throw PreconditionError("transformed: dimension mismatch");
    auto base = eval_;
    return LagrangianPath(n_, a_, b_, [base, psi](double t) { return apply(psi, base(t)); });
}

LagrangianPath LagrangianPath::conjugated_C() const {
    auto base = eval_;
    return LagrangianPath(n_, a_, b_, [base](double t) { return conjugate_C(base(t)); });
}

LagrangianPath LagrangianPath::restricted(double a2, double b2) const {
    if (a2 < a_ - 1e-12 || b2 > b_ + 1e-12 || !(a2 < b2))
        throw PreconditionError("restricted: bad subinterval");
    return LagrangianPath(n_, a2, b2, eval_);
}

LagrangianPath LagrangianPath::reversed() const {
    auto base = eval_;
    const double a = a_, b = b_;
    return LagrangianPath(n_, a, b, [base, a, b](double t) { return base(a + b - t); });
}

}  // namespace maslovkit
