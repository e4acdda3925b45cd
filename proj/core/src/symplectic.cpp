#include "maslovkit/symplectic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

namespace maslovkit {

Eigen::MatrixXd standard_J(int n) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    j.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    return j;
}

Eigen::MatrixXd conjugation_C(int n) {
    Eigen::VectorXd d(2 * n);
    d.head(n).setOnes();
    d.tail(n).setConstant(-1.0);
    return d.asDiagonal();
}

double omega0(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    const int n = static_cast<int>(u.size()) / 2;
    // u^T J0 v = p_u . q_v - q_u . p_v
    return u.tail(n).dot(v.head(n)) - u.head(n).dot(v.tail(n));
}

SymplecticMatrix::SymplecticMatrix(Eigen::MatrixXd entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0)
        throw PreconditionError("SymplecticMatrix: matrix must be square of even size");
    if (symplectic_defect() > tol)
        throw PreconditionError("SymplecticMatrix: M^T J0 M - J0 exceeds tolerance");
}

SymplecticMatrix SymplecticMatrix::identity(int n) {
    return SymplecticMatrix(Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

SymplecticMatrix SymplecticMatrix::from_generator(const Eigen::MatrixXd& symmetric) {
    if ((symmetric - symmetric.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw PreconditionError("from_generator: generator must be symmetric");
    const int n = static_cast<int>(symmetric.rows()) / 2;
    Eigen::MatrixXd m = (standard_J(n) * symmetric).exp();
    return SymplecticMatrix(std::move(m), 1e-8);
}

SymplecticMatrix SymplecticMatrix::random(int n, std::uint64_t seed, double scale) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> g(0.0, scale);
    Eigen::MatrixXd s(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i; j < 2 * n; ++j) s(i, j) = s(j, i) = g(gen);
    return from_generator(s);
}

double SymplecticMatrix::symplectic_defect() const {
    const int n = static_cast<int>(entries_.rows()) / 2;
    Eigen::MatrixXd j = standard_J(n);
    return (entries_.transpose() * j * entries_ - j).cwiseAbs().maxCoeff();
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    // M^{-1} = -J0 M^T J0 for symplectic M; cheaper and exactly in the group.
    const int n = this->n();
    Eigen::MatrixXd j = standard_J(n);
    return SymplecticMatrix(-j * entries_.transpose() * j, 1e-6);
}

bool is_lagrangian_frame(const Eigen::MatrixXd& frame, double tol) {
    if (frame.rows() % 2 != 0) return false;
    const int n = static_cast<int>(frame.rows()) / 2;
    if (frame.cols() != n) return false;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame);
    if (svd.singularValues().minCoeff() < 1e-10 * svd.singularValues().maxCoeff())
        throw PreconditionError("is_lagrangian_frame: rank-deficient frame");
    Eigen::MatrixXd q = orthonormalize(frame, 1e-12);
    Eigen::MatrixXd pairing = q.transpose() * standard_J(n) * q;
    return pairing.cwiseAbs().maxCoeff() <= tol;
}

LagrangianSubspace::LagrangianSubspace(const Eigen::MatrixXd& frame, double tol) {
    if (frame.rows() % 2 != 0) throw PreconditionError("LagrangianSubspace: odd ambient dimension");
    const int n = static_cast<int>(frame.rows()) / 2;
    if (frame.cols() != n)
        throw PreconditionError("LagrangianSubspace: frame must be 2n x n");
    frame_ = orthonormalize(frame, 1e-12);
    if (frame_.cols() != n)
        throw PreconditionError("LagrangianSubspace: frame is rank deficient");
    Eigen::MatrixXd pairing = frame_.transpose() * standard_J(n) * frame_;
    if (pairing.cwiseAbs().maxCoeff() > tol)
        throw PreconditionError("LagrangianSubspace: omega0 does not vanish on the span");
}

LagrangianSubspace LagrangianSubspace::horizontal(int n) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2 * n, n);
    f.topRows(n).setIdentity();
    return LagrangianSubspace(f);
}

LagrangianSubspace LagrangianSubspace::vertical(int n) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2 * n, n);
    f.bottomRows(n).setIdentity();
    return LagrangianSubspace(f);
}

double LagrangianSubspace::principal_angle_to(const LagrangianSubspace& other) const {
    return as_subspace().principal_angle_to(other.as_subspace());
}

bool LagrangianSubspace::same_subspace(const LagrangianSubspace& other, double angle_tol) const {
    return principal_angle_to(other) < angle_tol;
}

int LagrangianSubspace::intersection_dim(const LagrangianSubspace& other, double angle_tol) const {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame_.transpose() * other.frame_);
    int d = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > std::cos(angle_tol)) ++d;
    return d;
}

Eigen::MatrixXcd LagrangianSubspace::unitary_frame() const {
    const int nn = n();
    Eigen::MatrixXcd z(nn, nn);
    z.real() = frame_.topRows(nn);
    z.imag() = frame_.bottomRows(nn);
    return z;
}

LagrangianSubspace LagrangianSubspace::from_unitary_frame(const Eigen::MatrixXcd& z) {
    const int n = static_cast<int>(z.rows());
    Eigen::MatrixXd f(2 * n, n);
    f.topRows(n) = z.real();
    f.bottomRows(n) = z.imag();
    return LagrangianSubspace(f);
}

LagrangianSubspace conormal(const Subspace& v) {
    const int n = v.ambient_dim();
    Subspace perp = v.complement();
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2 * n, n);
    f.block(0, 0, n, v.dim()) = v.frame();
    f.block(n, v.dim(), n, perp.dim()) = perp.frame();
    return LagrangianSubspace(f);
}

LagrangianSubspace conjugate_C(const LagrangianSubspace& l) {
    Eigen::MatrixXd f = l.frame();
    f.bottomRows(l.n()) *= -1.0;
    return LagrangianSubspace(f);
}

LagrangianSubspace apply(const SymplecticMatrix& psi, const LagrangianSubspace& l) {
    if (psi.n() != l.n()) throw PreconditionError("apply: dimension mismatch");
    return LagrangianSubspace(orthonormalize(psi.entries() * l.frame(), 1e-12), 1e-7);
}

LagrangianSubspace rotate(const LagrangianSubspace& l, double theta) {
    return LagrangianSubspace::from_unitary_frame(
        std::complex<double>(std::cos(theta), std::sin(theta)) * l.unitary_frame());
}

Eigen::VectorXd product_embed(const Eigen::VectorXd& z1, const Eigen::VectorXd& z2) {
    const int n1 = static_cast<int>(z1.size()) / 2;
    const int n2 = static_cast<int>(z2.size()) / 2;
    Eigen::VectorXd out(2 * (n1 + n2));
    out.segment(0, n1) = z1.head(n1);
    out.segment(n1, n2) = z2.head(n2);
    out.segment(n1 + n2, n1) = z1.tail(n1);
    out.segment(2 * n1 + n2, n2) = z2.tail(n2);
    return out;
}

LagrangianSubspace graph_CPsi(const SymplecticMatrix& psi) {
    const int n = psi.n();
    Eigen::MatrixXd c = conjugation_C(n);
    Eigen::MatrixXd map = psi.entries() * c;
    Eigen::MatrixXd f(4 * n, 2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        Eigen::VectorXd e = Eigen::VectorXd::Unit(2 * n, k);
        f.col(k) = product_embed(e, map * e);
    }
    return LagrangianSubspace(orthonormalize(f, 1e-12), 1e-7);
}

LagrangianSubspace lagrangian_product(const LagrangianSubspace& l1, const LagrangianSubspace& l2) {
    const int n1 = l1.n(), n2 = l2.n();
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2 * (n1 + n2), n1 + n2);
    for (int k = 0; k < n1; ++k)
        f.col(k) = product_embed(l1.frame().col(k), Eigen::VectorXd::Zero(2 * n2));
    for (int k = 0; k < n2; ++k)
        f.col(n1 + k) = product_embed(Eigen::VectorXd::Zero(2 * n1), l2.frame().col(k));
    return LagrangianSubspace(f);
}

SymplecticMatrix symplectic_direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    const int n1 = a.n(), n2 = b.n();
    const int n = n1 + n2;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    // index maps: factor-1 coordinates (q: 0..n1-1, p: n..n+n1-1)
    auto q1 = [&](int i) { return i; };
    auto p1 = [&](int i) { return n + i; };
    auto q2 = [&](int i) { return n1 + i; };
    auto p2 = [&](int i) { return n + n1 + i; };
    const Eigen::MatrixXd& ma = a.entries();
    const Eigen::MatrixXd& mb = b.entries();
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            m(q1(i), q1(j)) = ma(i, j);
            m(q1(i), p1(j)) = ma(i, n1 + j);
            m(p1(i), q1(j)) = ma(n1 + i, j);
            m(p1(i), p1(j)) = ma(n1 + i, n1 + j);
        }
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) {
            m(q2(i), q2(j)) = mb(i, j);
            m(q2(i), p2(j)) = mb(i, n2 + j);
            m(p2(i), q2(j)) = mb(n2 + i, j);
            m(p2(i), p2(j)) = mb(n2 + i, n2 + j);
        }
    return SymplecticMatrix(m, 1e-6);
}

}  // namespace maslovkit
