#include "maslovkit/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace maslovkit {

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& vectors, double rank_tol) {
    if (vectors.cols() == 0) return Eigen::MatrixXd(vectors.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(vectors, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return Eigen::MatrixXd(vectors.rows(), 0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * sv(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

Subspace::Subspace(Eigen::MatrixXd orthonormal_frame, double rank_tol)
    : frame_(std::move(orthonormal_frame)), rank_tol_(rank_tol) {
    if (frame_.rows() < 1) throw PreconditionError("Subspace: ambient dimension must be >= 1");
    if (frame_.cols() > frame_.rows())
        throw PreconditionError("Subspace: more frame columns than ambient dimension");
    if (frame_.cols() > 0) {
        Eigen::MatrixXd gram = frame_.transpose() * frame_;
        gram -= Eigen::MatrixXd::Identity(frame_.cols(), frame_.cols());
        if (gram.cwiseAbs().maxCoeff() > 1e-12)
            throw PreconditionError("Subspace: frame columns are not orthonormal");
    }
}

Subspace Subspace::span(const Eigen::MatrixXd& vectors, double rank_tol) {
    if (vectors.rows() < 1) throw PreconditionError("Subspace::span: empty ambient dimension");
    return Subspace(orthonormalize(vectors, rank_tol), rank_tol);
}

Subspace Subspace::zero(int ambient_dim) {
    return Subspace(Eigen::MatrixXd(ambient_dim, 0));
}

Subspace Subspace::full(int ambient_dim) {
    return Subspace(Eigen::MatrixXd::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::coordinate(int ambient_dim, const std::vector<int>& axes) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(ambient_dim, static_cast<int>(axes.size()));
    for (int j = 0; j < static_cast<int>(axes.size()); ++j) {
        if (axes[j] < 0 || axes[j] >= ambient_dim)
            throw PreconditionError("Subspace::coordinate: axis out of range");
        f(axes[j], j) = 1.0;
    }
    return Subspace(f);
}

bool Subspace::contains(const Eigen::VectorXd& v, double tol) const {
    if (v.size() != ambient_dim()) throw PreconditionError("contains: dimension mismatch");
    double nv = v.norm();
    if (nv == 0.0) return true;
    Eigen::VectorXd residual = v - frame_ * (frame_.transpose() * v);
    return residual.norm() <= tol * nv;
}

Subspace Subspace::meet(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
        throw PreconditionError("meet: ambient dimension mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace::zero(ambient_dim());
    // Principal directions with cos(angle) ~ 1 span the intersection.
    Eigen::MatrixXd cross = frame_.transpose() * other.frame_;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol = std::max(rank_tol_, other.rank_tol_) * 10.0;
    std::vector<int> idx;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1.0 - std::max(tol, 1e-8)) idx.push_back(i);
    if (idx.empty()) return Subspace::zero(ambient_dim());
    Eigen::MatrixXd gens(ambient_dim(), static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) {
        Eigen::VectorXd p = frame_ * svd.matrixU().col(idx[k]);
        Eigen::VectorXd q = other.frame_ * svd.matrixV().col(idx[k]);
        gens.col(static_cast<int>(k)) = 0.5 * (p + q);
    }
    return Subspace::span(gens, std::max(rank_tol_, other.rank_tol_));
}

Subspace Subspace::join(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
        throw PreconditionError("join: ambient dimension mismatch");
    Eigen::MatrixXd stacked(ambient_dim(), dim() + other.dim());
    stacked << frame_, other.frame_;
    if (stacked.cols() == 0) return Subspace::zero(ambient_dim());
    return Subspace::span(stacked, std::max(rank_tol_, other.rank_tol_));
}

Subspace Subspace::complement() const {
    const int m = ambient_dim();
    if (dim() == 0) return Subspace::full(m);
    if (dim() == m) return Subspace::zero(m);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame_, Eigen::ComputeFullU);
    return Subspace(svd.matrixU().rightCols(m - dim()), rank_tol_);
}

double Subspace::principal_angle_to(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
        throw PreconditionError("principal_angle_to: ambient dimension mismatch");
    if (dim() != other.dim()) return M_PI_2;
    if (dim() == 0) return 0.0;
    // cosine route loses half the digits near zero; take the sine route
    // (residual against the other projector) whenever the angle is small.
    Eigen::MatrixXd residual = frame_ - other.frame_ * (other.frame_.transpose() * frame_);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd_sin(residual);
    double s = std::clamp(svd_sin.singularValues().maxCoeff(), 0.0, 1.0);
    if (s < 0.7) return std::asin(s);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd_cos(frame_.transpose() * other.frame_);
    double c = std::clamp(svd_cos.singularValues().minCoeff(), -1.0, 1.0);
    return std::acos(c);
}

bool Subspace::same_subspace(const Subspace& other, double angle_tol) const {
    return dim() == other.dim() && principal_angle_to(other) < angle_tol;
}

bool Subspace::partially_orthogonal_to(const Subspace& other, double tol) const {
    if (ambient_dim() != other.ambient_dim())
        throw PreconditionError("partially_orthogonal_to: ambient dimension mismatch");
    Subspace common = meet(other);
    Subspace perp = common.complement();
    Subspace a = meet(perp);
    Subspace b = other.meet(perp);
    if (a.dim() == 0 || b.dim() == 0) return true;
    Eigen::MatrixXd cross = a.frame().transpose() * b.frame();
    return cross.cwiseAbs().maxCoeff() < tol;
}

Subspace product_subspace(const Subspace& a, const Subspace& b) {
    const int m = a.ambient_dim(), l = b.ambient_dim();
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m + l, a.dim() + b.dim());
    f.topLeftCorner(m, a.dim()) = a.frame();
    f.bottomRightCorner(l, b.dim()) = b.frame();
    return Subspace(f, std::max(a.rank_tol(), b.rank_tol()));
}

Subspace diagonal_subspace(int m) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2 * m, m);
    const double s = 1.0 / std::sqrt(2.0);
    f.topRows(m) = s * Eigen::MatrixXd::Identity(m, m);
    f.bottomRows(m) = s * Eigen::MatrixXd::Identity(m, m);
    return Subspace(f);
}

}  // namespace maslovkit
