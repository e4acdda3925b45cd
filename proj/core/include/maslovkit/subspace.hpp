#pragma once

#include <Eigen/Dense>
#include <vector>

#include "maslovkit/errors.hpp"

namespace maslovkit {

/// Linear subspace of R^m held as an orthonormal frame (m x d).
/// Rank decisions go through an SVD with a relative singular value cutoff;
/// the zero subspace is an m x 0 frame.
class Subspace {
public:
    static constexpr double kDefaultRankTol = 1e-9;

    Subspace() = default;
    Subspace(Eigen::MatrixXd orthonormal_frame, double rank_tol = kDefaultRankTol);

    /// Span of arbitrary (possibly dependent) vectors, orthonormalized.
    static Subspace span(const Eigen::MatrixXd& vectors, double rank_tol = kDefaultRankTol);
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    /// Span of the coordinate axes listed in `axes`.
    static Subspace coordinate(int ambient_dim, const std::vector<int>& axes);

    int ambient_dim() const { return static_cast<int>(frame_.rows()); }
    int dim() const { return static_cast<int>(frame_.cols()); }
    double rank_tol() const { return rank_tol_; }
    const Eigen::MatrixXd& frame() const { return frame_; }

    /// Orthogonal projector frame * frame^T.
    Eigen::MatrixXd projector() const { return frame_ * frame_.transpose(); }

    bool contains(const Eigen::VectorXd& v, double tol = 1e-8) const;

    Subspace meet(const Subspace& other) const;
    Subspace join(const Subspace& other) const;
    Subspace complement() const;

    /// Largest principal angle when dims agree; pi/2 if they differ.
    double principal_angle_to(const Subspace& other) const;
    bool same_subspace(const Subspace& other, double angle_tol = 1e-8) const;

    bool partially_orthogonal_to(const Subspace& other, double tol = 1e-8) const;

private:
    Eigen::MatrixXd frame_;  // m x d, orthonormal columns
    double rank_tol_ = kDefaultRankTol;
};

/// Orthonormalize the columns of `vectors` keeping numerical rank only.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& vectors, double rank_tol);

inline Subspace orthonormal_frame(const Eigen::MatrixXd& vectors,
                                  double rank_tol = Subspace::kDefaultRankTol) {
    return Subspace::span(vectors, rank_tol);
}
inline Subspace meet(const Subspace& a, const Subspace& b) { return a.meet(b); }
inline Subspace join(const Subspace& a, const Subspace& b) { return a.join(b); }
inline Subspace complement(const Subspace& a) { return a.complement(); }
inline bool is_partially_orthogonal(const Subspace& a, const Subspace& b) {
    return a.partially_orthogonal_to(b);
}

/// {(x, y) in R^{2m} : x in a, y in b} with the (x, y) block layout.
Subspace product_subspace(const Subspace& a, const Subspace& b);
/// Diagonal of R^m x R^m.
Subspace diagonal_subspace(int m);

}  // namespace maslovkit
