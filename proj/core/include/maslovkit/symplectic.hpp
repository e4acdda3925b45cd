#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "maslovkit/subspace.hpp"

namespace maslovkit {

/// T*R^n identified with R^{2n} = C^n, coordinates ordered (q_1..q_n, p_1..p_n).
/// Multiplication by i is J0 = [[0,-I],[I,0]] and the symplectic form is
/// omega0(u,v) = u^T J0 v, the imaginary part of the Hermitian product.
/// The conjugation C maps (q,p) to (q,-p).

Eigen::MatrixXd standard_J(int n);
Eigen::MatrixXd conjugation_C(int n);
double omega0(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

class SymplecticMatrix {
public:
    static constexpr double kGroupTol = 1e-9;

    SymplecticMatrix() = default;
    explicit SymplecticMatrix(Eigen::MatrixXd entries, double tol = kGroupTol);

    static SymplecticMatrix identity(int n);
    /// exp(J0 S) for symmetric S; exact group membership up to integrator error.
    static SymplecticMatrix from_generator(const Eigen::MatrixXd& symmetric);
    static SymplecticMatrix random(int n, std::uint64_t seed, double scale = 1.0);

    int n() const { return static_cast<int>(entries_.rows()) / 2; }
    const Eigen::MatrixXd& entries() const { return entries_; }
    double symplectic_defect() const;

    SymplecticMatrix inverse() const;
    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
        return SymplecticMatrix(a.entries_ * b.entries_);
    }

private:
    Eigen::MatrixXd entries_;
};

class LagrangianSubspace {
public:
    LagrangianSubspace() = default;
    /// Frame columns are orthonormalized; omega0 must vanish on the span.
    explicit LagrangianSubspace(const Eigen::MatrixXd& frame, double tol = 1e-10);

    static LagrangianSubspace horizontal(int n);  // R^n = zero section
    static LagrangianSubspace vertical(int n);    // iR^n = the fiber

    int n() const { return static_cast<int>(frame_.cols()); }
    const Eigen::MatrixXd& frame() const { return frame_; }
    Subspace as_subspace() const { return Subspace(frame_); }

    double principal_angle_to(const LagrangianSubspace& other) const;
    bool same_subspace(const LagrangianSubspace& other, double angle_tol = 1e-8) const;
    int intersection_dim(const LagrangianSubspace& other, double angle_tol = 1e-8) const;

    /// Frame as a complex n x n matrix Z = Q + iP; Z is unitary.
    Eigen::MatrixXcd unitary_frame() const;
    static LagrangianSubspace from_unitary_frame(const Eigen::MatrixXcd& z);

private:
    Eigen::MatrixXd frame_;  // 2n x n orthonormal, omega0-isotropic
};

bool is_lagrangian_frame(const Eigen::MatrixXd& frame, double tol = 1e-10);

/// N*V = V + i V^perp.
LagrangianSubspace conormal(const Subspace& v);
/// CL: negate the p-part of every frame column.
LagrangianSubspace conjugate_C(const LagrangianSubspace& l);
/// Psi L, re-orthonormalized.
LagrangianSubspace apply(const SymplecticMatrix& psi, const LagrangianSubspace& l);
/// e^{i theta} L.
LagrangianSubspace rotate(const LagrangianSubspace& l, double theta);

/// graf(Psi C) = {(w, Psi C w)} inside C^n x C^n = C^{2n}.
/// The product uses coordinates (q_1, q_2, p_1, p_2); the product symplectic
/// form is then again the standard omega0 on R^{4n}.
LagrangianSubspace graph_CPsi(const SymplecticMatrix& psi);
/// L1 x L2 in the same product coordinate layout.
LagrangianSubspace lagrangian_product(const LagrangianSubspace& l1, const LagrangianSubspace& l2);
/// Psi1 x Psi2 acting on C^{n1} x C^{n2} in product coordinates.
SymplecticMatrix symplectic_direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b);

/// Embed a vector of C^{n1} x C^{n2} given the two factors.
Eigen::VectorXd product_embed(const Eigen::VectorXd& z1, const Eigen::VectorXd& z2);

}  // namespace maslovkit
