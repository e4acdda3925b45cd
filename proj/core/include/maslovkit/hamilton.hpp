#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "maslovkit/lagrangian_path.hpp"
#include "maslovkit/symplectic.hpp"

namespace maslovkit {

/// Coefficient path t -> symmetric 2n x 2n matrix.
using SymmetricPath = std::function<Eigen::MatrixXd(double)>;

/// Path of symplectic matrices on [0,1], backed by an evaluator.
class SymplecticPath {
public:
    using Evaluator = std::function<SymplecticMatrix(double)>;

    SymplecticPath() = default;
    SymplecticPath(int n, Evaluator eval) : n_(n), eval_(std::move(eval)) {}

    static SymplecticPath constant(const SymplecticMatrix& m);

    int n() const { return n_; }
    SymplecticMatrix at(double t) const { return eval_(t); }

    /// t -> graf(Psi(t) C), a Lagrangian path in C^{2n}.
    LagrangianPath graph_CPsi_path() const;
    /// t -> Psi(t) L for a fixed Lagrangian L.
    LagrangianPath orbit(const LagrangianSubspace& l) const;

private:
    int n_ = 0;
    Evaluator eval_;
};

/// Solves dPhi/dt = J0 A(t) Phi, Phi(0) = I, by classical RK4 with `steps`
/// uniform steps on [0,1]. A(t) is checked symmetric at the grid (1e-9) and
/// the symplectic defect must stay below 1e-7, else the step count is
/// reported as too coarse. Evaluation between grid points re-integrates
/// from the nearest cached sample.
SymplecticPath integrate_hamiltonian_path(const SymmetricPath& a, int n, int steps = 512);

/// Combined path t -> dsum(C G1(1-t) G1(1)^{-1} C, G2(t)); the local model
/// behind the product formula for the boundary Maslov index.
SymplecticPath product_split_path(const SymplecticPath& g1, const SymplecticPath& g2);

/// Doubled path t -> dsum(C G((1-t)/2) G(1/2)^{-1} C, G((1+t)/2) G(1/2)^{-1}).
SymplecticPath doubled_path(const SymplecticPath& g);

}  // namespace maslovkit
