#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "maslovkit/symplectic.hpp"

namespace maslovkit {

/// Path of Lagrangian subspaces on [a,b], backed by an evaluator. Paths
/// built from discrete samples interpolate along Grassmannian geodesics;
/// sampled constructors enforce the principal-angle gap policy by
/// subdividing, and reject data that stays too coarse at max depth.
class LagrangianPath {
public:
    using Evaluator = std::function<LagrangianSubspace(double)>;

    LagrangianPath() = default;
    LagrangianPath(int n, double a, double b, Evaluator eval);

    static LagrangianPath constant(const LagrangianSubspace& l, double a = 0.0, double b = 1.0);
    /// Geodesic from l0 to l1 in the Lagrangian Grassmannian (angles swept
    /// linearly), parametrized on [0,1].
    static LagrangianPath geodesic(const LagrangianSubspace& l0, const LagrangianSubspace& l1);
    /// Piecewise-geodesic interpolation of samples (t strictly increasing,
    /// t_front = a, t_back = b). max_depth bounds the gap-check subdivision.
    static LagrangianPath from_samples(const std::vector<std::pair<double, LagrangianSubspace>>& samples,
                                       int max_depth = 12);

    int n() const { return n_; }
    double t_min() const { return a_; }
    double t_max() const { return b_; }
    LagrangianSubspace at(double t) const { return eval_(t); }

    /// e^{i theta} composed with the whole path.
    LagrangianPath rotated(double theta) const;
    /// Psi applied pointwise (path-independent Psi).
    LagrangianPath transformed(const SymplecticMatrix& psi) const;
    LagrangianPath conjugated_C() const;
    LagrangianPath restricted(double a2, double b2) const;
    LagrangianPath reversed() const;

private:
    int n_ = 0;
    double a_ = 0.0, b_ = 1.0;
    Evaluator eval_;
};

/// Geodesic evaluator between two Lagrangians; shared with hormander().
LagrangianSubspace lagrangian_geodesic_point(const LagrangianSubspace& l0,
                                             const LagrangianSubspace& l1, double t);

}  // namespace maslovkit
