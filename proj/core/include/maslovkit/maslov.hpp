#pragma once

#include "maslovkit/half_integer.hpp"
#include "maslovkit/hamilton.hpp"
#include "maslovkit/lagrangian_path.hpp"

namespace maslovkit {

struct MaslovOptions {
    double crossing_angle_tol = 1e-6;  // smallest principal angle flagging a crossing
    double locate_tol = 1e-10;         // crossing localization resolution in t
    double fd_step = 1e-5;             // finite-difference step for the crossing form
    double regular_tol = 1e-7;         // eigenvalue magnitude below which a form is degenerate
    int scan_points = 512;
    int max_retries = 6;
    double base_epsilon = 1e-4;        // symmetric rotation used to regularize the pair
};

/// Relative Maslov index of two Lagrangian paths (Robbin-Salamon convention,
/// sign fixed so that mu(e^{i alpha t} R, R) = -1/2 - floor(alpha/pi) off the
/// degenerate lattice).
///
/// The pair is evaluated twice with the first path rotated by +eps and -eps;
/// a constant rotation shifts the whole relative angle spectrum rigidly, so
/// each rotated pair has only interior regular crossings and the half-sum of
/// the two integer counts is exactly the half-integer index. Degenerate
/// crossings are retried at smaller eps and finally with a velocity
/// perturbation; an unresolved crossing raises InconclusiveError.
HalfInteger maslov(const LagrangianPath& lambda, const LagrangianPath& nu,
                   const MaslovOptions& opts = {});

/// mu_CZ(Psi) = mu(graf Psi C, N*Delta).
HalfInteger conley_zehnder(const SymplecticPath& psi, const MaslovOptions& opts = {});

/// h(l0,l1;nu0,nu1) = mu(nu, l1) - mu(nu, l0) along a connecting path nu.
HalfInteger hormander(const LagrangianSubspace& l0, const LagrangianSubspace& l1,
                      const LagrangianSubspace& nu0, const LagrangianSubspace& nu1,
                      const MaslovOptions& opts = {});

/// mu(graf G C, N*W) + (dim_R - dim_Q)/2 for a symplectic path G on R^{2m}
/// with G(0) = I and W a linear subspace of R^m x R^m.
HalfInteger mu_relative_boundary(const SymplecticPath& g, const Subspace& w, int dim_R, int dim_Q,
                                 const MaslovOptions& opts = {});

}  // namespace maslovkit
