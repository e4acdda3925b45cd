#pragma once

#include <functional>
#include <vector>

#include "maslovkit/maslov.hpp"

namespace maslovkit {

enum class StripShape { Strip, HalfStripPlus, HalfStripMinus };
enum class BoundaryFlavor { Local, Nonlocal };

/// Boundary data for dbar + A on a strip or half-strip: conormal conditions
/// jumping at prescribed boundary points, with symmetric asymptotic
/// coefficient paths. Local problems carry tuples of subspaces of R^n on
/// both edges; nonlocal problems carry one tuple in R^n x R^n coupling the
/// two edges, and half-strip corners use N*W (local, W in R^n) or N*V0
/// (nonlocal, V0 in R^n).
struct JumpBoundaryProblem {
    int n = 1;
    StripShape shape = StripShape::Strip;
    BoundaryFlavor flavor = BoundaryFlavor::Local;

    std::vector<Subspace> lower_tuple;     // local V_0..V_k
    std::vector<Subspace> upper_tuple;     // local V'_0..V'_{k'}
    std::vector<Subspace> nonlocal_tuple;  // W_0..W_k in R^n x R^n
    Subspace corner;                       // half-strips only

    std::vector<double> lower_jumps;  // s_1..s_k (negative, decreasing, for minus shape)
    std::vector<double> upper_jumps;  // s'_1..s'_{k'} (local strip)

    SymmetricPath a_minus;  // asymptote at s -> -infinity (strip, minus)
    SymmetricPath a_plus;   // asymptote at s -> +infinity (strip, plus)

    /// Coefficient at finite s; when absent cr-lab blends the asymptotes
    /// smoothly across |s| <= asymptotic_from.
    std::function<Eigen::MatrixXd(double, double)> a_st;
    double asymptotic_from = 1.0;
};

void validate(const JumpBoundaryProblem& p);

/// A(s,t) for any s, resolving the default blend.
Eigen::MatrixXd coefficient_at(const JumpBoundaryProblem& p, double s, double t);

/// dim V_{j-1} + dim V_j - 2 dim (V_{j-1} cap V_j): the defect of one jump.
int jump_defect(const Subspace& a, const Subspace& b);

/// c(V_0..V_k; W_0..W_k') = -1/2 sum of lower defects - 1/2 sum of upper
/// defects; consecutive members of each tuple must be partially orthogonal.
HalfInteger correction_term(const std::vector<Subspace>& vs, const std::vector<Subspace>& ws);

bool check_transversality(const SymplecticMatrix& phi1, const LagrangianSubspace& l1,
                          const LagrangianSubspace& l2);

/// Closed-form Fredholm indices of the jumping boundary problems. All
/// intermediate Maslov terms are half-integers; the totals are checked to be
/// integers before returning.
int strip_index(const JumpBoundaryProblem& p, int steps = 512);
int halfstrip_index(const JumpBoundaryProblem& p, int steps = 512);
int nonlocal_index(const JumpBoundaryProblem& p, int steps = 512);
/// Dispatch on shape/flavor.
int analytic_index(const JumpBoundaryProblem& p, int steps = 512);

/// The local strip problem equivalent to a nonlocal strip problem: ambient
/// dimension doubles, the lower tuple is the W-tuple, the upper boundary is
/// the constant diagonal conormal, and the coefficient becomes
/// (1/2)(A(z/2) + C A(conj(z)/2 + i) C) in product coordinates.
JumpBoundaryProblem double_nonlocal_strip(const JumpBoundaryProblem& p);

/// Direct sum of coefficient matrices in the product coordinate layout
/// (q1, q2, p1, p2).
Eigen::MatrixXd coefficient_direct_sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace maslovkit
