#include "maslovkit/maslov.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace maslovkit {

namespace {

struct DegenerateCrossing {};

double smallest_angle(const LagrangianSubspace& a, const LagrangianSubspace& b) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.frame().transpose() * b.frame());
    double c = std::clamp(svd.singularValues().maxCoeff(), -1.0, 1.0);
    return std::acos(c);
}

// golden-section refinement of a V-shaped dip of the angle indicator
double refine_minimum(const LagrangianPath& lam, const LagrangianPath& nu, double lo, double hi,
                      double tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = smallest_angle(lam.at(c), nu.at(c));
    double fd = smallest_angle(lam.at(d), nu.at(d));
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = smallest_angle(lam.at(c), nu.at(c));
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = smallest_angle(lam.at(d), nu.at(d));
        }
    }
    return 0.5 * (a + b);
}

// basis of lambda(t) cap nu(t) from aligned principal directions
Eigen::MatrixXd intersection_basis(const LagrangianSubspace& a, const LagrangianSubspace& b,
                                   double angle_tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.frame().transpose() * b.frame(),
                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    std::vector<int> idx;
    for (int i = 0; i < sv.size(); ++i)
        if (std::acos(std::clamp(sv(i), -1.0, 1.0)) < angle_tol) idx.push_back(i);
    Eigen::MatrixXd basis(a.frame().rows(), static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) {
        Eigen::VectorXd p = a.frame() * svd.matrixU().col(idx[k]);
        Eigen::VectorXd q = b.frame() * svd.matrixV().col(idx[k]);
        Eigen::VectorXd v = p + q;
        basis.col(static_cast<int>(k)) = v / v.norm();
    }
    return basis;
}

// Crossing form on the intersection: Gamma(u,v) = d/dt omega0(u, P_lam(t) v)
// minus the same with nu, via symmetric differences of the projectors.
Eigen::MatrixXd crossing_form(const LagrangianPath& lam, const LagrangianPath& nu, double t,
                              const Eigen::MatrixXd& basis, double h, const Eigen::MatrixXd& j) {
    const double lo = std::max(t - h, lam.t_min());
    const double hi = std::min(t + h, lam.t_max());
    Eigen::MatrixXd dlam = (lam.at(hi).frame() * lam.at(hi).frame().transpose() -
                            lam.at(lo).frame() * lam.at(lo).frame().transpose()) /
                           (hi - lo);
    Eigen::MatrixXd dnu = (nu.at(hi).frame() * nu.at(hi).frame().transpose() -
                           nu.at(lo).frame() * nu.at(lo).frame().transpose()) /
                          (hi - lo);
    Eigen::MatrixXd gamma = basis.transpose() * j * (dlam - dnu) * basis;
    return 0.5 * (gamma + gamma.transpose());
}

struct ScanResult {
    std::vector<double> crossings;
};

void scan_interval(const LagrangianPath& lam, const LagrangianPath& nu, double lo, double hi,
                   int points, const MaslovOptions& opts, ScanResult& out) {
    std::vector<double> ts(points);
    std::vector<double> ang(points);
    for (int i = 0; i < points; ++i) {
        ts[i] = lo + (hi - lo) * i / (points - 1.0);
        ang[i] = smallest_angle(lam.at(ts[i]), nu.at(ts[i]));
    }
    const double coarse = 0.35;
    for (int i = 0; i < points; ++i) {
        // boundary cells count as dips too: the regularizing rotation parks
        // former endpoint crossings just inside the interval
        double left = i > 0 ? ang[i - 1] : ang[i] + 1.0;
        double right = i + 1 < points ? ang[i + 1] : ang[i] + 1.0;
        bool local_min = ang[i] <= left && ang[i] <= right && ang[i] < coarse;
        if (!local_min) continue;
        double t = refine_minimum(lam, nu, ts[std::max(i - 1, 0)], ts[std::min(i + 1, points - 1)],
                                  opts.locate_tol);
        double a = smallest_angle(lam.at(t), nu.at(t));
        if (a < opts.crossing_angle_tol) {
            // refinements of one crossing from two brackets agree only to the
            // acos noise floor, so the duplicate window is well above it
            bool dup = false;
            for (double s : out.crossings)
                if (std::abs(s - t) < 3e-6) dup = true;
            if (!dup) out.crossings.push_back(t);
        }
    }
}

// Index of a pair with no boundary crossings: sum of interior signatures.
int mu_regular(const LagrangianPath& lam, const LagrangianPath& nu, const MaslovOptions& opts) {
    const double lo = lam.t_min(), hi = lam.t_max();
    if (smallest_angle(lam.at(lo), nu.at(lo)) < opts.crossing_angle_tol ||
        smallest_angle(lam.at(hi), nu.at(hi)) < opts.crossing_angle_tol)
        throw DegenerateCrossing{};  // regularizing rotation too small, retry
    ScanResult scan;
    scan_interval(lam, nu, lo, hi, opts.scan_points, opts, scan);
    std::sort(scan.crossings.begin(), scan.crossings.end());
    const Eigen::MatrixXd j = standard_J(lam.n());
    int total = 0;
    for (double t : scan.crossings) {
        if (t - lo < 16.0 * opts.locate_tol || hi - t < 16.0 * opts.locate_tol)
            throw DegenerateCrossing{};
        Eigen::MatrixXd basis =
            intersection_basis(lam.at(t), nu.at(t), std::max(opts.crossing_angle_tol, 1e-6));
        if (basis.cols() == 0) continue;
        Eigen::MatrixXd gamma = crossing_form(lam, nu, t, basis, opts.fd_step, j);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gamma);
        const double floor = opts.regular_tol * std::max(1.0, gamma.cwiseAbs().maxCoeff());
        int sig = 0;
        for (int k = 0; k < es.eigenvalues().size(); ++k) {
            double ev = es.eigenvalues()(k);
            if (std::abs(ev) < floor) throw DegenerateCrossing{};
            sig += ev > 0 ? 1 : -1;
        }
        total += sig;
    }
    return total;
}

// smallest nonzero relative angle at the endpoints, for choosing epsilon
double endpoint_gap(const LagrangianPath& lam, const LagrangianPath& nu,
                    const MaslovOptions& opts) {
    double gap = M_PI;
    for (double t : {lam.t_min(), lam.t_max()}) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(lam.at(t).frame().transpose() * nu.at(t).frame());
        for (int i = 0; i < svd.singularValues().size(); ++i) {
            double a = std::acos(std::clamp(svd.singularValues()(i), -1.0, 1.0));
            if (a > opts.crossing_angle_tol) gap = std::min(gap, a);
        }
    }
    return gap;
}

}  // namespace

HalfInteger maslov(const LagrangianPath& lambda, const LagrangianPath& nu,
                   const MaslovOptions& opts) {
    if (lambda.n() != nu.n()) throw PreconditionError("maslov: dimension mismatch");
    if (std::abs(lambda.t_min() - nu.t_min()) > 1e-12 ||
        std::abs(lambda.t_max() - nu.t_max()) > 1e-12)
        throw PreconditionError("maslov: parameter intervals differ");
    double eps0 = std::min(opts.base_epsilon, 0.25 * endpoint_gap(lambda, nu, opts));
    if (eps0 < 32.0 * opts.locate_tol)
        throw InconclusiveError("maslov: endpoint angles too small to regularize");
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
        double eps = eps0 / std::pow(3.0, attempt);
        if (eps < 32.0 * opts.locate_tol) break;
        // late attempts also tilt the angle velocities to split tangencies
        const LagrangianPath* base = &lambda;
        LagrangianPath tilted;
        if (attempt >= 3) {
            double delta = eps;
            double a = lambda.t_min(), b = lambda.t_max();
            LagrangianPath src = lambda;
            tilted = LagrangianPath(lambda.n(), a, b, [src, delta, a, b](double t) {
                return rotate(src.at(t), delta * (t - a) / (b - a));
            });
            base = &tilted;
        }
        try {
            int plus = mu_regular(base->rotated(eps), nu, opts);
            int minus = mu_regular(base->rotated(-eps), nu, opts);
            return HalfInteger(plus + minus);
        } catch (const DegenerateCrossing&) {
            continue;
        }
    }
    throw InconclusiveError("maslov: degenerate crossing unresolved after max refinement");
}

HalfInteger conley_zehnder(const SymplecticPath& psi, const MaslovOptions& opts) {
    if ((psi.at(0.0).entries() - Eigen::MatrixXd::Identity(2 * psi.n(), 2 * psi.n()))
            .cwiseAbs()
            .maxCoeff() > 1e-8)
        throw PreconditionError("conley_zehnder: path must start at the identity");
    LagrangianPath graph = psi.graph_CPsi_path();
    LagrangianPath delta = LagrangianPath::constant(graph_CPsi(SymplecticMatrix::identity(psi.n())));
    return maslov(graph, delta, opts);
}

HalfInteger hormander(const LagrangianSubspace& l0, const LagrangianSubspace& l1,
                      const LagrangianSubspace& nu0, const LagrangianSubspace& nu1,
                      const MaslovOptions& opts) {
    if (l0.n() != l1.n() || l0.n() != nu0.n() || l0.n() != nu1.n())
        throw PreconditionError("hormander: dimension mismatch");
    LagrangianPath nu = LagrangianPath::geodesic(nu0, nu1);
    return maslov(nu, LagrangianPath::constant(l1), opts) -
           maslov(nu, LagrangianPath::constant(l0), opts);
}

HalfInteger mu_relative_boundary(const SymplecticPath& g, const Subspace& w, int dim_R, int dim_Q,
                                 const MaslovOptions& opts) {
    if (w.ambient_dim() != 2 * g.n())
        throw PreconditionError("mu_relative_boundary: W must live in R^m x R^m");
    if ((g.at(0.0).entries() - Eigen::MatrixXd::Identity(2 * g.n(), 2 * g.n())).cwiseAbs().maxCoeff() >
        1e-8)
        throw PreconditionError("mu_relative_boundary: path must start at the identity");
    LagrangianPath graph = g.graph_CPsi_path();
    LagrangianPath target = LagrangianPath::constant(conormal(w));
    HalfInteger mu = maslov(graph, target, opts);
    return mu + HalfInteger(dim_R - dim_Q);
}

}  // namespace maslovkit
