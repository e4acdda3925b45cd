#include "maslovkit/fredholm.hpp"

#include <cmath>

namespace maslovkit {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw PreconditionError(msg);
}

void check_tuple(const std::vector<Subspace>& tuple, int ambient, const char* what) {
    require(!tuple.empty(), "JumpBoundaryProblem: empty boundary tuple");
    for (const auto& v : tuple)
        require(v.ambient_dim() == ambient, "JumpBoundaryProblem: tuple ambient dim mismatch");
    for (size_t j = 1; j < tuple.size(); ++j)
        if (!tuple[j - 1].partially_orthogonal_to(tuple[j]))
            throw PreconditionError(std::string(what) +
                                    ": consecutive members are not partially orthogonal");
}

HalfInteger jump_sum(const std::vector<Subspace>& tuple) {
    std::int64_t total = 0;
    for (size_t j = 1; j < tuple.size(); ++j) total += jump_defect(tuple[j - 1], tuple[j]);
    return HalfInteger(-total);
}

int integer_result(HalfInteger h, const char* what) {
    if (!h.is_integer())
        throw InconclusiveError(std::string(what) + ": half-integer parts failed to cancel, got " +
                                h.str());
    return static_cast<int>(h.as_integer());
}

LagrangianSubspace graph_of_CPsi1(const SymplecticMatrix& phi1) { return graph_CPsi(phi1); }

}  // namespace

int jump_defect(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - 2 * a.meet(b).dim();
}

HalfInteger correction_term(const std::vector<Subspace>& vs, const std::vector<Subspace>& ws) {
    require(!vs.empty() && !ws.empty(), "correction_term: empty tuple");
    check_tuple(vs, vs.front().ambient_dim(), "correction_term lower");
    check_tuple(ws, ws.front().ambient_dim(), "correction_term upper");
    return jump_sum(vs) + jump_sum(ws);
}

bool check_transversality(const SymplecticMatrix& phi1, const LagrangianSubspace& l1,
                          const LagrangianSubspace& l2) {
    return apply(phi1, l1).intersection_dim(l2) == 0;
}

void validate(const JumpBoundaryProblem& p) {
    require(p.n >= 1, "JumpBoundaryProblem: n must be positive");
    auto jumps_increasing = [](const std::vector<double>& s) {
        for (size_t i = 1; i < s.size(); ++i)
            if (!(s[i - 1] < s[i])) return false;
        return true;
    };
    if (p.flavor == BoundaryFlavor::Local) {
        check_tuple(p.lower_tuple, p.n, "lower tuple");
        check_tuple(p.upper_tuple, p.n, "upper tuple");
        require(p.lower_jumps.size() + 1 == p.lower_tuple.size(),
                "JumpBoundaryProblem: lower jump count does not match tuple length");
        if (p.shape == StripShape::Strip) {
            require(p.upper_jumps.size() + 1 == p.upper_tuple.size(),
                    "JumpBoundaryProblem: upper jump count does not match tuple length");
            require(jumps_increasing(p.lower_jumps) && jumps_increasing(p.upper_jumps),
                    "JumpBoundaryProblem: jump positions must increase strictly");
        } else {
            require(p.upper_jumps.size() + 1 == p.upper_tuple.size(),
                    "JumpBoundaryProblem: upper jump count does not match tuple length");
            require(p.corner.ambient_dim() == p.n, "JumpBoundaryProblem: corner subspace missing");
            if (!p.corner.partially_orthogonal_to(p.lower_tuple.front()) ||
                !p.corner.partially_orthogonal_to(p.upper_tuple.front()))
                throw PreconditionError(
                    "JumpBoundaryProblem: corner subspace not partially orthogonal to V0, V0'");
            bool positive = p.shape == StripShape::HalfStripPlus;
            for (double s : p.lower_jumps) require(positive ? s > 0 : s < 0, "jump on wrong side");
            for (double s : p.upper_jumps) require(positive ? s > 0 : s < 0, "jump on wrong side");
            std::vector<double> lo = p.lower_jumps, up = p.upper_jumps;
            if (!positive) {
                for (auto& s : lo) s = -s;
                for (auto& s : up) s = -s;
            }
            require(jumps_increasing(lo) && jumps_increasing(up),
                    "JumpBoundaryProblem: jump positions must be strictly ordered");
        }
    } else {
        check_tuple(p.nonlocal_tuple, 2 * p.n, "nonlocal tuple");
        require(p.lower_jumps.size() + 1 == p.nonlocal_tuple.size(),
                "JumpBoundaryProblem: jump count does not match nonlocal tuple length");
        if (p.shape != StripShape::Strip) {
            require(p.corner.ambient_dim() == p.n,
                    "JumpBoundaryProblem: nonlocal half-strip needs corner V0 in R^n");
            Subspace v0xv0 = product_subspace(p.corner, p.corner);
            if (!p.nonlocal_tuple.front().partially_orthogonal_to(v0xv0))
                throw PreconditionError(
                    "JumpBoundaryProblem: W0 not partially orthogonal to V0 x V0");
            bool positive = p.shape == StripShape::HalfStripPlus;
            std::vector<double> lo = p.lower_jumps;
            if (!positive)
                for (auto& s : lo) s = -s;
            for (double s : lo) require(s > 0, "jump on wrong side");
            require(jumps_increasing(lo), "JumpBoundaryProblem: jumps must be strictly ordered");
        } else {
            require(jumps_increasing(p.lower_jumps),
                    "JumpBoundaryProblem: jumps must increase strictly");
        }
    }
    if (p.shape != StripShape::HalfStripMinus)
        require(static_cast<bool>(p.a_plus), "JumpBoundaryProblem: missing a_plus");
    if (p.shape != StripShape::HalfStripPlus)
        require(static_cast<bool>(p.a_minus), "JumpBoundaryProblem: missing a_minus");
}

Eigen::MatrixXd coefficient_at(const JumpBoundaryProblem& p, double s, double t) {
    if (p.a_st) return p.a_st(s, t);
    const double w = p.asymptotic_from;
    if (p.shape == StripShape::HalfStripPlus || s >= w) return p.a_plus(t);
    if (p.shape == StripShape::HalfStripMinus || s <= -w) return p.a_minus(t);
    // smooth blend between the asymptotes on |s| < w
    double x = 0.5 * (1.0 + std::sin(0.5 * M_PI * s / w));
    return (1.0 - x) * p.a_minus(t) + x * p.a_plus(t);
}

int strip_index(const JumpBoundaryProblem& p, int steps) {
    validate(p);
    require(p.shape == StripShape::Strip && p.flavor == BoundaryFlavor::Local,
            "strip_index: expects a local strip problem");
    SymplecticPath phi_minus = integrate_hamiltonian_path(p.a_minus, p.n, steps);
    SymplecticPath phi_plus = integrate_hamiltonian_path(p.a_plus, p.n, steps);
    LagrangianSubspace nv0 = conormal(p.lower_tuple.front());
    LagrangianSubspace nvk = conormal(p.lower_tuple.back());
    LagrangianSubspace nv0p = conormal(p.upper_tuple.front());
    LagrangianSubspace nvkp = conormal(p.upper_tuple.back());
    if (!check_transversality(phi_minus.at(1.0), nv0, nv0p))
        throw PreconditionError("strip_index: Phi^-(1) N*V_0 meets N*V_0'");
    if (!check_transversality(phi_plus.at(1.0), nvk, nvkp))
        throw PreconditionError("strip_index: Phi^+(1) N*V_k meets N*V_k'");
    HalfInteger mu_minus = maslov(phi_minus.orbit(nv0), LagrangianPath::constant(nv0p));
    HalfInteger mu_plus = maslov(phi_plus.orbit(nvk), LagrangianPath::constant(nvkp));
    HalfInteger total = mu_minus - mu_plus + jump_sum(p.lower_tuple) + jump_sum(p.upper_tuple);
    return integer_result(total, "strip_index");
}

int halfstrip_index(const JumpBoundaryProblem& p, int steps) {
    validate(p);
    require(p.shape != StripShape::Strip && p.flavor == BoundaryFlavor::Local,
            "halfstrip_index: expects a local half-strip problem");
    const bool plus = p.shape == StripShape::HalfStripPlus;
    SymplecticPath phi =
        integrate_hamiltonian_path(plus ? p.a_plus : p.a_minus, p.n, steps);
    LagrangianSubspace nvk = conormal(p.lower_tuple.back());
    LagrangianSubspace nvkp = conormal(p.upper_tuple.back());
    if (!check_transversality(phi.at(1.0), nvk, nvkp))
        throw PreconditionError("halfstrip_index: asymptotic transversality fails");
    HalfInteger mu = maslov(phi.orbit(nvk), LagrangianPath::constant(nvkp));
    HalfInteger total = HalfInteger(p.n) + (plus ? -mu : mu);
    total += HalfInteger(-jump_defect(p.lower_tuple.front(), p.corner));
    total += HalfInteger(-jump_defect(p.upper_tuple.front(), p.corner));
    total += jump_sum(p.lower_tuple) + jump_sum(p.upper_tuple);
    return integer_result(total, "halfstrip_index");
}

int nonlocal_index(const JumpBoundaryProblem& p, int steps) {
    validate(p);
    require(p.flavor == BoundaryFlavor::Nonlocal, "nonlocal_index: expects a nonlocal problem");
    LagrangianSubspace nw0 = conormal(p.nonlocal_tuple.front());
    LagrangianSubspace nwk = conormal(p.nonlocal_tuple.back());
    HalfInteger total(0);
    if (p.shape == StripShape::Strip) {
        SymplecticPath phi_minus = integrate_hamiltonian_path(p.a_minus, p.n, steps);
        SymplecticPath phi_plus = integrate_hamiltonian_path(p.a_plus, p.n, steps);
        if (graph_of_CPsi1(phi_minus.at(1.0)).intersection_dim(nw0) != 0)
            throw PreconditionError("nonlocal_index: graf C Phi^-(1) meets N*W_0");
        if (graph_of_CPsi1(phi_plus.at(1.0)).intersection_dim(nwk) != 0)
            throw PreconditionError("nonlocal_index: graf C Phi^+(1) meets N*W_k");
        HalfInteger mu_minus = maslov(phi_minus.graph_CPsi_path(), LagrangianPath::constant(nw0));
        HalfInteger mu_plus = maslov(phi_plus.graph_CPsi_path(), LagrangianPath::constant(nwk));
        total = mu_minus - mu_plus + jump_sum(p.nonlocal_tuple);
    } else {
        const bool plus = p.shape == StripShape::HalfStripPlus;
        SymplecticPath phi = integrate_hamiltonian_path(plus ? p.a_plus : p.a_minus, p.n, steps);
        if (graph_of_CPsi1(phi.at(1.0)).intersection_dim(nwk) != 0)
            throw PreconditionError("nonlocal_index: graf C Phi(1) meets N*W_k");
        HalfInteger mu = maslov(phi.graph_CPsi_path(), LagrangianPath::constant(nwk));
        Subspace v0xv0 = product_subspace(p.corner, p.corner);
        std::int64_t corner_defect = p.nonlocal_tuple.front().dim() + 2 * p.corner.dim() -
                                     2 * p.nonlocal_tuple.front().meet(v0xv0).dim();
        total = HalfInteger(p.n) + (plus ? -mu : mu) + HalfInteger(-corner_defect) +
                jump_sum(p.nonlocal_tuple);
    }
    return integer_result(total, "nonlocal_index");
}

int analytic_index(const JumpBoundaryProblem& p, int steps) {
    if (p.flavor == BoundaryFlavor::Nonlocal) return nonlocal_index(p, steps);
    return p.shape == StripShape::Strip ? strip_index(p, steps) : halfstrip_index(p, steps);
}

Eigen::MatrixXd coefficient_direct_sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const int n1 = static_cast<int>(a.rows()) / 2;
    const int n2 = static_cast<int>(b.rows()) / 2;
    const int n = n1 + n2;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    auto q1 = [&](int i) { return i; };
    auto p1 = [&](int i) { return n + i; };
    auto q2 = [&](int i) { return n1 + i; };
    auto p2 = [&](int i) { return n + n1 + i; };
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            m(q1(i), q1(j)) = a(i, j);
            m(q1(i), p1(j)) = a(i, n1 + j);
            m(p1(i), q1(j)) = a(n1 + i, j);
            m(p1(i), p1(j)) = a(n1 + i, n1 + j);
        }
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) {
            m(q2(i), q2(j)) = b(i, j);
            m(q2(i), p2(j)) = b(i, n2 + j);
            m(p2(i), q2(j)) = b(n2 + i, j);
            m(p2(i), p2(j)) = b(n2 + i, n2 + j);
        }
    return m;
}

JumpBoundaryProblem double_nonlocal_strip(const JumpBoundaryProblem& p) {
    validate(p);
    require(p.flavor == BoundaryFlavor::Nonlocal && p.shape == StripShape::Strip,
            "double_nonlocal_strip: expects a nonlocal strip problem");
    JumpBoundaryProblem d;
    d.n = 2 * p.n;
    d.shape = StripShape::Strip;
    d.flavor = BoundaryFlavor::Local;
    d.lower_tuple = p.nonlocal_tuple;
    d.upper_tuple = {diagonal_subspace(p.n)};
    for (double s : p.lower_jumps) d.lower_jumps.push_back(2.0 * s);
    Eigen::MatrixXd c = conjugation_C(p.n);
    auto fold = [c](const SymmetricPath& a) {
        return SymmetricPath([a, c](double t) {
            Eigen::MatrixXd first = a(0.5 * t);
            Eigen::MatrixXd second = c * a(1.0 - 0.5 * t) * c;
            return (0.5 * coefficient_direct_sum(first, second)).eval();
        });
    };
    d.a_minus = fold(p.a_minus);
    d.a_plus = fold(p.a_plus);
    auto base = [p](double s, double t) { return coefficient_at(p, s, t); };
    d.a_st = [base, c](double s, double t) {
        Eigen::MatrixXd first = base(0.5 * s, 0.5 * t);
        Eigen::MatrixXd second = c * base(0.5 * s, 1.0 - 0.5 * t) * c;
        return (0.5 * coefficient_direct_sum(first, second)).eval();
    };
    d.asymptotic_from = 2.0 * p.asymptotic_from;
    return d;
}

}  // namespace maslovkit
