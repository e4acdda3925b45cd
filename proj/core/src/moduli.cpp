#include "maslovkit/moduli.hpp"

namespace maslovkit {

namespace {

HalfInteger need(const ModuliProblem& p, const std::string& name) {
    auto it = p.indices.find(name);
    if (it == p.indices.end())
        throw PreconditionError("virdim: missing index field '" + name + "' for kind " +
                                to_string(p.kind));
    return it->second;
}

std::int64_t as_int(HalfInteger h, const char* what) {
    if (!h.is_integer())
        throw PreconditionError(std::string(what) + ": result is not an integer: " + h.str());
    return h.as_integer();
}

std::int64_t generic_jump_sum(const ModuliProblem& p, bool use_right_dims) {
    if (p.r_dims.size() != p.r_meet_dims.size() + 1)
        throw PreconditionError("virdim: boundary dimension lists are inconsistent");
    std::int64_t total = 0;
    for (size_t j = 0; j < p.r_meet_dims.size(); ++j) {
        int rj = use_right_dims ? p.r_dims[j + 1] : p.r_dims[j];
        if (rj < 0 || p.r_meet_dims[j] < 0 || p.r_meet_dims[j] > rj ||
            p.r_meet_dims[j] > p.r_dims[j] || p.r_meet_dims[j] > p.r_dims[j + 1])
            throw PreconditionError("virdim: intersection dims exceed neighbor dims");
        total += rj - p.r_meet_dims[j];
    }
    return total;
}

}  // namespace

const char* to_string(ModuliKind k) {
    switch (k) {
        case ModuliKind::Strip: return "strip";
        case ModuliKind::HalfStripPlus: return "halfstrip_plus";
        case ModuliKind::HalfStripMinus: return "halfstrip_minus";
        case ModuliKind::PairOfPantsLambda: return "pair_of_pants";
        case ModuliKind::TriangleOmega: return "triangle";
        case ModuliKind::E: return "E";
        case ModuliKind::G: return "G";
        case ModuliKind::GE_Upsilon: return "GE";
        case ModuliKind::C: return "C";
        case ModuliKind::Ev: return "Ev";
        case ModuliKind::IShriek: return "I_shriek";
        case ModuliKind::K_Upsilon_Omega: return "K_omega";
        case ModuliKind::K_alpha_Lambda: return "K_lambda";
        case ModuliKind::G_K: return "G_K";
    }
    return "?";
}

ModuliKind moduli_kind_from_string(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(ModuliKind::G_K); ++k)
        if (s == to_string(static_cast<ModuliKind>(k))) return static_cast<ModuliKind>(k);
    throw PreconditionError("unknown moduli kind '" + s + "'");
}

std::vector<std::string> moduli_index_names(ModuliKind k) {
    switch (k) {
        case ModuliKind::Strip: return {"mu_R0", "mu_Rk"};
        case ModuliKind::HalfStripPlus:
        case ModuliKind::HalfStripMinus: return {"mu_Rk"};
        case ModuliKind::PairOfPantsLambda: return {"mu_x1", "mu_x2", "mu_y"};
        case ModuliKind::TriangleOmega: return {"mu_x1", "mu_x2", "mu_y"};
        case ModuliKind::E: return {"mu_x1", "mu_x2", "mu_theta"};
        case ModuliKind::G: return {"mu_theta", "mu_lambda"};
        case ModuliKind::GE_Upsilon: return {"mu_x1", "mu_x2", "mu_z"};
        case ModuliKind::C: return {"i_x", "mu_lambda"};
        case ModuliKind::Ev: return {"mu_lambda", "i_x"};
        case ModuliKind::IShriek: return {"mu_lambda", "mu_omega"};
        case ModuliKind::K_Upsilon_Omega: return {"i_1", "i_2", "mu_omega"};
        case ModuliKind::K_alpha_Lambda: return {"i_1", "i_2", "mu_theta"};
        case ModuliKind::G_K: return {"i_theta", "mu_lambda"};
    }
    return {};
}

std::int64_t virdim(const ModuliProblem& p) {
    const HalfInteger n = HalfInteger::whole(p.n);
    const HalfInteger one = HalfInteger::whole(1);
    switch (p.kind) {
        case ModuliKind::Strip:
            return as_int(need(p, "mu_R0") - need(p, "mu_Rk") -
                              HalfInteger::whole(generic_jump_sum(p, false)),
                          "virdim[strip]");
        case ModuliKind::HalfStripPlus:
            return as_int(-need(p, "mu_Rk") - HalfInteger::whole(generic_jump_sum(p, false)),
                          "virdim[halfstrip_plus]");
        case ModuliKind::HalfStripMinus:
            return as_int(need(p, "mu_Rk") - HalfInteger::whole(generic_jump_sum(p, true)),
                          "virdim[halfstrip_minus]");
        case ModuliKind::PairOfPantsLambda:
            return as_int(need(p, "mu_x1") + need(p, "mu_x2") - need(p, "mu_y") - n,
                          "virdim[pair_of_pants]");
        case ModuliKind::TriangleOmega:
            return as_int(need(p, "mu_x1") + need(p, "mu_x2") - need(p, "mu_y"),
                          "virdim[triangle]");
        case ModuliKind::E:
            return as_int(need(p, "mu_x1") + need(p, "mu_x2") - need(p, "mu_theta") - n,
                          "virdim[E]");
        case ModuliKind::G:
            return as_int(need(p, "mu_theta") - need(p, "mu_lambda"), "virdim[G]");
        case ModuliKind::GE_Upsilon:
            return as_int(one + need(p, "mu_x1") + need(p, "mu_x2") - need(p, "mu_z") - n,
                          "virdim[GE]");
        case ModuliKind::C:
            return as_int(need(p, "i_x") - need(p, "mu_lambda"), "virdim[C]");
        case ModuliKind::Ev:
            return as_int(need(p, "mu_lambda") - need(p, "i_x"), "virdim[Ev]");
        case ModuliKind::IShriek:
            return as_int(need(p, "mu_lambda") - need(p, "mu_omega") - n, "virdim[I_shriek]");
        case ModuliKind::K_Upsilon_Omega:
            return as_int(need(p, "i_1") + need(p, "i_2") - need(p, "mu_omega") + one,
                          "virdim[K_omega]");
        case ModuliKind::K_alpha_Lambda:
            return as_int(need(p, "i_1") + need(p, "i_2") - need(p, "mu_theta") - n,
                          "virdim[K_lambda]");
        case ModuliKind::G_K:
            return as_int(need(p, "i_theta") - need(p, "mu_lambda") + one, "virdim[G_K]");
    }
    throw PreconditionError("virdim: unknown kind");
}

ModuliReduction generic_reduction(const ModuliProblem& p) {
    const int n = p.n;
    ModuliReduction out;
    out.generic.n = n;
    out.offset = HalfInteger(0);
    auto set = [&](ModuliKind shape, std::vector<int> rdims, std::vector<int> meets,
                   HalfInteger mu0, HalfInteger muk) {
        out.generic.kind = shape;
        out.generic.r_dims = std::move(rdims);
        out.generic.r_meet_dims = std::move(meets);
        if (shape == ModuliKind::Strip) out.generic.indices["mu_R0"] = mu0;
        out.generic.indices["mu_Rk"] = muk;
    };
    const HalfInteger zero(0);
    switch (p.kind) {
        case ModuliKind::PairOfPantsLambda:
            set(ModuliKind::Strip, {2 * n, 2 * n}, {n}, need(p, "mu_x1") + need(p, "mu_x2"),
                need(p, "mu_y"));
            break;
        case ModuliKind::TriangleOmega:
            set(ModuliKind::Strip, {0, n}, {0}, need(p, "mu_x1") + need(p, "mu_x2"),
                need(p, "mu_y"));
            break;
        case ModuliKind::E:
            set(ModuliKind::Strip, {2 * n, n}, {n}, need(p, "mu_x1") + need(p, "mu_x2"),
                need(p, "mu_theta"));
            break;
        case ModuliKind::G:
            set(ModuliKind::Strip, {n, 2 * n}, {n}, need(p, "mu_theta"), need(p, "mu_lambda"));
            break;
        case ModuliKind::GE_Upsilon:
            set(ModuliKind::Strip, {2 * n, n, 2 * n}, {n, n}, need(p, "mu_x1") + need(p, "mu_x2"),
                need(p, "mu_z"));
            out.offset = HalfInteger::whole(1);
            break;
        case ModuliKind::C:
            set(ModuliKind::HalfStripPlus, {n}, {}, zero, need(p, "mu_lambda"));
            out.offset = need(p, "i_x");
            break;
        case ModuliKind::Ev:
            set(ModuliKind::HalfStripMinus, {n}, {}, zero, need(p, "mu_lambda"));
            out.offset = -need(p, "i_x");
            break;
        case ModuliKind::IShriek:
            set(ModuliKind::Strip, {n, 0}, {0}, need(p, "mu_lambda"), need(p, "mu_omega"));
            break;
        case ModuliKind::K_Upsilon_Omega:
            set(ModuliKind::HalfStripPlus, {0, n}, {0}, zero, need(p, "mu_omega"));
            out.offset = need(p, "i_1") + need(p, "i_2") + HalfInteger::whole(1);
            break;
        case ModuliKind::K_alpha_Lambda:
            set(ModuliKind::HalfStripPlus, {2 * n, n}, {n}, zero, need(p, "mu_theta"));
            out.offset = need(p, "i_1") + need(p, "i_2");
            break;
        case ModuliKind::G_K:
            set(ModuliKind::HalfStripPlus, {n, 2 * n}, {n}, zero, need(p, "mu_lambda"));
            out.offset = need(p, "i_theta") + HalfInteger::whole(1);
            break;
        default:
            throw PreconditionError("generic_reduction: kind is already generic");
    }
    return out;
}

IndexPair split_product_index(const SymmetricPath& a1, const SymmetricPath& a2, int m,
                              const Subspace& w1, const Subspace& w2, int steps) {
    if (w1.ambient_dim() != 2 * m || w2.ambient_dim() != 2 * m)
        throw PreconditionError("split_product_index: W_i must live in R^m x R^m");
    SymplecticPath g1 = integrate_hamiltonian_path(a1, m, steps);
    SymplecticPath g2 = integrate_hamiltonian_path(a2, m, steps);
    SymplecticPath gk = product_split_path(g1, g2);
    // W = {(x1,x2,x3,x4) : (x3,x1) in W1, (x2,x4) in W2} in R^{2m} x R^{2m}
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(4 * m, w1.dim() + w2.dim());
    for (int j = 0; j < w1.dim(); ++j) {
        f.block(0, j, m, 1) = w1.frame().block(m, j, m, 1);        // x1
        f.block(2 * m, j, m, 1) = w1.frame().block(0, j, m, 1);    // x3
    }
    for (int j = 0; j < w2.dim(); ++j) {
        f.block(m, w1.dim() + j, m, 1) = w2.frame().block(0, j, m, 1);      // x2
        f.block(3 * m, w1.dim() + j, m, 1) = w2.frame().block(m, j, m, 1);  // x4
    }
    Subspace w_prod = Subspace::span(f);
    IndexPair out;
    out.lhs = mu_relative_boundary(gk, w_prod, w1.dim() + w2.dim(), 2 * m);
    out.rhs = mu_relative_boundary(g1, w1, w1.dim(), m) +
              mu_relative_boundary(g2, w2, w2.dim(), m);
    return out;
}

IndexPair doubling_index(const SymmetricPath& a, int m, const Subspace& w, int steps) {
    if (w.ambient_dim() != 2 * m)
        throw PreconditionError("doubling_index: W must live in R^m x R^m");
    SymplecticPath g = integrate_hamiltonian_path(a, m, steps);
    SymplecticPath gk = doubled_path(g);
    // Delta_Q x R = {(x1,x2,x3,x4) : x1 = x2, (x3,x4) in W}
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(4 * m, m + w.dim());
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < m; ++i) {
        f(i, i) = s;
        f(m + i, i) = s;
    }
    f.block(2 * m, m, 2 * m, w.dim()) = w.frame();
    Subspace w_dbl(f);
    IndexPair out;
    out.lhs = mu_relative_boundary(gk, w_dbl, m + w.dim(), 2 * m);
    out.rhs = mu_relative_boundary(g, w, w.dim(), m);
    return out;
}

}  // namespace maslovkit
