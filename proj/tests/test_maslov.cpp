#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <random>

#include "doctest.h"
#include "maslovkit/maslov.hpp"

using namespace maslovkit;

namespace {

// Closed form for the index of t -> e^{i alpha t} R against R, the anchor
// that pins the sign convention repo-wide:
//   -1/2 - floor(alpha/pi)  off the lattice,  -alpha/pi on it.
HalfInteger rotation_line_oracle(double alpha) {
    double k = alpha / M_PI;
    if (std::abs(k - std::round(k)) < 1e-12)
        return HalfInteger::whole(-static_cast<std::int64_t>(std::llround(k)));
    return HalfInteger(-1 - 2 * static_cast<std::int64_t>(std::floor(k)));
}

LagrangianPath rotation_line_path(double alpha) {
    LagrangianSubspace r = LagrangianSubspace::horizontal(1);
    return LagrangianPath(1, 0.0, 1.0, [r, alpha](double t) { return rotate(r, alpha * t); });
}

LagrangianSubspace random_lagrangian(int n, std::uint64_t seed) {
    return apply(SymplecticMatrix::random(n, seed), LagrangianSubspace::horizontal(n));
}

LagrangianPath random_lagrangian_path(int n, std::uint64_t seed, double scale = 1.5) {
    SymplecticMatrix gen_a = SymplecticMatrix::random(n, seed * 2 + 1, scale);
    LagrangianSubspace start = random_lagrangian(n, seed * 2);
    // one-parameter symplectic group orbit: exp(t log Psi) start
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, scale);
    Eigen::MatrixXd s(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i; j < 2 * n; ++j) s(i, j) = s(j, i) = g(rng);
    return LagrangianPath(n, 0.0, 1.0, [start, s](double t) {
        return apply(SymplecticMatrix::from_generator((t * s).eval()), start);
    });
}

}  // namespace

TEST_CASE("rotating line against the horizontal: pinned half-integer values") {
    for (double alpha : {M_PI / 8, M_PI / 4, M_PI / 3, M_PI, 1.5 * M_PI, 2 * M_PI, -M_PI / 4}) {
        HalfInteger mu = maslov(rotation_line_path(alpha),
                                LagrangianPath::constant(LagrangianSubspace::horizontal(1)));
        CHECK_MESSAGE(mu == rotation_line_oracle(alpha), "alpha = ", alpha);
    }
}

TEST_CASE("constant identical pair has index zero") {
    LagrangianPath r = LagrangianPath::constant(LagrangianSubspace::horizontal(1));
    CHECK(maslov(r, r) == HalfInteger(0));
}

TEST_CASE("catenation: index adds over subdivided intervals") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 1 + static_cast<int>(seed % 2);
        LagrangianPath lam = random_lagrangian_path(n, seed);
        LagrangianPath nu = LagrangianPath::constant(random_lagrangian(n, seed + 100));
        HalfInteger whole = maslov(lam, nu);
        HalfInteger left = maslov(lam.restricted(0.0, 0.5),
                                  LagrangianPath::constant(nu.at(0.0), 0.0, 0.5));
        HalfInteger right = maslov(lam.restricted(0.5, 1.0),
                                   LagrangianPath::constant(nu.at(0.0), 0.5, 1.0));
        CHECK_MESSAGE(whole == left + right, "seed = ", seed);
    }
}

TEST_CASE("symplectic naturality and anti-symplectic sign flip") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 1 + static_cast<int>(seed % 2);
        LagrangianPath lam = random_lagrangian_path(n, seed);
        LagrangianPath nu = random_lagrangian_path(n, seed + 50, 0.7);
        HalfInteger mu = maslov(lam, nu);
        SymplecticMatrix psi = SymplecticMatrix::random(n, seed + 999);
        CHECK(maslov(lam.transformed(psi), nu.transformed(psi)) == mu);
        CHECK(maslov(lam.conjugated_C(), nu.conjugated_C()) == -mu);
    }
}

TEST_CASE("conormal pairs have vanishing index") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 2 + static_cast<int>(seed % 3);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g;
        auto random_skew = [&] {
            Eigen::MatrixXd k(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) k(i, j) = g(rng);
            return ((k - k.transpose()) * 0.5).eval();
        };
        Eigen::MatrixXd k1 = random_skew(), k2 = random_skew();
        Subspace v0 = Subspace::coordinate(n, {0});
        Subspace w0 = Subspace::coordinate(n, {0, 1});
        LagrangianPath nv(n, 0.0, 1.0, [=](double t) {
            Eigen::MatrixXd rot = (t * k1).exp();
            return conormal(Subspace::span(rot * v0.frame()));
        });
        LagrangianPath nw(n, 0.0, 1.0, [=](double t) {
            Eigen::MatrixXd rot = (t * k2).exp();
            return conormal(Subspace::span(rot * w0.frame()));
        });
        CHECK(maslov(nv, nw) == HalfInteger(0));
    }
}

TEST_CASE("product identity: mu(Psi lam, nu) = mu(graf Psi C, C lam x nu)") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        int n = 1 + static_cast<int>(seed % 2);
        std::mt19937_64 rng(seed + 7);
        std::normal_distribution<double> g;
        Eigen::MatrixXd s(2 * n, 2 * n);
        for (int i = 0; i < 2 * n; ++i)
            for (int j = i; j < 2 * n; ++j) s(i, j) = s(j, i) = g(rng);
        SymplecticPath psi(n, [s](double t) {
            return SymplecticMatrix::from_generator((t * s).eval());
        });
        LagrangianPath lam = random_lagrangian_path(n, seed + 300, 0.8);
        LagrangianPath nu = random_lagrangian_path(n, seed + 400, 0.8);
        LagrangianPath moved(n, 0.0, 1.0,
                             [psi, lam](double t) { return apply(psi.at(t), lam.at(t)); });
        HalfInteger lhs = maslov(moved, nu);
        LagrangianPath graph = psi.graph_CPsi_path();
        LagrangianPath product(2 * n, 0.0, 1.0, [lam, nu](double t) {
            return lagrangian_product(conjugate_C(lam.at(t)), nu.at(t));
        });
        CHECK_MESSAGE(maslov(graph, product) == lhs, "seed = ", seed);
    }
}

TEST_CASE("integrator basics") {
    SymmetricPath zero = [](double) { return Eigen::MatrixXd::Zero(2, 2); };
    SymplecticPath triv = integrate_hamiltonian_path(zero, 1, 64);
    CHECK((triv.at(0.7).entries() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    SymmetricPath one = [](double) { return Eigen::MatrixXd::Identity(2, 2); };
    SymplecticPath rot = integrate_hamiltonian_path(one, 1, 256);
    Eigen::Matrix2d expected;
    double t = 0.6;
    expected << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    CHECK((rot.at(t).entries() - expected).cwiseAbs().maxCoeff() < 1e-9);

    SymmetricPath bad = [](double t) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 1) = t;  // not symmetric
        return m;
    };
    CHECK_THROWS_AS(integrate_hamiltonian_path(bad, 1, 64), PreconditionError);

    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    Eigen::MatrixXd s0(4, 4), s1(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            s0(i, j) = s0(j, i) = g(rng);
            s1(i, j) = s1(j, i) = g(rng);
        }
    SymmetricPath wavy = [s0, s1](double t) {
        return (s0 + std::sin(2 * M_PI * t) * s1).eval();
    };
    SymplecticPath phi = integrate_hamiltonian_path(wavy, 2, 256);
    CHECK(phi.at(1.0).symplectic_defect() < 1e-7);
}

TEST_CASE("Conley-Zehnder: small positive rotation and both czi forms") {
    const double eps = 0.3;
    SymmetricPath a = [eps](double) { return (eps * Eigen::MatrixXd::Identity(2, 2)).eval(); };
    SymplecticPath psi = integrate_hamiltonian_path(a, 1, 64);
    // oracle: graf(e^{i eps t} C) meets N*Delta only at t = 0, fully, with a
    // definite negative crossing form; the half-signature there is -1.
    CHECK(conley_zehnder(psi) == HalfInteger::whole(-1));

    // second identity of the definition: mu(N*Delta, graf C Psi)
    LagrangianPath ndelta =
        LagrangianPath::constant(graph_CPsi(SymplecticMatrix::identity(1)));
    Eigen::MatrixXd c = conjugation_C(1);
    LagrangianPath graph_cpsi(2, 0.0, 1.0, [psi, c](double t) {
        SymplecticMatrix m(c * psi.at(t).entries() * c, 1e-6);
        return graph_CPsi(m);
    });
    CHECK(maslov(ndelta, graph_cpsi) == HalfInteger::whole(-1));

    // constant identity path: degenerate everywhere, index 0 by convention
    SymplecticPath id = SymplecticPath::constant(SymplecticMatrix::identity(1));
    CHECK(conley_zehnder(id) == HalfInteger(0));
}

TEST_CASE("Hormander index: conormal quadruples vanish, degenerate arguments vanish") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 2 + static_cast<int>(seed % 3);
        std::mt19937_64 rng(seed * 13);
        auto pick = [&](int d) {
            std::vector<int> axes;
            for (int i = 0; i < n && static_cast<int>(axes.size()) < d; ++i)
                if (rng() % 2) axes.push_back(i);
            if (axes.empty()) axes.push_back(static_cast<int>(rng() % n));
            return Subspace::coordinate(n, axes);
        };
        std::mt19937_64 orng(seed * 29);
        std::normal_distribution<double> g;
        Eigen::MatrixXd k(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) k(i, j) = g(orng);
        Eigen::MatrixXd rot = ((k - k.transpose()) * 0.5).exp();
        auto twist = [&](const Subspace& s) { return Subspace::span(rot * s.frame()); };
        LagrangianSubspace l0 = conormal(twist(pick(1)));
        LagrangianSubspace l1 = conormal(twist(pick(2)));
        LagrangianSubspace m0 = conormal(twist(pick(1)));
        LagrangianSubspace m1 = conormal(twist(pick(2)));
        CHECK(hormander(l0, l1, m0, m1) == HalfInteger(0));
    }
    LagrangianSubspace a = random_lagrangian(2, 5);
    LagrangianSubspace b = random_lagrangian(2, 6);
    CHECK(hormander(a, b, b, b) == HalfInteger(0));  // constant connecting path
    CHECK(hormander(a, a, a, b) == HalfInteger(0));  // identical terms cancel
}

TEST_CASE("Hormander index does not depend on the connecting path") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 1 + static_cast<int>(seed % 3);
        LagrangianSubspace l0 = random_lagrangian(n, seed);
        LagrangianSubspace l1 = random_lagrangian(n, seed + 10);
        LagrangianSubspace nu0 = random_lagrangian(n, seed + 20);
        LagrangianSubspace nu1 = random_lagrangian(n, seed + 30);
        HalfInteger direct = hormander(l0, l1, nu0, nu1);
        // alternative connecting path through a random waypoint
        LagrangianSubspace mid = random_lagrangian(n, seed + 40);
        auto leg1 = LagrangianPath::geodesic(nu0, mid);
        auto leg2 = LagrangianPath::geodesic(mid, nu1);
        LagrangianPath via(n, 0.0, 1.0, [leg1, leg2](double t) {
            // smooth time warp keeps the concatenation C^1 at the junction
            auto warp = [](double x) { return x * x * (3.0 - 2.0 * x); };
            return t <= 0.5 ? leg1.at(warp(2.0 * t)) : leg2.at(warp(2.0 * t - 1.0));
        });
        HalfInteger alt = maslov(via, LagrangianPath::constant(l1)) -
                          maslov(via, LagrangianPath::constant(l0));
        CHECK_MESSAGE(direct == alt, "seed = ", seed);
    }
}

TEST_CASE("mu_relative_boundary reduces to Conley-Zehnder on the diagonal") {
    std::mt19937_64 rng(91);
    std::normal_distribution<double> g;
    Eigen::MatrixXd s(2, 2);
    s(0, 0) = 0.9;
    s(1, 1) = -0.4;
    s(0, 1) = s(1, 0) = 0.2;
    SymmetricPath a = [s](double t) { return (s * (1.0 + 0.3 * std::sin(t))).eval(); };
    SymplecticPath gpath = integrate_hamiltonian_path(a, 1, 128);
    HalfInteger via_boundary = mu_relative_boundary(gpath, diagonal_subspace(1), 1, 1);
    CHECK(via_boundary == conley_zehnder(gpath));
}
