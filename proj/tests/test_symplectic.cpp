#include <random>
#include <unsupported/Eigen/MatrixFunctions>
#include "doctest.h"
#include "maslovkit/symplectic.hpp"

using namespace maslovkit;

TEST_CASE("omega0 matches dp wedge dq") {
    Eigen::VectorXd q1(2), ip1(2);
    q1 << 1, 0;   // q-direction
    ip1 << 0, 1;  // p-direction
    CHECK(omega0(q1, ip1) == doctest::Approx(-1.0));
    CHECK(omega0(ip1, q1) == doctest::Approx(1.0));
}

TEST_CASE("conormal of the full and zero subspaces") {
    CHECK(conormal(Subspace::full(3)).same_subspace(LagrangianSubspace::horizontal(3)));
    CHECK(conormal(Subspace::zero(3)).same_subspace(LagrangianSubspace::vertical(3)));
}

TEST_CASE("conormal of a coordinate line in n=2") {
    LagrangianSubspace l = conormal(Subspace::coordinate(2, {0}));
    // span{(e1, 0), (0, e2)} in (q, p) coordinates
    Eigen::VectorXd a(4), b(4);
    a << 1, 0, 0, 0;
    b << 0, 0, 0, 1;
    CHECK(l.as_subspace().contains(a));
    CHECK(l.as_subspace().contains(b));
}

TEST_CASE("conormals are Lagrangian for random subspaces") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        std::mt19937_64 gen(seed);
        std::normal_distribution<double> g;
        int n = 2 + static_cast<int>(seed % 3);
        Eigen::MatrixXd v(n, 1 + static_cast<int>(seed % n));
        for (int i = 0; i < v.rows(); ++i)
            for (int j = 0; j < v.cols(); ++j) v(i, j) = g(gen);
        CHECK(is_lagrangian_frame(conormal(Subspace::span(v)).frame()));
    }
}

TEST_CASE("the (q1, p1) plane is not Lagrangian") {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(4, 2);
    f(0, 0) = 1;  // q1
    f(2, 1) = 1;  // p1
    CHECK_FALSE(is_lagrangian_frame(f));
    CHECK_THROWS_AS((LagrangianSubspace(f)), PreconditionError);
}

TEST_CASE("rank-deficient frames are rejected") {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(4, 2);
    f(0, 0) = 1;
    f(0, 1) = 1;
    CHECK_THROWS_AS(is_lagrangian_frame(f), PreconditionError);
}

TEST_CASE("graphs of Psi C are Lagrangian and C-involution returns the graph") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 1 + static_cast<int>(seed % 3);
        SymplecticMatrix psi = SymplecticMatrix::random(n, seed);
        LagrangianSubspace graph = graph_CPsi(psi);
        CHECK(is_lagrangian_frame(graph.frame()));
        CHECK(conjugate_C(conjugate_C(graph)).same_subspace(graph));
    }
}

TEST_CASE("graph of the identity is the conormal of the diagonal") {
    LagrangianSubspace graph = graph_CPsi(SymplecticMatrix::identity(2));
    LagrangianSubspace ndelta = conormal(diagonal_subspace(2));
    CHECK(graph.same_subspace(ndelta));
}

TEST_CASE("graph of J0 is Lagrangian in R^4") {
    SymplecticMatrix j(standard_J(1));
    CHECK(is_lagrangian_frame(graph_CPsi(j).frame()));
}

TEST_CASE("conormals are C-invariant, C is an involution, rotation conjugates") {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> g;
    Eigen::MatrixXd v(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) v(i, j) = g(gen);
    LagrangianSubspace nv = conormal(Subspace::span(v));
    CHECK(conjugate_C(nv).same_subspace(nv));

    LagrangianSubspace line = rotate(LagrangianSubspace::horizontal(1), M_PI / 4);
    LagrangianSubspace conj = conjugate_C(line);
    CHECK(conj.same_subspace(rotate(LagrangianSubspace::horizontal(1), -M_PI / 4)));
    CHECK(conjugate_C(conj).same_subspace(line));
}

TEST_CASE("symplectic images of Lagrangians are Lagrangian") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SymplecticMatrix psi = SymplecticMatrix::random(2, seed);
        LagrangianSubspace l = rotate(conormal(Subspace::coordinate(2, {0})), 0.3 * seed);
        CHECK(is_lagrangian_frame(apply(psi, l).frame()));
    }
}

TEST_CASE("conormal projections recover V and its complement") {
    Subspace v = Subspace::coordinate(4, {0, 2});
    LagrangianSubspace nv = conormal(v);
    Eigen::MatrixXd qpart = nv.frame().topRows(4);
    Eigen::MatrixXd ppart = nv.frame().bottomRows(4);
    CHECK(Subspace::span(qpart).same_subspace(v));
    CHECK(Subspace::span(ppart).same_subspace(v.complement()));
}

TEST_CASE("random symplectic matrices satisfy the group relation tightly") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SymplecticMatrix m = SymplecticMatrix::random(3, seed);
        CHECK(m.symplectic_defect() < 1e-9);
        CHECK((m.inverse().entries() * m.entries() - Eigen::MatrixXd::Identity(6, 6))
                  .cwiseAbs()
                  .maxCoeff() < 1e-8);
    }
}

TEST_CASE("direct sums act factorwise in product coordinates") {
    SymplecticMatrix a = SymplecticMatrix::random(1, 3);
    SymplecticMatrix b = SymplecticMatrix::random(2, 4);
    SymplecticMatrix s = symplectic_direct_sum(a, b);
    CHECK(s.symplectic_defect() < 1e-8);
    Eigen::VectorXd z1(2), z2(4);
    z1 << 0.5, -1.0;
    z2 << 1.0, 2.0, 3.0, 4.0;
    Eigen::VectorXd lhs = s.entries() * product_embed(z1, z2);
    Eigen::VectorXd rhs = product_embed(a.entries() * z1, b.entries() * z2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}
