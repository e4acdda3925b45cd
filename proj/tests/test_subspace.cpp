#include <random>

#include "doctest.h"
#include "maslovkit/subspace.hpp"

using namespace maslovkit;

namespace {

Subspace random_subspace(int m, int d, std::mt19937_64& gen) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd v(m, d);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j) v(i, j) = g(gen);
    return Subspace::span(v);
}

}  // namespace

TEST_CASE("orthonormal_frame drops dependent vectors") {
    Eigen::MatrixXd v(2, 2);
    v << 1, 2, 0, 0;
    Subspace s = Subspace::span(v);
    CHECK(s.dim() == 1);
    CHECK(s.contains(Eigen::Vector2d(1, 0)));
}

TEST_CASE("empty generator list gives the zero subspace") {
    Subspace s = Subspace::span(Eigen::MatrixXd(3, 0));
    CHECK(s.dim() == 0);
    CHECK(s.ambient_dim() == 3);
}

TEST_CASE("two independent vectors orthonormalize to a 2-frame") {
    Eigen::MatrixXd v(3, 2);
    v << 1, 0, 1, 1, 0, 1;
    Subspace s = Subspace::span(v);
    REQUIRE(s.dim() == 2);
    Eigen::MatrixXd gram = s.frame().transpose() * s.frame();
    CHECK((gram - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    // span is preserved: both generators are inside
    CHECK(s.contains(v.col(0)));
    CHECK(s.contains(v.col(1)));
}

TEST_CASE("ambient dimension zero is rejected") {
    CHECK_THROWS_AS(Subspace::span(Eigen::MatrixXd(0, 0)), PreconditionError);
}

TEST_CASE("meet of coordinate planes") {
    Subspace a = Subspace::coordinate(3, {0, 1});
    Subspace b = Subspace::coordinate(3, {1, 2});
    Subspace m = a.meet(b);
    REQUIRE(m.dim() == 1);
    CHECK(m.contains(Eigen::Vector3d(0, 1, 0)));
}

TEST_CASE("meet is idempotent and respects disjointness") {
    std::mt19937_64 gen(7);
    Subspace v = random_subspace(5, 3, gen);
    CHECK(v.meet(v).same_subspace(v));
    Subspace e1 = Subspace::coordinate(2, {0});
    Subspace e2 = Subspace::coordinate(2, {1});
    CHECK(e1.meet(e2).dim() == 0);
    CHECK_THROWS_AS(e1.meet(random_subspace(3, 1, gen)), PreconditionError);
}

TEST_CASE("complement basics and involution") {
    Subspace e1 = Subspace::coordinate(2, {0});
    CHECK(e1.complement().same_subspace(Subspace::coordinate(2, {1})));
    CHECK(Subspace::zero(4).complement().dim() == 4);

    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace v = random_subspace(6, trial % 5 + 1, gen);
        Subspace w = v.complement();
        CHECK((v.frame().transpose() * w.frame()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(w.complement().same_subspace(v));
    }
}

TEST_CASE("partial orthogonality examples") {
    // coordinate subspaces sharing e1, orthogonal residuals
    Subspace v = Subspace::coordinate(4, {0, 1});
    Subspace w = Subspace::coordinate(4, {0, 2});
    CHECK(is_partially_orthogonal(v, w));

    std::mt19937_64 gen(3);
    Subspace r = random_subspace(5, 2, gen);
    CHECK(is_partially_orthogonal(r, r));

    Eigen::MatrixXd f(2, 1);
    f << 1, 1;
    Subspace diag = Subspace::span(f);
    Subspace e1 = Subspace::coordinate(2, {0});
    CHECK_FALSE(is_partially_orthogonal(e1, diag));
}

TEST_CASE("partial orthogonality is symmetric; meet/join dimension formula") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 50; ++trial) {
        int m = 3 + static_cast<int>(gen() % 4);
        Subspace v = random_subspace(m, 1 + static_cast<int>(gen() % m), gen);
        Subspace w = random_subspace(m, 1 + static_cast<int>(gen() % m), gen);
        CHECK(is_partially_orthogonal(v, w) == is_partially_orthogonal(w, v));
        CHECK(v.meet(w).dim() + v.join(w).dim() == v.dim() + w.dim());
    }
}

TEST_CASE("products and diagonal") {
    Subspace d = diagonal_subspace(3);
    CHECK(d.dim() == 3);
    Eigen::VectorXd v(6);
    v << 1, 2, 3, 1, 2, 3;
    CHECK(d.contains(v));
    Subspace p = product_subspace(Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1}));
    CHECK(p.dim() == 2);
    Eigen::VectorXd u(4);
    u << 1, 0, 0, 1;
    CHECK(p.contains(u));
}
