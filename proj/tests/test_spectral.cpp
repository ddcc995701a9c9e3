#include <doctest.h>

#include "test_helpers.hpp"

using namespace duffing;
using namespace duffing::testing;

TEST_CASE("make_operator validates the spectrum") {
    const SpectralOperator op = make_operator({1, 4, 9, 16});
    CHECK(op.lambda1() == 1.0);
    CHECK(op.lambda2() == 4.0);
    CHECK(op.size() == 4);

    CHECK_THROWS_AS(make_operator({1, 1, 4}), NonIncreasingSpectrum);
    CHECK_THROWS_AS(make_operator({-1, 4}), NonPositiveEigenvalue);
    CHECK_THROWS_AS(make_operator({0, 4}), NonPositiveEigenvalue);
    CHECK_THROWS_AS(make_operator({3}), TooFewModes);
}

TEST_CASE("make_params derives sigma0 and gamma0") {
    const ModelParams p = canon();
    CHECK(p.sigma0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.gamma0 == doctest::Approx(0.125).epsilon(1e-15));

    const ModelParams q = make_params(make_operator({1, 4}), 3.0);
    CHECK(q.sigma0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(q.gamma0 == doctest::Approx(0.125).epsilon(1e-15));  // (1/8) min{1, 2, 4}

    CHECK_THROWS_AS(make_params(make_operator({1, 4, 9, 16}), 1.0), LambdaOutOfGap);
    CHECK_THROWS_AS(make_params(make_operator({1, 4, 9, 16}), 4.0), LambdaOutOfGap);
}

TEST_CASE("derived constants stay in range over random gaps") {
    SeededRng rng(41);
    for (int i = 0; i < 200; ++i) {
        const double l1 = rng.uniform(0.1, 5.0);
        const double l2 = l1 + rng.uniform(0.1, 10.0);
        const double lambda = l1 + rng.uniform01() * (l2 - l1);
        if (lambda <= l1 || lambda >= l2) continue;
        const ModelParams p = make_params(make_operator({l1, l2, l2 + 1.0}), lambda);
        CHECK(p.gamma0 > 0.0);
        CHECK(p.gamma0 <= 0.125 + 1e-15);
        CHECK(p.sigma0 > 0.0);
    }
}

TEST_CASE("norms realize the weighted sums") {
    const ModelParams p = canon();
    const StateNorms z = norms(canon_state({0, 0, 0, 0}, {0, 0, 0, 0}), p.op);
    CHECK(z.u == 0.0);
    CHECK(z.u_half == 0.0);
    CHECK(z.u_a == 0.0);
    CHECK(z.v == 0.0);

    const StateNorms a = norms(canon_state({1, 1, 0, 0}, {0, 0, 0, 0}), p.op);
    CHECK(a.u == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(a.u_half == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(a.u_a == doctest::Approx(std::sqrt(17.0)).epsilon(1e-15));
    CHECK(a.v == 0.0);

    const StateNorms b = norms(canon_state({1, 0, 0, 0}, {0, 1, 0, 0}), p.op);
    CHECK(b.u == 1.0);
    CHECK(b.u_half == 1.0);
    CHECK(b.u_a == 1.0);
    CHECK(b.v == 1.0);

    CHECK_THROWS_AS(norms(canon_state({1, 0}, {0, 0}), p.op), DimensionMismatch);
}

TEST_CASE("apply_P scales e1 by 1/6 and fixes the complement") {
    CHECK(apply_P({6, 0, 0, 0}) == Vec{1, 0, 0, 0});
    CHECK(apply_P({0, 1, 2, 3}) == Vec{0, 1, 2, 3});
    CHECK(apply_P({6, 1, 0, 0}) == Vec{1, 1, 0, 0});

    SeededRng rng(5);
    for (int i = 0; i < 100; ++i) {
        const Vec u = rng.gaussian_vec(4);
        const Vec pu = apply_P(u);
        // idempotent on the complement, <Pu,u> = u1^2/6 + sum_{k>=2} u_k^2
        const Vec ppu = apply_P(pu);
        for (std::size_t k = 1; k < 4; ++k) CHECK(ppu[k] == pu[k]);
        const double expected = u[0] * u[0] / 6.0 + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
        CHECK(inner_P(u, u) == doctest::Approx(expected).epsilon(1e-14));
        CHECK(inner_P(u, u) >= 0.0);
    }
}

TEST_CASE("gap inequality on the orthogonal complement of e1") {
    const ModelParams p = canon();
    SeededRng rng(11);
    for (int i = 0; i < 200; ++i) {
        Vec u = rng.gaussian_vec(4);
        u[0] = 0.0;
        const double au = norm_a(u, p.op);
        const double l2 = p.op.lambda2();
        CHECK(au * au >= l2 * l2 * inner(u, u) - 1e-12);
    }
}

TEST_CASE("random_state respects the norm bound") {
    const ModelParams p = canon();
    SeededRng rng(99);
    for (int i = 0; i < 50; ++i) {
        const PhaseState s = random_state(rng, p.op, 1.5);
        CHECK(phase_distance(s, zero_state(4), p.op) <= 1.5 + 1e-12);
    }
}
