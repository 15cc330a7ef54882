#include <doctest.h>

#include <cmath>

#include "fracspec/spectral.hpp"
#include "support.hpp"

using namespace fracspec;

TEST_SUITE("spectral") {

TEST_CASE("analyze picks out an orthonormal basis function") {
    const JacobiBasis basis{0.67, 0.93};
    const QuadRule rule = gauss_legendre(200);
    const double n3 = jacobi_norm(basis, 3);
    const Expansion e =
        analyze([&](double x) { return jacobi_eval(basis, 3, x) / n3; }, basis, 5, rule);
    for (int j = 0; j <= 5; ++j)
        CHECK(std::abs(e.coeffs[j] - (j == 3 ? 1.0 : 0.0)) <= 1e-6);
}

TEST_CASE("analyze of the constant on the Legendre basis") {
    const QuadRule rule = gauss_legendre(200);
    const Expansion e = analyze([](double) { return 1.0; }, {0.0, 0.0}, 2, rule);
    CHECK(e.coeffs[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(e.coeffs[1]) <= 1e-14);
    CHECK(std::abs(e.coeffs[2]) <= 1e-14);
}

TEST_CASE("analyze of a step function against a brute-force oracle") {
    const JacobiBasis basis{0.91, 0.79};  // test-side weights of the step experiment
    const QuadRule rule = gauss_legendre(200);
    const double breaks[] = {0.5};
    const Expansion e =
        analyze([](double x) { return x > 0.5 ? 1.0 : 0.0; }, basis, 0, rule, breaks);

    const QuadRule fine = gauss_legendre(4000);
    const double n0 = jacobi_norm(basis, 0);
    double oracle = 0.0;  // integral over (1/2, 1) of the weighted basis function
    for (int q = 0; q < fine.size(); ++q) {
        const double x = 0.5 + 0.5 * fine.nodes[q];
        oracle += 0.5 * fine.weights[q] * weight_eval(basis, x) * jacobi_eval(basis, 0, x) / n0;
    }
    CHECK(e.coeffs[0] == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("synthesize trivial expansions") {
    Expansion zero{{0.3, 0.4}, {0.0, 0.0, 0.0}};
    Expansion unit{{0.0, 0.0}, {1.0}};
    for (const double x : {0.0, 0.21, 0.5, 0.77, 1.0}) {
        CHECK(synthesize(zero, x) == 0.0);
        CHECK(synthesize(unit, x) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("analyze/synthesize round trip reproduces polynomials") {
    const JacobiBasis basis{0.67, 0.93};
    const QuadRule rule = gauss_legendre(200);
    auto p = [](double x) { return 0.25 - x + 2.0 * x * x * x; };
    const Expansion e = analyze(p, basis, 3, rule);
    for (const double x : {0.05, 0.3, 0.55, 0.8, 0.95})
        CHECK(synthesize(e, x) == doctest::Approx(p(x)).epsilon(1e-8));
}

TEST_CASE("projection idempotence") {
    const QuadRule rule = gauss_legendre(200);
    auto gen = test::rng(23);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (const JacobiBasis basis : {JacobiBasis{0.67, 0.93}, JacobiBasis{0.6069, 0.7931}}) {
        Expansion e{basis, {}};
        e.coeffs.resize(21);
        for (double& c : e.coeffs) c = unif(gen);
        const Expansion back = analyze([&](double x) { return synthesize(e, x); }, basis, 20, rule);
        for (int j = 0; j <= 20; ++j) CHECK(std::abs(back.coeffs[j] - e.coeffs[j]) <= 1e-6);
    }
}

TEST_CASE("projection error decay for x^2.5 has a stable exponent") {
    const JacobiBasis basis{0.67, 0.93};
    const QuadRule rule = gauss_legendre(4000);
    const Expansion full = analyze([](double x) { return std::pow(x, 2.5); }, basis, 64, rule);
    auto tail = [&](int n) {
        double acc = 0.0;
        for (int j = n + 1; j <= 64; ++j) acc += full.coeffs[j] * full.coeffs[j];
        return std::sqrt(acc);
    };
    const double e8 = tail(8), e16 = tail(16), e32 = tail(32);
    CHECK(e16 < e8);
    CHECK(e32 < e16);
    const double k1 = std::log(e8 / e16) / std::log(2.0);
    const double k2 = std::log(e16 / e32) / std::log(2.0);
    CHECK(std::abs(k1 - k2) <= 0.3);
}

TEST_CASE("sobolev_norm closed forms") {
    Expansion single{{0.0, 0.0}, {1.0}};
    for (const double s : {-1.0, 0.0, 0.5, 2.0}) CHECK(sobolev_norm(single, s) == 1.0);

    Expansion e{{0.67, 0.93}, {3.0, -4.0}};
    CHECK(sobolev_norm(e, 0.0) == doctest::Approx(5.0).epsilon(1e-15));

    Expansion decay{{0.0, 0.0}, {}};
    decay.coeffs.resize(21);
    double expected_sq = 0.0;
    for (int j = 0; j <= 20; ++j) {
        decay.coeffs[j] = 1.0 / (1.0 + j * j);
        expected_sq += 1.0 / (1.0 + j * j);  // (1+j^2)^1 * (1+j^2)^{-2}
    }
    CHECK(sobolev_norm(decay, 1.0) == doctest::Approx(std::sqrt(expected_sq)).epsilon(1e-14));
}

TEST_CASE("sobolev_norm is monotone in s") {
    auto gen = test::rng(31);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Expansion e{{0.5, 0.5}, {}};
    e.coeffs.resize(12);
    for (double& c : e.coeffs) c = unif(gen);
    double prev = sobolev_norm(e, -2.0);
    for (double s = -1.5; s <= 2.0; s += 0.5) {
        const double cur = sobolev_norm(e, s);
        CHECK(prev <= cur * (1.0 + 1e-15));
        prev = cur;
    }
}

TEST_CASE("weight_eval values and errors") {
    CHECK(weight_eval({0.0, 0.0}, 0.42) == 1.0);
    CHECK(weight_eval({1.0, 1.0}, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
    const double direct = std::pow(0.75, 0.67) * std::pow(0.25, 0.93);
    const double logs = std::exp(0.67 * std::log1p(-0.25) + 0.93 * std::log(0.25));
    CHECK(weight_eval({0.67, 0.93}, 0.25) == doctest::Approx(direct).epsilon(1e-15));
    CHECK(weight_eval({0.67, 0.93}, 0.25) == doctest::Approx(logs).epsilon(1e-14));

    CHECK(weight_eval({0.5, 0.5}, 0.0) == 0.0);
    CHECK(weight_eval({0.5, 0.5}, 1.0) == 0.0);
    CHECK(weight_eval({0.0, 0.0}, 0.0) == 1.0);
    CHECK_THROWS_AS(weight_eval({-0.5, 0.5}, 1.0), std::domain_error);
    CHECK_THROWS_AS(weight_eval({0.5, -0.5}, 0.0), std::domain_error);
    CHECK_THROWS_AS(weight_eval({0.5, 0.5}, -0.1), std::domain_error);
    CHECK_THROWS_AS(weight_eval({0.5, 0.5}, 1.1), std::domain_error);
}

TEST_CASE("weighted L2 norm identity for omega-weighted expansions") {
    // || omega zeta ||_{L2_{omega^{-1}}} equals the Euclidean norm of zeta's
    // coefficients; the left side is evaluated literally by quadrature.
    const QuadRule rule = gauss_legendre(200);
    auto gen = test::rng(41);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const JacobiBasis bases[] = {{0.6691, 0.9309}, {0.6145, 0.7855}, {0.786, 0.914}};
    for (int trial = 0; trial < 10; ++trial) {
        const JacobiBasis& omega = bases[trial % 3];
        Expansion zeta{omega, {}};
        zeta.coeffs.resize(11);
        for (double& c : zeta.coeffs) c = unif(gen);
        const double quad = integrate(rule, [&](double x) {
            const double z = weight_eval(omega, x) * synthesize(zeta, x);
            return weight_eval({-omega.a, -omega.b}, x) * z * z;
        });
        const double coeff_norm_sq = sobolev_norm(zeta, 0.0) * sobolev_norm(zeta, 0.0);
        CHECK(std::abs(quad - coeff_norm_sq) <= 1e-6 * std::max(1.0, coeff_norm_sq));
    }
}

TEST_CASE("expansion JSON round trip") {
    Expansion e{{0.67, 0.93}, {1.0, -0.5, 0.25e-17, 3.25}};
    const nlohmann::json j = e;
    CHECK(j.contains("basis"));
    CHECK(j["basis"].contains("a"));
    CHECK(j["coeffs"].is_array());
    const Expansion back = j.get<Expansion>();
    CHECK(back == e);
}

}  // TEST_SUITE
