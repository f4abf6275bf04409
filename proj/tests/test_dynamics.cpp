#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include <ctwalk/ctwalk.hpp>

#include "test_support.hpp"

using namespace ctwalk;
using std::numbers::pi;

namespace {

spectral_decomposition decompose(const graph& g) {
    return eigendecompose(laplacian(g));
}

}  // namespace

TEST_CASE("classical probability basics") {
    auto d = decompose(make_star(100));
    CHECK(std::abs(classical_probability(d, 0, 0, 0.0) - 1.0) < 1e-12);
    CHECK(std::abs(classical_probability(d, 0, 1, 0.0)) < 1e-12);

    // hub return at t = 0.05: 1/N + e^{-Nt} (N-1)/N
    double want = 0.01 + std::exp(-5.0) * 0.99;
    CHECK(std::abs(classical_probability(d, 0, 0, 0.05) - want) < 1e-12);

    CHECK_THROWS_AS(classical_probability(d, 0, 0, -0.1), domain_error);
    CHECK_THROWS_AS(classical_probability(d, 0, 100, 1.0), std::out_of_range);
}

TEST_CASE("classical walk reaches equal partition") {
    for (const auto& g : {make_star(8), make_complete(8)}) {
        auto d = decompose(g);
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(std::abs(classical_probability(d, 0, k, 50.0) - 0.125) < 1e-6);
    }
    // smaller spectral gap, so scale the horizon by it
    auto g = support::random_connected_graph(24, 6, 99);
    auto d = decompose(g);
    double gap = d.eigenvalues[1];
    REQUIRE(gap > 1e-6);
    double t = 40.0 / gap;
    for (std::size_t k = 0; k < g.n; ++k)
        CHECK(std::abs(classical_probability(d, 3, k, t) - 1.0 / double(g.n)) <
              1e-6);
}

TEST_CASE("quantum amplitude at time zero") {
    auto d = decompose(support::random_connected_graph(7, 3, 5));
    for (std::size_t k = 0; k < 7; ++k) {
        auto a = quantum_amplitude(d, 2, k, 0.0);
        CHECK(std::abs(a - complex_amplitude(k == 2 ? 1.0 : 0.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("two-node oscillation") {
    auto d = decompose(make_star(2));
    // hub return probability is cos^2 t, gone entirely at t = pi/2
    CHECK(quantum_probability(d, 0, 0, pi / 2) < 1e-12);
    CHECK(std::abs(quantum_probability(d, 0, 1, pi / 2) - 1.0) < 1e-12);
    // leaf return follows the same cosine by symmetry
    CHECK(quantum_probability(d, 1, 1, pi / 2) < 1e-12);
}

TEST_CASE("star revival and antirevival") {
    auto d = decompose(make_star(100));
    CHECK(std::abs(quantum_probability(d, 0, 0, 2 * pi / 100) - 1.0) < 1e-9);
    CHECK(std::abs(quantum_probability(d, 0, 1, pi / 100) - 4e-4) < 1e-9);
}

TEST_CASE("matrix exponential oracle agrees") {
    auto g = support::random_connected_graph(9, 5, 11);
    auto h = laplacian(g);
    auto d = eigendecompose(h);
    for (double t : {0.3, 1.7}) {
        auto cls = support::expm(h, std::complex<double>(-t, 0.0));
        auto qnt = support::expm(h, std::complex<double>(0.0, -t));
        for (std::size_t j = 0; j < g.n; ++j)
            for (std::size_t k = 0; k < g.n; ++k) {
                CHECK(std::abs(classical_probability(d, j, k, t) -
                               cls[k * g.n + j].real()) < 1e-12);
                CHECK(std::abs(quantum_amplitude(d, j, k, t) -
                               qnt[k * g.n + j]) < 1e-12);
            }
    }
}

TEST_CASE("stochasticity of both walks") {
    for (const auto& g : {make_star(13), make_complete(9),
                          support::random_connected_graph(16, 10, 3)}) {
        auto d = decompose(g);
        for (double t : {0.1, 1.0, 10.0}) {
            for (std::size_t j = 0; j < g.n; ++j) {
                double pc = 0.0, pq = 0.0;
                for (std::size_t k = 0; k < g.n; ++k) {
                    pc += classical_probability(d, j, k, t);
                    pq += quantum_probability(d, j, k, t);
                }
                CHECK(std::abs(pc - 1.0) < 1e-10);
                CHECK(std::abs(pq - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("amplitude matrix is unitary") {
    auto g = support::random_connected_graph(12, 7, 21);
    auto d = decompose(g);
    auto m = amplitude_matrix(d, 1.3);
    const std::size_t n = g.n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            complex_amplitude s = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                s += std::conj(m[r * n + a]) * m[r * n + b];
            CHECK(std::abs(s - complex_amplitude(a == b ? 1.0 : 0.0, 0.0)) <
                  1e-10);
        }
}

TEST_CASE("transition probabilities are symmetric in the pair") {
    auto d = decompose(support::random_connected_graph(10, 6, 8));
    for (std::size_t j = 0; j < 10; ++j)
        for (std::size_t k = 0; k < 10; ++k) {
            CHECK(std::abs(quantum_probability(d, j, k, 0.7) -
                           quantum_probability(d, k, j, 0.7)) < 1e-12);
            CHECK(std::abs(classical_probability(d, j, k, 0.7) -
                           classical_probability(d, k, j, 0.7)) < 1e-12);
        }
}

TEST_CASE("evolution composes over time") {
    auto d = decompose(support::random_connected_graph(10, 4, 17));
    const std::size_t n = 10;
    auto m1 = amplitude_matrix(d, 0.4);
    auto m2 = amplitude_matrix(d, 0.9);
    auto m12 = amplitude_matrix(d, 1.3);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            complex_amplitude s = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                s += m1[a * n + r] * m2[r * n + b];
            CHECK(std::abs(s - m12[a * n + b]) < 1e-9);
        }
}

TEST_CASE("limiting probabilities") {
    auto d100 = decompose(make_star(100));
    auto p100 = group_eigenspaces(d100, 1e-8);
    CHECK(std::abs(limiting_probability(d100, p100, 0, 0) - 0.9802) < 1e-9);

    auto d2 = decompose(make_star(2));
    auto p2 = group_eigenspaces(d2, 1e-8);
    CHECK(std::abs(limiting_probability(d2, p2, 0, 1) - 0.5) < 1e-12);

    // localization strengthens with size
    auto chi11 = [](std::size_t n) {
        auto d = decompose(make_star(n));
        auto p = group_eigenspaces(d, 1e-8);
        return limiting_probability(d, p, 0, 0);
    };
    CHECK(chi11(50) < chi11(100));
    CHECK(chi11(100) < chi11(200));
}

TEST_CASE("limiting matrix rows sum to one and match the pair path") {
    auto g = support::random_connected_graph(14, 9, 31);
    auto d = decompose(g);
    auto p = group_eigenspaces(d, 1e-8);
    auto chi = limiting_matrix(d, p);
    const std::size_t n = g.n;
    for (std::size_t j = 0; j < n; ++j) {
        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            row += chi[k * n + j];
            CHECK(chi[k * n + j] >= 0.0);
            CHECK(chi[k * n + j] == limiting_probability(d, p, j, k));
            CHECK(std::abs(chi[k * n + j] - chi[j * n + k]) < 1e-12);
        }
        CHECK(std::abs(row - 1.0) < 1e-10);
    }
    CHECK_THROWS_AS(limiting_probability(d, group_eigenspaces(decompose(make_star(3)), 1e-8), 0, 0),
                    consistency_error);
}

TEST_CASE("series sampling") {
    auto d = decompose(make_star(100));

    auto single = evolve_series(d, 4, 4, std::vector<double>{0.0},
                                walk_kind::quantum);
    REQUIRE(single.values.size() == 1);
    CHECK(std::abs(single.values[0] - 1.0) < 1e-12);

    auto revival = evolve_series(d, 0, 0, std::vector<double>{0.0, 2 * pi / 100},
                                 walk_kind::quantum);
    CHECK(std::abs(revival.values[0] - 1.0) < 1e-9);
    CHECK(std::abs(revival.values[1] - 1.0) < 1e-9);

    auto grid = linspace(0.0, 0.5, 200);
    auto decay = evolve_series(d, 0, 0, grid, walk_kind::classical);
    for (std::size_t i = 1; i < decay.values.size(); ++i) {
        CHECK(decay.values[i] <= decay.values[i - 1]);
        // strictly falling until the excess over 1/N drowns in rounding
        if (decay.values[i - 1] - 0.01 > 1e-10)
            CHECK(decay.values[i] < decay.values[i - 1]);
    }
    CHECK(std::abs(decay.values.back() - 0.01) < 1e-12);
    for (double v : decay.values) {
        CHECK(v > -1e-12);
        CHECK(v < 1.0 + 1e-12);
    }

    CHECK_THROWS_AS(evolve_series(d, 0, 0, std::vector<double>{0.0, 0.0},
                                  walk_kind::quantum),
                    domain_error);
    try {
        evolve_series(d, 0, 0, std::vector<double>{-1.0, 1.0},
                      walk_kind::classical);
        FAIL("expected domain_error");
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("sample index 0") != std::string::npos);
    }
}
