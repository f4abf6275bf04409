#include <catch_amalgamated.hpp>

#include <cmath>

#include <ctwalk/ctwalk.hpp>

#include "test_support.hpp"

using namespace ctwalk;
using vec = std::vector<double>;

TEST_CASE("first branch vector of the three-node star") {
    // raw |3> - |2> orthonormalizes to sqrt(1/2)(|3> - |2>)
    auto out = gram_schmidt({vec{0, -1, 1}});
    const double r = std::sqrt(0.5);
    CHECK(support::sign_insensitive_diff(out[0], vec{0, -r, r}) < 1e-15);
}

TEST_CASE("already-orthonormal input is a fixed point") {
    std::vector<vec> basis = {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}};
    auto out = gram_schmidt(basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(support::sign_insensitive_diff(out[i], basis[i]) < 1e-15);
}

TEST_CASE("first output stays parallel to the first input") {
    std::vector<vec> in = {{3, 1, -2, 0.5}, {1, 1, 1, 1}, {0, 2, 0, 1}};
    auto out = gram_schmidt(in);
    double norm = std::sqrt(detail::dot(in[0], in[0]));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(out[0][i] - in[0][i] / norm) < 1e-15);
}

TEST_CASE("degenerate-branch coefficients of a five-node star") {
    // raw set {|i+2> - |2> : i = 1..3}; outputs carry sqrt(i/(i+1)) on the
    // new leaf and -sqrt(1/(i(i+1))) on the earlier ones
    std::vector<vec> raw;
    for (std::size_t i = 1; i <= 3; ++i) {
        vec v(5, 0.0);
        v[i + 1] = 1.0;
        v[1] = -1.0;
        raw.push_back(v);
    }
    auto out = gram_schmidt(raw);
    for (std::size_t i = 1; i <= 3; ++i) {
        vec want(5, 0.0);
        want[i + 1] = std::sqrt(double(i) / double(i + 1));
        for (std::size_t j = 1; j <= i; ++j)
            want[j] = -std::sqrt(1.0 / (double(i) * double(i + 1)));
        CHECK(support::sign_insensitive_diff(out[i - 1], want) < 1e-12);
    }
}

TEST_CASE("full star and complete bases are reproduced") {
    for (std::size_t n = 3; n <= 32; ++n) {
        auto star_out = gram_schmidt(star_raw_eigenstates(n));
        auto star_exact = star_eigensystem(n);
        // raw order: degenerate branches, uniform, hub-weighted
        for (std::size_t i = 0; i + 2 < n; ++i)
            CHECK(support::sign_insensitive_diff(star_out[i],
                                                 star_exact.vector(i + 1)) < 1e-12);
        CHECK(support::sign_insensitive_diff(star_out[n - 2],
                                             star_exact.vector(0)) < 1e-12);
        CHECK(support::sign_insensitive_diff(star_out[n - 1],
                                             star_exact.vector(n - 1)) < 1e-12);

        auto comp_out = gram_schmidt(complete_raw_eigenstates(n));
        auto comp_exact = complete_eigensystem(n);
        for (std::size_t i = 0; i + 1 < n; ++i)
            CHECK(support::sign_insensitive_diff(comp_out[i],
                                                 comp_exact.vector(i + 1)) < 1e-12);
        CHECK(support::sign_insensitive_diff(comp_out[n - 1],
                                             comp_exact.vector(0)) < 1e-12);
    }
}

TEST_CASE("unnormalized intermediates keep the 1/i pattern") {
    // before normalization, branch i is |i+2> - (1/i) sum_{j=2..i+1} |j>
    std::vector<vec> raw;
    const std::size_t n = 6;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        vec v(n, 0.0);
        v[i + 1] = 1.0;
        v[1] = -1.0;
        raw.push_back(v);
    }
    auto mid = gram_schmidt_classical_unnormalized(raw);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const vec& v = mid[i - 1];
        CHECK(std::abs(v[0]) < 1e-15);
        CHECK(std::abs(v[i + 1] - 1.0) < 1e-12);
        for (std::size_t j = 1; j <= i; ++j)
            CHECK(std::abs(v[j] + 1.0 / double(i)) < 1e-12);
        for (std::size_t j = i + 2; j < n; ++j) CHECK(std::abs(v[j]) < 1e-15);
    }
}

TEST_CASE("classical and modified variants agree") {
    for (std::size_t n : {4, 9, 16}) {
        auto a = gram_schmidt(star_raw_eigenstates(n));
        auto b = gram_schmidt_classical(star_raw_eigenstates(n));
        for (std::size_t k = 0; k < n; ++k)
            CHECK(support::max_abs_diff(a[k], b[k]) < 1e-10);
    }
}

TEST_CASE("orthonormality of outputs on generic input") {
    std::mt19937_64 rng(42);
    std::vector<vec> in;
    for (int v = 0; v < 8; ++v) {
        vec x(10);
        for (auto& e : x) e = 2.0 * support::unit_real(rng) - 1.0;
        in.push_back(x);
    }
    for (const auto& out : {gram_schmidt(in), gram_schmidt_classical(in)}) {
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i; j < out.size(); ++j)
                CHECK(std::abs(detail::dot(out[i], out[j]) -
                               (i == j ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("rank deficiency names the offending vector") {
    std::vector<vec> in = {{1, 0}, {0, 1}, {1, 1}};
    try {
        gram_schmidt(in);
        FAIL("expected dependent_input_error");
    } catch (const dependent_input_error& e) {
        CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(gram_schmidt_classical(in), dependent_input_error);
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(gram_schmidt({vec{1, 0}, vec{1, 0, 0}}), consistency_error);
}
