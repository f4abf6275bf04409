#pragma once

// Shared test helpers: deterministic random graphs and matrices, a
// Taylor-series matrix exponential oracle that bypasses the eigensolver,
// and small comparison utilities.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <ctwalk/ctwalk.hpp>

namespace support {

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// distance up to a global sign flip, sign fixed by a's largest entry
inline double sign_insensitive_diff(std::span<const double> a,
                                    std::span<const double> b) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (std::abs(a[i]) > std::abs(a[imax])) imax = i;
    double sign = (a[imax] * b[imax] >= 0.0) ? 1.0 : -1.0;
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - sign * b[i]));
    return m;
}

// uniform in [0, 1) from raw engine output, identical on every platform
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// spanning tree plus extra distinct edges; connected by construction
inline ctwalk::graph random_connected_graph(std::size_t n, std::size_t extra,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i)
        edges.emplace_back(rng() % i, i);
    std::size_t attempts = 0;
    while (extra > 0 && attempts < 1000) {
        ++attempts;
        std::size_t u = rng() % n;
        std::size_t v = rng() % n;
        if (u == v) continue;
        auto lo = std::min(u, v);
        auto hi = std::max(u, v);
        bool dup = false;
        for (const auto& e : edges)
            if (e.first == lo && e.second == hi) {
                dup = true;
                break;
            }
        if (dup) continue;
        edges.emplace_back(lo, hi);
        --extra;
    }
    return ctwalk::make_graph(n, edges);
}

inline ctwalk::sym_matrix random_symmetric(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ctwalk::sym_matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.set(i, j, 2.0 * unit_real(rng) - 1.0);
    return m;
}

// e^{z H} by scaling and squaring with a Taylor kernel; independent of the
// eigensolver, so it can arbitrate disagreements. Row-major result.
inline std::vector<std::complex<double>> expm(const ctwalk::sym_matrix& h,
                                              std::complex<double> z) {
    using cd = std::complex<double>;
    const std::size_t n = h.size();
    std::vector<cd> a(n * n);
    double amax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = z * h(i, j);
            amax = std::max(amax, std::abs(a[i * n + j]));
        }

    int squarings = 0;
    while (amax * static_cast<double>(n) > 0.25) {
        amax *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& v : a) v *= scale;

    auto matmul = [n](const std::vector<cd>& x, const std::vector<cd>& y) {
        std::vector<cd> r(n * n, cd(0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                cd xik = x[i * n + k];
                for (std::size_t j = 0; j < n; ++j)
                    r[i * n + j] += xik * y[k * n + j];
            }
        return r;
    };

    std::vector<cd> result(n * n, cd(0.0));
    for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1.0;
    std::vector<cd> term = result;
    for (int k = 1; k <= 30; ++k) {
        term = matmul(term, a);
        double tmax = 0.0;
        for (std::size_t i = 0; i < n * n; ++i) {
            term[i] /= static_cast<double>(k);
            tmax = std::max(tmax, std::abs(term[i]));
        }
        for (std::size_t i = 0; i < n * n; ++i) result[i] += term[i];
        if (tmax < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) result = matmul(result, result);
    return result;
}

}  // namespace support
