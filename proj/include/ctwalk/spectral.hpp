#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ctwalk/errors.hpp"
#include "ctwalk/matrix.hpp"

namespace ctwalk {

// Eigenvalues ascending; eigenvector k is stored contiguously and pairs with
// eigenvalues[k]. Vectors are orthonormal and sign-fixed so that the
// largest-magnitude component of each is positive.
struct spectral_decomposition {
    std::size_t n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> vectors;  // vectors[k*n + i] = component i of vector k

    std::span<const double> vector(std::size_t k) const {
        return std::span<const double>(vectors).subspan(k * n, n);
    }
    double component(std::size_t k, std::size_t i) const { return vectors[k * n + i]; }
};

struct jacobi_options {
    std::size_t max_sweeps = 100;
    // Converged when the off-diagonal Frobenius norm drops below
    // relative_tolerance * max(1, ||A||_F).
    double relative_tolerance = 1e-12;
};

namespace detail {

inline void jacobi_rotate(std::vector<double>& a, std::vector<double>& v,
                          std::size_t n, std::size_t p, std::size_t q) {
    double apq = a[p * n + q];
    if (apq == 0.0) return;

    double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;
    double tau = s / (1.0 + c);
    double h = t * apq;

    a[p * n + p] -= h;
    a[q * n + q] += h;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        double arp = a[r * n + p];
        double arq = a[r * n + q];
        a[r * n + p] = arp - s * (arq + tau * arp);
        a[r * n + q] = arq + s * (arp - tau * arq);
        a[p * n + r] = a[r * n + p];
        a[q * n + r] = a[r * n + q];
    }
    // accumulate the rotation into the eigenvector columns p and q
    for (std::size_t r = 0; r < n; ++r) {
        double vrp = v[r * n + p];
        double vrq = v[r * n + q];
        v[r * n + p] = vrp - s * (vrq + tau * vrp);
        v[r * n + q] = vrq + s * (vrp - tau * vrq);
    }
}

inline double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return std::sqrt(2.0 * s);
}

}  // namespace detail

// Cyclic Jacobi diagonalization of a dense real symmetric matrix.
inline spectral_decomposition eigendecompose(const sym_matrix& m,
                                             const jacobi_options& opts = {}) {
    const std::size_t n = m.size();
    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double target =
        opts.relative_tolerance * std::max(1.0, m.frobenius_norm());

    double off = detail::off_diagonal_norm(a, n);
    std::size_t sweep = 0;
    while (off > target) {
        if (sweep == opts.max_sweeps)
            throw convergence_error(
                "eigendecompose: Jacobi sweeps exhausted, off-diagonal residual " +
                    std::to_string(off),
                off);
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                detail::jacobi_rotate(a, v, n, p, q);
        ++sweep;
        off = detail::off_diagonal_norm(a, n);
    }

    // sort ascending, carrying the eigenvector columns along
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x] < a[y * n + y];
    });

    spectral_decomposition d;
    d.n = n;
    d.eigenvalues.resize(n);
    d.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t col = order[k];
        d.eigenvalues[k] = a[col * n + col];
        for (std::size_t i = 0; i < n; ++i) d.vectors[k * n + i] = v[i * n + col];

        // sign convention: largest-magnitude component positive
        std::size_t imax = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(d.vectors[k * n + i]) > std::abs(d.vectors[k * n + imax]))
                imax = i;
        if (d.vectors[k * n + imax] < 0.0)
            for (std::size_t i = 0; i < n; ++i) d.vectors[k * n + i] = -d.vectors[k * n + i];
    }
    return d;
}

// Indices of mutually degenerate eigenvalues, one group per degenerate class.
struct eigenspace_partition {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<double> representatives;  // mean eigenvalue per group
};

// Splits the ascending eigenvalue list wherever a consecutive gap reaches
// tol; gaps strictly below tol merge.
inline eigenspace_partition group_eigenspaces(const spectral_decomposition& d,
                                              double tol = 1e-8) {
    if (!(tol > 0.0)) throw domain_error("group_eigenspaces: tolerance must be > 0");

    eigenspace_partition p;
    p.n = d.n;
    std::vector<std::size_t> current{0};
    for (std::size_t i = 1; i < d.n; ++i) {
        if (d.eigenvalues[i] - d.eigenvalues[i - 1] < tol) {
            current.push_back(i);
        } else {
            p.groups.push_back(std::move(current));
            current = {i};
        }
    }
    p.groups.push_back(std::move(current));

    p.representatives.reserve(p.groups.size());
    for (const auto& g : p.groups) {
        double s = 0.0;
        for (std::size_t i : g) s += d.eigenvalues[i];
        p.representatives.push_back(s / static_cast<double>(g.size()));
    }
    return p;
}

}  // namespace ctwalk
