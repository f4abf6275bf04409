#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "ctwalk/errors.hpp"
#include "ctwalk/spectral.hpp"

namespace ctwalk {

// By centrosymmetry a star graph has only four distinct transition types;
// every ordered node pair maps onto exactly one of them.
enum class star_pair_kind {
    central_return,      // hub -> hub
    central_to_leaf,     // hub -> leaf, either direction
    leaf_return,         // leaf -> same leaf
    leaf_to_other_leaf,  // leaf -> different leaf
};

constexpr const char* to_string(star_pair_kind k) {
    switch (k) {
        case star_pair_kind::central_return: return "central_return";
        case star_pair_kind::central_to_leaf: return "central_to_leaf";
        case star_pair_kind::leaf_return: return "leaf_return";
        case star_pair_kind::leaf_to_other_leaf: return "leaf_to_other_leaf";
    }
    return "?";
}

// Provenance tokens for emitted data; these name the closed forms in the
// library's formula catalog (see README).
constexpr const char* quantum_formula_id(star_pair_kind k) {
    switch (k) {
        case star_pair_kind::central_return: return "eq8";
        case star_pair_kind::central_to_leaf: return "eq9";
        case star_pair_kind::leaf_return: return "eq10";
        case star_pair_kind::leaf_to_other_leaf: return "eq11";
    }
    return "?";
}

constexpr const char* classical_formula_id(star_pair_kind k) {
    switch (k) {
        case star_pair_kind::central_return: return "eq13-line1";
        case star_pair_kind::central_to_leaf: return "eq13-line2";
        case star_pair_kind::leaf_return: return "eq13-line3";
        case star_pair_kind::leaf_to_other_leaf: return "eq13-line4";
    }
    return "?";
}

constexpr const char* limiting_formula_id(star_pair_kind k) {
    switch (k) {
        case star_pair_kind::central_return: return "eq12-line1";
        case star_pair_kind::central_to_leaf: return "eq12-line2";
        case star_pair_kind::leaf_return: return "eq12-line3";
        case star_pair_kind::leaf_to_other_leaf: return "eq12-line4";
    }
    return "?";
}

namespace detail {

inline void require_star_size(std::size_t n, const char* fn) {
    if (n < 2)
        throw invalid_size_error(std::string(fn) + ": star closed forms need n >= 2");
}

}  // namespace detail

// 0-based indices, hub at 0.
inline star_pair_kind classify_star_pair(std::size_t n, std::size_t j, std::size_t k) {
    detail::require_star_size(n, "classify_star_pair");
    if (j >= n || k >= n)
        throw std::out_of_range("classify_star_pair: node index out of range");
    if (j == 0 && k == 0) return star_pair_kind::central_return;
    if (j == 0 || k == 0) return star_pair_kind::central_to_leaf;
    if (j == k) return star_pair_kind::leaf_return;
    return star_pair_kind::leaf_to_other_leaf;
}

// Exact star eigensystem. Spectrum: 0 once, 1 with multiplicity n-2, n once.
// The E=1 vectors live on the leaves with coefficients sqrt(i/(i+1)) on leaf
// i+1 and -sqrt(1/(i(i+1))) on leaves 1..i; E=0 is uniform; E=n weights the
// hub against the uniform background.
inline spectral_decomposition star_eigensystem(std::size_t n) {
    detail::require_star_size(n, "star_eigensystem");
    const double N = static_cast<double>(n);

    spectral_decomposition d;
    d.n = n;
    d.eigenvalues.assign(n, 1.0);
    d.eigenvalues.front() = 0.0;
    d.eigenvalues.back() = N;
    d.vectors.assign(n * n, 0.0);

    // E = 0: uniform
    for (std::size_t r = 0; r < n; ++r) d.vectors[r] = std::sqrt(1.0 / N);

    // E = 1, branch i = 1..n-2 (supported on leaves only)
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double* q = &d.vectors[i * n];
        const double I = static_cast<double>(i);
        q[i + 1] = std::sqrt(I / (I + 1.0));
        for (std::size_t r = 1; r <= i; ++r) q[r] = -std::sqrt(1.0 / (I * (I + 1.0)));
    }

    // E = n
    {
        double* q = &d.vectors[(n - 1) * n];
        for (std::size_t r = 0; r < n; ++r) q[r] = 1.0 / std::sqrt(N * (N - 1.0));
        q[0] -= std::sqrt(N / (N - 1.0));
    }
    return d;
}

// Quantum transition probability closed forms, one per pair type. Kept in the
// same polynomial-in-N shape they were derived in.
inline double star_quantum_probability(star_pair_kind kind, std::size_t n, double t) {
    detail::require_star_size(n, "star_quantum_probability");
    const double N = static_cast<double>(n);
    switch (kind) {
        case star_pair_kind::central_return:
            return (N * N - 2.0 * N + 2.0) / (N * N) +
                   (2.0 * (N - 1.0)) / (N * N) * std::cos(N * t);
        case star_pair_kind::central_to_leaf:
            return 2.0 / (N * N) - 2.0 / (N * N) * std::cos(N * t);
        case star_pair_kind::leaf_return:
            return 1.0 / (N * N * (N - 1.0) * (N - 1.0)) *
                   ((N * N * N * N - 4.0 * N * N * N + 5.0 * N * N - 2.0 * N + 2.0) +
                    (2.0 * N * N * N - 6.0 * N * N + 4.0 * N) * std::cos(t) +
                    (2.0 * N * N - 4.0 * N) * std::cos((N - 1.0) * t) +
                    (2.0 * N - 2.0) * std::cos(N * t));
        case star_pair_kind::leaf_to_other_leaf:
            return 2.0 / (N * N * (N - 1.0) * (N - 1.0)) *
                   ((N * N - N + 1.0) + (N - N * N) * std::cos(t) -
                    N * std::cos((N - 1.0) * t) + (N - 1.0) * std::cos(N * t));
    }
    throw std::logic_error("star_quantum_probability: bad kind");
}

// Long-time averages of the above; only the constant terms survive.
inline double star_limiting_probability(star_pair_kind kind, std::size_t n) {
    detail::require_star_size(n, "star_limiting_probability");
    const double N = static_cast<double>(n);
    switch (kind) {
        case star_pair_kind::central_return:
            return (N * N - 2.0 * N + 2.0) / (N * N);
        case star_pair_kind::central_to_leaf:
            return 2.0 / (N * N);
        case star_pair_kind::leaf_return:
            return (N * N * N * N - 4.0 * N * N * N + 5.0 * N * N - 2.0 * N + 2.0) /
                   (N * N) / ((N - 1.0) * (N - 1.0));
        case star_pair_kind::leaf_to_other_leaf:
            return 2.0 * (N * N - N + 1.0) / (N * N) / ((N - 1.0) * (N - 1.0));
    }
    throw std::logic_error("star_limiting_probability: bad kind");
}

// Diffusive closed forms; decay rates are the Laplacian eigenvalues n and 1.
inline double star_classical_probability(star_pair_kind kind, std::size_t n, double t) {
    detail::require_star_size(n, "star_classical_probability");
    if (t < 0.0)
        throw domain_error("star_classical_probability: time must be nonnegative");
    const double N = static_cast<double>(n);
    switch (kind) {
        case star_pair_kind::central_return:
            return 1.0 / N + std::exp(-N * t) * (N - 1.0) / N;
        case star_pair_kind::central_to_leaf:
            return 1.0 / N - std::exp(-N * t) / N;
        case star_pair_kind::leaf_return:
            return 1.0 / N + (N - 2.0) / (N - 1.0) * std::exp(-t) +
                   std::exp(-N * t) / N / (N - 1.0);
        case star_pair_kind::leaf_to_other_leaf:
            return 1.0 / N - std::exp(-t) / (N - 1.0) + std::exp(-N * t) / N / (N - 1.0);
    }
    throw std::logic_error("star_classical_probability: bad kind");
}

// Exact complete-graph eigensystem. Spectrum: 0 once, n with multiplicity n-1.
inline spectral_decomposition complete_eigensystem(std::size_t n) {
    if (n < 1)
        throw invalid_size_error("complete_eigensystem: size must be >= 1");
    const double N = static_cast<double>(n);

    spectral_decomposition d;
    d.n = n;
    d.eigenvalues.assign(n, N);
    d.eigenvalues.front() = 0.0;
    d.vectors.assign(n * n, 0.0);

    for (std::size_t r = 0; r < n; ++r) d.vectors[r] = std::sqrt(1.0 / N);

    // E = n, branch i = 1..n-1
    for (std::size_t i = 1; i < n; ++i) {
        double* q = &d.vectors[i * n];
        const double I = static_cast<double>(i);
        q[i] = std::sqrt(I / (I + 1.0));
        for (std::size_t r = 0; r < i; ++r) q[r] = -std::sqrt(1.0 / (I * (I + 1.0)));
    }
    return d;
}

// Complete-graph quantum transition probability; identical in form to the
// star's central-node expressions, which is the equivalence statement the
// verification suite pins down.
inline double complete_quantum_probability(bool same_node, std::size_t n, double t) {
    if (n < 1)
        throw invalid_size_error("complete_quantum_probability: size must be >= 1");
    const double N = static_cast<double>(n);
    if (same_node)
        return (N * N - 2.0 * N + 2.0) / (N * N) +
               (2.0 * (N - 1.0)) / (N * N) * std::cos(N * t);
    return 2.0 / (N * N) - 2.0 / (N * N) * std::cos(N * t);
}

}  // namespace ctwalk
