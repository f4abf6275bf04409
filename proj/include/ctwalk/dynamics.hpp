#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctwalk/errors.hpp"
#include "ctwalk/spectral.hpp"

namespace ctwalk {

using complex_amplitude = std::complex<double>;

enum class walk_kind { classical, quantum };

// Sampled transition probabilities for one (source, target) pair over an
// ascending time grid. Values are stored raw, never clamped.
struct time_series {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<double> times;
    std::vector<double> values;
};

namespace detail {

inline void check_node(const spectral_decomposition& d, std::size_t i,
                       const char* role) {
    if (i >= d.n)
        throw std::out_of_range(std::string(role) + " index " + std::to_string(i) +
                                " out of range for dimension " + std::to_string(d.n));
}

inline void check_partition(const spectral_decomposition& d,
                            const eigenspace_partition& p) {
    if (p.n != d.n)
        throw consistency_error("eigenspace partition dimension " +
                                std::to_string(p.n) +
                                " does not match decomposition dimension " +
                                std::to_string(d.n));
    std::size_t total = 0;
    for (const auto& g : p.groups) {
        total += g.size();
        for (std::size_t idx : g)
            if (idx >= d.n)
                throw consistency_error("eigenspace partition index out of range");
    }
    if (total != d.n)
        throw consistency_error("eigenspace partition does not cover all indices");
}

}  // namespace detail

// Diffusive transition probability sum_n exp(-t E_n) <k|q_n><q_n|j>.
inline double classical_probability(const spectral_decomposition& d, std::size_t j,
                                    std::size_t k, double t) {
    detail::check_node(d, j, "source");
    detail::check_node(d, k, "target");
    if (t < 0.0)
        throw domain_error("classical_probability: time must be nonnegative");
    double s = 0.0;
    for (std::size_t n = 0; n < d.n; ++n)
        s += std::exp(-t * d.eigenvalues[n]) * d.component(n, k) * d.component(n, j);
    return s;
}

// Unitary transition amplitude sum_n exp(-i t E_n) <k|q_n><q_n|j>. Negative t
// runs the evolution backwards.
inline complex_amplitude quantum_amplitude(const spectral_decomposition& d,
                                           std::size_t j, std::size_t k, double t) {
    detail::check_node(d, j, "source");
    detail::check_node(d, k, "target");
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < d.n; ++n) {
        double w = d.component(n, k) * d.component(n, j);
        double phase = -t * d.eigenvalues[n];
        re += w * std::cos(phase);
        im += w * std::sin(phase);
    }
    return {re, im};
}

inline double quantum_probability(const spectral_decomposition& d, std::size_t j,
                                  std::size_t k, double t) {
    return std::norm(quantum_amplitude(d, j, k, t));
}

// Full n*n amplitude matrix at fixed t, row-major: entry (k, j) is the
// amplitude from j to k. Unitary for any t.
inline std::vector<complex_amplitude> amplitude_matrix(
    const spectral_decomposition& d, double t) {
    const std::size_t n = d.n;
    std::vector<complex_amplitude> m(n * n, complex_amplitude{0.0, 0.0});
    for (std::size_t e = 0; e < n; ++e) {
        double phase = -t * d.eigenvalues[e];
        complex_amplitude ph{std::cos(phase), std::sin(phase)};
        auto q = d.vector(e);
        for (std::size_t k = 0; k < n; ++k) {
            complex_amplitude f = ph * q[k];
            for (std::size_t j = 0; j < n; ++j) m[k * n + j] += f * q[j];
        }
    }
    return m;
}

// Long-time average of the quantum transition probability. Cross terms
// between distinct eigenvalues dephase away, so only the per-eigenspace
// projector elements survive: sum_g (<k|P_g|j>)^2.
inline double limiting_probability(const spectral_decomposition& d,
                                   const eigenspace_partition& p, std::size_t j,
                                   std::size_t k) {
    detail::check_node(d, j, "source");
    detail::check_node(d, k, "target");
    detail::check_partition(d, p);
    double s = 0.0;
    for (const auto& g : p.groups) {
        double elem = 0.0;
        for (std::size_t n : g) elem += d.component(n, k) * d.component(n, j);
        s += elem * elem;
    }
    return s;
}

// All pairs at once, row-major (k, j); rows and columns each sum to 1.
inline std::vector<double> limiting_matrix(const spectral_decomposition& d,
                                           const eigenspace_partition& p) {
    detail::check_partition(d, p);
    const std::size_t n = d.n;
    std::vector<double> chi(n * n, 0.0);
    std::vector<double> proj(n * n);
    for (const auto& g : p.groups) {
        std::fill(proj.begin(), proj.end(), 0.0);
        for (std::size_t e : g) {
            auto q = d.vector(e);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) proj[k * n + j] += q[k] * q[j];
        }
        for (std::size_t i = 0; i < n * n; ++i) chi[i] += proj[i] * proj[i];
    }
    return chi;
}

// Samples one pair over a time grid.
inline time_series evolve_series(const spectral_decomposition& d, std::size_t j,
                                 std::size_t k, std::span<const double> times,
                                 walk_kind kind) {
    detail::check_node(d, j, "source");
    detail::check_node(d, k, "target");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw domain_error("evolve_series: time grid must be strictly ascending");

    time_series ts;
    ts.source = j;
    ts.target = k;
    ts.times.assign(times.begin(), times.end());
    ts.values.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        try {
            ts.values.push_back(kind == walk_kind::classical
                                    ? classical_probability(d, j, k, times[i])
                                    : quantum_probability(d, j, k, times[i]));
        } catch (const domain_error& e) {
            throw domain_error(std::string(e.what()) + " (at sample index " +
                               std::to_string(i) + ")");
        }
    }
    return ts;
}

}  // namespace ctwalk
