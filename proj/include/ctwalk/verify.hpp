#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <future>
#include <numbers>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "ctwalk/closed_form.hpp"
#include "ctwalk/dynamics.hpp"
#include "ctwalk/errors.hpp"
#include "ctwalk/gram_schmidt.hpp"
#include "ctwalk/graph.hpp"
#include "ctwalk/numeric.hpp"
#include "ctwalk/spectral.hpp"

namespace ctwalk {

enum class graph_family { star, complete };

constexpr const char* to_string(graph_family f) {
    return f == graph_family::star ? "star" : "complete";
}

struct check_record {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct verification_report {
    std::string family;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    std::vector<check_record> checks;
    bool pass = false;
};

struct verify_options {
    std::size_t n_lo = 2;
    std::size_t n_hi = 64;
    double degeneracy_tol = 1e-8;
    // Test-harness hook: offsets the closed-form value inside the
    // quantum-closed-vs-spectral check so a broken formula is provably caught.
    double inject_error = 0.0;
    bool parallel = true;
};

// The raw (non-orthogonal) eigenstate sets that seed Gram-Schmidt, in the
// order that reproduces the printed bases. 0-based node indices, hub/first
// node at 0.
inline std::vector<std::vector<double>> star_raw_eigenstates(std::size_t n) {
    if (n < 2)
        throw invalid_size_error("star_raw_eigenstates: need n >= 2");
    std::vector<std::vector<double>> vs;
    vs.reserve(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {  // E = 1: |i+2> - |2>
        std::vector<double> v(n, 0.0);
        v[i + 1] = 1.0;
        v[1] = -1.0;
        vs.push_back(std::move(v));
    }
    vs.emplace_back(n, 1.0);  // E = 0: uniform
    {
        std::vector<double> v(n, 1.0);  // E = n: uniform minus n on the hub
        v[0] -= static_cast<double>(n);
        vs.push_back(std::move(v));
    }
    return vs;
}

inline std::vector<std::vector<double>> complete_raw_eigenstates(std::size_t n) {
    if (n < 2)
        throw invalid_size_error("complete_raw_eigenstates: need n >= 2");
    std::vector<std::vector<double>> vs;
    vs.reserve(n);
    for (std::size_t i = 1; i < n; ++i) {  // E = n: |i+1> - |1>
        std::vector<double> v(n, 0.0);
        v[i] = 1.0;
        v[0] = -1.0;
        vs.push_back(std::move(v));
    }
    vs.emplace_back(n, 1.0);  // E = 0: uniform
    return vs;
}

namespace detail {

inline std::vector<double> chebyshev_times(std::size_t count, double lo, double hi) {
    std::vector<double> ts(count);
    double mid = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < count; ++k)
        ts[k] = mid + half * std::cos(std::numbers::pi *
                                      (2.0 * static_cast<double>(k) + 1.0) /
                                      (2.0 * static_cast<double>(count)));
    std::sort(ts.begin(), ts.end());
    return ts;
}

// Entry-wise distance between two vectors allowing a global sign flip; the
// sign is fixed by the largest-magnitude entry of a.
inline double basis_vector_deviation(std::span<const double> a,
                                     std::span<const double> b) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (std::abs(a[i]) > std::abs(a[imax])) imax = i;
    double sign = (a[imax] * b[imax] >= 0.0) ? 1.0 : -1.0;
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dev = std::max(dev, std::abs(a[i] - sign * b[i]));
    return dev;
}

// max_i |(H q)_i - E q_i| with compensated dot products
inline double eigenpair_residual(const sym_matrix& h, std::span<const double> q,
                                 double e) {
    double dev = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        kahan_accumulator acc;
        auto row = h.row(i);
        for (std::size_t j = 0; j < q.size(); ++j) acc.add(row[j] * q[j]);
        acc.add(-e * q[i]);
        dev = std::max(dev, std::abs(acc.sum()));
    }
    return dev;
}

constexpr std::size_t kCheckCount = 10;

struct check_spec {
    const char* name;
    double tolerance;
};

inline const std::array<check_spec, kCheckCount>& check_specs() {
    static const std::array<check_spec, kCheckCount> specs{{
        {"eigenvalue-spectrum", 1e-9},
        {"eigenbasis-residual", 1e-12},
        {"eigenbasis-orthonormality", 1e-12},
        {"gram-schmidt-basis", 1e-12},
        {"gram-schmidt-variants", 1e-10},
        {"quantum-closed-vs-spectral", 1e-9},
        {"classical-closed-vs-spectral", 1e-9},
        {"limiting-closed-vs-spectral", 1e-9},
        {"probability-row-sums", 1e-12},
        {"central-complete-equivalence", 1e-14},
    }};
    return specs;
}

using deviation_array = std::array<double, kCheckCount>;

inline void merge_max(deviation_array& into, const deviation_array& from) {
    for (std::size_t i = 0; i < kCheckCount; ++i)
        into[i] = std::max(into[i], from[i]);
}

// All checks for one size of one family; returns per-check max deviations.
inline deviation_array verify_one(graph_family fam, std::size_t n,
                                  const verify_options& opts) {
    deviation_array dev{};
    dev.fill(0.0);

    const bool star = (fam == graph_family::star);
    const graph g = star ? make_star(n) : make_complete(n);
    const sym_matrix h = laplacian(g);
    const spectral_decomposition num = eigendecompose(h);
    const eigenspace_partition part = group_eigenspaces(num, opts.degeneracy_tol);
    const spectral_decomposition exact =
        star ? star_eigensystem(n) : complete_eigensystem(n);

    // 0: numerical spectrum against the exact discrete values
    {
        std::vector<double> expected(n, star ? 1.0 : static_cast<double>(n));
        expected.front() = 0.0;
        if (star) expected.back() = static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i)
            dev[0] = std::max(dev[0], std::abs(num.eigenvalues[i] - expected[i]));
    }

    // 1: exact basis really diagonalizes the Laplacian
    for (std::size_t k = 0; k < n; ++k)
        dev[1] = std::max(dev[1], eigenpair_residual(h, exact.vector(k),
                                                     exact.eigenvalues[k]));

    // 2: exact basis orthonormality
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double dot = 0.0;
            auto a = exact.vector(i);
            auto b = exact.vector(j);
            for (std::size_t r = 0; r < n; ++r) dot += a[r] * b[r];
            dev[2] = std::max(dev[2], std::abs(dot - (i == j ? 1.0 : 0.0)));
        }

    // 3, 4: Gram-Schmidt reproduces the printed basis; both variants agree
    {
        const auto raw = star ? star_raw_eigenstates(n) : complete_raw_eigenstates(n);
        const auto modified = gram_schmidt(raw);
        const auto classical = gram_schmidt_classical(raw);

        // printed order: degenerate branches first, then the remaining ones
        std::vector<std::size_t> printed;
        if (star) {
            for (std::size_t i = 1; i + 1 < n; ++i) printed.push_back(i);
            printed.push_back(0);
            printed.push_back(n - 1);
        } else {
            for (std::size_t i = 1; i < n; ++i) printed.push_back(i);
            printed.push_back(0);
        }
        for (std::size_t k = 0; k < n; ++k) {
            dev[3] = std::max(dev[3], basis_vector_deviation(
                                          modified[k], exact.vector(printed[k])));
            double d45 = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                d45 = std::max(d45, std::abs(modified[k][r] - classical[k][r]));
            dev[4] = std::max(dev[4], d45);
        }
    }

    // sample pairs, one per applicable transition type (0-based, hub = 0)
    struct pair_case {
        star_pair_kind kind;
        std::size_t j, k;
        bool applicable;
    };
    const std::array<pair_case, 4> pairs{{
        {star_pair_kind::central_return, 0, 0, true},
        {star_pair_kind::central_to_leaf, 0, 1, n >= 2},
        {star_pair_kind::leaf_return, 1, 1, n >= 2},
        {star_pair_kind::leaf_to_other_leaf, 1, 2, n >= 3},
    }};

    const auto times = chebyshev_times(64, 0.0, 4.0 * std::numbers::pi);

    auto closed_quantum = [&](star_pair_kind kind, double t) {
        if (star) return star_quantum_probability(kind, n, t);
        bool same = (kind == star_pair_kind::central_return ||
                     kind == star_pair_kind::leaf_return);
        return complete_quantum_probability(same, n, t);
    };
    auto closed_classical = [&](star_pair_kind kind, double t) {
        if (star) return star_classical_probability(kind, n, t);
        // two-level spectrum makes every complete-graph pair follow the
        // central-node lines
        bool same = (kind == star_pair_kind::central_return ||
                     kind == star_pair_kind::leaf_return);
        return star_classical_probability(same ? star_pair_kind::central_return
                                               : star_pair_kind::central_to_leaf,
                                          n, t);
    };
    auto closed_limiting = [&](star_pair_kind kind) {
        if (star) return star_limiting_probability(kind, n);
        bool same = (kind == star_pair_kind::central_return ||
                     kind == star_pair_kind::leaf_return);
        return star_limiting_probability(same ? star_pair_kind::central_return
                                              : star_pair_kind::central_to_leaf,
                                         n);
    };

    // 5, 6: closed forms against the spectral path over the time grid
    for (const auto& pc : pairs) {
        if (!pc.applicable) continue;
        for (double t : times) {
            double cq = closed_quantum(pc.kind, t) + opts.inject_error;
            dev[5] = std::max(dev[5],
                              std::abs(cq - quantum_probability(num, pc.j, pc.k, t)));
            double cc = closed_classical(pc.kind, t);
            dev[6] = std::max(
                dev[6], std::abs(cc - classical_probability(num, pc.j, pc.k, t)));
        }
        // 7: limiting averages
        dev[7] = std::max(dev[7], std::abs(closed_limiting(pc.kind) -
                                           limiting_probability(num, part, pc.j,
                                                                pc.k)));
    }

    // 8: closed-form probability conservation, time-resolved and limiting
    {
        const double N = static_cast<double>(n);
        for (double t : times) {
            double row1 = closed_quantum(star_pair_kind::central_return, t) +
                          (N - 1.0) * closed_quantum(star_pair_kind::central_to_leaf, t);
            dev[8] = std::max(dev[8], std::abs(row1 - 1.0));
            if (n >= 3) {
                double row2 =
                    closed_quantum(star_pair_kind::leaf_return, t) +
                    closed_quantum(star_pair_kind::central_to_leaf, t) +
                    (N - 2.0) * closed_quantum(star_pair_kind::leaf_to_other_leaf, t);
                dev[8] = std::max(dev[8], std::abs(row2 - 1.0));
            }
        }
        double lrow1 = closed_limiting(star_pair_kind::central_return) +
                       (N - 1.0) * closed_limiting(star_pair_kind::central_to_leaf);
        dev[8] = std::max(dev[8], std::abs(lrow1 - 1.0));
        if (n >= 3) {
            double lrow2 = closed_limiting(star_pair_kind::leaf_return) +
                           closed_limiting(star_pair_kind::central_to_leaf) +
                           (N - 2.0) * closed_limiting(star_pair_kind::leaf_to_other_leaf);
            dev[8] = std::max(dev[8], std::abs(lrow2 - 1.0));
        }
    }

    // 9: star central-node transport == complete-graph transport
    for (double t : times) {
        dev[9] = std::max(
            dev[9],
            std::abs(star_quantum_probability(star_pair_kind::central_return, n, t) -
                     complete_quantum_probability(true, n, t)));
        dev[9] = std::max(
            dev[9],
            std::abs(star_quantum_probability(star_pair_kind::central_to_leaf, n, t) -
                     complete_quantum_probability(false, n, t)));
    }

    return dev;
}

}  // namespace detail

// Runs the full closed-form-vs-spectral oracle suite over [n_lo, n_hi].
// Check order in the report is fixed; sizes may be evaluated concurrently
// (max-merging deviations is order independent).
inline verification_report run_verification(graph_family fam,
                                            const verify_options& opts = {}) {
    if (opts.n_lo < 2)
        throw domain_error("run_verification: n range must start at 2 or above");
    if (opts.n_hi < opts.n_lo)
        throw domain_error("run_verification: empty n range");
    if (opts.n_hi > 512)
        throw domain_error("run_verification: n range capped at 512");

    std::vector<std::size_t> sizes;
    for (std::size_t n = opts.n_lo; n <= opts.n_hi; ++n) sizes.push_back(n);

    detail::deviation_array total{};
    total.fill(0.0);

    std::size_t workers =
        opts.parallel ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
                      : 1;
    workers = std::min(workers, sizes.size());
    if (workers <= 1) {
        for (std::size_t n : sizes)
            detail::merge_max(total, detail::verify_one(fam, n, opts));
    } else {
        std::vector<std::future<detail::deviation_array>> futures;
        futures.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                detail::deviation_array local{};
                local.fill(0.0);
                for (std::size_t i = w; i < sizes.size(); i += workers)
                    detail::merge_max(local, detail::verify_one(fam, sizes[i], opts));
                return local;
            }));
        }
        for (auto& f : futures) detail::merge_max(total, f.get());
    }

    verification_report report;
    report.family = to_string(fam);
    report.n_lo = opts.n_lo;
    report.n_hi = opts.n_hi;
    report.pass = true;
    for (std::size_t i = 0; i < detail::kCheckCount; ++i) {
        const auto& spec = detail::check_specs()[i];
        check_record rec;
        rec.name = spec.name;
        rec.max_deviation = total[i];
        rec.tolerance = spec.tolerance;
        rec.pass = total[i] < spec.tolerance;
        report.pass = report.pass && rec.pass;
        report.checks.push_back(std::move(rec));
    }
    return report;
}

}  // namespace ctwalk
