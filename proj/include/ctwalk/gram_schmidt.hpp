#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ctwalk/errors.hpp"

namespace ctwalk {

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline void check_dimensions(const std::vector<std::vector<double>>& vs) {
    if (vs.empty()) return;
    const std::size_t dim = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != dim)
            throw consistency_error("gram_schmidt: vectors differ in dimension");
}

constexpr double kRankTolerance = 1e-10;

}  // namespace detail

// Modified Gram-Schmidt: each vector is projected against the already
// orthonormalized outputs one at a time, then normalized. The first output is
// a positive multiple of the first input.
inline std::vector<std::vector<double>> gram_schmidt(
    const std::vector<std::vector<double>>& vectors) {
    detail::check_dimensions(vectors);
    std::vector<std::vector<double>> out;
    out.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::vector<double> w = vectors[i];
        for (const auto& q : out) {
            double proj = detail::dot(q, w);
            for (std::size_t r = 0; r < w.size(); ++r) w[r] -= proj * q[r];
        }
        double nrm = std::sqrt(detail::dot(w, w));
        if (nrm < detail::kRankTolerance)
            throw dependent_input_error(
                "gram_schmidt: input vector " + std::to_string(i) +
                    " is linearly dependent on its predecessors",
                i);
        for (double& x : w) x /= nrm;
        out.push_back(std::move(w));
    }
    return out;
}

// Classical iteration: v_i' = v_i - sum_j (<v_i|v_j'>/<v_j'|v_j'>) v_j' with
// the projections taken against the unnormalized v_j'. Returned vectors are
// orthogonal but not unit length.
inline std::vector<std::vector<double>> gram_schmidt_classical_unnormalized(
    const std::vector<std::vector<double>>& vectors) {
    detail::check_dimensions(vectors);
    std::vector<std::vector<double>> out;
    std::vector<double> norms2;
    out.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::vector<double> w = vectors[i];
        for (std::size_t j = 0; j < out.size(); ++j) {
            double coeff = detail::dot(vectors[i], out[j]) / norms2[j];
            for (std::size_t r = 0; r < w.size(); ++r) w[r] -= coeff * out[j][r];
        }
        double n2 = detail::dot(w, w);
        if (std::sqrt(n2) < detail::kRankTolerance)
            throw dependent_input_error(
                "gram_schmidt_classical: input vector " + std::to_string(i) +
                    " is linearly dependent on its predecessors",
                i);
        norms2.push_back(n2);
        out.push_back(std::move(w));
    }
    return out;
}

// Classical iteration followed by the final normalization pass.
inline std::vector<std::vector<double>> gram_schmidt_classical(
    const std::vector<std::vector<double>>& vectors) {
    auto out = gram_schmidt_classical_unnormalized(vectors);
    for (auto& w : out) {
        double nrm = std::sqrt(detail::dot(w, w));
        for (double& x : w) x /= nrm;
    }
    return out;
}

}  // namespace ctwalk
