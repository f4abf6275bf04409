#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ctwalk/errors.hpp"

namespace ctwalk {

// Dense real symmetric matrix, row-major. Symmetry is maintained by
// construction: set() writes both (i,j) and (j,i).
class sym_matrix {
public:
    explicit sym_matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
        if (n == 0) throw invalid_size_error("sym_matrix: dimension must be >= 1");
    }

    static sym_matrix identity(std::size_t n) {
        sym_matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

    void add(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] += v;
        if (i != j) a_[j * n_ + i] += v;
    }

    std::span<const double> data() const noexcept { return a_; }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(a_).subspan(i * n_, n_);
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    // sqrt(sum of squared off-diagonal entries), both triangles counted
    double off_diagonal_norm() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j) s += a_[i * n_ + j] * a_[i * n_ + j];
        return std::sqrt(s);
    }

private:
    std::size_t n_;
    std::vector<double> a_;
};

}  // namespace ctwalk
