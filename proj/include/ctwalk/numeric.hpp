#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace ctwalk {

// Compensated (Kahan) summation; keeps measurement error near one ulp of the
// term magnitudes instead of growing with the term count.
class kahan_accumulator {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double sum() const noexcept { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

inline double kahan_dot(std::span<const double> a, std::span<const double> b) {
    kahan_accumulator acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    return acc.sum();
}

// steps sample points from start to stop inclusive; steps == 1 gives [start].
inline std::vector<double> linspace(double start, double stop, std::size_t steps) {
    std::vector<double> ts(steps);
    if (steps == 1) {
        ts[0] = start;
        return ts;
    }
    double h = (stop - start) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) ts[i] = start + h * static_cast<double>(i);
    ts.back() = stop;
    return ts;
}

}  // namespace ctwalk
