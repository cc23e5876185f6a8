#pragma once

#include <speinstein/structure.hpp>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace speinstein {

/// One positive scale per module of a decomposition.
using metric_params = std::vector<double>;

struct ricci_vector {
    std::vector<double> components;

    double einstein_constant() const {
        double s = 0.0;
        for (double r : components) s += r;
        return s / static_cast<double>(components.size());
    }

    /// max_k |r_k - mean| / mean
    double residual() const {
        double mean = einstein_constant();
        double worst = 0.0;
        for (double r : components) worst = std::max(worst, std::abs(r - mean));
        return worst / std::abs(mean);
    }
};

inline double einstein_residual(const ricci_vector& r) { return r.residual(); }

namespace detail {
inline void require_positive(const metric_params& x, std::size_t expect) {
    if (x.size() != expect) throw std::invalid_argument("metric has the wrong number of scales");
    for (double v : x)
        if (!(v > 0.0)) throw std::domain_error("metric scales must be positive");
}
}  // namespace detail

/// Ricci components of the diagonal metric with the given scales, from the
/// structure-constant sums
///   r_k = 1/(2 x_k) + (1/4d_k) sum_{j,i} (x_k / x_j x_i) (kji)
///                   - (1/2d_k) sum_{j,i} (x_j / x_k x_i) (jki).
inline ricci_vector ricci_general(const structure_table& table, const metric_params& x) {
    const int m = table.module_count();
    detail::require_positive(x, static_cast<std::size_t>(m));
    ricci_vector out;
    out.components.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        double s1 = 0.0, s2 = 0.0;
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) {
                double t = table.triple(j, k, i);
                if (t == 0.0) continue;
                s1 += t * x[static_cast<std::size_t>(k)]
                        / (x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(i)]);
                s2 += t * x[static_cast<std::size_t>(j)]
                        / (x[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(i)]);
            }
        const double dk = static_cast<double>(table.dims[static_cast<std::size_t>(k)]);
        out.components[static_cast<std::size_t>(k)] =
            1.0 / (2.0 * x[static_cast<std::size_t>(k)]) + s1 / (4.0 * dk) - s2 / (2.0 * dk);
    }
    return out;
}

/// Closed-form Ricci components for the six-module decomposition of
/// sp(k1+k2+k3): factors sp(k1), sp(k2), sp(k3), then the three off-diagonal
/// modules coupling block pairs (1,2), (1,3), (2,3).
inline ricci_vector ricci_closed_form(const triple_shape& shape, const metric_params& y) {
    detail::require_positive(y, 6);
    const double k1 = shape.k1, k2 = shape.k2, k3 = shape.k3;
    const double q = 4.0 * (shape.n() + 1);
    const double y1 = y[0], y2 = y[1], y3 = y[2], y4 = y[3], y5 = y[4], y6 = y[5];
    ricci_vector out;
    out.components = {
        (k1 + 1) / (q * y1) + k2 * y1 / (q * y4 * y4) + k3 * y1 / (q * y5 * y5),
        (k2 + 1) / (q * y2) + k1 * y2 / (q * y4 * y4) + k3 * y2 / (q * y6 * y6),
        (k3 + 1) / (q * y3) + k1 * y3 / (q * y5 * y5) + k2 * y3 / (q * y6 * y6),
        1.0 / (2.0 * y4)
            + (k3 / q) * (y4 / (y5 * y6) - y5 / (y4 * y6) - y6 / (y4 * y5))
            - (2 * k1 + 1) * y1 / (2 * q * y4 * y4)
            - (2 * k2 + 1) * y2 / (2 * q * y4 * y4),
        1.0 / (2.0 * y5)
            + (k2 / q) * (y5 / (y4 * y6) - y4 / (y5 * y6) - y6 / (y4 * y5))
            - (2 * k1 + 1) * y1 / (2 * q * y5 * y5)
            - (2 * k3 + 1) * y3 / (2 * q * y5 * y5),
        1.0 / (2.0 * y6)
            + (k1 / q) * (y6 / (y4 * y5) - y4 / (y5 * y6) - y5 / (y4 * y6))
            - (2 * k2 + 1) * y2 / (2 * q * y6 * y6)
            - (2 * k3 + 1) * y3 / (2 * q * y6 * y6),
    };
    return out;
}

}  // namespace speinstein
