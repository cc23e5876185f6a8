#pragma once

#include <speinstein/algebra.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace speinstein {

/// The fully symmetric array of squared bracket coefficients between the
/// orthonormal module bases of a decomposition.
struct structure_table {
    std::vector<int> dims;
    std::vector<std::string> labels;
    std::vector<double> values;  ///< dense m^3, symmetrized
    double symmetrization_deviation = 0.0;

    int module_count() const { return static_cast<int>(dims.size()); }

    double triple(int i, int j, int k) const {
        const int m = module_count();
        if (i < 0 || j < 0 || k < 0 || i >= m || j >= m || k >= m)
            throw std::out_of_range("structure table index out of range");
        return values[static_cast<std::size_t>((i * m + j) * m + k)];
    }
};

/// Compute all triples (ijk) over the given decomposition. Entries are
/// symmetrized over index permutations (the pre-symmetrization spread is
/// recorded) and values below 1e-12 are clamped to exactly zero.
inline structure_table compute_table(const decomposition& dec) {
    const double ortho_tol = 1e-8;
    structure_table table;
    table.dims = dec.dims();
    for (const auto& mod : dec.modules) table.labels.push_back(mod.label);
    const int m = table.module_count();

    struct entry {
        int module;
        const complex_matrix* mat;
    };
    std::vector<entry> flat;
    for (int i = 0; i < m; ++i)
        for (const auto& e : dec.modules[static_cast<std::size_t>(i)].basis)
            flat.push_back({i, &e});
    const int total = static_cast<int>(flat.size());

    for (int x = 0; x < total; ++x)
        for (int y = x; y < total; ++y) {
            double g = dec.parent.inner(*flat[static_cast<std::size_t>(x)].mat,
                                        *flat[static_cast<std::size_t>(y)].mat);
            double expect = (x == y) ? 1.0 : 0.0;
            if (std::abs(g - expect) > ortho_tol)
                throw std::invalid_argument("module bases are not orthonormal for the ad-trace form");
        }

    std::vector<double> raw(static_cast<std::size_t>(m) * m * m, 0.0);
    auto at = [m](std::vector<double>& v, int i, int j, int k) -> double& {
        return v[static_cast<std::size_t>((i * m + j) * m + k)];
    };
    for (int x = 0; x < total; ++x) {
        const auto& [i, ei] = flat[static_cast<std::size_t>(x)];
        for (int y = x + 1; y < total; ++y) {
            const auto& [j, ej] = flat[static_cast<std::size_t>(y)];
            complex_matrix br = (*ei) * (*ej) - (*ej) * (*ei);
            for (int z = 0; z < total; ++z) {
                const auto& [k, ek] = flat[static_cast<std::size_t>(z)];
                double a = dec.parent.inner(*ek, br);
                if (std::abs(a) < 1e-13) continue;
                at(raw, i, j, k) += a * a;
                at(raw, j, i, k) += a * a;
            }
        }
    }

    table.values.assign(raw.size(), 0.0);
    double dev = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (int k = j; k < m; ++k) {
                const double perms[6] = {
                    at(raw, i, j, k), at(raw, i, k, j), at(raw, j, i, k),
                    at(raw, j, k, i), at(raw, k, i, j), at(raw, k, j, i),
                };
                double mean = 0.0;
                for (double p : perms) mean += p;
                mean /= 6.0;
                for (double p : perms) dev = std::max(dev, std::abs(p - mean));
                if (mean < 1e-12) mean = 0.0;
                at(table.values, i, j, k) = mean;
                at(table.values, i, k, j) = mean;
                at(table.values, j, i, k) = mean;
                at(table.values, j, k, i) = mean;
                at(table.values, k, i, j) = mean;
                at(table.values, k, j, i) = mean;
            }
    table.symmetrization_deviation = dev;
    return table;
}

/// Nonzero triples as CSV rows: i,j,k,value with modules named by label.
inline void write_triples_csv(const structure_table& table, std::ostream& os) {
    os << "i,j,k,value\n";
    const int m = table.module_count();
    char buf[32];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                double v = table.triple(i, j, k);
                if (v == 0.0) continue;
                std::snprintf(buf, sizeof buf, "%.17g", v);
                os << table.labels[static_cast<std::size_t>(i)] << ','
                   << table.labels[static_cast<std::size_t>(j)] << ','
                   << table.labels[static_cast<std::size_t>(k)] << ',' << buf << '\n';
            }
}

}  // namespace speinstein
