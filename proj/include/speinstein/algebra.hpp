#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace speinstein {

using complex_matrix = Eigen::MatrixXcd;

/// Real part of tr(x^* y); the reference inner product on anti-Hermitian
/// matrices.
inline double hs_inner(const complex_matrix& x, const complex_matrix& y) {
    return x.conjugate().cwiseProduct(y).sum().real();
}

/// Factor sizes of a three-block diagonal subalgebra sp(k1)+sp(k2)+sp(k3).
struct triple_shape {
    int k1 = 1, k2 = 1, k3 = 1;

    triple_shape() = default;
    triple_shape(int a, int b, int c) : k1(a), k2(b), k3(c) {
        if (k1 < 1 || k2 < 1 || k3 < 1)
            throw std::invalid_argument("triple shape entries must be >= 1");
    }

    int n() const { return k1 + k2 + k3; }
};

/// The compact real form sp(n) realized as 2n x 2n complex matrices
/// [[A, B], [-conj(B), conj(A)]] with A anti-Hermitian and B symmetric,
/// i.e. anti-Hermitian X with X^T J + J X = 0. The stored basis is
/// orthogonal for the positive-definite form B(x,y) = -tr(ad x . ad y),
/// whose Gram matrix is computed from the structure constants themselves.
struct algebra_basis {
    int n = 0;
    std::vector<complex_matrix> elements;
    /// quaternionic (row, col) support of each element, row <= col
    std::vector<std::pair<int, int>> support;
    Eigen::MatrixXd gram;
    /// measured ratio between the ad-trace form and hs_inner
    double killing_scale = 0.0;
    /// max absolute deviation between the ad-trace Gram and its
    /// hs_inner-proportional fit
    double killing_consistency = 0.0;

    int dim() const { return static_cast<int>(elements.size()); }

    double inner(const complex_matrix& x, const complex_matrix& y) const {
        return killing_scale * hs_inner(x, y);
    }
};

namespace detail {

inline std::vector<std::pair<complex_matrix, std::pair<int, int>>> raw_sp_elements(int n) {
    using cplx = std::complex<double>;
    const cplx i1(0.0, 1.0);
    std::vector<std::pair<complex_matrix, std::pair<int, int>>> out;
    auto embed = [n](const complex_matrix& a, const complex_matrix& b) {
        complex_matrix m = complex_matrix::Zero(2 * n, 2 * n);
        m.topLeftCorner(n, n) = a;
        m.topRightCorner(n, n) = b;
        m.bottomLeftCorner(n, n) = -b.conjugate();
        m.bottomRightCorner(n, n) = a.conjugate();
        return m;
    };
    const complex_matrix zero = complex_matrix::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        complex_matrix m = zero;
        m(a, a) = i1;
        out.push_back({embed(m, zero), {a, a}});
        m = zero; m(a, a) = 1.0;
        out.push_back({embed(zero, m), {a, a}});
        m = zero; m(a, a) = i1;
        out.push_back({embed(zero, m), {a, a}});
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            complex_matrix m = zero;
            m(a, b) = 1.0; m(b, a) = -1.0;
            out.push_back({embed(m, zero), {a, b}});
            m = zero; m(a, b) = i1; m(b, a) = i1;
            out.push_back({embed(m, zero), {a, b}});
            m = zero; m(a, b) = 1.0; m(b, a) = 1.0;
            out.push_back({embed(zero, m), {a, b}});
            m = zero; m(a, b) = i1; m(b, a) = i1;
            out.push_back({embed(zero, m), {a, b}});
        }
    }
    return out;
}

}  // namespace detail

/// Build sp(n) with its ad-trace Gram matrix.
inline algebra_basis build_sp_basis(int n) {
    if (n < 1) throw std::invalid_argument("sp(n) requires n >= 1");
    algebra_basis basis;
    basis.n = n;
    auto raw = detail::raw_sp_elements(n);
    const int d = static_cast<int>(raw.size());
    basis.elements.reserve(raw.size());
    basis.support.reserve(raw.size());
    for (auto& [m, sup] : raw) {
        basis.elements.push_back(std::move(m));
        basis.support.push_back(sup);
    }

    // structure constants on the raw basis; it is hs-orthogonal, so bracket
    // coordinates are plain projections
    std::vector<double> norms2(d);
    for (int a = 0; a < d; ++a) norms2[a] = hs_inner(basis.elements[a], basis.elements[a]);
    std::vector<Eigen::MatrixXd> ad(d, Eigen::MatrixXd::Zero(d, d));
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            complex_matrix br = basis.elements[a] * basis.elements[b]
                              - basis.elements[b] * basis.elements[a];
            for (int e = 0; e < d; ++e) {
                double c = hs_inner(basis.elements[e], br) / norms2[e];
                if (std::abs(c) > 1e-14) {
                    ad[a](e, b) = c;
                    ad[b](e, a) = -c;
                }
            }
        }
    }
    basis.gram.resize(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            double tr = (ad[a].array() * ad[b].transpose().array()).sum();
            basis.gram(a, b) = -tr;
            basis.gram(b, a) = -tr;
        }

    basis.killing_scale = basis.gram(0, 0) / norms2[0];
    double dev = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double expect = (a == b) ? basis.killing_scale * norms2[a] : 0.0;
            dev = std::max(dev, std::abs(basis.gram(a, b) - expect));
        }
    basis.killing_consistency = dev;
    if (dev > 1e-8)
        throw std::runtime_error("ad-trace form is not proportional to the matrix trace form");
    return basis;
}

enum class module_kind { subalgebra_factor, off_diagonal };

/// One summand of an orthogonal module decomposition; its basis is
/// orthonormal for the ad-trace form of the parent algebra.
struct alg_module {
    std::string label;
    module_kind kind = module_kind::off_diagonal;
    std::vector<complex_matrix> basis;
    std::vector<int> sign_pattern;  ///< involution eigenvalues; empty for factors

    int dim() const { return static_cast<int>(basis.size()); }
};

struct decomposition {
    algebra_basis parent;
    std::vector<alg_module> modules;

    int module_count() const { return static_cast<int>(modules.size()); }

    int total_dim() const {
        int s = 0;
        for (const auto& m : modules) s += m.dim();
        return s;
    }

    std::vector<int> dims() const {
        std::vector<int> d;
        d.reserve(modules.size());
        for (const auto& m : modules) d.push_back(m.dim());
        return d;
    }
};

namespace detail {

/// Modified Gram-Schmidt under the parent's ad-trace inner product.
inline std::vector<complex_matrix> orthonormalize(const algebra_basis& parent,
                                                  const std::vector<int>& indices,
                                                  double tol = 1e-12) {
    std::vector<complex_matrix> out;
    out.reserve(indices.size());
    for (int idx : indices) {
        complex_matrix v = parent.elements[static_cast<std::size_t>(idx)];
        for (const auto& e : out) v -= parent.inner(e, v) * e;
        double nn = parent.inner(v, v);
        if (nn <= tol) throw std::runtime_error("degenerate module basis");
        out.push_back(v / std::sqrt(nn));
    }
    return out;
}

}  // namespace detail

/// Decompose sp(k1+k2+k3) under the two commuting block-sign involutions
/// whose common fixed point is sp(k1)+sp(k2)+sp(k3). The three off-diagonal
/// modules couple block pairs (1,2), (1,3), (2,3) in that order.
inline decomposition decompose_triple(const triple_shape& shape) {
    decomposition dec;
    dec.parent = build_sp_basis(shape.n());
    auto block_of = [&shape](int a) {
        if (a < shape.k1) return 0;
        if (a < shape.k1 + shape.k2) return 1;
        return 2;
    };
    std::vector<std::vector<int>> groups(6);
    for (int i = 0; i < dec.parent.dim(); ++i) {
        auto [a, b] = dec.parent.support[static_cast<std::size_t>(i)];
        int ba = block_of(a), bb = block_of(b);
        if (ba == bb) {
            groups[static_cast<std::size_t>(ba)].push_back(i);
        } else {
            int lo = std::min(ba, bb), hi = std::max(ba, bb);
            int m = (lo == 0 && hi == 1) ? 3 : (lo == 0 && hi == 2) ? 4 : 5;
            groups[static_cast<std::size_t>(m)].push_back(i);
        }
    }
    const std::string factor_labels[3] = {
        "sp(" + std::to_string(shape.k1) + ")",
        "sp(" + std::to_string(shape.k2) + ")",
        "sp(" + std::to_string(shape.k3) + ")",
    };
    // (theta, tau) eigenvalue pairs of m1, m2, m3
    const std::vector<std::vector<int>> patterns = {{1, -1}, {-1, -1}, {-1, 1}};
    for (int m = 0; m < 6; ++m) {
        alg_module mod;
        if (m < 3) {
            mod.label = factor_labels[m];
            mod.kind = module_kind::subalgebra_factor;
        } else {
            mod.label = "m" + std::to_string(m - 2);
            mod.kind = module_kind::off_diagonal;
            mod.sign_pattern = patterns[static_cast<std::size_t>(m - 3)];
        }
        mod.basis = detail::orthonormalize(dec.parent, groups[static_cast<std::size_t>(m)]);
        dec.modules.push_back(std::move(mod));
    }
    return dec;
}

/// Decompose sp(2*n1*n2) under the 2*n2-1 commuting block-sign involutions
/// fixing the 2*n2 diagonal sp(n1) blocks. Off-diagonal summands are labeled
/// by their simultaneous eigenvalue pattern; only nonzero eigenspaces appear
/// (realizable patterns are exactly the contiguous intervals of -1 entries).
inline decomposition enumerate_sign_modules(int n1, int n2) {
    if (n1 < 1 || n2 < 2)
        throw std::invalid_argument("sign-module decomposition requires n1 >= 1 and n2 >= 2");
    const int blocks = 2 * n2;
    decomposition dec;
    dec.parent = build_sp_basis(n1 * blocks);
    std::vector<std::vector<int>> diag(static_cast<std::size_t>(blocks));
    std::vector<std::vector<std::vector<int>>> off(
        static_cast<std::size_t>(blocks), std::vector<std::vector<int>>(static_cast<std::size_t>(blocks)));
    for (int i = 0; i < dec.parent.dim(); ++i) {
        auto [a, b] = dec.parent.support[static_cast<std::size_t>(i)];
        int ba = a / n1, bb = b / n1;
        if (ba == bb) diag[static_cast<std::size_t>(ba)].push_back(i);
        else off[static_cast<std::size_t>(std::min(ba, bb))][static_cast<std::size_t>(std::max(ba, bb))].push_back(i);
    }
    for (int b = 0; b < blocks; ++b) {
        alg_module mod;
        mod.label = "sp(" + std::to_string(n1) + ")#" + std::to_string(b + 1);
        mod.kind = module_kind::subalgebra_factor;
        mod.basis = detail::orthonormalize(dec.parent, diag[static_cast<std::size_t>(b)]);
        dec.modules.push_back(std::move(mod));
    }
    for (int a = 0; a < blocks; ++a) {
        for (int b = a + 1; b < blocks; ++b) {
            alg_module mod;
            mod.kind = module_kind::off_diagonal;
            mod.sign_pattern.resize(static_cast<std::size_t>(blocks - 1));
            std::string patt;
            for (int t = 0; t < blocks - 1; ++t) {
                int s = (a <= t && t < b) ? -1 : 1;
                mod.sign_pattern[static_cast<std::size_t>(t)] = s;
                if (t) patt += ",";
                patt += std::to_string(s);
            }
            mod.label = "m(" + patt + ")";
            mod.basis = detail::orthonormalize(dec.parent, off[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
            dec.modules.push_back(std::move(mod));
        }
    }
    return dec;
}

/// Sign patterns over 2*n2-1 involutions with empty eigenspace
/// (the non-interval ones), in lexicographic order with -1 before 1.
inline std::vector<std::vector<int>> absent_sign_patterns(int n1, int n2) {
    if (n1 < 1 || n2 < 2)
        throw std::invalid_argument("sign-module decomposition requires n1 >= 1 and n2 >= 2");
    const int m = 2 * n2 - 1;
    std::vector<std::vector<int>> absent;
    for (long mask = 1; mask < (1L << m); ++mask) {
        std::vector<int> patt(static_cast<std::size_t>(m));
        int first = -1, last = -1;
        for (int t = 0; t < m; ++t) {
            bool minus = (mask >> t) & 1;
            patt[static_cast<std::size_t>(t)] = minus ? -1 : 1;
            if (minus) {
                if (first < 0) first = t;
                last = t;
            }
        }
        bool contiguous = true;
        for (int t = first; t <= last; ++t)
            if (patt[static_cast<std::size_t>(t)] != -1) contiguous = false;
        if (!contiguous) absent.push_back(std::move(patt));
    }
    std::sort(absent.begin(), absent.end());
    return absent;
}

}  // namespace speinstein
