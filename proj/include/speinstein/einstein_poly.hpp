#pragma once

#include <speinstein/intpoly.hpp>

#include <stdexcept>
#include <vector>

namespace speinstein {

/// Sparse polynomial in (y2, y3, y4) with exact integer coefficients.
class multi_poly {
public:
    struct term {
        bigint coeff;
        int e2, e3, e4;
    };

    multi_poly() = default;
    explicit multi_poly(std::vector<term> terms) : terms_(std::move(terms)) {}

    const std::vector<term>& terms() const { return terms_; }

    bigrat eval(const bigrat& y2, const bigrat& y3, const bigrat& y4) const {
        bigrat acc = 0;
        for (const auto& t : terms_) {
            bigrat m = t.coeff;
            for (int i = 0; i < t.e2; ++i) m *= y2;
            for (int i = 0; i < t.e3; ++i) m *= y3;
            for (int i = 0; i < t.e4; ++i) m *= y4;
            acc += m;
        }
        return acc;
    }

    double eval(double y2, double y3, double y4) const {
        long double acc = 0;
        for (const auto& t : terms_) {
            long double m = t.coeff.convert_to<long double>();
            for (int i = 0; i < t.e2; ++i) m *= y2;
            for (int i = 0; i < t.e3; ++i) m *= y3;
            for (int i = 0; i < t.e4; ++i) m *= y4;
            acc += m;
        }
        return static_cast<double>(acc);
    }

    /// Convenience for polynomials not involving y2.
    bigrat eval(const bigrat& y3, const bigrat& y4) const { return eval(bigrat(0), y3, y4); }
    double eval(double y3, double y4) const { return eval(0.0, y3, y4); }

private:
    std::vector<term> terms_;
};

namespace detail {
inline void require_positive_kl(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("k and l must be positive integers");
}
}  // namespace detail

/// The three Einstein equations on Sp(2k+l) for the two-equal-factor metric
/// ansatz (first two scales identified, last two set to 1), as polynomials in
/// (y2, y3, y4).
struct einstein_system {
    multi_poly f1, f2, f3;
};

inline einstein_system build_system(int k, int l) {
    detail::require_positive_kl(k, l);
    const bigint K = k, L = l;
    einstein_system s;
    s.f1 = multi_poly({
        {-2 * K, 1, 2, 2},
        {L, 2, 1, 2},
        {K, 2, 1, 0},
        {K, 0, 1, 2},
        {-L, 1, 0, 2},
        {-1, 1, 0, 2},
        {1, 0, 1, 2},
    });
    s.f2 = multi_poly({
        {L, 2, 0, 2},
        {-L, 1, 0, 3},
        {3 * K, 2, 0, 0},
        {-4 * K, 1, 0, 1},
        {K, 0, 0, 2},
        {1, 2, 0, 0},
        {-2, 1, 0, 1},
        {1, 0, 0, 2},
    });
    s.f3 = multi_poly({
        {2 * K, 1, 1, 0},
        {4 * K, 0, 2, 0},
        {2 * K, 0, 1, 1},
        {2 * L, 0, 2, 0},
        {-8 * K, 0, 1, 0},
        {-4 * L, 0, 1, 0},
        {1, 1, 1, 0},
        {1, 0, 2, 0},
        {2 * L, 0, 0, 0},
        {-4, 0, 1, 0},
        {2, 0, 0, 0},
    });
    return s;
}

/// The pair obtained from f1, f3 after eliminating y2 with
/// y2 = (k+1) y4 / (l y4^2 + 3k + 1):
///   f1 * (l y4^2 + 3k + 1)^2 == -y4^2 * g1   and   f3 * (l y4^2 + 3k + 1) == g3.
struct reduced_system {
    multi_poly g1, g3;
};

inline reduced_system build_g(int k, int l) {
    detail::require_positive_kl(k, l);
    const bigint K = k, L = l;
    reduced_system s;
    s.g1 = multi_poly({
        {2 * K * K * L, 0, 2, 3},
        {-K * L * L, 0, 1, 4},
        {2 * K * L, 0, 2, 3},
        {-L * L, 0, 1, 4},
        {6 * K * K * K, 0, 2, 1},
        {-7 * K * K * L, 0, 1, 2},
        {K * L * L, 0, 0, 3},
        {8 * K * K, 0, 2, 1},
        {-10 * K * L, 0, 1, 2},
        {K * L, 0, 0, 3},
        {L * L, 0, 0, 3},
        {-10 * K * K * K, 0, 1, 0},
        {3 * K * K * L, 0, 0, 1},
        {2 * K, 0, 2, 1},
        {-3 * L, 0, 1, 2},
        {L, 0, 0, 3},
        {-17 * K * K, 0, 1, 0},
        {3 * K * K, 0, 0, 1},
        {4 * K * L, 0, 0, 1},
        {-8 * K, 0, 1, 0},
        {4 * K, 0, 0, 1},
        {L, 0, 0, 1},
        {-1, 0, 1, 0},
        {1, 0, 0, 1},
    });
    s.g3 = multi_poly({
        {4 * K * L, 0, 2, 2},
        {2 * K * L, 0, 1, 3},
        {2 * L * L, 0, 2, 2},
        {-8 * K * L, 0, 1, 2},
        {-4 * L * L, 0, 1, 2},
        {L, 0, 2, 2},
        {12 * K * K, 0, 2, 0},
        {8 * K * K, 0, 1, 1},
        {6 * K * L, 0, 2, 0},
        {2 * L * L, 0, 0, 2},
        {-4 * L, 0, 1, 2},
        {-24 * K * K, 0, 1, 0},
        {-12 * K * L, 0, 1, 0},
        {7 * K, 0, 2, 0},
        {5 * K, 0, 1, 1},
        {2 * L, 0, 2, 0},
        {2 * L, 0, 0, 2},
        {6 * K * L, 0, 0, 0},
        {-20 * K, 0, 1, 0},
        {-4 * L, 0, 1, 0},
        {1, 0, 2, 0},
        {1, 0, 1, 1},
        {6 * K, 0, 0, 0},
        {2 * L, 0, 0, 0},
        {-4, 0, 1, 0},
        {2, 0, 0, 0},
    });
    return s;
}

/// The degree-8 eliminant in y4: the univariate member of the lexicographic
/// Groebner basis of {g1, g3, z*y3*y4 - 1}.
inline int_poly build_h(int k, int l) {
    detail::require_positive_kl(k, l);
    const bigint K = k, L = l;
    const bigint K2 = K * K, K3 = K2 * K, K4 = K3 * K, K5 = K4 * K;
    const bigint L2 = L * L, L3 = L2 * L, L4 = L3 * L;
    std::vector<bigint> c(9);
    c[0] = 2 * (2 * K + 1) * (2 * K + 1) * (5 * K + 1) * (5 * K + 1) * (4 * K + 2 * L + 1);
    c[1] = -4 * (5 * K + 1) * (2 * K + 1) * (3 * K + 1) * (2 * K + L + 1) * (8 * K + 2 * L + 1);
    c[2] = 1792 * K5 + 2432 * K4 * L + 848 * K3 * L2 + 36 * K2 * L3 + 2848 * K4
         + 3100 * K3 * L + 896 * K2 * L2 + 24 * K * L3 + 1714 * K3 + 1427 * K2 * L
         + 304 * K * L2 + 4 * L3 + 478 * K2 + 278 * K * L + 32 * L2 + 58 * K + 19 * L + 2;
    c[3] = -4 * (2 * K + L + 1)
         * (96 * K4 + 248 * K3 * L + 62 * K2 * L2 + 92 * K3 + 215 * K2 * L + 46 * K * L2
            + 32 * K2 + 55 * K * L + 8 * L2 + 4 * K + 4 * L);
    c[4] = 128 * K5 + 1376 * K4 * L + 1472 * K3 * L2 + 468 * K2 * L3 + 24 * K * L4
         + 160 * K4 + 1684 * K3 * L + 1372 * K2 * L2 + 336 * K * L3 + 8 * L4 + 82 * K3
         + 713 * K2 * L + 406 * K * L2 + 60 * L3 + 20 * K2 + 118 * K * L + 38 * L2
         + 2 * K + 5 * L;
    c[5] = -8 * L * (2 * K + L + 1)
         * (28 * K3 + 40 * K2 * L + 10 * K * L2 + 14 * K2 + 21 * K * L + 4 * L2 + 2 * K + 2 * L);
    c[6] = L * (64 * K4 + 304 * K3 * L + 284 * K2 * L2 + 88 * K * L3 + 4 * L4 + 40 * K3
                + 238 * K2 * L + 162 * K * L2 + 32 * L3 + 8 * K2 + 51 * K * L + 19 * L2 + 2 * L);
    c[7] = -4 * L2 * (2 * K + L + 1) * (8 * K2 + 8 * K * L + 2 * L2 + L);
    c[8] = 2 * L2 * (L + K) * (4 * K2 + 4 * K * L + 2 * L2 + L);
    return int_poly(std::move(c));
}

/// The second Groebner-basis member, affine in y3: c * y3 + a(y4).
struct affine_y3 {
    int_poly a;  ///< y3-free part, degree 7 in y4
    bigint c;    ///< coefficient of y3, positive
};

inline affine_y3 build_h_bivar(int k, int l) {
    detail::require_positive_kl(k, l);
    const bigint K = k, L = l;
    const bigint K2 = K * K, K3 = K2 * K, K4 = K3 * K, K5 = K4 * K, K6 = K5 * K, K7 = K6 * K;
    const bigint L2 = L * L, L3 = L2 * L, L4 = L3 * L, L5 = L4 * L, L6 = L5 * L;
    const bigint Q = 6 * K2 + 4 * K * L + 2 * L2 + 2 * K + L;
    affine_y3 out;
    out.c = (2 * L + 1) * (5 * K + 1) * (2 * K + 1) * (K + 1) * (4 * K + 2 * L + 1) * Q;
    std::vector<bigint> a(8);
    a[0] = 16 * K * (5 * K + 1) * (2 * K + 1) * (K + 1) * (2 * K + L + 1) * Q;
    a[1] = -(2944 * K7 + 5920 * K6 * L + 6800 * K5 * L2 + 4104 * K4 * L3 + 960 * K3 * L4
             + 24 * K2 * L5 + 7632 * K6 + 13816 * K5 * L + 13320 * K4 * L2 + 6568 * K3 * L3
             + 1284 * K2 * L4 + 32 * K * L5 + 7480 * K5 + 11750 * K4 * L + 9368 * K3 * L2
             + 3574 * K2 * L3 + 512 * K * L4 + 8 * L5 + 3546 * K4 + 4678 * K3 * L
             + 2943 * K2 * L2 + 784 * K * L3 + 60 * L4 + 838 * K3 + 893 * K2 * L
             + 400 * K * L2 + 58 * L3 + 86 * K2 + 70 * K * L + 17 * L2 + 2 * K + L);
    a[2] = 4 * (2 * K + L + 1)
         * (192 * K6 + 624 * K5 * L + 1052 * K4 * L2 + 648 * K3 * L3 + 108 * K2 * L4
            + 376 * K5 + 1166 * K4 * L + 1412 * K3 * L2 + 684 * K2 * L3 + 96 * K * L4
            + 248 * K4 + 688 * K3 * L + 631 * K2 * L2 + 216 * K * L3 + 20 * L4 + 72 * K3
            + 158 * K2 * L + 108 * K * L2 + 20 * L3 + 8 * K2 + 12 * K * L + 5 * L2);
    a[3] = -(256 * K7 + 2976 * K6 * L + 8944 * K5 * L2 + 10696 * K4 * L3 + 5680 * K3 * L4
             + 1224 * K2 * L5 + 56 * K * L6 + 576 * K6 + 6656 * K5 * L + 15528 * K4 * L2
             + 14480 * K3 * L3 + 5996 * K2 * L4 + 988 * K * L5 + 24 * L6 + 484 * K5
             + 5282 * K4 * L + 9632 * K3 * L2 + 6830 * K2 * L3 + 2006 * K * L4 + 196 * L5
             + 204 * K4 + 1882 * K3 * L + 2625 * K2 * L2 + 1293 * K * L3 + 210 * L4
             + 44 * K3 + 294 * K2 * L + 293 * K * L2 + 75 * L3 + 4 * K2 + 14 * K * L + 8 * L2);
    a[4] = 4 * L * (2 * K + L + 1)
         * (112 * K5 + 448 * K4 * L + 664 * K3 * L2 + 360 * K2 * L3 + 60 * K * L4
            + 168 * K4 + 508 * K3 * L + 556 * K2 * L2 + 228 * K * L3 + 28 * L4 + 64 * K3
            + 172 * K2 * L + 131 * K * L2 + 28 * L3 + 8 * K2 + 16 * K * L + 7 * L2);
    a[5] = -2 * L
         * (64 * K6 + 480 * K5 * L + 1428 * K4 * L2 + 1632 * K3 * L3 + 824 * K2 * L4
            + 172 * K * L5 + 8 * L6 + 104 * K5 + 730 * K4 * L + 1682 * K3 * L2
            + 1428 * K2 * L3 + 504 * K * L4 + 64 * L5 + 48 * K4 + 357 * K3 * L
            + 622 * K2 * L2 + 355 * K * L3 + 66 * L4 + 8 * K3 + 61 * K2 * L
            + 77 * K * L2 + 22 * L3 + 2 * K * L + 2 * L2);
    a[6] = 8 * L2 * (2 * K + L + 1) * (K2 + 4 * K * L + 2 * L2 + K + L)
         * (8 * K2 + 8 * K * L + 2 * L2 + L);
    a[7] = -4 * L2 * (L + K) * (4 * K2 + 4 * K * L + 2 * L2 + L)
         * (K2 + 4 * K * L + 2 * L2 + K + L);
    out.a = int_poly(std::move(a));
    return out;
}

/// The degree-8 eliminant in y3 (lexicographic order eliminating y4 first).
/// Even-degree coefficients are positive and odd-degree ones negative, so all
/// its real roots are positive.
inline int_poly build_t(int k, int l) {
    detail::require_positive_kl(k, l);
    const bigint K = k, L = l;
    const bigint K2 = K * K, K3 = K2 * K, K4 = K3 * K, K5 = K4 * K, K6 = K5 * K, K7 = K6 * K;
    const bigint L2 = L * L, L3 = L2 * L, L4 = L3 * L, L5 = L4 * L, L6 = L5 * L, L7 = L6 * L;
    const bigint Q = 6 * K2 + 4 * K * L + 2 * L2 + 2 * K + L;
    std::vector<bigint> c(9);
    c[0] = 4 * (L + 1) * (L + 1) * (L + 1) * (L + 1) * (L + K) * (2 * L + 1 + 3 * K) * (2 * L + 1 + 3 * K);
    c[1] = -8 * (L + 1) * (L + 1) * (L + 1) * (2 * K + L + 1) * (2 * L + 1 + 3 * K)
         * (3 * K2 + 12 * K * L + 8 * L2 + K + 2 * L);
    c[2] = 4 * (L + 1) * (L + 1)
         * (40 * K5 + 482 * K4 * L + 1318 * K3 * L2 + 1406 * K2 * L3 + 656 * K * L4
            + 112 * L5 + 125 * K4 + 800 * K3 * L + 1593 * K2 * L2 + 1156 * K * L3
            + 276 * L4 + 79 * K3 + 410 * K2 * L + 584 * K * L2 + 224 * L3 + 17 * K2
            + 84 * K * L + 67 * L2 + K + 6 * L);
    c[3] = -4 * (L + 1) * (2 * K + L + 1)
         * (256 * K4 * L + 1164 * K3 * L2 + 1684 * K2 * L3 + 1024 * K * L4 + 224 * L5
            + 108 * K4 + 725 * K3 * L + 1694 * K2 * L2 + 1560 * K * L3 + 480 * L4
            + 72 * K3 + 358 * K2 * L + 616 * K * L2 + 316 * L3 + 12 * K2 + 61 * K * L
            + 70 * L2 + 4 * L);
    c[4] = 800 * K6 * L + 9792 * K5 * L2 + 27248 * K4 * L3 + 34472 * K3 * L4
         + 23124 * K2 * L5 + 8000 * K * L6 + 1120 * L7 + 640 * K6 + 9168 * K5 * L
         + 37136 * K4 * L2 + 64046 * K3 * L3 + 55996 * K2 * L4 + 24520 * K * L5
         + 4240 * L6 + 1712 * K5 + 13190 * K4 * L + 36747 * K3 * L2 + 45785 * K2 * L3
         + 27136 * K * L4 + 6124 * L5 + 1108 * K4 + 6824 * K3 * L + 14530 * K2 * L2
         + 12968 * K * L3 + 4168 * L4 + 264 * K3 + 1526 * K2 * L + 2483 * K * L2
         + 1321 * L3 + 20 * K2 + 140 * K * L + 160 * L2 + 4 * L;
    c[5] = -8 * (2 * K + L + 1)
         * (256 * K5 * L + 1164 * K4 * L2 + 1842 * K3 * L3 + 1472 * K2 * L4
            + 624 * K * L5 + 112 * L6 + 108 * K5 + 725 * K4 * L + 1857 * K3 * L2
            + 2072 * K2 * L3 + 1152 * K * L4 + 268 * L5 + 72 * K4 + 400 * K3 * L
            + 800 * K2 * L2 + 646 * K * L3 + 212 * L4 + 12 * K3 + 81 * K2 * L
            + 121 * K * L2 + 63 * L3 + 6 * K * L + 5 * L2);
    c[6] = 640 * K7 + 7712 * K6 * L + 21968 * K5 * L2 + 30576 * K4 * L3 + 24804 * K3 * L4
         + 12288 * K2 * L5 + 3520 * K * L6 + 448 * L7 + 2000 * K6 + 13528 * K5 * L
         + 31660 * K4 * L2 + 36532 * K3 * L3 + 23504 * K2 * L4 + 8416 * K * L5
         + 1328 * L6 + 1408 * K5 + 7818 * K4 * L + 15881 * K3 * L2 + 14848 * K2 * L3
         + 7012 * K * L4 + 1432 * L5 + 368 * K4 + 1924 * K3 * L + 3456 * K2 * L2
         + 2412 * K * L3 + 676 * L4 + 32 * K3 + 202 * K2 * L + 301 * K * L2 + 126 * L3
         + 8 * K * L + 4 * L2;
    c[7] = -16 * (2 * K + L + 1) * Q
         * (6 * K4 + 24 * K3 * L + 28 * K2 * L2 + 16 * K * L3 + 4 * L4 + 2 * K3
            + 10 * K2 * L + 10 * K * L2 + 4 * L3 + K * L + L2);
    c[8] = (4 * K + 2 * L + 1) * (4 * K2 + 4 * K * L + 2 * L2 + L) * Q * Q;
    return int_poly(std::move(c));
}

/// Closed forms of h at 0 and 1 (sign table of the existence argument).
inline bigint h_at_zero_closed_form(int k, int l) {
    detail::require_positive_kl(k, l);
    const bigint K = k, L = l;
    return 2 * (2 * K + 1) * (2 * K + 1) * (5 * K + 1) * (5 * K + 1) * (4 * K + 2 * L + 1);
}

inline bigint h_at_one_closed_form(int k, int l) {
    detail::require_positive_kl(k, l);
    const bigint K = k, L = l;
    return (2 * K + 1) * (4 * K + 2 * L + 1) * (K - L) * (2 * K + L) * (2 * K + L);
}

}  // namespace speinstein
