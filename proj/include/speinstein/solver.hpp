#pragma once

#include <speinstein/einstein_poly.hpp>
#include <speinstein/intpoly.hpp>
#include <speinstein/ricci.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace speinstein {

enum class solution_source { symmetric_pipeline, newton };

inline const char* to_string(solution_source s) {
    return s == solution_source::symmetric_pipeline ? "symmetric-pipeline" : "newton";
}

/// A diagonal Einstein metric on the six-module decomposition of sp(k1+k2+k3).
struct einstein_solution {
    triple_shape shape;
    std::array<double, 6> y{};
    double einstein_constant = 0.0;
    double residual = 0.0;
    bool naturally_reductive = false;
    int nr_case = 0;  ///< matched equality case 1..4, 0 when non-naturally reductive
    solution_source source = solution_source::newton;
    std::array<double, 6> canonical{};
};

struct solver_stats {
    int starts = 0;
    int converged = 0;
    int rejected = 0;
    int distinct = 0;
};

struct solution_set {
    std::vector<einstein_solution> solutions;
    solver_stats stats;

    int count_non_naturally_reductive() const {
        int c = 0;
        for (const auto& s : solutions)
            if (!s.naturally_reductive) ++c;
        return c;
    }
};

constexpr double default_einstein_tol = 1e-9;
constexpr double default_classifier_tol = 1e-8;

/// Test the metric against the four naturally-reductive equality patterns:
///   (1) y1=y2=y4, y5=y6   (2) y2=y3=y6, y4=y5
///   (3) y1=y3=y5, y4=y6   (4) y4=y5=y6.
/// Returns the first matching case, or 0 when none matches (the metric is
/// then non-naturally reductive). Equalities are relative to tol.
inline int classify(const std::array<double, 6>& y, double tol = default_classifier_tol) {
    for (double v : y)
        if (!(v > 0.0)) throw std::domain_error("metric scales must be positive");
    auto equal = [&](std::initializer_list<int> idx) {
        double lo = y[static_cast<std::size_t>(*idx.begin())], hi = lo;
        for (int i : idx) {
            lo = std::min(lo, y[static_cast<std::size_t>(i)]);
            hi = std::max(hi, y[static_cast<std::size_t>(i)]);
        }
        return hi - lo <= tol * hi;
    };
    if (equal({0, 1, 3}) && equal({4, 5})) return 1;
    if (equal({1, 2, 5}) && equal({3, 4})) return 2;
    if (equal({0, 2, 4}) && equal({3, 5})) return 3;
    if (equal({3, 4, 5})) return 4;
    return 0;
}

/// Scale so the largest component is 1; when the first two factors have equal
/// rank, also pick the lexicographically smaller of the metric and its image
/// under swapping those factors (y1<->y2, y5<->y6).
inline std::array<double, 6> canonical_form(const std::array<double, 6>& y, bool swap_equal_factors) {
    std::array<double, 6> c = y;
    double mx = *std::max_element(c.begin(), c.end());
    for (double& v : c) v /= mx;
    if (swap_equal_factors) {
        std::array<double, 6> s = {c[1], c[0], c[2], c[3], c[5], c[4]};
        for (int i = 0; i < 6; ++i) {
            double diff = s[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
            if (std::abs(diff) <= 1e-9) continue;
            if (diff < 0) c = s;
            break;
        }
    }
    return c;
}

inline double canonical_distance(const std::array<double, 6>& a, const std::array<double, 6>& b) {
    double d = 0.0;
    for (int i = 0; i < 6; ++i)
        d = std::max(d, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
    return d;
}

namespace detail {

inline einstein_solution make_solution(const triple_shape& shape, const std::array<double, 6>& y,
                                       solution_source source, double classifier_tol) {
    einstein_solution sol;
    sol.shape = shape;
    sol.y = y;
    ricci_vector r = ricci_closed_form(shape, metric_params(y.begin(), y.end()));
    sol.einstein_constant = r.einstein_constant();
    sol.residual = r.residual();
    sol.nr_case = classify(y, classifier_tol);
    sol.naturally_reductive = sol.nr_case != 0;
    sol.source = source;
    sol.canonical = canonical_form(y, shape.k1 == shape.k2);
    return sol;
}

inline void dedup_and_sort(std::vector<einstein_solution>& sols) {
    std::sort(sols.begin(), sols.end(), [](const einstein_solution& a, const einstein_solution& b) {
        return std::lexicographical_compare(a.canonical.begin(), a.canonical.end(),
                                            b.canonical.begin(), b.canonical.end());
    });
    std::vector<einstein_solution> out;
    for (auto& s : sols) {
        bool dup = false;
        for (const auto& kept : out)
            if (canonical_distance(s.canonical, kept.canonical) < 1e-6) { dup = true; break; }
        if (!dup) out.push_back(std::move(s));
    }
    sols = std::move(out);
}

}  // namespace detail

/// All Einstein metrics of the two-equal-factor ansatz on Sp(2k+l): positive
/// roots t != 1 of the eliminant give y4 = t, y3 from the affine relation,
/// y1 = y2 = (k+1)t/(l t^2 + 3k + 1), y5 = y6 = 1. Candidates must come out
/// positive, satisfy both reduced equations exactly evaluated below 1e-9, and
/// have Einstein residual below 1e-9.
inline solution_set solve_symmetric(int k, int l, double classifier_tol = default_classifier_tol) {
    detail::require_positive_kl(k, l);
    const triple_shape shape(k, k, l);
    solution_set out;

    int_poly h = build_h(k, l);
    int_poly sf = squarefree_part(h);
    const int_poly x_minus_1(std::vector<bigint>{-1, 1});
    while (!sf.is_zero() && sf.eval(bigint(1)) == 0) sf = sf.divide_exact(x_minus_1);
    if (sf.degree() < 1) return out;

    affine_y3 hb = build_h_bivar(k, l);
    reduced_system g = build_g(k, l);
    const long double C = hb.c.convert_to<long double>();

    isolation iso = sturm_isolate(sf, bigrat(0), cauchy_bound(sf));
    std::vector<einstein_solution> sols;
    for (const auto& iv : iso.intervals) {
        double t = refine_root(sf, iv, 1e-10);
        long double y3l = -hb.a.eval(static_cast<long double>(t)) / C;
        long double y2l = (static_cast<long double>(k) + 1) * t
                        / (static_cast<long double>(l) * t * t + 3.0L * k + 1);
        double y3 = static_cast<double>(y3l);
        double y2 = static_cast<double>(y2l);
        if (!(t > 0.0) || !(y2 > 0.0) || !(y3 > 0.0)) continue;
        bigrat rt(t), r3(y3);
        double g1v = std::abs(g.g1.eval(r3, rt).convert_to<double>());
        double g3v = std::abs(g.g3.eval(r3, rt).convert_to<double>());
        if (!(g1v < 1e-9 && g3v < 1e-9)) continue;
        std::array<double, 6> y = {y2, y2, y3, t, 1.0, 1.0};
        einstein_solution sol = detail::make_solution(shape, y, solution_source::symmetric_pipeline, classifier_tol);
        if (!(sol.residual < 1e-9)) continue;
        sols.push_back(std::move(sol));
    }
    std::sort(sols.begin(), sols.end(),
              [](const einstein_solution& a, const einstein_solution& b) { return a.y[3] < b.y[3]; });
    std::vector<einstein_solution> uniq;
    for (auto& s : sols) {
        bool dup = false;
        for (const auto& kept : uniq)
            if (canonical_distance(s.canonical, kept.canonical) < 1e-6) { dup = true; break; }
        if (!dup) uniq.push_back(std::move(s));
    }
    out.solutions = std::move(uniq);
    out.stats.starts = static_cast<int>(iso.intervals.size());
    out.stats.converged = static_cast<int>(out.solutions.size());
    out.stats.distinct = static_cast<int>(out.solutions.size());
    return out;
}

/// Newton iteration on the five differences r_i - r_6 in the gauge y6 = 1,
/// with a central finite-difference Jacobian. Returns the full six-scale
/// metric, or nothing when the iteration leaves the positive cone, meets a
/// singular Jacobian, or fails to converge.
inline std::optional<std::array<double, 6>> newton_from_start(const triple_shape& shape,
                                                              const std::array<double, 5>& start) {
    constexpr double ftol = 1e-12;
    constexpr int max_iter = 80;
    Eigen::Matrix<double, 5, 1> y;
    for (int i = 0; i < 5; ++i) y(i) = start[static_cast<std::size_t>(i)];

    auto eval_f = [&shape](const Eigen::Matrix<double, 5, 1>& v, Eigen::Matrix<double, 5, 1>& f) {
        metric_params m(6);
        for (int i = 0; i < 5; ++i) m[static_cast<std::size_t>(i)] = v(i);
        m[5] = 1.0;
        ricci_vector r = ricci_closed_form(shape, m);
        for (int i = 0; i < 5; ++i)
            f(i) = r.components[static_cast<std::size_t>(i)] - r.components[5];
    };

    Eigen::Matrix<double, 5, 1> f;
    for (int it = 0; it < max_iter; ++it) {
        for (int i = 0; i < 5; ++i)
            if (!(y(i) > 0.0) || !(y(i) < 1e6) || !std::isfinite(y(i))) return std::nullopt;
        eval_f(y, f);
        if (f.cwiseAbs().maxCoeff() < ftol) {
            std::array<double, 6> full;
            for (int i = 0; i < 5; ++i) full[static_cast<std::size_t>(i)] = y(i);
            full[5] = 1.0;
            return full;
        }
        Eigen::Matrix<double, 5, 5> jac;
        Eigen::Matrix<double, 5, 1> fp, fm;
        for (int j = 0; j < 5; ++j) {
            double step = 1e-6 * std::abs(y(j));
            Eigen::Matrix<double, 5, 1> yp = y, ym = y;
            yp(j) += step;
            ym(j) -= step;
            if (!(ym(j) > 0.0)) return std::nullopt;
            eval_f(yp, fp);
            eval_f(ym, fm);
            jac.col(j) = (fp - fm) / (2.0 * step);
        }
        Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(jac);
        if (!lu.isInvertible()) return std::nullopt;
        y += lu.solve(-f);
    }
    return std::nullopt;
}

/// Deterministic multistart grid: the first `count` points, in lexicographic
/// order, of the g^5 product grid with per-axis values log-spaced in
/// (0.05, 2], g minimal with g^5 >= count.
inline std::vector<std::array<double, 5>> multistart_grid(int count) {
    int g = 1;
    while (static_cast<long long>(g) * g * g * g * g < count) ++g;
    std::vector<double> axis(static_cast<std::size_t>(g));
    const double lo = std::log(0.05), hi = std::log(2.0);
    for (int j = 0; j < g; ++j)
        axis[static_cast<std::size_t>(j)] = std::exp(lo + (j + 1) * (hi - lo) / g);
    std::vector<std::array<double, 5>> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::array<int, 5> idx{};
    while (static_cast<int>(pts.size()) < count) {
        std::array<double, 5> p;
        for (int i = 0; i < 5; ++i) p[static_cast<std::size_t>(i)] = axis[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        pts.push_back(p);
        for (int i = 4; i >= 0; --i) {
            if (++idx[static_cast<std::size_t>(i)] < g) break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    return pts;
}

/// Multistart Newton search over the deterministic grid. Converged points
/// with Einstein residual below tol are classified, canonicalized, sorted and
/// deduplicated; the result does not depend on the worker schedule.
inline solution_set solve_general(const triple_shape& shape, int starts = 200,
                                  double tol = default_einstein_tol,
                                  double classifier_tol = default_classifier_tol) {
    if (starts < 1) throw std::invalid_argument("starts must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    auto grid = multistart_grid(starts);
    std::vector<std::optional<std::array<double, 6>>> results(grid.size());

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));
    std::vector<std::future<void>> jobs;
    std::size_t chunk = (grid.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(grid.size(), begin + chunk);
        if (begin >= end) break;
        jobs.push_back(std::async(std::launch::async, [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                results[i] = newton_from_start(shape, grid[i]);
        }));
    }
    for (auto& j : jobs) j.get();

    solution_set out;
    out.stats.starts = starts;
    std::vector<einstein_solution> sols;
    for (const auto& res : results) {
        if (!res) continue;
        ++out.stats.converged;
        einstein_solution sol = detail::make_solution(shape, *res, solution_source::newton, classifier_tol);
        if (!(sol.residual < tol)) {
            ++out.stats.rejected;
            continue;
        }
        sols.push_back(std::move(sol));
    }
    out.stats.rejected += starts - out.stats.converged;
    detail::dedup_and_sort(sols);
    out.solutions = std::move(sols);
    out.stats.distinct = static_cast<int>(out.solutions.size());
    return out;
}

/// 2 * floor((n-1)/3): the guaranteed number of non-naturally reductive
/// Einstein metrics on Sp(n) produced by the two-equal-factor families.
inline int count_lower_bound(int n) {
    if (n < 4) throw std::domain_error("the lower bound requires n >= 4");
    return 2 * ((n - 1) / 3);
}

struct existence_report {
    int k = 0, l = 0;
    bigint h_at_zero;
    bigint h_at_one;
    bigint leading_coeff;
    int roots_in_unit_interval = 0;  ///< exact count in (0, 1)
    int roots_above_one = 0;         ///< exact count in (1, +inf)
    solution_set solutions;
    bool sign_checks_pass = false;
    bool root_counts_pass = false;
    bool pass = false;
};

/// The existence argument for k < l, run exactly: sign table of h at 0, 1 and
/// at infinity, Sturm counts on (0,1) and (1,oo), then the symmetric pipeline
/// with at least two surviving non-naturally reductive solutions.
inline existence_report verify_existence(int k, int l) {
    detail::require_positive_kl(k, l);
    if (!(k < l)) throw std::domain_error("the sign argument requires k < l");
    existence_report rep;
    rep.k = k;
    rep.l = l;
    int_poly h = build_h(k, l);
    rep.h_at_zero = h.eval(bigint(0));
    rep.h_at_one = h.eval(bigint(1));
    rep.leading_coeff = h.leading();
    rep.sign_checks_pass = rep.h_at_zero > 0 && rep.h_at_one < 0 && rep.leading_coeff > 0;

    int_poly sf = squarefree_part(h);
    sturm_chain chain(sf);
    rep.roots_in_unit_interval = chain.count(bigrat(0), bigrat(1));
    rep.roots_above_one = chain.count_to_inf(bigrat(1));
    rep.root_counts_pass = rep.roots_in_unit_interval >= 1 && rep.roots_above_one >= 1;

    rep.solutions = solve_symmetric(k, l);
    rep.pass = rep.sign_checks_pass && rep.root_counts_pass
            && rep.solutions.count_non_naturally_reductive() >= 2;
    return rep;
}

/// Lift a six-scale metric on the (1,1,2) block decomposition of sp(4) to the
/// ten-module sign decomposition (four diagonal sp(1) blocks, then the six
/// interval modules coupling block pairs (1,2), (1,3), (1,4), (2,3), (2,4),
/// (3,4)). The sp(2) factor splits into the two last diagonal blocks and the
/// (3,4) module; the off-diagonal scales follow the coupled blocks.
inline metric_params expand_sp4_metric(const std::array<double, 6>& y) {
    for (double v : y)
        if (!(v > 0.0)) throw std::domain_error("metric scales must be positive");
    return {y[0], y[1], y[2], y[2], y[3], y[4], y[4], y[5], y[5], y[2]};
}

}  // namespace speinstein
