#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace speinstein {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline int sign_of(const bigint& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
inline int sign_of(const bigrat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

/// Univariate polynomial with exact big-integer coefficients, stored in
/// ascending degree. The zero polynomial has an empty coefficient vector;
/// otherwise the leading coefficient is nonzero.
class int_poly {
public:
    int_poly() = default;

    explicit int_poly(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static int_poly constant(bigint c) {
        return int_poly(std::vector<bigint>{std::move(c)});
    }

    /// x^n
    static int_poly monomial(int n, bigint c = 1) {
        std::vector<bigint> v(static_cast<std::size_t>(n) + 1, bigint(0));
        v.back() = std::move(c);
        return int_poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<bigint>& coeffs() const { return coeffs_; }

    bigint coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    bigint leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bigint eval(const bigint& x) const {
        bigint acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bigrat eval(const bigrat& x) const {
        bigrat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    long double eval(long double x) const {
        long double acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + it->convert_to<long double>();
        return acc;
    }

    int sign_at(const bigrat& x) const { return sign_of(eval(x)); }

    int sign_at_pos_inf() const { return is_zero() ? 0 : sign_of(coeffs_.back()); }

    int sign_at_neg_inf() const {
        if (is_zero()) return 0;
        int s = sign_of(coeffs_.back());
        return degree() % 2 == 0 ? s : -s;
    }

    int_poly derivative() const {
        if (coeffs_.size() <= 1) return int_poly();
        std::vector<bigint> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * int(i);
        return int_poly(std::move(d));
    }

    int_poly operator-() const {
        std::vector<bigint> v(coeffs_);
        for (auto& c : v) c = -c;
        return int_poly(std::move(v));
    }

    friend int_poly operator+(const int_poly& a, const int_poly& b) {
        std::vector<bigint> v(std::max(a.coeffs_.size(), b.coeffs_.size()), bigint(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return int_poly(std::move(v));
    }

    friend int_poly operator-(const int_poly& a, const int_poly& b) { return a + (-b); }

    friend int_poly operator*(const int_poly& a, const int_poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<bigint> v(a.coeffs_.size() + b.coeffs_.size() - 1, bigint(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return int_poly(std::move(v));
    }

    friend int_poly operator*(const int_poly& a, const bigint& s) {
        if (s == 0) return {};
        std::vector<bigint> v(a.coeffs_);
        for (auto& c : v) c *= s;
        return int_poly(std::move(v));
    }

    friend bool operator==(const int_poly& a, const int_poly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// gcd of all coefficients, positive; 0 for the zero polynomial.
    bigint content() const {
        bigint g = 0;
        for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
        return boost::multiprecision::abs(g);
    }

    /// p / content, keeping the sign of the leading coefficient.
    int_poly primitive_part() const {
        if (is_zero()) return {};
        bigint g = content();
        std::vector<bigint> v(coeffs_);
        for (auto& c : v) c /= g;
        return int_poly(std::move(v));
    }

    /// Exact division; throws if the remainder is nonzero.
    int_poly divide_exact(const int_poly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        std::vector<bigint> rem(coeffs_);
        int dr = static_cast<int>(rem.size()) - 1;
        int dd = d.degree();
        if (dr < dd) {
            if (is_zero()) return {};
            throw std::domain_error("inexact polynomial division");
        }
        std::vector<bigint> q(static_cast<std::size_t>(dr - dd) + 1, bigint(0));
        for (int i = dr; i >= dd; --i) {
            if (rem[static_cast<std::size_t>(i)] == 0) continue;
            bigint c = rem[static_cast<std::size_t>(i)];
            if (c % d.leading() != 0) throw std::domain_error("inexact polynomial division");
            c /= d.leading();
            q[static_cast<std::size_t>(i - dd)] = c;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i - dd + j)] -= c * d.coeff(j);
        }
        for (const auto& c : rem)
            if (c != 0) throw std::domain_error("inexact polynomial division");
        return int_poly(std::move(q));
    }

    /// Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p = q*d + r. Returns r.
    friend int_poly pseudo_rem(const int_poly& p, const int_poly& d) {
        if (d.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
        int_poly r = p;
        int dd = d.degree();
        const bigint lc = d.leading();
        int steps = r.degree() - dd + 1;
        if (steps < 0) steps = 0;
        int done = 0;
        while (!r.is_zero() && r.degree() >= dd) {
            int sh = r.degree() - dd;
            bigint c = r.leading();
            std::vector<bigint> v(r.coeffs_);
            for (auto& x : v) x *= lc;
            for (int j = 0; j <= dd; ++j) v[static_cast<std::size_t>(sh + j)] -= c * d.coeff(j);
            r = int_poly(std::move(v));
            ++done;
        }
        // pad the multiplier so the total factor is exactly lc^steps
        for (; done < steps; ++done) r = r * lc;
        return r;
    }

    /// Coefficients as decimal strings, ascending degree (debug dump).
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.str());
        return out;
    }

    std::string to_json() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += "\"" + coeffs_[i].str() + "\"";
        }
        return s + "]";
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<bigint> coeffs_;
};

/// Primitive polynomial gcd via the primitive pseudo-remainder sequence.
/// Result is primitive with positive leading coefficient.
inline int_poly poly_gcd(int_poly a, int_poly b) {
    if (a.is_zero()) return b.is_zero() ? int_poly() : b.primitive_part() * bigint(sign_of(b.leading()));
    if (b.is_zero()) return a.primitive_part() * bigint(sign_of(a.leading()));
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        int_poly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return a;
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline int_poly squarefree_part(const int_poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    int_poly g = poly_gcd(p, p.derivative());
    int_poly s = p.divide_exact(g).primitive_part();
    if (s.leading() < 0) s = -s;
    return s;
}

/// Yun's algorithm: returns pairs (f, m) with p ~ prod f^m, the f squarefree,
/// pairwise coprime, listed by increasing m (factors with m such that f is
/// nonconstant only).
inline std::vector<std::pair<int_poly, int>> squarefree_decomposition(const int_poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
    std::vector<std::pair<int_poly, int>> out;
    int_poly a = p.primitive_part();
    if (a.leading() < 0) a = -a;
    if (a.degree() == 0) return out;
    int_poly g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    int_poly w = a.divide_exact(g);
    int_poly y = a.derivative().divide_exact(g);
    int m = 1;
    while (true) {
        int_poly z = y - w.derivative();
        if (z.is_zero()) {
            if (w.degree() > 0) out.emplace_back(w.primitive_part(), m);
            break;
        }
        int_poly f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, m);
        w = w.divide_exact(f);
        y = z.divide_exact(f);
        ++m;
    }
    return out;
}

/// 1 + max |c_i| / |c_d|: every real root lies in (-bound, bound).
inline bigrat cauchy_bound(const int_poly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    bigint lead = boost::multiprecision::abs(p.leading());
    bigint mx = 0;
    for (int i = 0; i < p.degree(); ++i) {
        bigint a = boost::multiprecision::abs(p.coeff(i));
        if (a > mx) mx = a;
    }
    return bigrat(1) + bigrat(mx, lead);
}

/// Sturm chain of a squarefree polynomial. Sign-variation differences count
/// real roots on half-open intervals (a, b].
class sturm_chain {
public:
    explicit sturm_chain(const int_poly& squarefree) {
        if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
        seq_.push_back(squarefree);
        if (squarefree.degree() == 0) return;
        seq_.push_back(squarefree.derivative());
        while (seq_.back().degree() > 0) {
            const int_poly& f = seq_[seq_.size() - 2];
            const int_poly& g = seq_.back();
            int delta = f.degree() - g.degree() + 1;
            int_poly r = pseudo_rem(f, g);
            if (g.leading() < 0 && delta % 2 == 1) r = -r;  // keep a positive multiplier
            if (r.is_zero()) break;
            seq_.push_back((-r).primitive_part());
        }
    }

    int variations_at(const bigrat& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq_) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at_pos_inf() const {
        int v = 0, prev = 0;
        for (const auto& p : seq_) {
            int s = p.sign_at_pos_inf();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    /// Number of roots in (a, b].
    int count(const bigrat& a, const bigrat& b) const {
        return variations_at(a) - variations_at(b);
    }

    /// Number of roots in (a, +inf).
    int count_to_inf(const bigrat& a) const {
        return variations_at(a) - variations_at_pos_inf();
    }

    const std::vector<int_poly>& sequence() const { return seq_; }

private:
    std::vector<int_poly> seq_;
};

struct root_interval {
    bigrat lo;  ///< exclusive
    bigrat hi;  ///< inclusive
    int multiplicity = 1;
};

/// Disjoint half-open intervals (lo, hi], each containing exactly one real
/// root of the input, sorted by lower endpoint. Multiplicities are recovered
/// from the squarefree decomposition.
struct isolation {
    std::vector<root_interval> intervals;
    int_poly squarefree;
};

/// Isolate real roots of p on (lo, hi]; unbounded sides default to the
/// Cauchy bound.
inline isolation sturm_isolate(const int_poly& p,
                               std::optional<bigrat> lo = std::nullopt,
                               std::optional<bigrat> hi = std::nullopt) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    isolation out;
    out.squarefree = squarefree_part(p);
    if (out.squarefree.degree() == 0) return out;
    bigrat bound = cauchy_bound(p);
    bigrat a = lo.value_or(-bound);
    bigrat b = hi.value_or(bound);
    if (!(a < b)) return out;
    sturm_chain chain(out.squarefree);

    struct seg { bigrat a, b; int va, vb; };
    std::vector<seg> stack;
    stack.push_back({a, b, chain.variations_at(a), chain.variations_at(b)});
    while (!stack.empty()) {
        seg s = stack.back();
        stack.pop_back();
        int c = s.va - s.vb;
        if (c <= 0) continue;
        if (c == 1) {
            out.intervals.push_back({s.a, s.b, 1});
            continue;
        }
        bigrat m = (s.a + s.b) / 2;
        int vm = chain.variations_at(m);
        stack.push_back({m, s.b, vm, s.vb});
        stack.push_back({s.a, m, s.va, vm});
    }
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const root_interval& x, const root_interval& y) { return x.lo < y.lo; });

    auto factors = squarefree_decomposition(p);
    if (factors.size() > 1 || (factors.size() == 1 && factors[0].second != 1)) {
        for (auto& iv : out.intervals) {
            for (const auto& [f, m] : factors) {
                if (f.degree() == 0) continue;
                sturm_chain fc(f);
                if (fc.count(iv.lo, iv.hi) == 1) {
                    iv.multiplicity = m;
                    break;
                }
            }
        }
    }
    return out;
}

/// Refine the single root in (lo, hi]: exact bisection to width < 1e-12,
/// then a floating-point Newton polish. The relative residual
/// |p(r)| / sum_i |c_i r^i| must come out below tol.
inline double refine_root(const int_poly& p, root_interval iv, double tol = 1e-12) {
    if (p.is_zero()) throw std::invalid_argument("cannot refine a root of the zero polynomial");
    int_poly sf = squarefree_part(p);
    bigrat lo = iv.lo, hi = iv.hi;
    int shi = sf.sign_at(hi);
    if (shi == 0) return boost::multiprecision::numerator(hi).convert_to<double>() /
                         boost::multiprecision::denominator(hi).convert_to<double>();
    // the isolating interval is half-open: a root at lo does not belong to it
    while (sf.sign_at(lo) == 0 || sf.sign_at(lo) == shi) {
        if (sf.sign_at(lo) == shi && sf.sign_at(iv.lo) != 0)
            throw std::invalid_argument("interval endpoints do not bracket a sign change");
        bigrat m = (lo + hi) / 2;
        int sm = sf.sign_at(m);
        if (sm == 0) return m.convert_to<double>();
        if (sm == shi) hi = m; else lo = m;
    }
    const bigrat width_target(bigint(1), bigint(1000000000000LL));  // 1e-12
    while (hi - lo >= width_target) {
        bigrat m = (lo + hi) / 2;
        int sm = sf.sign_at(m);
        if (sm == 0) return m.convert_to<double>();
        if (sm == shi) hi = m; else lo = m;
    }
    long double x = ((lo + hi) / 2).convert_to<long double>();
    int_poly d = sf.derivative();
    for (int it = 0; it < 16; ++it) {
        long double fx = sf.eval(x);
        long double dx = d.eval(x);
        if (dx == 0.0L) break;
        long double step = fx / dx;
        x -= step;
        if (std::abs(step) <= std::abs(x) * 1e-19L) break;
    }
    long double denom = 0;
    long double xp = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        denom += std::abs(p.coeff(i).convert_to<long double>() * xp);
        xp *= x;
    }
    if (denom == 0) denom = 1;
    long double rel = std::abs(p.eval(x)) / denom;
    if (!(rel < tol))
        throw std::runtime_error("root refinement did not reach the requested tolerance");
    return static_cast<double>(x);
}

}  // namespace speinstein
