#include <catch2/catch_amalgamated.hpp>

#include <speinstein/einstein_poly.hpp>
#include <speinstein/intpoly.hpp>
#include <speinstein/verify.hpp>

#include <cmath>

using namespace speinstein;

namespace {

// Root-count oracle independent of Sturm theory: bracket the critical points
// recursively (Rolle), then count sign changes of p across the resulting
// monotone pieces.
std::vector<bigrat> rolle_breakpoints(const int_poly& p);

void append_root_brackets(const int_poly& sf, std::vector<bigrat>& out) {
    std::vector<bigrat> pts = rolle_breakpoints(sf);
    const bigrat tiny(bigint(1), boost::multiprecision::pow(bigint(10), 40));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        bigrat a = pts[i], b = pts[i + 1];
        int sa = sf.sign_at(a), sb = sf.sign_at(b);
        if (sa == 0 || sb == 0 || sa == sb) continue;
        while (b - a > tiny) {
            bigrat m = (a + b) / 2;
            int sm = sf.sign_at(m);
            if (sm == 0) {
                a = m - tiny / 2;
                b = m + tiny / 2;
                break;
            }
            if (sm == sa) a = m; else b = m;
        }
        out.push_back(a);
        out.push_back(b);
    }
}

std::vector<bigrat> rolle_breakpoints(const int_poly& p) {
    bigrat bound = cauchy_bound(p) + 1;
    std::vector<bigrat> pts = {-bound};
    if (p.degree() >= 2) {
        int_poly dsf = squarefree_part(p.derivative());
        if (dsf.degree() >= 1) append_root_brackets(dsf, pts);
    }
    pts.push_back(bound);
    std::sort(pts.begin(), pts.end());
    return pts;
}

int count_real_roots_oracle(const int_poly& sf) {
    std::vector<bigrat> pts = rolle_breakpoints(sf);
    const bigrat nudge(bigint(1), boost::multiprecision::pow(bigint(10), 45));
    int count = 0;
    int prev = 0;
    for (bigrat x : pts) {
        int s = sf.sign_at(x);
        while (s == 0) {
            ++count;  // exact hit on a breakpoint
            x += nudge;
            s = sf.sign_at(x);
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

TEST_CASE("polynomial arithmetic is exact") {
    int_poly p(std::vector<bigint>{1, -3, 0, 2});  // 2x^3 - 3x + 1
    REQUIRE(p.degree() == 3);
    REQUIRE(p.eval(bigint(2)) == 11);
    REQUIRE(p.eval(bigrat(1, 2)) == bigrat(-1, 4));
    REQUIRE(p.derivative() == int_poly(std::vector<bigint>{-3, 0, 6}));

    int_poly q(std::vector<bigint>{-1, 1});  // x - 1
    REQUIRE((p + q).eval(bigint(3)) == p.eval(bigint(3)) + 2);
    REQUIRE((p * q).degree() == 4);
    REQUIRE((p * q).eval(bigint(5)) == p.eval(bigint(5)) * 4);

    int_poly zero;
    REQUIRE(zero.is_zero());
    REQUIRE((p - p).is_zero());
    REQUIRE((p * zero).is_zero());
}

TEST_CASE("content, primitive part and exact division") {
    int_poly p(std::vector<bigint>{6, -12, 18});
    REQUIRE(p.content() == 6);
    REQUIRE(p.primitive_part() == int_poly(std::vector<bigint>{1, -2, 3}));

    int_poly a(std::vector<bigint>{-2, 1});  // x - 2
    int_poly b(std::vector<bigint>{3, 1});   // x + 3
    REQUIRE((a * b).divide_exact(a) == b);
    REQUIRE_THROWS_AS(b.divide_exact(a), std::domain_error);
}

TEST_CASE("polynomial gcd and squarefree structure") {
    int_poly x_minus_1(std::vector<bigint>{-1, 1});
    int_poly x_plus_2(std::vector<bigint>{2, 1});
    int_poly x_minus_3(std::vector<bigint>{-3, 1});

    int_poly g = poly_gcd(x_minus_1 * x_plus_2, x_minus_1 * x_minus_3);
    REQUIRE(g == x_minus_1);

    int_poly p = x_minus_1 * x_minus_1 * x_plus_2;
    REQUIRE(squarefree_part(p) == (x_minus_1 * x_plus_2).primitive_part());

    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    REQUIRE(dec[0].first == x_plus_2);
    REQUIRE(dec[0].second == 1);
    REQUIRE(dec[1].first == x_minus_1);
    REQUIRE(dec[1].second == 2);
}

TEST_CASE("isolation finds sqrt(2)") {
    int_poly p(std::vector<bigint>{-2, 0, 1});
    isolation pos = sturm_isolate(p, bigrat(0), std::nullopt);
    REQUIRE(pos.intervals.size() == 1);
    isolation all = sturm_isolate(p);
    REQUIRE(all.intervals.size() == 2);

    double r = refine_root(p, pos.intervals[0], 1e-14);
    REQUIRE(std::abs(r - std::sqrt(2.0)) < 1e-15);
    REQUIRE(bigrat(r) > pos.intervals[0].lo);
    REQUIRE(bigrat(r) <= pos.intervals[0].hi);
}

TEST_CASE("isolation handles multiple roots via the gcd step") {
    int_poly x_minus_1(std::vector<bigint>{-1, 1});
    int_poly x_plus_3(std::vector<bigint>{3, 1});
    int_poly p = x_minus_1 * x_minus_1 * x_plus_3;
    isolation iso = sturm_isolate(p);
    REQUIRE(iso.intervals.size() == 2);
    REQUIRE(iso.intervals[0].multiplicity == 1);  // root -3
    REQUIRE(iso.intervals[1].multiplicity == 2);  // root 1
}

TEST_CASE("isolation of the degree-8 eliminant brackets the existence roots") {
    int_poly h = build_h(1, 2);
    isolation in01 = sturm_isolate(h, bigrat(0), bigrat(1));
    isolation above = sturm_isolate(h, bigrat(1), std::nullopt);
    REQUIRE(in01.intervals.size() >= 1);
    REQUIRE(above.intervals.size() >= 1);

    // k > l: the sign argument does not apply; just require consistency
    int_poly h21 = build_h(2, 1);
    int_poly sf = squarefree_part(h21);
    sturm_chain chain(sf);
    isolation iso = sturm_isolate(h21, bigrat(0), std::nullopt);
    REQUIRE(static_cast<int>(iso.intervals.size())
            == chain.count_to_inf(bigrat(0)));
}

TEST_CASE("Sturm counts agree with the derivative-analysis oracle") {
    det_rng rng(42);
    int checked = 0;
    while (checked < 100) {
        int deg = 2 + static_cast<int>(rng.next() % 7);
        std::vector<bigint> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = static_cast<long>(rng.next() % 19) - 9;
        int_poly p(std::move(c));
        if (p.degree() < 2) continue;
        ++checked;
        int_poly sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        sturm_chain chain(sf);
        bigrat bound = cauchy_bound(sf) + 1;
        int sturm_count = chain.count(-bound, bound);
        int oracle = count_real_roots_oracle(sf);
        INFO("degree " << p.degree());
        REQUIRE(sturm_count == oracle);
        REQUIRE(static_cast<int>(sturm_isolate(p).intervals.size()) == oracle);
    }
}

TEST_CASE("refinement rejects a non-isolating interval") {
    int_poly p(std::vector<bigint>{-2, 0, 1});
    REQUIRE_THROWS_AS(refine_root(p, root_interval{bigrat(3), bigrat(4), 1}, 1e-12),
                      std::invalid_argument);
}

TEST_CASE("refinement of an eliminant root stays inside its bracket") {
    int_poly h = build_h(1, 2);
    isolation iso = sturm_isolate(h, bigrat(0), bigrat(1));
    REQUIRE(iso.intervals.size() == 1);
    double t = refine_root(h, iso.intervals[0], 1e-10);
    REQUIRE(t > 0.0);
    REQUIRE(t < 1.0);
    REQUIRE(std::abs(h.eval(static_cast<long double>(t))) / std::abs(h.eval(0.0L)) < 1e-12);
    REQUIRE(bigrat(t) > iso.intervals[0].lo);
    REQUIRE(bigrat(t) <= iso.intervals[0].hi);
}

TEST_CASE("error paths") {
    int_poly zero;
    REQUIRE_THROWS_AS(sturm_isolate(zero), std::invalid_argument);
    REQUIRE_THROWS_AS(squarefree_part(zero), std::invalid_argument);
    REQUIRE_THROWS_AS(cauchy_bound(zero), std::invalid_argument);
    REQUIRE_THROWS_AS(zero.leading(), std::domain_error);
}

TEST_CASE("coefficient dump uses decimal strings") {
    int_poly p(std::vector<bigint>{bigint("123456789012345678901234567890"), -1});
    REQUIRE(p.to_json() == "[\"123456789012345678901234567890\",\"-1\"]");
    REQUIRE(p.coeff_strings().size() == 2);
}
