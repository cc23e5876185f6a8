#include <catch2/catch_amalgamated.hpp>

#include <speinstein/einstein_poly.hpp>
#include <speinstein/verify.hpp>

using namespace speinstein;

TEST_CASE("h sign table at (1,2)") {
    int_poly h = build_h(1, 2);
    REQUIRE(h.degree() == 8);
    REQUIRE(h.eval(bigint(0)) == 5832);   // 2*9*36*9
    REQUIRE(h.eval(bigint(1)) == -432);   // 3*9*(-1)*16
    REQUIRE(h.leading() > 0);
}

TEST_CASE("h(0) and h(1) closed forms hold exactly up to k,l = 20") {
    for (int k = 1; k <= 20; ++k)
        for (int l = 1; l <= 20; ++l) {
            int_poly h = build_h(k, l);
            REQUIRE(h.eval(bigint(0)) == h_at_zero_closed_form(k, l));
            REQUIRE(h.eval(bigint(1)) == h_at_one_closed_form(k, l));
        }
}

TEST_CASE("leading coefficient of h is positive for a wide parameter range") {
    for (int k = 1; k <= 30; ++k)
        for (int l = 1; l <= 30; ++l)
            REQUIRE(build_h(k, l).leading() > 0);
}

TEST_CASE("t has positive even and negative odd coefficients") {
    for (int k = 1; k <= 10; ++k)
        for (int l = 1; l <= 10; ++l) {
            int_poly t = build_t(k, l);
            REQUIRE(t.degree() == 8);
            for (int d = 0; d <= 8; ++d) {
                if (d % 2 == 0)
                    REQUIRE(t.coeff(d) > 0);
                else
                    REQUIRE(t.coeff(d) < 0);
            }
        }
}

TEST_CASE("t constant term matches its factored form") {
    // 4 (l+1)^4 (l+k) (2l+1+3k)^2
    REQUIRE(build_t(1, 2).coeff(0) == 4 * 81 * 3 * 64);
    for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) {
            bigint expect = 4 * boost::multiprecision::pow(bigint(l + 1), 4) * (l + k)
                          * (2 * l + 1 + 3 * k) * (2 * l + 1 + 3 * k);
            REQUIRE(build_t(k, l).coeff(0) == expect);
        }
}

TEST_CASE("all real roots of t are positive") {
    // the alternating signs force t(y) > 0 for y <= 0
    for (auto [k, l] : {std::pair{1, 2}, {2, 3}, {4, 1}}) {
        int_poly t = build_t(k, l);
        isolation neg = sturm_isolate(t, std::nullopt, bigrat(0));
        REQUIRE(neg.intervals.empty());
    }
}

TEST_CASE("f2 vanishes on the diagonal y2 = y4") {
    einstein_system sys = build_system(2, 3);
    for (int i = 1; i <= 9; ++i) {
        bigrat v(i, 4), y3(i, 3);
        REQUIRE(sys.f2.eval(v, y3, v) == 0);
    }
}

TEST_CASE("affine relation shape") {
    for (int k = 1; k <= 6; ++k)
        for (int l = 1; l <= 6; ++l) {
            affine_y3 hb = build_h_bivar(k, l);
            REQUIRE(hb.a.degree() == 7);
            REQUIRE(hb.c > 0);
        }
}

TEST_CASE("g evaluators are not scale invariant") {
    reduced_system g = build_g(1, 2);
    double a = g.g1.eval(0.7, 0.9);
    double b = g.g1.eval(1.4, 1.8);
    REQUIRE(std::abs(a) > 1e-6);
    REQUIRE(std::abs(b - a) > 1e-6);
}

TEST_CASE("invalid parameters are rejected") {
    REQUIRE_THROWS_AS(build_h(0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(build_t(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(build_system(-1, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(build_g(1, -2), std::invalid_argument);
    REQUIRE_THROWS_AS(build_h_bivar(0, 0), std::invalid_argument);
}

TEST_CASE("full transcription verification report") {
    verify_report rep = verify_transcription();
    for (const auto& line : rep.lines) {
        INFO(line.name << ": " << line.detail);
        CHECK(line.pass);
    }
    REQUIRE(rep.pass());
}
