#include <catch2/catch_amalgamated.hpp>

#include <speinstein/structure.hpp>
#include <speinstein/verify.hpp>

#include <sstream>

using namespace speinstein;

namespace {

const std::vector<triple_shape>& small_shapes() {
    static const std::vector<triple_shape> shapes = {
        {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 1, 4}, {1, 2, 3}, {2, 2, 2},
    };
    return shapes;
}

}  // namespace

TEST_CASE("row sums recover the module dimensions") {
    for (const auto& shape : small_shapes()) {
        decomposition dec = decompose_triple(shape);
        structure_table t = compute_table(dec);
        const int m = t.module_count();
        for (int k = 0; k < m; ++k) {
            double sum = 0.0;
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < m; ++i) sum += t.triple(j, k, i);
            REQUIRE(std::abs(sum - t.dims[static_cast<std::size_t>(k)]) < 1e-8);
        }
        REQUIRE(t.symmetrization_deviation < 1e-9);
    }
}

TEST_CASE("stored table is fully permutation symmetric") {
    decomposition dec = decompose_triple({1, 2, 3});
    structure_table t = compute_table(dec);
    const int m = t.module_count();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                double v = t.triple(i, j, k);
                REQUIRE(v >= 0.0);
                REQUIRE(v == t.triple(j, i, k));
                REQUIRE(v == t.triple(k, i, j));
                REQUIRE(v == t.triple(i, k, j));
            }
}

TEST_CASE("distinct diagonal factors commute") {
    decomposition dec = decompose_triple({1, 2, 3});
    structure_table t = compute_table(dec);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (!(i == j && j == k)) REQUIRE(t.triple(i, j, k) == 0.0);
}

TEST_CASE("the off-diagonal cross term is present") {
    decomposition dec = decompose_triple({1, 1, 2});
    structure_table t = compute_table(dec);
    double cross = t.triple(3, 4, 5);
    REQUIRE(cross > 0.0);

    // independent accumulation of the same entry, bypassing table symmetrization
    double direct = 0.0;
    const auto& m1 = dec.modules[3].basis;
    const auto& m2 = dec.modules[4].basis;
    const auto& m3 = dec.modules[5].basis;
    for (const auto& a : m1)
        for (const auto& b : m2) {
            complex_matrix br = a * b - b * a;
            for (const auto& c : m3) {
                double v = dec.parent.inner(c, br);
                direct += v * v;
            }
        }
    REQUIRE(std::abs(direct - cross) < 1e-9);
}

TEST_CASE("squares of the off-diagonal modules fall back into the subalgebra") {
    for (const auto& shape : small_shapes()) {
        decomposition dec = decompose_triple(shape);
        structure_table t = compute_table(dec);
        for (int i = 3; i < 6; ++i)
            for (int j = 3; j < 6; ++j)
                if (i != j) REQUIRE(t.triple(i, i, j) == 0.0);
    }
}

TEST_CASE("diagonal restriction of the row-sum identity") {
    decomposition dec = decompose_triple({1, 1, 2});
    structure_table t = compute_table(dec);
    // the sp(1) factor: complete sum equals dim = 3, and the (000) entry is
    // its only contribution from the factor itself
    double sum = 0.0;
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) sum += t.triple(j, 0, i);
    REQUIRE(std::abs(sum - 3.0) < 1e-8);
    REQUIRE(t.triple(0, 0, 0) > 0.0);
}

TEST_CASE("table entries are independent of the module basis choice") {
    decomposition dec = decompose_triple({1, 1, 2});
    structure_table base = compute_table(dec);

    // rotate the first off-diagonal module by a deterministic orthogonal map
    det_rng rng(19);
    auto& mod = dec.modules[3];
    const int d = mod.dim();
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ();
    std::vector<complex_matrix> rotated(static_cast<std::size_t>(d),
                                        complex_matrix::Zero(8, 8));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rotated[static_cast<std::size_t>(i)] += q(j, i) * mod.basis[static_cast<std::size_t>(j)];
    mod.basis = rotated;

    structure_table turned = compute_table(dec);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k)
                REQUIRE(std::abs(base.triple(i, j, k) - turned.triple(i, j, k)) < 1e-8);
}

TEST_CASE("a non-orthonormal basis is rejected") {
    decomposition dec = decompose_triple({1, 1, 2});
    dec.modules[2].basis[0] *= 2.0;
    REQUIRE_THROWS_AS(compute_table(dec), std::invalid_argument);
}

TEST_CASE("index bounds are checked") {
    decomposition dec = decompose_triple({1, 1, 1});
    structure_table t = compute_table(dec);
    REQUIRE_THROWS_AS(t.triple(0, 0, 6), std::out_of_range);
    REQUIRE_THROWS_AS(t.triple(-1, 0, 0), std::out_of_range);
}

TEST_CASE("csv dump lists the nonzero triples by label") {
    decomposition dec = decompose_triple({1, 1, 2});
    structure_table t = compute_table(dec);
    std::ostringstream os;
    write_triples_csv(t, os);
    std::string text = os.str();
    REQUIRE(text.rfind("i,j,k,value\n", 0) == 0);
    REQUIRE(text.find("m1,m2,m3,") != std::string::npos);
    int nonzero = 0;
    const int m = t.module_count();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (t.triple(i, j, k) != 0.0) ++nonzero;
    int rows = static_cast<int>(std::count(text.begin(), text.end(), '\n')) - 1;
    REQUIRE(rows == nonzero);
}
