#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "derivar/linalg.hpp"

using namespace derivar;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<Rational> vec(const std::vector<long>& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(rat_from_string("7/3") == rat(7, 3));
    CHECK(rat_from_string("-2") == rat(-2));
    CHECK(rat_from_string("4/6") == rat(2, 3));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/-2"), std::invalid_argument);
    CHECK(rat_to_string(rat(-9, 6)) == "-3/2");
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("exactness: (a/b)*(b/a) = 1 on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Rational a = rat(d(rng), d(rng));
        CHECK(a * (1 / a) == 1);
    }
}

TEST_CASE("rref examples") {
    auto r = rref(from_rows({{2, 4}, {1, 2}}));
    CHECK(r.rank == 1);
    CHECK(r.mat.at(0, 0) == 1);
    CHECK(r.mat.at(0, 1) == 2);

    auto id = rref(Matrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.mat == Matrix::identity(3));

    auto z = rref(Matrix(2, 3));
    CHECK(z.rank == 0);
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Matrix m = random_matrix(rng, 5, 7);
        auto once = rref(m);
        auto twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("kernel examples") {
    Subspace k = kernel_basis(from_rows({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(vec({1, -1})));

    CHECK(kernel_basis(from_rows({{1, 2}, {3, 4}})).dim() == 0);
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
}

TEST_CASE("kernel rank-nullity on random matrices") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        Matrix m = random_matrix(rng, 4, 6);
        auto red = rref(m);
        Subspace k = kernel_basis(m);
        CHECK(red.rank + k.dim() == m.cols());
        // every kernel basis vector is annihilated
        for (std::size_t r = 0; r < k.dim(); ++r) {
            for (std::size_t row = 0; row < m.rows(); ++row) {
                Rational dot = 0;
                for (std::size_t c = 0; c < m.cols(); ++c) dot += m.at(row, c) * k.basis().at(r, c);
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("subspace examples") {
    Subspace e12 = Subspace::from_vectors(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    Subspace e23 = Subspace::from_vectors(3, {vec({0, 1, 0}), vec({0, 0, 1})});
    Subspace meet = intersect(e12, e23);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(vec({0, 1, 0})));

    CHECK(intersect(e12, e12) == e12);
    CHECK(intersect(e12, Subspace::zero(3)).dim() == 0);

    CHECK(sum(Subspace::from_vectors(3, {vec({1, 0, 0})}),
              Subspace::from_vectors(3, {vec({0, 1, 0})}))
              .dim() == 2);
    CHECK(subspace_eq(Subspace::from_vectors(2, {vec({1, 1})}),
                      Subspace::from_vectors(2, {vec({2, 2})})));
    CHECK(contains(e12, vec({1, -1, 0})));
    CHECK(!contains(e12, vec({0, 0, 1})));
    CHECK_THROWS_AS(intersect(e12, Subspace::zero(4)), std::invalid_argument);
}

TEST_CASE("dimension formula dim a + dim b = dim(a+b) + dim(a^b)") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t ambient = 20;
        Subspace a = Subspace::from_rows(random_matrix(rng, dim(rng), ambient));
        Subspace b = Subspace::from_rows(random_matrix(rng, dim(rng), ambient));
        CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
    }
}

TEST_CASE("builder matches batch rref") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix m = random_matrix(rng, 8, 5);
        RrefBuilder b(5);
        for (std::size_t i = 0; i < m.rows(); ++i) b.insert(m.row(i));
        CHECK(std::move(b).take() == Subspace::from_rows(m));
    }
}
