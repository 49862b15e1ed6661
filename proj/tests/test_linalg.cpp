#include <doctest.h>

#include "test_util.hpp"

using namespace derivlab;

namespace {

SparseRowQ row(std::initializer_list<std::pair<std::size_t, Rational>> e) {
    return SparseRowQ(e);
}

} // namespace

TEST_CASE("solve_system: consistent and inconsistent") {
    // x + y = 3, x - y = 1
    std::vector<SparseRowQ> rows = {row({{0, 1}, {1, 1}}), row({{0, 1}, {1, -1}})};
    auto out = solve_system(rows, {Rational(3), Rational(1)}, 2);
    REQUIRE(out.feasible);
    CHECK(out.solution[0] == 2);
    CHECK(out.solution[1] == 1);
    CHECK(out.rank == 2);

    // x + y = 1, x + y = 2
    auto bad = solve_system({row({{0, 1}, {1, 1}}), row({{0, 1}, {1, 1}})},
                            {Rational(1), Rational(2)}, 2);
    CHECK(!bad.feasible);
}

TEST_CASE("solve_system: underdetermined picks free vars = 0") {
    auto out = solve_system({row({{0, 1}, {1, 2}})}, {Rational(4)}, 2);
    REQUIRE(out.feasible);
    // col 0 is the pivot, col 1 free
    CHECK(out.solution[1] == 0);
    CHECK(out.solution[0] == 4);
}

TEST_CASE("kernel_basis has the identity pattern on free columns") {
    // x + y + z = 0
    auto kern = kernel_basis({row({{0, 1}, {1, 1}, {2, 1}})}, 3);
    REQUIRE(kern.size() == 2);
    CHECK(kern[0][1] == 1);
    CHECK(kern[0][2] == 0);
    CHECK(kern[1][1] == 0);
    CHECK(kern[1][2] == 1);
    for (const auto& v : kern) CHECK(v[0] + v[1] + v[2] == 0);
}

TEST_CASE("random systems: solutions and kernels re-verify exactly") {
    auto rng = dl_test::make_rng(30);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t n = dim(rng), m = dim(rng);
        std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
        std::vector<SparseRowQ> rows(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                A[i][j] = dl_test::random_rational(rng, 3);
                if (A[i][j] != 0) rows[i].emplace_back(j, A[i][j]);
            }
        // rhs from a known solution, so the system is consistent
        std::vector<Rational> x0(n);
        for (auto& v : x0) v = dl_test::random_rational(rng, 3);
        std::vector<Rational> rhs(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i] += A[i][j] * x0[j];

        auto out = solve_system(rows, rhs, n);
        REQUIRE(out.feasible);
        for (std::size_t i = 0; i < m; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += A[i][j] * out.solution[j];
            CHECK(acc == rhs[i]);
        }
        auto kern = kernel_basis(rows, n);
        CHECK(kern.size() == n - out.rank);
        for (const auto& v : kern)
            for (std::size_t i = 0; i < m; ++i) {
                Rational acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += A[i][j] * v[j];
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("row_space_basis: rank and determinism") {
    std::vector<std::vector<Rational>> vecs = {
        {Rational(0), Rational(-2)},
        {Rational(0), Rational(1)},
        {Rational(0), Rational(0)},
    };
    auto basis = row_space_basis(vecs, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == 0);
    CHECK(basis[0][1] == 1); // leading entry normalized positive
}
