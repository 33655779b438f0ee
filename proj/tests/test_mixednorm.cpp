// Nested mixed norms: exact dyadic path, float path, closed forms and the
// dense nested-loop oracle.

#include "littlewood/littlewood.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace littlewood;

namespace {

ExponentVector qv(std::initializer_list<Rational> vals)
{
    return ExponentVector(std::vector<Rational>(vals));
}

} // namespace

TEST_CASE("admissibility thresholds are exact")
{
    CHECK(qv({1, 2, 2}).admissible(AdmissibilityMode::equality));
    CHECK(qv({1, 2, 2}).admissible(AdmissibilityMode::inequality));
    CHECK_FALSE(qv({2, 2, 2}).admissible(AdmissibilityMode::equality));
    CHECK(qv({2, 2, 2}).admissible(AdmissibilityMode::inequality));
    CHECK_FALSE(qv({1, 1, 2}).admissible(AdmissibilityMode::inequality));
    CHECK(qv({Rational(3, 2), Rational(3, 2), Rational(3, 2)})
              .admissible(AdmissibilityMode::equality));

    CHECK_THROWS_AS(qv({Rational(1, 2), 2}), std::invalid_argument);
    CHECK_THROWS_AS(qv({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ExponentVector({}), std::invalid_argument);
    CHECK_THROWS_AS(ExponentVector::parse({"1", "x"}), std::invalid_argument);
    CHECK(ExponentVector::parse({"1", "2", "2"}) == qv({1, 2, 2}));
}

TEST_CASE("exponent products and complementary products")
{
    const ExponentVector q = qv({1, 2, 2});
    CHECK(exponent_product(q) == Rational(4));
    CHECK(qhat(q, 1) == Rational(4));
    CHECK(qhat(q, 2) == Rational(2));
    CHECK(qhat(q, 3) == Rational(2));
    CHECK_THROWS_AS(qhat(q, 0), std::out_of_range);
    CHECK_THROWS_AS(qhat(q, 4), std::out_of_range);
}

TEST_CASE("exact mixed norms of the extremal forms at spot exponents")
{
    const DyadicScalar t2 = mixed_norm_exact(construct_T(2), qv({1, 2}));
    CHECK(t2.log2() == Rational(3, 2));
    CHECK_THAT(t2.value(), Catch::Matchers::WithinRel(std::pow(2.0, 1.5), 1e-15));

    CHECK(mixed_norm_exact(construct_T(3),
                           qv({Rational(3, 2), Rational(3, 2), Rational(3, 2)}))
              .log2()
          == Rational(8, 3));
    CHECK(mixed_norm_exact(construct_T(3), qv({1, 2, 2})).log2() == Rational(3));
    CHECK(mixed_norm_exact(construct_L(3), qv({2, 1, 2})).log2() == Rational(3));
}

TEST_CASE("closed-form predictions match the spot exponents")
{
    CHECK(predicted_mixed_norm_T(2, qv({1, 2})).log2() == Rational(3, 2));
    CHECK(predicted_mixed_norm_T(3, qv({1, 2, 2})).log2() == Rational(3));
    CHECK(predicted_mixed_norm_L(3, qv({2, 1, 2})).log2() == Rational(3));
    CHECK(predicted_mixed_norm_L(2, qv({1, 2})).log2() == Rational(3, 2));
    // (3*qhat_2 + qhat_1 + qhat_3 + qhat_4)/prod = (3*8 + 4 + 4 + 4)/8
    CHECK(predicted_mixed_norm_L(4, qv({2, 1, 2, 2})).log2() == Rational(9, 2));
    CHECK_THROWS_AS(predicted_mixed_norm_T(3, qv({1, 2})), std::invalid_argument);
}

TEST_CASE("exact norms equal the closed forms across equality-mode grids")
{
    for (int m = 2; m <= 6; ++m) {
        const MultilinearForm t = construct_T(m);
        const MultilinearForm l = construct_L(m);
        const auto grid = admissible_equality_grid(m);
        REQUIRE(grid.size() >= 20);
        for (const auto& q : grid) {
            CHECK(mixed_norm_exact(t, q) == predicted_mixed_norm_T(m, q));
            CHECK(mixed_norm_exact(l, q) == predicted_mixed_norm_L(m, q));
        }
    }
}

TEST_CASE("float path agrees with the exact path")
{
    for (int m = 2; m <= 4; ++m) {
        const MultilinearForm t = construct_T(m);
        const MultilinearForm l = construct_L(m);
        for (const auto& q : admissible_equality_grid(m)) {
            const double te = mixed_norm_exact(t, q).value();
            CHECK_THAT(mixed_norm(t, q), Catch::Matchers::WithinRel(te, 1e-10));
            const double le = mixed_norm_exact(l, q).value();
            CHECK_THAT(mixed_norm(l, q), Catch::Matchers::WithinRel(le, 1e-10));
        }
    }
}

TEST_CASE("float path agrees with the dense nested-loop oracle")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 50) {
        const int m = 2 + static_cast<int>(rng() % 3);
        std::vector<int> dims;
        for (int k = 0; k < m; ++k)
            dims.push_back(1 + static_cast<int>(rng() % 4));
        const MultilinearForm form =
            random_form(dims, rng(), EntrySpec::range(-5, 5));
        if (form.nonzero_count() == 0)
            continue;
        std::vector<Rational> q;
        for (int k = 0; k < m; ++k)
            q.emplace_back(8 + static_cast<int>(rng() % 9), 8); // in [1, 2]
        const ExponentVector qe(std::move(q));
        const double lib = mixed_norm(form, qe);
        const double ora = oracle::dense_mixed_norm(form, qe);
        REQUIRE_THAT(lib, Catch::Matchers::WithinRel(ora, 1e-12));
        ++checked;
    }
}

TEST_CASE("norm decreases as any exponent increases on a fixed form")
{
    const MultilinearForm form = random_form({4, 3, 2}, 5, EntrySpec::range(0, 6));
    const double n11 = mixed_norm(form, qv({1, 1, 1}));
    const double n12 = mixed_norm(form, qv({1, 2, 1}));
    const double n22 = mixed_norm(form, qv({2, 2, 1}));
    const double n222 = mixed_norm(form, qv({2, 2, 2}));
    CHECK(n11 >= n12);
    CHECK(n12 >= n22);
    CHECK(n22 >= n222);
}

TEST_CASE("non-dyadic inputs are reported, not silently approximated")
{
    // Three equal terms along the inner axis: the count is not a power of two.
    MultilinearForm tri({1, 3});
    tri.add({1, 1}, 1);
    tri.add({1, 2}, 1);
    tri.add({1, 3}, 1);
    CHECK_THROWS_AS(mixed_norm_exact(tri, qv({1, 2})), NotDyadicError);

    // Rows of different lengths mix distinct exponents at the outer axis.
    MultilinearForm ragged({2, 2});
    ragged.add({1, 1}, 1);
    ragged.add({1, 2}, 1);
    ragged.add({2, 1}, 1);
    CHECK_THROWS_AS(mixed_norm_exact(ragged, qv({1, 2})), NotDyadicError);
    // The float path still evaluates it.
    CHECK_THAT(mixed_norm(ragged, qv({1, 2})),
               Catch::Matchers::WithinRel(std::sqrt(2.0) + 1.0, 1e-14));

    MultilinearForm big({2, 2});
    big.add({1, 1}, 2);
    CHECK_THROWS_AS(mixed_norm_exact(big, qv({1, 2})), std::invalid_argument);

    CHECK(mixed_norm(MultilinearForm({2, 2}), qv({1, 2})) == 0.0);
    CHECK_THROWS_AS(mixed_norm_exact(MultilinearForm({2, 2}), qv({1, 2})), NotDyadicError);
    CHECK_THROWS_AS(mixed_norm(construct_T(3), qv({1, 2})), std::invalid_argument);
}

TEST_CASE("equality-mode exponent grids are deterministic and well formed")
{
    for (int m = 2; m <= 6; ++m) {
        const auto grid = admissible_equality_grid(m);
        CHECK(grid.size() >= 20);
        CHECK(grid.size() <= 40);
        for (const auto& q : grid) {
            CHECK(q.size() == m);
            CHECK(q.admissible(AdmissibilityMode::equality));
        }
        const auto again = admissible_equality_grid(m);
        REQUIRE(again.size() == grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(again[i] == grid[i]);
    }
    CHECK_THROWS_AS(admissible_equality_grid(0), std::invalid_argument);
}
