// Sparse forms and the extremal T/L constructions.

#include "littlewood/littlewood.hpp"
#include "littlewood/serialize.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace littlewood;

TEST_CASE("bilinear base form has the four expected coefficients")
{
    const MultilinearForm t2 = construct_T(2);
    REQUIRE(t2.arity() == 2);
    REQUIRE(t2.dims() == std::vector<int>{2, 2});
    REQUIRE(t2.nonzero_count() == 4);
    CHECK(t2.coefficient({1, 1}) == 1);
    CHECK(t2.coefficient({1, 2}) == 1);
    CHECK(t2.coefficient({2, 1}) == 1);
    CHECK(t2.coefficient({2, 2}) == -1);

    const MultilinearForm l2 = construct_L(2);
    CHECK(l2.entries() == t2.entries());
}

TEST_CASE("support sizes and reduced domains follow the recursion")
{
    std::size_t expected_nnz = 4;
    for (int m = 2; m <= 6; ++m) {
        const MultilinearForm t = construct_T(m);
        const MultilinearForm l = construct_L(m);
        CHECK(t.nonzero_count() == expected_nnz);
        CHECK(l.nonzero_count() == expected_nnz);
        expected_nnz *= 4;
    }
    CHECK(construct_T(3).dims() == std::vector<int>{4, 4, 2});
    CHECK(construct_T(4).dims() == std::vector<int>{8, 8, 4, 2});
    CHECK(construct_L(3).dims() == std::vector<int>{2, 4, 4});
    CHECK(construct_L(4).dims() == std::vector<int>{2, 8, 8, 4});
    CHECK(construct_T(4, true).dims() == std::vector<int>{8, 8, 8, 8});
    CHECK(construct_L(3, true).dims() == std::vector<int>{4, 4, 4});
    // Widening the domain never changes the coefficients.
    CHECK(construct_T(3, true).entries() == construct_T(3).entries());
}

TEST_CASE("leading coefficient is +1 and all coefficients are unimodular")
{
    CHECK(construct_T(3).coefficient({1, 1, 1}) == 1);
    CHECK(construct_L(3).coefficient({1, 1, 1}) == 1);
    for (int m = 2; m <= 5; ++m) {
        for (const auto& [idx, c] : construct_T(m).entries())
            REQUIRE((c == 1 || c == -1));
        for (const auto& [idx, c] : construct_L(m).entries())
            REQUIRE((c == 1 || c == -1));
    }
}

TEST_CASE("coefficients agree with direct recursive evaluation at basis vectors")
{
    for (int m = 2; m <= 4; ++m) {
        for (char family : {'T', 'L'}) {
            const MultilinearForm form = family == 'T' ? construct_T(m) : construct_L(m);
            MultiIndex idx(static_cast<std::size_t>(m), 1);
            bool done = false;
            while (!done) {
                const double expect = oracle::basis_coefficient(family, form, idx);
                REQUIRE(static_cast<double>(form.coefficient(idx)) == expect);
                int k = m - 1;
                for (;; --k) {
                    if (k < 0) {
                        done = true;
                        break;
                    }
                    if (++idx[static_cast<std::size_t>(k)]
                        <= form.dims()[static_cast<std::size_t>(k)])
                        break;
                    idx[static_cast<std::size_t>(k)] = 1;
                }
            }
        }
    }
}

TEST_CASE("evaluation is multilinear")
{
    const MultilinearForm form = random_form({3, 2, 4}, 7, EntrySpec::range(-3, 3));
    const std::vector<double> x{0.5, -1.25, 2.0};
    const std::vector<double> y1{1.0, -0.75};
    const std::vector<double> y2{-2.0, 0.25};
    const std::vector<double> z{0.1, 3.0, -1.0, 0.5};

    std::vector<double> y_sum(2);
    for (std::size_t j = 0; j < 2; ++j)
        y_sum[j] = y1[j] + 1.5 * y2[j];
    const double lhs = evaluate(form, {x, y_sum, z});
    const double rhs = evaluate(form, {x, y1, z}) + 1.5 * evaluate(form, {x, y2, z});
    CHECK_THAT(lhs, Catch::Matchers::WithinAbs(rhs, 1e-12));

    std::vector<double> x_scaled(x);
    for (double& v : x_scaled)
        v *= -3.0;
    CHECK_THAT(evaluate(form, {x_scaled, y1, z}),
               Catch::Matchers::WithinAbs(-3.0 * evaluate(form, {x, y1, z}), 1e-12));
}

TEST_CASE("evaluate contracts the coefficient tensor")
{
    const MultilinearForm form = random_form({2, 3, 2}, 11, EntrySpec::range(-5, 5));
    for (const auto& [idx, c] : form.entries()) {
        std::vector<std::vector<double>> basis;
        std::vector<std::vector<int>> ibasis;
        for (int k = 0; k < form.arity(); ++k) {
            std::vector<double> e(static_cast<std::size_t>(form.dims()[static_cast<std::size_t>(k)]), 0.0);
            std::vector<int> ie(e.size(), 0);
            e[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)] - 1)] = 1.0;
            ie[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)] - 1)] = 1;
            basis.push_back(std::move(e));
            ibasis.push_back(std::move(ie));
        }
        CHECK(evaluate(form, basis) == static_cast<double>(c));
        CHECK(evaluate_exact(form, ibasis) == c);
    }
}

TEST_CASE("random forms are reproducible and respect the entry spec")
{
    const MultilinearForm a = random_form({2, 2}, 0);
    const MultilinearForm b = random_form({2, 2}, 0);
    CHECK(a.entries() == b.entries());
    CHECK(a.nonzero_count() == 4); // dense sign fill
    for (const auto& [idx, c] : a.entries())
        CHECK((c == 1 || c == -1));

    const MultilinearForm c = random_form({2, 2}, 1);
    CHECK(a.entries() != c.entries());

    const MultilinearForm ranged = random_form({5, 5}, 3, EntrySpec::range(-2, 2));
    for (const auto& [idx, v] : ranged.entries()) {
        CHECK(v >= -2);
        CHECK(v <= 2);
        CHECK(v != 0); // zeros are dropped, not stored
    }
    CHECK(random_form({4, 4}, 9, EntrySpec::range(0, 0)).nonzero_count() == 0);
}

TEST_CASE("JSON round trip preserves forms byte for byte")
{
    const MultilinearForm t2 = construct_T(2);
    CHECK(to_json(t2).dump()
          == R"({"arity":2,"dims":[2,2],"entries":[[1,1,1],[1,2,1],[2,1,1],[2,2,-1]]})");

    for (const MultilinearForm& form :
         {construct_T(3), construct_L(4), random_form({3, 4, 2}, 42, EntrySpec::range(-9, 9))}) {
        const nlohmann::json j = to_json(form);
        const MultilinearForm back = form_from_json(j);
        CHECK(back.dims() == form.dims());
        CHECK(back.entries() == form.entries());
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("construction and access errors")
{
    CHECK_THROWS_AS(construct_T(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_T(9), std::invalid_argument);
    CHECK_THROWS_AS(construct_L(9), std::invalid_argument);
    CHECK_THROWS_AS(MultilinearForm(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(MultilinearForm({2, 0}), std::invalid_argument);

    MultilinearForm f({2, 2});
    f.insert_fresh({1, 1}, 1);
    CHECK_THROWS_AS(f.insert_fresh({1, 1}, 1), std::logic_error);
    CHECK_THROWS_AS(f.coefficient({3, 1}), std::out_of_range);
    CHECK_THROWS_AS(f.add({0, 1}, 1), std::out_of_range);
    CHECK_THROWS_AS(evaluate(f, {{1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(f, {{1.0}, {1.0, 1.0}}), std::invalid_argument);

    f.add({1, 1}, -1); // cancels the stored entry
    CHECK(f.nonzero_count() == 0);
    CHECK(f.coefficient({1, 1}) == 0);

    CHECK_THROWS_AS(random_form({2, 2}, 0, EntrySpec::range(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(random_form({2000, 2000}, 0), std::invalid_argument);
}
