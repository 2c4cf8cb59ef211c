#include <doctest.h>

#include <pstkit/abelian.hpp>
#include <pstkit/cyclotomic.hpp>

using namespace pstkit;

TEST_CASE("make_group sizes and exponents") {
    CHECK(make_group({8}).size() == 8);
    CHECK(make_group({8}).exponent() == 8);
    CHECK(make_group({8, 2}).size() == 16);
    CHECK(make_group({8, 2}).exponent() == 8);
    CHECK(make_group({2, 3}).size() == 6);
    CHECK(make_group({2, 3}).exponent() == 6);
    CHECK_THROWS_AS(make_group({}), invalid_spec);
    CHECK_THROWS_AS(make_group({4, 0}), invalid_spec);
}

TEST_CASE("group arithmetic") {
    GroupSpec z8 = make_group({8});
    CHECK(z8.op({3}, {7}) == GroupElement{2});
    CHECK(z8.element_order({4}) == 2);
    CHECK(z8.element_order({0}) == 1);

    GroupSpec g = make_group({8, 2});
    CHECK(g.inverse({3, 1}) == GroupElement{5, 1});
    CHECK(g.identity() == GroupElement{0, 0});
    CHECK_THROWS_AS(g.op({1, 0}, {1}), invalid_element);
}

TEST_CASE("character exponents") {
    GroupSpec z4 = make_group({4});
    CHECK(z4.character_exponent({1}, {2}) == 2);
    CHECK(z4.character_exponent({0}, {3}) == 0);

    GroupSpec g = make_group({8, 2});
    CHECK(g.character_exponent({1, 1}, {2, 1}) == 6);
}

TEST_CASE("enumeration order") {
    CHECK(make_group({2}).enumerate_elements() ==
          std::vector<GroupElement>{{0}, {1}});
    CHECK(make_group({2, 2}).enumerate_elements() ==
          std::vector<GroupElement>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(make_group({3}).enumerate_elements() ==
          std::vector<GroupElement>{{0}, {1}, {2}});

    GroupSpec g = make_group({3, 4});
    auto elems = g.enumerate_elements();
    for (long i = 0; i < g.size(); ++i) {
        CHECK(g.element_index(elems[static_cast<std::size_t>(i)]) == i);
        CHECK(g.element_at(i) == elems[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("character orthogonality is exact") {
    for (const auto& orders : std::vector<std::vector<long>>{
             {2}, {3}, {4}, {5}, {2, 2}, {8, 2}, {12}, {16},
             {2, 2, 2, 2}, {3, 5}}) {
        GroupSpec g = make_group(orders);
        long N = g.exponent();
        for (const auto& h : g.enumerate_elements()) {
            CycInt sum(N);
            for (const auto& k : g.enumerate_elements())
                sum = sum + CycInt::root_power(N, g.character_exponent(k, h));
            CycInt expected = CycInt::integer(
                N, h == g.identity() ? BigInt(g.size()) : BigInt(0));
            CHECK((sum - expected).is_zero());
        }
    }
}

TEST_CASE("pairing symmetry and inverse rule") {
    for (const auto& orders :
         std::vector<std::vector<long>>{{16}, {8, 2}, {4, 4}, {2, 2, 2, 2},
                                        {12}, {3, 5}}) {
        GroupSpec g = make_group(orders);
        long N = g.exponent();
        for (const auto& k : g.enumerate_elements())
            for (const auto& h : g.enumerate_elements()) {
                CHECK(g.character_exponent(k, h) == g.character_exponent(h, k));
                long e = g.character_exponent(k, h);
                CHECK(g.character_exponent(k, g.inverse(h)) == (N - e) % N);
            }
    }
}

TEST_CASE("element orders divide the group order") {
    for (const auto& orders :
         std::vector<std::vector<long>>{{12}, {8, 2}, {3, 3}, {2, 2, 2}}) {
        GroupSpec g = make_group(orders);
        for (const auto& a : g.enumerate_elements())
            CHECK(g.size() % g.element_order(a) == 0);
    }
}
