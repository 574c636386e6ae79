#include "doctest.h"
#include "mhs/index.hpp"

using namespace mhs;

TEST_CASE("weight counts ones") {
    CHECK(weight(Index::parse("0110")) == 2);
    CHECK(weight(Index::zeros(5)) == 0);
    CHECK(weight(Index::ones(6)) == 6);
}

TEST_CASE("partial order") {
    CHECK(precedes(Index::parse("0010"), Index::parse("0110")));
    CHECK_FALSE(precedes(Index::parse("1000"), Index::parse("0110")));
    CHECK(precedes(Index::parse("101"), Index::parse("101")));
    CHECK_THROWS_AS(precedes(Index::parse("10"), Index::parse("101")), UsageError);
}

TEST_CASE("complete order") {
    CHECK(less_than(Index::parse("100"), Index::parse("011")));
    CHECK(less_than(Index::parse("01"), Index::parse("10")));
    CHECK_FALSE(less_than(Index::parse("01"), Index::parse("01")));
}

TEST_CASE("matrix layout") {
    std::vector<std::string> n2, n3;
    for (auto& i : all_indices(2)) n2.push_back(i.str());
    for (auto& i : all_indices(3)) n3.push_back(i.str());
    CHECK(n2 == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(n3 == std::vector<std::string>{"000", "001", "010", "100", "011", "101", "110", "111"});
}

TEST_CASE("pos") {
    CHECK(pos(Index::parse("10"), Index::parse("11")) == 2);
    CHECK(pos(Index::parse("00"), Index::parse("10")) == 1);
    CHECK(pos(Index::parse("010"), Index::parse("011")) == 3);
    CHECK_THROWS_AS(pos(Index::parse("01"), Index::parse("10")), UsageError);
    CHECK_THROWS_AS(pos(Index::parse("00"), Index::parse("11")), UsageError);
}

TEST_CASE("subpoint") {
    Point x{{0.2, 0.1}, {0.3, -0.4}, {0.7, 0.2}};
    auto y = subpoint(Index::parse("101"), x);
    REQUIRE(y.size() == 2);
    CHECK(std::abs(y[0] - x[0] * x[1]) < 1e-15);
    CHECK(std::abs(y[1] - x[2]) < 1e-15);
    auto all = subpoint(Index::ones(3), x);
    for (int k = 0; k < 3; ++k) CHECK(all[k] == x[k]);
    CHECK(subpoint(Index::zeros(3), x).empty());
    CHECK(subpoint(Index::parse("01"), Point{0.3, 0.4})[0] == cplx(0.4));
}

TEST_CASE("retraction") {
    CHECK(retraction(Index::parse("101"), Index::parse("100")).str() == "10");
    CHECK(retraction(Index::parse("1011"), Index::parse("1011")).str() == "111");
    CHECK(retraction(Index::parse("1011"), Index::zeros(4)).str() == "000");
    CHECK_THROWS_AS(retraction(Index::parse("101"), Index::parse("010")), UsageError);
}

TEST_CASE("a coordinates") {
    Point x{{0.3, 0.1}, {0.4, -0.2}};
    auto a = a_coords(x);
    CHECK(a[0] == cplx(0.0));
    CHECK(a[3] == cplx(1.0));
    CHECK(std::abs(a[1] - 1.0 / (x[0] * x[1])) < 1e-14);
    CHECK_THROWS_AS(a_coords(Point{0.5, 0.0}), DomainError);
}

TEST_CASE("order invariants by exhaustion") {
    for (int n = 1; n <= 5; ++n) {
        auto all = all_indices(n);
        for (auto& i : all)
            for (auto& j : all) {
                if (i != j && precedes(j, i)) CHECK(less_than(j, i));
                CHECK((less_than(i, j) + less_than(j, i) + (i == j)) == 1);
                for (auto& k : all)
                    if (less_than(i, j) && less_than(j, k)) CHECK(less_than(i, k));
            }
    }
}

TEST_CASE("subpoint a-coordinates agree with the retraction") {
    Point x{{0.6, 0.2}, {-0.3, 0.5}, {0.8, -0.1}, {0.4, 0.4}};
    auto ax = a_coords(x);
    for (auto& i : all_indices(4)) {
        if (i.weight() == 0) continue;
        auto ay = a_coords(subpoint(i, x));
        auto tau = i.slots();
        for (std::size_t m = 0; m < tau.size(); ++m) CHECK(std::abs(ay[m + 1] - ax[tau[m]]) < 1e-12);
    }
}

TEST_CASE("maximal chains count n!") {
    int fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        CHECK(static_cast<int>(maximal_chains(n).size()) == fact);
    }
    CHECK(position_functions({2, 1, 3}) == std::vector<int>{1, 1, 3});
    CHECK(position_functions({3, 1, 2}) == std::vector<int>{1, 1, 2});
}
