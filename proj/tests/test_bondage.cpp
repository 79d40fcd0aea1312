#include <catch_amalgamated.hpp>

#include <random>

#include "bondage/bondage.hpp"
#include "test_support.hpp"

using namespace bondage;

TEST_CASE("hr_bound examples") {
    CHECK(hr_bound(complete_graph(4)) == 3);
    CHECK(hr_bound(cycle_graph(5)) == 3);
    CHECK(hr_bound(star_graph(4)) == 4);
    CHECK_THROWS(hr_bound(Graph(3)));
}

TEST_CASE("bondage examples") {
    auto k2 = bondage_number(path_graph(2));
    REQUIRE(k2);
    CHECK(k2->b == 1);
    CHECK(k2->gamma_before == 1);
    CHECK(k2->gamma_after == 2);

    auto c4 = bondage_number(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->b == 3);
    CHECK(test_support::brute_force_bondage(cycle_graph(4), 3) == 3);

    // K_3 + K_2: component rule gives min(b(K_3), b(K_2)) = 1
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto r = bondage_number(g);
    REQUIRE(r);
    CHECK(r->b == 1);
    CHECK(r->witness == EdgeList{{3, 4}});
    CHECK(r->gamma_after > r->gamma_before);

    CHECK_THROWS(bondage_number(Graph(4)));
}

TEST_CASE("trees have bondage number at most 2") {
    // a few specific trees, exact value by brute force
    for (const auto& g : test_support::load_catalog("connected_n6.g6")) {
        if (g.m() != g.n() - 1) continue;  // trees only
        auto r = bondage_number(g);
        REQUIRE(r);
        CHECK(r->b <= 2);
        CHECK(test_support::brute_force_bondage(g, 2) == r->b);
    }
}

TEST_CASE("oracle equivalence on all connected graphs n<=6") {
    for (const char* name : {"connected_n5.g6", "connected_n6.g6"}) {
        for (const auto& g : test_support::load_catalog(name)) {
            auto r = bondage_number(g);
            REQUIRE(r);
            CHECK(r->b == test_support::brute_force_bondage(g, g.m()));
        }
    }
}

TEST_CASE("bondage never exceeds the Hartnell-Rall bound") {
    for (const auto& g : test_support::load_catalog("connected_n6.g6")) {
        auto r = bondage_number(g);  // default budget is exactly hr_bound
        REQUIRE(r);
        CHECK(r->b <= hr_bound(g));
    }
}

TEST_CASE("witness validity") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = test_support::random_connected_graph(7, 0.35, rng);
        auto r = bondage_number(g);
        REQUIRE(r);
        CHECK(static_cast<int>(r->witness.size()) == r->b);
        CHECK(r->gamma_before == domination_number(g).size());
        CHECK(domination_number(remove_edges(g, r->witness)).size() == r->gamma_after);
        CHECK(r->gamma_after > r->gamma_before);
    }
}

TEST_CASE("component rule on random disjoint pairs") {
    std::mt19937 rng(53);
    int done = 0;
    while (done < 25) {
        auto a = test_support::random_graph(5, 0.4, rng);
        auto b = test_support::random_graph(5, 0.4, rng);
        if (a.m() == 0 || b.m() == 0) continue;
        ++done;
        EdgeList joined = a.edges();
        for (auto [u, v] : b.edges()) joined.emplace_back(u + a.n(), v + a.n());
        Graph g(a.n() + b.n(), joined);
        auto ra = bondage_number(a), rb = bondage_number(b), rg = bondage_number(g);
        REQUIRE(ra);
        REQUIRE(rb);
        REQUIRE(rg);
        CHECK(rg->b == std::min(ra->b, rb->b));
    }
}

TEST_CASE("budget exhaustion is reported distinctly") {
    // b(C_4) = 3, so a budget of 2 must come back empty rather than wrong
    CHECK_FALSE(bondage_number(cycle_graph(4), 2).has_value());
    CHECK(bondage_number(cycle_graph(4), 3).has_value());
    CHECK_THROWS(bondage_number(cycle_graph(4), 0));
}
