#include <catch_amalgamated.hpp>

#include <random>

#include "bondage/domination.hpp"
#include "test_support.hpp"

using namespace bondage;

TEST_CASE("is_dominating examples") {
    CHECK(is_dominating(cycle_graph(4), {0, 2}));
    CHECK(is_dominating(complete_graph(5), {0}));
    CHECK_FALSE(is_dominating(path_graph(4), {0}));
    CHECK_FALSE(is_dominating(path_graph(2), {}));
    CHECK(is_dominating(Graph(0), {}));
    CHECK_THROWS(is_dominating(path_graph(2), {5}));
}

TEST_CASE("domination_number examples") {
    for (int n = 1; n <= 6; ++n) CHECK(domination_number(complete_graph(n)).size() == 1);
    CHECK(domination_number(cycle_graph(6)).size() == 2);
    CHECK(test_support::brute_force_gamma(cycle_graph(6)) == 2);
    CHECK(domination_number(petersen_graph()).size() == 3);
    CHECK(test_support::brute_force_gamma(petersen_graph()) == 3);
    CHECK(domination_number(Graph(5)).size() == 5);  // isolated vertices
    CHECK(domination_number(Graph(0)).size() == 0);
}

TEST_CASE("witness is a minimum dominating set") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = test_support::random_graph(8, 0.3, rng);
        auto d = domination_number(g);
        CHECK(is_dominating(g, d.members));
        CHECK(d.size() == test_support::brute_force_gamma(g));
        CHECK(std::is_sorted(d.members.begin(), d.members.end()));
    }
}

TEST_CASE("branch and bound equals subset brute force on all graphs n<=7") {
    for (const char* name : {"all_n5.g6", "all_n6.g6", "all_n7.g6"})
        for (const auto& g : test_support::load_catalog(name))
            CHECK(domination_number(g).size() == test_support::brute_force_gamma(g));
}

TEST_CASE("gamma is additive over disjoint unions") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = test_support::random_graph(5, 0.4, rng);
        auto b = test_support::random_graph(6, 0.4, rng);
        EdgeList joined = a.edges();
        for (auto [u, v] : b.edges()) joined.emplace_back(u + a.n(), v + a.n());
        Graph g(a.n() + b.n(), joined);
        CHECK(domination_number(g).size() ==
              domination_number(a).size() + domination_number(b).size());
    }
}

TEST_CASE("gamma moves by at most one under single-edge removal") {
    for (const auto& g : test_support::load_catalog("all_n7.g6")) {
        int gamma = domination_number(g).size();
        for (auto e : g.edges()) {
            int after = domination_number(remove_edges(g, {e})).size();
            CHECK(after >= gamma);
            CHECK(after <= gamma + 1);
        }
    }
}

TEST_CASE("gamma between ceil(n/(Delta+1)) and n") {
    for (const auto& g : test_support::load_catalog("all_n6.g6")) {
        int gamma = domination_number(g).size();
        int delta = max_degree(g);
        CHECK(gamma >= (g.n() + delta) / (delta + 1));
        CHECK(gamma <= g.n());
    }
}

TEST_CASE("witnesses are deterministic across calls") {
    std::mt19937 rng(41);
    auto g = test_support::random_connected_graph(9, 0.3, rng);
    auto a = domination_number(g);
    auto b = domination_number(g);
    CHECK(a.members == b.members);
}
