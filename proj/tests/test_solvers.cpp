#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "rfs/errors.hpp"
#include "rfs/generators.hpp"
#include "rfs/graph.hpp"
#include "rfs/solvers.hpp"

using namespace rfs;

namespace {

WeightedGraph triangle() {
    return {3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}}, true};
}

WeightedGraph random_connected(int n, long m, std::uint64_t tag) {
    const WeightedGraph skeleton = gen_gnm(n, m, Seed{tag}.child(1), true);
    return assign_weights(skeleton, DistributionSpec::uniform(0.0, 1.0), Seed{tag}.child(2));
}

}  // namespace

TEST_CASE("mst: spot shapes") {
    const Forest t = mst(triangle());
    CHECK(t.cost == 3.0);
    REQUIRE(t.edges.size() == 2);
    CHECK(t.edges[0].w == 1.0);
    CHECK(t.edges[1].w == 2.0);

    const WeightedGraph path(3, {{0, 1, 5.0}, {1, 2, 7.0}}, true);
    const Forest forced = mst(path);
    CHECK(forced.cost == 12.0);
    CHECK(forced.edges.size() == 2);

    const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}}, true);
    CHECK_THROWS_AS(mst(split), GraphDisconnected);
}

TEST_CASE("mst matches the exhaustive oracle on random instances") {
    int checked = 0;
    for (std::uint64_t tag = 0; checked < 120; ++tag) {
        const int n = 4 + static_cast<int>(tag % 4);  // 4..7
        const long max_edges = static_cast<long>(n) * (n - 1) / 2;
        const long m = (n - 1) + static_cast<long>(tag % (max_edges - n + 2));
        const WeightedGraph g = random_connected(n, m, 1000 + tag);
        REQUIRE(mst(g).cost == brute_force_mst(g).cost);
        ++checked;
    }
}

TEST_CASE("mst cost is invariant under edge-list permutations") {
    const WeightedGraph g = random_connected(7, 15, 55);
    std::vector<Edge> shuffled = g.edges();
    std::reverse(shuffled.begin(), shuffled.end());
    std::swap(shuffled[0], shuffled[7]);
    const WeightedGraph permuted(7, std::move(shuffled), true);
    CHECK(mst(g).cost == mst(permuted).cost);
}

TEST_CASE("random_feasible_tree: forced and deterministic") {
    const WeightedGraph path(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 4.0}}, true);
    const Forest only = random_feasible_tree(path, Seed{1});
    CHECK(only.cost == 7.0);
    CHECK(only.edges.size() == 3);

    const WeightedGraph g = random_connected(8, 20, 77);
    const Forest a = random_feasible_tree(g, Seed{42});
    const Forest b = random_feasible_tree(g, Seed{42});
    CHECK(a.edges == b.edges);
    CHECK(a.cost == b.cost);
}

TEST_CASE("random_feasible_tree: spanning, never cheaper than the MST") {
    for (std::uint64_t tag = 0; tag < 40; ++tag) {
        const WeightedGraph g = random_connected(6 + static_cast<int>(tag % 3), 12, 300 + tag);
        const Forest t = random_feasible_tree(g, Seed{tag});
        CHECK(check_feasible(g, t, FeasibilityPredicate::spanning_tree()));
        CHECK(t.cost >= mst(g).cost);
    }
}

TEST_CASE("random_feasible_tree: triangle outcome distribution and 4/3 mean ratio") {
    const WeightedGraph g = triangle();
    // Enumerating the six edge permutations by hand: the first two edges of
    // any permutation never close the cycle, so each 2-subset appears with
    // probability 1/3; costs {3, 4, 5}, ratios {1, 4/3, 5/3}, mean 4/3.
    std::map<double, int> counts;
    const int draws = 60000;
    double ratio_sum = 0.0;
    const double mst_cost = mst(g).cost;
    for (int i = 0; i < draws; ++i) {
        const Forest t = random_feasible_tree(g, Seed{4000}.child(static_cast<std::uint64_t>(i)));
        ++counts[t.cost];
        ratio_sum += t.cost / mst_cost;
    }
    REQUIRE(counts.size() == 3);
    CHECK(counts.at(3.0) > 0);
    CHECK(counts.at(4.0) > 0);
    CHECK(counts.at(5.0) > 0);
    for (const auto& [cost, count] : counts)
        CHECK(std::abs(count - draws / 3.0) < 5.0 * std::sqrt(draws * (1.0 / 3.0) * (2.0 / 3.0)));
    // std dev of the ratio is sqrt(2/27)/... per draw: var = E[r^2]-16/9.
    const double mean = ratio_sum / draws;
    const double variance = (1.0 + 16.0 / 9.0 + 25.0 / 9.0) / 3.0 - 16.0 / 9.0;
    CHECK(std::abs(mean - 4.0 / 3.0) <= 3.0 * std::sqrt(variance / draws));
}

TEST_CASE("steiner_2approx: forced shapes") {
    const WeightedGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}}, true);
    const Forest f = steiner_2approx({path, {0, 2}});
    CHECK(f.cost == 2.0);
    CHECK(f.edges.size() == 2);

    // Star with three terminal leaves: the star itself is optimal.
    const WeightedGraph star(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}, true);
    const Forest s = steiner_2approx({star, {1, 2, 3}});
    CHECK(s.cost == 3.0);
    CHECK(s.edges.size() == 3);
}

TEST_CASE("steiner_2approx: prunes useless branches") {
    // Path 0-1-2 plus a dangling vertex 3; terminals at the path ends.
    const WeightedGraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}}, true);
    const Forest f = steiner_2approx({g, {0, 2}});
    CHECK(f.cost == 2.0);
    CHECK(f.edges.size() == 2);
}

TEST_CASE("steiner_2approx: all vertices terminal leaves nothing to prune") {
    const WeightedGraph g = random_connected(5, 8, 64);
    const Forest f = steiner_2approx({g, {0, 1, 2, 3, 4}});
    CHECK(check_feasible(g, f, FeasibilityPredicate::spanning_tree()));
    CHECK(f.cost >= mst(g).cost);
}

TEST_CASE("steiner_2approx: input validation") {
    const WeightedGraph neg(3, {{0, 1, -1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, true);
    CHECK_THROWS_AS(steiner_2approx({neg, {0, 2}}), NegativeWeight);
    const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}}, true);
    CHECK_THROWS_AS(steiner_2approx({split, {0, 3}}), GraphDisconnected);
}

TEST_CASE("steiner_2approx: within factor 2 of the exhaustive optimum") {
    int checked = 0;
    for (std::uint64_t tag = 0; checked < 80; ++tag) {
        const int n = 4 + static_cast<int>(tag % 5);  // 4..8
        const long max_edges = static_cast<long>(n) * (n - 1) / 2;
        const long m = (n - 1) + static_cast<long>(tag % (max_edges - n + 2));
        const WeightedGraph g = random_connected(n, m, 9000 + tag);
        const int t_count = 2 + static_cast<int>(tag % 3);  // 2..4
        const SteinerInstance inst = pick_terminals(g, t_count, Seed{11}.child(tag));
        const Forest approx = steiner_2approx(inst);
        const Forest exact = brute_force_steiner(inst);
        REQUIRE(check_feasible(g, approx, FeasibilityPredicate::steiner(inst.terminals)));
        REQUIRE(approx.cost >= exact.cost - 1e-12);
        REQUIRE(approx.cost <= 2.0 * exact.cost);
        ++checked;
    }
}

TEST_CASE("check_feasible: predicate behavior") {
    const WeightedGraph g = random_connected(6, 10, 123);
    const Forest tree = mst(g);
    CHECK(check_feasible(g, tree, FeasibilityPredicate::spanning_tree()));
    CHECK(check_feasible(g, tree, FeasibilityPredicate::steiner({0, 3, 5})));

    const Forest empty;
    CHECK_FALSE(check_feasible(g, empty, FeasibilityPredicate::spanning_tree()));
    CHECK_FALSE(check_feasible(g, empty, FeasibilityPredicate::steiner({0, 1})));

    // Dropping one tree edge disconnects something.
    Forest pruned = tree;
    pruned.edges.pop_back();
    CHECK_FALSE(check_feasible(g, pruned, FeasibilityPredicate::spanning_tree()));

    // An edge not in the host graph fails membership.
    Forest fake = tree;
    fake.edges[0].w += 1.0;
    CHECK_FALSE(check_feasible(g, fake, FeasibilityPredicate::spanning_tree()));
}

TEST_CASE("make_forest recomputes the cost in canonical order") {
    const WeightedGraph g = triangle();
    const Forest f = make_forest(g, {{2, 1}, {1, 0}});
    CHECK(f.cost == 3.0);
    REQUIRE(f.edges.size() == 2);
    CHECK(f.edges[0].u == 0);  // canonical order restored
    CHECK_THROWS_AS(make_forest(g, {{0, 1}, {0, 1}}), ParameterOutOfRange);
    CHECK_THROWS_AS(make_forest(WeightedGraph(4, {{0, 1, 1.0}}, true), {{2, 3}}),
                    ParameterOutOfRange);
}

TEST_CASE("brute-force oracles: guards and spot values") {
    CHECK(brute_force_mst(triangle()).cost == 3.0);

    const WeightedGraph path(3, {{0, 1, 2.5}, {1, 2, 4.0}}, true);
    CHECK(brute_force_steiner({path, {0, 2}}).cost == 6.5);

    // K4 with unit weights, all vertices terminals: any spanning tree costs 3.
    const WeightedGraph k4 = assign_weights(gen_gnm(4, 6, Seed{1}, false),
                                            DistributionSpec::uniform(1.0, 1.0 + 1e-12), Seed{2});
    CHECK(brute_force_steiner({k4, {0, 1, 2, 3}}).cost == doctest::Approx(3.0));

    const WeightedGraph big = gen_gnm(9, 12, Seed{3}, true);
    CHECK_THROWS_AS(brute_force_mst(big), InstanceTooLarge);
    CHECK_THROWS_AS(brute_force_steiner({big, {0, 1}}), InstanceTooLarge);

    const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}}, true);
    CHECK_THROWS_AS(brute_force_mst(split), GraphDisconnected);
    CHECK_THROWS_AS(brute_force_steiner({split, {0, 2}}), GraphDisconnected);
}

TEST_CASE("forest serialization carries the cost header") {
    const WeightedGraph g = triangle();
    const Forest f = mst(g);
    const std::string text = write_forest(g, f);
    CHECK(text.substr(0, 5) == "cost ");
    CHECK(text.find("3 2\n") != std::string::npos);
}
