#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "ymodt/builders.hpp"
#include "ymodt/graph.hpp"

using namespace ymodt;
using namespace ymodt_test;

namespace {

std::set<std::pair<std::string, std::string>> edge_pairs(const Multigraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto& [u, v] : g.edges) {
        auto a = g.vertex_labels[u], b = g.vertex_labels[v];
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

}  // namespace

TEST_CASE("simplify merges parallels and drops loops") {
    Multigraph b3 = make_banana(3);
    Multigraph s = simplify(b3);
    CHECK(s.vertex_count() == 2);
    CHECK(s.edge_count() == 1);

    Multigraph tri = make_cycle(3);
    tri.add_edge(0, 0, "loop");
    Multigraph s2 = simplify(tri);
    CHECK(s2.edge_count() == 3);
    CHECK(s2.vertex_count() == 3);

    Multigraph k4 = make_complete(4);
    Multigraph s3 = simplify(k4);
    CHECK(s3.edge_count() == 6);
    CHECK(edge_pairs(s3) == edge_pairs(k4));
}

TEST_CASE("simplify rejects loops-only graphs and drops isolated vertices") {
    Multigraph g;
    g.add_vertex("a");
    g.add_edge(0, 0);
    CHECK_THROWS_AS(simplify(g), std::invalid_argument);

    Multigraph h = make_path(1);
    h.add_vertex("isolated");
    Multigraph s = simplify(h);
    CHECK(s.vertex_count() == 2);
}

TEST_CASE("simplify is idempotent") {
    Rng rng(42);
    for (int it = 0; it < 60; ++it) {
        Multigraph g = random_multigraph(rng, 2 + rng.uniform(4), 1 + rng.uniform(8), true);
        if (g.all_loops()) continue;
        Multigraph s1 = simplify(g);
        Multigraph s2 = simplify(s1);
        CHECK(s1.vertex_labels == s2.vertex_labels);
        CHECK(edge_pairs(s1) == edge_pairs(s2));
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(make_path(1)).size() == 1);

    Multigraph two_tri;
    for (int i = 0; i < 6; ++i) two_tri.add_vertex("v" + std::to_string(i));
    two_tri.add_edge(0, 1);
    two_tri.add_edge(1, 2);
    two_tri.add_edge(2, 0);
    two_tri.add_edge(3, 4);
    two_tri.add_edge(4, 5);
    two_tri.add_edge(5, 3);
    auto comps = connected_components(two_tri);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 3);

    Multigraph bare;
    bare.add_vertex("a");
    bare.add_vertex("b");
    auto singletons = connected_components(bare);
    REQUIRE(singletons.size() == 2);
    CHECK(singletons[0] == std::vector<int>{0});
}

TEST_CASE("nexi are exactly the cut vertices") {
    Multigraph shared;
    for (int i = 0; i < 5; ++i) shared.add_vertex("v" + std::to_string(i));
    shared.add_edge(0, 1);
    shared.add_edge(1, 2);
    shared.add_edge(2, 0);
    shared.add_edge(0, 3);
    shared.add_edge(3, 4);
    shared.add_edge(4, 0);
    CHECK(find_nexi(shared) == std::vector<int>{0});
    CHECK(find_nexi(make_cycle(4)).empty());
    CHECK(find_nexi(make_complete(4)).empty());
}

TEST_CASE("cones and apexes") {
    Multigraph w5 = make_wheel(5);
    CHECK(is_cone_with_apex(w5, 0));       // hub
    CHECK_FALSE(is_cone_with_apex(w5, 1)); // rim
    Multigraph c4 = make_cycle(4);
    for (int v = 0; v < 4; ++v) CHECK_FALSE(is_cone_with_apex(c4, v));
    Multigraph k4 = make_complete(4);
    for (int v = 0; v < 4; ++v) CHECK(is_cone_with_apex(k4, v));
    CHECK_THROWS_AS(is_cone_with_apex(c4, 9), std::invalid_argument);
}

TEST_CASE("fat nexus on the named examples") {
    // Wheel: hub is the apex, cone branch fires.
    auto w = find_fat_nexus(make_wheel(4));
    REQUIRE(w.has_value());
    CHECK(w->v0 == 0);
    CHECK(is_valid_fat_nexus_witness(make_wheel(4), *w));

    // Square with a diagonal: a diagonal endpoint works.
    Multigraph sq = make_square_with_diagonal();
    auto ws = find_fat_nexus(sq);
    REQUIRE(ws.has_value());
    CHECK((ws->v0 == 0 || ws->v0 == 2));
    CHECK(is_valid_fat_nexus_witness(sq, *ws));

    // C_4 has none; brute force first, then the component algorithm.
    CHECK_FALSE(brute_force_fat_nexus(make_cycle(4)).has_value());
    CHECK_FALSE(find_fat_nexus(make_cycle(4)).has_value());

    // The series-free counter-example graph has none either.
    Multigraph hard = make_fan_pair_pole_dual(4);
    CHECK_FALSE(brute_force_fat_nexus(hard).has_value());
    CHECK_FALSE(find_fat_nexus(hard).has_value());
}

TEST_CASE("fat nexus agrees with brute force on small graphs") {
    // Exhaustive over all simple graphs on 4, 5 and 6 labeled vertices.
    for (int n : {4, 5, 6}) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
        for (uint32_t mask = 1; mask < (1u << slots.size()); ++mask) {
            Multigraph g;
            for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
            for (size_t s = 0; s < slots.size(); ++s)
                if ((mask >> s) & 1u) g.add_edge(slots[s].first, slots[s].second);
            if (!is_connected_graph(g)) continue;
            auto fast = find_fat_nexus(g);
            auto brute = brute_force_fat_nexus(g);
            CHECK(fast.has_value() == brute.has_value());
            if (fast) CHECK(is_valid_fat_nexus_witness(g, *fast));
        }
    }
    // Random sample on 6 and 7 vertices.
    Rng rng(7);
    for (int it = 0; it < 250; ++it) {
        int n = 6 + (it % 2);
        Multigraph g = random_connected_simple(rng, n, rng.uniform(6));
        auto fast = find_fat_nexus(g);
        auto brute = brute_force_fat_nexus(g);
        CHECK(fast.has_value() == brute.has_value());
        if (fast) CHECK(is_valid_fat_nexus_witness(g, *fast));
    }
}

TEST_CASE("any nexus of a connected graph on >= 4 vertices is fat") {
    Rng rng(11);
    int seen = 0;
    for (int it = 0; it < 400 && seen < 60; ++it) {
        Multigraph g = random_connected_simple(rng, 4 + rng.uniform(3), rng.uniform(4));
        if (find_nexi(g).empty()) continue;
        ++seen;
        auto w = find_fat_nexus(g);
        REQUIRE(w.has_value());
        CHECK(is_valid_fat_nexus_witness(g, *w));
    }
    CHECK(seen > 0);
}

TEST_CASE("an apex of a cone on >= 4 vertices admits a witness") {
    Rng rng(13);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + rng.uniform(3);
        Multigraph g = random_connected_simple(rng, n, rng.uniform(5));
        // make vertex 0 an apex
        for (int v = 1; v < n; ++v)
            if (!g.adjacent(0, v)) g.add_edge(0, v);
        auto w = find_fat_nexus(g);
        REQUIRE(w.has_value());
        CHECK(is_valid_fat_nexus_witness(g, *w));
        // the apex itself always works: {first other vertex} vs the rest
        FatNexusWitness apexw;
        apexw.v0 = 0;
        apexw.part1 = {1};
        for (int v = 2; v < n; ++v) apexw.part2.push_back(v);
        if (is_cone_with_apex(g, 0) && apexw.part1.size() != apexw.part2.size())
            CHECK(is_valid_fat_nexus_witness(g, apexw));
    }
}

TEST_CASE("edge deletion and contraction") {
    Multigraph c4 = make_cycle(4);
    Multigraph c3 = contract_edge(c4, 0);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(find_nexi(c3).empty());

    Multigraph path = delete_edge(make_cycle(3), 0);
    CHECK(path.edge_count() == 2);
    CHECK(connected_components(path).size() == 1);

    Multigraph b2 = make_banana(2);
    Multigraph loop = contract_edge(b2, 0);
    CHECK(loop.vertex_count() == 1);
    REQUIRE(loop.edge_count() == 1);
    CHECK(loop.edges[0].first == loop.edges[0].second);

    CHECK_THROWS_AS(contract_edge(loop, 0), std::invalid_argument);
    CHECK_THROWS_AS(delete_edge(c4, "nope"), std::invalid_argument);
    CHECK_THROWS_AS(contract_edge(c4, "nope"), std::invalid_argument);
}

TEST_CASE("minors commute with simplification up to parallel classes") {
    Rng rng(17);
    for (int it = 0; it < 80; ++it) {
        Multigraph g = random_multigraph(rng, 2 + rng.uniform(4), 2 + rng.uniform(7), true);
        if (g.all_loops()) continue;
        Multigraph s = simplify(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            if (u == v) continue;
            // contraction: simplify(g/e) equals simplify(s/rep(e)) when the
            // result still has a non-loop edge
            Multigraph ge = contract_edge(g, e);
            if (ge.edge_count() == 0 || ge.all_loops()) continue;
            int rep = -1;
            for (int f = 0; f < s.edge_count(); ++f) {
                auto [a, b] = s.edges[f];
                auto la = s.vertex_labels[a], lb = s.vertex_labels[b];
                auto lu = g.vertex_labels[u], lv = g.vertex_labels[v];
                if ((la == lu && lb == lv) || (la == lv && lb == lu)) rep = f;
            }
            REQUIRE(rep >= 0);
            Multigraph se = contract_edge(s, rep);
            if (se.edge_count() == 0 || se.all_loops()) continue;
            CHECK(edge_pairs(simplify(ge)) == edge_pairs(simplify(se)));
        }
    }
}

TEST_CASE("edge list parse and round trip") {
    std::string text = "# a comment\n"
                       "a b e0\n"
                       "\n"
                       "b c e1  # trailing comment\n"
                       "c a\n";
    Multigraph g = parse_edge_list(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge_labels[0] == "e0");

    Multigraph again = parse_edge_list(to_edge_list(g));
    CHECK(again.vertex_labels == g.vertex_labels);
    CHECK(again.edge_labels == g.edge_labels);
    CHECK(again.edges == g.edges);

    CHECK_THROWS_WITH_AS(parse_edge_list("a\n"), doctest::Contains("line 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b\na b c d\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("a b x\nc d x\n"), std::invalid_argument);
}

TEST_CASE("builders produce the advertised shapes") {
    CHECK(make_wheel(4).edge_count() == 8);
    CHECK(make_divided_wheel(3).edge_count() == 12);
    CHECK(make_divided_wheel_over_spoke(3).edge_count() == 11);
    CHECK(make_divided_wheel_over_spoke_neg(3).edge_count() == 12);
    CHECK(make_octahedron().edge_count() == 12);
    CHECK(make_fan_pair_pole(3).edge_count() == 9);
    CHECK(make_fan_pair_pole_dual(3).edge_count() == 9);
    CHECK(make_fan_pair(4).edge_count() == 11);
    CHECK(make_fan_pair_dual(4).edge_count() == 11);
    CHECK(make_fan_pair_pole(4).edge_count() == 12);
    CHECK(make_fan_pair_pole_dual(4).edge_count() == 12);
    CHECK(make_prism_chord().edge_count() == 10);
    CHECK(build_graph("K 3 3").edge_count() == 9);
    CHECK_THROWS_AS(build_graph("nope 3"), std::invalid_argument);
    CHECK_THROWS_AS(build_graph("C"), std::invalid_argument);
}
