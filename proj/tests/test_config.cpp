#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "ymodt/builders.hpp"
#include "ymodt/config.hpp"
#include "ymodt/jsonio.hpp"

using namespace ymodt;
using namespace ymodt_test;

TEST_CASE("incidence configurations") {
    Configuration k2 = incidence_configuration(make_path(1));
    REQUIRE(k2.rows() == 1);
    REQUIRE(k2.cols() == 1);
    CHECK((k2.mat[0][0] == 1 || k2.mat[0][0] == -1));

    Configuration c3 = incidence_configuration(make_cycle(3));
    CHECK(c3.rows() == 2);
    CHECK(rank_exact(c3.mat) == 2);
    CHECK(uniform_signature(matroid_of(c3)) == std::pair<int, int>{2, 3});

    Multigraph with_loop = make_cycle(3);
    with_loop.add_edge(1, 1, "loop");
    Configuration wl = incidence_configuration(with_loop);
    Matroid m = matroid_of(wl);
    CHECK(is_loop(m, 3));
}

TEST_CASE("config polynomial coefficients") {
    ConfigPolynomial tri = config_polynomial(incidence_configuration(make_cycle(3)));
    REQUIRE(tri.terms.size() == 3);
    for (auto& [mask, c] : tri.terms) CHECK(c == 1);

    // all-loops configuration: psi = 1
    Multigraph loops;
    loops.add_vertex("a");
    loops.add_edge(0, 0);
    loops.add_edge(0, 0);
    ConfigPolynomial one = config_polynomial(incidence_configuration(loops));
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms[0].first == 0u);
    CHECK(one.terms[0].second == 1);

    ConfigPolynomial vdm = config_polynomial(vandermonde_realization(2, 3));
    REQUIRE(vdm.terms.size() == 3);
    std::vector<i64> coeffs;
    for (auto& [mask, c] : vdm.terms) coeffs.push_back(c);
    CHECK(coeffs == std::vector<i64>{1, 4, 1});  // (2-1)^2, (3-1)^2, (3-2)^2
}

TEST_CASE("polynomial support equals the matroid's bases") {
    std::vector<Configuration> cs = {incidence_configuration(make_complete(4)),
                                     incidence_configuration(make_wheel(3)),
                                     vandermonde_realization(2, 5),
                                     vandermonde_realization(3, 6)};
    for (const auto& w : cs) {
        ConfigPolynomial poly = config_polynomial(w);
        Matroid m = matroid_of(w);
        std::vector<uint32_t> support;
        for (auto& [mask, c] : poly.terms) {
            support.push_back(mask);
            CHECK(c > 0);
            i64 root = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(c))));
            CHECK(root * root == c);  // squared subdeterminants
        }
        CHECK(support == m.bases);
    }
}

TEST_CASE("monomial evaluation") {
    ConfigPolynomial tri = config_polynomial(incidence_configuration(make_cycle(3)));
    CHECK(evaluate_mod_p(tri, {1, 1, 1}, 3) == 0);
    CHECK(evaluate_mod_p(tri, {1, 1, 0}, 3) == 1);

    ConfigPolynomial one;
    one.n = 2;
    one.terms = {{0u, 1}};
    CHECK(evaluate_mod_p(one, {2, 4}, 5) == 1);

    CHECK_THROWS_AS(evaluate_mod_p(tri, {1, 1}, 3), std::invalid_argument);
}

TEST_CASE("laplacian evaluation") {
    CHECK(evaluate_graph_via_laplacian(make_path(1), {2}, 5) == 2);
    CHECK(evaluate_graph_via_laplacian(make_banana(2), {1, 1}, 3) == 2);
    Multigraph disc;
    disc.add_vertex("a");
    disc.add_vertex("b");
    disc.add_vertex("c");
    disc.add_edge(0, 1);
    CHECK_THROWS_AS(LaplacianEvaluator(disc, 3), std::invalid_argument);
}

TEST_CASE("laplacian path agrees with the monomial path") {
    Rng rng(41);
    for (const Multigraph& g : {make_cycle(5), make_complete(4), make_wheel(4)}) {
        ConfigPolynomial poly = config_polynomial(incidence_configuration(g));
        for (i64 p : {3LL, 5LL, 7LL}) {
            LaplacianEvaluator lap(g, p);
            for (int it = 0; it < 1000; ++it) {
                std::vector<i64> x(g.edge_count());
                for (auto& xi : x) xi = rng.uniform(static_cast<int>(p));
                CHECK(lap(x) == evaluate_mod_p(poly, x, p));
            }
        }
    }
}

TEST_CASE("evaluation is homogeneous of degree rank") {
    Rng rng(43);
    ConfigPolynomial poly = config_polynomial(incidence_configuration(make_wheel(3)));
    for (i64 p : {5LL, 7LL}) {
        for (int it = 0; it < 200; ++it) {
            std::vector<i64> x(poly.n);
            for (auto& xi : x) xi = rng.uniform(static_cast<int>(p));
            i64 lambda = 1 + rng.uniform(static_cast<int>(p) - 1);
            std::vector<i64> lx = x;
            for (auto& xi : lx) xi = xi * lambda % p;
            i64 scale = detail::pow_mod(lambda, poly.rank, p);
            CHECK(evaluate_mod_p(poly, lx, p) == evaluate_mod_p(poly, x, p) * scale % p);
        }
    }
}

TEST_CASE("restriction identity: zeroing coordinates equals restricting") {
    Rng rng(47);
    std::vector<std::pair<Configuration, bool>> cs = {
        {incidence_configuration(make_complete(4)), true},
        {incidence_configuration(make_wheel(3)), true},
        {vandermonde_realization(2, 5), false}};
    for (const auto& [w, exact] : cs) {
        ConfigPolynomial poly = config_polynomial(w);
        Matroid m = matroid_of(w);
        int n = w.cols();
        for (uint32_t S = 1; S < (1u << n); ++S) {
            bool spanning = rank_of(m, S) == m.rank;
            Configuration sub = restrict_configuration(w, S);
            ConfigPolynomial sub_poly = config_polynomial(sub);
            for (i64 p : {5LL, 7LL}) {
                for (int it = 0; it < 8; ++it) {
                    std::vector<i64> x(n, 0), xs;
                    for (int e = 0; e < n; ++e)
                        if ((S >> e) & 1u) {
                            x[e] = rng.uniform(static_cast<int>(p));
                            xs.push_back(x[e]);
                        }
                    i64 full = evaluate_mod_p(poly, x, p);
                    if (!spanning) {
                        // every term uses a zeroed coordinate
                        CHECK(full == 0);
                        continue;
                    }
                    i64 restr = evaluate_mod_p(sub_poly, xs, p);
                    if (exact)
                        CHECK(full == restr);  // graph configurations: equality on the nose
                    else
                        CHECK((full == 0) == (restr == 0));  // up to a square unit
                }
            }
        }
    }
}

TEST_CASE("kernel configuration realizes the dual matroid") {
    for (const Multigraph& g : {make_cycle(4), make_complete(4), make_wheel(3)}) {
        Configuration w = incidence_configuration(g);
        Configuration k = kernel_configuration(w);
        Matroid m = matroid_of(w);
        Matroid d = matroid_of(k);
        CHECK(d.bases == dual(m).bases);
    }
}

TEST_CASE("vandermonde realizations are uniform") {
    CHECK(uniform_signature(matroid_of(vandermonde_realization(2, 4))) ==
          std::pair<int, int>{2, 4});
    CHECK(uniform_signature(matroid_of(vandermonde_realization(1, 5))) ==
          std::pair<int, int>{1, 5});
    CHECK(uniform_signature(matroid_of(vandermonde_realization(4, 4))) ==
          std::pair<int, int>{4, 4});
    CHECK_THROWS_AS(vandermonde_realization(0, 3), std::invalid_argument);
}

TEST_CASE("golden polynomial JSON for the triangle") {
    Configuration w = incidence_configuration(make_cycle(3));
    json j = polynomial_to_json(config_polynomial(w), w.labels);
    CHECK(j.dump() ==
          R"([{"basis":["e0","e1"],"coeff":1},{"basis":["e0","e2"],"coeff":1},{"basis":["e1","e2"],"coeff":1}])");
}
