#include <doctest.h>

#include "flagforge/errors.hpp"
#include "flagforge/search.hpp"
#include "support.hpp"

using namespace flagforge;
using namespace testing;

TEST_CASE("complex construction") {
    CHECK_THROWS_AS(complex_of(3, {{0, 1}, {0}}), DomainError);
    CHECK_THROWS_AS(complex_of(2, {{0, 2}}), DomainError);
    const auto v = SimplicialComplex::void_complex(3);
    const auto e = SimplicialComplex::empty_complex(3);
    CHECK(v.is_void());
    CHECK_FALSE(e.is_void());
    CHECK(v != e);
    CHECK_THROWS_AS(f_vector(v), DomainError);
    CHECK_THROWS_AS(h_vector(v), DomainError);
    CHECK(f_vector(e) == IntVector{1});
    CHECK(SimplicialComplex::generated_by(3, {bit(0), bit(0) | bit(1), bit(2)}) == complex_of(3, {{0, 1}, {2}}));
}

TEST_CASE("independence complex") {
    CHECK(independence_complex(c3()) == complex_of(3, {{0}, {1}, {2}}));
    CHECK(independence_complex(Graph(0)) == SimplicialComplex::empty_complex(0));
    CHECK(independence_complex(complete_bipartite_graph(2, 2)) == complex_of(4, {{0, 1}, {2, 3}}));
    CHECK(independence_complex(Graph(3)) == complex_of(3, {{0, 1, 2}}));
}

TEST_CASE("independence complex matches brute force on all graphs with six vertices") {
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : labeled_graphs(n)) CHECK(f_vector(independence_complex(g)) == brute_ind_f(g));
}

TEST_CASE("f-vectors") {
    CHECK(f_vector(complex_of(3, {{0, 1}, {0, 2}, {1, 2}})) == IntVector{1, 3, 3});
    CHECK(f_vector(complex_of(3, {{0, 1, 2}})) == IntVector{1, 3, 3, 1});
    CHECK(f_vector(independence_complex(c3_tau())) == IntVector{1, 6, 9, 4});
    CHECK(brute_f(independence_complex(c3_tau())) == IntVector{1, 6, 9, 4});
}

TEST_CASE("h-vectors") {
    CHECK(h_vector(independence_complex(c3_tau())) == IntVector{1, 3, 0, 0});
    CHECK(h_vector(complex_of(4, {{0, 1, 2, 3}})) == IntVector{1, 0, 0, 0, 0});
    CHECK(h_vector(independence_complex(ferrers())) == IntVector{1, 3, 0, 0});
    CHECK(strip_trailing_zeros(IntVector{1, 3, 0, 0}) == IntVector{1, 3});
    CHECK(h_vector(SimplicialComplex::empty_complex(2)) == IntVector{1});
    // boundary of a triangle
    CHECK(h_vector(complex_of(3, {{0, 1}, {0, 2}, {1, 2}})) == IntVector{1, 1, 1});
    // non-pure complexes can have negative entries
    CHECK(h_vector(complex_of(3, {{0, 1}, {2}})) == IntVector{1, 1, -1});
}

TEST_CASE("f_from_h") {
    CHECK(f_from_h(IntVector{1, 3, 0, 0}) == IntVector{1, 6, 9, 4});
    CHECK(f_from_h(IntVector{1, 0, 0, 0}) == IntVector{1, 3, 3, 1});
    const auto tri = complex_of(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(f_from_h(h_vector(tri)) == f_vector(tri));
}

TEST_CASE("h-vector satisfies the defining polynomial identity") {
    for (int n = 0; n <= 4; ++n) {
        for (const auto& c : all_complexes(n)) {
            if (c.is_void()) continue;
            const IntVector f = f_vector(c), h = h_vector(c);
            for (std::int64_t t = -2; t <= static_cast<std::int64_t>(f.size()) + 1; ++t) CHECK(h_matches_f_at(f, h, t));
        }
    }
}

TEST_CASE("link and deletion") {
    const Graph k22 = complete_bipartite_graph(2, 2);
    const auto ind = independence_complex(k22);
    const auto lk = link(ind, bit(0));
    CHECK(lk == complex_of(4, {{1}}));
    const auto via_graph = delete_closed(k22, bit(0), true);
    CHECK(f_vector(lk) == f_vector(independence_complex(via_graph.graph)));

    CHECK(link(ind, 0) == ind);
    CHECK_THROWS_AS(link(ind, bit(0) | bit(2)), DomainError);

    const auto boundary = complex_of(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(deletion(boundary, bit(3)) == boundary);
    CHECK(deletion(boundary, bit(0)) == complex_of(4, {{1, 2}}));
    CHECK_THROWS_AS(deletion(boundary, 0), DomainError);
}

TEST_CASE("link and deletion of independence complexes follow the graph on all graphs with seven vertices") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : graph_classes(n)) {
            const auto ind = independence_complex(g);
            for (int v = 0; v < n; ++v) {
                const auto del_g = delete_closed(g, bit(v), false);
                const auto lk_g = delete_closed(g, bit(v), true);
                const auto del = deletion(ind, bit(v));
                const auto lk = link(ind, bit(v));
                CHECK(del == independence_complex(del_g.graph).relabeled(n, del_g.original));
                CHECK(lk == independence_complex(lk_g.graph).relabeled(n, lk_g.original));
            }
        }
    }
}

TEST_CASE("join") {
    const auto tri = complex_of(3, {{0, 1}, {0, 2}, {1, 2}});
    const auto joined = join(tri, SimplicialComplex::empty_complex(0));
    CHECK(joined == tri);
    const auto point = complex_of(1, {{0}});
    CHECK(join(point, point) == complex_of(2, {{0, 1}}));
    CHECK(h_vector(join(point, point)) == IntVector{1, 0, 0});

    const auto three = complex_of(3, {{0}, {1}, {2}});
    const auto nine = join(three, three);
    CHECK(nine.facets().size() == 9);
    CHECK(brute_f(nine) == IntVector{1, 6, 9});
    CHECK(h_vector(nine) == IntVector{1, 4, 4});
    CHECK(join(three, SimplicialComplex::void_complex(2)).is_void());
}

TEST_CASE("purity, Stanley-Reisner generators and flagness") {
    const auto c5 = independence_complex(cycle_graph(5));
    CHECK(is_pure(c5));
    auto gens = stanley_reisner_generators(c5);
    CHECK(gens.size() == 5);
    for (VertexSet m : gens) CHECK(popcount(m) == 2);
    CHECK(is_flag(c5));

    CHECK_FALSE(is_pure(complex_of(3, {{0, 1}, {2}})));
    CHECK(stanley_reisner_generators(complex_of(3, {{0, 1, 2}})).empty());
    CHECK_FALSE(is_flag(complex_of(3, {{0, 1}, {0, 2}, {1, 2}})));
    CHECK_THROWS_AS(is_pure(SimplicialComplex::void_complex(1)), DomainError);
}

TEST_CASE("Stanley-Reisner generators are the minimal non-faces") {
    for (int n = 0; n <= 4; ++n) {
        for (const auto& c : all_complexes(n)) {
            if (c.is_void()) continue;
            std::vector<VertexSet> expected;
            for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
                if (c.contains_face(s)) continue;
                bool minimal = true;
                for_each_vertex(s, [&](int v) { minimal = minimal && c.contains_face(s & ~bit(v)); });
                if (minimal) expected.push_back(s);
            }
            auto gens = stanley_reisner_generators(c);
            std::sort(gens.begin(), gens.end());
            CHECK(gens == expected);
        }
    }
}

TEST_CASE("flag reconstruction") {
    for (int n = 0; n <= 6; ++n) {
        for (const Graph& g : labeled_graphs(n)) {
            const auto ind = independence_complex(g);
            CHECK(is_flag(ind));
            CHECK(graph_of_flag_complex(ind) == g);
        }
    }
}

TEST_CASE("hilbert numerator agrees with the h-vector") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& c : all_complexes(n))
            if (!c.is_void()) CHECK(hilbert_numerator(c) == h_vector(c));
    CHECK(polynomial_product(IntVector{1, 2}, IntVector{1, 2}) == IntVector{1, 4, 4});
}

TEST_CASE("sum of the h-vector counts the facets of a pure complex") {
    for (int n = 0; n <= 4; ++n) {
        for (const auto& c : all_complexes(n)) {
            if (c.is_void()) continue;
            const IntVector h = h_vector(c), f = f_vector(c);
            std::int64_t sum = 0;
            for (auto x : h) sum += x;
            CHECK(sum == f.back());
            if (is_pure(c)) CHECK(sum == static_cast<std::int64_t>(c.facets().size()));
        }
    }
}

TEST_CASE("exact arithmetic does not overflow silently") {
    CHECK(binomial(64, 32) == 1832624140942590534LL);
    CHECK_THROWS(binomial(70, 35));
    CHECK(f_vector(SimplicialComplex::simplex(64, ~VertexSet{0}))[32] == 1832624140942590534LL);
}
