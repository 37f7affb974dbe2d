#include <doctest.h>

#include "arcx/error.hpp"
#include "graphs.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace arcx;

TEST_CASE("marked graph validation") {
	CHECK_THROWS_AS(MarkedGraph({"a", "b"}, {{0, 0}}, {0, 1}), InputError);
	CHECK_THROWS_AS(MarkedGraph({"a", "b"}, {{0, 1}, {1, 0}}, {0, 1}), InputError);
	CHECK_THROWS_AS(MarkedGraph({"a", "b"}, {{0, 2}}, {0, 1}), InputError);
	CHECK_THROWS_AS(MarkedGraph({"a", "b"}, {{0, 1}}, {3, 3}), InputError);
	CHECK_THROWS_AS(MarkedGraph({"a", "b"}, {{0, 1}}, {0}), InputError);
	const auto g = graphs::make(3, {{0, 1}}, 2);
	CHECK(g.vertex_at(3) == 1);
	CHECK(!g.vertex_at(0));
	CHECK(g.edge_between_points(3, 2) == 0);
	CHECK(g.points_needed() == 5);
}

TEST_CASE("gamma zero drops isolated vertices") {
	CHECK(gamma_zero(graphs::complete(5)).num_vertices() == 5);
	const auto tri = graphs::make(5, {{0, 1}, {1, 2}, {0, 2}});
	const auto z = gamma_zero(tri);
	CHECK(z.num_vertices() == 3);
	CHECK(z.num_edges() == 3);
	CHECK(gamma_zero(graphs::make(4, {})).num_vertices() == 0);
}

TEST_CASE("graph predicates") {
	CHECK(edge_complement_condition(graphs::complete(5)));
	CHECK(!edge_complement_condition(graphs::star(5)));
	CHECK(edge_complement_condition(graphs::path(5)));
	CHECK(!edge_complement_condition(graphs::path(4)));
	CHECK(has_triangle(graphs::complete(5)));
	CHECK(graph_diameter(graphs::complete(5)) == 1);
	CHECK(!has_triangle(graphs::path(5)));
	CHECK(bipartite_parts(graphs::path(5)) == std::pair{3, 2});
	CHECK(bipartite_parts(graphs::cycle(6)) == std::pair{3, 3});
	CHECK(!bipartite_parts(graphs::cycle(5)));
	CHECK(!has_triangle(graphs::cycle(6)));
	CHECK(graph_diameter(graphs::cycle(8)) == 4);
	CHECK(!graph_diameter(graphs::make(4, {{0, 1}, {2, 3}})));
	CHECK(least_triangle(graphs::complete(5)) == std::array{0, 1, 2});
	CHECK(least_triangle(graphs::make(5, {{4, 3}, {3, 2}, {2, 4}, {0, 1}})) == std::array{2, 3, 4});
}

TEST_CASE("compatibility") {
	const auto T = build_standard_triangulation(0, 6);
	const auto g = graphs::complete(5);
	for (int e = 0; e < T.num_edges(); ++e) {
		const Arc a = edge_arc(T, e);
		const auto c = compatible(a, g);
		if (a.endpoints()[1] < 5 && !a.is_loop()) {
			REQUIRE(c);
			const auto [u, v] = g.edges()[*c];
			CHECK(std::pair{std::min(u, v), std::max(u, v)} == std::pair{a.endpoints()[0], a.endpoints()[1]});
		} else {
			CHECK(!c);
		}
	}
	const auto f = compatible_filter(g, 6, {0});
	CHECK(f.allowed(1, 2));
	CHECK(!f.allowed(0, 1));
	CHECK(!f.allowed(1, 5));
	CHECK(!f.allowed(1, 1));
}

TEST_CASE("connectivity verdicts") {
	for (int n = 5; n <= 8; ++n)
		for (int g = 0; g <= 2; ++g) CHECK(connectivity_verdict(graphs::complete(n), g).value == Connectivity::Connected);
	CHECK(connectivity_verdict(graphs::star(5), 0).value == Connectivity::Disconnected);
	CHECK(connectivity_verdict(graphs::path(5), 0).value == Connectivity::Connected);
	const auto two = graphs::make(4, {{0, 1}, {2, 3}});
	CHECK(connectivity_verdict(two, 1).value == Connectivity::Connected);
	CHECK(connectivity_verdict(two, 0).value == Connectivity::Disconnected);
	CHECK(connectivity_verdict(graphs::make(6, {{0, 1}, {1, 2}, {0, 2}}), 2).value == Connectivity::Disconnected);
	CHECK(connectivity_verdict(graphs::path(4), 1).value == Connectivity::Disconnected);
	CHECK(connectivity_verdict(graphs::cycle(4), 1).value == Connectivity::Disconnected);
}

TEST_CASE("hyperbolicity verdicts") {
	CHECK(hyperbolicity_verdict(graphs::complete(5), 0).value == Hyperbolicity::Hyperbolic);
	CHECK(hyperbolicity_verdict(graphs::cycle(8), 0).value == Hyperbolicity::NotHyperbolic);
	CHECK(hyperbolicity_verdict(graphs::path(5), 0).value == Hyperbolicity::NotHyperbolic);
	CHECK(hyperbolicity_verdict(graphs::cycle(5), 0).value == Hyperbolicity::Unknown);
	const auto star = hyperbolicity_verdict(graphs::star(6), 0);
	CHECK(star.value == Hyperbolicity::Unknown);
	CHECK(star.reason == "not connected");
}

TEST_CASE("verdicts are invariant under relabelling") {
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 40; ++trial) {
		const int n = 4 + static_cast<int>(rng() % 4);
		std::vector<std::pair<int, int>> edges;
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				if (rng() % 2) edges.emplace_back(i, j);
		std::vector<int> perm(n);
		std::iota(perm.begin(), perm.end(), 0);
		std::shuffle(perm.begin(), perm.end(), rng);
		std::vector<std::pair<int, int>> moved;
		for (auto [u, v] : edges) moved.emplace_back(perm[u], perm[v]);
		const auto a = graphs::make(n, edges), b = graphs::make(n, moved);
		for (int g = 0; g <= 1; ++g) {
			CHECK(connectivity_verdict(a, g).value == connectivity_verdict(b, g).value);
			const auto h = hyperbolicity_verdict(a, g).value;
			CHECK(h == hyperbolicity_verdict(b, g).value);
			const auto parts = bipartite_parts(a);
			if (parts && parts->second >= 4) CHECK(h != Hyperbolicity::Hyperbolic);
		}
	}
}
