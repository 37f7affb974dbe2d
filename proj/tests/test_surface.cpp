#include <doctest.h>

#include "arcx/error.hpp"
#include "arcx/surface.hpp"

using namespace arcx;

TEST_CASE("standard triangulation counts") {
	for (int g = 0; g <= 3; ++g) {
		for (int n = 1; n <= 7; ++n) {
			if (2 - 2 * g - n >= 0) {
				CHECK_THROWS_AS(build_standard_triangulation(g, n), PreconditionError);
				continue;
			}
			CAPTURE(g);
			CAPTURE(n);
			const auto T = build_standard_triangulation(g, n);
			CHECK(T.num_edges() == 6 * g - 6 + 3 * n);
			CHECK(T.num_triangles() == 2 * (2 * g - 2 + n));
			CHECK(T.num_vertices() == n);
		}
	}
}

TEST_CASE("gluing is an involution that reverses orientation") {
	const auto T = build_standard_triangulation(1, 3);
	for (int t = 0; t < T.num_triangles(); ++t) {
		for (int k = 0; k < 3; ++k) {
			const Side s{t, k};
			const Side o = T.across(s);
			CHECK(T.across(o) == s);
			CHECK(o.tri != t);
			CHECK(T.edge_of(o) == T.edge_of(s));
			CHECK(T.corner_across(s, next3(k)) == prev3(o.side));
			CHECK(T.corner_across(o, T.corner_across(s, prev3(k))) == prev3(k));
		}
	}
}

TEST_CASE("every marked point is a vertex") {
	for (auto [g, n] : {std::pair{0, 3}, {0, 6}, {1, 1}, {1, 4}, {2, 2}}) {
		const auto T = build_standard_triangulation(g, n);
		std::vector<int> seen(n, 0);
		for (const auto& t : T.triangles())
			for (int v : t.vertex) seen[v] = 1;
		for (int v = 0; v < n; ++v) CHECK(seen[v] == 1);
	}
}

TEST_CASE("bad gluing data is rejected") {
	std::vector<Triangle> tris(2);
	tris[0].vertex = {0, 1, 2};
	tris[0].edge = {0, 1, 2};
	tris[1].vertex = {0, 1, 2};
	tris[1].edge = {0, 1, 2};
	CHECK_THROWS_AS(Triangulation(0, 3, tris), InputError);
}
