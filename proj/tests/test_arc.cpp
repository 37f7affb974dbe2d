#include <doctest.h>

#include "arcx/arc.hpp"

using namespace arcx;

TEST_CASE("edge arcs round-trip") {
	const auto T = build_standard_triangulation(0, 4);
	for (int e = 0; e < T.num_edges(); ++e) {
		const Arc a = edge_arc(T, e);
		CHECK(a.is_edge());
		CHECK(a.edge() == e);
		CHECK(canonicalize(T, raw_path(T, a)) == a);
	}
}
