#include <doctest.h>

#include "arcx/error.hpp"
#include "arcx/hyp.hpp"
#include "graphs.hpp"
#include "oracle/farey.hpp"

#include <random>

using namespace arcx;

namespace {

Graph cycle_graph(int n) {
	Graph G(n);
	for (int i = 0; i < n; ++i) G.add_edge(i, (i + 1) % n);
	return G;
}

std::vector<int> all_vertices(const Graph& G) {
	std::vector<int> v(G.size());
	for (int i = 0; i < G.size(); ++i) v[i] = i;
	return v;
}

Ball ball_of(const Graph& G, int radius) {
	Ball b;
	b.radius = radius;
	for (int i = 0; i < G.size(); ++i) {
		b.vertices.push_back(Arc{});
		b.depth.push_back(0);
		for (int j : G.neighbors(i))
			if (i < j) b.adjacency.emplace_back(i, j);
	}
	return b;
}

bool oracle_disjoint(const Triangulation& T, const Arc& a, const Arc& b) {
	return a == b || oracle::intersection(T, strand_of(T, a), strand_of(T, b)) == 0;
}

} // namespace

TEST_CASE("guessing geodesics on a tree and a hexagon") {
	// binary tree on 7 vertices
	Graph tree(7);
	for (int i = 1; i < 7; ++i) tree.add_edge(i, (i - 1) / 2);
	const Family geo = [&](int x, int y) { return geodesic_interval(tree, x, y); };
	const auto strict = guessing_geodesics_check(tree, geo, 0, all_vertices(tree));
	CHECK(strict.family_ok);
	CHECK(strict.hypothesis2);
	CHECK(!strict.hypothesis1); // an edge already has diameter one
	CHECK(strict.worst_diameter == 1);
	CHECK(guessing_geodesics_check(tree, geo, 1, all_vertices(tree)).pass());

	Graph hex = cycle_graph(6);
	const Family hgeo = [&](int x, int y) { return geodesic_interval(hex, x, y); };
	const auto r = guessing_geodesics_check(hex, hgeo, 2, all_vertices(hex));
	CHECK(r.pass());
	CHECK(r.triples == 216);
	CHECK(geodesic_interval(hex, 0, 3).size() == 6);

	// a family missing its endpoints is rejected
	const Family bad = [&](int x, int) { return std::vector<int>{x}; };
	CHECK(!guessing_geodesics_check(hex, bad, 2, all_vertices(hex)).family_ok);
}

TEST_CASE("four-point defect") {
	CHECK(estimate_delta(ball_of(Graph(1), 0)).delta == 0);
	Graph path(6);
	for (int i = 0; i + 1 < 6; ++i) path.add_edge(i, i + 1);
	CHECK(estimate_delta(ball_of(path, 5)).delta == 0);
	const auto square = estimate_delta(ball_of(cycle_graph(4), 2));
	CHECK(square.delta == 1);
	CHECK(square.exact);
	CHECK(square.quadruples == 1);
	const auto sampled = estimate_delta(ball_of(cycle_graph(50), 25), 10, 5000, 3);
	CHECK(!sampled.exact);
	CHECK(sampled.delta <= 25);
}

TEST_CASE("triangle arcs") {
	for (auto [genus, n, W] : {std::tuple{0, 6, 4}, {1, 4, 3}, {2, 3, 2}}) {
		const auto T = build_standard_triangulation(genus, n);
		const auto g = graphs::complete(std::min(n, 4));
		TriangleArcBuilder tb(T, g);
		TriangleArcBuilder again(T, g);
		ArcComplex cx(T, g, ComplexKind::A, W);
		REQUIRE(!cx.vertices().empty());
		for (const Arc& a : cx.vertices()) {
			const auto& ta = tb.of(a);
			CHECK(ta.arcs == again.of(a).arcs);
			for (int i = 0; i < 3; ++i) {
				const Arc& ai = ta.arcs[i];
				CHECK(ai.has_endpoint(tb.point(i)));
				CHECK(ai.has_endpoint(tb.point((i + 1) % 3)));
				CHECK(oracle_disjoint(T, a, ai));
				CHECK(oracle_disjoint(T, ai, ta.arcs[(i + 1) % 3]));
				if (a.has_endpoint(tb.point(i)) && a.has_endpoint(tb.point((i + 1) % 3))) CHECK(ai == a);
			}
			CHECK(bounds_disk(T, ta.arcs));
		}
	}
}

TEST_CASE("guess-sets") {
	const auto T = build_standard_triangulation(0, 6);
	const auto g = graphs::complete(6);
	ArcComplex cx(T, g, ComplexKind::A, 4);
	TriangleArcBuilder tb(T, g);
	ComplexWindow w(cx);
	const auto& V = cx.vertices();
	ArcComplex ma(T, g, ComplexKind::MA, 2);
	CHECK_THROWS_AS(guess_set(tb, ma, V[0], V[1]), PreconditionError);
	int crossing = 0;
	for (size_t i = 0; i < V.size(); i += 7)
		for (size_t j = 0; j < V.size(); j += 11) {
			const auto gs = guess_set(tb, cx, V[i], V[j]);
			CHECK(std::binary_search(gs.full_set.begin(), gs.full_set.end(), V[i]));
			CHECK(std::binary_search(gs.full_set.begin(), gs.full_set.end(), V[j]));
			CHECK(std::includes(gs.full_set.begin(), gs.full_set.end(), gs.prime_set.begin(), gs.prime_set.end()));
			for (const auto& p : gs.provenance) {
				CHECK(compatible(p.arc, g));
				// interior unicorn arcs run from v to u; the ends are the triangle arcs
				if (p.arc == tb.of(V[i]).arcs[p.i] || p.arc == tb.of(V[j]).arcs[p.j]) continue;
				CHECK(p.arc.has_endpoint(p.v));
				CHECK(p.arc.has_endpoint(p.u));
			}
			std::vector<int> idx;
			for (const Arc& a : gs.full_set) idx.push_back(w.index(a));
			CHECK(w.graph().induces_connected(idx));
			if (!disjoint(T, tb.of(V[i]).arcs[0], tb.of(V[j]).arcs[0]) && gs.prime_set.size() > 6) ++crossing;
		}
	CHECK(crossing > 0);
	const auto same = guess_set(tb, cx, V[5], V[5]);
	CHECK(std::binary_search(same.full_set.begin(), same.full_set.end(), V[5]));
}

TEST_CASE("thinness, diameter and quasi-isometry on a small window") {
	const auto T = build_standard_triangulation(0, 6);
	const auto g = graphs::complete(6);
	ArcComplex a_cx(T, g, ComplexKind::A, 6), ma_cx(T, g, ComplexKind::MA, 6);
	ComplexWindow aw(a_cx), mw(ma_cx);
	TriangleArcBuilder tb(T, g);
	const auto& V = a_cx.vertices();
	std::mt19937_64 rng(11);
	for (int t = 0; t < 10; ++t) {
		const Arc& a = V[rng() % V.size()];
		const Arc& b = V[rng() % V.size()];
		const Arc& c = V[rng() % V.size()];
		const auto r = verify_thinness(tb, aw, a, b, c);
		CHECK(r.pass);
		CHECK(r.max_distance <= 2);
		CHECK(verify_thinness(tb, aw, a, b, a).pass);
		const Arc& n = a_cx.neighbors(a)[rng() % a_cx.neighbors(a).size()];
		const auto d = verify_diam_bound(tb, aw, a, n);
		CHECK(d.bound == 11);
		CHECK(d.pass);
	}
	const auto far = std::find_if(V.begin(), V.end(), [&](const Arc& x) { return !disjoint(T, x, V[0]); });
	REQUIRE(far != V.end());
	CHECK_THROWS_AS(verify_diam_bound(tb, aw, V[0], *far), PreconditionError);
	const auto q = qi_sample(aw, mw, 200, 5);
	CHECK(q.pass());
	CHECK(q.pairs == 200);
	CHECK_THROWS_AS(qi_sample(mw, aw, 1, 0), PreconditionError);
}
