#include <doctest.h>

#include "arcx/error.hpp"
#include "arcx/macx.hpp"
#include "graphs.hpp"
#include "oracle/farey.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace arcx;

namespace {

bool oracle_completely_disjoint(const Triangulation& T, const Arc& a, const Arc& b) {
	for (int p : a.endpoints())
		if (b.has_endpoint(p)) return false;
	return oracle::intersection(T, strand_of(T, a), strand_of(T, b)) == 0;
}

int max_weight(const PathCertificate& c) {
	int w = 0;
	for (const Arc& a : c.arcs) w = std::max(w, a.weight());
	return w;
}

// Bridge outcomes over every disjoint pair sharing `shared` endpoints.
std::map<std::string, int> bridge_cases(const Triangulation& T, const MarkedGraph& g, int W, int shared, int bound) {
	ArcComplex cx(T, g, ComplexKind::MA, W);
	const auto& V = cx.vertices();
	std::map<std::string, int> cases;
	for (size_t i = 0; i < V.size(); ++i)
		for (size_t j = i + 1; j < V.size(); ++j) {
			if (V[i].shared_endpoints(V[j]) != shared || !disjoint(T, V[i], V[j])) continue;
			const auto c = shared == 1 ? bridge_shared_endpoint(T, V[i], V[j], g) : bridge_same_endpoints(T, V[i], V[j], g);
			CHECK(validate_certificate(T, c, g).ok);
			CHECK(c.length() <= bound);
			CHECK(c.arcs.front() == V[i]);
			CHECK(c.arcs.back() == V[j]);
			++cases[c.annotations[1] + " / " + std::to_string(c.length())];
		}
	return cases;
}

} // namespace

TEST_CASE("neighbours of a star-graph arc are empty") {
	const auto T = build_standard_triangulation(0, 5);
	const auto g = graphs::star(5);
	ArcComplex cx(T, g, ComplexKind::MA, 4);
	REQUIRE(!cx.vertices().empty());
	for (const Arc& a : cx.vertices()) CHECK(cx.neighbors(a).empty());
}

TEST_CASE("neighbours in MA and A agree with the oracle") {
	const auto T = build_standard_triangulation(0, 5);
	const auto g = graphs::complete(5);
	const int W = 4;
	ArcComplex ma(T, g, ComplexKind::MA, W), a_cx(T, g, ComplexKind::A, W);
	const auto& V = ma.vertices();
	for (const Arc& a : V) {
		if (a.weight() <= 2) CHECK(!ma.neighbors(a).empty());
		const std::set<Arc> n(ma.neighbors(a).begin(), ma.neighbors(a).end());
		const std::set<Arc> na(a_cx.neighbors(a).begin(), a_cx.neighbors(a).end());
		CHECK(!n.count(a));
		CHECK(!na.count(a));
		for (const Arc& b : V) {
			if (a == b) continue;
			CHECK(n.count(b) == static_cast<size_t>(oracle_completely_disjoint(T, a, b)));
			const bool disj = oracle::intersection(T, strand_of(T, a), strand_of(T, b)) == 0;
			CHECK(na.count(b) == static_cast<size_t>(disj));
		}
	}
}

TEST_CASE("balls and distances") {
	const auto T = build_standard_triangulation(0, 5);
	const auto g = graphs::complete(5);
	ArcComplex cx(T, g, ComplexKind::MA, 4);
	const Arc base = cx.vertices().front();
	const Ball b0 = ball(cx, base, 0);
	CHECK(b0.vertices.size() == 1);
	CHECK(distance_in_ball(b0, base, base) == 0);

	const Ball b = ball(cx, base, 3);
	CHECK(b.exact);
	for (size_t i = 0; i < b.vertices.size(); ++i) CHECK(distance_in_ball(b, base, b.vertices[i]) == b.depth[i]);
	const Arc& n = cx.neighbors(base).front();
	CHECK(distance_in_ball(b, base, n) == 1);
	for (auto [i, j] : b.adjacency) CHECK(adjacent(T, b.vertices[i], b.vertices[j], ComplexKind::MA));

	const Ball capped = ball(cx, base, 3, 5);
	CHECK(!capped.exact);
	CHECK(capped.vertices.size() == 5);
	CHECK_THROWS_AS(ball(cx, edge_arc(T, 0), -1), InputError);
}

TEST_CASE("certificate validation") {
	const auto T = build_standard_triangulation(0, 5);
	const auto g = graphs::complete(5);
	ArcComplex cx(T, g, ComplexKind::A, 3);
	// a disjoint pair sharing an endpoint
	std::optional<std::pair<Arc, Arc>> pair;
	for (const Arc& a : cx.vertices())
		for (const Arc& b : cx.neighbors(a))
			if (!pair && a.shared_endpoints(b) == 1) pair = {a, b};
	REQUIRE(pair);
	const Arc far = neighbors(T, pair->second, g, 4).front();
	PathCertificate c{ComplexKind::MA, {far, pair->second, pair->first}, {"start", "x", "y"}};
	const auto bad = validate_certificate(T, c, g);
	CHECK(!bad.ok);
	CHECK(bad.index == 2);
	c.kind = ComplexKind::A;
	CHECK(validate_certificate(T, c, g).ok);
	c.arcs.push_back(c.arcs.back());
	c.annotations.push_back("repeat");
	CHECK(validate_certificate(T, c, g).index == 3);
	CHECK(!validate_certificate(T, PathCertificate{}, g).ok);
	const auto other = graphs::make(5, {{0, 1}});
	const PathCertificate single{ComplexKind::MA, {edge_arc(T, 0)}, {"start"}};
	CHECK(validate_certificate(T, single, other).ok == compatible(edge_arc(T, 0), other).has_value());
}

TEST_CASE("shared-endpoint bridge reaches every case") {
	const auto T = build_standard_triangulation(0, 5);
	const auto k5 = bridge_cases(T, graphs::complete(5), 3, 1, 4);
	CHECK(k5.size() == 1);
	CHECK(k5.begin()->first.find("/ 2") != std::string::npos);
	// middle edges of a path: no edge avoids both
	const auto p5 = bridge_cases(T, graphs::path(5), 4, 1, 4);
	CHECK(p5.count("shared-endpoint bridge, two auxiliary arcs / 3"));
	// a 4-cycle with a pendant edge forces the three-arc case
	const auto house = bridge_cases(T, graphs::make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}}), 4, 1, 4);
	CHECK(house.count("shared-endpoint bridge, three auxiliary arcs / 4"));
}

TEST_CASE("same-endpoints bridge reaches every case") {
	const auto torus = build_standard_triangulation(1, 5);
	const auto t = bridge_cases(torus, graphs::complete(5), 2, 2, 6);
	CHECK(t.count("same-endpoints bridge, connected complement / 2"));
	const auto T = build_standard_triangulation(0, 5);
	const auto k5 = bridge_cases(T, graphs::complete(5), 3, 2, 6);
	CHECK(k5.count("same-endpoints bridge, edge inside a component / 2"));
	const auto p5 = bridge_cases(T, graphs::path(5), 4, 2, 6);
	CHECK(p5.count("same-endpoints bridge, auxiliary arcs sharing an endpoint / 4"));
	CHECK(p5.count("same-endpoints bridge, second auxiliary arc meets alpha / 4"));
	const auto c6 = bridge_cases(build_standard_triangulation(0, 6), graphs::cycle(6), 3, 2, 6);
	CHECK(c6.count("same-endpoints bridge, completely disjoint auxiliary arcs / 3"));
}

TEST_CASE("bridge preconditions") {
	const auto T = build_standard_triangulation(0, 5);
	const Arc a = edge_arc(T, 0);
	CHECK_THROWS_AS(bridge_shared_endpoint(T, a, a, graphs::complete(5)), PreconditionError);
	CHECK_THROWS_AS(bridge_same_endpoints(T, a, a, graphs::star(5)), PreconditionError);
	const auto g = graphs::complete(5);
	for (int e = 1; e < T.num_edges(); ++e) {
		const Arc b = edge_arc(T, e);
		if (a.shared_endpoints(b) == 0) CHECK_THROWS_AS(bridge_shared_endpoint(T, a, b, g), PreconditionError);
	}
}

TEST_CASE("connect: trivial cases and seeded pairs") {
	const auto T = build_standard_triangulation(0, 5);
	const auto g = graphs::complete(5);
	const int W = 6;
	ArcComplex cx(T, g, ComplexKind::MA, W);
	const auto& V = cx.vertices();
	const auto same = connect(T, V[3], V[3], g);
	CHECK(same.arcs == std::vector<Arc>{V[3]});
	const Arc& n = cx.neighbors(V[3]).front();
	CHECK(connect(T, V[3], n, g).arcs == std::vector<Arc>{V[3], n});

	const Ball whole = ball(cx, V[0], 12);
	REQUIRE(whole.exact);
	std::mt19937_64 rng(2024);
	int sandwiched = 0;
	for (int trial = 0; trial < 60; ++trial) {
		const Arc& a = V[rng() % V.size()];
		const Arc& b = V[rng() % V.size()];
		const auto c = connect(T, a, b, g);
		CHECK(validate_certificate(T, c, g).ok);
		CHECK(c.arcs.front() == a);
		CHECK(c.arcs.back() == b);
		if (max_weight(c) > W) continue;
		const Ball around = ball(cx, a, c.length());
		const auto d = distance_in_ball(around, a, b);
		REQUIRE(d);
		CHECK(*d <= c.length());
		++sandwiched;
	}
	CHECK(sandwiched > 30);
	CHECK_THROWS_AS(connect(T, V[0], V[1], graphs::star(5)), PreconditionError);
}

TEST_CASE("separation") {
	const auto T = build_standard_triangulation(0, 4);
	const auto g = graphs::make(4, {{0, 1}, {2, 3}});
	ArcComplex cx(T, g, ComplexKind::A, 4);
	std::optional<std::pair<Arc, Arc>> loop;
	for (const Arc& a : cx.vertices())
		for (const Arc& b : cx.neighbors(a))
			if (!loop && a.endpoints()[0] == 0 && b.endpoints()[0] == 0 && a.endpoints()[1] == 1 && b.endpoints()[1] == 1)
				loop = {a, b};
	REQUIRE(loop);
	CHECK_THROWS_AS(separates(T, loop->first, loop->first, 2, 3), PreconditionError);
	CHECK_THROWS_AS(separates(T, loop->first, loop->second, 0, 3), PreconditionError);
	// on the sphere the loop always bounds; 2 and 3 are separated iff the sides differ
	const CutSurface cut = cut_along(T, {loop->first, loop->second});
	CHECK(cut.num_components() == 2);
	CHECK(separates(T, loop->first, loop->second, 2, 3) == (cut.component_of(2) != cut.component_of(3)));
}

TEST_CASE("separation is preserved by distance-two moves on the sphere") {
	// Two disjoint edges {0,1}, {2,3} on S_{0,5}; point 4 is unused. Arcs for
	// {0,1} related by a common neighbour (an arc for {2,3} missing both) are
	// joined; no class of that relation may contain a pair separating 2 from 3.
	const auto T = build_standard_triangulation(0, 5);
	const auto g = graphs::make(4, {{0, 1}, {2, 3}});
	ArcComplex cx(T, g, ComplexKind::MA, 6);
	std::vector<Arc> arcs;
	for (const Arc& a : cx.vertices())
		if (a.endpoints() == std::array{0, 1}) arcs.push_back(a);
	std::vector<int> parent(arcs.size());
	std::iota(parent.begin(), parent.end(), 0);
	std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
	int moves = 0, separating = 0;
	for (size_t i = 0; i < arcs.size(); ++i)
		for (size_t j = i + 1; j < arcs.size(); ++j) {
			const auto common = find_disjoint_arc(T, {arcs[i]}, 2, 3, 10,
			                                      [&](const Arc& d) { return disjoint(T, d, arcs[j]); });
			if (common) {
				++moves;
				parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
			}
			if (!disjoint(T, arcs[i], arcs[j])) continue;
			const bool sep = separates(T, arcs[i], arcs[j], 2, 3);
			if (sep) ++separating;
			if (common) CHECK(!sep);
		}
	CHECK(moves > 0);
	CHECK(separating > 0);
	for (size_t i = 0; i < arcs.size(); ++i)
		for (size_t j = i + 1; j < arcs.size(); ++j)
			if (find(static_cast<int>(i)) == find(static_cast<int>(j)) && disjoint(T, arcs[i], arcs[j]))
				CHECK(!separates(T, arcs[i], arcs[j], 2, 3));
}

TEST_CASE("genus one: separating pairs are at distance four") {
	const auto T = build_standard_triangulation(1, 4);
	const auto g = graphs::make(4, {{0, 1}, {2, 3}});
	ArcComplex cx(T, g, ComplexKind::MA, 8);
	std::optional<std::pair<Arc, Arc>> sep, nonsep;
	for (const Arc& a : cx.vertices()) {
		if (a.endpoints() != std::array{0, 1} || a.weight() > 4) continue;
		for (const Arc& b : cx.vertices()) {
			if (!(a < b) || b.endpoints() != std::array{0, 1} || b.weight() > 4 || !disjoint(T, a, b)) continue;
			auto& slot = separates(T, a, b, 2, 3) ? sep : nonsep;
			if (!slot) slot = {a, b};
		}
	}
	REQUIRE(sep);
	REQUIRE(nonsep);
	const auto path = shortest_path(cx, sep->first, sep->second, 6);
	REQUIRE(path);
	CHECK(path->length() == 4);
	CHECK(validate_certificate(T, *path, g).ok);
	CHECK(!find_disjoint_arc(T, {sep->first, sep->second}, 2, 3, 12));
	const auto short_path = shortest_path(cx, nonsep->first, nonsep->second, 6);
	REQUIRE(short_path);
	CHECK(short_path->length() == 2);
}
