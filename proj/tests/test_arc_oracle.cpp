#include <doctest.h>

#include "arcx/arc.hpp"
#include "oracle/farey.hpp"

#include <random>

using namespace arcx;

namespace {

RawPath random_walk(const Triangulation& T, std::mt19937_64& rng, int length) {
	RawPath p;
	p.start_tri = static_cast<int>(rng() % T.num_triangles());
	p.start_corner = static_cast<int>(rng() % 3);
	int tri = p.start_tri;
	for (int i = 0; i < length; ++i) {
		const int s = static_cast<int>(rng() % 3);
		p.exits.push_back(s);
		tri = T.across(Side{tri, s}).tri;
	}
	p.end_corner = static_cast<int>(rng() % 3);
	return p;
}

std::vector<Arc> random_embedded_arcs(const Triangulation& T, std::mt19937_64& rng, size_t count, int max_len) {
	std::vector<Arc> arcs;
	for (int tries = 0; arcs.size() < count && tries < 20000; ++tries) {
		try {
			arcs.push_back(canonicalize(T, random_walk(T, rng, static_cast<int>(rng() % (max_len + 1)))));
		} catch (const InputError&) {
		}
	}
	return arcs;
}

} // namespace

TEST_CASE("tightening agrees with the geodesic walk") {
	std::mt19937_64 rng(7);
	for (auto [g, n] : {std::pair{0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
		const auto T = build_standard_triangulation(g, n);
		for (int it = 0; it < 400; ++it) {
			const RawPath raw = random_walk(T, rng, static_cast<int>(rng() % 9));
			const auto expected = oracle::tighten(T, raw);
			if (!expected) {
				CHECK_THROWS_AS(tighten(T, raw), NonEssentialArc);
				continue;
			}
			const RawPath got = tighten(T, raw);
			CHECK(got.exits.size() == expected->exits.size());
			CHECK(arc_from_tight_path(T, got) == arc_from_tight_path(T, *expected));
		}
	}
}

TEST_CASE("self-intersection count matches the universal cover") {
	std::mt19937_64 rng(11);
	for (auto [g, n] : {std::pair{0, 4}, {0, 6}, {1, 2}, {2, 1}}) {
		const auto T = build_standard_triangulation(g, n);
		int embedded_seen = 0, immersed_seen = 0;
		for (int it = 0; it < 300; ++it) {
			const auto tight = oracle::tighten(T, random_walk(T, rng, 2 + static_cast<int>(rng() % 12)));
			if (!tight) continue;
			const bool mine = self_intersections(T, *tight) == 0;
			const bool theirs = oracle::embedded(T, strand_of(T, *tight));
			CHECK(mine == theirs);
			(mine ? embedded_seen : immersed_seen)++;
		}
		CHECK(embedded_seen > 10);
		CHECK(immersed_seen > 10);
	}
}

TEST_CASE("intersection numbers match the universal cover") {
	std::mt19937_64 rng(23);
	for (auto [g, n] : {std::pair{0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 1}}) {
		const auto T = build_standard_triangulation(g, n);
		const auto arcs = random_embedded_arcs(T, rng, 40, 7);
		REQUIRE(arcs.size() == 40);
		int positive = 0;
		for (size_t i = 0; i < arcs.size(); ++i) {
			for (size_t j = 0; j < arcs.size(); ++j) {
				const int expected = oracle::intersection(T, strand_of(T, arcs[i]), strand_of(T, arcs[j]));
				CAPTURE(arcs[i].to_string());
				CAPTURE(arcs[j].to_string());
				CHECK(intersection_number(T, arcs[i], arcs[j]) == expected);
				if (expected > 0) ++positive;
			}
		}
		CHECK(positive > 20);
	}
}

TEST_CASE("canonical form is independent of the walk direction") {
	std::mt19937_64 rng(5);
	const auto T = build_standard_triangulation(1, 3);
	for (const Arc& a : random_embedded_arcs(T, rng, 60, 8)) {
		CHECK(canonicalize(T, reversed(T, raw_path(T, a))) == a);
		CHECK(canonicalize(T, raw_path(T, a)) == a);
		if (a.weight() > 0) {
			std::vector<int> edges;
			for (const auto& c : a.crossings()) edges.push_back(c.edge);
			std::vector<bool> dirs;
			for (const auto& c : a.crossings()) dirs.push_back(c.forward);
			CHECK(arc_from_crossings(T, a.endpoints()[0], a.endpoints()[1], edges, dirs) == a);
		}
	}
}
