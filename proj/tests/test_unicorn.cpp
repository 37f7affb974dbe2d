#include <doctest.h>

#include "arcx/cut.hpp"
#include "arcx/unicorn.hpp"
#include "oracle/farey.hpp"

#include <random>
#include <set>

using namespace arcx;

namespace {

int oracle_i(const Triangulation& T, const Arc& a, const Arc& b) {
	if (a == b) return 0;
	return oracle::intersection(T, strand_of(T, a), strand_of(T, b));
}

std::vector<Arc> all_arcs(const Triangulation& T, int W) {
	return enumerate_arcs(cut_along(T, {}), W, EndpointFilter::all(T.num_vertices()));
}

} // namespace

TEST_CASE("disjoint arcs give the two-element path") {
	const auto T = build_standard_triangulation(0, 5);
	const auto arcs = all_arcs(T, 3);
	int checked = 0;
	for (size_t i = 0; i < arcs.size() && checked < 50; ++i)
		for (size_t j = i + 1; j < arcs.size() && checked < 50; ++j) {
			if (oracle_i(T, arcs[i], arcs[j]) != 0) continue;
			const auto seq = unicorn_arcs(T, arcs[i], arcs[i].endpoints()[0], arcs[j], arcs[j].endpoints()[1]);
			CHECK(seq.elements == std::vector<Arc>{arcs[i], arcs[j]});
			CHECK(seq.pivots.empty());
			++checked;
		}
	CHECK(checked == 50);
}

TEST_CASE("a single crossing always gives one unicorn arc") {
	const auto T = build_standard_triangulation(0, 5);
	const auto arcs = all_arcs(T, 3);
	int checked = 0;
	for (size_t i = 0; i < arcs.size() && checked < 40; ++i)
		for (size_t j = 0; j < arcs.size() && checked < 40; ++j) {
			if (oracle_i(T, arcs[i], arcs[j]) != 1) continue;
			const auto seq = unicorn_arcs(T, arcs[i], arcs[i].endpoints()[1], arcs[j], arcs[j].endpoints()[0]);
			REQUIRE(seq.elements.size() == 3);
			const Arc& c = seq.elements[1];
			CHECK(oracle::embedded(T, strand_of(T, c)));
			CHECK(c.has_endpoint(arcs[i].endpoints()[1]));
			CHECK(c.has_endpoint(arcs[j].endpoints()[0]));
			++checked;
		}
	CHECK(checked == 40);
}

TEST_CASE("unicorn path properties on random pairs") {
	std::mt19937_64 rng(99);
	for (auto [g, n] : {std::pair{0, 5}, {0, 6}, {1, 2}}) {
		const auto T = build_standard_triangulation(g, n);
		const auto arcs = all_arcs(T, 5);
		int long_paths = 0;
		for (int it = 0; it < 150; ++it) {
			const Arc& a = arcs[rng() % arcs.size()];
			const Arc& b = arcs[rng() % arcs.size()];
			const int v = a.endpoints()[rng() % 2], u = b.endpoints()[rng() % 2];
			const auto seq = unicorn_arcs(T, a, v, b, u);
			CAPTURE(a.to_string());
			CAPTURE(b.to_string());
			REQUIRE(seq.elements.size() >= 2);
			CHECK(seq.elements.front() == a);
			CHECK(seq.elements.back() == b);
			CHECK(seq.elements.size() == seq.pivots.size() + 2);
			CHECK(static_cast<int>(seq.pivots.size()) + seq.rejected == oracle_i(T, a, b));
			for (size_t k = 1; k < seq.pivots.size(); ++k)
				CHECK(seq.pivots[k - 1].along_alpha > seq.pivots[k].along_alpha);
			for (size_t k = 0; k + 1 < seq.elements.size(); ++k)
				CHECK(oracle_i(T, seq.elements[k], seq.elements[k + 1]) == 0);
			for (size_t k = 1; k + 1 < seq.elements.size(); ++k) {
				const Arc& c = seq.elements[k];
				CHECK(oracle::embedded(T, strand_of(T, c)));
				CHECK(c.has_endpoint(v));
				CHECK(c.has_endpoint(u));
			}
			const auto back = unicorn_arcs(T, b, u, a, v);
			CHECK(std::vector<Arc>(back.elements.rbegin(), back.elements.rend()) == seq.elements);
			if (seq.elements.size() >= 4) ++long_paths;
		}
		CHECK(long_paths > 5);
	}
}

TEST_CASE("unicorn triangle witness is the first disjoint element") {
	std::mt19937_64 rng(1234);
	const auto T = build_standard_triangulation(0, 5);
	const auto arcs = all_arcs(T, 5);
	for (int it = 0; it < 100; ++it) {
		const Arc& a = arcs[rng() % arcs.size()];
		const Arc& b = arcs[rng() % arcs.size()];
		const Arc& g = arcs[rng() % arcs.size()];
		const int v = a.endpoints()[0], u = b.endpoints()[1], w = g.endpoints()[rng() % 2];
		const auto seq = unicorn_arcs(T, a, v, b, u);
		std::vector<Arc> scan = unicorn_arcs(T, a, v, g, w).elements;
		for (const Arc& x : unicorn_arcs(T, g, w, b, u).elements) scan.push_back(x);
		for (const Arc& c : seq.elements) {
			const Arc got = unicorn_triangle_witness(T, seq, c, g, w);
			CHECK(oracle_i(T, c, got) == 0);
			for (const Arc& x : scan) {
				if (oracle_i(T, c, x) == 0) {
					CHECK(x == got);
					break;
				}
			}
		}
		CHECK(unicorn_triangle_witness(T, seq, a, g, w) == a);
	}
}

TEST_CASE("basepoints must be endpoints") {
	const auto T = build_standard_triangulation(0, 5);
	const auto arcs = all_arcs(T, 1);
	const Arc& a = arcs[0];
	int other = 0;
	while (a.has_endpoint(other)) ++other;
	CHECK_THROWS_AS(unicorn_arcs(T, a, other, a, a.endpoints()[0]), PreconditionError);
}
