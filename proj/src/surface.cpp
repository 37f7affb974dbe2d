#include "arcx/surface.hpp"

#include "arcx/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace arcx {

Triangulation::Triangulation(int genus, int punctures, std::vector<Triangle> triangles)
    : genus_(genus), punctures_(punctures), triangles_(std::move(triangles)) {
	int max_edge = -1;
	for (const auto& t : triangles_)
		for (int e : t.edge) max_edge = std::max(max_edge, e);
	edges_.assign(max_edge + 1, EdgeRecord{});
	std::vector<int> seen(max_edge + 1, 0);
	for (int t = 0; t < num_triangles(); ++t) {
		for (int k = 0; k < 3; ++k) {
			int e = triangles_[t].edge[k];
			if (seen[e] >= 2) throw InputError("edge " + std::to_string(e) + " used more than twice");
			edges_[e].sides[seen[e]++] = Side{t, k};
		}
	}
	for (int e = 0; e <= max_edge; ++e) {
		if (seen[e] != 2) throw InputError("edge " + std::to_string(e) + " is not glued to two sides");
		auto& rec = edges_[e];
		if (rec.sides[1] < rec.sides[0]) std::swap(rec.sides[0], rec.sides[1]);
		const Side a = rec.sides[0];
		const Side b = rec.sides[1];
		triangles_[a.tri].across[a.side] = b;
		triangles_[b.tri].across[b.side] = a;
		rec.vertices = {triangles_[a.tri].vertex[next3(a.side)], triangles_[a.tri].vertex[prev3(a.side)]};
	}
	validate();
}

int Triangulation::corner_across(Side s, int corner) const {
	const Side o = across(s);
	if (corner == next3(s.side)) return prev3(o.side);
	if (corner == prev3(s.side)) return next3(o.side);
	throw PreconditionError("corner is not an endpoint of the side");
}

void Triangulation::validate() const {
	for (int t = 0; t < num_triangles(); ++t) {
		const auto& tri = triangles_[t];
		if (tri.edge[0] == tri.edge[1] || tri.edge[1] == tri.edge[2] || tri.edge[0] == tri.edge[2])
			throw InputError("triangle " + std::to_string(t) + " repeats an edge");
		for (int k = 0; k < 3; ++k) {
			const Side o = tri.across[k];
			if (o.tri == t) throw InputError("edge glued to its own triangle");
			const auto& nb = triangles_[o.tri];
			// orientation-reversing gluing: k+1 <-> o+2, k+2 <-> o+1
			if (tri.vertex[next3(k)] != nb.vertex[prev3(o.side)] || tri.vertex[prev3(k)] != nb.vertex[next3(o.side)])
				throw InputError("inconsistent vertex labels across an edge");
		}
		for (int v : tri.vertex)
			if (v < 0 || v >= punctures_) throw InputError("vertex label out of range");
	}
	if (euler_characteristic() != 2 - 2 * genus_)
		throw InputError("Euler characteristic does not match the genus");
}

namespace {

struct Builder {
	std::vector<Triangle> tris;
	int next_edge = 0;
	int next_vertex = 0;

	int fresh_edge() { return next_edge++; }

	void add(std::array<int, 3> v, std::array<int, 3> e) {
		Triangle t;
		t.vertex = v;
		t.edge = e;
		tris.push_back(t);
	}

	// Insert a new vertex inside triangle t, splitting it into three.
	void stellar(int t) {
		const Triangle old = tris[t];
		const int x = next_vertex++;
		const int xa = fresh_edge(), xb = fresh_edge(), xc = fresh_edge();
		const int A = old.vertex[0], B = old.vertex[1], C = old.vertex[2];
		Triangle t0;
		t0.vertex = {x, B, C};
		t0.edge = {old.edge[0], xc, xb};
		tris[t] = t0;
		add({x, C, A}, {old.edge[1], xa, xc});
		add({x, A, B}, {old.edge[2], xb, xa});
	}

	int least_crowded_triangle() const {
		std::map<int, int> degree;
		for (const auto& t : tris)
			for (int v : t.vertex) ++degree[v];
		int best = 0, best_score = 1 << 30;
		for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
			int score = 0;
			for (int v : tris[i].vertex) score = std::max(score, degree[v]);
			if (score < best_score) {
				best_score = score;
				best = i;
			}
		}
		return best;
	}
};

} // namespace

Triangulation build_standard_triangulation(int genus, int punctures) {
	if (genus < 0 || punctures < 1)
		throw PreconditionError("need genus >= 0 and at least one marked point");
	if (2 - 2 * genus - punctures >= 0)
		throw PreconditionError("surface must have negative Euler characteristic (2 - 2g - n < 0)");

	Builder b;
	if (genus == 0) {
		b.next_vertex = 3;
		b.next_edge = 3;
		b.add({0, 1, 2}, {0, 1, 2});
		b.add({0, 2, 1}, {0, 2, 1});
	} else {
		// Fan triangulation of the 4g-gon a1 b1 a1^-1 b1^-1 ... from polygon corner 0.
		const int sides = 4 * genus;
		b.next_vertex = 1;
		auto side_label = [](int s) { return 2 * (s / 4) + (s % 2); };
		auto diagonal = [genus](int i) { return 2 * genus + (i - 2); };
		for (int i = 1; i <= sides - 2; ++i) {
			const int opp0 = side_label(i);
			const int opp1 = (i + 1 == sides - 1) ? side_label(sides - 1) : diagonal(i + 1);
			const int opp2 = (i == 1) ? side_label(0) : diagonal(i);
			b.add({0, 0, 0}, {opp0, opp1, opp2});
		}
		b.next_edge = 6 * genus - 3;
	}
	while (b.next_vertex < punctures) b.stellar(b.least_crowded_triangle());
	return Triangulation(genus, punctures, std::move(b.tris));
}

} // namespace arcx
