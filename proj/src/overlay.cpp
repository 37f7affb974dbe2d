#include "arcx/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace arcx {

namespace {

// Exact arithmetic in the Farey tessellation (the universal cover of the
// ideal structure with zero shears). A passage of a strand through an edge is
// ranked by the height at which the strand's geodesic lift crosses that edge,
// after moving the edge to the imaginary axis. Geodesics realize minimal
// position, so the ranks give a drawing with no removable bigons.
using i128 = __int128;

struct Proj {
	i128 p, q;
};

struct Frame {
	std::array<Proj, 3> corner;
};

Frame standard_frame(int k) {
	// corner k+1 at infinity, corner k+2 at 0, corner k at 1
	Frame f;
	f.corner[next3(k)] = {1, 0};
	f.corner[prev3(k)] = {0, 1};
	f.corner[k] = {1, 1};
	return f;
}

Frame step(const Triangulation& T, int tri, const Frame& f, int k, int* next_tri) {
	const Proj P = f.corner[next3(k)], Q = f.corner[prev3(k)], R = f.corner[k];
	const i128 det = P.p * Q.q - P.q * Q.p;
	const i128 x = (R.p * Q.q - R.q * Q.p) / det;
	const i128 y = (P.p * R.q - P.q * R.p) / det;
	const Side o = T.across(Side{tri, k});
	Frame g;
	g.corner[prev3(o.side)] = P;
	g.corner[next3(o.side)] = Q;
	g.corner[o.side] = {x * P.p - y * Q.p, x * P.q - y * Q.q};
	*next_tri = o.tri;
	return g;
}

i128 magnitude(const Proj& a) { return std::max(a.p < 0 ? -a.p : a.p, a.q < 0 ? -a.q : a.q); }

// Squared crossing height -A*B of the lift through crossing `i`, as a fraction.
struct Height {
	i128 num = 0, den = 1;
	bool exact = true; // numerator and denominator below 2^60
};

Height passage_height(const Triangulation& T, const Strand& st, int i) {
	const Side exit{st[i].tri, st[i].out};
	const Side upper = T.edge(T.edge_of(exit)).sides[1];
	// place the sides[1] triangle of the edge in the standard frame
	const int j = upper == exit ? i : i + 1;
	const Frame base = standard_frame(upper.side);
	Proj ends[2];
	i128 largest = 0;
	for (int dir : {-1, 1}) {
		Frame f = base;
		int tri = st[j].tri;
		for (int s = j;; s += dir) {
			const int leave = dir > 0 ? st[s].out : st[s].in;
			if (is_corner_code(leave)) {
				ends[dir > 0] = f.corner[leave - 3];
				break;
			}
			f = step(T, tri, f, leave, &tri);
			for (const Proj& c : f.corner) largest = std::max(largest, magnitude(c));
			if (largest > (static_cast<i128>(1) << 60)) throw DefectError("arc too long for overlay arithmetic");
		}
	}
	Height h;
	h.num = -(ends[0].p * ends[1].p);
	h.den = ends[0].q * ends[1].q;
	if (h.den < 0) {
		h.num = -h.num;
		h.den = -h.den;
	}
	h.exact = largest < (static_cast<i128>(1) << 30);
	return h;
}

int compare_heights(const Height& a, const Height& b) {
	if (a.exact && b.exact) {
		const i128 l = a.num * b.den, r = b.num * a.den;
		return l < r ? -1 : (l > r ? 1 : 0);
	}
	const long double la = static_cast<long double>(a.num) / static_cast<long double>(a.den);
	const long double lb = static_cast<long double>(b.num) / static_cast<long double>(b.den);
	return la < lb ? -1 : (la > lb ? 1 : 0);
}

struct Pt {
	double x, y;
};

Pt place(const BoundaryPoint& p, int count_on_side) {
	constexpr double third = 2.0 * std::numbers::pi / 3.0;
	double angle;
	if (p.block % 2 == 0) {
		angle = third * (p.block / 2);
	} else {
		const int corner_before = (p.block - 1) / 2;
		const double m = count_on_side + 1.0;
		// deterministic jitter keeps three chords from meeting in one point
		const double jitter = 0.1 * (std::fmod(p.minor * 0.6180339887 + p.block * 0.3141592653, 1.0) - 0.5);
		angle = third * (corner_before + (p.minor + 1.0 + jitter) / m);
	}
	return {std::cos(angle), std::sin(angle)};
}

bool strictly_between(long lo, long x, long hi) { return lo < x && x < hi; }

} // namespace

long relative_key(const BoundaryPoint& p, int corner) {
	const int block = (p.block - 2 * corner + 6) % 6;
	return static_cast<long>(block) * (1L << 24) + p.minor;
}

Overlay::Overlay(const Triangulation& T, std::vector<Strand> strands) : T_(&T), strands_(std::move(strands)) {
	const int E = T.num_edges();
	struct Passage {
		int strand;
		int crossing;
		Height height;
	};
	std::vector<std::vector<Passage>> on_edge(E);
	for (int s = 0; s < static_cast<int>(strands_.size()); ++s) {
		const Strand& st = strands_[s];
		for (int i = 0; i + 1 < static_cast<int>(st.size()); ++i) {
			const Side exit{st[i].tri, st[i].out};
			on_edge[T.edge_of(exit)].push_back(Passage{s, i, passage_height(T, st, i)});
		}
	}
	// rank[s][i]: position of crossing i of strand s in its edge's sides[1]
	// frame, which runs from corner k+1 (infinity, greatest height) to k+2
	std::vector<std::vector<int>> rank(strands_.size());
	for (size_t s = 0; s < strands_.size(); ++s) rank[s].assign(strands_[s].size(), -1);
	edge_points_.assign(E, 0);
	for (int e = 0; e < E; ++e) {
		auto& views = on_edge[e];
		std::sort(views.begin(), views.end(), [](const Passage& a, const Passage& b) {
			const int r = compare_heights(a.height, b.height);
			if (r != 0) return r > 0;
			return std::pair{a.strand, a.crossing} < std::pair{b.strand, b.crossing};
		});
		edge_points_[e] = static_cast<int>(views.size());
		for (int r = 0; r < static_cast<int>(views.size()); ++r) rank[views[r].strand][views[r].crossing] = r;
	}

	auto side_point = [&](int tri, int side, int strand, int crossing) {
		const int e = T.triangle(tri).edge[side];
		const int r = rank[strand][crossing];
		const bool frame = T.edge(e).sides[1] == Side{tri, side};
		return BoundaryPoint{2 * next3(side) + 1, frame ? r : edge_points_[e] - 1 - r};
	};

	by_triangle_.assign(T.num_triangles(), {});
	chord_index_.resize(strands_.size());
	for (int s = 0; s < static_cast<int>(strands_.size()); ++s) {
		const Strand& st = strands_[s];
		for (int j = 0; j < static_cast<int>(st.size()); ++j) {
			const Segment& g = st[j];
			Chord c;
			c.strand = s;
			c.seg = j;
			c.in = is_corner_code(g.in) ? BoundaryPoint{2 * (g.in - 3), 0} : side_point(g.tri, g.in, s, j - 1);
			c.out = is_corner_code(g.out) ? BoundaryPoint{2 * (g.out - 3), 0} : side_point(g.tri, g.out, s, j);
			chord_index_[s].push_back(static_cast<int>(chords_.size()));
			by_triangle_[g.tri].push_back(static_cast<int>(chords_.size()));
			chords_.push_back(c);
		}
	}

	for (int t = 0; t < T.num_triangles(); ++t) {
		const auto& ids = by_triangle_[t];
		auto count_on = [&](const BoundaryPoint& p) {
			if (p.block % 2 == 0) return 0;
			const int side = prev3((p.block - 1) / 2);
			return points_on(Side{t, side});
		};
		for (size_t a = 0; a < ids.size(); ++a) {
			for (size_t b = a + 1; b < ids.size(); ++b) {
				const Chord& A = chords_[ids[a]];
				const Chord& B = chords_[ids[b]];
				const long a0 = A.in.key(), a1 = A.out.key(), b0 = B.in.key(), b1 = B.out.key();
				if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) continue;
				const long lo = std::min(a0, a1), hi = std::max(a0, a1);
				if (strictly_between(lo, b0, hi) == strictly_between(lo, b1, hi)) continue;
				const Pt p0 = place(A.in, count_on(A.in)), p1 = place(A.out, count_on(A.out));
				const Pt q0 = place(B.in, count_on(B.in)), q1 = place(B.out, count_on(B.out));
				const double rx = p1.x - p0.x, ry = p1.y - p0.y, sx = q1.x - q0.x, sy = q1.y - q0.y;
				const double den = rx * sy - ry * sx;
				const double ta = ((q0.x - p0.x) * sy - (q0.y - p0.y) * sx) / den;
				const double tb = ((q0.x - p0.x) * ry - (q0.y - p0.y) * rx) / den;
				IntersectionPoint ip{t, A.strand, A.seg, ta, B.strand, B.seg, tb};
				if (ip.strand_a > ip.strand_b) {
					std::swap(ip.strand_a, ip.strand_b);
					std::swap(ip.seg_a, ip.seg_b);
					std::swap(ip.t_a, ip.t_b);
				}
				points_.push_back(ip);
			}
		}
	}
}

int Overlay::points_on(Side s) const { return edge_points_[T_->edge_of(s)]; }

int Overlay::crossing_count(int a, int b) const {
	if (a > b) std::swap(a, b);
	int n = 0;
	for (const auto& p : points_)
		if (p.strand_a == a && p.strand_b == b) ++n;
	return n;
}

} // namespace arcx
