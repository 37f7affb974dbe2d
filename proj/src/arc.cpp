#include "arcx/arc.hpp"

#include "arcx/overlay.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace arcx {

int Arc::shared_endpoints(const Arc& other) const {
	int n = 0;
	for (int p : endpoints_)
		if (other.has_endpoint(p)) ++n;
	if (is_loop() || other.is_loop()) return std::min(n, 1);
	return n;
}

std::string Arc::to_string() const {
	std::ostringstream os;
	os << "[" << endpoints_[0] << "-" << endpoints_[1] << ":";
	if (is_edge()) {
		os << "e" << edge_;
	} else {
		for (size_t i = 0; i < crossings_.size(); ++i)
			os << (i ? " " : "") << (crossings_[i].forward ? "+" : "-") << crossings_[i].edge;
	}
	os << "]";
	return os.str();
}

std::strong_ordering operator<=>(const Arc& a, const Arc& b) {
	if (auto c = a.weight() <=> b.weight(); c != 0) return c;
	if (auto c = a.crossings_ <=> b.crossings_; c != 0) return c;
	if (auto c = a.edge_ <=> b.edge_; c != 0) return c;
	return a.endpoints_ <=> b.endpoints_;
}

size_t ArcHash::operator()(const Arc& a) const {
	size_t h = std::hash<int>()(a.endpoints()[0] * 131 + a.endpoints()[1]) ^ (std::hash<int>()(a.edge()) << 1);
	for (const auto& c : a.crossings()) h = h * 1000003u + static_cast<size_t>(c.edge * 2 + (c.forward ? 1 : 0));
	return h;
}

RawPath tighten(const Triangulation& T, RawPath raw) {
	if (raw.start_tri < 0 || raw.start_tri >= T.num_triangles() || raw.start_corner < 0 || raw.start_corner > 2 ||
	    raw.end_corner < 0 || raw.end_corner > 2)
		throw InputError("raw path has an invalid start or end");

	// Cancel immediate re-crossings of the same edge.
	std::vector<Side> stack;
	int cur = raw.start_tri;
	for (int s : raw.exits) {
		if (s < 0 || s > 2) throw InputError("raw path exit side out of range");
		if (!stack.empty() && T.across(stack.back()) == Side{cur, s}) {
			cur = stack.back().tri;
			stack.pop_back();
		} else {
			stack.push_back(Side{cur, s});
			cur = T.across(Side{cur, s}).tri;
		}
	}

	int start_tri = raw.start_tri, start_corner = raw.start_corner, end_corner = raw.end_corner;
	size_t first = 0;
	bool changed = true;
	while (changed && first < stack.size()) {
		changed = false;
		// leaving the start vertex through an incident edge: slide around the vertex
		if (stack[first].side != start_corner) {
			start_corner = T.corner_across(stack[first], start_corner);
			start_tri = T.across(stack[first]).tri;
			++first;
			changed = true;
			if (first == stack.size()) break;
		}
		const Side entered = T.across(stack.back());
		if (entered.side != end_corner) {
			end_corner = T.corner_across(entered, end_corner);
			stack.pop_back();
			changed = true;
		}
	}

	RawPath out;
	out.start_tri = start_tri;
	out.start_corner = start_corner;
	out.end_corner = end_corner;
	for (size_t i = first; i < stack.size(); ++i) out.exits.push_back(stack[i].side);
	if (out.exits.empty() && out.start_corner == out.end_corner)
		throw NonEssentialArc("path is a loop bounding a disk");
	return out;
}

namespace {

std::vector<Crossing> crossings_of(const Triangulation& T, const RawPath& p) {
	std::vector<Crossing> cs;
	int cur = p.start_tri;
	for (int s : p.exits) {
		const Side side{cur, s};
		cs.push_back(Crossing{T.edge_of(side), T.is_forward(side)});
		cur = T.across(side).tri;
	}
	return cs;
}

int end_triangle(const Triangulation& T, const RawPath& p) {
	int cur = p.start_tri;
	for (int s : p.exits) cur = T.across(Side{cur, s}).tri;
	return cur;
}

} // namespace

RawPath reversed(const Triangulation& T, const RawPath& path) {
	RawPath r;
	r.start_tri = end_triangle(T, path);
	r.start_corner = path.end_corner;
	r.end_corner = path.start_corner;
	int cur = path.start_tri;
	std::vector<int> entries;
	for (int s : path.exits) {
		const Side o = T.across(Side{cur, s});
		entries.push_back(o.side);
		cur = o.tri;
	}
	r.exits.assign(entries.rbegin(), entries.rend());
	return r;
}

Arc arc_from_tight_path(const Triangulation& T, const RawPath& tight) {
	Arc a;
	const int end_tri = end_triangle(T, tight);
	const int u = T.vertex_at(tight.start_tri, tight.start_corner);
	const int v = T.vertex_at(end_tri, tight.end_corner);
	if (tight.exits.empty()) {
		const int side = 3 - tight.start_corner - tight.end_corner;
		a.edge_ = T.edge_of(Side{tight.start_tri, side});
		a.endpoints_ = {std::min(u, v), std::max(u, v)};
		return a;
	}
	auto fwd = crossings_of(T, tight);
	std::vector<Crossing> bwd;
	for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) bwd.push_back(Crossing{it->edge, !it->forward});
	if (u < v || (u == v && fwd <= bwd)) {
		a.endpoints_ = {u, v};
		a.crossings_ = std::move(fwd);
	} else {
		a.endpoints_ = {v, u};
		a.crossings_ = std::move(bwd);
	}
	return a;
}

RawPath raw_path(const Triangulation& T, const Arc& a) {
	RawPath p;
	if (a.is_edge()) {
		const EdgeRecord& rec = T.edge(a.edge());
		const Side s = rec.sides[0];
		p.start_tri = s.tri;
		p.start_corner = next3(s.side);
		p.end_corner = prev3(s.side);
		if (rec.vertices[0] > rec.vertices[1]) std::swap(p.start_corner, p.end_corner);
		return p;
	}
	const auto& cs = a.crossings();
	const Side first = T.edge(cs[0].edge).sides[cs[0].forward ? 0 : 1];
	p.start_tri = first.tri;
	p.start_corner = first.side;
	Side entered{};
	for (const auto& c : cs) {
		const Side exit = T.edge(c.edge).sides[c.forward ? 0 : 1];
		p.exits.push_back(exit.side);
		entered = T.across(exit);
	}
	p.end_corner = entered.side;
	return p;
}

Strand strand_of(const Triangulation& T, const RawPath& path) {
	Strand st;
	int cur = path.start_tri;
	int in = corner_code(path.start_corner);
	for (int s : path.exits) {
		st.push_back(Segment{cur, in, s});
		const Side o = T.across(Side{cur, s});
		cur = o.tri;
		in = o.side;
	}
	st.push_back(Segment{cur, in, corner_code(path.end_corner)});
	return st;
}

Strand strand_of(const Triangulation& T, const Arc& a) { return strand_of(T, raw_path(T, a)); }

Strand reversed(const Strand& s) {
	Strand r(s.rbegin(), s.rend());
	for (auto& g : r) std::swap(g.in, g.out);
	return r;
}

Strand strand_from(const Triangulation& T, const Arc& a, int from) {
	if (!a.has_endpoint(from)) throw PreconditionError("basepoint is not an endpoint of the arc");
	Strand s = strand_of(T, a);
	if (a.endpoints()[0] == from) return s;
	return reversed(s);
}

Arc edge_arc(const Triangulation& T, int edge) {
	if (edge < 0 || edge >= T.num_edges()) throw InputError("edge id out of range");
	const Side s = T.edge(edge).sides[0];
	RawPath p;
	p.start_tri = s.tri;
	p.start_corner = next3(s.side);
	p.end_corner = prev3(s.side);
	return arc_from_tight_path(T, p);
}

int self_intersections(const Triangulation& T, const RawPath& tight) {
	Overlay ov(T, {strand_of(T, tight)});
	return static_cast<int>(ov.intersections().size());
}

bool is_embedded(const Triangulation& T, const Arc& a) {
	if (a.weight() < 2) return true;
	return self_intersections(T, raw_path(T, a)) == 0;
}

Arc canonicalize(const Triangulation& T, const RawPath& raw) {
	const RawPath tight = tighten(T, raw);
	if (tight.exits.size() >= 2 && self_intersections(T, tight) != 0)
		throw NotEmbeddedArc("tight representative has self-intersections");
	return arc_from_tight_path(T, tight);
}

Arc arc_from_crossings(const Triangulation& T, int p, int q, const std::vector<int>& edges,
                       const std::optional<std::vector<bool>>& forward, std::optional<int> edge) {
	if (p < 0 || q < 0 || p >= T.num_vertices() || q >= T.num_vertices())
		throw InputError("arc endpoint is not a marked point");
	if (edges.empty()) {
		if (!edge) throw InputError("weight-0 arc needs an \"edge\" id");
		Arc a = edge_arc(T, *edge);
		if (a.endpoints() != std::array{std::min(p, q), std::max(p, q)})
			throw InputError("edge endpoints do not match the arc endpoints");
		return a;
	}
	if (forward && forward->size() != edges.size()) throw InputError("directions and crossings differ in length");
	for (int e : edges)
		if (e < 0 || e >= T.num_edges()) throw InputError("crossing edge id out of range");

	std::vector<RawPath> found;
	// Try both start sides of the first edge and follow the sequence.
	std::function<void(size_t, int, RawPath&)> follow = [&](size_t i, int tri, RawPath& path) {
		if (i == edges.size()) {
			for (int c = 0; c < 3; ++c) {
				if (T.vertex_at(tri, c) != q) continue;
				RawPath done = path;
				done.end_corner = c;
				// the last segment must end at the corner opposite its entry side
				int cur = done.start_tri;
				Side last{};
				for (int s : done.exits) {
					last = T.across(Side{cur, s});
					cur = last.tri;
				}
				if (last.side != c) continue;
				found.push_back(done);
			}
			return;
		}
		for (int k = 0; k < 3; ++k) {
			const Side s{tri, k};
			if (T.edge_of(s) != edges[i]) continue;
			if (forward && T.is_forward(s) != (*forward)[i]) continue;
			path.exits.push_back(k);
			follow(i + 1, T.across(s).tri, path);
			path.exits.pop_back();
		}
	};
	for (int side = 0; side < 2; ++side) {
		const Side s = T.edge(edges[0]).sides[side];
		if (T.vertex_at(s.tri, s.side) != p) continue;
		RawPath path;
		path.start_tri = s.tri;
		path.start_corner = s.side;
		follow(0, s.tri, path);
	}
	if (found.empty()) throw InputError("crossing sequence does not describe a path between the endpoints");
	const Arc first = canonicalize(T, found[0]);
	for (size_t i = 1; i < found.size(); ++i)
		if (!(canonicalize(T, found[i]) == first)) throw InputError("crossing sequence is ambiguous; give directions");
	if (first.weight() != static_cast<int>(edges.size())) throw InputError("crossing sequence is not tight");
	return first;
}

int intersection_number(const Triangulation& T, const Arc& a, const Arc& b) {
	if (a == b) return 0;
	Overlay ov(T, {strand_of(T, a), strand_of(T, b)});
	return ov.crossing_count(0, 1);
}

bool disjoint(const Triangulation& T, const Arc& a, const Arc& b) { return intersection_number(T, a, b) == 0; }

bool completely_disjoint(const Triangulation& T, const Arc& a, const Arc& b) {
	for (int p : a.endpoints())
		if (b.has_endpoint(p)) return false;
	return disjoint(T, a, b);
}

} // namespace arcx
