#include "arcx/hyp.hpp"

#include "arcx/error.hpp"
#include "arcx/unicorn.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace arcx {

// ---------------------------------------------------------------------------
// Graph

int Graph::add_vertex() {
	adj_.emplace_back();
	rows_.clear();
	return size() - 1;
}

void Graph::add_edge(int u, int v) {
	if (u == v) return;
	if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) return;
	adj_[u].push_back(v);
	adj_[v].push_back(u);
	rows_.clear();
}

std::vector<int> Graph::distances_from_set(const std::vector<int>& sources) const {
	std::vector<int> dist(adj_.size(), -1);
	std::deque<int> queue;
	for (int s : sources)
		if (dist[s] < 0) {
			dist[s] = 0;
			queue.push_back(s);
		}
	while (!queue.empty()) {
		const int u = queue.front();
		queue.pop_front();
		for (int w : adj_[u])
			if (dist[w] < 0) {
				dist[w] = dist[u] + 1;
				queue.push_back(w);
			}
	}
	return dist;
}

const std::vector<int>& Graph::distances_from(int u) {
	auto it = rows_.find(u);
	if (it == rows_.end()) it = rows_.emplace(u, distances_from_set({u})).first;
	return it->second;
}

int Graph::distance(int u, int v) { return distances_from(u)[v]; }

int Graph::diameter_of(const std::vector<int>& vertices) {
	int best = 0;
	for (int u : vertices) {
		const auto& row = distances_from(u);
		for (int v : vertices) {
			if (row[v] < 0) return -1;
			best = std::max(best, row[v]);
		}
	}
	return best;
}

bool Graph::induces_connected(const std::vector<int>& vertices) const {
	if (vertices.empty()) return true;
	const std::set<int> inside(vertices.begin(), vertices.end());
	std::set<int> seen{vertices.front()};
	std::vector<int> stack{vertices.front()};
	while (!stack.empty()) {
		const int u = stack.back();
		stack.pop_back();
		for (int w : adj_[u])
			if (inside.count(w) && seen.insert(w).second) stack.push_back(w);
	}
	return seen.size() == inside.size();
}

std::vector<int> geodesic_interval(Graph& G, int x, int y) {
	const auto dx = G.distances_from(x);
	const auto& dy = G.distances_from(y);
	const int d = dx[y];
	std::vector<int> out;
	if (d < 0) return out;
	for (int v = 0; v < G.size(); ++v)
		if (dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == d) out.push_back(v);
	return out;
}

GuessingReport guessing_geodesics_check(Graph& G, const Family& A, int M, const std::vector<int>& points, long samples,
                                        std::uint64_t seed) {
	GuessingReport r;
	r.M = M;
	r.sampled = samples > 0;
	std::map<std::pair<int, int>, std::vector<int>> cache;
	auto family = [&](int x, int y) -> const std::vector<int>& {
		auto it = cache.find({x, y});
		if (it != cache.end()) return it->second;
		auto set = A(x, y);
		std::sort(set.begin(), set.end());
		set.erase(std::unique(set.begin(), set.end()), set.end());
		return cache.emplace(std::pair{x, y}, std::move(set)).first->second;
	};
	auto fail = [&](bool& flag, const std::string& why) {
		if (flag && r.witness.empty()) r.witness = why;
		flag = false;
	};
	auto check_pair = [&](int x, int y) {
		const auto& a = family(x, y);
		++r.pairs;
		if (!std::binary_search(a.begin(), a.end(), x) || !std::binary_search(a.begin(), a.end(), y) ||
		    !G.induces_connected(a))
			fail(r.family_ok, "A(" + std::to_string(x) + "," + std::to_string(y) + ") is not a connected set containing both");
		const int d = G.distance(x, y);
		if (d < 0 || d > 1) return;
		const int diam = G.diameter_of(a);
		r.worst_diameter = std::max(r.worst_diameter, diam < 0 ? 1 << 20 : diam);
		if (diam < 0 || diam > M)
			fail(r.hypothesis1, "diam A(" + std::to_string(x) + "," + std::to_string(y) + ") = " + std::to_string(diam));
	};
	auto check_triple = [&](int x, int y, int z) {
		const auto& axy = family(x, y);
		std::vector<int> c = family(x, z);
		const auto& azy = family(z, y);
		c.insert(c.end(), azy.begin(), azy.end());
		const auto dist = G.distances_from_set(c);
		++r.triples;
		for (int p : axy) {
			const int d = dist[p];
			r.worst_distance = std::max(r.worst_distance, d < 0 ? 1 << 20 : d);
			if (d < 0 || d > M) {
				fail(r.hypothesis2, "vertex " + std::to_string(p) + " of A(" + std::to_string(x) + "," + std::to_string(y) +
				                        ") is " + (d < 0 ? std::string("unreachable") : std::to_string(d)) +
				                        " from A(x,z) u A(z,y) with z = " + std::to_string(z));
				break;
			}
		}
	};

	if (!r.sampled) {
		for (int x : points)
			for (int y : points) check_pair(x, y);
		for (int x : points)
			for (int y : points)
				for (int z : points) check_triple(x, y, z);
		return r;
	}
	std::mt19937_64 rng(seed);
	const auto pick = [&]() { return points[rng() % points.size()]; };
	const std::set<int> inside(points.begin(), points.end());
	for (long s = 0; s < samples; ++s) {
		const int x = pick();
		std::vector<int> close;
		for (int w : G.neighbors(x))
			if (inside.count(w)) close.push_back(w);
		check_pair(x, close.empty() ? x : close[rng() % close.size()]);
		const int y = pick(), z = pick();
		check_pair(x, y);
		check_triple(x, y, z);
	}
	return r;
}

// ---------------------------------------------------------------------------
// Triangle arcs

namespace {

int end_tri(const Triangulation& T, const RawPath& p) {
	int cur = p.start_tri;
	for (int s : p.exits) cur = T.across(Side{cur, s}).tri;
	return cur;
}

RawPath oriented_path(const Triangulation& T, const Arc& a, int from) {
	const RawPath p = raw_path(T, a);
	return a.endpoints()[0] == from ? p : reversed(T, p);
}

// first ends at m in (tri, corner); turn around m crossing the incident edges,
// starting through the side next3(corner) + offset, until second's start corner.
std::optional<RawPath> turn(const Triangulation& T, const RawPath& first, const RawPath& second, int offset,
                            bool at_least_one) {
	RawPath out;
	out.start_tri = first.start_tri;
	out.start_corner = first.start_corner;
	out.exits = first.exits;
	int cur = end_tri(T, first), c = first.end_corner;
	int exit_side = offset == 0 ? next3(c) : prev3(c);
	for (int steps = 0;; ++steps) {
		if (cur == second.start_tri && c == second.start_corner && (steps > 0 || !at_least_one)) break;
		if (steps > 3 * T.num_triangles()) return std::nullopt;
		const Side s{cur, exit_side};
		const Side o = T.across(s);
		out.exits.push_back(exit_side);
		c = T.corner_across(s, c);
		cur = o.tri;
		exit_side = o.side == next3(c) ? prev3(c) : next3(c);
	}
	out.exits.insert(out.exits.end(), second.exits.begin(), second.exits.end());
	out.end_corner = second.end_corner;
	return out;
}

} // namespace

std::vector<Arc> pushed_off_arcs(const Triangulation& T, const Arc& first, int u, const Arc& second, int w) {
	const RawPath a = oriented_path(T, first, u);
	const int m = first.endpoints()[0] == u ? first.endpoints()[1] : first.endpoints()[0];
	const RawPath b = oriented_path(T, second, m);
	std::vector<Arc> out;
	for (int offset = 0; offset < 2; ++offset)
		for (bool at_least_one : {false, true}) {
			const auto raw = turn(T, a, b, offset, at_least_one);
			if (!raw) continue;
			try {
				const Arc c = canonicalize(T, *raw);
				if (c.has_endpoint(u) && c.has_endpoint(w) && std::find(out.begin(), out.end(), c) == out.end())
					out.push_back(c);
			} catch (const InputError&) { // non-essential or self-crossing candidate
			}
		}
	return out;
}

bool bounds_disk(const Triangulation& T, const std::array<Arc, 3>& arcs) {
	const CutSurface cut = cut_along(T, {arcs[0], arcs[1], arcs[2]});
	for (int c = 0; c < cut.num_components(); ++c)
		if (cut.is_disk(c)) return true;
	return false;
}

TriangleArcBuilder::TriangleArcBuilder(const Triangulation& T, const MarkedGraph& g, int search_weight)
    : T_(&T), g_(&g), W_(search_weight) {
	const auto tri = least_triangle(g);
	if (!tri) throw PreconditionError("triangle arcs need a triangle in the graph");
	tri_ = *tri;
	for (int i = 0; i < 3; ++i) pts_[i] = g.point_of(tri_[i]);
}

const TriangleArcs& TriangleArcBuilder::of(const Arc& alpha) {
	if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
	const Triangulation& T = *T_;
	auto on_edge = [&](const Arc& a, int k) { return a.has_endpoint(pts_[k]) && a.has_endpoint(pts_[(k + 1) % 3]); };
	int k = 0; // tree edges e_k, e_{k+1} through v_{k+1}
	bool fixed = false;
	for (int i = 0; i < 3; ++i)
		if (!alpha.is_loop() && on_edge(alpha, i)) {
			k = i;
			fixed = true;
		}
	const int u = pts_[k], m = pts_[(k + 1) % 3], w = pts_[(k + 2) % 3];

	std::optional<std::array<Arc, 3>> found;
	auto complete = [&](const Arc& t1, const Arc& t2) {
		for (const Arc& p : pushed_off_arcs(T, t1, u, t2, w)) {
			if (!disjoint(T, p, alpha) || !disjoint(T, p, t1) || !disjoint(T, p, t2)) continue;
			std::array<Arc, 3> arcs;
			arcs[k] = t1;
			arcs[(k + 1) % 3] = t2;
			arcs[(k + 2) % 3] = p;
			if (!bounds_disk(T, arcs)) continue;
			found = arcs;
			return true;
		}
		return false;
	};
	auto second = [&](const Arc& t1) {
		return find_disjoint_arc(T, {alpha, t1}, m, w, W_, [&](const Arc& t2) { return complete(t1, t2); }).has_value();
	};
	if (fixed)
		second(alpha);
	else
		find_disjoint_arc(T, {alpha}, u, m, W_, second);
	if (!found) throw DefectError("no triangle arcs within the search weight for " + alpha.to_string());
	TriangleArcs ta{alpha, tri_, *found};
	return memo_.emplace(alpha, ta).first->second;
}

// ---------------------------------------------------------------------------
// Guess-sets

GuessSet guess_set(TriangleArcBuilder& tb, ArcComplex& cx, const Arc& alpha, const Arc& beta) {
	if (cx.kind() != ComplexKind::A) throw PreconditionError("guess-sets live in A(S, Gamma)");
	const MarkedGraph& g = cx.graph();
	if (!compatible(alpha, g) || !compatible(beta, g)) throw PreconditionError("arcs must be compatible with the graph");
	const Triangulation& T = cx.triangulation();
	GuessSet gs;
	gs.alpha = alpha;
	gs.beta = beta;
	gs.weight_bound = cx.max_weight();
	const auto a = tb.of(alpha).arcs;
	const auto b = tb.of(beta).arcs;
	std::set<Arc> prime;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int v : a[i].endpoints())
				for (int u : b[j].endpoints()) {
					if (v == u) continue;
					const UnicornSequence seq = unicorn_arcs(T, a[i], v, b[j], u);
					for (const Arc& e : seq.elements) {
						if (!compatible(e, g)) continue;
						gs.provenance.push_back(PrimeElement{e, i, j, v, u});
						prime.insert(e);
					}
				}
	gs.prime_set.assign(prime.begin(), prime.end());
	std::set<Arc> full = prime;
	for (const Arc& p : gs.prime_set)
		for (const Arc& n : cx.neighbors(p)) full.insert(n);
	full.insert(alpha);
	full.insert(beta);
	gs.full_set.assign(full.begin(), full.end());
	return gs;
}

// ---------------------------------------------------------------------------
// Window

ComplexWindow::ComplexWindow(ArcComplex& cx) : cx_(&cx) {
	arcs_ = cx.vertices();
	graph_ = Graph(static_cast<int>(arcs_.size()));
	for (size_t i = 0; i < arcs_.size(); ++i) index_[arcs_[i]] = static_cast<int>(i);
	for (size_t i = 0; i < arcs_.size(); ++i)
		for (const Arc& n : cx.neighbors(arcs_[i])) {
			const int j = index_.at(n);
			if (static_cast<int>(i) < j) graph_.add_edge(static_cast<int>(i), j);
		}
}

int ComplexWindow::index(const Arc& a) {
	if (auto it = index_.find(a); it != index_.end()) return it->second;
	if (!compatible(a, cx_->graph())) throw PreconditionError("window arcs must be compatible with the graph");
	const int id = graph_.add_vertex();
	const size_t light = cx_->vertices().size();
	for (const Arc& n : cx_->neighbors(a)) graph_.add_edge(id, index_.at(n));
	for (size_t i = light; i < arcs_.size(); ++i)
		if (adjacent(cx_->triangulation(), a, arcs_[i], cx_->kind())) graph_.add_edge(id, static_cast<int>(i));
	arcs_.push_back(a);
	index_[a] = id;
	return id;
}

namespace {

std::vector<int> indices(ComplexWindow& w, const std::vector<Arc>& arcs) {
	std::vector<int> out;
	for (const Arc& a : arcs) out.push_back(w.index(a));
	return out;
}

} // namespace

ThinnessReport verify_thinness(TriangleArcBuilder& tb, ComplexWindow& w, const Arc& alpha, const Arc& beta,
                               const Arc& gamma) {
	ArcComplex& cx = w.complex();
	const GuessSet ab = guess_set(tb, cx, alpha, beta), ag = guess_set(tb, cx, alpha, gamma),
	               gb = guess_set(tb, cx, gamma, beta);
	auto worst_of = [&](const std::vector<Arc>& targets, const std::vector<Arc>& sources, Arc* witness) {
		const auto t = indices(w, targets);
		const auto dist = w.graph().distances_from_set(indices(w, sources));
		int worst = -1; // unreachable counts as infinite
		for (size_t i = 0; i < t.size(); ++i) {
			const int d = dist[t[i]] < 0 ? 1 << 20 : dist[t[i]];
			if (d > worst) {
				worst = d;
				if (witness) *witness = targets[i];
			}
		}
		return worst >= (1 << 20) ? -1 : std::max(worst, 0);
	};
	ThinnessReport r;
	std::vector<Arc> p = ag.prime_set;
	p.insert(p.end(), gb.prime_set.begin(), gb.prime_set.end());
	r.prime_max_distance = worst_of(ab.prime_set, p, nullptr);
	std::vector<Arc> c = ag.full_set;
	c.insert(c.end(), gb.full_set.begin(), gb.full_set.end());
	r.checked = static_cast<int>(ab.full_set.size());
	r.max_distance = worst_of(ab.full_set, c, &r.worst);
	r.pass = r.max_distance >= 0 && r.max_distance <= 2 && r.prime_max_distance >= 0 && r.prime_max_distance <= 1;
	return r;
}

DiameterReport verify_diam_bound(TriangleArcBuilder& tb, ComplexWindow& w, const Arc& alpha, const Arc& beta) {
	ArcComplex& cx = w.complex();
	if (!(alpha == beta) && !adjacent(cx.triangulation(), alpha, beta, ComplexKind::A))
		throw PreconditionError("diameter bound needs arcs at distance at most one");
	const auto diam_gamma = graph_diameter(gamma_zero(cx.graph()));
	if (!diam_gamma) throw PreconditionError("diameter bound needs a connected Gamma_0");
	const auto full = guess_set(tb, cx, alpha, beta).full_set;
	const auto idx = indices(w, full);
	DiameterReport r;
	r.bound = 2 * *diam_gamma + 9;
	r.size = static_cast<int>(full.size());
	r.diameter = w.graph().diameter_of(idx);
	r.pass = r.diameter >= 0 && r.diameter <= r.bound;
	return r;
}

QiReport qi_sample(ComplexWindow& a_window, ComplexWindow& ma_window, int samples, std::uint64_t seed) {
	if (a_window.complex().kind() != ComplexKind::A || ma_window.complex().kind() != ComplexKind::MA)
		throw PreconditionError("qi_sample needs an A window and an MA window");
	const auto& V = a_window.complex().vertices();
	if (V.size() < 2) throw PreconditionError("window has fewer than two arcs");
	QiReport r;
	std::mt19937_64 rng(seed);
	while (r.pairs < samples) {
		const Arc& x = V[rng() % V.size()];
		const Arc& y = V[rng() % V.size()];
		if (x == y) continue;
		++r.pairs;
		const int da = a_window.distance(x, y), dm = ma_window.distance(x, y);
		const bool ok = da >= 1 && dm >= da && dm <= 6 * da;
		if (!ok) {
			if (r.witness.empty())
				r.witness = x.to_string() + " " + y.to_string() + ": d_A=" + std::to_string(da) + " d_MA=" + std::to_string(dm);
			++r.failures;
			continue;
		}
		if (dm * r.max_ratio_denominator > r.max_ratio_numerator * da) {
			r.max_ratio_numerator = dm;
			r.max_ratio_denominator = da;
		}
	}
	return r;
}

GuessingReport verify_guessing(TriangleArcBuilder& tb, ComplexWindow& w, const std::vector<Arc>& points, long samples,
                               std::uint64_t seed) {
	ArcComplex& cx = w.complex();
	const auto diam_gamma = graph_diameter(gamma_zero(cx.graph()));
	if (!diam_gamma) throw PreconditionError("guessing check needs a connected Gamma_0");
	const Family family = [&](int x, int y) { return indices(w, guess_set(tb, cx, w.arc(x), w.arc(y)).full_set); };
	const auto idx = indices(w, points);
	return guessing_geodesics_check(w.graph(), family, 2 * *diam_gamma + 9, idx, samples, seed);
}

DeltaEstimate estimate_delta(const Ball& b, int max_exact, long samples, std::uint64_t seed) {
	const int n = static_cast<int>(b.vertices.size());
	Graph G(n);
	for (auto [i, j] : b.adjacency) G.add_edge(i, j);
	std::vector<std::vector<int>> d(n);
	for (int i = 0; i < n; ++i) d[i] = G.distances_from_set({i});
	DeltaEstimate r;
	r.radius = b.radius;
	r.vertices = n;
	int worst = 0; // twice the defect
	auto quad = [&](int x, int y, int z, int w) {
		int s[3] = {d[x][y] + d[z][w], d[x][z] + d[y][w], d[x][w] + d[y][z]};
		std::sort(s, s + 3);
		worst = std::max(worst, s[2] - s[1]);
		++r.quadruples;
	};
	if (n <= max_exact) {
		for (int x = 0; x < n; ++x)
			for (int y = x + 1; y < n; ++y)
				for (int z = y + 1; z < n; ++z)
					for (int w = z + 1; w < n; ++w) quad(x, y, z, w);
	} else {
		r.exact = false;
		std::mt19937_64 rng(seed);
		for (long s = 0; s < samples; ++s)
			quad(static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<int>(rng() % n),
			     static_cast<int>(rng() % n));
	}
	r.delta = worst / 2.0;
	return r;
}

} // namespace arcx
