#include "arcx/gamma.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace arcx {

MarkedGraph::MarkedGraph(std::vector<std::string> names, std::vector<std::pair<int, int>> edges,
                         std::vector<int> embedding)
    : names_(std::move(names)), embedding_(std::move(embedding)) {
	const int n = num_vertices();
	if (static_cast<int>(embedding_.size()) != n) throw InputError("every vertex needs a marked point");
	std::set<int> used;
	for (int p : embedding_) {
		if (p < 0) throw InputError("negative marked point in embedding");
		if (!used.insert(p).second) throw InputError("embedding is not injective (marked point " + std::to_string(p) + ")");
	}
	adj_.assign(n, {});
	std::set<std::pair<int, int>> seen;
	for (auto [u, v] : edges) {
		if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge refers to an unknown vertex");
		if (u == v) throw InputError("loop at vertex " + names_[u] + "; the graph must be simplicial");
		if (u > v) std::swap(u, v);
		if (!seen.insert({u, v}).second) throw InputError("repeated edge " + names_[u] + "-" + names_[v]);
		edges_.push_back({u, v});
		adj_[u].push_back(v);
		adj_[v].push_back(u);
	}
	for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool MarkedGraph::adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

std::optional<int> MarkedGraph::vertex_at(int p) const {
	for (int v = 0; v < num_vertices(); ++v)
		if (embedding_[v] == p) return v;
	return std::nullopt;
}

std::optional<int> MarkedGraph::edge_between_points(int p, int q) const {
	const auto u = vertex_at(p), v = vertex_at(q);
	if (!u || !v || *u == *v) return std::nullopt;
	const auto key = std::minmax(*u, *v);
	for (int e = 0; e < num_edges(); ++e)
		if (edges_[e] == std::pair{key.first, key.second}) return e;
	return std::nullopt;
}

int MarkedGraph::points_needed() const {
	int m = 0;
	for (int p : embedding_) m = std::max(m, p + 1);
	return m;
}

MarkedGraph gamma_zero(const MarkedGraph& g) {
	std::vector<int> index(g.num_vertices(), -1);
	std::vector<std::string> names;
	std::vector<int> emb;
	for (int v = 0; v < g.num_vertices(); ++v) {
		if (g.neighbors(v).empty()) continue;
		index[v] = static_cast<int>(names.size());
		names.push_back(g.name(v));
		emb.push_back(g.point_of(v));
	}
	std::vector<std::pair<int, int>> edges;
	for (auto [u, v] : g.edges()) edges.push_back({index[u], index[v]});
	return MarkedGraph(std::move(names), std::move(edges), std::move(emb));
}

bool edge_complement_condition(const MarkedGraph& g) {
	for (auto [u, v] : g.edges()) {
		bool found = false;
		for (auto [x, y] : g.edges())
			if (x != u && x != v && y != u && y != v) found = true;
		if (!found) return false;
	}
	return true;
}

std::optional<std::array<int, 3>> least_triangle(const MarkedGraph& g) {
	for (int a = 0; a < g.num_vertices(); ++a)
		for (int b : g.neighbors(a)) {
			if (b <= a) continue;
			for (int c : g.neighbors(b))
				if (c > b && g.adjacent(a, c)) return std::array{a, b, c};
		}
	return std::nullopt;
}

bool has_triangle(const MarkedGraph& g) { return least_triangle(g).has_value(); }

std::optional<std::pair<int, int>> bipartite_parts(const MarkedGraph& g) {
	std::vector<int> color(g.num_vertices(), -1);
	int sizes[2] = {0, 0};
	for (int s = 0; s < g.num_vertices(); ++s) {
		if (color[s] >= 0) continue;
		// components are 2-coloured independently; smaller side goes to part 1
		std::vector<int> comp;
		color[s] = 0;
		std::queue<int> q;
		q.push(s);
		int local[2] = {0, 0};
		while (!q.empty()) {
			const int x = q.front();
			q.pop();
			comp.push_back(x);
			++local[color[x]];
			for (int y : g.neighbors(x)) {
				if (color[y] < 0) {
					color[y] = 1 - color[x];
					q.push(y);
				} else if (color[y] == color[x]) {
					return std::nullopt;
				}
			}
		}
		sizes[0] += std::max(local[0], local[1]);
		sizes[1] += std::min(local[0], local[1]);
	}
	return std::pair{sizes[0], sizes[1]};
}

namespace {

std::vector<int> bfs(const MarkedGraph& g, int s) {
	std::vector<int> d(g.num_vertices(), -1);
	std::queue<int> q;
	d[s] = 0;
	q.push(s);
	while (!q.empty()) {
		const int x = q.front();
		q.pop();
		for (int y : g.neighbors(x))
			if (d[y] < 0) {
				d[y] = d[x] + 1;
				q.push(y);
			}
	}
	return d;
}

bool is_even_cycle(const MarkedGraph& g) {
	if (g.num_vertices() < 4 || g.num_vertices() % 2 || g.num_edges() != g.num_vertices() || !is_connected(g)) return false;
	for (int v = 0; v < g.num_vertices(); ++v)
		if (g.neighbors(v).size() != 2) return false;
	return true;
}

bool is_tree(const MarkedGraph& g) { return g.num_vertices() > 0 && is_connected(g) && g.num_edges() == g.num_vertices() - 1; }

} // namespace

bool is_connected(const MarkedGraph& g) {
	if (g.num_vertices() == 0) return true;
	const auto d = bfs(g, 0);
	return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::optional<int> graph_diameter(const MarkedGraph& g) {
	int best = 0;
	for (int s = 0; s < g.num_vertices(); ++s) {
		for (int x : bfs(g, s)) {
			if (x < 0) return std::nullopt;
			best = std::max(best, x);
		}
	}
	return best;
}

std::optional<int> compatible(const Arc& a, const MarkedGraph& g) {
	if (a.is_loop()) return std::nullopt;
	return g.edge_between_points(a.endpoints()[0], a.endpoints()[1]);
}

EndpointFilter compatible_filter(const MarkedGraph& g, int num_points, const std::vector<int>& avoid) {
	EndpointFilter f(num_points);
	for (auto [u, v] : g.edges()) {
		const int p = g.point_of(u), q = g.point_of(v);
		if (p >= num_points || q >= num_points) continue;
		if (std::find(avoid.begin(), avoid.end(), p) != avoid.end()) continue;
		if (std::find(avoid.begin(), avoid.end(), q) != avoid.end()) continue;
		f.allow(p, q);
	}
	return f;
}

ConnectivityVerdict connectivity_verdict(const MarkedGraph& g, int genus) {
	const MarkedGraph g0 = gamma_zero(g);
	const int n0 = g0.num_vertices();
	if (n0 >= 5) {
		if (edge_complement_condition(g0)) return {Connectivity::Connected, "every edge complement contains an edge"};
		return {Connectivity::Disconnected, "some edge complement contains no edge"};
	}
	if (n0 <= 3) return {Connectivity::Disconnected, "Gamma_0 has at most three vertices"};
	const bool two_disjoint = g0.num_edges() == 2;
	if (two_disjoint && genus >= 1) return {Connectivity::Connected, "two disjoint edges on a surface of positive genus"};
	if (two_disjoint) return {Connectivity::Disconnected, "two disjoint edges on the sphere"};
	return {Connectivity::Disconnected, "four vertices, not two disjoint edges"};
}

HyperbolicityVerdict hyperbolicity_verdict(const MarkedGraph& g, int genus) {
	if (connectivity_verdict(g, genus).value != Connectivity::Connected)
		return {Hyperbolicity::Unknown, "not connected"};
	const MarkedGraph g0 = gamma_zero(g);
	if (is_connected(g0) && has_triangle(g0)) return {Hyperbolicity::Hyperbolic, "Gamma_0 connected with a triangle"};
	if (const auto parts = bipartite_parts(g0)) {
		if (parts->second >= 4) return {Hyperbolicity::NotHyperbolic, "bipartite with both parts of size at least four"};
		if (is_tree(g0)) return {Hyperbolicity::NotHyperbolic, "Gamma_0 is a tree"};
		if (is_even_cycle(g0)) return {Hyperbolicity::NotHyperbolic, "Gamma_0 is an even cycle"};
	}
	return {Hyperbolicity::Unknown, "triangle-free and not covered by the bipartite criterion"};
}

std::string to_string(Connectivity c) {
	switch (c) {
	case Connectivity::Connected: return "Connected";
	case Connectivity::Disconnected: return "Disconnected";
	default: return "Unknown";
	}
}

std::string to_string(Hyperbolicity h) {
	switch (h) {
	case Hyperbolicity::Hyperbolic: return "Hyperbolic";
	case Hyperbolicity::NotHyperbolic: return "NotHyperbolic";
	default: return "Unknown";
	}
}

} // namespace arcx
