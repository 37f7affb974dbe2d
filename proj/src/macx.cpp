#include "arcx/macx.hpp"

#include "arcx/error.hpp"
#include "arcx/unicorn.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace arcx {

std::string to_string(ComplexKind k) { return k == ComplexKind::MA ? "MA" : "A"; }

bool adjacent(const Triangulation& T, const Arc& a, const Arc& b, ComplexKind kind) {
	if (a == b) return false;
	return kind == ComplexKind::MA ? completely_disjoint(T, a, b) : disjoint(T, a, b);
}

void PathCertificate::append(const Arc& a, const std::string& how) {
	arcs.push_back(a);
	annotations.push_back(how);
}

void PathCertificate::splice(const PathCertificate& other) {
	if (other.arcs.empty()) return;
	if (arcs.empty()) {
		*this = other;
		return;
	}
	if (!(arcs.back() == other.arcs.front())) throw DefectError("spliced path does not start at our last arc");
	for (size_t i = 1; i < other.arcs.size(); ++i) append(other.arcs[i], other.annotations[i]);
}

ValidationResult validate_certificate(const Triangulation& T, const PathCertificate& c, const MarkedGraph& g) {
	if (c.arcs.empty()) return {false, 0, "empty certificate"};
	for (size_t i = 0; i < c.arcs.size(); ++i) {
		const Arc& a = c.arcs[i];
		if (!compatible(a, g)) return {false, static_cast<int>(i), "arc " + a.to_string() + " is not compatible"};
		if (!is_embedded(T, a)) return {false, static_cast<int>(i), "arc " + a.to_string() + " is not embedded"};
		if (i == 0) continue;
		const Arc& prev = c.arcs[i - 1];
		if (!adjacent(T, prev, a, c.kind))
			return {false, static_cast<int>(i),
			        prev.to_string() + " and " + a.to_string() + " are not adjacent in " + to_string(c.kind)};
	}
	return {};
}

// ---------------------------------------------------------------------------
// Bounded complex

ArcComplex::ArcComplex(const Triangulation& T, const MarkedGraph& g, ComplexKind kind, int max_weight)
    : T_(&T), g_(&g), kind_(kind), W_(max_weight) {
	if (max_weight < 0) throw InputError("weight bound must be non-negative");
}

std::vector<Arc> neighbors(const Triangulation& T, const Arc& a, const MarkedGraph& g, int max_weight,
                           ComplexKind kind) {
	const CutSurface cut = cut_along(T, {a});
	std::vector<int> avoid;
	if (kind == ComplexKind::MA) avoid.assign(a.endpoints().begin(), a.endpoints().end());
	auto out = enumerate_arcs(cut, max_weight, compatible_filter(g, T.num_vertices(), avoid));
	std::erase(out, a);
	return out;
}

const std::vector<Arc>& ArcComplex::neighbors(const Arc& a) {
	auto it = memo_.find(a);
	if (it == memo_.end()) it = memo_.emplace(a, arcx::neighbors(*T_, a, *g_, W_, kind_)).first;
	return it->second;
}

const std::vector<Arc>& ArcComplex::vertices() {
	if (!all_) all_ = enumerate_arcs(cut_along(*T_, {}), W_, compatible_filter(*g_, T_->num_vertices()));
	return *all_;
}

std::optional<int> Ball::index_of(const Arc& a) const {
	for (size_t i = 0; i < vertices.size(); ++i)
		if (vertices[i] == a) return static_cast<int>(i);
	return std::nullopt;
}

Ball ball(ArcComplex& cx, const Arc& base, int radius, int max_vertices) {
	if (radius < 0) throw InputError("radius must be non-negative");
	if (!compatible(base, cx.graph())) throw PreconditionError("ball base is not compatible with the graph");
	if (base.weight() > cx.max_weight()) throw PreconditionError("ball base exceeds the weight bound");
	Ball b;
	b.base = base;
	b.radius = radius;
	b.weight_bound = cx.max_weight();
	b.kind = cx.kind();
	std::map<Arc, int> index;
	b.vertices.push_back(base);
	b.depth.push_back(0);
	index[base] = 0;
	std::vector<Arc> layer{base};
	for (int d = 1; d <= radius && !layer.empty(); ++d) {
		std::set<Arc> next;
		for (const Arc& a : layer)
			for (const Arc& n : cx.neighbors(a))
				if (!index.count(n)) next.insert(n);
		layer.clear();
		for (const Arc& n : next) {
			if (static_cast<int>(b.vertices.size()) >= max_vertices) {
				b.exact = false;
				break;
			}
			index[n] = static_cast<int>(b.vertices.size());
			b.vertices.push_back(n);
			b.depth.push_back(d);
			layer.push_back(n);
		}
		if (!b.exact) break;
	}
	// induced adjacency, including edges between vertices on the outer layer
	for (size_t i = 0; i < b.vertices.size(); ++i) {
		for (const Arc& n : cx.neighbors(b.vertices[i])) {
			auto it = index.find(n);
			if (it != index.end() && static_cast<int>(i) < it->second) b.adjacency.emplace_back(static_cast<int>(i), it->second);
		}
	}
	std::sort(b.adjacency.begin(), b.adjacency.end());
	return b;
}

std::optional<int> distance_in_ball(const Ball& b, const Arc& x, const Arc& y) {
	const auto ix = b.index_of(x), iy = b.index_of(y);
	if (!ix || !iy) return std::nullopt;
	std::vector<std::vector<int>> adj(b.vertices.size());
	for (auto [i, j] : b.adjacency) {
		adj[i].push_back(j);
		adj[j].push_back(i);
	}
	std::vector<int> dist(b.vertices.size(), -1);
	std::deque<int> queue{*ix};
	dist[*ix] = 0;
	while (!queue.empty()) {
		const int u = queue.front();
		queue.pop_front();
		if (u == *iy) return dist[u];
		for (int w : adj[u])
			if (dist[w] < 0) {
				dist[w] = dist[u] + 1;
				queue.push_back(w);
			}
	}
	return std::nullopt;
}

std::optional<PathCertificate> shortest_path(ArcComplex& cx, const Arc& from, const Arc& to, int max_length) {
	std::map<Arc, Arc> parent;
	parent.emplace(from, from);
	std::vector<Arc> layer{from};
	bool found = from == to;
	for (int d = 0; d < max_length && !found && !layer.empty(); ++d) {
		std::vector<Arc> next;
		for (const Arc& a : layer) {
			for (const Arc& n : cx.neighbors(a)) {
				if (parent.count(n)) continue;
				parent.emplace(n, a);
				next.push_back(n);
				if (n == to) found = true;
			}
			if (found) break;
		}
		layer = std::move(next);
	}
	if (!found) return std::nullopt;
	std::vector<Arc> rev{to};
	while (!(rev.back() == from)) rev.push_back(parent.at(rev.back()));
	PathCertificate c;
	c.kind = cx.kind();
	for (auto it = rev.rbegin(); it != rev.rend(); ++it) c.append(*it, c.arcs.empty() ? "start" : "search");
	return c;
}

// ---------------------------------------------------------------------------
// Bridges

namespace {

using PointPair = std::pair<int, int>;

int common(const PointPair& a, const PointPair& b) {
	int n = 0;
	for (int p : {a.first, a.second})
		if (p == b.first || p == b.second) ++n;
	return n;
}

PointPair points_of(const Arc& a) { return {a.endpoints()[0], a.endpoints()[1]}; }

std::vector<PointPair> graph_edges(const MarkedGraph& g) {
	std::vector<PointPair> out;
	for (auto [u, v] : g.edges()) {
		const int p = g.point_of(u), q = g.point_of(v);
		out.emplace_back(std::min(p, q), std::max(p, q));
	}
	return out;
}

void require_bridge_graph(const MarkedGraph& g) {
	if (gamma_zero(g).num_vertices() < 5) throw PreconditionError("bridges need at least five non-isolated vertices");
	if (!edge_complement_condition(g)) throw PreconditionError("bridges need the edge complement condition");
}

void require_pair(const Triangulation& T, const Arc& alpha, const Arc& beta, const MarkedGraph& g, int shared) {
	if (!compatible(alpha, g) || !compatible(beta, g)) throw PreconditionError("arcs must be compatible with the graph");
	if (alpha == beta) throw PreconditionError("arcs must be distinct");
	if (alpha.shared_endpoints(beta) != shared)
		throw PreconditionError(shared == 1 ? "arcs must share exactly one endpoint" : "arcs must share both endpoints");
	if (!disjoint(T, alpha, beta)) throw PreconditionError("arcs must be disjoint");
}

// Pairwise disjoint arcs realizing `pairs`, each disjoint from `base`.
// Depth-first over candidates in arc order, least first.
std::optional<std::vector<Arc>> realize(const Triangulation& T, std::vector<Arc> base, const std::vector<PointPair>& pairs,
                                        size_t i, int W) {
	if (i == pairs.size()) return std::vector<Arc>{};
	const CutSurface cut = cut_along(T, base);
	std::optional<std::vector<Arc>> rest;
	auto found = find_disjoint_arc(cut, pairs[i].first, pairs[i].second, W, [&](const Arc& a) {
		if (i + 1 == pairs.size()) {
			rest = std::vector<Arc>{};
			return true;
		}
		auto extended = base;
		extended.push_back(a);
		rest = realize(T, extended, pairs, i + 1, W);
		return rest.has_value();
	});
	if (!found) return std::nullopt;
	rest->insert(rest->begin(), *found);
	return rest;
}

PathCertificate through(const Arc& alpha, const std::vector<Arc>& middle, const Arc& beta, const std::string& tag) {
	PathCertificate c;
	c.append(alpha, "start");
	for (const Arc& a : middle) c.append(a, tag);
	c.append(beta, tag);
	return c;
}

} // namespace

PathCertificate bridge_shared_endpoint(const Triangulation& T, const Arc& alpha, const Arc& beta, const MarkedGraph& g,
                                       const BridgeOptions& opt) {
	require_bridge_graph(g);
	require_pair(T, alpha, beta, g, 1);
	const PointPair e = points_of(alpha), f = points_of(beta);
	const auto edges = graph_edges(g);
	const int W = opt.search_weight;

	// an edge avoiding e and f: one arc completely disjoint from both
	for (const auto& h : edges) {
		if (common(h, e) || common(h, f)) continue;
		auto gam = realize(T, {alpha, beta}, {h}, 0, W);
		if (!gam) throw DefectError("no auxiliary arc for an edge avoiding both endpoints pairs within the search weight");
		return through(alpha, *gam, beta, "shared-endpoint bridge, avoiding edge");
	}

	std::vector<PointPair> e_side, f_side; // e' avoids e, f' avoids f
	for (const auto& h : edges) {
		if (!common(h, e)) e_side.push_back(h);
		if (!common(h, f)) f_side.push_back(h);
	}
	if (e_side.empty() || f_side.empty()) throw DefectError("edge complement condition failed inside a bridge");

	for (const auto& a : e_side)
		for (const auto& b : f_side) {
			if (common(a, b)) continue;
			auto gam = realize(T, {alpha, beta}, {a, b}, 0, W);
			if (!gam) throw DefectError("could not realize disjoint auxiliary arcs within the search weight");
			return through(alpha, *gam, beta, "shared-endpoint bridge, two auxiliary arcs");
		}

	for (const auto& a : e_side)
		for (const auto& b : f_side)
			for (const auto& h : edges) {
				if (common(h, e) != 1 || common(h, f) != 1 || common(h, a) || common(h, b)) continue;
				auto gam = realize(T, {alpha, beta}, {a, h, b}, 0, W);
				if (!gam) continue;
				return through(alpha, *gam, beta, "shared-endpoint bridge, three auxiliary arcs");
			}
	throw DefectError("no case of the shared-endpoint bridge applies");
}

PathCertificate bridge_same_endpoints(const Triangulation& T, const Arc& alpha, const Arc& beta, const MarkedGraph& g,
                                      const BridgeOptions& opt) {
	require_bridge_graph(g);
	require_pair(T, alpha, beta, g, 2);
	const PointPair e = points_of(alpha);
	const auto edges = graph_edges(g);
	const int W = opt.search_weight;
	const CutSurface cut = cut_along(T, {alpha, beta});

	if (cut.num_components() == 1) {
		for (const auto& h : edges) {
			if (common(h, e)) continue;
			auto gam = find_disjoint_arc(cut, h.first, h.second, W);
			if (!gam) throw DefectError("complement is connected but no auxiliary arc within the search weight");
			return through(alpha, {*gam}, beta, "same-endpoints bridge, connected complement");
		}
		throw DefectError("edge complement condition failed inside a bridge");
	}
	for (const auto& h : edges) {
		if (common(h, e) || cut.component_of(h.first) != cut.component_of(h.second)) continue;
		auto gam = find_disjoint_arc(cut, h.first, h.second, W);
		if (!gam) throw DefectError("edge inside one component but no auxiliary arc within the search weight");
		return through(alpha, {*gam}, beta, "same-endpoints bridge, edge inside a component");
	}

	// gamma1 ~ f1 misses alpha, gamma2 ~ f2 misses beta and gamma1. Pairs are
	// tried by branch: f2 avoiding e and f1, then f2 meeting f1, then f2 meeting e.
	for (int branch = 0; branch < 3; ++branch) {
		for (const auto& f1 : edges) {
			if (common(f1, e)) continue;
			for (const auto& f2 : edges) {
				if (f2 == f1 || f2 == e) continue;
				const int with_e = common(f2, e), with_f1 = common(f2, f1);
				if (with_e + with_f1 > 1 || (branch == 0) != (with_e + with_f1 == 0) || (branch == 2) != (with_e == 1))
					continue;
				std::optional<Arc> g2;
				const auto g1 = find_disjoint_arc(T, {alpha}, f1.first, f1.second, W, [&](const Arc& c1) {
					g2 = find_disjoint_arc(T, {beta}, f2.first, f2.second, W,
					                       [&](const Arc& c2) { return disjoint(T, c1, c2); });
					return g2.has_value();
				});
				if (!g1) continue;
				PathCertificate c;
				c.append(alpha, "start");
				if (branch == 0) {
					const std::string tag = "same-endpoints bridge, completely disjoint auxiliary arcs";
					c.append(*g1, tag);
					c.append(*g2, tag);
					c.append(beta, tag);
				} else if (branch == 1) {
					c.append(*g1, "same-endpoints bridge, auxiliary arcs sharing an endpoint");
					c.splice(bridge_shared_endpoint(T, *g1, *g2, g, opt));
					c.append(beta, "same-endpoints bridge, auxiliary arcs sharing an endpoint");
				} else {
					c.append(*g1, "same-endpoints bridge, second auxiliary arc meets alpha");
					c.append(*g2, "same-endpoints bridge, second auxiliary arc meets alpha");
					c.splice(bridge_shared_endpoint(T, *g2, beta, g, opt));
				}
				return c;
			}
		}
	}
	throw DefectError("no case of the same-endpoints bridge applies within the search weight");
}

namespace {

PathCertificate bridge_any(const Triangulation& T, const Arc& a, const Arc& b, const MarkedGraph& g,
                           const BridgeOptions& opt) {
	if (a == b) return PathCertificate{ComplexKind::MA, {a}, {"start"}};
	if (completely_disjoint(T, a, b)) return through(a, {}, b, "direct");
	if (a.shared_endpoints(b) == 1) return bridge_shared_endpoint(T, a, b, g, opt);
	return bridge_same_endpoints(T, a, b, g, opt);
}

} // namespace

PathCertificate connect(const Triangulation& T, const Arc& alpha, const Arc& beta, const MarkedGraph& g,
                        const BridgeOptions& opt) {
	if (!compatible(alpha, g) || !compatible(beta, g)) throw PreconditionError("arcs must be compatible with the graph");
	PathCertificate c;
	c.append(alpha, "start");
	if (alpha == beta) return c;
	if (completely_disjoint(T, alpha, beta)) {
		c.append(beta, "direct");
		return c;
	}
	require_bridge_graph(g);

	const int v1 = alpha.endpoints()[0], v2 = alpha.endpoints()[1];
	const auto beta2 = find_disjoint_arc(T, {beta}, v1, v2, opt.search_weight);
	if (!beta2) throw DefectError("no arc with alpha's endpoints disjoint from beta within the search weight");
	const UnicornSequence seq = unicorn_arcs(T, alpha, v1, *beta2, v2);
	for (size_t i = 0; i + 1 < seq.elements.size(); ++i) {
		c.splice(bridge_any(T, seq.elements[i], seq.elements[i + 1], g, opt));
		c.annotations.back() = "unicorn backbone via " + c.annotations.back();
	}
	if (!(*beta2 == beta)) c.splice(bridge_any(T, *beta2, beta, g, opt));

	const int backbone = static_cast<int>(seq.elements.size()) - 1;
	if (c.length() > 6 * backbone + 6) throw DefectError("connect certificate exceeds its length bound");
	return c;
}

bool separates(const Triangulation& T, const Arc& alpha, const Arc& beta, int p, int q) {
	if (alpha == beta) throw PreconditionError("separation needs two distinct arcs");
	if (alpha.shared_endpoints(beta) != 2) throw PreconditionError("separation needs arcs with the same endpoints");
	if (!disjoint(T, alpha, beta)) throw PreconditionError("separation needs disjoint arcs");
	if (alpha.has_endpoint(p) || alpha.has_endpoint(q)) throw PreconditionError("points must lie off the arcs");
	const CutSurface cut = cut_along(T, {alpha, beta});
	return cut.component_of(p) != cut.component_of(q);
}

} // namespace arcx
