#include "arcx/cut.hpp"

#include "arcx/overlay.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arcx {

namespace {

struct UnionFind {
	std::vector<int> parent;
	explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	int find(int x) {
		while (parent[x] != x) x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Event {
	int chord;
	BoundaryPoint here;
	BoundaryPoint other;
};

} // namespace

CutSurface::CutSurface(const Triangulation& T, std::vector<Arc> arcs) : T_(&T), arcs_(std::move(arcs)) {
	std::sort(arcs_.begin(), arcs_.end());
	arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
	std::vector<Strand> strands;
	for (const Arc& a : arcs_) strands.push_back(strand_of(T, a));
	const Overlay ov(T, strands);
	if (!ov.intersections().empty()) throw PreconditionError("cannot cut along arcs that intersect");

	const int F = T.num_triangles();
	corner_sectors_.assign(3 * F, {});
	std::vector<std::vector<int>> side_intervals(3 * F);

	for (int t = 0; t < F; ++t) {
		std::array<std::vector<Event>, 6> by_block;
		for (int id : ov.chords_in(t)) {
			const Chord& ch = ov.chords()[id];
			by_block[ch.in.block].push_back(Event{id, ch.in, ch.out});
			by_block[ch.out.block].push_back(Event{id, ch.out, ch.in});
		}
		for (int c = 0; c < 3; ++c) {
			std::sort(by_block[2 * c].begin(), by_block[2 * c].end(), [c](const Event& a, const Event& b) {
				return relative_key(a.other, c) > relative_key(b.other, c);
			});
		}
		for (int b = 1; b < 6; b += 2) {
			std::sort(by_block[b].begin(), by_block[b].end(),
			          [](const Event& a, const Event& b) { return a.here.minor < b.here.minor; });
		}

		// Cyclic boundary word: atoms separated by chord ends (events).
		struct Item {
			bool event;
			int id; // atom id, or index into `events`
		};
		std::vector<Item> word;
		std::vector<Event> events;
		for (int block = 0; block < 6; ++block) {
			const bool corner = block % 2 == 0;
			const int where = corner ? block / 2 : prev3((block - 1) / 2);
			auto new_atom = [&](int index) {
				Atom a;
				a.sector = corner;
				a.tri = t;
				a.where = where;
				a.index = index;
				atoms_.push_back(a);
				const int id = static_cast<int>(atoms_.size()) - 1;
				(corner ? corner_sectors_ : side_intervals)[3 * t + where].push_back(id);
				word.push_back(Item{false, id});
			};
			new_atom(0);
			int index = 0;
			for (const Event& e : by_block[block]) {
				word.push_back(Item{true, static_cast<int>(events.size())});
				events.push_back(e);
				new_atom(++index);
			}
		}

		const int W = static_cast<int>(word.size());
		std::vector<int> gap_of_atom(atoms_.size(), -1);
		std::vector<int> gap_before(events.size()), gap_after(events.size());
		int gaps = 0;
		if (events.empty()) {
			for (const Item& it : word) gap_of_atom[it.id] = 0;
			gaps = 1;
		} else {
			int first_event = 0;
			while (!word[first_event].event) ++first_event;
			int gap = -1;
			for (int i = 0; i < W; ++i) {
				const Item& it = word[(first_event + i) % W];
				if (it.event) {
					if (gap >= 0) gap_before[it.id] = gap;
					gap = gaps++;
					gap_after[it.id] = gap;
				} else {
					gap_of_atom[it.id] = gap;
				}
			}
			gap_before[word[first_event].id] = gap;
		}

		UnionFind uf(gaps);
		// A region's boundary leaves the circle at a chord end and resumes
		// after the chord's other end.
		for (size_t e = 0; e < events.size(); ++e) {
			for (size_t f = 0; f < events.size(); ++f) {
				if (f == e || events[f].chord != events[e].chord) continue;
				uf.unite(gap_before[e], gap_after[f]);
			}
		}
		std::vector<int> region_of_gap(gaps, -1);
		for (const Item& it : word) {
			if (it.event) continue;
			const int root = uf.find(gap_of_atom[it.id]);
			if (region_of_gap[root] < 0) {
				region_of_gap[root] = static_cast<int>(regions_.size());
				Region r;
				r.tri = t;
				regions_.push_back(r);
			}
			Atom& a = atoms_[it.id];
			a.region = region_of_gap[root];
			Region& r = regions_[a.region];
			if (a.sector) {
				r.sectors[a.where].push_back(it.id);
			} else {
				if (r.interval[a.where] >= 0) throw DefectError("region meets a side twice");
				r.interval[a.where] = it.id;
			}
		}
	}

	UnionFind comps(static_cast<int>(regions_.size()));
	std::vector<std::pair<int, int>> glues;
	for (int e = 0; e < T.num_edges(); ++e) {
		const Side a = T.edge(e).sides[0], b = T.edge(e).sides[1];
		const auto& ia = side_intervals[3 * a.tri + a.side];
		const auto& ib = side_intervals[3 * b.tri + b.side];
		if (ia.size() != ib.size()) throw DefectError("edge sides disagree on crossing count");
		const int m = static_cast<int>(ia.size()) - 1;
		for (int j = 0; j <= m; ++j) {
			const int x = ia[j], y = ib[m - j];
			atoms_[x].partner = y;
			atoms_[y].partner = x;
			comps.unite(atoms_[x].region, atoms_[y].region);
			glues.push_back({x, y});
		}
	}

	region_component_.assign(regions_.size(), -1);
	std::vector<int> label(regions_.size(), -1);
	for (int r = 0; r < static_cast<int>(regions_.size()); ++r) {
		const int root = comps.find(r);
		if (label[root] < 0) label[root] = num_components_++;
		region_component_[r] = label[root];
	}
	component_regions_.assign(num_components_, 0);
	component_glues_.assign(num_components_, 0);
	points_.assign(num_components_, {});
	for (int r = 0; r < static_cast<int>(regions_.size()); ++r) ++component_regions_[region_component_[r]];
	for (const auto& g : glues) ++component_glues_[region_component_[atoms_[g.first].region]];

	std::vector<char> on_arc(T.num_vertices(), 0);
	for (const Arc& a : arcs_)
		for (int p : a.endpoints()) on_arc[p] = 1;
	point_component_.assign(T.num_vertices(), -1);
	for (int t = 0; t < F; ++t) {
		for (int c = 0; c < 3; ++c) {
			const int p = T.vertex_at(t, c);
			if (on_arc[p] || point_component_[p] >= 0) continue;
			const int comp = region_component_[atoms_[corner_sectors_[3 * t + c][0]].region];
			point_component_[p] = comp;
			points_[comp].push_back(p);
		}
	}
	for (auto& pts : points_) std::sort(pts.begin(), pts.end());
}

std::optional<int> CutSurface::component_of(int p) const {
	if (p < 0 || p >= T_->num_vertices()) throw InputError("marked point out of range");
	if (point_component_[p] < 0) return std::nullopt;
	return point_component_[p];
}

int CutSurface::euler_characteristic(int comp) const {
	return component_regions_[comp] - component_glues_[comp] + static_cast<int>(points_[comp].size());
}

CutSurface cut_along(const Triangulation& T, const std::vector<Arc>& arcs) { return CutSurface(T, arcs); }

EndpointFilter EndpointFilter::all(int num_points, bool loops) {
	EndpointFilter f(num_points);
	for (int p = 0; p < num_points; ++p)
		for (int q = loops ? p : p + 1; q < num_points; ++q) f.allow(p, q);
	return f;
}

bool EndpointFilter::any_from(int p) const {
	for (int q = p; q < n_; ++q)
		if (allowed(p, q)) return true;
	return false;
}

namespace {

// Depth-first walk over normal paths inside the complement. Each path starts
// at a corner sector of p and ends at a corner of q >= p with (p, q) allowed;
// `emit` receives paths with between min_cross and max_cross crossings.
class ComplementWalk {
public:
	ComplementWalk(const CutSurface& cut, const EndpointFilter& filter, int min_cross, int max_cross,
	               std::function<void(const RawPath&)> emit)
	    : cut_(cut), T_(cut.triangulation()), filter_(filter), min_(min_cross), max_(max_cross), emit_(std::move(emit)) {}

	void run() {
		for (int t = 0; t < T_.num_triangles(); ++t) {
			for (int c = 0; c < 3; ++c) {
				p_ = T_.vertex_at(t, c);
				if (!filter_.any_from(p_)) continue;
				for (int s : cut_.sectors_at(t, c)) {
					const auto& R = cut_.regions()[cut_.atoms()[s].region];
					path_.start_tri = t;
					path_.start_corner = c;
					path_.exits.clear();
					if (min_ == 0) {
						for (int c2 = 0; c2 < 3; ++c2) {
							if (c2 == c || R.sectors[c2].empty()) continue;
							const int q = T_.vertex_at(t, c2);
							if (q < p_ || !filter_.allowed(p_, q)) continue;
							path_.end_corner = c2;
							emit_(path_);
						}
					}
					if (max_ >= 1 && R.interval[c] >= 0) descend(R.interval[c]);
				}
			}
		}
	}

private:
	void descend(int interval) {
		const auto& atoms = cut_.atoms();
		const auto& I = atoms[interval];
		const auto& J = atoms[I.partner];
		const auto& R = cut_.regions()[J.region];
		const int k = J.where;
		path_.exits.push_back(I.where);
		const int depth = static_cast<int>(path_.exits.size());
		if (depth >= min_ && !R.sectors[k].empty()) {
			const int q = T_.vertex_at(J.tri, k);
			if (q >= p_ && filter_.allowed(p_, q)) {
				path_.end_corner = k;
				emit_(path_);
			}
		}
		if (depth < max_) {
			for (int side : {next3(k), prev3(k)})
				if (R.interval[side] >= 0) descend(R.interval[side]);
		}
		path_.exits.pop_back();
	}

	const CutSurface& cut_;
	const Triangulation& T_;
	const EndpointFilter& filter_;
	int min_, max_;
	std::function<void(const RawPath&)> emit_;
	RawPath path_;
	int p_ = 0;
};

std::optional<Arc> try_canonicalize(const Triangulation& T, const RawPath& raw, int exact_weight = -1) {
	try {
		const RawPath tight = tighten(T, raw);
		if (exact_weight >= 0 && static_cast<int>(tight.exits.size()) != exact_weight) return std::nullopt;
		if (tight.exits.size() >= 2 && self_intersections(T, tight) != 0) return std::nullopt;
		return arc_from_tight_path(T, tight);
	} catch (const NonEssentialArc&) {
		return std::nullopt;
	}
}

} // namespace

std::vector<Arc> enumerate_arcs(const CutSurface& cut, int max_weight, const EndpointFilter& filter) {
	std::set<Arc> found;
	const Triangulation& T = cut.triangulation();
	ComplementWalk walk(cut, filter, 0, max_weight, [&](const RawPath& raw) {
		if (auto a = try_canonicalize(T, raw)) found.insert(*a);
	});
	walk.run();
	return {found.begin(), found.end()};
}

std::optional<Arc> find_disjoint_arc(const CutSurface& cut, int p, int q, int max_weight,
                                     const std::function<bool(const Arc&)>& accept) {
	const Triangulation& T = cut.triangulation();
	EndpointFilter filter(T.num_vertices());
	filter.allow(p, q);
	for (int d = 0; d <= max_weight; ++d) {
		std::vector<Arc> found;
		ComplementWalk walk(cut, filter, d, d, [&](const RawPath& raw) {
			if (auto a = try_canonicalize(T, raw, d)) found.push_back(*a);
		});
		walk.run();
		std::sort(found.begin(), found.end());
		found.erase(std::unique(found.begin(), found.end()), found.end());
		// candidates are tested in order, so an expensive `accept` runs as little as possible
		for (const Arc& a : found)
			if (!accept || accept(a)) return a;
	}
	return std::nullopt;
}

std::optional<Arc> find_disjoint_arc(const Triangulation& T, const std::vector<Arc>& forbidden, int p, int q,
                                     int max_weight, const std::function<bool(const Arc&)>& accept) {
	return find_disjoint_arc(cut_along(T, forbidden), p, q, max_weight, accept);
}

} // namespace arcx
