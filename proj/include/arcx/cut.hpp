#pragma once

#include "arcx/arc.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace arcx {

/// Complement of a family of pairwise disjoint arcs. Each triangle is split
/// by the arc chords into regions (open disks); a region is bounded by corner
/// sectors (wedges at a marked point between consecutive arc ends) and side
/// intervals (pieces of a triangle side between consecutive arc crossings).
/// Side intervals are glued across edges, and components are the classes of
/// regions under that gluing.
class CutSurface {
public:
	struct Atom {
		bool sector = false; // corner sector, else side interval
		int tri = 0;
		int where = 0; // corner (sector) or side (interval)
		int index = 0;
		int region = -1;
		int partner = -1; // glued interval across the edge
	};
	struct Region {
		int tri = 0;
		std::array<int, 3> interval{-1, -1, -1}; // atom touching side s, if any
		std::array<std::vector<int>, 3> sectors;  // sector atoms at corner c
	};

	CutSurface(const Triangulation& T, std::vector<Arc> arcs);

	const Triangulation& triangulation() const { return *T_; }
	const std::vector<Arc>& arcs() const { return arcs_; }

	int num_components() const { return num_components_; }
	/// Component containing marked point p; absent when p lies on a cut arc.
	std::optional<int> component_of(int p) const;
	int component_of_region(int r) const { return region_component_[r]; }
	/// Euler characteristic of the compact piece (arcs and filled-in interior
	/// marked points included).
	int euler_characteristic(int comp) const;
	/// Marked points in the interior of the component.
	const std::vector<int>& interior_points(int comp) const { return points_[comp]; }
	bool is_disk(int comp) const { return euler_characteristic(comp) == 1 && points_[comp].empty(); }

	const std::vector<Atom>& atoms() const { return atoms_; }
	const std::vector<Region>& regions() const { return regions_; }
	/// Sector atoms at corner c of triangle t, in counter-clockwise order.
	const std::vector<int>& sectors_at(int t, int c) const { return corner_sectors_[3 * t + c]; }

private:
	const Triangulation* T_;
	std::vector<Arc> arcs_;
	std::vector<Atom> atoms_;
	std::vector<Region> regions_;
	std::vector<std::vector<int>> corner_sectors_;
	std::vector<int> region_component_;
	std::vector<int> component_regions_;
	std::vector<int> component_glues_;
	std::vector<std::vector<int>> points_;
	std::vector<int> point_component_;
	int num_components_ = 0;
};

/// Throws PreconditionError when two arcs intersect. Arcs may share endpoints;
/// duplicates are ignored.
CutSurface cut_along(const Triangulation& T, const std::vector<Arc>& arcs);

/// Endpoint pairs an enumeration may return; unordered, loops only if listed.
class EndpointFilter {
public:
	explicit EndpointFilter(int num_points) : n_(num_points), ok_(static_cast<size_t>(num_points) * num_points, 0) {}
	static EndpointFilter all(int num_points, bool loops = false);

	void allow(int p, int q) {
		ok_[static_cast<size_t>(p) * n_ + q] = 1;
		ok_[static_cast<size_t>(q) * n_ + p] = 1;
	}
	bool allowed(int p, int q) const { return ok_[static_cast<size_t>(p) * n_ + q] != 0; }
	bool any_from(int p) const;

private:
	int n_;
	std::vector<char> ok_;
};

/// Every arc of weight <= max_weight with allowed endpoints that is disjoint
/// from all cut arcs (the cut arcs themselves included), sorted ascending.
std::vector<Arc> enumerate_arcs(const CutSurface& cut, int max_weight, const EndpointFilter& filter);

/// Least arc (weight, then crossing sequence) from p to q, of weight at most
/// max_weight, disjoint from every forbidden arc and accepted by `accept`.
std::optional<Arc> find_disjoint_arc(const Triangulation& T, const std::vector<Arc>& forbidden, int p, int q,
                                     int max_weight, const std::function<bool(const Arc&)>& accept = {});
std::optional<Arc> find_disjoint_arc(const CutSurface& cut, int p, int q, int max_weight,
                                     const std::function<bool(const Arc&)>& accept = {});

} // namespace arcx
