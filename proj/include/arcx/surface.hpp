#pragma once

#include <array>
#include <vector>

namespace arcx {

inline int next3(int i) { return (i + 1) % 3; }
inline int prev3(int i) { return (i + 2) % 3; }

/// One side of a triangle: side k of triangle `tri` is opposite corner k and
/// runs counter-clockwise from corner k+1 to corner k+2.
struct Side {
	int tri = -1;
	int side = -1;

	friend bool operator==(const Side&, const Side&) = default;
	friend auto operator<=>(const Side&, const Side&) = default;
};

struct Triangle {
	std::array<int, 3> vertex{};  // marked point at each corner
	std::array<int, 3> edge{};    // edge id of the side opposite each corner
	std::array<Side, 3> across{}; // the side glued to each side
};

/// sides[0] is the lexicographically smaller incidence. Crossing the edge
/// "forward" means moving from sides[0].tri into sides[1].tri.
struct EdgeRecord {
	std::array<Side, 2> sides{};
	std::array<int, 2> vertices{}; // endpoints as seen from sides[0]: corners k+1, k+2
};

/// Ideal triangulation of a closed oriented surface of genus g whose vertices
/// are exactly the n marked points. Immutable after construction.
class Triangulation {
public:
	Triangulation(int genus, int punctures, std::vector<Triangle> triangles);

	int genus() const { return genus_; }
	int punctures() const { return punctures_; }
	int num_vertices() const { return punctures_; }
	int num_edges() const { return static_cast<int>(edges_.size()); }
	int num_triangles() const { return static_cast<int>(triangles_.size()); }
	int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }

	const Triangle& triangle(int t) const { return triangles_[t]; }
	const EdgeRecord& edge(int e) const { return edges_[e]; }
	const std::vector<Triangle>& triangles() const { return triangles_; }
	const std::vector<EdgeRecord>& edges() const { return edges_; }

	Side across(Side s) const { return triangles_[s.tri].across[s.side]; }
	int edge_of(Side s) const { return triangles_[s.tri].edge[s.side]; }
	int vertex_at(int tri, int corner) const { return triangles_[tri].vertex[corner]; }

	/// Corner of the neighbouring triangle that is glued to corner `corner`
	/// of `s.tri`; `corner` must be an endpoint of side `s`.
	int corner_across(Side s, int corner) const;

	/// True if `s` is sides[0] of its edge, i.e. leaving through it is a forward crossing.
	bool is_forward(Side s) const { return edges_[edge_of(s)].sides[0] == s; }

private:
	void validate() const;

	int genus_;
	int punctures_;
	std::vector<Triangle> triangles_;
	std::vector<EdgeRecord> edges_;
};

/// Frozen base triangulation used for all arc coordinates: the fan-triangulated
/// 4g-gon (or two glued triangles on the sphere) with further marked points
/// inserted by stellar subdivision. Throws PreconditionError when n < 1 or the
/// Euler characteristic 2 - 2g - n is not negative.
Triangulation build_standard_triangulation(int genus, int punctures);

} // namespace arcx
