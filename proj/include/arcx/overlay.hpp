#pragma once

#include "arcx/arc.hpp"

#include <vector>

namespace arcx {

/// Point on the boundary circle of a triangle. Blocks in counter-clockwise
/// order are corner 0, side 2, corner 1, side 0, corner 2, side 1; corner c
/// is block 2c and side s is block 2(s+1)+1. `minor` is the rank along a side
/// in the triangle's own side parametrization (0 for corners).
struct BoundaryPoint {
	int block = 0;
	int minor = 0;

	friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
	long key() const { return static_cast<long>(block) * (1L << 24) + minor; }
};

struct Chord {
	int strand = 0;
	int seg = 0;
	BoundaryPoint in;
	BoundaryPoint out;
};

struct IntersectionPoint {
	int tri = 0;
	int strand_a = 0;
	int seg_a = 0;
	double t_a = 0; // position on the chord, 0 at its in-end
	int strand_b = 0;
	int seg_b = 0;
	double t_b = 0;

	double along_a() const { return seg_a + t_a; }
	double along_b() const { return seg_b + t_b; }
};

/// Simultaneous minimal-position drawing of several tight strands. Strand
/// points on each edge are ordered by comparing the strands' futures (then
/// pasts) until they diverge; the segments inside each triangle are straight
/// chords between those boundary points.
class Overlay {
public:
	Overlay(const Triangulation& T, std::vector<Strand> strands);

	const std::vector<Strand>& strands() const { return strands_; }
	const std::vector<Chord>& chords() const { return chords_; }
	const std::vector<int>& chords_in(int tri) const { return by_triangle_[tri]; }
	/// Number of strand points on side `s` of its triangle.
	int points_on(Side s) const;
	/// Index of the chord for segment `seg` of strand `strand`.
	int chord_of(int strand, int seg) const { return chord_index_[strand][seg]; }

	/// All transverse intersections between chords of strands a and b
	/// (a == b gives self-intersections, each reported once).
	const std::vector<IntersectionPoint>& intersections() const { return points_; }
	int crossing_count(int a, int b) const;

private:
	const Triangulation* T_;
	std::vector<Strand> strands_;
	std::vector<Chord> chords_;
	std::vector<std::vector<int>> by_triangle_;
	std::vector<std::vector<int>> chord_index_;
	std::vector<int> edge_points_;
	std::vector<IntersectionPoint> points_;
};

/// Position of a boundary point measured counter-clockwise from corner `c`.
long relative_key(const BoundaryPoint& p, int corner);

} // namespace arcx
