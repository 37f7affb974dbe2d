#pragma once

#include "arcx/error.hpp"
#include "arcx/surface.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace arcx {

/// Raised when a raw path tightens to an arc that bounds a disk.
class NonEssentialArc : public InputError {
public:
	using InputError::InputError;
};

/// Raised when a tight path has self-intersections.
class NotEmbeddedArc : public InputError {
public:
	using InputError::InputError;
};

/// Passage through an edge of the base triangulation. `forward` means moving
/// from the edge's sides[0] triangle into its sides[1] triangle.
struct Crossing {
	int edge = -1;
	bool forward = true;

	friend bool operator==(const Crossing&, const Crossing&) = default;
	friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// An edge-crossing walk: starts at corner `start_corner` of `start_tri`,
/// leaves the current triangle through each side in `exits` in turn and ends
/// at corner `end_corner` of the final triangle.
struct RawPath {
	int start_tri = 0;
	int start_corner = 0;
	std::vector<int> exits;
	int end_corner = 0;
};

/// Isotopy class of an essential arc, stored as its normal (tight) crossing
/// sequence against the frozen base triangulation. Orientation is normalized
/// so that endpoints()[0] <= endpoints()[1] (ties broken by the smaller
/// crossing sequence); weight-0 arcs are edges of the triangulation.
class Arc {
public:
	Arc() = default;

	const std::array<int, 2>& endpoints() const { return endpoints_; }
	const std::vector<Crossing>& crossings() const { return crossings_; }
	int weight() const { return static_cast<int>(crossings_.size()); }
	bool is_edge() const { return crossings_.empty(); }
	int edge() const { return edge_; }
	bool is_loop() const { return endpoints_[0] == endpoints_[1]; }
	bool has_endpoint(int p) const { return endpoints_[0] == p || endpoints_[1] == p; }
	int shared_endpoints(const Arc& other) const;

	std::string to_string() const;

	friend bool operator==(const Arc&, const Arc&) = default;
	/// Weight first, then crossing sequence, then edge id and endpoints.
	friend std::strong_ordering operator<=>(const Arc& a, const Arc& b);

private:
	friend Arc arc_from_tight_path(const Triangulation&, const RawPath&);

	std::array<int, 2> endpoints_{-1, -1};
	std::vector<Crossing> crossings_;
	int edge_ = -1;
};

struct ArcHash {
	size_t operator()(const Arc& a) const;
};

/// One piece of a path inside a single triangle. `in`/`out` are side indices
/// 0..2 or corner codes 3 + c.
struct Segment {
	int tri = 0;
	int in = 0;
	int out = 0;
};
using Strand = std::vector<Segment>;

constexpr int corner_code(int c) { return 3 + c; }
constexpr bool is_corner_code(int code) { return code >= 3; }

/// Removes bigons with edges and slides ends that leave a vertex through an
/// incident edge. Throws NonEssentialArc for null-homotopic loops.
RawPath tighten(const Triangulation& T, RawPath raw);

/// Builds the arc of an already tight path (no tightening, no embeddedness check).
Arc arc_from_tight_path(const Triangulation& T, const RawPath& tight);

/// Tight, embedded, essential canonical form of a raw path.
Arc canonicalize(const Triangulation& T, const RawPath& raw);

/// Tight path of the arc, oriented from endpoints()[0].
RawPath raw_path(const Triangulation& T, const Arc& a);
RawPath reversed(const Triangulation& T, const RawPath& path);
Strand strand_of(const Triangulation& T, const RawPath& path);
Strand strand_of(const Triangulation& T, const Arc& a);
/// Strand oriented so that it starts at marked point `from` (must be an endpoint).
Strand strand_from(const Triangulation& T, const Arc& a, int from);
Strand reversed(const Strand& s);

Arc edge_arc(const Triangulation& T, int edge);

/// Arc from serialized data. With `forward` absent the crossing directions are
/// inferred; ambiguous or inconsistent data is rejected with InputError.
Arc arc_from_crossings(const Triangulation& T, int p, int q, const std::vector<int>& edges,
                       const std::optional<std::vector<bool>>& forward, std::optional<int> edge = std::nullopt);

bool is_embedded(const Triangulation& T, const Arc& a);
int self_intersections(const Triangulation& T, const RawPath& tight);

int intersection_number(const Triangulation& T, const Arc& a, const Arc& b);
bool disjoint(const Triangulation& T, const Arc& a, const Arc& b);
bool completely_disjoint(const Triangulation& T, const Arc& a, const Arc& b);

} // namespace arcx
