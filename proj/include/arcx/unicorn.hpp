#pragma once

#include "arcx/arc.hpp"

#include <vector>

namespace arcx {

struct UnicornPivot {
	int point = 0;      // index into the overlay's intersection list
	double along_alpha; // position along alpha measured from v
	double along_beta;  // position along beta measured from u
};

/// The unicorn path U(alpha^v, beta^u): alpha, then the unicorn arcs ordered
/// by decreasing initial subarc of alpha, then beta.
struct UnicornSequence {
	Arc alpha;
	int v = -1;
	Arc beta;
	int u = -1;
	std::vector<Arc> elements;
	std::vector<UnicornPivot> pivots; // one per interior element
	int rejected = 0;                 // intersection points whose subarcs cross
};

/// Throws PreconditionError if v (u) is not an endpoint of alpha (beta).
/// Loops are walked in their stored orientation.
UnicornSequence unicorn_arcs(const Triangulation& T, const Arc& alpha, int v, const Arc& beta, int u);

/// First element of U(alpha^v, gamma^w) followed by U(gamma^w, beta^u) that is
/// disjoint from c. Throws DefectError if there is none.
Arc unicorn_triangle_witness(const Triangulation& T, const UnicornSequence& seq, const Arc& c, const Arc& gamma, int w);

} // namespace arcx
