#include "arcx/unicorn.hpp"

#include "arcx/overlay.hpp"

#include <algorithm>

namespace arcx {

namespace {

// alpha from v up to the crossing, then beta backwards to u
RawPath unicorn_path(const Strand& a, int seg_a, const Strand& b, int seg_b) {
	RawPath p;
	p.start_tri = a[0].tri;
	p.start_corner = a[0].in - 3;
	for (int i = 0; i < seg_a; ++i) p.exits.push_back(a[i].out);
	for (int j = seg_b; j >= 1; --j) p.exits.push_back(b[j].in);
	p.end_corner = b[0].in - 3;
	return p;
}

} // namespace

UnicornSequence unicorn_arcs(const Triangulation& T, const Arc& alpha, int v, const Arc& beta, int u) {
	if (!alpha.has_endpoint(v) || !beta.has_endpoint(u)) throw PreconditionError("basepoint is not an endpoint of its arc");
	UnicornSequence seq{alpha, v, beta, u, {alpha}, {}, 0};
	if (alpha == beta) {
		seq.elements.push_back(beta);
		return seq;
	}
	const Strand a = strand_from(T, alpha, v);
	const Strand b = strand_from(T, beta, u);
	const Overlay ov(T, {a, b});

	std::vector<UnicornPivot> points;
	const auto& all = ov.intersections();
	for (int i = 0; i < static_cast<int>(all.size()); ++i) {
		const auto& x = all[i];
		if (x.strand_a != 0 || x.strand_b != 1) continue;
		points.push_back(UnicornPivot{i, x.along_a(), x.along_b()});
	}
	std::sort(points.begin(), points.end(),
	          [](const UnicornPivot& x, const UnicornPivot& y) { return x.along_alpha > y.along_alpha; });

	for (const auto& p : points) {
		bool embedded = true;
		for (const auto& q : points) {
			if (q.along_alpha < p.along_alpha && q.along_beta < p.along_beta) {
				embedded = false;
				break;
			}
		}
		if (!embedded) {
			++seq.rejected;
			continue;
		}
		const auto& x = all[p.point];
		try {
			seq.elements.push_back(canonicalize(T, unicorn_path(a, x.seg_a, b, x.seg_b)));
		} catch (const InputError& e) {
			throw DefectError(std::string("unicorn arc failed to canonicalize: ") + e.what());
		}
		seq.pivots.push_back(p);
	}
	seq.elements.push_back(beta);
	return seq;
}

Arc unicorn_triangle_witness(const Triangulation& T, const UnicornSequence& seq, const Arc& c, const Arc& gamma, int w) {
	for (const auto& s : {unicorn_arcs(T, seq.alpha, seq.v, gamma, w), unicorn_arcs(T, gamma, w, seq.beta, seq.u)})
		for (const Arc& x : s.elements)
			if (disjoint(T, c, x)) return x;
	throw DefectError("no unicorn triangle witness for " + c.to_string());
}

} // namespace arcx
