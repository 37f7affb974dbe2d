#pragma once

#include "arcx/macx.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arcx {

// ---------------------------------------------------------------------------
// Generic graphs and the guessing geodesics hypotheses

/// Undirected simple graph on 0..n-1 with lazily cached BFS rows.
class Graph {
public:
	explicit Graph(int n = 0) : adj_(n) {}
	int size() const { return static_cast<int>(adj_.size()); }
	int add_vertex();
	void add_edge(int u, int v);
	const std::vector<int>& neighbors(int v) const { return adj_[v]; }
	/// Distance, or -1 when unreachable.
	int distance(int u, int v);
	const std::vector<int>& distances_from(int u);
	/// Distances from the nearest vertex of `sources` (-1 when unreachable).
	std::vector<int> distances_from_set(const std::vector<int>& sources) const;
	/// Largest pairwise distance, -1 if some pair is disconnected.
	int diameter_of(const std::vector<int>& vertices);
	bool induces_connected(const std::vector<int>& vertices) const;

private:
	std::vector<std::vector<int>> adj_;
	std::map<int, std::vector<int>> rows_;
};

using Family = std::function<std::vector<int>(int x, int y)>;

struct GuessingReport {
	int M = 0;
	bool family_ok = true;  // each A(x, y) is connected and contains x, y
	bool hypothesis1 = true; // d(x, y) <= 1 implies diam A(x, y) <= M
	bool hypothesis2 = true; // A(x, y) inside N_M(A(x, z) u A(z, y))
	int worst_diameter = 0;
	int worst_distance = 0;
	long pairs = 0;
	long triples = 0;
	bool sampled = false;
	std::string witness; // first failure, if any

	bool pass() const { return family_ok && hypothesis1 && hypothesis2; }
};

/// Checks both hypotheses over `points` (all pairs and triples, or a seeded
/// sample of `samples` triples when samples > 0).
GuessingReport guessing_geodesics_check(Graph& G, const Family& A, int M, const std::vector<int>& points,
                                        long samples = 0, std::uint64_t seed = 0);

/// Union of all geodesics from x to y.
std::vector<int> geodesic_interval(Graph& G, int x, int y);

// ---------------------------------------------------------------------------
// Triangle arcs and guess-sets

struct TriangleArcs {
	Arc source;
	std::array<int, 3> triangle{}; // graph vertices v1, v2, v3; e_i joins v_i and v_{i+1}
	std::array<Arc, 3> arcs;       // arcs[i] is compatible with e_{i+1}
};

/// Fixes the least triangle of Gamma_0 and assigns triangle arcs to arcs once
/// and for all (memoized). The tree is a path through two triangle edges; the
/// third arc is the boundary of its regular neighbourhood on one side.
class TriangleArcBuilder {
public:
	TriangleArcBuilder(const Triangulation& T, const MarkedGraph& g, int search_weight = 12);

	const std::array<int, 3>& triangle() const { return tri_; }
	/// Marked point of v_{i+1}.
	int point(int i) const { return pts_[i]; }
	const TriangleArcs& of(const Arc& alpha);

private:
	const Triangulation* T_;
	const MarkedGraph* g_;
	int W_;
	std::array<int, 3> tri_{};
	std::array<int, 3> pts_{};
	std::map<Arc, TriangleArcs> memo_;
};

/// The regular-neighbourhood arc of a path tree u - m - w: follows `first`
/// (u to m), turns around m on one side and follows `second` (m to w).
/// Candidates for both sides, tightened; invalid ones are dropped.
std::vector<Arc> pushed_off_arcs(const Triangulation& T, const Arc& first, int u, const Arc& second, int w);

/// The three arcs bound a disk: cutting along them leaves a disk component.
bool bounds_disk(const Triangulation& T, const std::array<Arc, 3>& arcs);

struct PrimeElement {
	Arc arc;
	int i = 0, j = 0; // triangle arc indices of alpha and beta
	int v = 0, u = 0; // basepoints
};

struct GuessSet {
	Arc alpha, beta;
	int weight_bound = 0;
	std::vector<PrimeElement> provenance;
	std::vector<Arc> prime_set; // sorted, unique
	std::vector<Arc> full_set;  // sorted, unique: prime_set, its A-neighbours of weight <= W, alpha, beta
};

/// cx must be an A(S, Gamma) window.
GuessSet guess_set(TriangleArcBuilder& tb, ArcComplex& cx, const Arc& alpha, const Arc& beta);

// ---------------------------------------------------------------------------
// Weight-bounded window with distances

/// Graph on every compatible arc of weight <= W plus any heavier arcs added
/// on demand; adjacency is that of the complex.
class ComplexWindow {
public:
	explicit ComplexWindow(ArcComplex& cx);

	ArcComplex& complex() { return *cx_; }
	int index(const Arc& a); // adds heavy arcs as needed
	const Arc& arc(int i) const { return arcs_[i]; }
	Graph& graph() { return graph_; }
	int size() const { return graph_.size(); }
	int distance(const Arc& a, const Arc& b) { return graph_.distance(index(a), index(b)); }

private:
	ArcComplex* cx_;
	std::vector<Arc> arcs_;
	std::map<Arc, int> index_;
	Graph graph_;
};

struct ThinnessReport {
	int max_distance = 0; // -1 if some element is unreachable
	Arc worst;
	int checked = 0;
	/// Sharper form: prime elements of A'(alpha, beta) against A'(alpha, gamma) u A'(gamma, beta).
	int prime_max_distance = 0;
	bool pass = true;
};

/// Every element of A(alpha, beta) lies within 2 of A(alpha, gamma) u A(gamma, beta),
/// and every prime element within 1 of the other two prime sets.
ThinnessReport verify_thinness(TriangleArcBuilder& tb, ComplexWindow& w, const Arc& alpha, const Arc& beta,
                               const Arc& gamma);

struct DiameterReport {
	int diameter = 0; // -1 if disconnected in the window
	int bound = 0;
	int size = 0;
	bool pass = true;
};

/// diam A(alpha, beta) <= 2 diam(Gamma_0) + 9 for arcs at distance <= 1 in A(S, Gamma).
DiameterReport verify_diam_bound(TriangleArcBuilder& tb, ComplexWindow& w, const Arc& alpha, const Arc& beta);

struct QiReport {
	int pairs = 0;
	int failures = 0;
	int max_ratio_numerator = 0, max_ratio_denominator = 1; // largest d_MA / d_A seen
	std::string witness;
	bool pass() const { return failures == 0; }
};

/// Seeded pairs of the window: d_A <= d_MA <= 6 d_A.
QiReport qi_sample(ComplexWindow& a_window, ComplexWindow& ma_window, int samples, std::uint64_t seed);

/// Guessing geodesics check on an A window with guess-sets as the family and
/// M = 2 diam(Gamma_0) + 9, over the given arcs (all triples, or `samples` seeded ones).
GuessingReport verify_guessing(TriangleArcBuilder& tb, ComplexWindow& w, const std::vector<Arc>& points, long samples,
                               std::uint64_t seed);

struct DeltaEstimate {
	double delta = 0;
	int radius = 0;
	int vertices = 0;
	bool exact = true; // every quadruple scanned
	long quadruples = 0;
};

/// Four-point defect over the ball's induced graph: exact up to max_exact
/// vertices, otherwise `samples` seeded quadruples.
DeltaEstimate estimate_delta(const Ball& b, int max_exact = 40, long samples = 200000, std::uint64_t seed = 0);

} // namespace arcx
