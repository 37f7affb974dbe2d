#pragma once

#include "arcx/cut.hpp"
#include "arcx/gamma.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arcx {

/// MA: adjacent arcs are completely disjoint. A: adjacent arcs are distinct
/// and disjoint (shared endpoints allowed).
enum class ComplexKind { MA, A };

std::string to_string(ComplexKind k);

bool adjacent(const Triangulation& T, const Arc& a, const Arc& b, ComplexKind kind);

/// Path in MA(S, Gamma) or A(S, Gamma). annotations[i] says how arcs[i] was
/// reached from arcs[i - 1] (annotations[0] describes the start).
struct PathCertificate {
	ComplexKind kind = ComplexKind::MA;
	std::vector<Arc> arcs;
	std::vector<std::string> annotations;

	int length() const { return static_cast<int>(arcs.size()) - 1; }
	void append(const Arc& a, const std::string& how);
	/// Appends `other` minus its first arc, which must equal our last arc.
	void splice(const PathCertificate& other);
};

struct ValidationResult {
	bool ok = true;
	int index = -1; // first offending arc (an adjacency failure names the later arc)
	std::string reason;
};

ValidationResult validate_certificate(const Triangulation& T, const PathCertificate& c, const MarkedGraph& g);

/// Finite window onto MA(S, Gamma) or A(S, Gamma): all compatible arcs of
/// weight at most W, adjacency as in the complex. Neighbour lists are
/// exhaustive within the weight bound and memoized.
class ArcComplex {
public:
	ArcComplex(const Triangulation& T, const MarkedGraph& g, ComplexKind kind, int max_weight);

	const Triangulation& triangulation() const { return *T_; }
	const MarkedGraph& graph() const { return *g_; }
	ComplexKind kind() const { return kind_; }
	int max_weight() const { return W_; }

	const std::vector<Arc>& neighbors(const Arc& a);
	/// Every compatible arc of weight <= W.
	const std::vector<Arc>& vertices();

private:
	const Triangulation* T_;
	const MarkedGraph* g_;
	ComplexKind kind_;
	int W_;
	std::map<Arc, std::vector<Arc>> memo_;
	std::optional<std::vector<Arc>> all_;
};

std::vector<Arc> neighbors(const Triangulation& T, const Arc& a, const MarkedGraph& g, int max_weight,
                           ComplexKind kind = ComplexKind::MA);

struct Ball {
	Arc base;
	int radius = 0;
	int weight_bound = 0;
	ComplexKind kind = ComplexKind::MA;
	std::vector<Arc> vertices; // sorted by (depth, arc)
	std::vector<int> depth;
	std::vector<std::pair<int, int>> adjacency; // i < j
	/// Every vertex closer than the radius was fully expanded, so distances
	/// to the base are exact in the weight-bounded complex.
	bool exact = true;

	std::optional<int> index_of(const Arc& a) const;
};

/// Breadth-first ball. Stops expanding (and clears `exact`) once max_vertices is reached.
Ball ball(ArcComplex& cx, const Arc& base, int radius, int max_vertices = 1 << 20);
/// Distance inside the ball's induced graph, absent if unreachable.
std::optional<int> distance_in_ball(const Ball& b, const Arc& x, const Arc& y);

/// Shortest path in the weight-bounded complex by breadth-first search, up
/// to max_length steps.
std::optional<PathCertificate> shortest_path(ArcComplex& cx, const Arc& from, const Arc& to, int max_length);

struct BridgeOptions {
	int search_weight = 14; // weight bound for auxiliary arcs
};

/// Path of length <= 4 between disjoint compatible arcs sharing exactly one
/// endpoint. Needs |Gamma_0| >= 5 and the edge complement condition.
PathCertificate bridge_shared_endpoint(const Triangulation& T, const Arc& alpha, const Arc& beta, const MarkedGraph& g,
                                       const BridgeOptions& opt = {});
/// Path of length <= 6 between distinct disjoint compatible arcs with the same endpoints.
PathCertificate bridge_same_endpoints(const Triangulation& T, const Arc& alpha, const Arc& beta, const MarkedGraph& g,
                                      const BridgeOptions& opt = {});
/// Path between any two compatible arcs: a unicorn backbone towards an arc
/// with alpha's endpoints, bridged step by step.
PathCertificate connect(const Triangulation& T, const Arc& alpha, const Arc& beta, const MarkedGraph& g,
                        const BridgeOptions& opt = {});

/// Whether p and q lie in different components of the complement of alpha and beta.
bool separates(const Triangulation& T, const Arc& alpha, const Arc& beta, int p, int q);

} // namespace arcx
