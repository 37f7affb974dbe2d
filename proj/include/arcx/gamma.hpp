#pragma once

#include "arcx/arc.hpp"
#include "arcx/cut.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arcx {

/// Finite simplicial graph with its vertices placed on distinct marked points.
class MarkedGraph {
public:
	MarkedGraph() = default;
	/// Throws InputError for loops, repeated edges, unknown vertices or a
	/// non-injective embedding.
	MarkedGraph(std::vector<std::string> names, std::vector<std::pair<int, int>> edges, std::vector<int> embedding);

	int num_vertices() const { return static_cast<int>(names_.size()); }
	int num_edges() const { return static_cast<int>(edges_.size()); }
	const std::vector<std::pair<int, int>>& edges() const { return edges_; }
	const std::string& name(int v) const { return names_[v]; }
	const std::vector<int>& neighbors(int v) const { return adj_[v]; }
	bool adjacent(int u, int v) const;
	int point_of(int v) const { return embedding_[v]; }
	const std::vector<int>& embedding() const { return embedding_; }
	/// Vertex placed at marked point p, if any.
	std::optional<int> vertex_at(int p) const;
	/// Edge index with the given embedded endpoints, if any.
	std::optional<int> edge_between_points(int p, int q) const;
	/// Smallest number of marked points that can hold the embedding.
	int points_needed() const;

private:
	std::vector<std::string> names_;
	std::vector<std::pair<int, int>> edges_;
	std::vector<int> embedding_;
	std::vector<std::vector<int>> adj_;
};

/// Induced subgraph on the non-isolated vertices (embedding kept).
MarkedGraph gamma_zero(const MarkedGraph& g);

/// Every edge's complement (delete both endpoints) still contains an edge.
bool edge_complement_condition(const MarkedGraph& g);
bool has_triangle(const MarkedGraph& g);
/// Lexicographically least triangle by sorted vertex indices.
std::optional<std::array<int, 3>> least_triangle(const MarkedGraph& g);
/// Part sizes (larger first) when the graph is bipartite.
std::optional<std::pair<int, int>> bipartite_parts(const MarkedGraph& g);
bool is_connected(const MarkedGraph& g);
/// Absent when the graph is disconnected.
std::optional<int> graph_diameter(const MarkedGraph& g);

/// Edge of g whose embedded endpoints are the arc's endpoints.
std::optional<int> compatible(const Arc& a, const MarkedGraph& g);

/// Endpoint pairs of compatible arcs, skipping the given marked points.
EndpointFilter compatible_filter(const MarkedGraph& g, int num_points, const std::vector<int>& avoid = {});

enum class Connectivity { Connected, Disconnected, Unknown };
enum class Hyperbolicity { Hyperbolic, NotHyperbolic, Unknown };

struct ConnectivityVerdict {
	Connectivity value;
	std::string reason;
};
struct HyperbolicityVerdict {
	Hyperbolicity value;
	std::string reason;
};

ConnectivityVerdict connectivity_verdict(const MarkedGraph& g, int genus);
HyperbolicityVerdict hyperbolicity_verdict(const MarkedGraph& g, int genus);

std::string to_string(Connectivity c);
std::string to_string(Hyperbolicity h);

} // namespace arcx
