#pragma once

#include "arcx/hyp.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace arcx {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError naming the file and byte offset.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& origin);

/// {"endpoints": [p, q], "crossings": [edge ids], "directions": [forward flags], "edge": id (weight 0 only)}
Json to_json(const Triangulation& T, const Arc& a);
Arc arc_from_json(const Triangulation& T, const Json& j);

/// {"vertices": [names], "edges": [[u, v], ...], "embedding": {name: point}}; edge ends are names or indices.
Json to_json(const MarkedGraph& g);
MarkedGraph graph_from_json(const Json& j);
/// Builtin families: k<n>, p<n> (path), c<n> (cycle), star<n>, vertex i at point i.
MarkedGraph builtin_graph(const std::string& name);

/// {"complex": "MA" | "A", "arcs": [...], "annotations": [...]}
Json to_json(const Triangulation& T, const PathCertificate& c);
PathCertificate certificate_from_json(const Triangulation& T, const Json& j);

std::string to_dot(const Ball& b);
std::string to_dot(const MarkedGraph& g);

/// Seeded arc sampling: uniform picks by index from the sorted list of
/// compatible arcs of weight <= W, driven by mt19937_64 (index = draw mod size).
class ArcSampler {
public:
	ArcSampler(std::vector<Arc> arcs, std::uint64_t seed) : arcs_(std::move(arcs)), rng_(seed) {}
	const std::vector<Arc>& arcs() const { return arcs_; }
	const Arc& next();
	std::uint64_t draw() { return rng_(); }
	/// Next pair (a, b) with pred(a, b), by rejection; throws PreconditionError
	/// after max_tries draws without success.
	template <class Pred>
	std::pair<Arc, Arc> next_pair(Pred pred, long max_tries = 1000000) {
		for (long t = 0; t < max_tries; ++t) {
			const Arc& a = next();
			const Arc& b = next();
			if (pred(a, b)) return {a, b};
		}
		throw PreconditionError("no qualifying pair found among sampled arcs");
	}

private:
	std::vector<Arc> arcs_;
	std::mt19937_64 rng_;
};

} // namespace arcx
