#include "arcx/io.hpp"

#include "arcx/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace arcx {

Json parse_json(const std::string& text, const std::string& origin) {
	try {
		return Json::parse(text);
	} catch (const Json::parse_error& e) {
		throw InputError(origin + ": JSON syntax error at byte " + std::to_string(e.byte));
	}
}

Json read_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw InputError(path + ": cannot open");
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_json(ss.str(), path);
}

namespace {

template <class T>
T field(const Json& j, const char* key, const std::string& what) {
	if (!j.is_object() || !j.contains(key)) throw InputError(what + ": missing \"" + key + "\"");
	try {
		return j.at(key).get<T>();
	} catch (const Json::exception&) {
		throw InputError(what + ": \"" + key + "\" has the wrong type");
	}
}

} // namespace

Json to_json(const Triangulation& T, const Arc& a) {
	Json j;
	j["endpoints"] = {a.endpoints()[0], a.endpoints()[1]};
	Json cs = Json::array(), dirs = Json::array();
	for (const auto& c : a.crossings()) {
		cs.push_back(c.edge);
		dirs.push_back(c.forward);
	}
	j["crossings"] = cs;
	j["directions"] = dirs;
	if (a.is_edge()) j["edge"] = a.edge();
	(void)T;
	return j;
}

Arc arc_from_json(const Triangulation& T, const Json& j) {
	const auto ends = field<std::vector<int>>(j, "endpoints", "arc");
	if (ends.size() != 2) throw InputError("arc: \"endpoints\" needs two marked points");
	const auto crossings = j.contains("crossings") ? field<std::vector<int>>(j, "crossings", "arc") : std::vector<int>{};
	std::optional<std::vector<bool>> dirs;
	if (j.contains("directions")) dirs = field<std::vector<bool>>(j, "directions", "arc");
	std::optional<int> edge;
	if (j.contains("edge")) edge = field<int>(j, "edge", "arc");
	return arc_from_crossings(T, ends[0], ends[1], crossings, dirs, edge);
}

Json to_json(const MarkedGraph& g) {
	Json j;
	Json names = Json::array();
	for (int v = 0; v < g.num_vertices(); ++v) names.push_back(g.name(v));
	j["vertices"] = names;
	Json edges = Json::array();
	for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
	j["edges"] = edges;
	Json emb = Json::object();
	for (int v = 0; v < g.num_vertices(); ++v) emb[g.name(v)] = g.point_of(v);
	j["embedding"] = emb;
	return j;
}

MarkedGraph graph_from_json(const Json& j) {
	if (!j.is_object()) throw InputError("graph: expected an object");
	if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("graph: missing \"vertices\" array");
	std::vector<std::string> names;
	std::map<std::string, int> index;
	for (const auto& v : j["vertices"]) {
		std::string name = v.is_string() ? v.get<std::string>() : v.dump();
		if (index.count(name)) throw InputError("graph: duplicate vertex \"" + name + "\"");
		index[name] = static_cast<int>(names.size());
		names.push_back(name);
	}
	auto vertex = [&](const Json& v) {
		if (v.is_number_integer()) {
			const int i = v.get<int>();
			if (i < 0 || i >= static_cast<int>(names.size())) throw InputError("graph: vertex index out of range");
			return i;
		}
		const std::string name = v.is_string() ? v.get<std::string>() : v.dump();
		auto it = index.find(name);
		if (it == index.end()) throw InputError("graph: unknown vertex \"" + name + "\"");
		return it->second;
	};
	std::vector<std::pair<int, int>> edges;
	if (j.contains("edges")) {
		if (!j["edges"].is_array()) throw InputError("graph: \"edges\" must be an array");
		for (const auto& e : j["edges"]) {
			if (!e.is_array() || e.size() != 2) throw InputError("graph: each edge needs two vertices");
			edges.emplace_back(vertex(e[0]), vertex(e[1]));
		}
	}
	std::vector<int> emb(names.size(), -1);
	if (j.contains("embedding")) {
		const Json& m = j["embedding"];
		if (m.is_object()) {
			for (const auto& [k, p] : m.items()) {
				if (!p.is_number_integer()) throw InputError("graph: embedding of \"" + k + "\" is not an integer");
				emb[vertex(Json(k))] = p.get<int>();
			}
		} else if (m.is_array()) {
			if (m.size() != names.size()) throw InputError("graph: embedding array has the wrong length");
			for (size_t i = 0; i < m.size(); ++i) emb[i] = m[i].get<int>();
		} else {
			throw InputError("graph: \"embedding\" must be an object or array");
		}
	} else {
		for (size_t i = 0; i < names.size(); ++i) emb[i] = static_cast<int>(i);
	}
	for (size_t i = 0; i < emb.size(); ++i)
		if (emb[i] < 0) throw InputError("graph: vertex \"" + names[i] + "\" has no marked point");
	return MarkedGraph(names, edges, emb);
}

MarkedGraph builtin_graph(const std::string& name) {
	size_t digits = name.find_first_of("0123456789");
	if (digits == std::string::npos || digits == 0) throw InputError("unknown graph \"" + name + "\"");
	const std::string kind = name.substr(0, digits);
	int n = 0;
	try {
		size_t used = 0;
		n = std::stoi(name.substr(digits), &used);
		if (digits + used != name.size()) throw InputError("");
	} catch (const std::exception&) {
		throw InputError("unknown graph \"" + name + "\"");
	}
	if (n < 1 || n > 64) throw InputError("graph size out of range in \"" + name + "\"");
	std::vector<std::pair<int, int>> e;
	if (kind == "k") {
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
	} else if (kind == "p") {
		for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
	} else if (kind == "c") {
		if (n < 3) throw InputError("a cycle needs at least three vertices");
		for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
	} else if (kind == "star") {
		for (int i = 1; i < n; ++i) e.emplace_back(0, i);
	} else {
		throw InputError("unknown graph \"" + name + "\"");
	}
	std::vector<std::string> names;
	std::vector<int> emb;
	for (int i = 0; i < n; ++i) {
		names.push_back("v" + std::to_string(i));
		emb.push_back(i);
	}
	return MarkedGraph(names, e, emb);
}

Json to_json(const Triangulation& T, const PathCertificate& c) {
	Json j;
	j["complex"] = to_string(c.kind);
	Json arcs = Json::array();
	for (const Arc& a : c.arcs) arcs.push_back(to_json(T, a));
	j["arcs"] = arcs;
	j["annotations"] = c.annotations;
	return j;
}

PathCertificate certificate_from_json(const Triangulation& T, const Json& j) {
	PathCertificate c;
	const auto kind = field<std::string>(j, "complex", "certificate");
	if (kind == "MA")
		c.kind = ComplexKind::MA;
	else if (kind == "A")
		c.kind = ComplexKind::A;
	else
		throw InputError("certificate: \"complex\" must be \"MA\" or \"A\"");
	if (!j.contains("arcs") || !j["arcs"].is_array()) throw InputError("certificate: missing \"arcs\" array");
	for (const auto& a : j["arcs"]) c.arcs.push_back(arc_from_json(T, a));
	if (j.contains("annotations")) c.annotations = field<std::vector<std::string>>(j, "annotations", "certificate");
	c.annotations.resize(c.arcs.size());
	return c;
}

std::string to_dot(const Ball& b) {
	std::ostringstream os;
	os << "graph ball {\n";
	os << "  // " << to_string(b.kind) << " ball, radius " << b.radius << ", weight bound " << b.weight_bound
	   << (b.exact ? "" : ", truncated") << "\n";
	for (size_t i = 0; i < b.vertices.size(); ++i)
		os << "  n" << i << " [label=\"" << b.vertices[i].to_string() << "\", depth=" << b.depth[i] << "];\n";
	for (auto [i, j] : b.adjacency) os << "  n" << i << " -- n" << j << ";\n";
	os << "}\n";
	return os.str();
}

std::string to_dot(const MarkedGraph& g) {
	std::ostringstream os;
	os << "graph gamma {\n";
	for (int v = 0; v < g.num_vertices(); ++v)
		os << "  v" << v << " [label=\"" << g.name(v) << " @" << g.point_of(v) << "\"];\n";
	for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
	os << "}\n";
	return os.str();
}

const Arc& ArcSampler::next() {
	if (arcs_.empty()) throw PreconditionError("no arcs to sample from");
	return arcs_[rng_() % arcs_.size()];
}

} // namespace arcx
