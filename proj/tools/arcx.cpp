#include "arcx/io.hpp"
#include "arcx/unicorn.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace arcx;

namespace {

/// Exit status for a verification failure; input problems use 2.
constexpr int kFail = 1;

struct Config {
	int genus = 0;
	std::optional<int> punctures;
	std::string graph;
	int max_weight = 6;
	int radius = 2;
	long samples = 50;
	std::optional<std::uint64_t> seed;
	std::string output;
	std::string format = "text";
	std::string complex = "MA";
	std::string from, to;
	std::optional<int> v, u;
	std::string target; // positional: graph file, certificate file or verify check
};

MarkedGraph load_graph(const std::string& source) {
	if (source.empty()) throw InputError("--graph is required");
	if (std::filesystem::exists(source)) return graph_from_json(read_json_file(source));
	return builtin_graph(source);
}

int punctures_for(const Config& c, const MarkedGraph& g) {
	const int n = c.punctures.value_or(std::max(g.points_needed(), g.num_vertices()));
	if (n < g.num_vertices()) throw InputError("need at least as many punctures as the graph has vertices");
	if (n < g.points_needed()) throw InputError("the embedding uses a marked point beyond the puncture count");
	return n;
}

std::uint64_t seed_of(const Config& c) {
	if (!c.seed) throw InputError("--seed is required for sampling");
	return *c.seed;
}

ComplexKind kind_of(const std::string& s) {
	if (s == "MA") return ComplexKind::MA;
	if (s == "A") return ComplexKind::A;
	throw InputError("--complex must be MA or A");
}

Arc load_arc(const Triangulation& T, const std::string& source) {
	if (!source.empty() && source.front() == '{') return arc_from_json(T, parse_json(source, "arc argument"));
	return arc_from_json(T, read_json_file(source));
}

void emit(const Config& c, const Json& j, const std::string& text) {
	const std::string body = c.format == "json" ? j.dump(2) + "\n" : text;
	if (c.output.empty()) {
		std::cout << body;
		return;
	}
	std::ofstream out(c.output);
	if (!out) throw InputError(c.output + ": cannot write");
	out << body;
}

/// Graph, surface and triangulation shared by most commands.
struct Context {
	MarkedGraph g;
	Triangulation T;

	explicit Context(const Config& c, MarkedGraph graph)
	    : g(std::move(graph)), T(build_standard_triangulation(c.genus, punctures_for(c, g))) {}
};

// ---------------------------------------------------------------------------

int cmd_surface_info(const Config& c) {
	if (!c.punctures) throw InputError("--punctures is required");
	const Triangulation T = build_standard_triangulation(c.genus, *c.punctures);
	Json j;
	j["genus"] = T.genus();
	j["punctures"] = T.punctures();
	const int chi = 2 - 2 * T.genus() - T.punctures();
	j["euler_characteristic"] = chi;
	j["edges"] = T.num_edges();
	j["triangles"] = Json::array();
	std::ostringstream os;
	os << "surface: genus " << T.genus() << ", " << T.punctures() << " punctures, euler characteristic " << chi << "\n";
	os << "triangulation: " << T.num_vertices() << " vertices, " << T.num_edges() << " edges, " << T.num_triangles()
	   << " triangles\n";
	for (int t = 0; t < T.num_triangles(); ++t) {
		const auto& tr = T.triangle(t);
		j["triangles"].push_back({{"points", tr.vertex}, {"edges", tr.edge}});
		os << "  triangle " << t << ": points " << tr.vertex[0] << " " << tr.vertex[1] << " " << tr.vertex[2]
		   << ", edges " << tr.edge[0] << " " << tr.edge[1] << " " << tr.edge[2] << "\n";
	}
	emit(c, j, os.str());
	return 0;
}

int cmd_graph_check(const Config& c) {
	const MarkedGraph g = load_graph(c.target.empty() ? c.graph : c.target);
	if (c.punctures) punctures_for(c, g);
	if (c.format == "dot") {
		emit(c, {}, to_dot(g));
		return 0;
	}
	const MarkedGraph g0 = gamma_zero(g);
	const auto tri = least_triangle(g0);
	const auto parts = bipartite_parts(g0);
	const auto diam = graph_diameter(g0);
	const auto conn = connectivity_verdict(g, c.genus);
	const auto hyp = hyperbolicity_verdict(g, c.genus);
	Json j;
	j["graph"] = to_json(g);
	j["genus"] = c.genus;
	j["gamma_zero_vertices"] = g0.num_vertices();
	j["edge_complement_condition"] = edge_complement_condition(g0);
	j["triangle"] = tri ? Json(*tri) : Json(nullptr);
	j["bipartite"] = parts ? Json({parts->first, parts->second}) : Json(nullptr);
	j["diameter"] = diam ? Json(*diam) : Json(nullptr);
	j["connectivity"] = {{"verdict", to_string(conn.value)}, {"reason", conn.reason}};
	j["hyperbolicity"] = {{"verdict", to_string(hyp.value)}, {"reason", hyp.reason}};
	std::ostringstream os;
	os << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges; Gamma_0 has "
	   << g0.num_vertices() << " vertices\n";
	os << "edge complement condition: " << (edge_complement_condition(g0) ? "yes" : "no") << "\n";
	os << "triangle: ";
	if (tri)
		os << g0.name((*tri)[0]) << " " << g0.name((*tri)[1]) << " " << g0.name((*tri)[2]) << "\n";
	else
		os << "none\n";
	os << "bipartite: " << (parts ? std::to_string(parts->first) + "+" + std::to_string(parts->second) : "no") << "\n";
	os << "diameter of Gamma_0: " << (diam ? std::to_string(*diam) : "infinite") << "\n";
	os << "connectivity (genus " << c.genus << "): " << to_string(conn.value) << " (" << conn.reason << ")\n";
	os << "hyperbolicity (genus " << c.genus << "): " << to_string(hyp.value) << " (" << hyp.reason << ")\n";
	emit(c, j, os.str());
	return 0;
}

int cmd_ball(const Config& c) {
	Context ctx(c, load_graph(c.graph));
	ArcComplex cx(ctx.T, ctx.g, kind_of(c.complex), c.max_weight);
	if (cx.vertices().empty()) throw PreconditionError("no compatible arcs within the weight bound");
	const Arc base = c.from.empty() ? cx.vertices().front() : load_arc(ctx.T, c.from);
	if (!compatible(base, ctx.g)) throw InputError("base arc is not compatible with the graph");
	const Ball b = ball(cx, base, c.radius);
	if (c.format == "dot") {
		emit(c, {}, to_dot(b));
		return 0;
	}
	Json j;
	j["complex"] = to_string(b.kind);
	j["base"] = to_json(ctx.T, b.base);
	j["radius"] = b.radius;
	j["weight_bound"] = b.weight_bound;
	j["exact"] = b.exact;
	j["vertices"] = Json::array();
	std::ostringstream os;
	os << to_string(b.kind) << " ball about " << b.base.to_string() << ": radius " << b.radius << ", weight bound "
	   << b.weight_bound << ", " << b.vertices.size() << " vertices, " << b.adjacency.size() << " edges"
	   << (b.exact ? "" : " (truncated)") << "\n";
	for (size_t i = 0; i < b.vertices.size(); ++i) {
		j["vertices"].push_back({{"depth", b.depth[i]}, {"arc", to_json(ctx.T, b.vertices[i])}});
		os << "  " << b.depth[i] << "  " << b.vertices[i].to_string() << "\n";
	}
	j["adjacency"] = b.adjacency;
	emit(c, j, os.str());
	return 0;
}

std::string describe(const PathCertificate& cert) {
	std::ostringstream os;
	for (size_t i = 0; i < cert.arcs.size(); ++i)
		os << "  " << i << ": " << cert.arcs[i].to_string() << "  [" << cert.annotations[i] << "]\n";
	return os.str();
}

int cmd_connect(const Config& c) {
	Context ctx(c, load_graph(c.graph));
	Arc a, b;
	if (!c.from.empty() && !c.to.empty()) {
		a = load_arc(ctx.T, c.from);
		b = load_arc(ctx.T, c.to);
	} else {
		ArcComplex cx(ctx.T, ctx.g, ComplexKind::MA, c.max_weight);
		ArcSampler s(cx.vertices(), seed_of(c));
		std::tie(a, b) = s.next_pair([](const Arc&, const Arc&) { return true; });
	}
	const PathCertificate cert = connect(ctx.T, a, b, ctx.g);
	const ValidationResult v = validate_certificate(ctx.T, cert, ctx.g);
	Json j = to_json(ctx.T, cert);
	j["surface"] = {{"genus", c.genus}, {"punctures", ctx.T.punctures()}};
	std::ostringstream os;
	os << "path of length " << cert.length() << " in " << to_string(cert.kind) << "\n" << describe(cert);
	os << "validation: " << (v.ok ? "ok" : "failed at " + std::to_string(v.index) + ": " + v.reason) << "\n";
	if (!c.output.empty()) {
		Config file = c;
		file.format = "json";
		emit(file, j, "");
		std::cout << os.str();
	} else {
		emit(c, j, os.str());
	}
	return v.ok ? 0 : kFail;
}

int cmd_unicorn(const Config& c) {
	Context ctx(c, load_graph(c.graph));
	Arc a, b;
	if (!c.from.empty() && !c.to.empty()) {
		a = load_arc(ctx.T, c.from);
		b = load_arc(ctx.T, c.to);
	} else {
		ArcComplex cx(ctx.T, ctx.g, ComplexKind::MA, c.max_weight);
		ArcSampler s(cx.vertices(), seed_of(c));
		std::tie(a, b) = s.next_pair([](const Arc& x, const Arc& y) { return !(x == y); });
	}
	const int v = c.v.value_or(a.endpoints()[0]), u = c.u.value_or(b.endpoints()[0]);
	const UnicornSequence seq = unicorn_arcs(ctx.T, a, v, b, u);
	int bad = 0;
	Json j;
	j["alpha"] = to_json(ctx.T, a);
	j["v"] = v;
	j["beta"] = to_json(ctx.T, b);
	j["u"] = u;
	j["elements"] = Json::array();
	std::ostringstream os;
	os << "unicorn path from " << a.to_string() << " at " << v << " to " << b.to_string() << " at " << u << ": "
	   << seq.elements.size() << " arcs\n";
	for (size_t i = 0; i < seq.elements.size(); ++i) {
		const bool ok = i == 0 || disjoint(ctx.T, seq.elements[i - 1], seq.elements[i]);
		if (!ok) ++bad;
		j["elements"].push_back(to_json(ctx.T, seq.elements[i]));
		os << "  " << i << ": " << seq.elements[i].to_string() << (ok ? "" : "  (meets previous)") << "\n";
	}
	j["consecutive_disjoint"] = bad == 0;
	os << "consecutive elements disjoint: " << (bad == 0 ? "yes" : "no") << "\n";
	emit(c, j, os.str());
	return bad == 0 ? 0 : kFail;
}

int cmd_validate(const Config& c) {
	const Json cj = read_json_file(c.target);
	Config cc = c;
	if (cj.contains("surface") && cj["surface"].is_object()) {
		if (!cc.punctures && cj["surface"].contains("punctures")) cc.punctures = cj["surface"]["punctures"].get<int>();
		if (cj["surface"].contains("genus") && cj["surface"]["genus"].get<int>() != c.genus)
			throw InputError(c.target + ": certificate was made on genus " + cj["surface"]["genus"].dump());
	}
	Context ctx(cc, load_graph(c.graph));
	const PathCertificate cert = certificate_from_json(ctx.T, cj);
	const ValidationResult v = validate_certificate(ctx.T, cert, ctx.g);
	Json j;
	j["valid"] = v.ok;
	j["length"] = cert.length();
	if (!v.ok) j["failure"] = {{"index", v.index}, {"reason", v.reason}};
	std::ostringstream os;
	os << (v.ok ? "valid" : "invalid") << " " << to_string(cert.kind) << " path of length " << cert.length();
	if (!v.ok) os << ": arc " << v.index << ": " << v.reason;
	os << "\n";
	emit(c, j, os.str());
	return v.ok ? 0 : kFail;
}

// ---------------------------------------------------------------------------
// verify

struct Tally {
	Json instances = Json::array();
	std::ostringstream text;
	int failures = 0;
};

int finish(const Config& c, const std::string& check, Tally& t, long total, Json extra = Json::object()) {
	Json j;
	j["check"] = check;
	j["seed"] = seed_of(c);
	j["max_weight"] = c.max_weight;
	j["instances"] = t.instances;
	j["passed"] = total - t.failures;
	j["total"] = total;
	for (auto& [k, v] : extra.items()) j[k] = v;
	t.text << check << ": " << (total - t.failures) << "/" << total << " pass\n";
	emit(c, j, t.text.str());
	return t.failures == 0 ? 0 : kFail;
}

int verify_bridges(const Config& c, Context& ctx, bool same) {
	ArcComplex cx(ctx.T, ctx.g, ComplexKind::MA, c.max_weight);
	ArcSampler s(cx.vertices(), seed_of(c));
	const int bound = same ? 6 : 4;
	Tally t;
	for (long i = 0; i < c.samples; ++i) {
		const auto [a, b] = s.next_pair([&](const Arc& x, const Arc& y) {
			return !(x == y) && x.shared_endpoints(y) == (same ? 2 : 1) && disjoint(ctx.T, x, y);
		});
		const PathCertificate cert =
		    same ? bridge_same_endpoints(ctx.T, a, b, ctx.g) : bridge_shared_endpoint(ctx.T, a, b, ctx.g);
		const ValidationResult v = validate_certificate(ctx.T, cert, ctx.g);
		const bool ok = v.ok && cert.length() <= bound;
		if (!ok) ++t.failures;
		t.instances.push_back({{"alpha", a.to_string()},
		                       {"beta", b.to_string()},
		                       {"length", cert.length()},
		                       {"valid", v.ok},
		                       {"how", cert.annotations.back()},
		                       {"pass", ok}});
		t.text << "#" << i << " " << a.to_string() << " " << b.to_string() << ": length " << cert.length()
		       << (v.ok ? "" : ", invalid: " + v.reason) << (ok ? " pass" : " FAIL") << "\n";
	}
	return finish(c, same ? "lemma32" : "lemma31", t, c.samples, {{"bound", bound}});
}

int cmd_verify(const Config& c) {
	Context ctx(c, load_graph(c.graph));
	const std::string& check = c.target;
	if (check == "lemma31" || check == "lemma32") return verify_bridges(c, ctx, check == "lemma32");

	ArcComplex a_cx(ctx.T, ctx.g, ComplexKind::A, c.max_weight);
	ComplexWindow aw(a_cx);
	const std::uint64_t seed = seed_of(c);
	Tally t;
	if (check == "qi") {
		ArcComplex ma_cx(ctx.T, ctx.g, ComplexKind::MA, c.max_weight);
		ComplexWindow mw(ma_cx);
		const QiReport r = qi_sample(aw, mw, static_cast<int>(c.samples), seed);
		t.failures = r.failures;
		t.text << "window: " << aw.size() << " arcs of weight <= " << c.max_weight << "\n";
		t.text << "largest d_MA/d_A: " << r.max_ratio_numerator << "/" << r.max_ratio_denominator << "\n";
		if (!r.witness.empty()) t.text << "first failure: " << r.witness << "\n";
		return finish(c, check, t, r.pairs,
		              {{"max_ratio", {r.max_ratio_numerator, r.max_ratio_denominator}}, {"witness", r.witness}});
	}

	TriangleArcBuilder tb(ctx.T, ctx.g);
	ArcSampler s(a_cx.vertices(), seed);
	if (check == "guess") {
		const GuessingReport r = verify_guessing(tb, aw, a_cx.vertices(), c.samples, seed);
		t.failures = r.pass() ? 0 : 1;
		t.text << "M = " << r.M << ", " << r.pairs << " pairs, " << r.triples << " triples\n";
		t.text << "family connected: " << (r.family_ok ? "yes" : "no") << "\n";
		t.text << "adjacent diameters <= M: " << (r.hypothesis1 ? "yes" : "no") << " (worst " << r.worst_diameter << ")\n";
		t.text << "thin triangles within M: " << (r.hypothesis2 ? "yes" : "no") << " (worst " << r.worst_distance
		       << ")\n";
		if (!r.witness.empty()) t.text << "first failure: " << r.witness << "\n";
		return finish(c, check, t, 1,
		              {{"M", r.M},
		               {"family_ok", r.family_ok},
		               {"hypothesis1", r.hypothesis1},
		               {"hypothesis2", r.hypothesis2},
		               {"worst_diameter", r.worst_diameter},
		               {"worst_distance", r.worst_distance},
		               {"witness", r.witness}});
	}
	if (check == "thin") {
		for (long i = 0; i < c.samples; ++i) {
			const Arc a = s.next(), b = s.next(), g = s.next();
			const ThinnessReport r = verify_thinness(tb, aw, a, b, g);
			if (!r.pass) ++t.failures;
			t.instances.push_back({{"alpha", a.to_string()},
			                       {"beta", b.to_string()},
			                       {"gamma", g.to_string()},
			                       {"max_distance", r.max_distance},
			                       {"prime_max_distance", r.prime_max_distance},
			                       {"pass", r.pass}});
			t.text << "#" << i << " " << a.to_string() << " " << b.to_string() << " " << g.to_string() << ": distance "
			       << r.max_distance << ", prime " << r.prime_max_distance << (r.pass ? " pass" : " FAIL") << "\n";
		}
		return finish(c, check, t, c.samples, {{"bound", 2}});
	}
	if (check == "diam") {
		for (long i = 0; i < c.samples; ++i) {
			const Arc a = s.next();
			const auto& nb = a_cx.neighbors(a);
			if (nb.empty()) throw PreconditionError(a.to_string() + " has no neighbours in the window");
			const Arc b = nb[s.draw() % nb.size()];
			const DiameterReport r = verify_diam_bound(tb, aw, a, b);
			if (!r.pass) ++t.failures;
			t.instances.push_back({{"alpha", a.to_string()},
			                       {"beta", b.to_string()},
			                       {"size", r.size},
			                       {"diameter", r.diameter},
			                       {"bound", r.bound},
			                       {"pass", r.pass}});
			t.text << "#" << i << " " << a.to_string() << " " << b.to_string() << ": " << r.size << " arcs, diameter "
			       << r.diameter << " of " << r.bound << (r.pass ? " pass" : " FAIL") << "\n";
		}
		return finish(c, check, t, c.samples);
	}
	throw InputError("unknown check \"" + check + "\"");
}

int cmd_delta(const Config& c) {
	Context ctx(c, load_graph(c.graph));
	ArcComplex cx(ctx.T, ctx.g, kind_of(c.complex), c.max_weight);
	if (cx.vertices().empty()) throw PreconditionError("no compatible arcs within the weight bound");
	const Arc base = c.from.empty() ? cx.vertices().front() : load_arc(ctx.T, c.from);
	const Ball b = ball(cx, base, c.radius);
	constexpr int max_exact = 40;
	if (static_cast<int>(b.vertices.size()) > max_exact && !c.seed)
		throw InputError("--seed is required when quadruples are sampled");
	const DeltaEstimate d = estimate_delta(b, max_exact, c.samples, c.seed.value_or(0));
	Json j;
	j["complex"] = to_string(b.kind);
	j["base"] = b.base.to_string();
	j["radius"] = d.radius;
	j["weight_bound"] = b.weight_bound;
	j["vertices"] = d.vertices;
	j["ball_exact"] = b.exact;
	j["delta"] = d.delta;
	j["quadruples"] = d.quadruples;
	j["all_quadruples"] = d.exact;
	std::ostringstream os;
	os << "four-point delta " << d.delta << " on the " << to_string(b.kind) << " ball of radius " << d.radius
	   << " about " << b.base.to_string() << " (" << d.vertices << " vertices, weight bound " << b.weight_bound
	   << (b.exact ? "" : ", truncated") << "; " << d.quadruples << (d.exact ? " quadruples, all" : " sampled quadruples")
	   << ")\n";
	emit(c, j, os.str());
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"arcx: matching arc complexes of graphs on punctured surfaces"};
	app.require_subcommand(1);
	Config c;

	auto surface_opts = [&](CLI::App* s) {
		s->add_option("--genus", c.genus, "genus of the surface")->check(CLI::NonNegativeNumber);
		s->add_option("--punctures", c.punctures, "number of marked points")->check(CLI::PositiveNumber);
	};
	auto graph_opts = [&](CLI::App* s, std::vector<std::string> formats = {"text", "json"}) {
		surface_opts(s);
		s->add_option("--graph", c.graph, "graph JSON file or builtin name (k5, p5, c6, star5, ...)");
		s->add_option("--max-weight", c.max_weight, "weight bound W")->check(CLI::PositiveNumber);
		s->add_option("--seed", c.seed, "seed for sampling");
		s->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
		s->add_option("--output", c.output, "write the result to a file");
	};

	auto* surface = app.add_subcommand("surface", "surface commands")->require_subcommand(1);
	auto* info = surface->add_subcommand("info", "triangulation of S_{g,n}");
	surface_opts(info);
	info->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
	info->add_option("--output", c.output);

	auto* graph = app.add_subcommand("graph", "graph commands")->require_subcommand(1);
	auto* check = graph->add_subcommand("check", "predicates and verdicts for a graph");
	check->add_option("file", c.target, "graph JSON file or builtin name");
	check->add_option("--graph", c.graph);
	surface_opts(check);
	check->add_option("--format", c.format)->check(CLI::IsMember({"text", "json", "dot"}));
	check->add_option("--output", c.output);

	auto* ball_cmd = app.add_subcommand("ball", "ball in MA or A");
	graph_opts(ball_cmd, {"text", "json", "dot"});
	ball_cmd->add_option("--arc", c.from, "base arc (JSON text or file); default least compatible arc");
	ball_cmd->add_option("--radius", c.radius)->check(CLI::NonNegativeNumber);
	ball_cmd->add_option("--complex", c.complex, "MA or A");

	auto* connect_cmd = app.add_subcommand("connect", "certified path between two arcs");
	graph_opts(connect_cmd);
	connect_cmd->add_option("--from", c.from, "arc (JSON text or file)");
	connect_cmd->add_option("--to", c.to, "arc (JSON text or file)");

	auto* unicorn = app.add_subcommand("unicorn", "unicorn path between two arcs");
	graph_opts(unicorn);
	unicorn->add_option("--from", c.from);
	unicorn->add_option("--to", c.to);
	unicorn->add_option("--v", c.v, "basepoint on the first arc");
	unicorn->add_option("--u", c.u, "basepoint on the second arc");

	auto* validate = app.add_subcommand("validate", "check a path certificate");
	validate->add_option("certificate", c.target)->required();
	graph_opts(validate);

	auto* verify = app.add_subcommand("verify", "seeded batch verification");
	verify->add_option("check", c.target)
	    ->required()
	    ->check(CLI::IsMember({"lemma31", "lemma32", "thin", "diam", "guess", "qi"}));
	graph_opts(verify);
	verify->add_option("--samples", c.samples)->check(CLI::PositiveNumber);

	auto* delta = app.add_subcommand("delta", "four-point hyperbolicity estimate on a ball");
	graph_opts(delta);
	delta->add_option("--arc", c.from);
	delta->add_option("--radius", c.radius)->check(CLI::NonNegativeNumber);
	delta->add_option("--complex", c.complex);
	delta->add_option("--samples", c.samples)->check(CLI::PositiveNumber);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e) == 0 ? 0 : 2;
	}

	try {
		if (info->parsed()) return cmd_surface_info(c);
		if (check->parsed()) return cmd_graph_check(c);
		if (ball_cmd->parsed()) return cmd_ball(c);
		if (connect_cmd->parsed()) return cmd_connect(c);
		if (unicorn->parsed()) return cmd_unicorn(c);
		if (validate->parsed()) return cmd_validate(c);
		if (verify->parsed()) return cmd_verify(c);
		if (delta->parsed()) return cmd_delta(c);
	} catch (const InputError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const PreconditionError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const Json::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "failure: " << e.what() << "\n";
		return kFail;
	}
	return 2;
}
