/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

// qdim: dimensions and quantum dimensions of simple Lie algebras from Vogel's
// universal formulas, identity checks, decomposition tables and instanton sums.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <vogel/vogel.hpp>

namespace {

using json = nlohmann::ordered_json;

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_param_pole = 3, exit_eval_pole = 4 };

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// The document every command produces; rendered as JSON or as plain text.
struct OutputDocument {
	std::string command;
	json inputs = json::object();
	json results = json::object();
	std::string status = "pass";

	json to_json() const { return {{"command", command}, {"inputs", inputs}, {"results", results}, {"status", status}}; }
};

std::string scalar_text(const json& j)
{
	if (j.is_string())
		return j.get<std::string>();
	return j.dump();
}

void render_value(std::ostream& os, const std::string& key, const json& j, int indent)
{
	const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
	if (j.is_object()) {
		os << pad << key << ":\n";
		for (const auto& [k, v] : j.items())
			render_value(os, k, v, indent + 1);
	} else if (j.is_array() && !j.empty() && j.front().is_object()) {
		os << pad << key << ":\n";
		for (const auto& row : j) {
			os << pad << "  -";
			for (const auto& [k, v] : row.items())
				os << " " << k << "=" << scalar_text(v);
			os << "\n";
		}
	} else if (j.is_array()) {
		os << pad << key << ":";
		for (std::size_t i = 0; i < j.size(); ++i)
			os << (i ? ", " : " ") << scalar_text(j[i]);
		os << "\n";
	} else {
		os << pad << key << ": " << scalar_text(j) << "\n";
	}
}

void emit(const OutputDocument& doc, bool as_json)
{
	if (as_json) {
		std::cout << doc.to_json().dump(2) << "\n";
		return;
	}
	std::cout << "command: " << doc.command << "\n";
	render_value(std::cout, "inputs", doc.inputs, 0);
	render_value(std::cout, "results", doc.results, 0);
	std::cout << "status: " << doc.status << "\n";
}

std::string exact(const vogel::Rational& r) { return vogel::to_fraction_string(r); }

std::size_t default_order()
{
	const char* env = std::getenv("QDIM_SERIES_ORDER");
	if (!env || !*env)
		return vogel::default_series_order;
	std::size_t pos = 0;
	long v = -1;
	try {
		v = std::stol(env, &pos);
	} catch (const std::exception&) {
		pos = 0;
	}
	if (pos != std::string(env).size() || v < 0)
		throw UsageError("QDIM_SERIES_ORDER must be a non-negative integer");
	return static_cast<std::size_t>(v);
}

/// Parameters given either as an algebra name or as explicit alpha, beta, gamma.
struct ParamOptions {
	std::vector<std::string> algebra;
	std::optional<std::string> alpha, beta, gamma;

	void add_to(CLI::App* app)
	{
		app->add_option("algebra", algebra, "algebra name, e.g. e8, sl6, \"so 12\"");
		app->add_option("--alpha", alpha, "Vogel parameter alpha (p, p/q or decimal)");
		app->add_option("--beta", beta, "Vogel parameter beta");
		app->add_option("--gamma", gamma, "Vogel parameter gamma");
	}

	vogel::VogelParams resolve(json& inputs) const
	{
		const bool explicit_params = alpha || beta || gamma;
		std::optional<vogel::VogelParams> v;
		if (!algebra.empty()) {
			if (explicit_params)
				throw UsageError("give either an algebra or --alpha/--beta/--gamma, not both");
			std::string name;
			for (const auto& part : algebra)
				name += part;
			const vogel::AlgebraId id = vogel::parse_algebra(name);
			inputs["algebra"] = vogel::algebra_name(id);
			v = vogel::vogel_params(id);
		} else {
			if (!alpha || !beta || !gamma)
				throw UsageError("need an algebra name or all of --alpha, --beta, --gamma");
			v = vogel::VogelParams(vogel::parse_rational(*alpha), vogel::parse_rational(*beta),
			                       vogel::parse_rational(*gamma));
		}
		inputs["alpha"] = exact(v->alpha());
		inputs["beta"] = exact(v->beta());
		inputs["gamma"] = exact(v->gamma());
		return *v;
	}
};

// ---------------------------------------------------------------------------

OutputDocument cmd_dim(const ParamOptions& p)
{
	OutputDocument doc{"dim"};
	const vogel::VogelParams v = p.resolve(doc.inputs);
	doc.results["dim"] = exact(vogel::dim_adjoint(v));
	doc.results["t"] = exact(v.t());
	doc.results["casimir_adjoint"] = exact(vogel::casimir_adjoint(v));
	doc.results["casimir_y2_alpha"] = exact(vogel::casimir_y2(v, vogel::Slot::alpha));
	doc.results["casimir_y2_beta"] = exact(vogel::casimir_y2(v, vogel::Slot::beta));
	doc.results["casimir_y2_gamma"] = exact(vogel::casimir_y2(v, vogel::Slot::gamma));
	return doc;
}

struct QdimOptions {
	std::string kind;
	long n = 1, k = 0, l = 0;
	std::string slot = "alpha";
	std::optional<double> x;
	std::optional<std::size_t> series;
};

vogel::SinhProduct qdim_formula(const QdimOptions& q, json& inputs)
{
	inputs["kind"] = q.kind;
	if (q.kind == "adjoint")
		return vogel::formula::adjoint();
	if (q.kind == "x2")
		return vogel::formula::x2();
	if (q.kind == "cartan") {
		if (q.n < 1)
			throw UsageError("--n must be at least 1");
		inputs["n"] = q.n;
		return vogel::formula::cartan_power(q.n);
	}
	if (q.kind == "y2") {
		const auto slot = vogel::parse_slot(q.slot);
		if (!slot)
			throw UsageError("--slot must be alpha, beta or gamma");
		inputs["slot"] = q.slot;
		return vogel::formula::y2(*slot);
	}
	if (q.kind == "z") {
		if (q.k < 0 || q.l < 0)
			throw UsageError("--k and --l must be non-negative");
		inputs["k"] = q.k;
		inputs["l"] = q.l;
		return vogel::formula::z(q.k, q.l);
	}
	throw UsageError("unknown kind '" + q.kind + "' (adjoint, cartan, y2, x2, z)");
}

OutputDocument cmd_qdim(const ParamOptions& p, const QdimOptions& q)
{
	OutputDocument doc{"qdim"};
	const vogel::SinhProduct f = qdim_formula(q, doc.inputs);
	const vogel::VogelParams v = p.resolve(doc.inputs);
	if (q.x && q.series)
		throw UsageError("give either --x or --series");
	const vogel::ReducedProduct r = f.reduce();
	r.check_poles(v);
	if (q.x) {
		doc.inputs["x"] = *q.x;
		doc.results["value"] = r.value(vogel::to_numeric(v), *q.x);
		return doc;
	}
	const std::size_t order = q.series ? *q.series : default_order();
	doc.inputs["order"] = order;
	const vogel::Series s = r.series(v, order);
	json coeffs = json::array();
	for (const auto& c : s.coefficients())
		coeffs.push_back(exact(c));
	doc.results["constant_term"] = exact(s[0]);
	doc.results["coefficients"] = coeffs;
	return doc;
}

struct VerifyOptions {
	std::string identity;
	std::optional<std::size_t> order, trials;
	std::uint64_t seed = 1;
	std::string mode = "series";
	unsigned threads = 0;
};

void fill_specialization(OutputDocument& doc, const vogel::SpecializationReport& r)
{
	json checks = json::array();
	for (const auto& c : r.checks)
		checks.push_back({{"algebra", c.algebra},
		                  {"check", c.what},
		                  {"universal", exact(c.universal)},
		                  {"reference", exact(c.reference)},
		                  {"pass", c.passed}});
	doc.results["checks"] = checks;
	doc.results["passed"] = r.passed();
	doc.status = r.passed() ? "pass" : "fail";
}

OutputDocument cmd_verify(const VerifyOptions& o)
{
	OutputDocument doc{"verify"};
	doc.inputs["identity"] = o.identity;
	if (o.identity == "specialization" || o.identity == "g2zero") {
		const std::size_t order = o.order ? *o.order : default_order();
		doc.inputs["order"] = order;
		fill_specialization(doc, o.identity == "g2zero" ? vogel::verify_g2_zero(order)
		                                                : vogel::verify_specialization(order));
		return doc;
	}
	const auto id = vogel::parse_identity(o.identity);
	if (!id)
		throw UsageError("unknown identity '" + o.identity + "' (s2, a2, s3, specialization, g2zero)");
	const auto mode = vogel::parse_mode(o.mode);
	if (!mode)
		throw UsageError("--mode must be series or numeric");
	const std::size_t order = o.order ? *o.order : default_order();
	const std::size_t trials = o.trials ? *o.trials : (*mode == vogel::Mode::series ? 100 : 10000);
	if (trials < 1)
		throw UsageError("--trials must be at least 1");
	if (*mode == vogel::Mode::series && order < 1)
		throw UsageError("--order must be at least 1");
	doc.inputs["mode"] = o.mode;
	if (*mode == vogel::Mode::series)
		doc.inputs["order"] = order;
	doc.inputs["trials"] = trials;
	doc.inputs["seed"] = o.seed;

	const vogel::IdentityReport r = vogel::verify_identity(*id, *mode, order, trials, o.seed, o.threads);
	doc.results["points_checked"] = r.points_checked;
	if (*mode == vogel::Mode::series) {
		doc.results["order_checked"] = r.order_checked;
		doc.results["exact_zero"] = r.exact_zero;
	} else {
		doc.results["tolerance"] = vogel::numeric_tolerance;
		doc.results["max_abs_residual"] = r.max_abs_residual;
		doc.results["max_rel_residual"] = r.max_rel_residual;
	}
	json failures = json::array();
	for (const auto& f : r.failures)
		failures.push_back({{"point", f.point}, {"detail", f.detail}});
	doc.results["failures"] = failures;
	doc.results["passed"] = r.passed();
	doc.status = r.passed() ? "pass" : "fail";
	return doc;
}

OutputDocument cmd_table(const std::string& which)
{
	OutputDocument doc{"table"};
	doc.inputs["table"] = which;
	const auto spec = vogel::table_spec(which);
	if (!spec)
		throw UsageError("unknown table '" + which + "' (s3-sl6, s3-f4, s3-so12)");
	doc.inputs["algebra"] = vogel::algebra_name(spec->algebra);
	const vogel::TableResult t = vogel::regenerate_table(*spec);
	json rows = json::array();
	for (const auto& r : t.rows)
		rows.push_back({{"row", r.name},
		                {"tabulated", r.expected_text},
		                {"universal", exact(r.universal)},
		                {"weyl", exact(r.weyl)},
		                {"agree", r.agree}});
	doc.results["rows"] = rows;
	doc.results["universal_sum"] = exact(t.universal_sum);
	doc.results["weyl_sum"] = exact(t.weyl_sum);
	doc.results["tabulated_sum"] = exact(t.expected_sum);
	doc.results["sym_cube_dim"] = exact(t.sym_cube_dim);
	doc.results["passed"] = t.passed();
	doc.status = t.passed() ? "pass" : "fail";
	return doc;
}

struct InstantonOptions {
	double eps1 = 0, eps2 = 0, sigma = 0, x = 0.5;
	int nmax = 10;
};

OutputDocument cmd_instanton(const ParamOptions& p, const InstantonOptions& o)
{
	OutputDocument doc{"instanton"};
	const vogel::VogelParams v = p.resolve(doc.inputs);
	doc.inputs["eps1"] = o.eps1;
	doc.inputs["eps2"] = o.eps2;
	doc.inputs["sigma"] = o.sigma;
	doc.inputs["x"] = o.x;
	doc.inputs["nmax"] = o.nmax;
	if (o.nmax < 1)
		throw UsageError("--nmax must be at least 1");
	const vogel::InstantonParams ip(o.eps1, o.eps2, o.sigma, o.x, o.nmax);
	const vogel::InstantonTermTable t = vogel::one_instanton_sum(v, ip);
	json rows = json::array();
	for (const auto& r : t.rows)
		rows.push_back({{"n", r.n}, {"term", r.term}, {"partial_sum", r.partial_sum}});
	doc.results["rows"] = rows;
	doc.results["sum"] = t.sum();
	doc.results["converged"] = t.converged;
	return doc;
}

OutputDocument error_document(const std::string& command, const std::string& message)
{
	OutputDocument doc{command};
	doc.results["error"] = message;
	doc.status = "error";
	return doc;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Universal dimensions and quantum dimensions of simple Lie algebras"};
	app.require_subcommand(1);
	bool as_json = false;
	app.add_flag("--json", as_json, "structured output");

	ParamOptions dim_params, qdim_params, inst_params;
	QdimOptions qdim;
	VerifyOptions verify;
	std::string table;
	InstantonOptions inst;

	auto* dim = app.add_subcommand("dim", "dimension of the adjoint and Casimir eigenvalues");
	dim_params.add_to(dim);

	auto* qd = app.add_subcommand("qdim", "quantum dimension of a universal representation");
	qd->add_option("kind", qdim.kind, "adjoint | cartan | y2 | x2 | z")->required();
	qdim_params.add_to(qd);
	qd->add_option("--n", qdim.n, "Cartan power");
	qd->add_option("--slot", qdim.slot, "Y2 slot: alpha, beta or gamma");
	qd->add_option("--k", qdim.k, "power of the adjoint in Z(k, l)");
	qd->add_option("--l", qdim.l, "power of Y2(beta) in Z(k, l)");
	qd->add_option("--x", qdim.x, "evaluate at this x");
	qd->add_option("--series", qdim.series, "print exact coefficients up to this order");

	auto* ver = app.add_subcommand("verify", "check an identity or a specialization suite");
	ver->add_option("identity", verify.identity, "s2 | a2 | s3 | specialization | g2zero")->required();
	ver->add_option("--order", verify.order, "series truncation order");
	ver->add_option("--trials", verify.trials, "number of sampled points");
	ver->add_option("--seed", verify.seed, "sampler seed");
	ver->add_option("--mode", verify.mode, "series | numeric");
	ver->add_option("--threads", verify.threads, "worker threads (0: all cores)");

	auto* tab = app.add_subcommand("table", "regenerate a symmetric-cube decomposition table");
	tab->add_option("which", table, "s3-sl6 | s3-f4 | s3-so12")->required();

	auto* ins = app.add_subcommand("instanton", "one-instanton sum");
	inst_params.add_to(ins);
	ins->add_option("--eps1", inst.eps1, "epsilon 1");
	ins->add_option("--eps2", inst.eps2, "epsilon 2");
	ins->add_option("--sigma", inst.sigma, "expansion parameter");
	ins->add_option("--x", inst.x, "Weyl-line coordinate");
	ins->add_option("--nmax", inst.nmax, "number of terms");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? exit_pass : exit_usage;
	}

	std::string command = app.get_subcommands().front()->get_name();
	try {
		OutputDocument doc;
		if (*dim)
			doc = cmd_dim(dim_params);
		else if (*qd)
			doc = cmd_qdim(qdim_params, qdim);
		else if (*ver)
			doc = cmd_verify(verify);
		else if (*tab)
			doc = cmd_table(table);
		else
			doc = cmd_instanton(inst_params, inst);
		emit(doc, as_json);
		return doc.status == "pass" ? exit_pass : exit_fail;
	} catch (const vogel::pole_at_parameters& e) {
		emit(error_document(command, e.what()), as_json);
		return exit_param_pole;
	} catch (const vogel::pole_at_x& e) {
		emit(error_document(command, e.what()), as_json);
		return exit_eval_pole;
	} catch (const UsageError& e) {
		std::cerr << "qdim: " << e.what() << "\n";
		return exit_usage;
	} catch (const vogel::unknown_algebra& e) {
		std::cerr << "qdim: " << e.what() << "\n";
		return exit_usage;
	} catch (const vogel::invalid_rank& e) {
		std::cerr << "qdim: " << e.what() << "\n";
		return exit_usage;
	} catch (const std::invalid_argument& e) {
		std::cerr << "qdim: " << e.what() << "\n";
		return exit_usage;
	} catch (const std::exception& e) {
		emit(error_document(command, e.what()), as_json);
		return exit_fail;
	}
}
