/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "sinh_product.hpp"
#include "universal.hpp"
#include "vogel_params.hpp"

namespace vogel {

// ---------------------------------------------------------------------------
// Plethysms of a character f. Arguments are f(x), f(2x), f(3x); V is a series
// or a plain number.

namespace detail {

inline double scalar(long p, long q, double) { return static_cast<double>(p) / static_cast<double>(q); }
inline Rational scalar(long p, long q, const Series&) { return make_rational(p, q); }

} // namespace detail

template <typename V>
V sym_square(const V& f1, const V& f2)
{
	return (f1 * f1 + f2) * detail::scalar(1, 2, f1);
}

template <typename V>
V antisym_square(const V& f1, const V& f2)
{
	return (f1 * f1 - f2) * detail::scalar(1, 2, f1);
}

template <typename V>
V sym_cube(const V& f1, const V& f2, const V& f3)
{
	return (f1 * f1 * f1 + f2 * f1 * detail::scalar(3, 1, f1) + f3 * detail::scalar(2, 1, f1)) *
	       detail::scalar(1, 6, f1);
}

inline Series char_sym_square(const Series& f) { return sym_square(f, f.scaled_argument(Rational(2))); }

inline Series char_antisym_square(const Series& f) { return antisym_square(f, f.scaled_argument(Rational(2))); }

inline Series char_sym_cube(const Series& f)
{
	return sym_cube(f, f.scaled_argument(Rational(2)), f.scaled_argument(Rational(3)));
}

// ---------------------------------------------------------------------------
// The three decomposition identities.

enum class IdentityId { s2_sym, a2_antisym, s3_sym_cube };

inline std::string identity_name(IdentityId id)
{
	switch (id) {
	case IdentityId::s2_sym: return "s2";
	case IdentityId::a2_antisym: return "a2";
	case IdentityId::s3_sym_cube: return "s3";
	}
	return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view s)
{
	if (s == "s2")
		return IdentityId::s2_sym;
	if (s == "a2")
		return IdentityId::a2_antisym;
	if (s == "s3")
		return IdentityId::s3_sym_cube;
	return std::nullopt;
}

/// One signed summand of an identity's right-hand side.
struct IdentityTerm {
	std::string label;
	long coefficient;
	ReducedProduct product;
};

/// Reduced formulas of both sides, built once and shared by every trial.
class Identity {
public:
	explicit Identity(IdentityId id) : id_(id), adjoint_(formula::adjoint().reduce())
	{
		using formula::x2;
		using formula::y2;
		using formula::z;
		auto add = [this](std::string label, long c, const SinhProduct& p) {
			terms_.push_back({std::move(label), c, p.reduce()});
		};
		switch (id) {
		case IdentityId::s2_sym:
			add("Y2(alpha)", 1, y2(Slot::alpha));
			add("Y2(beta)", 1, y2(Slot::beta));
			add("Y2(gamma)", 1, y2(Slot::gamma));
			constant_ = 1;
			break;
		case IdentityId::a2_antisym:
			add("g", 1, formula::adjoint());
			add("X2", 1, x2());
			break;
		case IdentityId::s3_sym_cube:
			add("Z(3,0)(alpha,beta,gamma)", 1, z(3, 0));
			add("Z(3,0)(beta,alpha,gamma)", 1, z(3, 0).permuted({1, 0, 2}));
			add("Z(3,0)(gamma,beta,alpha)", 1, z(3, 0).permuted({2, 1, 0}));
			add("Z(1,1)(alpha,beta,gamma)", 1, z(1, 1));
			add("Z(1,1)(alpha,gamma,beta)", 1, z(1, 1).permuted({0, 2, 1}));
			add("Z(1,1)(beta,gamma,alpha)", 1, z(1, 1).permuted({1, 2, 0}));
			add("X2", 1, x2());
			add("g", 2, formula::adjoint());
			break;
		}
		auto push = [this](const LinearForm& f) {
			if (std::find(poles_.begin(), poles_.end(), f) == poles_.end())
				poles_.push_back(f);
		};
		push({1, 0, 0});
		push({0, 1, 0});
		push({0, 0, 1});
		for (const auto& f : adjoint_.pole_forms())
			push(f);
		for (const auto& t : terms_)
			for (const auto& f : t.product.pole_forms())
				push(f);
	}

	IdentityId id() const noexcept { return id_; }
	const std::vector<IdentityTerm>& terms() const noexcept { return terms_; }
	long constant() const noexcept { return constant_; }
	/// Every linear form whose vanishing leaves some side undefined.
	const std::vector<LinearForm>& pole_forms() const noexcept { return poles_; }

	Series lhs(const VogelParams& v, std::size_t order) const
	{
		const Series f = adjoint_.series(v, order);
		switch (id_) {
		case IdentityId::s2_sym: return char_sym_square(f);
		case IdentityId::a2_antisym: return char_antisym_square(f);
		case IdentityId::s3_sym_cube: return char_sym_cube(f);
		}
		throw std::logic_error("bad identity");
	}

	Series rhs(const VogelParams& v, std::size_t order) const
	{
		Series s = Series::constant(Rational(constant_), order);
		for (const auto& t : terms_) {
			Series term = t.product.series(v, order);
			term *= Rational(t.coefficient);
			s = s + term;
		}
		return s;
	}

	double lhs_value(const NumericVogelParams& v, double x) const
	{
		const double f1 = adjoint_.value(v, x);
		const double f2 = adjoint_.value(v, 2 * x);
		switch (id_) {
		case IdentityId::s2_sym: return sym_square(f1, f2);
		case IdentityId::a2_antisym: return antisym_square(f1, f2);
		case IdentityId::s3_sym_cube: return sym_cube(f1, f2, adjoint_.value(v, 3 * x));
		}
		throw std::logic_error("bad identity");
	}

	/// Values of the constant and of every right-hand term, in order.
	std::vector<double> rhs_values(const NumericVogelParams& v, double x) const
	{
		std::vector<double> out{static_cast<double>(constant_)};
		for (const auto& t : terms_)
			out.push_back(static_cast<double>(t.coefficient) * t.product.value(v, x));
		return out;
	}

private:
	IdentityId id_;
	ReducedProduct adjoint_;
	std::vector<IdentityTerm> terms_;
	long constant_ = 0;
	std::vector<LinearForm> poles_;
};

inline Series identity_lhs(IdentityId id, const VogelParams& v, std::size_t order = default_series_order)
{
	return Identity(id).lhs(v, order);
}

/// Right-hand side; throws pole_at_parameters when any term is undefined at v.
inline Series identity_rhs(IdentityId id, const VogelParams& v, std::size_t order = default_series_order)
{
	return Identity(id).rhs(v, order);
}

// ---------------------------------------------------------------------------
// Sampling.

enum class Mode { series, numeric };

inline std::string mode_name(Mode m) { return m == Mode::series ? "series" : "numeric"; }

inline std::optional<Mode> parse_mode(std::string_view s)
{
	if (s == "series")
		return Mode::series;
	if (s == "numeric")
		return Mode::numeric;
	return std::nullopt;
}

/// Where sampled points live: the whole plane or one of the distinguished lines.
struct SampleRegion {
	static SampleRegion plane() { return {}; }
	static SampleRegion on(Line l) { return {l}; }
	std::optional<Line> line;
};

inline constexpr long sample_bound = 64;
inline constexpr double numeric_pole_margin = 1e-3;

namespace detail {

inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index)
{
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
	return std::mt19937_64(seq);
}

inline Rational draw_rational(std::mt19937_64& eng)
{
	std::uniform_int_distribution<long> num(-sample_bound, sample_bound), den(1, sample_bound);
	const long p = num(eng);
	return make_rational(p, den(eng));
}

inline bool near_pole(const std::vector<LinearForm>& poles, const VogelParams& v, Mode mode)
{
	const NumericVogelParams nv = to_numeric(v);
	for (const auto& f : poles) {
		if (is_zero(f.value(v)))
			return true;
		if (mode == Mode::numeric && std::fabs(f.value(nv)) < numeric_pole_margin)
			return true;
	}
	return false;
}

inline std::optional<VogelParams> draw_params(std::mt19937_64& eng, const SampleRegion& region)
{
	if (region.line)
		return line_parametrization(*region.line).at(draw_rational(eng));
	Rational a = draw_rational(eng), b = draw_rational(eng), g = draw_rational(eng);
	if (is_zero(a) && is_zero(b) && is_zero(g))
		return std::nullopt;
	return VogelParams(std::move(a), std::move(b), std::move(g));
}

} // namespace detail

/// A sampled point: rational parameters and, in numeric mode, an x in [0.05, 1].
struct SamplePoint {
	VogelParams params;
	double x;
};

/// Deterministic point number `index` of the stream `seed`. Draws that land on a
/// pole form (or within the numeric margin of one) are redrawn from the same stream.
/// alpha, beta and gamma are always pole forms.
inline SamplePoint sample_point(const SampleRegion& region, std::uint64_t seed, std::uint64_t index,
                                const std::vector<LinearForm>& poles, Mode mode = Mode::series)
{
	std::vector<LinearForm> all = poles;
	for (LinearForm f : {LinearForm{1, 0, 0}, LinearForm{0, 1, 0}, LinearForm{0, 0, 1}})
		if (std::find(all.begin(), all.end(), f) == all.end())
			all.push_back(f);
	auto eng = detail::trial_engine(seed, index);
	std::uniform_real_distribution<double> xs(0.05, 1.0);
	for (int attempt = 0; attempt < 100000; ++attempt) {
		auto v = detail::draw_params(eng, region);
		const double x = xs(eng);
		if (v && !detail::near_pole(all, *v, mode))
			return {*v, x};
	}
	throw std::runtime_error("sampler could not avoid the pole set");
}

inline VogelParams sample_params(const SampleRegion& region, std::uint64_t seed, std::uint64_t index,
                                 const std::vector<LinearForm>& poles = {}, Mode mode = Mode::series)
{
	return sample_point(region, seed, index, poles, mode).params;
}

// ---------------------------------------------------------------------------
// Verification.

inline constexpr double numeric_tolerance = 1e-9;

struct IdentityFailure {
	std::string point;
	std::string detail;
};

struct IdentityReport {
	IdentityId identity = IdentityId::s2_sym;
	Mode mode = Mode::series;
	std::size_t order_checked = 0;
	std::size_t points_checked = 0;
	/// Series mode: every coefficient of LHS - RHS was exactly zero at every point.
	bool exact_zero = false;
	/// Numeric mode: largest |LHS - RHS| and largest |LHS - RHS| / max(|LHS|, sum |terms|).
	double max_abs_residual = 0;
	double max_rel_residual = 0;
	std::vector<IdentityFailure> failures;
	std::uint64_t seed = 0;

	bool passed() const { return failures.empty(); }

	friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline bool operator==(const IdentityFailure& a, const IdentityFailure& b)
{
	return a.point == b.point && a.detail == b.detail;
}

namespace detail {

struct TrialOutcome {
	double abs_residual = 0;
	double rel_residual = 0;
	std::optional<IdentityFailure> failure;
};

inline TrialOutcome run_trial(const Identity& ident, Mode mode, std::size_t order, std::uint64_t seed,
                              std::uint64_t index)
{
	TrialOutcome out;
	const SamplePoint pt = sample_point(SampleRegion::plane(), seed, index, ident.pole_forms(), mode);
	try {
		if (mode == Mode::series) {
			const Series diff = ident.lhs(pt.params, order) - ident.rhs(pt.params, order);
			const std::size_t k = diff.valuation();
			if (k <= diff.order())
				out.failure = IdentityFailure{to_string(pt.params), "coefficient of x^" + std::to_string(k) +
				                                                        " is " + to_string(diff[k])};
			return out;
		}
		const NumericVogelParams nv = to_numeric(pt.params);
		const double lhs = ident.lhs_value(nv, pt.x);
		double rhs = 0, scale = std::fabs(lhs);
		double mag = 0;
		for (double t : ident.rhs_values(nv, pt.x)) {
			rhs += t;
			mag += std::fabs(t);
		}
		scale = std::max(scale, mag);
		out.abs_residual = std::fabs(lhs - rhs);
		out.rel_residual = scale > 0 ? out.abs_residual / scale : out.abs_residual;
		if (!(out.rel_residual <= numeric_tolerance)) {
			std::ostringstream d;
			d.precision(17);
			d << "x = " << pt.x << ": relative residual " << out.rel_residual;
			out.failure = IdentityFailure{to_string(pt.params), d.str()};
		}
	} catch (const error& e) {
		out.failure = IdentityFailure{to_string(pt.params), e.what()};
	}
	return out;
}

} // namespace detail

/// Checks LHS = RHS at `trials` sampled points. Trials run on up to `threads`
/// workers; the report depends only on the arguments, never on scheduling.
inline IdentityReport verify_identity(IdentityId id, Mode mode, std::size_t order, std::size_t trials,
                                      std::uint64_t seed, unsigned threads = 0)
{
	if (order < 1 && mode == Mode::series)
		throw std::invalid_argument("order must be at least 1");
	if (trials < 1)
		throw std::invalid_argument("trials must be at least 1");
	const Identity ident(id);
	std::vector<detail::TrialOutcome> outcomes(trials);
	if (threads == 0)
		threads = std::max(1u, std::thread::hardware_concurrency());
	threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
	auto work = [&](unsigned w) {
		for (std::size_t i = w; i < trials; i += threads)
			outcomes[i] = detail::run_trial(ident, mode, order, seed, i);
	};
	if (threads == 1) {
		work(0);
	} else {
		std::vector<std::jthread> pool;
		for (unsigned w = 0; w < threads; ++w)
			pool.emplace_back(work, w);
	}

	IdentityReport r;
	r.identity = id;
	r.mode = mode;
	r.order_checked = mode == Mode::series ? order : 0;
	r.points_checked = trials;
	r.seed = seed;
	for (auto& o : outcomes) {
		r.max_abs_residual = std::max(r.max_abs_residual, o.abs_residual);
		r.max_rel_residual = std::max(r.max_rel_residual, o.rel_residual);
		if (o.failure)
			r.failures.push_back(std::move(*o.failure));
	}
	r.exact_zero = mode == Mode::series && r.failures.empty();
	return r;
}

} // namespace vogel
