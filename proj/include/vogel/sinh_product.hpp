/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "vogel_params.hpp"

namespace vogel {

/// c_alpha * alpha + c_beta * beta + c_gamma * gamma.
class LinearForm {
public:
	LinearForm() = default;
	LinearForm(Rational a, Rational b, Rational g) : c_{std::move(a), std::move(b), std::move(g)} {}

	const Rational& operator[](std::size_t i) const { return c_[i]; }

	Rational value(const VogelParams& v) const
	{
		return Rational(c_[0] * v.alpha() + c_[1] * v.beta() + c_[2] * v.gamma());
	}

	double value(const NumericVogelParams& v) const
	{
		return to_double(c_[0]) * v.alpha() + to_double(c_[1]) * v.beta() + to_double(c_[2]) * v.gamma();
	}

	bool is_zero() const { return vogel::is_zero(c_[0]) && vogel::is_zero(c_[1]) && vogel::is_zero(c_[2]); }

	/// First nonzero coefficient; zero for the zero form.
	Rational leading() const
	{
		for (const auto& c : c_)
			if (!vogel::is_zero(c))
				return c;
		return 0;
	}

	LinearForm scaled(const Rational& s) const
	{
		return {Rational(c_[0] * s), Rational(c_[1] * s), Rational(c_[2] * s)};
	}

	/// The form G with G(v) = F(v.permuted(order)).
	LinearForm permuted(const std::array<int, 3>& order) const
	{
		LinearForm r;
		for (int k = 0; k < 3; ++k)
			r.c_[order[k]] += c_[k];
		return r;
	}

	friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }

	friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b)
	{
		for (int k = 0; k < 3; ++k) {
			int c = cmp(a.c_[k], b.c_[k]);
			if (c != 0)
				return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
		}
		return std::strong_ordering::equal;
	}

	std::string to_string() const
	{
		static const char* names[] = {"alpha", "beta", "gamma"};
		std::string out;
		for (int k = 0; k < 3; ++k) {
			if (vogel::is_zero(c_[k]))
				continue;
			Rational mag = abs(c_[k]);
			if (out.empty())
				out += sgn(c_[k]) < 0 ? "-" : "";
			else
				out += sgn(c_[k]) < 0 ? " - " : " + ";
			if (mag != 1)
				out += vogel::to_string(mag) + "*";
			out += names[k];
		}
		return out.empty() ? "0" : out;
	}

private:
	std::array<Rational, 3> c_;
};

/// sinh(multiple * base * x / 4) / sinh(base * x / 4). Entire in (x, parameters);
/// at base = 0 it is the constant `multiple`.
struct RatioFactor {
	Rational multiple;
	LinearForm base;
};

namespace detail {

/// sinh(u) / sinh(w) without overflow for large arguments. w != 0.
inline double sinh_quotient(double u, double w)
{
	if (u == 0.0)
		return 0.0;
	const double au = std::fabs(u), aw = std::fabs(w);
	if (std::max(au, aw) < 20.0)
		return std::sinh(u) / std::sinh(w);
	const double sign = ((u < 0) != (w < 0)) ? -1.0 : 1.0;
	return sign * std::exp(au - aw) * (-std::expm1(-2.0 * au)) / (-std::expm1(-2.0 * aw));
}

} // namespace detail

/// A sinh product after cancellation: sign * prod ratios * prod sinh(num x/4) / prod sinh(den x/4).
///
/// Ratio factors pair numerator and denominator forms that are proportional, so
/// they stay finite on the locus where their common direction vanishes. Only the
/// unpaired ("free") denominator forms can produce a pole at a parameter point.
class ReducedProduct {
public:
	ReducedProduct(int sign, bool identically_zero, std::vector<RatioFactor> ratios,
	               std::vector<LinearForm> free_num, std::vector<LinearForm> free_den)
	: sign_(sign), identically_zero_(identically_zero), ratios_(std::move(ratios)),
	  free_num_(std::move(free_num)), free_den_(std::move(free_den))
	{
		if (!identically_zero_ && free_num_.size() != free_den_.size())
			throw std::logic_error("unbalanced sinh product");
	}

	int sign() const noexcept { return sign_; }
	bool identically_zero() const noexcept { return identically_zero_; }
	const std::vector<RatioFactor>& ratios() const noexcept { return ratios_; }
	const std::vector<LinearForm>& free_numerators() const noexcept { return free_num_; }
	const std::vector<LinearForm>& free_denominators() const noexcept { return free_den_; }

	/// Forms whose vanishing makes the product undefined.
	const std::vector<LinearForm>& pole_forms() const noexcept { return free_den_; }

	/// Throws pole_at_parameters if a free denominator vanishes at v.
	void check_poles(const VogelParams& v) const
	{
		for (const auto& f : free_den_)
			if (vogel::is_zero(f.value(v)))
				throw pole_at_parameters(f.to_string(), to_string(v));
	}

	bool vanishes_at(const VogelParams& v) const
	{
		if (identically_zero_)
			return true;
		return std::any_of(free_num_.begin(), free_num_.end(),
		                   [&](const LinearForm& f) { return vogel::is_zero(f.value(v)); });
	}

	/// x -> 0 limit.
	Rational constant_term(const VogelParams& v) const
	{
		check_poles(v);
		if (vanishes_at(v))
			return 0;
		Rational c(sign_);
		for (const auto& r : ratios_)
			c *= r.multiple;
		for (std::size_t i = 0; i < free_num_.size(); ++i)
			c *= free_num_[i].value(v) / free_den_[i].value(v);
		return c;
	}

	/// Exact Taylor series in x to the given order.
	Series series(const VogelParams& v, std::size_t order) const
	{
		check_poles(v);
		if (vanishes_at(v))
			return Series(order);
		const Rational quarter(1, 4);
		Rational c(sign_);
		SinhcProductBuilder acc(order);
		for (const auto& r : ratios_) {
			const Rational base = r.base.value(v);
			c *= r.multiple;
			acc.multiply(Rational(r.multiple * base * quarter));
			acc.divide(Rational(base * quarter));
		}
		for (std::size_t i = 0; i < free_num_.size(); ++i) {
			const Rational a = free_num_[i].value(v), b = free_den_[i].value(v);
			c *= a / b;
			acc.multiply(Rational(a * quarter));
			acc.divide(Rational(b * quarter));
		}
		Series out = acc.result();
		out *= c;
		return out;
	}

	/// Direct double-precision evaluation at (v, x).
	double value(const NumericVogelParams& v, double x) const
	{
		if (!std::isfinite(x))
			throw pole_at_x("non-finite x");
		for (const auto& f : free_den_)
			if (f.value(v) == 0.0)
				throw pole_at_parameters(f.to_string(), "numeric point");
		if (identically_zero_)
			return 0.0;
		double acc = sign_;
		for (const auto& r : ratios_) {
			const double m = to_double(r.multiple);
			const double w = r.base.value(v) * x / 4.0;
			acc *= (w == 0.0) ? m : detail::sinh_quotient(m * w, w);
		}
		for (std::size_t i = 0; i < free_num_.size(); ++i) {
			const double a = free_num_[i].value(v), b = free_den_[i].value(v);
			acc *= (x == 0.0) ? a / b : detail::sinh_quotient(a * x / 4.0, b * x / 4.0);
		}
		if (!std::isfinite(acc))
			throw pole_at_x("non-finite value at x = " + std::to_string(x));
		return acc;
	}

	/// Constant term along an affine line of parameters, as the parameter tends to `at`.
	///
	/// Each free form restricts to a + b N; zeros of numerator and denominator at
	/// N = at are counted with multiplicity and the leading coefficients divided.
	Rational line_limit(const AffineLine& line, const Rational& at) const
	{
		if (identically_zero_)
			return 0;
		Rational value(sign_);
		for (const auto& r : ratios_)
			value *= r.multiple;
		long zero_order = 0;
		auto restrict = [&](const LinearForm& f) {
			Rational a(0), b(0);
			for (int k = 0; k < 3; ++k) {
				a += f[k] * line.base[k];
				b += f[k] * line.direction[k];
			}
			return std::pair{a, b};
		};
		for (const auto& f : free_num_) {
			auto [a, b] = restrict(f);
			Rational w = a + b * at;
			if (!vogel::is_zero(w))
				value *= w;
			else if (!vogel::is_zero(b)) {
				value *= b;
				++zero_order;
			} else
				return 0;
		}
		for (const auto& f : free_den_) {
			auto [a, b] = restrict(f);
			Rational w = a + b * at;
			if (!vogel::is_zero(w))
				value /= w;
			else if (!vogel::is_zero(b)) {
				value /= b;
				--zero_order;
			} else
				throw pole_at_parameters(f.to_string(), "every point of the line");
		}
		if (zero_order > 0)
			return 0;
		if (zero_order < 0)
			throw pole_at_parameters("order-" + std::to_string(-zero_order) + " pole along the line at " +
			                         vogel::to_string(at));
		return value;
	}

private:
	int sign_;
	bool identically_zero_;
	std::vector<RatioFactor> ratios_;
	std::vector<LinearForm> free_num_;
	std::vector<LinearForm> free_den_;
};

/// sign * prod_i sinh(num_i x / 4) / prod_j sinh(den_j x / 4), with num_i, den_j
/// linear forms in the Vogel parameters. Every universal quantum dimension is one
/// of these.
class SinhProduct {
public:
	SinhProduct() = default;
	SinhProduct(int sign, std::vector<LinearForm> num, std::vector<LinearForm> den)
	: sign_(sign), num_(std::move(num)), den_(std::move(den))
	{}

	static SinhProduct ratio(LinearForm num, LinearForm den) { return {1, {std::move(num)}, {std::move(den)}}; }

	int sign() const noexcept { return sign_; }
	const std::vector<LinearForm>& numerators() const noexcept { return num_; }
	const std::vector<LinearForm>& denominators() const noexcept { return den_; }

	SinhProduct& operator*=(const SinhProduct& o)
	{
		sign_ *= o.sign_;
		num_.insert(num_.end(), o.num_.begin(), o.num_.end());
		den_.insert(den_.end(), o.den_.begin(), o.den_.end());
		return *this;
	}
	friend SinhProduct operator*(SinhProduct a, const SinhProduct& b) { return a *= b; }

	SinhProduct operator-() const
	{
		SinhProduct r(*this);
		r.sign_ = -r.sign_;
		return r;
	}

	/// The product evaluated at v.permuted(order), written in v's coordinates.
	SinhProduct permuted(const std::array<int, 3>& order) const
	{
		SinhProduct r(*this);
		for (auto& f : r.num_)
			f = f.permuted(order);
		for (auto& f : r.den_)
			f = f.permuted(order);
		return r;
	}

	/// Cancels identical (and opposite) forms, pairs proportional ones into ratio factors.
	ReducedProduct reduce() const
	{
		struct Group {
			std::vector<Rational> num, den;
		};
		std::map<LinearForm, Group> groups;
		bool zero = false;
		for (const auto& f : num_) {
			if (f.is_zero()) {
				zero = true;
				continue;
			}
			Rational lead = f.leading();
			groups[f.scaled(Rational(1 / lead))].num.push_back(lead);
		}
		for (const auto& f : den_) {
			if (f.is_zero())
				throw pole_at_parameters("denominator form is identically zero");
			Rational lead = f.leading();
			groups[f.scaled(Rational(1 / lead))].den.push_back(lead);
		}

		int sign = sign_;
		std::vector<RatioFactor> ratios;
		std::vector<LinearForm> free_num, free_den;
		for (auto& [dir, g] : groups) {
			std::sort(g.num.begin(), g.num.end());
			std::sort(g.den.begin(), g.den.end());
			for (std::size_t i = 0; i < g.num.size();) {
				auto same = std::find(g.den.begin(), g.den.end(), g.num[i]);
				auto opposite = std::find(g.den.begin(), g.den.end(), Rational(-g.num[i]));
				if (same != g.den.end()) {
					g.den.erase(same);
					g.num.erase(g.num.begin() + static_cast<std::ptrdiff_t>(i));
				} else if (opposite != g.den.end()) {
					g.den.erase(opposite);
					g.num.erase(g.num.begin() + static_cast<std::ptrdiff_t>(i));
					sign = -sign;
				} else
					++i;
			}
			const std::size_t paired = std::min(g.num.size(), g.den.size());
			for (std::size_t i = 0; i < paired; ++i)
				ratios.push_back({Rational(g.num[i] / g.den[i]), dir.scaled(g.den[i])});
			for (std::size_t i = paired; i < g.num.size(); ++i)
				free_num.push_back(dir.scaled(g.num[i]));
			for (std::size_t i = paired; i < g.den.size(); ++i)
				free_den.push_back(dir.scaled(g.den[i]));
		}
		if (zero)
			return ReducedProduct(sign, true, {}, {}, {});
		return ReducedProduct(sign, false, std::move(ratios), std::move(free_num), std::move(free_den));
	}

private:
	int sign_ = 1;
	std::vector<LinearForm> num_;
	std::vector<LinearForm> den_;
};

} // namespace vogel
