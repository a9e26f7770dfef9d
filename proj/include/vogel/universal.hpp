/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "errors.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "sinh_product.hpp"
#include "vogel_params.hpp"

/// Universal quantum dimensions of simple Lie algebras as functions of the
/// Vogel parameters. Every formula is a SinhProduct of linear forms; the
/// factors below are written with general alpha (no alpha = -2 normalization).
namespace vogel::formula {

namespace detail {

inline LinearForm lf(long a, long b, long g) { return {Rational(a), Rational(b), Rational(g)}; }

inline void require_non_negative(long n, const char* what)
{
	if (n < 0)
		throw std::invalid_argument(std::string(what) + " must be non-negative");
}

/// Substitutes gamma -> gamma - beta in every form.
inline LinearForm gamma_minus_beta(const LinearForm& f)
{
	return {f[0], Rational(f[1] - f[2]), f[2]};
}

inline SinhProduct substitute_gamma_minus_beta(const SinhProduct& p)
{
	std::vector<LinearForm> num, den;
	for (const auto& f : p.numerators())
		num.push_back(gamma_minus_beta(f));
	for (const auto& f : p.denominators())
		den.push_back(gamma_minus_beta(f));
	return {p.sign(), std::move(num), std::move(den)};
}

} // namespace detail

/// Quantum dimension of the adjoint:
/// -[(g+2b+2a)/g] [(2g+b+2a)/b] [(2g+2b+a)/a], each bracket a sinh ratio.
inline SinhProduct adjoint()
{
	using detail::lf;
	return {-1, {lf(2, 2, 1), lf(2, 1, 2), lf(1, 2, 2)}, {lf(0, 0, 1), lf(0, 1, 0), lf(1, 0, 0)}};
}

/// Highest-weight factor F(n) of the n-th Cartan power of the adjoint.
inline SinhProduct highest_weight_factor(long n)
{
	using detail::lf;
	return SinhProduct::ratio(lf(3 - 2 * n, 2, 2), lf(3, 2, 2));
}

/// Border factor B(n): the surviving ends of the three root strings with (theta, mu) = 1.
inline SinhProduct border_factor(long n)
{
	using detail::lf;
	detail::require_non_negative(n, "n");
	SinhProduct p;
	for (long i = 1; i <= n; ++i) {
		p *= SinhProduct::ratio(lf(3 - i, 2, 1), lf(1 - i, 0, 1));
		p *= SinhProduct::ratio(lf(3 - i, 1, 2), lf(1 - i, 1, 0));
		p *= SinhProduct::ratio(lf(4 - i, 2, 2), lf(-i, 0, 0));
	}
	return p;
}

/// n-th Cartan power of the adjoint (highest weight n theta): F(n) B(n).
inline SinhProduct cartan_power(long n)
{
	detail::require_non_negative(n, "n");
	return highest_weight_factor(n) * border_factor(n);
}

/// Y2(alpha), the Cartan square of the adjoint written in closed form.
inline SinhProduct y2()
{
	using detail::lf;
	return {-1,
	        {lf(2, 2, 2), lf(-2, -1, -2), lf(-2, -2, -1), lf(1, 2, 1), lf(1, 1, 2), lf(1, -2, -2)},
	        {lf(1, 0, 0), lf(2, 0, 0), lf(0, 1, 0), lf(0, 0, 1), lf(1, -1, 0), lf(1, 0, -1)}};
}

/// Y2 with the given slot playing the alpha role.
inline SinhProduct y2(Slot slot)
{
	switch (slot) {
	case Slot::alpha: return y2();
	case Slot::beta: return y2().permuted({1, 0, 2});
	case Slot::gamma: return y2().permuted({2, 0, 1});
	}
	throw std::invalid_argument("bad slot");
}

/// X2, the non-adjoint constituent of the antisymmetric square.
inline SinhProduct x2()
{
	using detail::lf;
	return {1,
	        {lf(1, 2, 2), lf(2, 1, 2), lf(2, 2, 1), lf(2, 1, 1), lf(1, 2, 1), lf(1, 1, 2), lf(0, 2, 2),
	         lf(2, 0, 2), lf(2, 2, 0)},
	        {lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1), lf(2, 0, 0), lf(0, 2, 0), lf(0, 0, 2), lf(0, 1, 1),
	         lf(1, 0, 1), lf(1, 1, 0)}};
}

/// A(n): roots of the (theta, .) = 1 strings orthogonal to sigma.
inline SinhProduct block_a(long n)
{
	using detail::lf;
	detail::require_non_negative(n, "n");
	SinhProduct p;
	for (long i = 1; i <= n; ++i) {
		p *= SinhProduct::ratio(lf(3 - i, 0, 2), lf(1 - i, 2, 0));
		p *= SinhProduct::ratio(lf(4 - i, 1, 2), lf(-i, 1, 0));
		p *= SinhProduct::ratio(lf(3 - i, 2, 1), lf(1 - i, 0, 1));
	}
	return p;
}

/// C1(n): roots with (sigma, mu) = 1.
inline SinhProduct block_c1(long n)
{
	using detail::lf;
	detail::require_non_negative(n, "n");
	SinhProduct p;
	for (long i = 1; i <= n; ++i)
		p *= SinhProduct::ratio(lf(4 - i, 2, 2), lf(3 - i, 0, 2));
	return p;
}

/// C2(n): roots with (sigma, mu) = -1.
inline SinhProduct block_c2(long n)
{
	using detail::lf;
	detail::require_non_negative(n, "n");
	SinhProduct p;
	for (long i = 1; i <= n; ++i)
		p *= SinhProduct::ratio(lf(i - 1, -2, 0), lf(i, 0, 0));
	return p;
}

/// F(k, l) = F20 F02 F11 F1,-1.
inline SinhProduct block_f(long k, long l)
{
	using detail::lf;
	detail::require_non_negative(k, "k");
	detail::require_non_negative(l, "l");
	return {1,
	        {lf(3 - 2 * k - 2 * l, 2, 2), lf(3 - 2 * l, 0, 2), lf(3 - k - 2 * l, 1, 2), lf(-k, 1, 0)},
	        {lf(3, 2, 2), lf(3, 0, 2), lf(3, 1, 2), lf(0, 1, 0)}};
}

/// B~(l) = B(l) at (alpha, beta, gamma - beta): the centralizer's own adjoint power.
inline SinhProduct block_btilde(long l) { return detail::substitute_gamma_minus_beta(border_factor(l)); }

/// Cartan product of k adjoints and l copies of Y2(beta), highest weight (k+l) theta + l sigma.
inline SinhProduct z(long k, long l)
{
	return block_f(k, l) * block_a(k + l) * block_btilde(l) * block_c1(k + 2 * l) * block_c2(k);
}

} // namespace vogel::formula

namespace vogel {

/// dim g = -(a+2b+2g)(b+2a+2g)(g+2a+2b) / (a b g).
inline Rational dim_adjoint(const VogelParams& v)
{
	const Rational& a = v.alpha();
	const Rational& b = v.beta();
	const Rational& g = v.gamma();
	const Rational p = v.p();
	if (is_zero(p))
		throw pole_at_parameters(is_zero(a) ? "alpha" : is_zero(b) ? "beta" : "gamma", to_string(v));
	return Rational(-(a + 2 * b + 2 * g) * (b + 2 * a + 2 * g) * (g + 2 * a + 2 * b) / p);
}

/// Casimir eigenvalue on the adjoint: 2t.
inline Rational casimir_adjoint(const VogelParams& v) { return Rational(2 * v.t()); }

/// Casimir eigenvalue on Y2(slot): 4t - 2 * slot.
inline Rational casimir_y2(const VogelParams& v, Slot slot)
{
	return Rational(4 * v.t() - 2 * v[static_cast<std::size_t>(slot)]);
}

inline Series qdim_adjoint(const VogelParams& v, std::size_t order = default_series_order)
{
	return formula::adjoint().reduce().series(v, order);
}

inline Series qdim_cartan_power(const VogelParams& v, long n, std::size_t order = default_series_order)
{
	if (n < 1)
		throw std::invalid_argument("Cartan power n must be positive");
	return formula::cartan_power(n).reduce().series(v, order);
}

inline Series qdim_y2(const VogelParams& v, Slot slot, std::size_t order = default_series_order)
{
	return formula::y2(slot).reduce().series(v, order);
}

inline Series qdim_x2(const VogelParams& v, std::size_t order = default_series_order)
{
	return formula::x2().reduce().series(v, order);
}

inline Series z_block_a(const VogelParams& v, long n, std::size_t order = default_series_order)
{
	return formula::block_a(n).reduce().series(v, order);
}

inline Series z_block_c1(const VogelParams& v, long n, std::size_t order = default_series_order)
{
	return formula::block_c1(n).reduce().series(v, order);
}

inline Series z_block_c2(const VogelParams& v, long n, std::size_t order = default_series_order)
{
	return formula::block_c2(n).reduce().series(v, order);
}

inline Series z_block_f(const VogelParams& v, long k, long l, std::size_t order = default_series_order)
{
	return formula::block_f(k, l).reduce().series(v, order);
}

inline Series z_block_btilde(const VogelParams& v, long l, std::size_t order = default_series_order)
{
	return formula::block_btilde(l).reduce().series(v, order);
}

inline Series qdim_z(const VogelParams& v, long k, long l, std::size_t order = default_series_order)
{
	return formula::z(k, l).reduce().series(v, order);
}

/// Dimension of the (k, l) Cartan product on the exceptional line (lambda, 1 - lambda, 2),
/// taken as the limit along the line so removable 0/0 points are filled in.
inline Rational exc_line_dim(const Rational& lambda, long k, long l)
{
	return formula::z(k, l).reduce().line_limit(exceptional_unit_line(), lambda);
}

/// Weyl-formula quantum dimension of the G2 irrep (k+p) theta + p sigma, written
/// directly from the G2 root data (arguments in units of x/2).
inline Series g2_cartan_product_series(long k, long p, std::size_t order = default_series_order)
{
	if (k < 0 || p < 0)
		throw std::invalid_argument("k and p must be non-negative");
	const Rational q = make_rational(2 * p + 1, 3);
	const Rational k1(k + 1);
	const std::array<std::array<Rational, 2>, 6> halves{{
		{q, make_rational(1, 3)},
		{k1, Rational(1)},
		{Rational(k1 + q), make_rational(4, 3)},
		{Rational(k1 + 2 * q), make_rational(5, 3)},
		{Rational(k1 + 3 * q), Rational(2)},
		{Rational(2 * k1 + 3 * q), Rational(3)},
	}};
	Series s = Series::one(order);
	// sinh((x/2) a) = sinh((2a) x / 4)
	for (const auto& [num, den] : halves)
		s *= sinh_ratio_series<Rational>(Rational(2 * num), Rational(2 * den), order);
	return s;
}

} // namespace vogel
