/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <mutex>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace vogel {

/// Default truncation order of every exact series in the library.
inline constexpr std::size_t default_series_order = 20;

/// Truncated Taylor series c_0 + c_1 x + ... + c_order x^order.
///
/// Binary operations truncate to the smaller order of their operands, so a
/// result never claims more precision than its inputs carry.
template <typename T = Rational>
class PowerSeries {
public:
	PowerSeries() : coeffs_(1) {}

	/// Zero series of the given truncation order.
	explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

	explicit PowerSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs))
	{
		if (coeffs_.empty())
			coeffs_.resize(1);
	}

	PowerSeries(std::initializer_list<T> coeffs) : coeffs_(coeffs)
	{
		if (coeffs_.empty())
			coeffs_.resize(1);
	}

	static PowerSeries constant(const T& value, std::size_t order)
	{
		PowerSeries s(order);
		s.coeffs_[0] = value;
		return s;
	}

	static PowerSeries one(std::size_t order) { return constant(T(1), order); }

	std::size_t order() const noexcept { return coeffs_.size() - 1; }

	const T& operator[](std::size_t k) const { return coeffs_[k]; }
	T& operator[](std::size_t k) { return coeffs_[k]; }

	std::span<const T> coefficients() const noexcept { return coeffs_; }

	bool is_zero() const
	{
		return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return vogel::is_zero(c); });
	}

	/// Index of the first nonzero coefficient, or order()+1 for the zero series.
	std::size_t valuation() const
	{
		for (std::size_t k = 0; k < coeffs_.size(); ++k)
			if (!vogel::is_zero(coeffs_[k]))
				return k;
		return coeffs_.size();
	}

	PowerSeries truncated(std::size_t order) const
	{
		PowerSeries r(order);
		for (std::size_t k = 0; k <= std::min(order, this->order()); ++k)
			r.coeffs_[k] = coeffs_[k];
		return r;
	}

	/// f(m x): c_k -> c_k m^k.
	PowerSeries scaled_argument(const T& m) const
	{
		PowerSeries r(*this);
		T power(1);
		for (std::size_t k = 1; k < r.coeffs_.size(); ++k) {
			power *= m;
			r.coeffs_[k] *= power;
		}
		return r;
	}

	/// Horner evaluation of the truncated polynomial in double precision.
	double evaluate(double x) const
	{
		double acc = 0.0;
		for (std::size_t k = coeffs_.size(); k-- > 0;)
			acc = acc * x + to_double(coeffs_[k]);
		return acc;
	}

	PowerSeries operator-() const
	{
		PowerSeries r(*this);
		for (auto& c : r.coeffs_)
			c = -c;
		return r;
	}

	PowerSeries& operator*=(const T& scalar)
	{
		for (auto& c : coeffs_)
			c *= scalar;
		return *this;
	}

	friend PowerSeries operator*(PowerSeries a, const T& scalar) { return a *= scalar; }
	friend PowerSeries operator*(const T& scalar, PowerSeries a) { return a *= scalar; }

	friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
	{
		PowerSeries r(std::min(a.order(), b.order()));
		for (std::size_t k = 0; k <= r.order(); ++k)
			r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
		return r;
	}

	friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
	{
		PowerSeries r(std::min(a.order(), b.order()));
		for (std::size_t k = 0; k <= r.order(); ++k)
			r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
		return r;
	}

	PowerSeries& operator+=(const PowerSeries& b) { return *this = *this + b; }
	PowerSeries& operator-=(const PowerSeries& b) { return *this = *this - b; }

	/// Cauchy product truncated to the smaller order.
	friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
	{
		const std::size_t n = std::min(a.order(), b.order());
		PowerSeries r(n);
		for (std::size_t i = 0; i <= n; ++i) {
			if (vogel::is_zero(a.coeffs_[i]))
				continue;
			for (std::size_t j = 0; i + j <= n; ++j) {
				if (vogel::is_zero(b.coeffs_[j]))
					continue;
				r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
			}
		}
		return r;
	}

	PowerSeries& operator*=(const PowerSeries& b) { return *this = *this * b; }

	/// Series quotient q with q b = a. A common factor x^m (m = valuation of b)
	/// is cancelled first, which lowers the truncation order of the result by m.
	friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b)
	{
		const std::size_t vb = b.valuation();
		const std::size_t n = std::min(a.order(), b.order());
		if (vb > b.order())
			throw division_by_zero_series("division by the zero series");
		const std::size_t va = a.valuation();
		if (va <= a.order() && vb > va)
			throw division_by_zero_series("divisor valuation exceeds dividend valuation");
		if (vb > n)
			throw division_by_zero_series("divisor valuation exceeds truncation order");

		const std::size_t m = n - vb;
		PowerSeries q(m);
		const T& lead = b.coeffs_[vb];
		for (std::size_t k = 0; k <= m; ++k) {
			T acc = a.coeffs_[k + vb];
			for (std::size_t j = 1; j <= k; ++j) {
				const T& bj = b.coeffs_[j + vb];
				if (!vogel::is_zero(bj) && !vogel::is_zero(q.coeffs_[k - j]))
					acc -= bj * q.coeffs_[k - j];
			}
			q.coeffs_[k] = acc / lead;
		}
		return q;
	}

	PowerSeries& operator/=(const PowerSeries& b) { return *this = *this / b; }

	friend bool operator==(const PowerSeries& a, const PowerSeries& b)
	{
		return a.coeffs_ == b.coeffs_;
	}

	friend std::ostream& operator<<(std::ostream& os, const PowerSeries& s)
	{
		bool first = true;
		for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
			if (vogel::is_zero(s.coeffs_[k]))
				continue;
			if (!first)
				os << " + ";
			first = false;
			os << s.coeffs_[k];
			if (k > 0)
				os << "*x^" << k;
		}
		if (first)
			os << "0";
		return os << " + O(x^" << s.coeffs_.size() << ")";
	}

private:
	std::vector<T> coeffs_;
};

using Series = PowerSeries<Rational>;

/// sinh(w x) / (w x) = sum_k w^{2k} x^{2k} / (2k+1)!; the constant series 1 when w = 0.
template <typename T>
PowerSeries<T> sinhc_series(const T& w, std::size_t order)
{
	PowerSeries<T> s(order);
	s[0] = T(1);
	const T w2 = w * w;
	T term(1);
	for (std::size_t k = 2; k <= order; k += 2) {
		term *= w2;
		term /= T(static_cast<long>(k * (k + 1)));
		s[k] = term;
	}
	return s;
}

/// Taylor series of sinh(num x / 4) / sinh(den x / 4).
///
/// One factor of x cancels between the two sinh expansions, leaving
/// (num/den) * sinhc(num/4) / sinhc(den/4), both with unit constant term.
template <typename T = Rational>
PowerSeries<T> sinh_ratio_series(const T& num, const T& den, std::size_t order)
{
	if (vogel::is_zero(den))
		throw zero_denominator_form("sinh ratio with vanishing denominator form");
	if (vogel::is_zero(num))
		return PowerSeries<T>(order);
	const T quarter = T(1) / T(4);
	PowerSeries<T> r = sinhc_series<T>(num * quarter, order) / sinhc_series<T>(den * quarter, order);
	r *= T(num / den);
	return r;
}

/// log(a) for a series with a[0] = 1, from L' = a' / a.
template <typename T>
PowerSeries<T> log_series(const PowerSeries<T>& a)
{
	if (a[0] != T(1))
		throw std::invalid_argument("log_series needs unit constant term");
	const std::size_t n = a.order();
	PowerSeries<T> l(n);
	// k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
	for (std::size_t k = 1; k <= n; ++k) {
		T acc = T(static_cast<long>(k)) * a[k];
		for (std::size_t j = 1; j < k; ++j)
			if (!vogel::is_zero(l[j]) && !vogel::is_zero(a[k - j]))
				acc -= T(static_cast<long>(j)) * l[j] * a[k - j];
		l[k] = acc / T(static_cast<long>(k));
	}
	return l;
}

/// exp(l) for a series with l[0] = 0, from E' = l' E.
template <typename T>
PowerSeries<T> exp_series(const PowerSeries<T>& l)
{
	if (!vogel::is_zero(l[0]))
		throw std::invalid_argument("exp_series needs zero constant term");
	const std::size_t n = l.order();
	PowerSeries<T> e(n);
	e[0] = T(1);
	for (std::size_t k = 1; k <= n; ++k) {
		T acc(0);
		for (std::size_t j = 1; j <= k; ++j)
			if (!vogel::is_zero(l[j]))
				acc += T(static_cast<long>(j)) * l[j] * e[k - j];
		e[k] = acc / T(static_cast<long>(k));
	}
	return e;
}

/// Coefficients c_k of log(sinh(x)/x) = sum_k c_k x^k, up to at least `order`.
/// Shared, grown on demand; safe to call concurrently.
inline std::vector<Rational> log_sinhc_coefficients(std::size_t order)
{
	static std::mutex mu;
	static std::vector<Rational> cache;
	std::lock_guard<std::mutex> lock(mu);
	if (cache.size() < order + 1) {
		std::size_t target = std::max<std::size_t>(order, 2 * (cache.size() ? cache.size() - 1 : 20));
		auto l = log_series(sinhc_series<Rational>(Rational(1), target));
		cache.assign(l.coefficients().begin(), l.coefficients().end());
	}
	return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(order + 1)};
}

/// Accumulates prod_i sinhc(w_i x)^{e_i} (e_i = +1 or -1) as exp of a sum of logs:
/// each factor costs O(order), the final exponential O(order^2).
class SinhcProductBuilder {
public:
	explicit SinhcProductBuilder(std::size_t order) : order_(order), log_(order), table_(log_sinhc_coefficients(order)) {}

	void multiply(const Rational& w) { add(w, false); }
	void divide(const Rational& w) { add(w, true); }

	Series result() const { return exp_series(log_); }

private:
	void add(const Rational& w, bool negate)
	{
		if (vogel::is_zero(w))
			return;
		const Rational w2 = w * w;
		Rational power(1);
		for (std::size_t k = 2; k <= order_; k += 2) {
			power *= w2;
			if (negate)
				log_[k] -= table_[k] * power;
			else
				log_[k] += table_[k] * power;
		}
	}

	std::size_t order_;
	Series log_;
	std::vector<Rational> table_;
};

} // namespace vogel
