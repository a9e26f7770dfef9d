/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "power_series.hpp"
#include "sinh_product.hpp"
#include "universal.hpp"
#include "vogel_params.hpp"

namespace vogel {

/// eps1, eps2: Nekrasov parameters. sigma_n: the instanton expansion parameter
/// (unrelated to the root sigma). x: coordinate on the Weyl line.
class InstantonParams {
public:
	InstantonParams(double eps1, double eps2, double sigma_n, double x, int n_max)
	: eps1_(eps1), eps2_(eps2), sigma_n_(sigma_n), x_(x), n_max_(n_max)
	{
		if (n_max < 1)
			throw std::invalid_argument("n_max must be at least 1");
		if (!std::isfinite(eps1) || !std::isfinite(eps2) || !std::isfinite(sigma_n))
			throw std::invalid_argument("instanton parameters must be finite");
		if (!std::isfinite(x))
			throw pole_at_x("x must be finite");
	}

	double eps1() const noexcept { return eps1_; }
	double eps2() const noexcept { return eps2_; }
	double sigma_n() const noexcept { return sigma_n_; }
	double x() const noexcept { return x_; }
	int n_max() const noexcept { return n_max_; }

	/// e^{n sigma_n (eps1 + eps2)}.
	double weight(long n) const { return std::exp(static_cast<double>(n) * sigma_n_ * (eps1_ + eps2_)); }

private:
	double eps1_, eps2_, sigma_n_, x_;
	int n_max_;
};

inline constexpr std::size_t instanton_start_order = 20;
inline constexpr std::size_t instanton_max_order = 640;
inline constexpr double instanton_tail_tolerance = 1e-12;
inline constexpr double instanton_convergence_ratio = 1e-8;

/// Value at x of an exact series formula, raising the truncation order until the
/// last two retained terms are below the tail tolerance relative to the sum.
inline double adaptive_series_value(const ReducedProduct& p, const VogelParams& v, double x,
                                    std::size_t* order_used = nullptr)
{
	for (std::size_t order = instanton_start_order; order <= instanton_max_order; order *= 2) {
		const Series s = p.series(v, order);
		const double value = s.evaluate(x);
		if (!std::isfinite(value))
			break;
		const double tail = std::max(std::fabs(to_double(s[order]) * std::pow(x, static_cast<double>(order))),
		                             std::fabs(to_double(s[order - 1]) * std::pow(x, static_cast<double>(order - 1))));
		if (tail <= instanton_tail_tolerance * std::fabs(value) || (value == 0.0 && tail == 0.0)) {
			if (order_used)
				*order_used = order;
			return value;
		}
	}
	throw pole_at_x("series does not converge at x = " + std::to_string(x));
}

/// n-th summand: e^{n sigma_n (eps1+eps2)} times the n-th Cartan power of the adjoint at x.
inline double one_instanton_term(const VogelParams& v, const InstantonParams& ip, long n)
{
	if (n < 1 || n > ip.n_max())
		throw std::invalid_argument("instanton term index out of range");
	const ReducedProduct p = formula::cartan_power(n).reduce();
	p.check_poles(v);
	return ip.weight(n) * adaptive_series_value(p, v, ip.x());
}

struct InstantonRow {
	long n;
	double term;
	double partial_sum;
};

struct InstantonTermTable {
	std::vector<InstantonRow> rows;
	/// |last term| / |partial sum| < 1e-8.
	bool converged = false;

	double sum() const { return rows.empty() ? 0.0 : rows.back().partial_sum; }
};

inline InstantonTermTable one_instanton_sum(const VogelParams& v, const InstantonParams& ip)
{
	InstantonTermTable t;
	double acc = 0;
	for (long n = 1; n <= ip.n_max(); ++n) {
		const double term = one_instanton_term(v, ip, n);
		acc += term;
		t.rows.push_back({n, term, acc});
	}
	const double last = t.rows.back().term;
	t.converged = acc != 0.0 && std::fabs(last) / std::fabs(acc) < instanton_convergence_ratio;
	return t;
}

} // namespace vogel
