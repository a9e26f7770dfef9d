/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

// Generators and independent oracles shared by the test suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <vogel/vogel.hpp>

namespace testing_support {

using vogel::Rational;
using vogel::Series;
using vogel::VogelParams;

/// Small random rationals and parameter points; fixed seeds keep failures reproducible.
class Gen {
public:
	explicit Gen(std::uint64_t seed) : eng_(seed) {}

	long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

	double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }

	Rational rational(long bound = 24)
	{
		return vogel::make_rational(integer(-bound, bound), integer(1, bound));
	}

	Rational nonzero_rational(long bound = 24)
	{
		for (;;) {
			Rational r = rational(bound);
			if (!vogel::is_zero(r))
				return r;
		}
	}

	Series series(std::size_t order, long bound = 9)
	{
		Series s(order);
		for (std::size_t k = 0; k <= order; ++k)
			s[k] = rational(bound);
		return s;
	}

	/// A point where none of the given formulas has a pole.
	VogelParams params_avoiding(const std::vector<vogel::ReducedProduct>& formulas, long bound = 24)
	{
		for (;;) {
			VogelParams v(nonzero_rational(bound), nonzero_rational(bound), nonzero_rational(bound));
			bool ok = true;
			for (const auto& f : formulas)
				for (const auto& form : f.pole_forms())
					if (vogel::is_zero(form.value(v)))
						ok = false;
			if (ok)
				return v;
		}
	}

private:
	std::mt19937_64 eng_;
};

/// Taylor coefficients of sinh(c x) in exact arithmetic, computed by repeated
/// multiplication rather than through the library.
inline Series sinh_taylor(const Rational& c, std::size_t order)
{
	Series s(order);
	Rational term = c;
	for (std::size_t k = 1; k <= order; k += 2) {
		s[k] = term;
		term = term * c * c / Rational(static_cast<long>((k + 1) * (k + 2)));
	}
	return s;
}

/// Naive route for a reduced product: one sinh ratio at a time via long division.
inline Series naive_series(const vogel::ReducedProduct& p, const VogelParams& v, std::size_t order)
{
	Series s = Series::constant(Rational(p.sign()), order);
	if (p.identically_zero() || p.vanishes_at(v))
		return Series(order);
	const Rational quarter(1, 4);
	for (const auto& r : p.ratios()) {
		const Rational b = r.base.value(v);
		if (vogel::is_zero(b))
			s *= r.multiple;
		else
			s *= vogel::sinh_ratio_series<Rational>(Rational(r.multiple * b), b, order);
	}
	for (std::size_t i = 0; i < p.free_numerators().size(); ++i) {
		// sinh(a x/4) / sinh(b x/4) from the two Taylor series
		const Rational a = p.free_numerators()[i].value(v), b = p.free_denominators()[i].value(v);
		s *= sinh_taylor(Rational(a * quarter), order + 1) / sinh_taylor(Rational(b * quarter), order + 1);
	}
	return s.truncated(order);
}

/// The closed-form J dimension on the line (lambda, 1 - lambda, 2).
inline Rational j_dimension(const Rational& l)
{
	const Rational num = 81 * (l - 6) * (l - 4) * (l - 3) * (l + 2) * (l + 3) * (l + 5) * (2 * l - 5) * (2 * l + 3);
	const Rational den = (l - 1) * (l - 1) * l * l * (2 * l - 1) * (2 * l - 1) * (3 * l - 2) * (3 * l - 1);
	return Rational(num / den);
}

/// Direct double evaluation of a product of sinh ratios given as (num, den) pairs
/// of arguments in units of x/4.
inline double sinh_product_value(const std::vector<std::pair<double, double>>& pairs, double x)
{
	double acc = 1;
	for (const auto& [a, b] : pairs)
		acc *= std::sinh(a * x / 4) / std::sinh(b * x / 4);
	return acc;
}

inline bool close(double a, double b, double rel)
{
	return std::fabs(a - b) <= rel * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

} // namespace testing_support
