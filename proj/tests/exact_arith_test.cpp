/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#include <cmath>
#include <thread>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace vogel;
using testing_support::Gen;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

} // namespace

TEST(Rational, LowestTermsWithPositiveDenominator)
{
	const Rational r = parse_rational("6/-4");
	EXPECT_EQ(r.get_num(), -3);
	EXPECT_EQ(r.get_den(), 2);
	EXPECT_EQ(make_rational(10, -15), q(-2, 3));
}

TEST(Rational, ParsesIntegersFractionsAndDecimals)
{
	EXPECT_EQ(parse_rational("-2"), q(-2));
	EXPECT_EQ(parse_rational("10/3"), q(10, 3));
	EXPECT_EQ(parse_rational("+0.25"), q(1, 4));
	EXPECT_EQ(parse_rational("-.5"), q(-1, 2));
	EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
	EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
	EXPECT_THROW(parse_rational(""), std::invalid_argument);
	EXPECT_THROW(parse_rational("1e3"), std::invalid_argument);
}

TEST(Rational, FractionStringRoundTrips)
{
	Gen g(11);
	for (int i = 0; i < 200; ++i) {
		const Rational r = g.rational(1000);
		EXPECT_EQ(parse_rational(to_fraction_string(r)), r);
	}
	EXPECT_EQ(to_fraction_string(q(248)), "248/1");
}

TEST(SeriesAdd, Examples)
{
	EXPECT_EQ(Series({1, 1}) + Series({2, 3}), Series({3, 4}));
	const Series a{q(1, 2), q(-3), q(7, 5)};
	EXPECT_EQ(a + Series(2), a);
	const Series sum = Series({1, 0, 1, 0, 0}) + Series({0, 0, -1});
	EXPECT_EQ(sum.order(), 2u);
	EXPECT_EQ(sum, Series({1, 0, 0}));
}

TEST(SeriesMul, Examples)
{
	EXPECT_EQ(Series({1, 1}) * Series({1, -1}), Series({1, 0}));
	EXPECT_EQ(Series({1, 1, 0}) * Series({1, -1, 0}), Series({1, 0, -1}));
	const Series a{q(1, 2), q(-3), q(7, 5)};
	EXPECT_EQ(a * Series::one(2), a);
	// e^x e^-x
	EXPECT_EQ(Series({1, 1, q(1, 2)}) * Series({1, -1, q(1, 2)}), Series({1, 0, 0}));
}

TEST(SeriesDiv, Examples)
{
	const Series sinh_like{0, 1, 0, q(1, 6)};
	const Series x{0, 1, 0, 0};
	const Series quotient = sinh_like / x;
	EXPECT_EQ(quotient.order(), 2u);
	EXPECT_EQ(quotient, Series({1, 0, q(1, 6)}));

	const Series a{q(3), q(1, 2), q(-1)};
	EXPECT_EQ(a / a, Series::one(2));
	EXPECT_EQ(Series::one(3) / Series({1, -1, 0, 0}), Series({1, 1, 1, 1}));
}

TEST(SeriesDiv, HigherValuationDivisorThrows)
{
	EXPECT_THROW(Series({1, 1, 1}) / Series({0, 1, 0}), division_by_zero_series);
	EXPECT_THROW(Series({1, 1}) / Series(1), division_by_zero_series);
}

TEST(SeriesDiv, UndoesMultiplication)
{
	Gen g(3);
	for (int i = 0; i < 100; ++i) {
		const Series a = g.series(8);
		Series b = g.series(8);
		if (is_zero(b[0]))
			b[0] = 1;
		EXPECT_EQ((a * b) / b, a);
	}
}

TEST(SeriesEval, Examples)
{
	EXPECT_DOUBLE_EQ(Series({1, 1}).evaluate(0.5), 1.5);
	EXPECT_DOUBLE_EQ(Series({q(7, 3), 5, -2}).evaluate(0.0), 7.0 / 3.0);
	const Series s = sinh_ratio_series<Rational>(q(2), q(1), 20);
	EXPECT_NEAR(s.evaluate(0.1), 2 * std::cosh(0.025), 1e-12);
}

TEST(ScaledArgument, ReindexesCoefficients)
{
	const Series s{1, 1, 1, 1};
	EXPECT_EQ(s.scaled_argument(q(2)), Series({1, 2, 4, 8}));
}

TEST(SinhRatio, Examples)
{
	EXPECT_EQ(sinh_ratio_series<Rational>(q(1), q(1), 4), Series::one(4));
	EXPECT_EQ(sinh_ratio_series<Rational>(q(2), q(1), 4), Series({2, 0, q(1, 16), 0, q(1, 3072)}));
	EXPECT_TRUE(sinh_ratio_series<Rational>(q(0), q(3), 4).is_zero());
	EXPECT_THROW(sinh_ratio_series<Rational>(q(1), q(0), 4), zero_denominator_form);
}

TEST(SinhRatio, MatchesTaylorQuotient)
{
	Gen g(5);
	for (int i = 0; i < 50; ++i) {
		const Rational a = g.nonzero_rational(), b = g.nonzero_rational();
		const Series direct = testing_support::sinh_taylor(Rational(a / 4), 13) /
		                      testing_support::sinh_taylor(Rational(b / 4), 13);
		EXPECT_EQ(sinh_ratio_series<Rational>(a, b, 12), direct);
	}
}

TEST(SinhRatioProperty, SelfRatioIsOne)
{
	Gen g(7);
	for (int i = 0; i < 50; ++i) {
		const Rational c = g.nonzero_rational(100);
		EXPECT_EQ(sinh_ratio_series<Rational>(c, c, 16), Series::one(16));
	}
}

TEST(SinhRatioProperty, Telescopes)
{
	Gen g(8);
	for (int i = 0; i < 50; ++i) {
		const Rational a = g.rational(), b = g.nonzero_rational(), c = g.nonzero_rational();
		EXPECT_EQ(sinh_ratio_series<Rational>(a, b, 14) * sinh_ratio_series<Rational>(b, c, 14),
		          sinh_ratio_series<Rational>(a, c, 14));
	}
}

TEST(SinhRatioProperty, OddInNumerator)
{
	Gen g(9);
	for (int i = 0; i < 50; ++i) {
		const Rational a = g.rational(), b = g.nonzero_rational();
		EXPECT_EQ(sinh_ratio_series<Rational>(Rational(-a), b, 14), -sinh_ratio_series<Rational>(a, b, 14));
	}
}

TEST(SinhRatioProperty, OddCoefficientsVanish)
{
	Gen g(10);
	for (int i = 0; i < 50; ++i) {
		const Series s = sinh_ratio_series<Rational>(g.rational(), g.nonzero_rational(), 15);
		for (std::size_t k = 1; k <= 15; k += 2)
			EXPECT_TRUE(is_zero(s[k]));
	}
}

TEST(LogExp, AreInverse)
{
	Gen g(12);
	for (int i = 0; i < 30; ++i) {
		Series a = g.series(10);
		a[0] = 1;
		EXPECT_EQ(exp_series(log_series(a)), a);
	}
	EXPECT_THROW(log_series(Series({2, 1})), std::invalid_argument);
	EXPECT_THROW(exp_series(Series({1, 1})), std::invalid_argument);
}

TEST(SinhcProductBuilder, MatchesDirectProduct)
{
	Gen g(13);
	for (int i = 0; i < 20; ++i) {
		SinhcProductBuilder b(12);
		Series direct = Series::one(12);
		for (int j = 0; j < 4; ++j) {
			const Rational u = g.nonzero_rational(), w = g.nonzero_rational();
			b.multiply(u);
			b.divide(w);
			direct *= sinhc_series<Rational>(u, 12) / sinhc_series<Rational>(w, 12);
		}
		EXPECT_EQ(b.result(), direct);
	}
}

TEST(Series, ConcurrentUseIsSafe)
{
	// The shared log coefficient table grows under a lock.
	std::vector<std::thread> pool;
	std::vector<Series> out(4);
	for (int t = 0; t < 4; ++t)
		pool.emplace_back([t, &out] {
			SinhcProductBuilder b(40 + 40 * static_cast<std::size_t>(t));
			b.multiply(Rational(3));
			b.divide(Rational(1));
			out[static_cast<std::size_t>(t)] = b.result().truncated(40);
		});
	for (auto& th : pool)
		th.join();
	for (int t = 1; t < 4; ++t)
		EXPECT_EQ(out[static_cast<std::size_t>(t)], out[0]);
}
