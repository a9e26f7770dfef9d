/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace vogel;
using testing_support::close;
using testing_support::Gen;

namespace {

const VogelParams e7 = vogel_params({Family::E, 7});
const VogelParams sl6 = vogel_params({Family::A, 5});

} // namespace

TEST(InstantonParams, Validation)
{
	EXPECT_THROW(InstantonParams(0.1, 0.2, -1, 0.5, 0), std::invalid_argument);
	EXPECT_THROW(InstantonParams(NAN, 0.2, -1, 0.5, 1), std::invalid_argument);
	EXPECT_THROW(InstantonParams(0.1, 0.2, -1, INFINITY, 1), pole_at_x);
}

TEST(OneInstantonTerm, FirstTermIsAdjoint)
{
	const InstantonParams ip(0.1, 0.2, -1, 0.5, 3);
	const double f = formula::adjoint().reduce().value(to_numeric(e7), 0.5);
	EXPECT_TRUE(close(one_instanton_term(e7, ip, 1), std::exp(-0.3) * f, 1e-12));
}

TEST(OneInstantonTerm, ZeroExponentGivesRawQuantumDimension)
{
	const InstantonParams ip(0, 0, 5, 0.3, 3);
	const ReducedProduct c2 = formula::cartan_power(2).reduce();
	EXPECT_TRUE(close(one_instanton_term(e7, ip, 2), c2.value(to_numeric(e7), 0.3), 1e-10));
}

TEST(OneInstantonTerm, ExactLimitAtSl6)
{
	const InstantonParams ip(0.3, -0.1, 2, 0.0, 2);
	EXPECT_TRUE(close(one_instanton_term(sl6, ip, 2), std::exp(2 * 2 * 0.2) * 405, 1e-12));
	EXPECT_EQ(qdim_cartan_power(sl6, 2)[0], 405);
}

TEST(OneInstantonTerm, MatchesWeylOracle)
{
	Gen g(61);
	for (const char* name : {"e7", "f4", "so12", "g2"}) {
		const AlgebraId id = parse_algebra(name);
		const RootSystem rs = build_root_system(id);
		const VogelParams v = vogel_params(id);
		for (int t = 0; t < 3; ++t) {
			const InstantonParams ip(g.real(-1, 1), g.real(-1, 1), g.real(-1, 1), g.real(0.05, 0.6), 4);
			for (long n = 1; n <= 4; ++n) {
				const double oracle = ip.weight(n) * weyl_qdim_at(rs, theta_sigma_weight(rs, n, 0), ip.x());
				EXPECT_TRUE(close(one_instanton_term(v, ip, n), oracle, 1e-9)) << name << " n = " << n;
			}
		}
	}
}

TEST(OneInstantonTerm, SeriesTailIsSmall)
{
	const ReducedProduct c3 = formula::cartan_power(3).reduce();
	std::size_t order = 0;
	const double value = adaptive_series_value(c3, e7, 0.4, &order);
	EXPECT_GE(order, instanton_start_order);
	EXPECT_TRUE(close(value, c3.series(e7, 2 * order).evaluate(0.4), 1e-10));
}

TEST(OneInstantonTerm, IndexRange)
{
	const InstantonParams ip(0.1, 0.2, -1, 0.5, 2);
	EXPECT_THROW(one_instanton_term(e7, ip, 0), std::invalid_argument);
	EXPECT_THROW(one_instanton_term(e7, ip, 3), std::invalid_argument);
}

TEST(OneInstantonTerm, ParameterPole)
{
	const InstantonParams ip(0.1, 0.2, -1, 0.5, 2);
	EXPECT_THROW(one_instanton_term(VogelParams(-2, 0, 3), ip, 1), pole_at_parameters);
}

TEST(OneInstantonSum, SingleRow)
{
	const InstantonParams ip(0.1, 0.2, -1, 0.5, 1);
	const InstantonTermTable t = one_instanton_sum(e7, ip);
	ASSERT_EQ(t.rows.size(), 1u);
	EXPECT_EQ(t.sum(), t.rows[0].term);
	EXPECT_EQ(t.rows[0].term, one_instanton_term(e7, ip, 1));
}

TEST(OneInstantonSum, PrefixSumsOfRecomputedTerms)
{
	Gen g(62);
	for (int i = 0; i < 5; ++i) {
		const InstantonParams ip(g.real(-1, 1), g.real(-1, 1), g.real(-2, 2), g.real(0.05, 0.8), 6);
		const InstantonTermTable t = one_instanton_sum(sl6, ip);
		double acc = 0;
		for (long n = 1; n <= 6; ++n) {
			const double term = one_instanton_term(sl6, ip, n);
			acc += term;
			EXPECT_EQ(t.rows[static_cast<std::size_t>(n - 1)].n, n);
			EXPECT_EQ(t.rows[static_cast<std::size_t>(n - 1)].term, term);
			EXPECT_EQ(t.rows[static_cast<std::size_t>(n - 1)].partial_sum, acc);
		}
	}
}

TEST(OneInstantonSum, MonotoneWhenTermsPositive)
{
	const InstantonParams ip(0.1, 0.2, -1, 0.5, 8);
	const InstantonTermTable t = one_instanton_sum(e7, ip);
	for (std::size_t i = 1; i < t.rows.size(); ++i) {
		ASSERT_GT(t.rows[i].term, 0);
		EXPECT_GT(t.rows[i].partial_sum, t.rows[i - 1].partial_sum);
	}
}

TEST(OneInstantonSum, ConvergesWhenExponentDominates)
{
	// Weight e^{n s} chosen well below the growth of the first two terms.
	const double x = 0.2;
	const ReducedProduct c1 = formula::cartan_power(1).reduce(), c2 = formula::cartan_power(2).reduce();
	const double growth = c2.value(to_numeric(sl6), x) / c1.value(to_numeric(sl6), x);
	const double s = -std::log(growth) - 8.0;
	const InstantonParams ip(0.5, 0.5, s, x, 50);
	const InstantonTermTable t = one_instanton_sum(sl6, ip);
	EXPECT_TRUE(t.converged);
	bool early = false;
	for (const auto& r : t.rows)
		if (std::fabs(r.term) / std::fabs(r.partial_sum) < instanton_convergence_ratio) {
			early = true;
			break;
		}
	EXPECT_TRUE(early);
}
