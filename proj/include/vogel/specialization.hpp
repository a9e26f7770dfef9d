/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <string>
#include <vector>

#include "power_series.hpp"
#include "rational.hpp"
#include "root_system.hpp"
#include "universal.hpp"
#include "vogel_params.hpp"

namespace vogel {

/// One comparison of a universal formula against an independent computation.
struct SpecializationCheck {
	std::string algebra;
	std::string what;
	bool passed;
	Rational universal;
	Rational reference;
};

struct SpecializationReport {
	std::vector<SpecializationCheck> checks;

	bool passed() const
	{
		for (const auto& c : checks)
			if (!c.passed)
				return false;
		return true;
	}
};

/// The nine algebras with tabulated Vogel parameters: sl6, so7, sp6, so12, g2, f4, e6, e7, e8.
inline std::vector<AlgebraId> specialization_algebras()
{
	return {{Family::A, 5}, {Family::B, 3}, {Family::C, 3}, {Family::D, 6}, {Family::G, 2},
	        {Family::F, 4}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};
}

/// Cartan powers n theta, n = 1..max_n, universal series against the Weyl series;
/// then Z(1,1) constant terms against the dimension of the weight with the given
/// Dynkin labels for sl6, f4 and so12.
inline SpecializationReport verify_specialization(std::size_t order = default_series_order, long max_n = 3)
{
	SpecializationReport r;
	for (const auto& id : specialization_algebras()) {
		const RootSystem rs = build_root_system(id);
		const VogelParams v = vogel_params(id);
		for (long n = 1; n <= max_n; ++n) {
			const Series u = qdim_cartan_power(v, n, order);
			const Series w = weyl_qdim(rs, theta_sigma_weight(rs, n, 0), order);
			r.checks.push_back({algebra_name(id), "cartan n=" + std::to_string(n) + " to order " + std::to_string(order),
			                    u == w, u[0], w[0]});
		}
	}
	const std::vector<std::pair<AlgebraId, std::string>> z11{
		{{Family::A, 5}, "11011"}, {{Family::F, 4}, "1002"}, {{Family::D, 6}, "010100"}};
	for (const auto& [id, labels] : z11) {
		const RootSystem rs = build_root_system(id);
		const Rational u = formula::z(1, 1).reduce().constant_term(vogel_params(id));
		const Rational w = weyl_dim(rs, weight_from_dynkin(rs, labels));
		r.checks.push_back({algebra_name(id), "Z(1,1) vs " + labels, u == w, u, w});
	}
	return r;
}

/// G2 point of the exceptional family used for the vanishing checks.
inline VogelParams g2_vanishing_point() { return {Rational(-2), make_rational(10, 3), make_rational(8, 3)}; }

/// Z(k, p) vanishes identically at the G2 point for p = 2, 3; Z(k, 1) equals the
/// G2 Weyl product written from the root data.
inline SpecializationReport verify_g2_zero(std::size_t order = default_series_order, long max_k = 3)
{
	SpecializationReport r;
	const VogelParams v = g2_vanishing_point();
	for (long k = 0; k <= max_k; ++k)
		for (long p : {2L, 3L}) {
			const Series s = qdim_z(v, k, p, order);
			r.checks.push_back({"g2", "Z(" + std::to_string(k) + "," + std::to_string(p) + ") = 0", s.is_zero(), s[0],
			                    Rational(0)});
		}
	for (long k = 0; k <= max_k; ++k) {
		const Series u = qdim_z(v, k, 1, order);
		const Series w = g2_cartan_product_series(k, 1, order);
		r.checks.push_back({"g2", "Z(" + std::to_string(k) + ",1) = f(x," + std::to_string(k) + ",1)", u == w, u[0], w[0]});
	}
	return r;
}

} // namespace vogel
