/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "sinh_product.hpp"
#include "vogel_params.hpp"

namespace vogel {

/// Coordinates in the basis of simple roots.
using RootVector = std::vector<Rational>;

/// Explicit root system of a simple Lie algebra in Bourbaki numbering, with the
/// invariant form normalized so that long roots have square length 2.
class RootSystem {
public:
	const AlgebraId& id() const noexcept { return id_; }
	Family family() const noexcept { return id_.family; }
	int rank() const noexcept { return id_.rank; }

	/// Gram matrix of the simple roots.
	const std::vector<std::vector<Rational>>& gram() const noexcept { return gram_; }
	const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }
	const RootVector& rho() const noexcept { return rho_; }
	const RootVector& theta() const noexcept { return theta_; }
	/// Highest-(rho, .) positive root orthogonal to theta; absent when no such root exists.
	const std::optional<RootVector>& sigma() const noexcept { return sigma_; }
	/// Whether the roots orthogonal to theta form an irreducible system.
	bool centralizer_simple() const noexcept { return centralizer_simple_; }
	const std::vector<RootVector>& fundamental_weights() const noexcept { return fundamental_; }

	Rational dot(std::span<const Rational> u, std::span<const Rational> v) const
	{
		Rational acc(0);
		for (std::size_t i = 0; i < u.size(); ++i) {
			if (is_zero(u[i]))
				continue;
			for (std::size_t j = 0; j < v.size(); ++j)
				if (!is_zero(v[j]) && !is_zero(gram_[i][j]))
					acc += u[i] * gram_[i][j] * v[j];
		}
		return acc;
	}

	/// <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i).
	Rational coroot_pairing(std::span<const Rational> v, std::size_t i) const
	{
		Rational acc(0);
		for (std::size_t j = 0; j < v.size(); ++j)
			acc += v[j] * gram_[j][i];
		return Rational(2 * acc / gram_[i][i]);
	}

	RootVector simple_root(std::size_t i) const
	{
		RootVector r(static_cast<std::size_t>(rank()), Rational(0));
		r[i] = 1;
		return r;
	}

private:
	friend RootSystem build_root_system(Family family, int rank);

	AlgebraId id_{Family::A, 1};
	std::vector<std::vector<Rational>> gram_;
	std::vector<RootVector> positive_;
	RootVector rho_, theta_;
	std::optional<RootVector> sigma_;
	bool centralizer_simple_ = false;
	std::vector<RootVector> fundamental_;
};

/// A dominant integral weight.
class Weight {
public:
	const RootVector& coords() const noexcept { return coords_; }

private:
	explicit Weight(RootVector c) : coords_(std::move(c)) {}
	friend Weight make_weight(const RootSystem& rs, RootVector coords);
	RootVector coords_;
};

struct SigmaInfo {
	RootVector sigma;
	bool centralizer_simple;
	bool unique;
};

namespace detail {

using Gram = std::vector<std::vector<Rational>>;

inline Gram bourbaki_gram(Family f, int n)
{
	const auto sz = static_cast<std::size_t>(n);
	Gram g(sz, std::vector<Rational>(sz, Rational(0)));
	auto bond = [&](int i, int j, const Rational& v) {
		g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
		g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
	};
	auto diag = [&](int i, const Rational& v) { g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = v; };

	switch (f) {
	case Family::A:
		for (int i = 1; i <= n; ++i)
			diag(i, 2);
		for (int i = 1; i < n; ++i)
			bond(i, i + 1, -1);
		break;
	case Family::B:
		for (int i = 1; i < n; ++i)
			diag(i, 2);
		diag(n, 1);
		for (int i = 1; i < n; ++i)
			bond(i, i + 1, -1);
		break;
	case Family::C:
		for (int i = 1; i < n; ++i)
			diag(i, 1);
		diag(n, 2);
		for (int i = 1; i < n - 1; ++i)
			bond(i, i + 1, make_rational(-1, 2));
		bond(n - 1, n, -1);
		break;
	case Family::D:
		for (int i = 1; i <= n; ++i)
			diag(i, 2);
		for (int i = 1; i < n - 1; ++i)
			bond(i, i + 1, -1);
		bond(n - 2, n, -1);
		break;
	case Family::E:
		for (int i = 1; i <= n; ++i)
			diag(i, 2);
		bond(1, 3, -1);
		bond(2, 4, -1);
		for (int i = 3; i < n; ++i)
			bond(i, i + 1, -1);
		break;
	case Family::F:
		diag(1, 2);
		diag(2, 2);
		diag(3, 1);
		diag(4, 1);
		bond(1, 2, -1);
		bond(2, 3, -1);
		bond(3, 4, make_rational(-1, 2));
		break;
	case Family::G:
		diag(1, make_rational(2, 3));
		diag(2, 2);
		bond(1, 2, -1);
		break;
	}
	return g;
}

/// Positive roots by the root-string algorithm, breadth first by height.
inline std::vector<std::vector<long>> positive_roots_from_gram(const Gram& g)
{
	const std::size_t n = g.size();
	std::vector<std::vector<long>> roots;
	std::set<std::vector<long>> known;
	for (std::size_t i = 0; i < n; ++i) {
		std::vector<long> r(n, 0);
		r[i] = 1;
		roots.push_back(r);
		known.insert(r);
	}
	for (std::size_t idx = 0; idx < roots.size(); ++idx) {
		const std::vector<long> beta = roots[idx];
		for (std::size_t i = 0; i < n; ++i) {
			// p: how far the i-string extends downward from beta.
			long p = 0;
			for (std::vector<long> down = beta;;) {
				down[i] -= 1;
				if (!known.count(down))
					break;
				++p;
			}
			Rational pairing(0);
			for (std::size_t j = 0; j < n; ++j)
				pairing += beta[j] * g[j][i];
			pairing = 2 * pairing / g[i][i];
			if (!is_integer(pairing))
				throw std::logic_error("non-integral Cartan pairing");
			const long q = p - pairing.get_num().get_si();
			if (q > 0) {
				std::vector<long> up = beta;
				up[i] += 1;
				if (known.insert(up).second)
					roots.push_back(up);
			}
		}
	}
	return roots;
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
inline Gram invert(Gram m)
{
	const std::size_t n = m.size();
	Gram inv(n, std::vector<Rational>(n, Rational(0)));
	for (std::size_t i = 0; i < n; ++i)
		inv[i][i] = 1;
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t piv = col;
		while (piv < n && is_zero(m[piv][col]))
			++piv;
		if (piv == n)
			throw std::logic_error("singular Cartan matrix");
		std::swap(m[piv], m[col]);
		std::swap(inv[piv], inv[col]);
		const Rational d = m[col][col];
		for (std::size_t j = 0; j < n; ++j) {
			m[col][j] /= d;
			inv[col][j] /= d;
		}
		for (std::size_t r = 0; r < n; ++r) {
			if (r == col || is_zero(m[r][col]))
				continue;
			const Rational f = m[r][col];
			for (std::size_t j = 0; j < n; ++j) {
				m[r][j] -= f * m[col][j];
				inv[r][j] -= f * inv[col][j];
			}
		}
	}
	return inv;
}

} // namespace detail

/// Highest root of the roots orthogonal to theta, by maximal (rho, .).
inline SigmaInfo compute_sigma(const RootSystem& rs)
{
	std::vector<const RootVector*> ortho;
	for (const auto& mu : rs.positive_roots())
		if (is_zero(rs.dot(rs.theta(), mu)))
			ortho.push_back(&mu);
	if (ortho.empty())
		throw empty_orthogonal_subsystem("no positive root of " + cartan_name(rs.id()) + " is orthogonal to theta");

	const RootVector* best = ortho.front();
	Rational best_height = rs.dot(rs.rho(), *best);
	bool unique = true;
	for (const auto* mu : ortho) {
		Rational h = rs.dot(rs.rho(), *mu);
		if (h > best_height) {
			best = mu;
			best_height = h;
			unique = true;
		} else if (h == best_height && mu != best)
			unique = false;
	}

	// Simple roots of the orthogonal subsystem: not a sum of two of its positive roots.
	std::set<RootVector> members;
	for (const auto* mu : ortho)
		members.insert(*mu);
	std::vector<const RootVector*> simple;
	for (const auto* mu : ortho) {
		bool decomposable = false;
		for (const auto* nu : ortho) {
			RootVector rest(mu->size());
			for (std::size_t i = 0; i < rest.size(); ++i)
				rest[i] = (*mu)[i] - (*nu)[i];
			if (members.count(rest)) {
				decomposable = true;
				break;
			}
		}
		if (!decomposable)
			simple.push_back(mu);
	}
	std::vector<bool> seen(simple.size(), false);
	std::vector<std::size_t> stack{0};
	seen[0] = true;
	while (!stack.empty()) {
		std::size_t i = stack.back();
		stack.pop_back();
		for (std::size_t j = 0; j < simple.size(); ++j)
			if (!seen[j] && !is_zero(rs.dot(*simple[i], *simple[j]))) {
				seen[j] = true;
				stack.push_back(j);
			}
	}
	const bool connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
	return {*best, connected, unique};
}

inline RootSystem build_root_system(Family family, int rank)
{
	if (!valid_rank(family, rank))
		throw invalid_rank("invalid rank " + std::to_string(rank) + " for family " + family_letter(family));
	RootSystem rs;
	rs.id_ = {family, rank};
	rs.gram_ = detail::bourbaki_gram(family, rank);

	const auto n = static_cast<std::size_t>(rank);
	auto int_roots = detail::positive_roots_from_gram(rs.gram_);
	for (const auto& r : int_roots) {
		RootVector v(n);
		for (std::size_t i = 0; i < n; ++i)
			v[i] = r[i];
		rs.positive_.push_back(std::move(v));
	}

	auto height = [](const RootVector& v) {
		Rational h(0);
		for (const auto& c : v)
			h += c;
		return h;
	};
	rs.theta_ = *std::max_element(rs.positive_.begin(), rs.positive_.end(),
	                              [&](const RootVector& a, const RootVector& b) { return height(a) < height(b); });

	// Rescale so that (theta, theta) = 2.
	const Rational theta_sq = rs.dot(rs.theta_, rs.theta_);
	if (theta_sq != 2) {
		const Rational s = 2 / theta_sq;
		for (auto& row : rs.gram_)
			for (auto& c : row)
				c *= s;
	}

	rs.rho_.assign(n, Rational(0));
	for (const auto& r : rs.positive_)
		for (std::size_t i = 0; i < n; ++i)
			rs.rho_[i] += r[i];
	for (auto& c : rs.rho_)
		c /= 2;

	// omega_i = sum_k (C^{-1})_{ik} alpha_k with C_kj = <alpha_k, alpha_j^vee>.
	detail::Gram cartan(n, std::vector<Rational>(n));
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t j = 0; j < n; ++j)
			cartan[k][j] = 2 * rs.gram_[k][j] / rs.gram_[j][j];
	rs.fundamental_ = detail::invert(cartan);

	try {
		SigmaInfo info = compute_sigma(rs);
		rs.sigma_ = std::move(info.sigma);
		rs.centralizer_simple_ = info.centralizer_simple;
	} catch (const empty_orthogonal_subsystem&) {
		rs.sigma_.reset();
		rs.centralizer_simple_ = false;
	}
	return rs;
}

inline RootSystem build_root_system(const AlgebraId& id) { return build_root_system(id.family, id.rank); }

/// Checks dominance and integrality: <lambda, alpha_i^vee> in {0, 1, 2, ...}.
inline Weight make_weight(const RootSystem& rs, RootVector coords)
{
	if (coords.size() != static_cast<std::size_t>(rs.rank()))
		throw length_mismatch("weight has " + std::to_string(coords.size()) + " coordinates, rank is " +
		                      std::to_string(rs.rank()));
	for (std::size_t i = 0; i < coords.size(); ++i) {
		Rational a = rs.coroot_pairing(coords, i);
		if (!is_integer(a) || sgn(a) < 0)
			throw not_dominant("weight is not dominant integral: <lambda, alpha_" + std::to_string(i + 1) +
			                   "^vee> = " + to_string(a));
	}
	return Weight(std::move(coords));
}

/// lambda = sum_i labels_i omega_i (Bourbaki numbering).
inline Weight weight_from_dynkin(const RootSystem& rs, std::span<const long> labels)
{
	const auto n = static_cast<std::size_t>(rs.rank());
	if (labels.size() != n)
		throw length_mismatch("expected " + std::to_string(n) + " Dynkin labels, got " + std::to_string(labels.size()));
	RootVector v(n, Rational(0));
	for (std::size_t i = 0; i < n; ++i) {
		if (labels[i] < 0)
			throw not_dominant("negative Dynkin label");
		for (std::size_t k = 0; k < n; ++k)
			v[k] += labels[i] * rs.fundamental_weights()[i][k];
	}
	return make_weight(rs, std::move(v));
}

/// Parses a digit string such as "11011"; one digit per label.
inline Weight weight_from_dynkin(const RootSystem& rs, std::string_view digits)
{
	std::vector<long> labels;
	for (char c : digits) {
		if (c < '0' || c > '9')
			throw std::invalid_argument("Dynkin label string must be digits");
		labels.push_back(c - '0');
	}
	return weight_from_dynkin(rs, std::span<const long>(labels));
}

inline std::vector<long> dynkin_labels(const RootSystem& rs, const Weight& w)
{
	std::vector<long> out;
	for (std::size_t i = 0; i < static_cast<std::size_t>(rs.rank()); ++i)
		out.push_back(rs.coroot_pairing(w.coords(), i).get_num().get_si());
	return out;
}

/// (a theta + b sigma) as a weight.
inline Weight theta_sigma_weight(const RootSystem& rs, long theta_multiple, long sigma_multiple)
{
	RootVector v(rs.theta());
	for (auto& c : v)
		c *= theta_multiple;
	if (sigma_multiple != 0) {
		if (!rs.sigma())
			throw empty_orthogonal_subsystem("no sigma for " + cartan_name(rs.id()));
		for (std::size_t i = 0; i < v.size(); ++i)
			v[i] += sigma_multiple * (*rs.sigma())[i];
	}
	return make_weight(rs, std::move(v));
}

/// Weyl character on the line x rho:
/// prod_{mu > 0} sinh((x/2)(mu, lambda + rho)) / sinh((x/2)(mu, rho)).
inline Series weyl_qdim(const RootSystem& rs, const Weight& lambda, std::size_t order = default_series_order)
{
	RootVector shifted(lambda.coords());
	for (std::size_t i = 0; i < shifted.size(); ++i)
		shifted[i] += rs.rho()[i];
	Series s = Series::one(order);
	for (const auto& mu : rs.positive_roots()) {
		if (is_zero(rs.dot(mu, lambda.coords())))
			continue;
		// sinh((x/2) c) = sinh((2c) x / 4)
		s *= sinh_ratio_series<Rational>(Rational(2 * rs.dot(mu, shifted)), Rational(2 * rs.dot(mu, rs.rho())), order);
	}
	return s;
}

/// Classical Weyl dimension: prod (mu, lambda + rho) / (mu, rho).
inline Rational weyl_dim(const RootSystem& rs, const Weight& lambda)
{
	Rational d(1);
	for (const auto& mu : rs.positive_roots()) {
		Rational ml = rs.dot(mu, lambda.coords());
		if (is_zero(ml))
			continue;
		Rational mr = rs.dot(mu, rs.rho());
		d *= (ml + mr) / mr;
	}
	return d;
}

/// Weyl character on x rho in double precision, directly from the sinh product.
inline double weyl_qdim_at(const RootSystem& rs, const Weight& lambda, double x)
{
	double acc = 1.0;
	for (const auto& mu : rs.positive_roots()) {
		Rational ml = rs.dot(mu, lambda.coords());
		if (is_zero(ml))
			continue;
		const double mr = to_double(rs.dot(mu, rs.rho()));
		const double top = to_double(ml) + mr;
		acc *= (x == 0.0) ? top / mr : detail::sinh_quotient(x * top / 2.0, x * mr / 2.0);
	}
	return acc;
}

} // namespace vogel
