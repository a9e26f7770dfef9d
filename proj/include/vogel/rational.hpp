/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vogel {

/// Exact rational backed by GMP. mpq_class keeps lowest terms with a positive
/// denominator after every operation as long as values are built through
/// make_rational / parse_rational (which canonicalize).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	Rational r(num, den);
	r.canonicalize();
	return r;
}

/// Parses "p", "p/q" or a finite decimal ("-2.5", "1e-3" is rejected).
inline Rational parse_rational(std::string_view text)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s.push_back(ch);
	if (s.empty())
		throw std::invalid_argument("empty rational");

	auto valid_int = [](std::string_view v) {
		std::size_t i = 0;
		if (i < v.size() && (v[i] == '-' || v[i] == '+'))
			++i;
		if (i == v.size())
			return false;
		for (; i < v.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(v[i])))
				return false;
		return true;
	};
	auto strip_plus = [](std::string v) {
		if (!v.empty() && v[0] == '+')
			v.erase(0, 1);
		return v;
	};

	if (auto slash = s.find('/'); slash != std::string::npos) {
		std::string num = s.substr(0, slash), den = s.substr(slash + 1);
		if (!valid_int(num) || !valid_int(den))
			throw std::invalid_argument("malformed rational '" + s + "'");
		mpz_class n(strip_plus(num)), d(strip_plus(den));
		if (d == 0)
			throw std::invalid_argument("rational with zero denominator '" + s + "'");
		Rational r(n, d);
		r.canonicalize();
		return r;
	}
	if (auto dot = s.find('.'); dot != std::string::npos) {
		std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
		bool neg = !ip.empty() && ip[0] == '-';
		if (!ip.empty() && (ip[0] == '-' || ip[0] == '+'))
			ip.erase(0, 1);
		if (ip.empty())
			ip = "0";
		if (!valid_int(ip) || (!fp.empty() && !valid_int(fp)) || (!fp.empty() && (fp[0] == '-' || fp[0] == '+')))
			throw std::invalid_argument("malformed decimal '" + s + "'");
		mpz_class scale = 1;
		for (std::size_t i = 0; i < fp.size(); ++i)
			scale *= 10;
		mpz_class n = mpz_class(ip) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
		Rational r(neg ? mpz_class(-n) : n, scale);
		r.canonicalize();
		return r;
	}
	if (!valid_int(s))
		throw std::invalid_argument("malformed rational '" + s + "'");
	return Rational(mpz_class(strip_plus(s)));
}

/// Always "num/den", also for integers ("248/1").
inline std::string to_fraction_string(const Rational& r)
{
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// GMP canonical form: "248", "10/3".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double v) { return v; }

inline Rational pow(const Rational& base, unsigned exponent)
{
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
	mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
	Rational r(n, d);
	r.canonicalize();
	return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double v) { return v == 0.0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace vogel
