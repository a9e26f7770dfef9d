/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace vogel {

/// A point (alpha, beta, gamma) of Vogel's plane. Scalar is Rational for exact
/// work or double for numeric sampling.
template <typename T>
class BasicVogelParams {
public:
	BasicVogelParams(T alpha, T beta, T gamma) : v_{std::move(alpha), std::move(beta), std::move(gamma)}
	{
		if (vogel::is_zero(v_[0]) && vogel::is_zero(v_[1]) && vogel::is_zero(v_[2]))
			throw std::invalid_argument("Vogel parameters must not all vanish");
	}

	const T& alpha() const noexcept { return v_[0]; }
	const T& beta() const noexcept { return v_[1]; }
	const T& gamma() const noexcept { return v_[2]; }
	const T& operator[](std::size_t i) const { return v_[i]; }

	T t() const { return T(v_[0] + v_[1] + v_[2]); }
	T s() const { return T(v_[0] * v_[1] + v_[1] * v_[2] + v_[0] * v_[2]); }
	T p() const { return T(v_[0] * v_[1] * v_[2]); }

	/// (v[i0], v[i1], v[i2]): the parameter in slot i_k moves to position k.
	BasicVogelParams permuted(const std::array<int, 3>& order) const
	{
		return {v_[order[0]], v_[order[1]], v_[order[2]]};
	}

	/// (alpha/z, beta/z, gamma/z).
	BasicVogelParams divided_by(const T& z) const
	{
		return {T(v_[0] / z), T(v_[1] / z), T(v_[2] / z)};
	}

	friend bool operator==(const BasicVogelParams& a, const BasicVogelParams& b) { return a.v_ == b.v_; }

	friend std::ostream& operator<<(std::ostream& os, const BasicVogelParams& v)
	{
		return os << "(" << v.v_[0] << ", " << v.v_[1] << ", " << v.v_[2] << ")";
	}

private:
	std::array<T, 3> v_;
};

using VogelParams = BasicVogelParams<Rational>;
using NumericVogelParams = BasicVogelParams<double>;

inline NumericVogelParams to_numeric(const VogelParams& v)
{
	return {to_double(v.alpha()), to_double(v.beta()), to_double(v.gamma())};
}

inline std::string to_string(const VogelParams& v)
{
	return "(" + to_string(v.alpha()) + ", " + to_string(v.beta()) + ", " + to_string(v.gamma()) + ")";
}

/// The six permutations of three slots, identity first.
inline constexpr std::array<std::array<int, 3>, 6> all_slot_permutations{{
	{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

enum class Slot { alpha = 0, beta = 1, gamma = 2 };

inline std::optional<Slot> parse_slot(std::string_view s)
{
	if (s == "alpha" || s == "a")
		return Slot::alpha;
	if (s == "beta" || s == "b")
		return Slot::beta;
	if (s == "gamma" || s == "g")
		return Slot::gamma;
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// Simple Lie algebras and their Vogel parameters (alpha = -2 normalization).

enum class Family { A, B, C, D, E, F, G };

struct AlgebraId {
	Family family;
	int rank;

	friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

inline bool valid_rank(Family f, int rank)
{
	switch (f) {
	case Family::A: return rank >= 1;
	case Family::B: return rank >= 2;
	case Family::C: return rank >= 2;
	case Family::D: return rank >= 3;
	case Family::E: return rank >= 6 && rank <= 8;
	case Family::F: return rank == 4;
	case Family::G: return rank == 2;
	}
	return false;
}

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

/// Cartan name, e.g. "A5", "E8".
inline std::string cartan_name(const AlgebraId& id)
{
	return std::string(1, family_letter(id.family)) + std::to_string(id.rank);
}

/// Classical-algebra name as used for the appendix tables: sl6, so12, sp6, g2, e8.
inline std::string algebra_name(const AlgebraId& id)
{
	switch (id.family) {
	case Family::A: return "sl" + std::to_string(id.rank + 1);
	case Family::B: return "so" + std::to_string(2 * id.rank + 1);
	case Family::C: return "sp" + std::to_string(2 * id.rank);
	case Family::D: return "so" + std::to_string(2 * id.rank);
	case Family::E: return "e" + std::to_string(id.rank);
	case Family::F: return "f4";
	case Family::G: return "g2";
	}
	return "?";
}

/// Accepts "sl6", "sl 6", "so_12", "sp6", "A5", "D6", "e8", "G2" (case-insensitive).
/// "sl N" is A_{N-1}; "so N" is B or D by parity; "sp N" is C_{N/2}.
inline AlgebraId parse_algebra(std::string_view text)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_' && ch != '(' && ch != ')')
			s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
	std::size_t i = 0;
	while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
		++i;
	const std::string prefix = s.substr(0, i), digits = s.substr(i);
	if (digits.empty() || digits.size() > 6 ||
	    digits.find_first_not_of("0123456789") != std::string::npos)
		throw unknown_algebra("cannot parse algebra name '" + std::string(text) + "'");
	const int n = std::stoi(digits);

	std::optional<AlgebraId> id;
	if (prefix == "sl" || prefix == "su")
		id = AlgebraId{Family::A, n - 1};
	else if (prefix == "so")
		id = (n % 2 == 1) ? AlgebraId{Family::B, (n - 1) / 2} : AlgebraId{Family::D, n / 2};
	else if (prefix == "sp") {
		if (n % 2 != 0)
			throw unknown_algebra("sp N requires even N, got '" + std::string(text) + "'");
		id = AlgebraId{Family::C, n / 2};
	} else if (prefix.size() == 1 && std::string_view("abcdefg").find(prefix[0]) != std::string_view::npos)
		id = AlgebraId{static_cast<Family>(prefix[0] - 'a'), n};
	if (!id || !valid_rank(id->family, id->rank))
		throw unknown_algebra("unknown simple Lie algebra '" + std::string(text) + "'");
	return *id;
}

/// Vogel's table with alpha = -2; t equals the dual Coxeter number.
inline VogelParams vogel_params(const AlgebraId& id)
{
	if (!valid_rank(id.family, id.rank))
		throw unknown_algebra("invalid algebra " + cartan_name(id));
	const long n = id.rank;
	switch (id.family) {
	case Family::A: return {-2, 2, n + 1};
	case Family::B: return {-2, 4, 2 * n - 3};
	case Family::C: return {-2, 1, n + 2};
	case Family::D: return {-2, 4, 2 * n - 4};
	case Family::G: return {-2, make_rational(10, 3), make_rational(8, 3)};
	case Family::F: return {-2, 5, 6};
	case Family::E:
		if (n == 6)
			return {-2, 6, 8};
		if (n == 7)
			return {-2, 8, 12};
		return {-2, 12, 20};
	}
	throw unknown_algebra("invalid algebra");
}

// ---------------------------------------------------------------------------
// Lines of Vogel's plane.

enum class Line { sl, so, sp, exc };

/// A line with its parameter: N for sl/so/sp, n for the exceptional line.
struct LineId {
	Line line;
	Rational parameter;
};

/// Vogel parameters that depend affinely on one rational parameter:
/// slot_i(N) = base_i + direction_i * N.
struct AffineLine {
	std::array<Rational, 3> base;
	std::array<Rational, 3> direction;

	VogelParams at(const Rational& n) const
	{
		return {Rational(base[0] + direction[0] * n), Rational(base[1] + direction[1] * n),
		        Rational(base[2] + direction[2] * n)};
	}

	AffineLine permuted(const std::array<int, 3>& order) const
	{
		return {{base[order[0]], base[order[1]], base[order[2]]},
		        {direction[order[0]], direction[order[1]], direction[order[2]]}};
	}
};

/// sl: (-2, 2, N), alpha + beta = 0. so: (-2, 4, N-4), 2 alpha + beta = 0.
/// sp: (-2, 1, N/2+2), alpha + 2 beta = 0. exc: (-2, n+4, 2n+4), gamma = 2(alpha+beta).
inline AffineLine line_parametrization(Line line)
{
	const Rational zero(0), one(1);
	switch (line) {
	case Line::sl: return {{-2, 2, 0}, {zero, zero, one}};
	case Line::so: return {{-2, 4, -4}, {zero, zero, one}};
	case Line::sp: return {{-2, 1, 2}, {zero, zero, make_rational(1, 2)}};
	case Line::exc: return {{-2, 4, 4}, {zero, one, Rational(2)}};
	}
	throw std::invalid_argument("unknown line");
}

/// The exceptional line written as (s, 1-s, 2).
inline AffineLine exceptional_unit_line() { return {{0, 1, 2}, {Rational(1), Rational(-1), Rational(0)}}; }

inline VogelParams line_params(const LineId& id) { return line_parametrization(id.line).at(id.parameter); }

inline std::string line_name(Line l)
{
	switch (l) {
	case Line::sl: return "sl";
	case Line::so: return "so";
	case Line::sp: return "sp";
	case Line::exc: return "exc";
	}
	return "?";
}

} // namespace vogel
