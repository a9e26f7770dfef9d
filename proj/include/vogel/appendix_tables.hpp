/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "identities.hpp"
#include "rational.hpp"
#include "root_system.hpp"
#include "sinh_product.hpp"
#include "universal.hpp"
#include "vogel_params.hpp"

namespace vogel {

/// A signed multiple of the irrep with the given Dynkin labels.
struct WeightTerm {
	long coefficient;
	std::string labels;
};

/// One row of a symmetric-cube decomposition table.
struct TableRow {
	std::string name;
	SinhProduct formula;
	/// Copies of the formula in the row ("2g" has two).
	long multiplicity;
	std::vector<WeightTerm> weyl;
	/// Tabulated dimension, as printed and as a number.
	std::string expected_text;
	Rational expected;
};

struct TableSpec {
	std::string id;
	AlgebraId algebra;
	/// Line through the algebra's point; the universal entries are limits along it.
	AffineLine line;
	Rational at;
	std::vector<TableRow> rows;
	Rational expected_sum;
};

struct TableRowResult {
	std::string name;
	std::string expected_text;
	Rational universal;
	Rational weyl;
	Rational expected;
	bool agree;
};

struct TableResult {
	std::string id;
	std::vector<TableRowResult> rows;
	Rational universal_sum;
	Rational weyl_sum;
	Rational expected_sum;
	/// d(d+1)(d+2)/6 from the adjoint dimension.
	Rational sym_cube_dim;

	bool passed() const
	{
		for (const auto& r : rows)
			if (!r.agree)
				return false;
		return universal_sum == expected_sum && weyl_sum == expected_sum && sym_cube_dim == expected_sum;
	}
};

namespace detail {

inline std::vector<TableRow> sym_cube_rows(const std::array<std::vector<WeightTerm>, 8>& weyl,
                                           const std::array<std::pair<std::string, long>, 8>& expected)
{
	using formula::adjoint;
	using formula::x2;
	using formula::z;
	const std::array<std::pair<std::string, SinhProduct>, 8> f{{
		{"2g", adjoint()},
		{"Y3(alpha)", z(3, 0)},
		{"Y3(beta)", z(3, 0).permuted({1, 0, 2})},
		{"Y3(gamma)", z(3, 0).permuted({2, 1, 0})},
		{"X2", x2()},
		{"gY2(beta)(alpha,beta,gamma)", z(1, 1)},
		{"gY2(beta)(alpha,gamma,beta)", z(1, 1).permuted({0, 2, 1})},
		{"gY2(beta)(beta,gamma,alpha)", z(1, 1).permuted({1, 2, 0})},
	}};
	std::vector<TableRow> rows;
	for (std::size_t i = 0; i < f.size(); ++i)
		rows.push_back({f[i].first, f[i].second, i == 0 ? 2 : 1, weyl[i], expected[i].first, Rational(expected[i].second)});
	return rows;
}

} // namespace detail

inline const std::vector<std::string>& table_ids()
{
	static const std::vector<std::string> ids{"s3-sl6", "s3-f4", "s3-so12"};
	return ids;
}

/// Table fixture by id; nullopt for an unknown id.
inline std::optional<TableSpec> table_spec(std::string_view id)
{
	if (id == "s3-sl6")
		return TableSpec{
			"s3-sl6", {Family::A, 5}, line_parametrization(Line::sl), Rational(6),
			detail::sym_cube_rows({{{{2, "10001"}},
			                        {{1, "30003"}},
			                        {{1, "00200"}},
			                        {{1, "00000"}},
			                        {{1, "20010"}, {1, "01002"}},
			                        {{1, "11011"}},
			                        {{1, "20002"}},
			                        {{1, "01010"}}}},
			                      {{{"2x35", 70},
			                        {"2695", 2695},
			                        {"175", 175},
			                        {"1", 1},
			                        {"2x280", 560},
			                        {"3675", 3675},
			                        {"405", 405},
			                        {"189", 189}}}),
			Rational(7770)};
	if (id == "s3-f4")
		return TableSpec{
			"s3-f4", {Family::F, 4}, exceptional_unit_line(), make_rational(-2, 3),
			detail::sym_cube_rows({{{{2, "1000"}},
			                        {{1, "3000"}},
			                        {{1, "0010"}},
			                        {{-1, "1000"}},
			                        {{1, "0100"}},
			                        {{1, "1002"}},
			                        {},
			                        {}}},
			                      {{{"2x52", 104},
			                        {"12376", 12376},
			                        {"273", 273},
			                        {"-52", -52},
			                        {"1274", 1274},
			                        {"10829", 10829},
			                        {"0", 0},
			                        {"0", 0}}}),
			Rational(24804)};
	if (id == "s3-so12")
		return TableSpec{
			"s3-so12", {Family::D, 6}, line_parametrization(Line::so), Rational(12),
			detail::sym_cube_rows({{{{2, "010000"}},
			                        {{1, "030000"}},
			                        {{1, "000020"}, {1, "000002"}},
			                        {},
			                        {{1, "101000"}},
			                        {{1, "010100"}},
			                        {{1, "210000"}},
			                        {}}},
			                      {{{"2x66", 132},
			                        {"23100", 23100},
			                        {"924", 924},
			                        {"0", 0},
			                        {"2079", 2079},
			                        {"21021", 21021},
			                        {"2860", 2860},
			                        {"0", 0}}}),
			Rational(50116)};
	return std::nullopt;
}

/// Recomputes every row from the universal formulas (limits along the table's
/// line) and from the Weyl dimension formula.
inline TableResult regenerate_table(const TableSpec& spec)
{
	const RootSystem rs = build_root_system(spec.algebra);
	TableResult out;
	out.id = spec.id;
	out.expected_sum = spec.expected_sum;
	for (const auto& row : spec.rows) {
		const Rational u = row.multiplicity * row.formula.reduce().line_limit(spec.line, spec.at);
		Rational w(0);
		for (const auto& t : row.weyl)
			w += t.coefficient * weyl_dim(rs, weight_from_dynkin(rs, t.labels));
		out.rows.push_back({row.name, row.expected_text, u, w, row.expected, u == w && w == row.expected});
		out.universal_sum += u;
		out.weyl_sum += w;
	}
	const Rational d = dim_adjoint(spec.line.at(spec.at));
	out.sym_cube_dim = d * (d + 1) * (d + 2) / 6;
	return out;
}

} // namespace vogel
