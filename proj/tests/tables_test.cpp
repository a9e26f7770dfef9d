/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#include <gtest/gtest.h>

#include "support.hpp"

using namespace vogel;

namespace {

std::vector<long> universal_column(const TableResult& t)
{
	std::vector<long> out;
	for (const auto& r : t.rows)
		out.push_back(r.universal.get_num().get_si());
	return out;
}

} // namespace

TEST(AppendixTables, Sl6)
{
	const TableResult t = regenerate_table(*table_spec("s3-sl6"));
	EXPECT_TRUE(t.passed());
	EXPECT_EQ(universal_column(t), (std::vector<long>{70, 2695, 175, 1, 560, 3675, 405, 189}));
	EXPECT_EQ(t.universal_sum, 7770);
}

TEST(AppendixTables, F4)
{
	const TableResult t = regenerate_table(*table_spec("s3-f4"));
	EXPECT_TRUE(t.passed());
	EXPECT_EQ(universal_column(t), (std::vector<long>{104, 12376, 273, -52, 1274, 10829, 0, 0}));
	EXPECT_EQ(t.universal_sum, 24804);
}

TEST(AppendixTables, So12)
{
	const TableResult t = regenerate_table(*table_spec("s3-so12"));
	EXPECT_TRUE(t.passed());
	EXPECT_EQ(universal_column(t), (std::vector<long>{132, 23100, 924, 0, 2079, 21021, 2860, 0}));
	EXPECT_EQ(t.universal_sum, 50116);
}

TEST(AppendixTables, RowSumIsSymCubeDimension)
{
	for (const auto& id : table_ids()) {
		const TableSpec spec = *table_spec(id);
		const TableResult t = regenerate_table(spec);
		const Series cube = char_sym_cube(qdim_adjoint(vogel_params(spec.algebra), 2));
		EXPECT_EQ(t.universal_sum, cube[0]) << id;
		EXPECT_EQ(t.sym_cube_dim, cube[0]) << id;
	}
}

TEST(AppendixTables, UnknownId) { EXPECT_FALSE(table_spec("s3-e8").has_value()); }

TEST(AppendixTables, MismatchIsReported)
{
	TableSpec spec = *table_spec("s3-sl6");
	spec.rows[1].expected = 2696;
	const TableResult t = regenerate_table(spec);
	EXPECT_FALSE(t.rows[1].agree);
	EXPECT_FALSE(t.passed());
}

TEST(Specialization, AllNineAlgebras)
{
	const SpecializationReport r = verify_specialization(20, 3);
	EXPECT_TRUE(r.passed());
	EXPECT_EQ(r.checks.size(), 9u * 3u + 3u);
	for (const auto& c : r.checks)
		EXPECT_TRUE(c.passed) << c.algebra << " " << c.what;
}

TEST(Specialization, G2Vanishing)
{
	const SpecializationReport r = verify_g2_zero(20, 3);
	EXPECT_TRUE(r.passed());
	EXPECT_EQ(r.checks.size(), 12u);
}

TEST(Specialization, ZOneOneAgainstWeylWhereTheDerivationApplies)
{
	// Every algebra with gamma >= beta >= 0 in its tabulated parameters.
	for (const auto& id : specialization_algebras()) {
		const VogelParams v = vogel_params(id);
		if (v.gamma() < v.beta())
			continue;
		const RootSystem rs = build_root_system(id);
		EXPECT_EQ(qdim_z(v, 1, 1, 12), weyl_qdim(rs, theta_sigma_weight(rs, 2, 1), 12)) << algebra_name(id);
	}
}
