/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Invocation {
	int code;
	std::string out;
};

Invocation run(const std::string& args, const std::string& env = "")
{
	const std::string cmd = env + (env.empty() ? "" : " ") + QDIM_BINARY + std::string(" ") + args + " 2>/dev/null";
	FILE* p = popen(cmd.c_str(), "r");
	std::string out;
	char buf[4096];
	std::size_t n;
	while ((n = fread(buf, 1, sizeof buf, p)) > 0)
		out.append(buf, n);
	const int status = pclose(p);
	return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args, int expected_code = 0, const std::string& env = "")
{
	const Invocation r = run("--json " + args, env);
	EXPECT_EQ(r.code, expected_code) << args;
	return nlohmann::json::parse(r.out);
}

void expect_schema(const nlohmann::json& j)
{
	for (const char* key : {"command", "inputs", "results", "status"})
		EXPECT_TRUE(j.contains(key)) << key;
}

} // namespace

TEST(Cli, DimE8)
{
	const auto j = run_json("dim e8");
	expect_schema(j);
	EXPECT_EQ(j["command"], "dim");
	EXPECT_EQ(j["status"], "pass");
	EXPECT_EQ(j["results"]["dim"], "248/1");
	EXPECT_EQ(j["results"]["t"], "30/1");
	EXPECT_EQ(j["inputs"]["beta"], "12/1");
}

TEST(Cli, ExplicitParameters)
{
	const auto j = run_json("dim --alpha -2 --beta 2 --gamma 6");
	EXPECT_EQ(j["results"]["dim"], "35/1");
	EXPECT_EQ(run_json("dim --alpha -2 --beta 1/2 --gamma 3")["status"], "pass");
}

TEST(Cli, CartanSquareSl6)
{
	const auto j = run_json("qdim cartan sl6 --n 2");
	EXPECT_EQ(j["results"]["constant_term"], "405/1");
	EXPECT_EQ(j["results"]["coefficients"].size(), 21u);
	EXPECT_EQ(j["results"]["coefficients"][2], "2835/1");
}

TEST(Cli, ZAndY2)
{
	EXPECT_EQ(run_json("qdim z sl6 --k 1 --l 1")["results"]["constant_term"], "3675/1");
	EXPECT_EQ(run_json("qdim y2 sl6 --slot beta")["results"]["constant_term"], "189/1");
	EXPECT_EQ(run_json("qdim x2 f4")["results"]["constant_term"], "1274/1");
}

TEST(Cli, NumericValue)
{
	const auto j = run_json("qdim adjoint --alpha -2 --beta 2 --gamma 2 --x 0.3");
	EXPECT_NEAR(j["results"]["value"].get<double>(), 3.0906770282577205, 1e-13);
}

TEST(Cli, SeriesOrderFromEnvironment)
{
	const auto j = run_json("qdim adjoint e7", 0, "QDIM_SERIES_ORDER=4");
	EXPECT_EQ(j["inputs"]["order"], 4);
	EXPECT_EQ(j["results"]["coefficients"].size(), 5u);
	EXPECT_EQ(run_json("qdim adjoint e7 --series 6", 0, "QDIM_SERIES_ORDER=4")["results"]["coefficients"].size(), 7u);
}

TEST(Cli, VerifyAndTable)
{
	const auto v = run_json("verify s3 --order 8 --trials 5 --seed 3");
	EXPECT_EQ(v["results"]["passed"], true);
	EXPECT_EQ(v["results"]["points_checked"], 5);
	const auto t = run_json("table s3-so12");
	EXPECT_EQ(t["status"], "pass");
	EXPECT_EQ(t["results"]["rows"].size(), 8u);
	EXPECT_EQ(run_json("verify g2zero")["status"], "pass");
}

TEST(Cli, Instanton)
{
	const auto j = run_json("instanton e7 --eps1 0.1 --eps2 0.2 --sigma -1 --x 0.5 --nmax 2");
	ASSERT_EQ(j["results"]["rows"].size(), 2u);
	EXPECT_EQ(j["results"]["rows"][1]["partial_sum"], j["results"]["sum"]);
}

TEST(Cli, ExitCodes)
{
	EXPECT_EQ(run("dim e8").code, 0);
	EXPECT_EQ(run("dim foo").code, 2);
	EXPECT_EQ(run("frobnicate").code, 2);
	EXPECT_EQ(run("dim e8 --alpha 1 --beta 2 --gamma 3").code, 2);
	EXPECT_EQ(run("verify nope").code, 2);
	EXPECT_EQ(run("dim --alpha 0 --beta 1 --gamma 1").code, 3);
	EXPECT_EQ(run("instanton e7 --nmax 2 --x nan").code, 4);
	const auto j = run_json("dim --alpha 0 --beta 1 --gamma 1", 3);
	expect_schema(j);
	EXPECT_EQ(j["status"], "error");
}

TEST(Cli, OutputIsByteIdentical)
{
	for (const char* args : {"--json verify s2 --order 10 --trials 20 --seed 5", "qdim z e8 --k 2 --l 1", "--json table s3-f4"}) {
		const Invocation a = run(args), b = run(args);
		EXPECT_EQ(a.out, b.out) << args;
		EXPECT_FALSE(a.out.empty());
	}
}

TEST(Cli, HumanOutputMirrorsJson)
{
	const Invocation r = run("dim e8");
	EXPECT_NE(r.out.find("dim: 248/1"), std::string::npos);
	EXPECT_NE(r.out.find("status: pass"), std::string::npos);
}
