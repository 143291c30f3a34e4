#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace
{

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs the CLI with stdout captured and stderr discarded.
CliRun cli(const std::string &args)
{
    const std::string cmd = std::string(TAME_CLI) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string &name)
{
    return std::string(TAME_SOURCE_DIR) + "/samples/" + name;
}

std::string corpus(const std::string &name)
{
    return std::string(TAME_SOURCE_DIR) + "/corpus/" + name;
}

} // namespace

TEST(Cli, FormulaCommands)
{
    const CliRun qe = cli("qe " + sample("density.sexp"));
    EXPECT_EQ(qe.code, 0);
    EXPECT_EQ(qe.out, "result: (< a b)\n");
    EXPECT_EQ(cli("decide " + sample("eps-positive.sexp")).out, "result: true\n");
    EXPECT_EQ(cli("dim " + sample("diagonal.sexp")).out, "result: 1\n");
    EXPECT_EQ(cli("celldec " + sample("diagonal.sexp")).code, 0);
}

TEST(Cli, Eliminate)
{
    const CliRun r = cli("eliminate --verify --json " + sample("eliminate-simple.sexp"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["output"]["phi"], "(<= y 1)");
    EXPECT_EQ(j["omega"], nlohmann::json::array({"1"}));
    EXPECT_EQ(j["certificates"]["equivalent"], true);

    const CliRun interval = cli("eliminate --verify " + sample("eliminate-interval.sexp"));
    EXPECT_EQ(interval.code, 0);
    EXPECT_NE(interval.out.find("phi: (and (< 0 y) (< y 1))"), std::string::npos);

    const CliRun sentence = cli("eliminate " + sample("eliminate-sentence.sexp"));
    EXPECT_NE(sentence.out.find("phi: true"), std::string::npos);

    const CliRun oracle = cli("oracle " + sample("eliminate-cancel.sexp"));
    EXPECT_NE(oracle.out.find("phi: (< y 0)"), std::string::npos);
    EXPECT_EQ(cli("verify " + sample("eliminate-cancel.sexp")).code, 0);
}

TEST(Cli, TraceFromEnvironment)
{
    const CliRun r = cli("eliminate --json " + sample("eliminate-interval.sexp"));
    EXPECT_FALSE(nlohmann::json::parse(r.out).contains("trace"));
    const CliRun t = cli("eliminate --json --trace " + sample("eliminate-interval.sexp"));
    EXPECT_EQ(nlohmann::json::parse(t.out)["trace"]["m"], 2);
    const CliRun e = cli("eliminate --json " + sample("eliminate-interval.sexp") + " ; TAME_ELIM_TRACE=1 " +
                      std::string(TAME_CLI) + " eliminate --json " + sample("eliminate-interval.sexp"));
    EXPECT_NE(e.out.find("\"trace\""), std::string::npos);
}

TEST(Cli, Orders)
{
    const CliRun bad = cli("ordcheck " + corpus("not-an-order.sexp"));
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("witness"), std::string::npos);
    EXPECT_EQ(cli("reduce-order " + corpus("not-an-order.sexp")).code, 1);

    const CliRun sq = cli("reduce-order --json " + corpus("lex-square.sexp"));
    ASSERT_EQ(sq.code, 0);
    const auto j = nlohmann::json::parse(sq.out);
    EXPECT_EQ(j["details"]["chain"].size(), 1u);
    EXPECT_EQ(j["details"]["chain"][0]["target_dim"], 1);

    const CliRun cube = cli("reduce-order --iterate --json " + corpus("lex-cube.sexp"));
    ASSERT_EQ(cube.code, 0);
    const auto c = nlohmann::json::parse(cube.out);
    ASSERT_EQ(c["details"]["chain"].size(), 2u);
    EXPECT_EQ(c["details"]["chain"][1]["target_dim"], 1);
}

TEST(Cli, Cuts)
{
    const CliRun ok = cli("cutdef " + sample("cut-lex-square.sexp"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("certificate downward_closed: pass"), std::string::npos);
    const CliRun bad = cli("cutdef " + sample("not-a-cut.sexp"));
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("witness_below"), std::string::npos);
}

TEST(Cli, InputErrors)
{
    EXPECT_EQ(cli("eliminate " + sample("bad-arity.sexp")).code, 2);
    EXPECT_EQ(cli("qe /nonexistent/file.sexp").code, 2);
    EXPECT_EQ(cli("decide " + sample("density.sexp")).code, 2);
    EXPECT_EQ(cli("nosuchcommand").code, 2);
    EXPECT_EQ(cli("cutdef " + sample("density.sexp")).code, 2);
}

TEST(Cli, SelftestSmokeIsDeterministic)
{
    const auto t0 = std::chrono::steady_clock::now();
    const CliRun a = cli("selftest --seed 0 --count 1 --json");
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_LT(s, 10.0);
    const CliRun b = cli("selftest --seed 0 --count 1 --json");
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["criteria"].size(), 8u);
}
