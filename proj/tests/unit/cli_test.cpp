#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/matrix_io.hpp"
#include "pcore/instance_gen.hpp"
#include "test_helpers.hpp"

namespace pcore::cli {
namespace {

using test::ex_a;
using test::ex_b;
using test::I1;
using test::m2;
using test::near;

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("pcore_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const std::filesystem::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string write(const std::string& name, const ComplexMatrix& m) {
        return write(name, matrix_to_json(m).dump());
    }

    std::filesystem::path dir_;
};

TEST_F(CliTest, ComputePseudoCoreOfExample) {
    const CliRun r = run_cli({"compute", "--kind", "pcore", "--input", write("a.json", ex_a())});
    ASSERT_EQ(r.code, kPass) << r.err;
    const json j = r.report();
    EXPECT_TRUE(near(matrix_from_json(j["result"]["inverse"]), m2(-I1, 0, 0, 0)));
    EXPECT_TRUE(j.contains("policy"));
    EXPECT_FALSE(j.contains("elapsed_seconds"));
}

TEST_F(CliTest, ComputeGroupRefusesIndexTwo) {
    const CliRun r = run_cli({"compute", "--kind", "group", "--input", write("n.json", m2(0, 1, 0, 0))});
    EXPECT_EQ(r.code, kNoInverse);
    EXPECT_NE(r.err.find("index 2 exceeds 1"), std::string::npos) << r.err;
}

TEST_F(CliTest, ComputeIndexOfIdentity) {
    const CliRun r = run_cli({"compute", "--kind", "index", "--input", write("i.json", identity(3))});
    ASSERT_EQ(r.code, kPass);
    EXPECT_EQ(r.report()["index"], 0);
}

TEST_F(CliTest, ComputeTimingFlag) {
    const CliRun r = run_cli(
        {"compute", "--kind", "drazin", "--timing", "--input", write("i.json", identity(2))});
    ASSERT_EQ(r.code, kPass);
    EXPECT_TRUE(r.report().contains("elapsed_seconds"));
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(run_cli({"compute", "--kind", "pcore", "--input", (dir_ / "missing.json").string()})
                  .code,
              kInputError);
    EXPECT_EQ(run_cli({"compute", "--kind", "pcore", "--input", write("bad.json", "{not json")})
                  .code,
              kInputError);
    const std::string ragged = R"({"rows": 2, "cols": 2, "data": [[[1, 0], [0, 0]]]})";
    EXPECT_EQ(run_cli({"compute", "--kind", "pcore", "--input", write("r.json", ragged)}).code,
              kInputError);
    EXPECT_EQ(run_cli({"compute", "--kind", "bogus", "--input", write("i.json", identity(2))}).code,
              kInputError);
    EXPECT_EQ(run_cli({"compute", "--kind", "pcore", "--input", write("n.json", zeros(2, 3))}).code,
              kInputError);
    EXPECT_EQ(run_cli({"nonsense"}).code, kInputError);
    EXPECT_EQ(run_cli({"compute", "--kind", "pcore", "--rank-tol", "2", "--input",
                       write("i2.json", identity(2))})
                  .code,
              kInputError);
}

TEST_F(CliTest, VerifyExitCodes) {
    const std::string a = write("a.json", ex_a());
    const std::string b = write("b.json", ex_b());
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_1", "--input", a, "--input", b}).code,
              kHypothesesNotMet);
    const std::string i = write("i.json", identity(2));
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_4", "--input", i, "--input", b}).code, kPass);
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_4", "--input", a}).code, kInputError);
    const std::string big = write("big.json", identity(3));
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_4", "--input", a, "--input", big}).code,
              kInputError);
}

TEST_F(CliTest, VerifyInstanceObject) {
    json inst;
    inst["a"] = matrix_to_json(ex_a());
    inst["b"] = matrix_to_json(ex_b());
    const std::string p = write("inst.json", inst.dump());
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_4", "--input", p}).code, kPass);
}

TEST_F(CliTest, VerifyGeneratedQuadruple) {
    const CliRun g = run_cli({"generate", "--theorem", "T4_1", "--dims", "3,2", "--seed", "5"});
    ASSERT_EQ(g.code, kPass) << g.err;
    const std::string p = write("gen.json", g.out);
    const CliRun v = run_cli({"verify", "--theorem", "T4_1", "--input", p});
    EXPECT_EQ(v.code, kPass) << v.out;
}

TEST_F(CliTest, VerifyConverseNeedsSplit) {
    const std::string x = write("x.json", m2(1, 1, 0, 0));
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_5b", "--input", x, "--split", "1"}).code, kPass);
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_5b", "--input", x, "--split", "5"}).code,
              kInputError);
    const std::string low = write("low.json", m2(0, 0, 1, 0));
    EXPECT_EQ(run_cli({"verify", "--theorem", "L2_5b", "--input", low, "--split", "1"}).code,
              kInputError);
}

TEST_F(CliTest, FuzzSmallCampaign) {
    const CliRun r = run_cli({"fuzz", "--theorem", "L2_2", "--dim", "4", "--trials", "20", "--seed", "7"});
    ASSERT_EQ(r.code, kPass) << r.err;
    const json j = r.report();
    EXPECT_EQ(j["summary"]["pass"], 20);
    EXPECT_EQ(j["instances"].size(), 20U);
    EXPECT_EQ(j["seed"], 7);
}

TEST_F(CliTest, FuzzIsDeterministic) {
    const std::vector<std::string> args{"fuzz", "--theorem", "T3_1", "--dim", "4",
                                        "--trials", "5", "--seed", "11"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST_F(CliTest, FuzzParameterErrors) {
    EXPECT_EQ(run_cli({"fuzz", "--theorem", "L2_2", "--trials", "0"}).code, kInputError);
    EXPECT_EQ(run_cli({"fuzz", "--theorem", "L2_2", "--dim", "99", "--trials", "1"}).code,
              kInputError);
    EXPECT_EQ(run_cli({"fuzz", "--theorem", "NOPE", "--trials", "1"}).code, kInputError);
}

TEST_F(CliTest, ExampleThreeThree) {
    const CliRun r = run_cli({"example-3-3"});
    ASSERT_EQ(r.code, kPass);
    const json rep = r.report()["report"];
    EXPECT_EQ(rep["verdict"], "pass");
    EXPECT_TRUE(near(matrix_from_json(rep["witnesses"]["(a+b)^pc"]), 0.5 * m2(-I1, 1, -1, -I1)));
    EXPECT_NE(rep["note"].get<std::string>().find("certified"), std::string::npos);
}

TEST(MatrixIo, RoundTripCanonical) {
    const std::string text =
        R"({"rows":2,"cols":2,"data":[[[0.1,-2.0],[1e-300,0.0]],[[3.0,0.5],[-0.0,1.0]]]})";
    const json j = json::parse(text);
    EXPECT_EQ(matrix_to_json(matrix_from_json(j)).dump(), j.dump());
}

TEST(MatrixIo, RoundTripGenerated) {
    const ComplexMatrix m = gen_plain(4, 9);
    const std::string once = matrix_to_json(m).dump();
    const ComplexMatrix back = matrix_from_json(json::parse(once));
    EXPECT_TRUE(((back - m).array() == 0.0).all());
    EXPECT_EQ(matrix_to_json(back).dump(), once);
}

TEST(MatrixIo, RejectsMalformed) {
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[[[1]]]})")),
                 InputError);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[[["x",0]]]})")),
                 InputError);
    EXPECT_THROW(matrix_from_json(json::parse("[1,2]")), InputError);
}

TEST(MatrixIo, InstanceRoundTrip) {
    Instance inst;
    inst.matrices["x"] = m2(1, 1, 0, 0);
    inst.split = 1;
    const Instance back = instance_from_json(instance_to_json(inst));
    EXPECT_TRUE(near(back.at("x"), inst.at("x"), 0.0));
    EXPECT_EQ(back.split, inst.split);
}

} // namespace
} // namespace pcore::cli
