#include <gtest/gtest.h>

#include "cli.hpp"

using namespace spherical;
using namespace spherical::cli;
using Args = std::vector<std::string>;

namespace {
nlohmann::json json_of(const Args& args) {
    const Outcome out = main_with_args(args);
    return nlohmann::json::parse(out.output);
}
}  // namespace

TEST(Parse, Examples) {
    const Command lr = parse_args({"lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"});
    EXPECT_EQ(lr.name, "lr");
    EXPECT_EQ(lr.lam, Partition({3, 2, 1}));
    EXPECT_EQ(lr.nu, Partition({2, 1}));

    const Command c = parse_args({"classify", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2"});
    EXPECT_EQ(c.name, "classify");
    EXPECT_EQ(c.word, GrassWord({2, 7, 9}, 9));
    EXPECT_EQ(c.blocks, LeviBlocks({2, 5, 2}));

    const Command m = parse_args({"heads", "--w", "2,7,9", "--n", "9", "--d", "3", "--max-levi", "--r", "2", "--format", "json"});
    EXPECT_TRUE(m.max_levi);
    EXPECT_EQ(m.r, 2);
    EXPECT_EQ(m.format, Format::json);
}

TEST(Parse, Errors) {
    auto code = [](const Args& a) { return main_with_args(a).exit_code; };
    auto message = [](const Args& a) { return main_with_args(a).output; };
    EXPECT_EQ(code({}), ExitCode::usage);
    EXPECT_EQ(code({"frobnicate"}), ExitCode::usage);
    EXPECT_NE(message({"frobnicate"}).find("frobnicate"), std::string::npos);
    EXPECT_EQ(code({"lr", "--lam", "3,2,1", "--bogus"}), ExitCode::usage);
    EXPECT_EQ(code({"lr", "--lam", "3,x"}), ExitCode::usage);
    EXPECT_EQ(code({"classify", "--w", "2,7,9", "--n", "9"}), ExitCode::usage);
    EXPECT_EQ(code({"classify", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2", "--max-levi"}), ExitCode::usage);

    const Args decreasing{"classify", "--w", "9,7,2", "--n", "9", "--blocks", "2,5,2"};
    EXPECT_EQ(code(decreasing), ExitCode::domain);
    EXPECT_NE(message(decreasing).find("--w"), std::string::npos);
    EXPECT_NE(message(decreasing).find("strictly increasing"), std::string::npos);
    const Args bad_sum{"classify", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,3"};
    EXPECT_EQ(code(bad_sum), ExitCode::domain);
    EXPECT_NE(message(bad_sum).find("--blocks"), std::string::npos);
    EXPECT_EQ(code({"lr", "--lam", "1,2"}), ExitCode::domain);
    EXPECT_EQ(code({"expand", "--shape", "2/3"}), ExitCode::domain);
    EXPECT_EQ(code({"heads", "--w", "2,7,9", "--n", "9", "--d", "2", "--blocks", "2,5,2"}), ExitCode::domain);
    EXPECT_EQ(code({"classify", "--w", "2,7,9", "--n", "9", "--blocks", "2,7"}), ExitCode::domain);
    EXPECT_EQ(code({"heads", "--w", "1,7,9", "--n", "9", "--blocks", "1,6,2"}), ExitCode::domain);
    EXPECT_EQ(code({"lr", "--help"}), ExitCode::ok);
}

TEST(Parse, RoundTrip) {
    const std::vector<Args> samples{
        {"lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"},
        {"lr", "--lam", "3^2,1", "--format", "json"},
        {"expand", "--shape", "4,2,2,1/2,2"},
        {"expand", "--shape", "3,1", "--n-vars", "2", "--timings"},
        {"multfree", "--shape", "3,3,2,1/1,1", "--n-vars", "2"},
        {"heads", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2", "--r", "3"},
        {"decompose", "--w", "2,7,9", "--n", "9", "--max-levi", "--r", "2", "--format", "json"},
        {"reduce", "--w", "1,2,5,7", "--n", "8", "--blocks", "2,3,2,1"},
        {"classify", "--w", "4,7,8,9", "--n", "9", "--d", "4", "--blocks", "4,3,2"},
        {"toric", "--w", "1,3,4,7", "--n", "8"},
        {"verify", "--n-max", "4", "--r-max", "2"},
    };
    for (const auto& a : samples) {
        const Command c = parse_args(a);
        EXPECT_EQ(parse_args(format_args(c)), c) << a.front();
    }
}

TEST(Run, TextOutput) {
    EXPECT_EQ(main_with_args({"lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"}).output, "2\n");
    EXPECT_EQ(main_with_args({"expand", "--shape", "2,1/1"}).output, "(1,1): 1\n(2): 1\n");
    const Outcome heads = main_with_args({"heads", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2"});
    EXPECT_NE(heads.output.find("Theta(2,0,1) = (1,2,9)"), std::string::npos);
    const Outcome cls = main_with_args({"classify", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2"});
    EXPECT_EQ(cls.exit_code, 0);
    EXPECT_NE(cls.output.find("verdict: spherical"), std::string::npos);
    EXPECT_EQ(main_with_args({"toric", "--w", "2,7,9", "--n", "9"}).output, "not toric\n");
}

TEST(Run, JsonOutput) {
    const auto cls = json_of({"classify", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2", "--format", "json"});
    EXPECT_EQ(cls["command"], "classify");
    EXPECT_EQ(cls["version"], spherical::version);
    EXPECT_EQ(cls["input"]["w"], nlohmann::json::array({2, 7, 9}));
    EXPECT_EQ(cls["input"]["d"], 3);
    EXPECT_EQ(cls["input"]["N"], 9);
    EXPECT_EQ(cls["result"]["verdict"], "spherical");
    EXPECT_FALSE(cls.contains("timings"));

    const auto dec = json_of({"decompose", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2", "--format", "json"});
    EXPECT_EQ(dec["result"]["terms"].size(), 4u);
    EXPECT_EQ(dec["result"]["dimension"], "47");

    const auto timed = json_of({"toric", "--w", "1,2,5", "--n", "5", "--format", "json", "--timings"});
    EXPECT_EQ(timed["result"]["toric"], true);
    EXPECT_TRUE(timed["timings"].contains("seconds"));

    const auto err = json_of({"heads", "--w", "1,7,9", "--n", "9", "--blocks", "1,6,2", "--format", "json"});
    EXPECT_TRUE(err.contains("error"));
}

TEST(Run, Verify) {
    const Outcome out = main_with_args({"verify", "--n-max", "5", "--r-max", "3"});
    EXPECT_EQ(out.exit_code, 0);
    EXPECT_NE(out.output.find("no counterexamples"), std::string::npos);
}

TEST(Run, Deterministic) {
    const Args a{"decompose", "--w", "4,7,8,9", "--n", "9", "--blocks", "4,3,2", "--r", "2", "--format", "json"};
    EXPECT_EQ(main_with_args(a).output, main_with_args(a).output);
}
