#include "syntax_fixtures.hpp"

#include "lingdyn/error.hpp"
#include "lingdyn/script.hpp"

#include <gtest/gtest.h>

using namespace lingdyn::syntax;

namespace {

const char* kWhichBooks = R"([
  {"op": "em", "args": ["which", "books"], "as": "wb"},
  {"op": "em", "args": ["read", "wb"], "as": "VP"},
  {"op": "em", "args": ["you", "VP"], "as": "TP"},
  {"op": "em", "args": ["did", "TP"], "as": "C1"},
  {"op": "im", "args": ["C1", "wb"], "as": "CP"},
  {"op": "close", "args": ["CP"]},
  {"op": "transfer", "args": ["CP"]}
])";

ScriptResult run(const std::string& text) { return run_script(fixtures::english(), parse_script(text)); }

TEST(Script, ParsesOperandForms) {
    const auto steps = parse_script(R"({"steps": [
        {"op": "em", "a": {"lex": "read"}, "b": "books", "as": "VP"},
        {"op": "im", "args": [{"name": "VP"}, {"path": [1]}]},
        {"op": "close"},
        {"op": "transfer", "args": ["_"], "pronounce": "lowest"}
    ]})");
    ASSERT_EQ(steps.size(), 4u);
    EXPECT_EQ(steps[0].args[0].kind, ScriptArg::Kind::LEX);
    EXPECT_EQ(steps[0].args[1].kind, ScriptArg::Kind::AUTO);
    EXPECT_EQ(steps[0].name, "VP");
    EXPECT_EQ(steps[1].op, OpKind::IM);
    EXPECT_EQ(steps[1].args[0].kind, ScriptArg::Kind::NAME);
    EXPECT_EQ(steps[1].args[1].kind, ScriptArg::Kind::PATH);
    EXPECT_EQ(steps[1].args[1].path, Path{1});
    EXPECT_EQ(steps[2].args.at(0).kind, ScriptArg::Kind::LAST);
    EXPECT_EQ(steps[3].args[0].kind, ScriptArg::Kind::LAST);
    EXPECT_EQ(steps[3].pronunciation, Pronunciation::LOWEST);
}

TEST(Script, RejectsMalformedScripts) {
    EXPECT_THROW(parse_script("{"), lingdyn::DomainError);
    EXPECT_THROW(parse_script(R"([{"op": "fuse", "args": ["a", "b"]}])"), lingdyn::DomainError);
    EXPECT_THROW(parse_script(R"([{"op": "em", "args": ["a"]}])"), lingdyn::DomainError);
    EXPECT_THROW(parse_script(R"([{"op": "em", "args": ["a", {"path": [0]}]}])"), lingdyn::DomainError);
    EXPECT_THROW(parse_script(R"([{"op": "im", "args": ["a", {"path": [2]}]}])"), lingdyn::DomainError);
    EXPECT_THROW(parse_script(R"({"nope": 1})"), lingdyn::DomainError);
}

TEST(Script, WhichBooksConverges) {
    const ScriptResult r = run(kWhichBooks);
    ASSERT_TRUE(r.converged()) << r.errors.front().message;
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_EQ(r.output->pf_string(), "which books did you read");
}

TEST(Script, ImplicitTransferOfTheLastObject) {
    const ScriptResult r = run(R"([{"op": "em", "args": ["the", "books"]}])");
    ASSERT_TRUE(r.converged());
    EXPECT_EQ(r.output->pf_string(), "the books");
    EXPECT_EQ(r.derivation.log().back().op, OpKind::TRANSFER);
}

TEST(Script, PhaseViolationCrashes) {
    const ScriptResult r = run(R"([
      {"op": "em", "args": ["which", "books"], "as": "wb"},
      {"op": "em", "args": ["read", "wb"], "as": "VP"},
      {"op": "em", "args": ["v", "VP"], "as": "vP"},
      {"op": "close", "args": ["vP"]},
      {"op": "em", "args": ["you", "vP"], "as": "TP"},
      {"op": "em", "args": ["did", "TP"], "as": "C1"},
      {"op": "im", "args": ["C1", "wb"]}
    ])");
    EXPECT_FALSE(r.converged());
    EXPECT_EQ(r.exit_code(), 2);
    ASSERT_EQ(r.errors.size(), 1u);
    EXPECT_EQ(r.errors[0].reason, "pic_violation");
    EXPECT_EQ(r.errors[0].step, 6u);
    EXPECT_EQ(r.errors[0].op, "im");
    EXPECT_FALSE(r.output.has_value());
}

TEST(Script, LabelingFailureKeepsTheLf) {
    const ScriptResult r = run(R"([
      {"op": "em", "args": ["read", "books"], "as": "VP"},
      {"op": "em", "args": ["the", "books"], "as": "DP"},
      {"op": "em", "args": ["DP", "VP"]}
    ])");
    EXPECT_EQ(r.exit_code(), 2);
    ASSERT_EQ(r.errors.size(), 1u);
    EXPECT_EQ(r.errors[0].reason, "unlabelable");
    EXPECT_EQ(r.errors[0].op, "transfer");
    ASSERT_TRUE(r.output.has_value());
    EXPECT_EQ(r.output->lf.label_error, "unlabelable");
}

TEST(Script, IllegalOperations) {
    auto reason = [](const std::string& text) {
        const ScriptResult r = run(text);
        return r.errors.empty() ? std::string{} : r.errors[0].reason;
    };
    EXPECT_EQ(reason(R"([{"op": "em", "args": ["ghost", "books"]}])"), "illegal_operation");
    EXPECT_EQ(reason(R"([{"op": "em", "args": ["the", "man"], "as": "DP"},
                         {"op": "em", "args": ["DP", "DP"]}])"), "illegal_operation");
    EXPECT_EQ(reason(R"([{"op": "em", "args": ["the", "man"], "as": "DP"},
                         {"op": "close", "args": ["DP"]}])"), "illegal_operation");
    EXPECT_EQ(reason(R"([{"op": "em", "args": ["the", "man"], "as": "DP"},
                         {"op": "im", "args": ["DP", {"path": [0, 1]}]}])"), "illegal_operation");
}

} // namespace
