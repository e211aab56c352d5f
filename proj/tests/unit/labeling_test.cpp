#include "syntax_fixtures.hpp"

#include "lingdyn/error.hpp"
#include "lingdyn/labeling.hpp"

#include <gtest/gtest.h>

using namespace lingdyn::syntax;
using fixtures::lex;

namespace {

class LabelingTest : public ::testing::Test {
protected:
    std::shared_ptr<const Lexicon> lexicon = fixtures::english();
    Derivation d{lexicon};
};

TEST_F(LabelingTest, LeafNamesItself) {
    const Derivation x = external_merge(d, lex("read"), lex("books"));
    const Label l = label(x.last().member(0));
    EXPECT_EQ(l.kind, LabelKind::LEXICAL);
}

TEST_F(LabelingTest, HeadLabelsHeadPhrase) {
    Derivation x = external_merge(d, lex("which"), lex("books"), "wb");
    x = external_merge(x, lex("read"), x.named("wb"), "VP");
    const Label wb = label(x.named("wb"));
    EXPECT_EQ(wb.category, "D");
    EXPECT_EQ(wb.kind, LabelKind::HEAD);
    const Label vp = label(x.named("VP"));
    EXPECT_EQ(vp.category, "V");
    EXPECT_EQ(vp.kind, LabelKind::HEAD);
}

TEST_F(LabelingTest, NonHeadAdjunctLetsThePhraseProject) {
    Derivation x = external_merge(d, lex("smart"), lex("man"), "NP");
    // {smart, man}: smart is -H, man is the only head.
    EXPECT_EQ(label(x.named("NP")).category, "N");
    x = external_merge(x, lex("this"), x.named("NP"), "outer");
    const Label outer = label(x.named("outer"));
    EXPECT_EQ(outer.category, "N");
    EXPECT_EQ(outer.kind, LabelKind::PROJECTED);
}

TEST_F(LabelingTest, TwoPhrasesNeedASharedCategory) {
    Derivation x = external_merge(d, lex("which"), lex("books"), "wb");
    x = external_merge(x, lex("did"), lex("you"), "C1");
    x = external_merge(x, x.named("wb"), x.named("C1"), "top");
    // D/Q against C/Q: Q is shared.
    const Label top = label(x.named("top"));
    EXPECT_EQ(top.category, "Q");
    EXPECT_EQ(top.kind, LabelKind::SHARED_FEATURE);

    Derivation y = external_merge(d, lex("read"), lex("books"), "VP");
    y = external_merge(y, lex("the"), lex("books"), "DP");
    y = external_merge(y, y.named("DP"), y.named("VP"), "bad");
    EXPECT_THROW(label(y.named("bad")), lingdyn::UnlabelableError);
}

TEST_F(LabelingTest, LowerCopyIsInvisible) {
    Derivation x = external_merge(d, lex("which"), lex("books"), "wb");
    x = external_merge(x, lex("read"), x.named("wb"), "VP");
    x = external_merge(x, lex("the"), lex("books"), "DP");
    x = external_merge(x, x.named("DP"), x.named("VP"), "XP");
    EXPECT_THROW(label(x.named("XP")), lingdyn::UnlabelableError);
    // Moving the DP out leaves a lower copy; the remaining VP projects.
    x = internal_merge(x, x.named("XP"), x.named("DP"), "moved");
    const SynObj& moved = x.named("moved");
    const CopyContext ctx(moved);
    EXPECT_TRUE(ctx.is_copy(x.named("DP").uid()));
    EXPECT_FALSE(ctx.is_lower(Path{0}));
    EXPECT_TRUE(ctx.is_lower(Path{1, 0}));
    EXPECT_TRUE(ctx.is_lower(Path{1, 0, 1}));
    Labeler labeler(ctx);
    EXPECT_EQ(labeler.label(Path{1}).category, "V");
    EXPECT_EQ(labeler.label(Path{1}).kind, LabelKind::PROJECTED);
}

TEST_F(LabelingTest, TwoHeadsMustAgree) {
    const Derivation x = external_merge(d, lex("read"), lex("man"));
    EXPECT_THROW(label(x.last()), lingdyn::UnlabelableError);
    const Derivation y = external_merge(d, lex("which"), lex("the"));
    EXPECT_EQ(label(y.last()).category, "D");
}

TEST_F(LabelingTest, KindNames) {
    EXPECT_EQ(to_string(LabelKind::HEAD), "head");
    EXPECT_EQ(to_string(LabelKind::SHARED_FEATURE), "shared_feature");
}

} // namespace
