#include <gtest/gtest.h>

#include <random>

#include <bourbaki/classify.hpp>
#include <bourbaki/counts.hpp>
#include <bourbaki/expander.hpp>
#include <bourbaki/linear.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace bourbaki;

namespace {

Assembly L(const char* x) { return Assembly::letter(x); }

LinearAssembly lin(const std::string& signs, const std::string& links = "")
{
    return parse_linear_text("signs: " + signs + "\nlinks: " + links + "\n");
}

std::string glyphs(const Assembly& a) { return to_glyphs(linearize(a)); }

} // namespace

TEST(Build, ElementOfTwoLetters)
{
    Assembly a = build(SignKind::elem, {L("x"), L("X")});
    LinearAssembly l = linearize(a);
    EXPECT_EQ(to_glyphs(l), "∈ x X");
    EXPECT_EQ(l.size(), 3u);
    EXPECT_TRUE(l.links.empty());
}

TEST(Build, NegationPrefixesOneSign)
{
    Assembly a = build(SignKind::neg, {build(SignKind::elem, {L("x"), L("X")})});
    EXPECT_EQ(glyphs(a), "¬ ∈ x X");
    EXPECT_EQ(linearize(a).size(), 4u);
}

TEST(Build, DisjunctionConcatenatesInPrefix)
{
    Assembly a = build(SignKind::disj, {build(SignKind::neg, {build(SignKind::elem, {L("z"), L("x")})}),
                                        build(SignKind::elem, {L("z"), L("y")})});
    EXPECT_EQ(glyphs(a), "∨ ¬ ∈ z x ∈ z y");
    EXPECT_EQ(linearize(a).size(), 8u);
}

TEST(Build, ArityMismatchIsAConstructionError)
{
    EXPECT_THROW(build(SignKind::neg, {L("x"), L("y")}), ConstructionError);
    EXPECT_THROW(build(SignKind::eq, {L("x")}), ConstructionError);
    EXPECT_THROW(build(SignKind::tau, {L("x")}), ConstructionError);
    EXPECT_THROW(build(SignKind::box, {}), ConstructionError);
    EXPECT_THROW(Assembly::letter(""), ConstructionError);
}

TEST(TauBind, BindsBothOccurrencesOfTheSubsetWitness)
{
    // ¬(z∈x ⇒ z∈y) with ⇒ = ∨¬AB
    Assembly body = Assembly::neg(Assembly::disj(Assembly::neg(Assembly::elem(L("z"), L("x"))),
                                                 Assembly::elem(L("z"), L("y"))));
    Assembly t = tau_bind("z", body);
    LinearAssembly l = linearize(t);
    EXPECT_EQ(to_glyphs(l), "τ ¬ ∨ ¬ ∈ □ x ∈ □ y");
    EXPECT_EQ(l.size(), 10u);
    EXPECT_EQ(l.links.size(), 2u);
    EXPECT_EQ(l.links, (std::vector<Link>{{1, 6}, {1, 9}}));
}

TEST(TauBind, AbsentLetterGivesALinklessTau)
{
    Assembly t = tau_bind("x", L("y"));
    LinearAssembly l = linearize(t);
    EXPECT_EQ(to_glyphs(l), "τ y");
    EXPECT_TRUE(l.links.empty());
}

TEST(TauBind, RemovesEveryOccurrence)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Assembly a = gen::assembly(rng);
        EXPECT_EQ(occurrences("x", tau_bind("x", a)), 0);
    }
}

TEST(TauBind, CountLawOnRandomAssemblies)
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        Assembly a = gen::assembly(rng);
        std::string x = gen::some_letter(rng);
        auto before = oracle::from_linear(linearize(a));
        auto after = oracle::from_linear(linearize(tau_bind(x, a)));
        EXPECT_EQ(after.signs, before.signs + 1);
        EXPECT_EQ(after.links, before.links + occurrences(x, a));
        EXPECT_EQ(after.occ.count(x), 0u);
    }
}

TEST(Substitute, WholeLetterIsReplaced)
{
    Assembly t = tau_bind("z", Assembly::elem(L("z"), L("w")));
    EXPECT_EQ(substitute(L("x"), "x", t), t);
}

TEST(Substitute, VacuousWhenLetterAbsent)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        Assembly a = gen::assembly(rng);
        EXPECT_EQ(substitute(a, "q", L("w")), a);
    }
}

TEST(Substitute, PairTemplateWithEmptySetGivesNumeralOne)
{
    Assembly pair = expand(parse_expression("(enum x y)"));
    Assembly e = expand(ex::empty());
    Substitution s{{"x", e}, {"y", e}};
    LinearAssembly l = linearize(substitute(pair, s));
    EXPECT_EQ(l.size(), 513u);
    EXPECT_EQ(l.links.size(), 134u);
    EXPECT_EQ(substitute(pair, s), expand(ex::numeral(1)));
}

TEST(Substitute, SquaresAreInert)
{
    // substituting for a letter that only appears bound changes nothing
    Assembly t = tau_bind("x", Assembly::elem(L("x"), L("y")));
    EXPECT_EQ(substitute(t, "x", L("w")), t);
}

TEST(Substitute, CountLawOnRandomAssemblies)
{
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; ++i) {
        Assembly a = gen::assembly(rng);
        Assembly t = gen::term(rng, 3);
        std::string x = gen::some_letter(rng);
        auto A = oracle::from_linear(linearize(a));
        auto T = oracle::from_linear(linearize(t));
        auto S = oracle::from_linear(linearize(substitute(a, x, t)));
        Natural k = A.occ.count(x) ? A.occ[x] : Natural(0);
        EXPECT_EQ(S.signs, A.signs - k + k * T.signs);
        EXPECT_EQ(S.links, A.links + k * T.links);
        for (const auto& y : gen::letters()) {
            Natural ay = A.occ.count(y) ? A.occ[y] : Natural(0);
            Natural ty = T.occ.count(y) ? T.occ[y] : Natural(0);
            Natural sy = S.occ.count(y) ? S.occ[y] : Natural(0);
            if (y == x)
                EXPECT_EQ(sy, k * ty);
            else
                EXPECT_EQ(sy, ay + k * ty);
        }
    }
}

TEST(Substitute, SequentialEqualsSimultaneousAfterComposingImages)
{
    std::mt19937_64 rng(15);
    for (int i = 0; i < 300; ++i) {
        Assembly a = gen::assembly(rng);
        Assembly t = gen::term(rng, 3);
        Assembly u = gen::term(rng, 3);
        if (u.occurs("x"))
            u = substitute(u, "x", L("v"));
        Assembly seq = substitute(substitute(a, "x", t), "y", u);
        Substitution both{{"x", substitute(t, "y", u)}, {"y", u}};
        EXPECT_EQ(seq, substitute(a, both));
        if (!t.occurs("y")) {
            Substitution plain{{"x", t}, {"y", u}};
            EXPECT_EQ(seq, substitute(a, plain));
        }
    }
}

TEST(Substitute, AlphaInvariance)
{
    std::mt19937_64 rng(16);
    for (int i = 0; i < 300; ++i) {
        Assembly a = gen::assembly(rng);
        // w never appears in generated assemblies
        EXPECT_EQ(tau_bind("x", a), tau_bind("w", substitute(a, "x", L("w"))));
    }
}

TEST(Occurrences, Basics)
{
    EXPECT_EQ(occurrences("x", L("x")), 1);
    EXPECT_EQ(occurrences("x", L("y")), 0);
    Assembly pair = expand(parse_expression("(enum x y)"));
    EXPECT_EQ(occurrences("x", pair) + occurrences("y", pair), 28);
}

TEST(Occurrences, CollectorLetterInPairBuilderBody)
{
    // (∀z)((z∈t) ⇔ (z=x ou z=y))
    Assembly s = expand(parse_expression("(forall z (iff (in z t) (or (eq z x) (eq z y))))"));
    EXPECT_EQ(occurrences("t", s), 14);
    // consistent with the link delta: 50 − 36 − 2 = 12 plus the 2 direct ones
    LinearAssembly l = linearize(s);
    EXPECT_EQ(l.links.size(), 36u);
}

TEST(Linearize, EmptySetSequenceAndLinks)
{
    LinearAssembly l = linearize(expand(ex::empty()));
    EXPECT_EQ(to_glyphs(l), "τ ¬ ¬ ¬ ∈ τ ¬ ¬ ∈ □ □ □");
    EXPECT_EQ(l.links, (std::vector<Link>{{1, 11}, {1, 12}, {6, 10}}));
    EXPECT_EQ(to_text(l), "signs: tau not not not in tau not not in box box box\nlinks: (1 11) (1 12) (6 10)\n");
}

TEST(Linearize, LetterHasNoLinks)
{
    LinearAssembly l = linearize(L("x"));
    EXPECT_EQ(to_text(l), "signs: x\nlinks:\n");
}

TEST(Linearize, BudgetIsEnforced) { EXPECT_THROW(linearize(expand(ex::numeral(2)), 1000), BudgetError); }

TEST(Delinearize, RoundTripOfEmptySet)
{
    Assembly e = expand(ex::empty());
    LinearAssembly l = lin("tau not not not in tau not not in box box box", "(1 11) (1 12) (6 10)");
    EXPECT_EQ(delinearize(l), e);
    EXPECT_EQ(linearize(delinearize(l)), l);
}

TEST(Delinearize, RoundTripOnGeneratedAssemblies)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        Assembly a = gen::assembly(rng, 6);
        LinearAssembly l = linearize(a);
        Assembly back = delinearize(l);
        EXPECT_EQ(back, a);
        EXPECT_EQ(linearize(back), l);
        EXPECT_EQ(parse_linear_text(to_text(l)), l);
    }
}

namespace {

std::size_t error_index(const LinearAssembly& l)
{
    try {
        delinearize(l);
    } catch (const LinearParseError& e) {
        return e.index();
    }
    ADD_FAILURE() << "no error for " << to_text(l);
    return 0;
}

} // namespace

TEST(Delinearize, ArityUnderflowNamesTheFirstSign) { EXPECT_EQ(error_index(lin("in x")), 1u); }

TEST(Delinearize, MalformedInputs)
{
    EXPECT_THROW(delinearize(lin("tau in box x")), LinearParseError);                 // box without link
    EXPECT_THROW(delinearize(lin("tau in x y", "(1 3)")), LinearParseError);         // link to a letter
    EXPECT_THROW(delinearize(lin("tau in box x", "(1 3) (1 3)")), LinearParseError); // duplicate
    EXPECT_THROW(delinearize(lin("in tau eq x y box", "(2 6)")), LinearParseError);  // crosses scope
    EXPECT_THROW(delinearize(lin("x y")), LinearParseError);                          // overflow
    EXPECT_THROW(delinearize(lin("tau in box x", "(9 3)")), LinearParseError);       // out of range
    EXPECT_THROW(delinearize(LinearAssembly{}), LinearParseError);
    EXPECT_EQ(error_index(lin("x y")), 2u);
}

TEST(Classify, Basics)
{
    EXPECT_EQ(classify(L("x")), Classification::term);
    EXPECT_EQ(classify(expand(parse_expression("(subset x y)"))), Classification::relation);
    EXPECT_EQ(classify(expand(ex::empty())), Classification::term);
    EXPECT_EQ(classify(lin("or x y")), Classification::neither);
    EXPECT_EQ(classify(lin("tau x")), Classification::neither); // τ over a term
    EXPECT_EQ(classify(lin("in not eq x y z")), Classification::neither);
    EXPECT_EQ(to_string(Classification::neither), "Neither");
}

TEST(Classify, ConcatenationOfTwoWellFormedAssembliesIsNeither)
{
    std::mt19937_64 rng(18);
    for (int i = 0; i < 300; ++i) {
        LinearAssembly a = linearize(gen::assembly(rng));
        LinearAssembly b = linearize(gen::assembly(rng));
        LinearAssembly ab = concatenate(a, b);
        EXPECT_FALSE(is_balanced(ab));
        EXPECT_EQ(classify(ab), Classification::neither);
    }
}

TEST(Balance, Examples)
{
    LinearAssembly e = linearize(expand(ex::empty()));
    EXPECT_TRUE(is_balanced(e));
    EXPECT_FALSE(is_balanced(concatenate(e, e)));
    EXPECT_FALSE(is_balanced(LinearAssembly{}));
    EXPECT_TRUE(is_balanced(lin("or x y")));
    EXPECT_EQ(classify(lin("or x y")), Classification::neither); // balanced but ill-sorted
}

TEST(Balance, WellSortedImpliesBalanced)
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        LinearAssembly l = linearize(gen::assembly(rng));
        ASSERT_NE(classify(l), Classification::neither);
        EXPECT_TRUE(is_balanced(l));
    }
}

TEST(Formative, LettersThenMembership)
{
    auto rep = verify_formative({lin("x"), lin("y"), lin("in x y")});
    ASSERT_TRUE(rep.valid);
    ASSERT_EQ(rep.steps.size(), 3u);
    EXPECT_EQ(rep.steps[0].rule, 'a');
    EXPECT_EQ(rep.steps[1].rule, 'a');
    EXPECT_EQ(rep.steps[2].rule, 'e');
}

TEST(Formative, MissingAntecedent)
{
    auto rep = verify_formative({lin("x"), lin("in x y")});
    EXPECT_FALSE(rep.valid);
    EXPECT_EQ(rep.failure, 2u);
}

TEST(Formative, TauOverAnEarlierRelation)
{
    auto rep = verify_formative({lin("x"), lin("y"), lin("in x y"), lin("tau in box y", "(1 3)")});
    ASSERT_TRUE(rep.valid);
    EXPECT_EQ(rep.steps.back().rule, 'd');
    EXPECT_EQ(rep.steps.back().sort, Classification::term);
}

TEST(Formative, NegationAndDisjunction)
{
    auto rep = verify_formative({lin("x"), lin("in x x"), lin("not in x x"), lin("or not in x x in x x")});
    ASSERT_TRUE(rep.valid);
    EXPECT_EQ(rep.steps[2].rule, 'b');
    EXPECT_EQ(rep.steps[3].rule, 'c');
    EXPECT_FALSE(verify_formative({lin("x"), lin("or x x")}).valid);
}

TEST(Formative, CanonicalConstructionOfSubsetIsAccepted)
{
    Assembly s = expand(parse_expression("(subset x y)"));
    auto steps = formative_construction(s);
    std::vector<LinearAssembly> seq;
    for (const auto& a : steps)
        seq.push_back(linearize(a));
    EXPECT_EQ(seq.back(), linearize(s));
    auto rep = verify_formative(seq);
    EXPECT_TRUE(rep.valid) << rep.reason;
}

TEST(Formative, CorruptedSequencesAreRejected)
{
    std::vector<LinearAssembly> seq;
    for (const auto& a : formative_construction(expand(parse_expression("(subset x y)"))))
        seq.push_back(linearize(a));
    std::mt19937_64 rng(20);
    for (int i = 0; i < 50; ++i)
        EXPECT_FALSE(verify_formative(gen::corrupt(rng, seq)).valid);
}

TEST(Formative, ConstructionsOfRandomAssembliesVerify)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        Assembly a = gen::assembly(rng, 4);
        std::vector<LinearAssembly> seq;
        for (const auto& s : formative_construction(a))
            seq.push_back(linearize(s));
        auto rep = verify_formative(seq);
        EXPECT_TRUE(rep.valid) << to_text(linearize(a)) << rep.reason;
        EXPECT_EQ(rep.steps.back().sort, classify(a));
    }
}
