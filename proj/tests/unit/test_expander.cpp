#include <gtest/gtest.h>

#include <random>

#include <bourbaki/classify.hpp>
#include <bourbaki/counts.hpp>
#include <bourbaki/expander.hpp>
#include <bourbaki/expression.hpp>
#include <bourbaki/linear.hpp>

#include "generators.hpp"

using namespace bourbaki;

namespace {

LinearAssembly expanded(const std::string& text) { return linearize(expand(parse_expression(text))); }

} // namespace

TEST(Parse, SubsetKeyword)
{
    Expression e = parse_expression("(subset x y)");
    EXPECT_EQ(e.kind, ExprKind::subset);
    ASSERT_EQ(e.args.size(), 2u);
    EXPECT_EQ(e.args[0].name, "x");
    EXPECT_EQ(e.args[1].name, "y");
}

TEST(Parse, PairBuilderBody)
{
    Expression e = parse_expression("(forall z (iff (in z t) (or (eq z x) (eq z y))))");
    Expression want = ex::forall("z", ex::iff(ex::in(ex::letter("z"), ex::letter("t")),
                                              ex::or_(ex::eq(ex::letter("z"), ex::letter("x")),
                                                      ex::eq(ex::letter("z"), ex::letter("y")))));
    EXPECT_EQ(e, want);
}

TEST(Parse, Numeral)
{
    Expression e = parse_expression("(numeral 2)");
    EXPECT_EQ(e.kind, ExprKind::numeral);
    EXPECT_EQ(e.number, 2);
    EXPECT_EQ(parse_expression("(numeral 123456789012345678901234567890)").number,
              Natural("123456789012345678901234567890"));
}

TEST(Parse, PrintIsIdentityOnCanonicalForm)
{
    for (const char* text :
         {"(subset x y)", "empty", "(numeral 3)", "(enum x y z)", "(subst (in x y) x empty)",
          "(forall z (iff (in z t) (or (eq z x) (eq z y))))", "(setof z (neq z z))", "(couple (singleton a) (succ b))",
          "(coll x (notin x y))", "(exists x (and (implies (in a b) (eq a b)) (iff (in a a) (in b b))))"}) {
        EXPECT_EQ(to_string(parse_expression(text)), text);
    }
    // printing does not check sorts
    EXPECT_EQ(to_string(parse_expression("(not (union a b))")), "(not (union a b))");
}

TEST(Parse, RandomExpressionsRoundTrip)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        Expression e = gen::expression(rng, 4);
        EXPECT_EQ(parse_expression(to_string(e)), e);
    }
}

TEST(Parse, Errors)
{
    auto where = [](const std::string& text) {
        try {
            parse_expression(text);
        } catch (const SyntaxError& e) {
            return std::make_pair(e.line(), e.column());
        }
        ADD_FAILURE() << "accepted " << text;
        return std::make_pair(std::size_t{0}, std::size_t{0});
    };
    EXPECT_THROW(parse_expression("(frobnicate x)"), SyntaxError);
    EXPECT_THROW(parse_expression("(in x)"), SyntaxError);
    EXPECT_THROW(parse_expression("(in x y z)"), SyntaxError);
    EXPECT_THROW(parse_expression("(in x y"), SyntaxError);
    EXPECT_THROW(parse_expression("(in x y) z"), SyntaxError);
    EXPECT_THROW(parse_expression("(in _z0 y)"), SyntaxError);
    EXPECT_THROW(parse_expression("(enum)"), SyntaxError);
    EXPECT_THROW(parse_expression(""), SyntaxError);
    EXPECT_EQ(where("(in x\n  (frob y))").first, 2u);
    EXPECT_EQ(where("(in x\n  (frob y))").second, 4u);
}

TEST(Parse, UnknownAbbreviationIsNamed)
{
    try {
        parse_expression("(powerset x)");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_NE(std::string(e.what()).find("unknown abbreviation"), std::string::npos);
    }
}

TEST(Expand, GoldenCounts)
{
    LinearAssembly e = linearize(expand(ex::empty()));
    EXPECT_EQ(e.size(), 12u);
    EXPECT_EQ(e.links.size(), 3u);

    LinearAssembly s = expanded("(forall z (iff (in z t) (or (eq z x) (eq z y))))");
    EXPECT_EQ(s.size(), 204u);
    EXPECT_EQ(s.links.size(), 36u);

    LinearAssembly p = expanded("(enum x y)");
    EXPECT_EQ(p.size(), 205u);
    EXPECT_EQ(p.links.size(), 50u);
}

TEST(Expand, ConnectiveShapes)
{
    EXPECT_EQ(to_glyphs(expanded("(implies (in a b) (in c d))")), "∨ ¬ ∈ a b ∈ c d");
    EXPECT_EQ(to_glyphs(expanded("(and (in a b) (in c d))")), "¬ ∨ ¬ ∈ a b ¬ ∈ c d");
    EXPECT_EQ(to_glyphs(expanded("(iff (in a b) (in c d))")),
              "¬ ∨ ¬ ∨ ¬ ∈ a b ∈ c d ¬ ∨ ¬ ∈ c d ∈ a b");
    EXPECT_EQ(to_glyphs(expanded("(notin a b)")), "¬ ∈ a b");
    EXPECT_EQ(to_glyphs(expanded("(neq a b)")), "¬ = a b");
    // ∃x R = (τ_x R | x) R
    EXPECT_EQ(to_glyphs(expanded("(exists x (in x X))")), "∈ τ ∈ □ X X");
    // ∀x R = ¬¬(τ_x ¬R | x) R
    EXPECT_EQ(to_glyphs(expanded("(forall x (in x X))")), "¬ ¬ ∈ τ ¬ ∈ □ X X");
    EXPECT_EQ(to_glyphs(expanded("(tau x (in x X))")), "τ ∈ □ X");
}

TEST(Expand, SubsetShowsTheWitnessTwice)
{
    LinearAssembly l = expanded("(subset x y)");
    EXPECT_EQ(to_glyphs(l), "¬ ¬ ∨ ¬ ∈ τ ¬ ∨ ¬ ∈ □ x ∈ □ y x ∈ τ ¬ ∨ ¬ ∈ □ x ∈ □ y y");
    std::string g = to_glyphs(l);
    std::string witness = "τ ¬ ∨ ¬ ∈ □ x ∈ □ y";
    auto first = g.find(witness);
    ASSERT_NE(first, std::string::npos);
    EXPECT_NE(g.find(witness, first + 1), std::string::npos);
}

TEST(Expand, SingletonListsItsElementTwice)
{
    EXPECT_EQ(expand(parse_expression("(singleton a)")), expand(parse_expression("(enum a a)")));
    EXPECT_EQ(expand(parse_expression("(couple a b)")),
              expand(parse_expression("(enum (singleton a) (enum a b))")));
    EXPECT_EQ(expand(parse_expression("(succ a)")), expand(parse_expression("(union a (singleton a))")));
}

TEST(Expand, ThreeElementEnumerationIsARightChain)
{
    Expression three = parse_expression("(enum a b c)");
    // the builder letter is bound, so its name does not matter
    Expression builder = parse_expression("(setof w (or (eq w a) (or (eq w b) (eq w c))))");
    EXPECT_EQ(expand(three), expand(builder));
    // counted by hand: setof body over an ∨-chain of three equalities
    LinearAssembly l = linearize(expand(three));
    EXPECT_TRUE(is_balanced(l));
    EXPECT_EQ(classify(l), Classification::term);
}

TEST(Expand, NumeralsUseEnumeration)
{
    EXPECT_EQ(numeral_expr(0), ex::empty());
    EXPECT_EQ(numeral_expr(2), ex::enumeration({ex::numeral(0), ex::numeral(1)}));
    EXPECT_EQ(numeral_expr(3), ex::enumeration({ex::numeral(0), ex::numeral(1), ex::numeral(2)}));
    EXPECT_EQ(expand(ex::numeral(2)), expand(parse_expression("(enum empty (numeral 1))")));
    EXPECT_EQ(expand(ex::numeral(1)), expand(parse_expression("(singleton empty)")));
}

TEST(Expand, ReservedLettersAreRejected)
{
    Expression bad = ex::in(ex::letter("_z0"), ex::letter("y"));
    EXPECT_THROW(expand(bad), ExpansionError);
    EXPECT_THROW(count_symbolic(bad), ExpansionError);
}

TEST(Expand, SortErrors)
{
    EXPECT_THROW(expand(parse_expression("(not x)")), ExpansionError);
    EXPECT_THROW(expand(parse_expression("(in (in a b) c)")), ExpansionError);
    EXPECT_THROW(sort_of(parse_expression("(forall x y)")), ExpansionError);
}

TEST(Expand, ClassificationMatchesSort)
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 300; ++i) {
        Expression e = gen::expression(rng);
        Classification want = sort_of(e) == Sort::term ? Classification::term : Classification::relation;
        EXPECT_EQ(classify(expand(e)), want) << to_string(e);
    }
}

TEST(Expand, SubstitutionCompatible)
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 300; ++i) {
        Expression e = gen::expression(rng);
        Expression t = gen::term_expr(rng, 2);
        std::string x = gen::some_letter(rng);
        EXPECT_EQ(expand(ex::subst(e, x, t)), substitute(expand(e), x, expand(t))) << to_string(e);
    }
}

TEST(Expand, Deterministic)
{
    std::mt19937_64 rng(34);
    for (int i = 0; i < 50; ++i) {
        Expression e = gen::expression(rng);
        EXPECT_EQ(linearize(expand(e)), linearize(expand(e)));
    }
}
