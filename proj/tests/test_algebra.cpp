#include <gtest/gtest.h>

#include "support.hpp"

namespace sw = slidewin;

namespace {

enum { a, b, c };

// tables from the selection operator and nonassociative examples
const sw::table_op transitive_nonassoc{{a, b, a}, {a, b, b}, {c, c, c}};
const sw::table_op antisym_transitive_nonassoc{{a, b, a}, {b, b, b}, {c, c, c}};
const sw::table_op intransitive{{a, b, a}, {b, b, c}, {a, c, c}};
const sw::table_op not_selective{{b, c, a}, {c, b, a}, {a, c, c}};

sw::relation less_equal(std::size_t n)
{
    sw::relation r(n);
    for (int x = 0; x < int(n); ++x)
        for (int y = x; y < int(n); ++y) r.set(x, y);
    return r;
}

std::string single_row(const sw::finite_function& f)
{
    std::string s;
    for (int v : f) s += char('a' + v);
    return s;
}

} // namespace

TEST(SelectionOp, LessEqualGivesMax)
{
    auto op = sw::selection_op_from_relation(less_equal(3));
    EXPECT_EQ(op(1, 2), 2);
    EXPECT_EQ(op(2, 1), 2);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) EXPECT_EQ(op(x, y), std::max(x, y));
}

TEST(SelectionOp, EqualityGivesFirst)
{
    sw::relation eq(3, {{a, a}, {b, b}, {c, c}});
    auto op = sw::selection_op_from_relation(eq);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) EXPECT_EQ(op(x, y), x);
}

TEST(SelectionOp, FullRelationGivesSecond)
{
    sw::relation full(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) full.set(x, y);
    auto op = sw::selection_op_from_relation(full);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) EXPECT_EQ(op(x, y), y);
}

TEST(SelectionOp, TablesMatchTheirRelations)
{
    sw::relation r6(3, {{a, a}, {a, b}, {b, a}, {b, b}, {c, c}});
    sw::relation r7(3, {{a, a}, {a, b}, {b, b}, {c, c}});
    sw::relation r8(3, {{a, a}, {a, b}, {b, b}, {b, c}, {c, a}, {c, c}});
    EXPECT_EQ(sw::selection_op_from_relation(r6), transitive_nonassoc);
    EXPECT_EQ(sw::selection_op_from_relation(r7), antisym_transitive_nonassoc);
    EXPECT_EQ(sw::selection_op_from_relation(r8), intransitive);
}

TEST(RelationFromOp, MaxGivesLessEqual)
{
    auto mx = [](int x, int y) { return std::max(x, y); };
    EXPECT_EQ(sw::relation_from_op(mx, 3), less_equal(3));
}

TEST(RelationFromOp, Coalesce)
{
    // a is the undefined value
    auto coalesce = [](int x, int y) { return x == a ? y : x; };
    auto r = sw::relation_from_op(coalesce, 3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) EXPECT_EQ(r(x, y), x == a || y == x) << x << "," << y;
    auto p = sw::check_relation_properties(r);
    EXPECT_TRUE(p.reflexive);
    EXPECT_TRUE(p.antisymmetric);
    EXPECT_FALSE(p.connected);
    EXPECT_TRUE(p.transitive);
}

TEST(RelationFromOp, SumIsNotSelective)
{
    auto plus = [](int x, int y) { return x + y; };
    EXPECT_THROW(sw::relation_from_op(plus, 2), sw::not_selective);
    EXPECT_THROW(sw::relation_from_op(not_selective, 3), sw::not_selective);
}

TEST(Associativity, Examples)
{
    auto mx = [](int x, int y) { return std::max(x, y); };
    EXPECT_TRUE(sw::check_associative(mx, 3));
    EXPECT_FALSE(sw::check_associative(intransitive, 3));
    EXPECT_EQ(intransitive(a, intransitive(b, c)), a);
    EXPECT_EQ(intransitive(intransitive(a, b), c), c);
    EXPECT_FALSE(sw::check_associative(not_selective, 3));
    EXPECT_EQ(not_selective(a, not_selective(b, c)), b);
    EXPECT_EQ(not_selective(not_selective(a, b), c), c);
    EXPECT_FALSE(sw::check_associative(transitive_nonassoc, 3));
    EXPECT_EQ(transitive_nonassoc(a, transitive_nonassoc(c, b)), a);
    EXPECT_EQ(transitive_nonassoc(transitive_nonassoc(a, c), b), b);
}

TEST(RelationProperties, Examples)
{
    auto le = sw::check_relation_properties(less_equal(3));
    EXPECT_TRUE(le.reflexive && le.connected && le.antisymmetric && le.transitive);

    auto r8 = sw::check_relation_properties(sw::relation_from_op(intransitive, 3));
    EXPECT_TRUE(r8.reflexive);
    EXPECT_TRUE(r8.antisymmetric);
    EXPECT_TRUE(r8.connected);
    EXPECT_FALSE(r8.transitive);

    auto eq = sw::check_relation_properties(sw::relation(3, {{a, a}, {b, b}, {c, c}}));
    EXPECT_TRUE(eq.reflexive && eq.antisymmetric && eq.transitive);
    EXPECT_FALSE(eq.connected);
}

TEST(Relations, ExhaustiveThreeElementFacts)
{
    auto rels = sw::all_reflexive_relations(3);
    ASSERT_EQ(rels.size(), 64u);
    int intransitive_count = 0;
    for (auto& r : rels) {
        auto op = sw::selection_op_from_relation(r);
        auto p = sw::check_relation_properties(r);
        intransitive_count += !p.transitive;
        for (int x = 0; x < 3; ++x) EXPECT_EQ(op(x, x), x);
        EXPECT_EQ(sw::relation_from_op(op, 3), r);
        EXPECT_EQ(sw::selection_op_from_relation(sw::relation_from_op(op, 3)), op);
        if (p.connected) {
            EXPECT_EQ(sw::check_associative(op, 3), p.transitive);
        }
    }
    EXPECT_EQ(intransitive_count, 35);
}

TEST(Relations, CarrierLimits)
{
    EXPECT_THROW(sw::relation(0), std::invalid_argument);
    EXPECT_THROW(sw::relation(9), std::invalid_argument);
    sw::relation r(2);
    EXPECT_THROW(r.set(2, 0), std::out_of_range);
    EXPECT_THROW(sw::table_op(2, {0, 1, 2, 0}), std::invalid_argument);
}

TEST(Closure, TransitiveNonassociativeHasFive)
{
    auto cl = sw::left_action_closure(transitive_nonassoc, 3);
    std::set<std::string> rows;
    for (auto& f : cl) rows.insert(single_row(f));
    EXPECT_EQ(rows, (std::set<std::string>{"aba", "abb", "ccc", "aaa", "bbb"}));
}

TEST(Closure, AntisymmetricExampleHasFour)
{
    auto cl = sw::left_action_closure(antisym_transitive_nonassoc, 3);
    std::set<std::string> rows;
    for (auto& f : cl) rows.insert(single_row(f));
    EXPECT_EQ(rows, (std::set<std::string>{"aba", "bbb", "ccc", "aaa"}));
}

TEST(Closure, IntransitiveHasTwentyOne)
{
    auto cl = sw::left_action_closure(intransitive, 3);
    EXPECT_EQ(cl.size(), 21u);
    // exactly the non-invertible functions
    for (auto& f : cl) EXPECT_LT(std::set<int>(f.begin(), f.end()).size(), 3u);
}

TEST(Closure, NonSelectiveHasAllTwentySeven)
{
    EXPECT_EQ(sw::left_action_closure(not_selective, 3).size(), 27u);
}

TEST(Closure, AssociativeOpIsClosed)
{
    auto mx = [](int x, int y) { return std::max(x, y); };
    EXPECT_EQ(sw::left_action_closure(mx, 3).size(), 3u);
}

TEST(Semidirect, ZeroPaddedSum)
{
    using P = std::vector<int>;
    auto add = [](const P& u, const P& v) {
        P r(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
        return r;
    };
    auto shift = [](std::uint64_t i, const P& v) {
        P r(v.size(), 0);
        for (std::size_t k = i; k < v.size(); ++k) r[k] = v[k - i];
        return r;
    };
    auto sd = sw::semidirect_op(add, shift);
    sw::semidirect_element<P> x{1, {1, 2, 3}};
    auto y = sd(x, x);
    EXPECT_EQ(y.index, 2u);
    EXPECT_EQ(y.payload, (P{1, 3, 5}));

    sw::semidirect_element<P> p{2, {1, 1, 1, 1}}, q{3, {1, 2, 3, 4}};
    auto z = sd(p, q);
    EXPECT_EQ(z.index, 5u);
    EXPECT_EQ(z.payload, (P{1, 1, 2, 3}));
}

TEST(Opposite, SwapsArguments)
{
    auto op = sw::make_opposite(testing_support::g::op_concat{});
    EXPECT_EQ(op(std::string("ab"), std::string("cd")), "cdab");
}

TEST(Rep, HelpersOnLinearRecurrence)
{
    testing_support::g::rep_linear_recurrence rep;
    auto eq = [](double x, double y) { return sw::approx_equal(x, y); };
    testing_support::g::lin l1{2, 3}, l2{4, 5}, l3{-1, 0.5};
    EXPECT_TRUE(sw::lift_faithful(rep, l1, 7.0, eq));
    EXPECT_TRUE(sw::semi_associative(rep, l1, l2, 7.0, eq));
    EXPECT_TRUE(sw::bracketing_independent(rep, l1, l2, l3, 7.0, eq));
}
