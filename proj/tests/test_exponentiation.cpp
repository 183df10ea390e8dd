#include <gtest/gtest.h>

#include <array>

#include "support.hpp"

namespace sw = slidewin;
using namespace testing_support;
using u64 = std::uint64_t;

namespace {

// 2x2 matrices mod a prime: associative and noncommutative
using m22 = std::array<u64, 4>;
constexpr u64 prime = 1000003;

m22 mat_mul(const m22& a, const m22& b)
{
    return {(a[0] * b[0] + a[1] * b[2]) % prime, (a[0] * b[1] + a[1] * b[3]) % prime,
            (a[2] * b[0] + a[3] * b[2]) % prime, (a[2] * b[1] + a[3] * b[3]) % prime};
}

m22 naive_power(const m22& x, u64 n)
{
    m22 r = x;
    for (u64 i = 1; i < n; ++i) r = mat_mul(r, x);
    return r;
}

bool contains_all(const std::vector<u64>& v, std::initializer_list<u64> want)
{
    for (u64 w : want)
        if (std::find(v.begin(), v.end(), w) == v.end()) return false;
    return true;
}

auto concat = g::op_concat{};

} // namespace

TEST(Helpers, Digits)
{
    EXPECT_EQ(sw::digits_base_2_k(2630, 3), (std::vector<u64>{6, 0, 1, 5}));
    EXPECT_TRUE(sw::digits_base_2_k(0, 3).empty());
    EXPECT_EQ(sw::digits_base_2_k(7, 1), (std::vector<u64>{1, 1, 1}));
}

TEST(Helpers, ExtractPowersOfTwo)
{
    EXPECT_EQ(sw::extract_powers_of_two(12), (std::pair<unsigned, u64>{2, 3}));
    EXPECT_EQ(sw::extract_powers_of_two(0), (std::pair<unsigned, u64>{0, 0}));
    EXPECT_EQ(sw::extract_powers_of_two(5), (std::pair<unsigned, u64>{0, 5}));
}

TEST(Helpers, CeilLog2)
{
    EXPECT_EQ(sw::ceil_log2(1), 0u);
    EXPECT_EQ(sw::ceil_log2(2), 1u);
    EXPECT_EQ(sw::ceil_log2(5), 3u);
    EXPECT_EQ(sw::ceil_log2(8), 3u);
    EXPECT_EQ(sw::ceil_log2(9), 4u);
}

TEST(Thurber, Windows)
{
    using w = sw::thurber_window;
    EXPECT_EQ(sw::thurber_windows(2630, 3), (std::vector<w>{{3, 5, 2}, {1, 1, 3}, {2, 3, 1}}));
    EXPECT_EQ(sw::thurber_windows(1, 4), (std::vector<w>{{1, 1, 0}}));
    EXPECT_EQ(sw::thurber_windows(8, 2), (std::vector<w>{{1, 1, 3}}));
}

TEST(Thurber, WindowsReassemble)
{
    for (u64 n = 1; n <= 5000; ++n)
        for (unsigned k = 1; k <= 6; ++k) {
            u64 r = 0;
            for (auto& win : sw::thurber_windows(n, k)) {
                ASSERT_EQ(win.value % 2, 1u);
                ASSERT_LE(win.width, k);
                r = (((r << win.width) | win.value) << win.gap);
            }
            ASSERT_EQ(r, n) << "k=" << k;
        }
}

TEST(Counts, PublishedExamples)
{
    EXPECT_EQ(sw::binary_count(15), 6u);
    EXPECT_EQ(sw::binary_count(63), 10u);
    EXPECT_EQ(sw::brauer_count(63, 2), 8u);
    EXPECT_EQ(sw::thurber_count(63, 2), 8u);
    const u64 big = (u64(1) << 20) - 1;
    EXPECT_EQ(sw::binary_count(big), 38u);
    EXPECT_EQ(sw::brauer_count(big, 3), 28u);
    EXPECT_EQ(sw::thurber_count(big, 3), 27u);
    EXPECT_EQ(sw::brauer_count(15, 1), sw::binary_count(15));
    EXPECT_EQ(sw::brauer_count(1, 3), 0u);
    for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(sw::thurber_count(1, k), 0u);
}

TEST(Counts, MatchInstrumentedRuns)
{
    for (u64 n = 1; n <= 4096; ++n) {
        sw::op_counter c;
        auto op = sw::instrument(g::op_sum{}, c);
        ASSERT_EQ(sw::binary_exponentiate(op, 1L, n), long(n));
        ASSERT_EQ(c.total, sw::binary_count(n)) << n;
        for (unsigned k = 1; k <= 5; ++k) {
            c.reset();
            ASSERT_EQ(sw::brauer_exponentiate(op, 1L, n, k), long(n));
            ASSERT_EQ(c.total, sw::brauer_count(n, k)) << n << " k=" << k;
            c.reset();
            ASSERT_EQ(sw::thurber_exponentiate(op, 1L, n, k), long(n));
            ASSERT_EQ(c.total, sw::thurber_count(n, k)) << n << " k=" << k;
        }
    }
}

TEST(Counts, BinaryAtMostTwiceLog)
{
    for (u64 n = 2; n <= 100000; ++n) {
        u64 fl = sw::bit_length(n) - 1;
        ASSERT_LE(sw::binary_count(n), 2 * fl) << n;
        ASSERT_LE(sw::brauer_count(n, sw::brauer_best_k(n)), sw::binary_count(n)) << n;
        ASSERT_LE(sw::thurber_count(n, sw::thurber_best_k(n)), sw::binary_count(n)) << n;
    }
}

TEST(BestK, FirstOccurrences)
{
    EXPECT_EQ(sw::thurber_best_k(15), 2u);
    for (u64 n = 1; n < 15; ++n) EXPECT_EQ(sw::thurber_best_k(n), 1u) << n;
    EXPECT_EQ(sw::brauer_best_k(30), 3u);
    for (u64 n = 1; n < 30; ++n) EXPECT_LT(sw::brauer_best_k(n), 3u) << n;
    EXPECT_EQ(sw::thurber_best_k(151), 4u);
    for (u64 n = 1; n < 151; ++n) EXPECT_LT(sw::thurber_best_k(n), 4u) << n;
}

TEST(BestK, IsSmallestMinimizer)
{
    for (u64 n = 1; n <= 3000; ++n) {
        unsigned kb = sw::brauer_best_k(n);
        for (unsigned k = 1; k <= sw::bit_length(n); ++k) {
            if (k < kb) ASSERT_GT(sw::brauer_count(n, k), sw::brauer_count(n, kb)) << n;
            else ASSERT_GE(sw::brauer_count(n, k), sw::brauer_count(n, kb)) << n;
        }
        unsigned kt = sw::thurber_best_k(n);
        for (unsigned k = 1; k <= sw::bit_length(n); ++k) {
            if (k < kt) ASSERT_GT(sw::thurber_count(n, k), sw::thurber_count(n, kt)) << n;
            else ASSERT_GE(sw::thurber_count(n, k), sw::thurber_count(n, kt)) << n;
        }
    }
}

TEST(Parallel, Depth)
{
    EXPECT_EQ(sw::parallel_binary_schedule(1).depth(), 0u);
    EXPECT_EQ(sw::parallel_binary_schedule(8).depth(), 3u);
    EXPECT_EQ(sw::parallel_binary_schedule(5).depth(), 3u);
    auto s6 = sw::parallel_binary_schedule(6);
    EXPECT_EQ(s6.depth(), 3u);
    EXPECT_EQ(s6.mults(), sw::binary_count(6));
    auto s7 = sw::parallel_binary_schedule(7);
    bool has_pair = false;
    for (auto& step : s7.steps) has_pair |= step.size() == 2;
    EXPECT_TRUE(has_pair);
    for (u64 n = 1; n <= 2048; ++n) {
        auto s = sw::parallel_binary_schedule(n);
        ASSERT_TRUE(s.well_formed()) << n;
        ASSERT_EQ(s.depth(), sw::ceil_log2(n)) << n;
        ASSERT_EQ(s.mults(), sw::binary_count(n)) << n;
    }
}

TEST(Parallel, ValueMatchesBinary)
{
    std::string x = "ab";
    for (u64 n = 1; n <= 40; ++n)
        for (bool flip : {false, true}) {
            auto [v, s] = sw::parallel_binary_exponentiate(concat, x, n, flip);
            std::string want;
            for (u64 i = 0; i < n; ++i) want += x;
            ASSERT_EQ(v, want);
            ASSERT_EQ(sw::run_schedule(concat, x, s), want);
        }
}

TEST(Chains, RecordedBinaryChain)
{
    auto c = sw::record_chain(sw::chain_method::binary, 15);
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(c.target(), 15u);
    EXPECT_EQ(c.length(), 6u);
    EXPECT_TRUE(contains_all(c.values, {1, 2, 3, 4, 7, 8, 15}));
    auto c63 = sw::record_chain(sw::chain_method::binary, 63);
    EXPECT_EQ(c63.values, (std::vector<u64>{1, 2, 3, 4, 7, 8, 15, 16, 31, 32, 63}));
}

TEST(Chains, RecordedBrauerAndThurber)
{
    std::vector<u64> want{1, 2, 3, 6, 12, 15, 30, 60, 63};
    EXPECT_EQ(sw::record_chain(sw::chain_method::brauer, 63, 2).values, want);
    EXPECT_EQ(sw::record_chain(sw::chain_method::thurber, 63, 2).values, want);
    for (auto m : {sw::chain_method::binary, sw::chain_method::brauer, sw::chain_method::thurber})
        EXPECT_EQ(sw::record_chain(m, 1, 2).length(), 0u);
}

TEST(Chains, Execute)
{
    sw::formal_addition_chain three;
    three.values = {1, 2, 3};
    three.index_pairs = {{0, 0}, {1, 0}};
    EXPECT_EQ(sw::execute_chain(g::op_sum{}, 1, three), 3);

    sw::formal_addition_chain c15;
    c15.values = {1, 2, 3, 6, 12, 15};
    c15.index_pairs = {{0, 0}, {1, 0}, {2, 2}, {3, 3}, {4, 2}};
    EXPECT_EQ(sw::execute_chain([](long a, long b) { return a * b; }, 2L, c15), 32768L);

    sw::formal_addition_chain bad = three;
    bad.values[2] = 4;
    EXPECT_THROW(sw::execute_chain(g::op_sum{}, 1, bad), sw::invalid_chain);
}

TEST(Chains, ExecuteReproducesMethods)
{
    for (u64 n = 1; n <= 64; ++n)
        for (unsigned k = 1; k <= 3; ++k) {
            std::string want = sw::brauer_exponentiate(concat, std::string("x"), n, k);
            ASSERT_EQ(sw::execute_chain(concat, std::string("x"), sw::record_chain(sw::chain_method::brauer, n, k)),
                      want);
            ASSERT_EQ(sw::execute_chain(concat, std::string("x"), sw::record_chain(sw::chain_method::thurber, n, k)),
                      want);
            ASSERT_EQ(sw::execute_chain(concat, std::string("x"), sw::record_chain(sw::chain_method::binary, n)),
                      want);
        }
}

TEST(Chains, OptimalSearch)
{
    EXPECT_EQ(sw::optimal_chain_search(1).length(), 0u);
    EXPECT_EQ(sw::optimal_chain_search(15).length(), 5u);
    EXPECT_EQ(sw::optimal_chain_search(23).length(), 6u);
    EXPECT_EQ(sw::optimal_chain_search(39).length(), 7u);
    EXPECT_EQ(sw::brauer_count(23, sw::brauer_best_k(23)), 7u);
    EXPECT_TRUE(sw::optimal_chain_search(100).valid());
    EXPECT_THROW(sw::optimal_chain_search(129), std::invalid_argument);
    for (u64 n = 1; n <= 64; ++n) {
        auto c = sw::optimal_chain_search(n);
        ASSERT_TRUE(c.valid());
        ASSERT_EQ(c.target(), n);
        ASSERT_LE(c.length(), sw::thurber_count(n, sw::thurber_best_k(n)));
    }
}

TEST(Methods, MatrixPowersAgree)
{
    m22 x{2, 3, 5, 7};
    for (u64 n = 1; n <= 200; ++n) {
        m22 want = naive_power(x, n);
        for (auto& e : sw::all_exponentiators(5)) ASSERT_EQ(e(mat_mul, x, n), want) << e.name() << " n=" << n;
        for (auto v : {sw::binary_variant::up_left, sw::binary_variant::up_right, sw::binary_variant::down_left,
                       sw::binary_variant::down_right})
            ASSERT_EQ(sw::binary_exponentiate(mat_mul, x, n, v), want) << n;
    }
}

TEST(Methods, FlipIsOpposite)
{
    // a nonassociative op exposes the bracketing
    auto bracket = [](const std::string& a, const std::string& b) { return "(" + a + b + ")"; };
    auto opposite = sw::make_opposite(bracket);
    const std::string x = "x";
    for (u64 n = 1; n <= 40; ++n) {
        EXPECT_EQ(sw::binary_exponentiate(bracket, x, n, true), sw::binary_exponentiate(opposite, x, n, false)) << n;
        EXPECT_EQ(sw::parallel_binary_exponentiate(bracket, x, n, true).first,
                  sw::parallel_binary_exponentiate(opposite, x, n, false).first)
            << n;
        for (unsigned k = 1; k <= 3; ++k) {
            EXPECT_EQ(sw::brauer_exponentiate(bracket, x, n, k, true), sw::brauer_exponentiate(opposite, x, n, k, false))
                << n;
            EXPECT_EQ(sw::thurber_exponentiate(bracket, x, n, k, true),
                      sw::thurber_exponentiate(opposite, x, n, k, false))
                << n;
        }
    }
}

TEST(Methods, ParseAndName)
{
    EXPECT_EQ(sw::parse_exponentiator("thurber", 3).name(), "thurber:3");
    EXPECT_EQ(sw::parse_exponentiator("binary", 1, true).name(), "binary:flip");
    EXPECT_EQ(sw::parse_exponentiator("parallel").name(), "parallel");
    EXPECT_THROW(sw::parse_exponentiator("ternary"), std::invalid_argument);
    EXPECT_EQ(sw::all_exponentiators(4).size(), 22u);
}

TEST(Multi, PowerOfTwoFamily)
{
    sw::op_counter c;
    auto op = sw::instrument(g::op_sum{}, c);
    auto [p, q] = sw::multi_exponentiate_power2_family(op, 1L, 5, 3);
    EXPECT_EQ(p, 5);
    EXPECT_EQ(q, 40);
    EXPECT_EQ(c.total, sw::binary_count(5) + 3);
}

TEST(Multi, ReusesSquarings)
{
    sw::op_counter c;
    auto op = sw::instrument(g::op_sum{}, c);
    sw::multi_exponentiator m;
    EXPECT_EQ(m(op, 1L, {8, 2, 4}), (std::vector<long>{8, 2, 4}));
    EXPECT_EQ(c.total, 3u);
    c.reset();
    EXPECT_EQ(m(op, 1L, {3, 12, 3}), (std::vector<long>{3, 12, 3}));
    EXPECT_EQ(c.total, sw::binary_count(3) + 2);
}
