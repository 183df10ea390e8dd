#ifndef SLIDEWIN_OPCOUNT_HPP
#define SLIDEWIN_OPCOUNT_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slidewin {

enum class two_stacks_variant { combined_insert_evict, insert_evict, evict_insert, variant3, variant4 };

inline constexpr two_stacks_variant all_two_stacks_variants[] = {
    two_stacks_variant::combined_insert_evict, two_stacks_variant::insert_evict,
    two_stacks_variant::evict_insert, two_stacks_variant::variant3, two_stacks_variant::variant4};

inline std::string_view to_string(two_stacks_variant v)
{
    switch (v) {
    case two_stacks_variant::combined_insert_evict: return "cie";
    case two_stacks_variant::insert_evict: return "ie";
    case two_stacks_variant::evict_insert: return "ei";
    case two_stacks_variant::variant3: return "v3";
    case two_stacks_variant::variant4: return "v4";
    }
    return "?";
}

inline two_stacks_variant parse_two_stacks_variant(std::string_view s)
{
    for (auto v : all_two_stacks_variants)
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown two stacks variant: " + std::string(s));
}

using increment_trace = std::vector<std::uint64_t>;

// Shared invocation counter.  mark() closes one output.
struct op_counter {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> marks;

    void mark() { marks.push_back(total); }
    void reset() { total = 0; marks.clear(); }

    increment_trace increments() const
    {
        increment_trace out;
        out.reserve(marks.size());
        std::uint64_t prev = 0;
        for (auto m : marks) {
            out.push_back(m - prev);
            prev = m;
        }
        return out;
    }

    std::uint64_t max_increment() const
    {
        std::uint64_t mx = 0;
        for (auto d : increments()) mx = d > mx ? d : mx;
        return mx;
    }
};

template <class Op>
struct instrumented {
    Op inner;
    op_counter* counter;

    template <class X, class Y>
    auto operator()(X&& x, Y&& y) const
    {
        ++counter->total;
        return inner(std::forward<X>(x), std::forward<Y>(y));
    }
    void mark() const { counter->mark(); }
};

template <class Op>
instrumented<Op> instrument(Op op, op_counter& c) { return {std::move(op), &c}; }

// algorithms call this after each emitted output
template <class Op>
void mark_output(const Op& op)
{
    if constexpr (requires { op.mark(); }) op.mark();
}

// --- closed forms ----------------------------------------------------------------

namespace detail {
inline std::int64_t b2i(bool b) { return b ? 1 : 0; }
}

inline std::uint64_t count_two_stacks(two_stacks_variant v, std::uint64_t n, std::uint64_t N)
{
    using detail::b2i;
    if (n == 0) throw std::invalid_argument("count_two_stacks: n must be >= 1");
    if (N == 0) return 0;
    if (n == 1) return v == two_stacks_variant::insert_evict ? N / 2 : 0;
    if (N <= n) return N - 1;
    std::int64_t nn = std::int64_t(n), c = 0;
    switch (v) {
    case two_stacks_variant::combined_insert_evict:
    case two_stacks_variant::insert_evict: {
        std::int64_t k = std::int64_t(N / (n + 1)), r = std::int64_t(N % (n + 1));
        std::int64_t per = v == two_stacks_variant::insert_evict ? 3 * nn - 2 : 3 * nn - 3;
        c = k * per - nn + 1 + b2i(r > 0) * (2 * r - 1 - b2i(r == nn));
        break;
    }
    case two_stacks_variant::evict_insert: {
        std::int64_t k = std::int64_t(N / n), r = std::int64_t(N % n);
        c = k * (3 * nn - 4) - 2 * nn + 3 + b2i(r > 0) * (nn + 2 * r - 3);
        break;
    }
    case two_stacks_variant::variant3: {
        std::int64_t k = std::int64_t(N / n), r = std::int64_t(N % n);
        c = k * (3 * nn - 4) - 2 * nn + 3 + b2i(r > 0) * (nn + 2 * r - 4 + b2i(r == 1));
        break;
    }
    case two_stacks_variant::variant4: {
        std::int64_t k = std::int64_t((N - 1) / (n - 1)), r = std::int64_t((N - 1) % (n - 1));
        c = k * (3 * nn - 5) - 2 * nn + 4 + b2i(r > 0) * (nn + 2 * r - 3);
        break;
    }
    }
    return std::uint64_t(c);
}

inline std::uint64_t count_dew(int variant, std::uint64_t n, std::uint64_t N)
{
    using detail::b2i;
    if (variant != 1 && variant != 2) throw std::invalid_argument("count_dew: variant must be 1 or 2");
    if (n == 0) throw std::invalid_argument("count_dew: n must be >= 1");
    if (N == 0 || n == 1 || N == 1) return 0;
    std::int64_t nn = std::int64_t(n), NN = std::int64_t(N);
    std::int64_t ceil_half = (nn + 1) / 2, floor_half = nn / 2;
    if (n == 2 || NN <= ceil_half) return N - 1;
    if (NN <= nn) {
        if (variant == 1) return std::uint64_t(3 * NN - nn - 3);
        return std::uint64_t(3 * NN - nn - 2 - b2i(NN == nn));
    }
    std::int64_t k = NN / nn, r = NN % nn;
    std::int64_t adj;
    if (variant == 1)
        adj = 2 * b2i(r > 0) + b2i(r > floor_half) + b2i(r > ceil_half);
    else
        adj = b2i(r > 0) + b2i(r > (nn - 1) / 2) + b2i(r > nn / 2);
    return std::uint64_t(3 * NN - 4 * k - nn + 1 - adj);
}

// --- increment sequences -----------------------------------------------------

namespace detail {
inline void append(increment_trace& t, std::uint64_t value, std::int64_t times)
{
    for (std::int64_t i = 0; i < times; ++i) t.push_back(value);
}
}

inline increment_trace two_stacks_increments(two_stacks_variant v, std::uint64_t n, std::uint64_t N)
{
    using detail::append;
    increment_trace t;
    if (n == 0) throw std::invalid_argument("two_stacks_increments: n must be >= 1");
    if (n == 1) {
        for (std::uint64_t i = 1; i <= N; ++i)
            t.push_back(v == two_stacks_variant::insert_evict && i % 2 == 0 ? 1 : 0);
        return t;
    }
    std::int64_t nn = std::int64_t(n);
    t.push_back(0);
    append(t, 1, nn - 1);
    while (t.size() < N) {
        switch (v) {
        case two_stacks_variant::combined_insert_evict:
        case two_stacks_variant::insert_evict:
            t.push_back(v == two_stacks_variant::insert_evict ? n : n - 1);
            t.push_back(1);
            append(t, 2, nn - 2);
            t.push_back(1);
            break;
        case two_stacks_variant::evict_insert:
            t.push_back(n - 1);
            append(t, 2, nn - 2);
            t.push_back(1);
            break;
        case two_stacks_variant::variant3:
            t.push_back(n - 1);
            t.push_back(1);
            append(t, 2, nn - 2);
            break;
        case two_stacks_variant::variant4:
            t.push_back(n - 1);
            append(t, 2, nn - 2);
            break;
        }
    }
    t.resize(N);
    return t;
}

inline increment_trace dew_increments(int variant, std::uint64_t n, std::uint64_t N)
{
    using detail::append;
    if (variant != 1 && variant != 2) throw std::invalid_argument("dew_increments: variant must be 1 or 2");
    if (n == 0) throw std::invalid_argument("dew_increments: n must be >= 1");
    increment_trace t;
    if (n == 1) return increment_trace(N, 0);
    if (n == 2) {
        t.assign(N, 1);
        if (N > 0) t[0] = 0;
        return t;
    }
    std::int64_t nn = std::int64_t(n), ch = (nn + 1) / 2, fh = nn / 2;
    bool even = n % 2 == 0;
    t.push_back(0);
    if (variant == 1) {
        append(t, 1, even ? nn / 2 - 1 : ch - 1);
        bool phase = false;
        while (t.size() < N) {
            if (even) {
                t.push_back(1);
                append(t, 3, nn / 2 - 1);
            } else if (!phase) {
                t.push_back(2);
                append(t, 3, ch - 2);
            } else {
                t.push_back(1);
                append(t, 3, ch - 2);
                t.push_back(2);
            }
            phase = !phase;
        }
    } else {
        append(t, 1, even ? nn / 2 - 1 : ch - 2);
        bool phase = false;
        while (t.size() < N) {
            if (even) {
                t.push_back(2);
                append(t, 3, nn / 2 - 2);
                t.push_back(2);
            } else if (!phase) {
                t.push_back(1);
                append(t, 3, ch - 2);
                t.push_back(2);
            } else {
                t.push_back(2);
                append(t, 3, fh - 1);
            }
            phase = !phase;
        }
    }
    t.resize(N);
    return t;
}

struct length_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// every prefix sum of a is <= the matching prefix sum of b
inline bool cumulatively_dominates(const increment_trace& a, const increment_trace& b)
{
    if (a.size() != b.size()) throw length_mismatch("cumulatively_dominates: lengths differ");
    std::uint64_t sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

inline std::uint64_t sum(const increment_trace& t)
{
    std::uint64_t s = 0;
    for (auto x : t) s += x;
    return s;
}

inline void write_csv(std::ostream& os, const increment_trace& t)
{
    for (auto x : t) os << x << '\n';
}

} // namespace slidewin

#endif
