#ifndef SLIDEWIN_EXPONENTIATION_HPP
#define SLIDEWIN_EXPONENTIATION_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slidewin {

using u64 = std::uint64_t;

inline unsigned bit_length(u64 n) { return n == 0 ? 0 : unsigned(std::bit_width(n)); }

// smallest c with 2^c >= n, n >= 1
inline unsigned ceil_log2(u64 n)
{
    if (n == 0) throw std::invalid_argument("ceil_log2: n must be >= 1");
    return n == 1 ? 0 : unsigned(std::bit_width(n - 1));
}

// smallest j with m * 2^j >= N
inline unsigned ceil_log2_ratio(u64 N, u64 m)
{
    if (m == 0) throw std::invalid_argument("ceil_log2_ratio: m must be >= 1");
    unsigned j = 0;
    while (m < N) {
        m <<= 1;
        ++j;
    }
    return j;
}

namespace detail {
inline void check_exponent(u64 n)
{
    if (n == 0) throw std::invalid_argument("exponent must be >= 1");
}
inline void check_k(unsigned k)
{
    if (k == 0 || k > 63) throw std::invalid_argument("k must be in 1..63");
}
}

// --- binary -------------------------------------------------------------------

// Digits are consumed least significant first.  flip = false gives
// q = op(z, q), flip = true gives q = op(q, z).
template <class T, class Op>
T binary_exponentiate(Op op, const T& x, u64 n, bool flip = false)
{
    detail::check_exponent(n);
    std::optional<T> q;
    T z = x;
    for (;;) {
        if (n & 1) {
            if (!q)
                q = z;
            else
                q = flip ? op(*q, z) : op(z, *q);
        }
        n >>= 1;
        if (n == 0) return *q;
        z = op(z, z);
    }
}

// The four orderings of the fold over z_{p_1}, .., z_{p_k} (p_i increasing):
//   up_left:    q_i = q_{i-1} * z_{p_i}
//   up_right:   q_i = z_{p_i} * q_{i-1}
//   down_left:  q_1 = z_{p_k}, q_i = q_{i-1} * z_{p_{k-i+1}}
//   down_right: q_1 = z_{p_k}, q_i = z_{p_{k-i+1}} * q_{i-1}
enum class binary_variant { up_left, up_right, down_left, down_right };

template <class T, class Op>
T binary_exponentiate(Op op, const T& x, u64 n, binary_variant v)
{
    detail::check_exponent(n);
    if (v == binary_variant::up_left) return binary_exponentiate(op, x, n, true);
    if (v == binary_variant::up_right) return binary_exponentiate(op, x, n, false);
    std::vector<T> zs;
    T z = x;
    for (;;) {
        if (n & 1) zs.push_back(z);
        n >>= 1;
        if (n == 0) break;
        z = op(z, z);
    }
    T q = zs.back();
    for (std::size_t i = zs.size() - 1; i-- > 0;)
        q = v == binary_variant::down_left ? op(q, zs[i]) : op(zs[i], q);
    return q;
}

inline u64 binary_count(u64 n)
{
    detail::check_exponent(n);
    return bit_length(n) - 1 + u64(std::popcount(n)) - 1;
}

// --- parallel binary ----------------------------------------------------------

// Registers hold intermediate powers; register 0 is x.  Every multiplication
// writes a fresh register, and those in one step only read registers written
// in earlier steps.
struct schedule_mult {
    std::size_t dst, lhs, rhs;
};

struct parallel_schedule {
    std::vector<std::vector<schedule_mult>> steps;
    std::size_t registers = 1;
    std::size_t result = 0;

    std::size_t depth() const { return steps.size(); }
    std::size_t mults() const
    {
        std::size_t m = 0;
        for (auto& s : steps) m += s.size();
        return m;
    }
    bool well_formed() const
    {
        std::vector<std::size_t> written(registers, 0);  // step index + 1
        std::size_t step_no = 0;
        for (auto& s : steps) {
            ++step_no;
            for (auto& m : s)
                if (m.lhs >= registers || m.rhs >= registers || (m.lhs != 0 && (written[m.lhs] == 0 || written[m.lhs] >= step_no)) ||
                    (m.rhs != 0 && (written[m.rhs] == 0 || written[m.rhs] >= step_no)))
                    return false;
            for (auto& m : s) {
                if (m.dst == 0 || m.dst >= registers || written[m.dst]) return false;
                written[m.dst] = step_no;
            }
        }
        return result < registers;
    }
};

inline parallel_schedule parallel_binary_schedule(u64 n, bool flip = false)
{
    detail::check_exponent(n);
    parallel_schedule s;
    std::size_t q = 0, z = 0;
    bool first = true;
    auto fresh = [&] { return s.registers++; };
    for (;;) {
        u64 n_next = n >> 1;
        bool odd = n & 1;
        if (!first && odd && n_next != 0) {
            std::size_t q2 = fresh(), z2 = fresh();
            s.steps.push_back({flip ? schedule_mult{q2, q, z} : schedule_mult{q2, z, q}, schedule_mult{z2, z, z}});
            q = q2;
            z = z2;
        } else if (!first && odd) {
            std::size_t q2 = fresh();
            s.steps.push_back({flip ? schedule_mult{q2, q, z} : schedule_mult{q2, z, q}});
            q = q2;
        } else {
            if (odd) {
                q = z;
                first = false;
            }
            if (n_next == 0) {
                s.result = q;
                return s;
            }
            std::size_t z2 = fresh();
            s.steps.push_back({schedule_mult{z2, z, z}});
            z = z2;
        }
        n = n_next;
    }
}

// sequential runner; an external executor may run each step's mults concurrently
template <class T, class Op>
T run_schedule(Op op, const T& x, const parallel_schedule& s)
{
    std::vector<std::optional<T>> reg(s.registers);
    reg[0] = x;
    for (auto& step : s.steps)
        for (auto& m : step) reg[m.dst] = op(*reg[m.lhs], *reg[m.rhs]);
    return *reg[s.result];
}

template <class T, class Op>
std::pair<T, parallel_schedule> parallel_binary_exponentiate(Op op, const T& x, u64 n, bool flip = false)
{
    parallel_schedule s = parallel_binary_schedule(n, flip);
    T v = run_schedule(op, x, s);
    return {std::move(v), std::move(s)};
}

// --- Brauer -------------------------------------------------------------------

// least significant first
inline std::vector<u64> digits_base_2_k(u64 n, unsigned k)
{
    detail::check_k(k);
    u64 mask = (u64(1) << k) - 1;
    std::vector<u64> d;
    while (n > 0) {
        d.push_back(n & mask);
        n >>= k;
    }
    return d;
}

// n = 2^j b with b odd, or (0, 0)
inline std::pair<unsigned, u64> extract_powers_of_two(u64 n)
{
    unsigned j = 0;
    if (n == 0) return {0, 0};
    while ((n & 1) == 0) {
        ++j;
        n >>= 1;
    }
    return {j, n};
}

namespace detail {
template <class T>
struct tracked {
    u64 e;
    T v;
};
}

template <class T, class Op>
T brauer_exponentiate(Op op, const T& x, u64 n, unsigned k, bool flip = false)
{
    detail::check_exponent(n);
    detail::check_k(k);
    using P = detail::tracked<T>;
    auto digits = digits_base_2_k(n, k);
    std::vector<std::pair<unsigned, u64>> split;
    for (u64 d : digits) split.push_back(extract_powers_of_two(d));
    auto eop = [&](const P& a, const P& b) { return P{a.e + b.e, flip ? op(b.v, a.v) : op(a.v, b.v)}; };

    u64 max_b = 0;
    for (auto& [j, b] : split) max_b = std::max(max_b, b);
    u64 n_pre = (max_b + 1) >> 1;
    std::vector<P> pre;
    pre.reserve(n_pre);
    pre.push_back(P{1, x});
    std::optional<P> x_sq;
    if (n_pre > 1) {
        x_sq = P{2, op(x, x)};
        for (u64 i = 1; i < n_pre; ++i) pre.push_back(eop(pre.back(), *x_sq));
    }
    auto square = [&](P z, unsigned j) {
        for (unsigned i = 0; i < j; ++i) z = eop(z, z);
        return z;
    };
    // x^2 is already known, so do not recompute it
    auto square_nd = [&](const P& z, unsigned j) {
        if (n_pre > 1 && z.e == 1 && j > 0) return square(*x_sq, j - 1);
        return square(z, j);
    };

    std::size_t i = split.size();
    auto [j0, b0] = split[i - 1];
    P z = square_nd(pre[b0 >> 1], j0);
    while (--i > 0) {
        auto [j, b] = split[i - 1];
        if (b == 0) {
            z = square_nd(z, k);
        } else {
            u64 exponent = b + z.e * (u64(1) << (k - j));
            if (exponent <= max_b) {
                z = pre[exponent >> 1];
            } else {
                z = square_nd(z, k - j);
                z = eop(z, pre[b >> 1]);
            }
            z = square(z, j);
        }
    }
    return z.v;
}

inline u64 brauer_count(u64 n, unsigned k)
{
    detail::check_exponent(n);
    detail::check_k(k);
    auto digits = digits_base_2_k(n, k);
    std::vector<std::pair<unsigned, u64>> split;
    for (u64 d : digits) split.push_back(extract_powers_of_two(d));
    u64 max_b = 0;
    for (auto& [j, b] : split) max_b = std::max(max_b, b);
    u64 n_pre = (max_b + 1) >> 1;
    u64 count = n_pre - 1 + (n_pre > 1 ? 1 : 0);
    auto square_nd = [&](u64 e, unsigned j) {
        if (n_pre > 1 && e == 1 && j > 0) {
            count += j - 1;
            return u64(2) << (j - 1);
        }
        count += j;
        return e << j;
    };
    std::size_t i = split.size();
    auto [j0, b0] = split[i - 1];
    u64 e = square_nd(b0, j0);
    while (--i > 0) {
        auto [j, b] = split[i - 1];
        if (b == 0) {
            e = square_nd(e, k);
        } else {
            u64 exponent = b + e * (u64(1) << (k - j));
            if (exponent <= max_b) {
                e = exponent;
            } else {
                e = square_nd(e, k - j) + b;
                ++count;
            }
            e <<= j;
            count += j;
        }
    }
    return count;
}

inline unsigned brauer_best_k(u64 n)
{
    detail::check_exponent(n);
    unsigned k_max = std::max(1u, bit_length(n));
    unsigned best = 1;
    u64 best_count = brauer_count(n, 1);
    for (unsigned k = 2; k <= k_max; ++k) {
        u64 c = brauer_count(n, k);
        if (c < best_count) {
            best_count = c;
            best = k;
        }
    }
    return best;
}

// --- Thurber ------------------------------------------------------------------

struct thurber_window {
    unsigned width;
    u64 value;
    unsigned gap;
    bool operator==(const thurber_window&) const = default;
};

// most significant window first
inline std::vector<thurber_window> thurber_windows(u64 n, unsigned k)
{
    detail::check_exponent(n);
    detail::check_k(k);
    std::vector<thurber_window> w;
    int i = int(bit_length(n)) - 1;
    while (i >= 0) {
        int start = std::max(i - int(k) + 1, 0);
        while (((n >> start) & 1) == 0) ++start;
        unsigned width = unsigned(i - start + 1);
        u64 value = ((u64(1) << width) - 1) & (n >> start);
        i -= int(width);
        unsigned gap = 0;
        while (i >= 0 && ((n >> i) & 1) == 0) {
            --i;
            ++gap;
        }
        w.push_back({width, value, gap});
    }
    return w;
}

template <class T, class Op>
T thurber_exponentiate(Op op, const T& x, u64 n, unsigned k, bool flip = false)
{
    auto windows = thurber_windows(n, k);
    u64 max_value = 0;
    for (auto& w : windows) max_value = std::max(max_value, w.value);
    u64 n_pre = (max_value + 1) >> 1;
    std::vector<T> pre;
    pre.reserve(n_pre);
    pre.push_back(x);
    std::optional<T> x_sq;
    if (n_pre > 1) {
        x_sq = op(x, x);
        for (u64 i = 1; i < n_pre; ++i) pre.push_back(flip ? op(*x_sq, pre.back()) : op(pre.back(), *x_sq));
    }
    auto square = [&](T z, unsigned j) {
        for (unsigned i = 0; i < j; ++i) z = op(z, z);
        return z;
    };
    const auto& w0 = windows.front();
    T z = (w0.value == 1 && w0.gap > 0 && n_pre > 1) ? square(*x_sq, w0.gap - 1) : square(pre[w0.value >> 1], w0.gap);
    for (std::size_t i = 1; i < windows.size(); ++i) {
        const auto& w = windows[i];
        z = square(std::move(z), w.width);
        z = flip ? op(pre[w.value >> 1], z) : op(z, pre[w.value >> 1]);
        z = square(std::move(z), w.gap);
    }
    return z;
}

inline u64 thurber_count(u64 n, unsigned k)
{
    auto windows = thurber_windows(n, k);
    u64 max_value = 0;
    for (auto& w : windows) max_value = std::max(max_value, w.value);
    u64 n_pre = (max_value + 1) >> 1;
    u64 count = n_pre - 1 + (n_pre > 1 ? 1 : 0);
    const auto& w0 = windows.front();
    count += w0.gap;
    if (w0.value == 1 && w0.gap > 0 && n_pre > 1) --count;
    for (std::size_t i = 1; i < windows.size(); ++i) count += windows[i].width + 1 + windows[i].gap;
    return count;
}

inline unsigned thurber_k_max(u64 n)
{
    if (n < 15) return 1;
    if (n < 23) return 2;
    if (n < 151) return 3;
    if (n < 9413609) return 4;
    if (n < 10000000000ull) return 5;
    return bit_length(n);
}

inline unsigned thurber_best_k(u64 n)
{
    detail::check_exponent(n);
    unsigned best = 1;
    u64 best_count = thurber_count(n, 1);
    for (unsigned k = 2; k <= thurber_k_max(n); ++k) {
        u64 c = thurber_count(n, k);
        if (c < best_count) {
            best_count = c;
            best = k;
        }
    }
    return best;
}

// --- method selection ---------------------------------------------------------

enum class expo_method { binary, binary_down, parallel_binary, brauer, thurber };

// A callable (op, x, n) -> x^n.  For the binary kinds flip chooses the fold
// side: flip = true folds q on the left.
struct exponentiator {
    expo_method method = expo_method::binary;
    unsigned k = 1;
    bool flip = false;

    template <class Op, class T>
    T operator()(Op op, const T& x, u64 n) const
    {
        switch (method) {
        case expo_method::binary: return binary_exponentiate(op, x, n, flip);
        case expo_method::binary_down:
            return binary_exponentiate(op, x, n, flip ? binary_variant::down_left : binary_variant::down_right);
        case expo_method::parallel_binary: return parallel_binary_exponentiate(op, x, n, flip).first;
        case expo_method::brauer: return brauer_exponentiate(op, x, n, k, flip);
        case expo_method::thurber: return thurber_exponentiate(op, x, n, k, flip);
        }
        throw std::logic_error("exponentiator: bad method");
    }

    u64 count(u64 n) const
    {
        switch (method) {
        case expo_method::brauer: return brauer_count(n, k);
        case expo_method::thurber: return thurber_count(n, k);
        default: return binary_count(n);
        }
    }

    std::string name() const
    {
        std::string s;
        switch (method) {
        case expo_method::binary: s = "binary"; break;
        case expo_method::binary_down: s = "binary_down"; break;
        case expo_method::parallel_binary: s = "parallel"; break;
        case expo_method::brauer: s = "brauer:" + std::to_string(k); break;
        case expo_method::thurber: s = "thurber:" + std::to_string(k); break;
        }
        return flip ? s + ":flip" : s;
    }
};

// every method, both flips, k in 1..k_max
inline std::vector<exponentiator> all_exponentiators(unsigned k_max = 4)
{
    std::vector<exponentiator> out;
    for (bool flip : {false, true}) {
        out.push_back({expo_method::binary, 1, flip});
        out.push_back({expo_method::binary_down, 1, flip});
        out.push_back({expo_method::parallel_binary, 1, flip});
        for (unsigned k = 1; k <= k_max; ++k) {
            out.push_back({expo_method::brauer, k, flip});
            out.push_back({expo_method::thurber, k, flip});
        }
    }
    return out;
}

inline exponentiator parse_exponentiator(const std::string& method, unsigned k = 1, bool flip = false)
{
    if (method == "binary") return {expo_method::binary, 1, flip};
    if (method == "binary_down") return {expo_method::binary_down, 1, flip};
    if (method == "parallel") return {expo_method::parallel_binary, 1, flip};
    if (method == "brauer") return {expo_method::brauer, k, flip};
    if (method == "thurber") return {expo_method::thurber, k, flip};
    throw std::invalid_argument("unknown exponentiation method: " + method);
}

// --- addition chains ----------------------------------------------------------

struct invalid_chain : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct formal_addition_chain {
    std::vector<u64> values{1};
    std::vector<std::pair<std::size_t, std::size_t>> index_pairs;

    std::size_t length() const { return index_pairs.size(); }
    u64 target() const { return values.back(); }

    bool valid() const
    {
        if (values.empty() || values[0] != 1 || values.size() != index_pairs.size() + 1) return false;
        for (std::size_t k = 1; k < values.size(); ++k) {
            auto [i, j] = index_pairs[k - 1];
            if (i >= k || j >= k || values[k] != values[i] + values[j]) return false;
        }
        return true;
    }
};

namespace detail {
struct chain_node {
    std::size_t idx;
};
}

enum class chain_method { binary, brauer, thurber };

// runs the method with a symbolic op that records each product
inline formal_addition_chain record_chain(chain_method m, u64 n, unsigned k = 1, bool flip = false)
{
    formal_addition_chain c;
    auto op = [&c](detail::chain_node a, detail::chain_node b) {
        c.index_pairs.emplace_back(a.idx, b.idx);
        c.values.push_back(c.values[a.idx] + c.values[b.idx]);
        return detail::chain_node{c.values.size() - 1};
    };
    detail::chain_node x{0}, r{0};
    switch (m) {
    case chain_method::binary: r = binary_exponentiate(op, x, n, flip); break;
    case chain_method::brauer: r = brauer_exponentiate(op, x, n, k, flip); break;
    case chain_method::thurber: r = thurber_exponentiate(op, x, n, k, flip); break;
    }
    if (r.idx != c.values.size() - 1) {
        // result is an earlier entry (only when no product was needed)
        if (c.values[r.idx] != n) throw std::logic_error("record_chain: result mismatch");
    }
    return c;
}

template <class T, class Op>
T execute_chain(Op op, const T& x, const formal_addition_chain& chain)
{
    if (!chain.valid()) throw invalid_chain("execute_chain: chain violates e_k = e_i + e_j");
    std::vector<T> q;
    q.reserve(chain.values.size());
    q.push_back(x);
    for (auto [i, j] : chain.index_pairs) q.push_back(op(q[i], q[j]));
    return q.back();
}

// Minimum length ascending addition chain by iterative deepening.  Test oracle only.
inline formal_addition_chain optimal_chain_search(u64 n)
{
    if (n == 0 || n > 128) throw std::invalid_argument("optimal_chain_search: n must be in 1..128");
    formal_addition_chain best;
    if (n == 1) return best;
    std::vector<u64> e{1};
    std::vector<std::pair<std::size_t, std::size_t>> pr;
    std::function<bool(std::size_t)> dfs = [&](std::size_t left) -> bool {
        u64 last = e.back();
        if (last == n) return true;
        if (left == 0 || (last << left) < n) return false;
        std::size_t k = e.size();
        for (std::size_t i = k; i-- > 0;)
            for (std::size_t j = i + 1; j-- > 0;) {
                u64 v = e[i] + e[j];
                if (v <= last) break;
                if (v > n) continue;
                e.push_back(v);
                pr.emplace_back(i, j);
                if (dfs(left - 1)) return true;
                e.pop_back();
                pr.pop_back();
            }
        return false;
    };
    for (std::size_t len = 1;; ++len)
        if (dfs(len)) {
            best.values = e;
            best.index_pairs = pr;
            return best;
        }
}

// (x^n1, x^(2^j n1)): the second by j squarings of the first
template <class T, class Op>
std::pair<T, T> multi_exponentiate_power2_family(Op op, const T& x, u64 n1, unsigned j,
                                                 const exponentiator& base = {})
{
    T p = base(op, x, n1);
    T q = p;
    for (unsigned i = 0; i < j; ++i) q = op(q, q);
    return {std::move(p), std::move(q)};
}

// Powers for several exponents.  Sorted exponents that are a power of two
// times the previous one reuse it by squaring; others use the base method.
struct multi_exponentiator {
    exponentiator base{};

    template <class Op, class T>
    std::vector<T> operator()(Op op, const T& x, const std::vector<u64>& ns) const
    {
        std::vector<std::size_t> order(ns.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return ns[a] < ns[b]; });
        std::vector<std::optional<T>> out(ns.size());
        std::optional<T> prev;
        u64 prev_n = 0;
        for (std::size_t idx : order) {
            u64 n = ns[idx];
            detail::check_exponent(n);
            if (prev && n == prev_n) {
                out[idx] = *prev;
                continue;
            }
            if (prev && n % prev_n == 0 && std::has_single_bit(n / prev_n)) {
                T q = *prev;
                for (u64 m = prev_n; m < n; m <<= 1) q = op(q, q);
                prev = q;
            } else {
                prev = base(op, x, n);
            }
            prev_n = n;
            out[idx] = *prev;
        }
        std::vector<T> r;
        r.reserve(out.size());
        for (auto& o : out) r.push_back(std::move(*o));
        return r;
    }
};

} // namespace slidewin

#endif
