#ifndef SLIDEWIN_VECTOR_WINDOW_HPP
#define SLIDEWIN_VECTOR_WINDOW_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "exponentiation.hpp"
#include "gallery.hpp"
#include "opcount.hpp"

namespace slidewin {

// --- generic window compose / apply ------------------------------------------------
//
// A product context has compose(p, q) and shift(i, p).  An action context adds
// lift(a), apply(z, x) and shiftx(i, x).

template <class Ctx, class P, class Expo = exponentiator>
P window_compose(const Ctx& ctx, const P& a, u64 n, const Expo& expo = {})
{
    detail::check_exponent(n);
    auto sd = semidirect_op([&](const P& u, const P& v) { return ctx.compose(u, v); },
                            [&](u64 i, const P& v) { return ctx.shift(i, v); });
    return expo(sd, semidirect_element<P>{1, a}, n).payload;
}

template <class Ctx, class A, class X, class Expo = exponentiator>
X window_apply(const Ctx& ctx, u64 n, const A& a, const X& x, const Expo& expo = {})
{
    auto z = window_compose(ctx, ctx.lift(a), n, expo);
    return ctx.apply(z, ctx.shiftx(n, x));
}

template <class Ctx, class P, class Multi = multi_exponentiator>
std::vector<P> multi_window_compose(const Ctx& ctx, const P& a, const std::vector<u64>& lengths,
                                    const Multi& multi = {})
{
    auto sd = semidirect_op([&](const P& u, const P& v) { return ctx.compose(u, v); },
                            [&](u64 i, const P& v) { return ctx.shift(i, v); });
    auto powers = multi(sd, semidirect_element<P>{1, a}, lengths);
    std::vector<P> out;
    out.reserve(powers.size());
    for (auto& p : powers) out.push_back(std::move(p.payload));
    return out;
}

template <class Ctx, class A, class X, class Multi = multi_exponentiator>
std::vector<X> multi_window_apply(const Ctx& ctx, const std::vector<u64>& lengths, const A& a, const X& x,
                                  const Multi& multi = {})
{
    auto fd = multi_window_compose(ctx, ctx.lift(a), lengths, multi);
    std::vector<X> out;
    out.reserve(fd.size());
    for (std::size_t i = 0; i < fd.size(); ++i) out.push_back(ctx.apply(fd[i], ctx.shiftx(lengths[i], x)));
    return out;
}

// prefix products are windows at least as long as the data
template <class Ctx, class P>
P prefix_scan(const Ctx& ctx, const P& a, u64 N)
{
    u64 n = N <= 1 ? 1 : u64(1) << ceil_log2(N);
    return window_compose(ctx, a, n, exponentiator{expo_method::binary});
}

template <class P>
struct joint_result {
    P window;
    P prefix;
    u64 prefix_length = 0;
    u64 compose_calls = 0;
    u64 parallel_steps = 0;
};

// x^n by the chosen method, then squared ceil(log2 N/n) times to cover N
template <class Ctx, class P, class Expo = exponentiator>
joint_result<P> joint_prefix_and_window(const Ctx& ctx, const P& a, u64 n, u64 N, const Expo& expo = {})
{
    detail::check_exponent(n);
    if (N < n) throw std::invalid_argument("joint_prefix_and_window: need n <= N");
    op_counter counter;
    auto sd = instrument(semidirect_op([&](const P& u, const P& v) { return ctx.compose(u, v); },
                                       [&](u64 i, const P& v) { return ctx.shift(i, v); }),
                         counter);
    auto z = expo(sd, semidirect_element<P>{1, a}, n);
    P window = z.payload;
    unsigned j = ceil_log2_ratio(N, n);
    for (unsigned s = 0; s < j; ++s) z = sd(z, z);
    return {std::move(window), std::move(z.payload), z.index, counter.total,
            u64(parallel_binary_schedule(n).depth()) + j};
}

// --- vectorization schemes ----------------------------------------------------------

// Fixed length arrays.  An empty cell is the adjoined identity, so
// shift pads on the left with it.
template <class T, class Op>
struct fixed_len_scheme {
    using payload = std::vector<std::optional<T>>;
    Op op;

    payload compose(const payload& u, const payload& v) const
    {
        if (u.size() != v.size()) throw std::invalid_argument("fixed_len_scheme: length mismatch");
        payload r(u.size());
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (!u[k])
                r[k] = v[k];
            else if (!v[k])
                r[k] = u[k];
            else
                r[k] = op(*u[k], *v[k]);
        }
        return r;
    }

    payload shift(u64 i, const payload& u) const
    {
        payload r(u.size());
        for (std::size_t k = std::size_t(std::min<u64>(i, u.size())); k < u.size(); ++k) r[k] = u[k - i];
        return r;
    }

    static payload embed(const std::vector<T>& a) { return payload(a.begin(), a.end()); }

    static std::vector<T> extract(const payload& p)
    {
        std::vector<T> r;
        r.reserve(p.size());
        for (auto& c : p) {
            if (!c) throw std::logic_error("fixed_len_scheme: identity cell in result");
            r.push_back(*c);
        }
        return r;
    }
};

template <class T, class Op>
fixed_len_scheme<T, Op> make_fixed_len_scheme(Op op) { return {std::move(op)}; }

// Variable length sequences, no identity needed.  compose aligns tails and
// shift truncates.
template <class T, class Op>
struct var_len_scheme {
    using payload = std::vector<T>;
    Op op;

    payload compose(const payload& u, const payload& v) const
    {
        const std::size_t p = u.size(), q = v.size();
        payload r;
        r.reserve(std::max(p, q));
        if (p >= q) {
            r.insert(r.end(), u.begin(), u.begin() + std::ptrdiff_t(p - q));
            for (std::size_t j = 0; j < q; ++j) r.push_back(op(u[p - q + j], v[j]));
        } else {
            r.insert(r.end(), v.begin(), v.begin() + std::ptrdiff_t(q - p));
            for (std::size_t j = 0; j < p; ++j) r.push_back(op(u[j], v[q - p + j]));
        }
        return r;
    }

    payload shift(u64 i, const payload& u) const
    {
        if (i >= u.size()) return {};
        return payload(u.begin(), u.end() - std::ptrdiff_t(i));
    }
};

template <class T, class Op>
var_len_scheme<T, Op> make_var_len_scheme(Op op) { return {std::move(op)}; }

// Fixed length vectorization of a rep: cells hold lifted values or the
// identity, states are padded on the left with pad.
template <class Rep, class A, class X>
struct fixed_len_action {
    using lifted = decltype(std::declval<const Rep&>().lift(std::declval<const A&>()));
    using payload = std::vector<std::optional<lifted>>;
    using state = std::vector<X>;
    Rep rep;
    X pad;

    payload lift(const std::vector<A>& a) const
    {
        payload r;
        r.reserve(a.size());
        for (auto& e : a) r.emplace_back(rep.lift(e));
        return r;
    }

    payload compose(const payload& u, const payload& v) const
    {
        payload r(u.size());
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (!u[k])
                r[k] = v[k];
            else if (!v[k])
                r[k] = u[k];
            else
                r[k] = rep.compose(*u[k], *v[k]);
        }
        return r;
    }

    payload shift(u64 i, const payload& u) const
    {
        payload r(u.size());
        for (std::size_t k = std::size_t(std::min<u64>(i, u.size())); k < u.size(); ++k) r[k] = u[k - i];
        return r;
    }

    state apply(const payload& z, const state& x) const
    {
        state r;
        r.reserve(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) r.push_back(z[k] ? X(rep.apply(*z[k], x[k])) : x[k]);
        return r;
    }

    state shiftx(u64 i, const state& x) const
    {
        state r(x.size(), pad);
        for (std::size_t k = std::size_t(std::min<u64>(i, x.size())); k < x.size(); ++k) r[k] = x[k - i];
        return r;
    }
};

template <class A, class X, class Rep>
fixed_len_action<Rep, A, X> make_fixed_len_action(Rep rep, X pad) { return {std::move(rep), std::move(pad)}; }

// --- named wrappers -------------------------------------------------------------

// v_i + u_i (v_{i-1} + ... + u_{i-n+1} x_{i-n}), x padded with 0
template <class Expo = exponentiator>
std::vector<double> window_linear_recurrence(const std::vector<double>& u, const std::vector<double>& v,
                                             const std::vector<double>& x, u64 n, const Expo& expo = {})
{
    if (u.size() != v.size() || v.size() != x.size())
        throw std::invalid_argument("window_linear_recurrence: size mismatch");
    std::vector<gallery::lin> a;
    a.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) a.push_back({u[i], v[i]});
    auto ctx = make_fixed_len_action<gallery::lin>(gallery::rep_linear_recurrence{}, 0.0);
    return window_apply(ctx, n, a, x, expo);
}

// v_i + u_i v_{i-1} + ... over n terms; the recurrence runs n-1 steps from v
template <class Expo = exponentiator>
std::vector<double> window_sum_with_scale_changes(const std::vector<double>& u, const std::vector<double>& v, u64 n,
                                                  const Expo& expo = {})
{
    detail::check_exponent(n);
    if (n == 1) return v;
    return window_linear_recurrence(u, v, v, n - 1, expo);
}

// a_i + 1/(a_{i-1} + 1/(... + 1/a_{i-n+1})), terms before the start dropped
template <class Expo = exponentiator>
std::vector<double> window_continued_fraction(const std::vector<double>& a, u64 n,
                                              gallery::cfrac_norm norm = gallery::cfrac_norm::one_norm,
                                              const Expo& expo = {})
{
    const double inf = std::numeric_limits<double>::infinity();
    auto ctx = make_fixed_len_action<double>(gallery::rep_continued_fraction{norm}, inf);
    return window_apply(ctx, n, a, std::vector<double>(a.size(), inf), expo);
}

} // namespace slidewin

#endif
