#ifndef SLIDEWIN_SEQUENTIAL_TWO_STACKS_HPP
#define SLIDEWIN_SEQUENTIAL_TWO_STACKS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "../opcount.hpp"
#include "naive.hpp"

namespace slidewin {

// Batch Two Stacks.  Startup is y_i = a_i * y_{i-1}; after that the window is
// split into a suffix aggregate g_j = a_s * ... * a_j built at each batch start s
// and a running prefix c = a_i * ... * a_{s+1}.  Only one prefix accumulator is live.
template <class T, class Op>
std::vector<T> two_stacks(Op op, two_stacks_variant v, const std::vector<T>& a, std::size_t n)
{
    detail::check_window(n);
    const std::size_t N = a.size();
    std::vector<T> y;
    y.reserve(N);
    auto emit = [&](T value) {
        y.push_back(std::move(value));
        mark_output(op);
    };

    if (n == 1) {
        for (std::size_t i = 0; i < N; ++i) {
            if (v == two_stacks_variant::insert_evict && i % 2 == 1) (void)op(a[i], a[i - 1]);
            emit(a[i]);
        }
        return y;
    }

    for (std::size_t i = 0; i < N && i < n; ++i) emit(i == 0 ? a[0] : op(a[i], y.back()));

    std::vector<std::optional<T>> g(n);
    auto G = [&](std::size_t j) -> T& { return *g[j % n]; };
    // g_j for j = top down to lo
    auto build = [&](std::size_t top, std::size_t lo) {
        g[top % n] = a[top];
        for (std::size_t j = top; j-- > lo;) g[j % n] = op(G(j + 1), a[j]);
    };

    std::size_t s = n;
    std::optional<T> c;
    while (s < N) {
        std::size_t len = 0;
        switch (v) {
        case two_stacks_variant::combined_insert_evict:
        case two_stacks_variant::insert_evict:
            len = n + 1;
            if (v == two_stacks_variant::insert_evict) (void)op(a[s], y.back());
            build(s, s - n + 1);
            emit(G(s - n + 1));
            for (std::size_t i = s + 1; i < s + len && i < N; ++i) {
                c = i == s + 1 ? a[i] : op(a[i], *c);
                emit(i == s + n ? *c : op(*c, G(i - n + 1)));
            }
            break;
        case two_stacks_variant::evict_insert:
            len = n;
            build(s - 1, s - n + 1);
            c = a[s];
            emit(op(*c, G(s - n + 1)));
            for (std::size_t i = s + 1; i < s + len && i < N; ++i) {
                c = op(a[i], *c);
                emit(i == s + n - 1 ? *c : op(*c, G(i - n + 1)));
            }
            break;
        case two_stacks_variant::variant3:
            len = n;
            build(s, s - n + 1);
            emit(G(s - n + 1));
            for (std::size_t i = s + 1; i < s + len && i < N; ++i) {
                c = i == s + 1 ? a[i] : op(a[i], *c);
                emit(op(*c, G(i - n + 1)));
            }
            break;
        case two_stacks_variant::variant4:
            len = n - 1;
            build(s - 1, s - n + 1);
            c = a[s];
            emit(op(*c, G(s - n + 1)));
            for (std::size_t i = s + 1; i < s + len && i < N; ++i) {
                c = op(a[i], *c);
                emit(op(*c, G(i - n + 1)));
            }
            break;
        }
        s += len;
    }
    return y;
}

// Streaming Two Stacks with insert / evict / query.  The flip drops the
// element being evicted instead of aggregating it.
template <class T, class Op>
class two_stacks_aggregator {
public:
    explicit two_stacks_aggregator(Op op) : op_(std::move(op)) {}

    std::size_t size() const { return front_.size() + back_.size(); }
    bool empty() const { return size() == 0; }

    void insert(const T& x)
    {
        back_.push_back(x);
        c_ = back_.size() == 1 ? x : op_(x, *c_);
    }

    void evict()
    {
        if (!front_.empty()) {
            front_.pop_back();
            return;
        }
        if (back_.empty()) throw empty_window();
        flip(back_.size() - 1, 1);
    }

    // fixed length steady state: evict the oldest and insert x in one step
    void combined_insert_evict(const T& x)
    {
        if (!front_.empty()) {
            front_.pop_back();
            insert(x);
            return;
        }
        if (back_.empty()) throw empty_window();
        back_.push_back(x);
        flip(back_.size() - 1, 1);
    }

    T query() const
    {
        if (front_.empty() && back_.empty()) throw empty_window();
        if (front_.empty()) return *c_;
        if (back_.empty()) return front_.back();
        return op_(*c_, front_.back());
    }

private:
    // front gets g_j for back_[top] down to back_[lo]; everything older is dropped
    void flip(std::size_t top, std::size_t lo)
    {
        front_.clear();
        if (top + 1 > lo) {
            front_.reserve(top - lo + 1);
            front_.push_back(back_[top]);
            for (std::size_t j = top; j-- > lo;) front_.push_back(op_(front_.back(), back_[j]));
        }
        back_.clear();
        c_.reset();
    }

    Op op_;
    std::vector<T> front_;  // top (back()) is the oldest element's aggregate
    std::vector<T> back_;   // raw values, oldest first
    std::optional<T> c_;    // newest * ... * oldest of back_
};

template <class T, class Op>
two_stacks_aggregator<T, Op> make_two_stacks_aggregator(Op op) { return two_stacks_aggregator<T, Op>(std::move(op)); }

// Meta-algorithm: aggregate lifted functions with Two Stacks over compose
// (associativity is assumed even when compose is only semi-associative),
// then apply to x_{i-n}.
template <class Rep, class A, class X>
std::vector<X> meta_windowed_recurrence(const Rep& rep, const std::vector<A>& a, const std::vector<X>& x,
                                        std::size_t n, const X& pad,
                                        two_stacks_variant v = two_stacks_variant::combined_insert_evict)
{
    using L = decltype(rep.lift(a.front()));
    detail::check_window(n);
    std::vector<L> lifted;
    lifted.reserve(a.size());
    for (const auto& e : a) lifted.push_back(rep.lift(e));
    auto w = two_stacks<L>([&](const L& l1, const L& l2) { return rep.compose(l1, l2); }, v, lifted, n);
    std::vector<X> y;
    y.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y.push_back(rep.apply(w[i], i >= n ? x[i - n] : pad));
    return y;
}

} // namespace slidewin

#endif
