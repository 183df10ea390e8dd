#ifndef SLIDEWIN_SEQUENTIAL_DEW_HPP
#define SLIDEWIN_SEQUENTIAL_DEW_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "../opcount.hpp"
#include "naive.hpp"

namespace slidewin {

// Circular DEW, basic version.  push() inserts x, evicts once the window holds
// n items, and returns the window aggregate.  Cells are 1-based; empty cells
// are dropped from products.
template <class T, class Op>
class dew_basic {
public:
    dew_basic(Op op, std::size_t n, int variant = 1) : op_(std::move(op)), n_(n), arr_(n + 1)
    {
        detail::check_window(n);
        if (variant != 1 && variant != 2) throw std::invalid_argument("dew: variant must be 1 or 2");
        p_ = 1;
        q_ = variant == 1 ? 1 : n;
    }

    T push(const T& x)
    {
        std::size_t p_last = wrap(p_ + n_ - 1), q_last = wrap(q_ + 1);
        std::size_t p_next = wrap(p_ + 1), q_next = wrap(q_ + n_ - 1);
        T dea = x;
        if (p_ == q_ || (p_ == q_last && !arr_[p_]))
            dea = x;
        else if (p_ == q_last)
            dea = op_(x, *arr_[p_]);
        else if (!arr_[p_])
            dea = op_(x, *arr_[p_last]);
        else
            dea = op_(x, op_(*arr_[p_last], *arr_[p_]));
        T agg = (q_next == p_ || !arr_[q_next]) ? dea : op_(dea, *arr_[q_next]);
        arr_[q_] = x;
        if (p_ != q_) arr_[p_] = dea;
        p_ = p_next;
        q_ = q_next;
        return agg;
    }

    std::size_t window_length() const { return n_; }

private:
    std::size_t wrap(std::size_t i) const { return (i - 1) % n_ + 1; }

    Op op_;
    std::size_t n_;
    std::vector<std::optional<T>> arr_;
    std::size_t p_, q_;
};

// Circular DEW with a sentinel index.  Empty cells are never inspected: during
// startup the unwritten cells are exactly p..q.  In the regular mode the common
// case costs one comparison against the sentinel.
template <class T, class Op>
class dew_sentinel {
public:
    enum class mode { one, start, fill, regular };

    dew_sentinel(Op op, std::size_t n, int variant = 1) : op_(std::move(op)), n_(n), arr_(n + 1)
    {
        detail::check_window(n);
        if (variant != 1 && variant != 2) throw std::invalid_argument("dew: variant must be 1 or 2");
        p_ = 1;
        q_ = variant == 1 ? 1 : n;
        mode_ = n == 1 ? mode::one : (variant == 1 ? mode::start : mode::fill);
        sentinel_ = p_;
    }

    T push(const T& x)
    {
        if (p_ != sentinel_) {
            T dea = op_(x, op_(*arr_[p_ - 1], *arr_[p_]));
            T agg = op_(dea, *arr_[q_ - 1]);
            arr_[p_] = std::move(dea);
            arr_[q_] = x;
            ++p_;
            --q_;
            return agg;
        }
        if (mode_ == mode::one) return x;
        return slow(x);
    }

    mode current_mode() const { return mode_; }

private:
    std::size_t wrap(std::size_t i) const { return (i - 1) % n_ + 1; }

    bool empty(std::size_t c) const
    {
        switch (mode_) {
        case mode::start: return true;
        case mode::fill: return p_ <= c && c <= q_;
        default: return false;
        }
    }

    T slow(const T& x)
    {
        std::size_t p_last = wrap(p_ + n_ - 1), q_last = wrap(q_ + 1);
        std::size_t p_next = wrap(p_ + 1), q_next = wrap(q_ + n_ - 1);
        T dea = x;
        bool p_empty = empty(p_);
        if (p_ == q_ || (p_ == q_last && p_empty))
            dea = x;
        else if (p_ == q_last)
            dea = op_(x, *arr_[p_]);
        else if (p_empty)
            dea = op_(x, *arr_[p_last]);
        else
            dea = op_(x, op_(*arr_[p_last], *arr_[p_]));
        T agg = (q_next == p_ || empty(q_next)) ? dea : op_(dea, *arr_[q_next]);
        arr_[q_] = x;
        if (p_ != q_) arr_[p_] = dea;

        // cells p+1 .. q-1 are still empty, except after the first variant 1
        // step where they are 2 .. n
        if (mode_ == mode::start)
            mode_ = mode::fill;
        else if (mode_ == mode::fill && p_ + 1 > q_ - 1)
            mode_ = mode::regular;
        p_ = p_next;
        q_ = q_next;
        sentinel_ = mode_ == mode::regular ? next_special() : p_;
        return agg;
    }

    // p value of the next step that cannot take the fast path
    std::size_t next_special() const
    {
        std::size_t p = p_, q = q_;
        if (p < 2 || p > n_ - 1 || q < 2) return p;
        std::size_t t = std::min(n_ - 1 - p + 1, q - 1);
        if (p <= q) {
            std::size_t d = q - p;
            t = std::min(t, d <= 1 ? std::size_t(0) : d / 2);
        } else if (p - q < 2) {
            t = 0;
        }
        return p + t;
    }

    Op op_;
    std::size_t n_;
    std::vector<std::optional<T>> arr_;
    std::size_t p_, q_;
    mode mode_;
    std::size_t sentinel_;
};

enum class dew_impl { basic, sentinel };

template <class T, class Op>
std::vector<T> dew(Op op, int variant, const std::vector<T>& data, std::size_t n, dew_impl impl = dew_impl::basic)
{
    std::vector<T> y;
    y.reserve(data.size());
    auto run = [&](auto&& d) {
        for (const auto& x : data) {
            y.push_back(d.push(x));
            mark_output(op);
        }
    };
    if (impl == dew_impl::basic)
        run(dew_basic<T, Op>(op, n, variant));
    else
        run(dew_sentinel<T, Op>(op, n, variant));
    return y;
}

} // namespace slidewin

#endif
