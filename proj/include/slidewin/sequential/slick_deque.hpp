#ifndef SLIDEWIN_SEQUENTIAL_SLICK_DEQUE_HPP
#define SLIDEWIN_SEQUENTIAL_SLICK_DEQUE_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <utility>

#include "naive.hpp"

namespace slidewin {

// Slick Deque for selection operators whose relation is transitive.
// An entry is dropped when the new value x satisfies x * v = x.
template <class T, class Op>
class slick_deque {
public:
    struct entry {
        T value;
        std::uint64_t index;
    };

    explicit slick_deque(Op op) : op_(std::move(op)) {}

    std::size_t size() const { return std::size_t(i_ - j_); }
    bool empty() const { return i_ == j_; }

    void insert(const T& x)
    {
        while (!arr_.empty()) {
            T r = op_(x, arr_.back().value);
            ++comparisons_;
            if (!(r == x)) break;
            arr_.pop_back();
        }
        arr_.push_back({x, ++i_});
    }

    void evict()
    {
        if (empty()) throw empty_window();
        ++j_;
        if (!arr_.empty() && arr_.front().index == j_) arr_.pop_front();
    }

    void combined_insert_evict(const T& x)
    {
        evict();
        insert(x);
    }

    const T& query() const
    {
        if (empty()) throw empty_window();
        return arr_.front().value;
    }

    const std::deque<entry>& entries() const { return arr_; }
    std::uint64_t comparisons() const { return comparisons_; }

private:
    Op op_;
    std::deque<entry> arr_;
    std::uint64_t i_ = 0, j_ = 0;
    std::uint64_t comparisons_ = 0;
};

template <class T, class Op>
slick_deque<T, Op> make_slick_deque(Op op) { return slick_deque<T, Op>(std::move(op)); }

} // namespace slidewin

#endif
