#ifndef SLIDEWIN_SEQUENTIAL_DABA_LITE_HPP
#define SLIDEWIN_SEQUENTIAL_DABA_LITE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>

#include "naive.hpp"

namespace slidewin {

// De-amortized banker's aggregator, lite form.  Positions are absolute:
//
//   [F, L)  front, agg = cat(v_i .. v_{B-1})       (converted)
//   [L, R)  front, agg = cat(v_i .. v_{R-1})       (not yet converted)
//   [R, A)  raw values waiting for their suffix aggregate
//   [A, B)  agg = cat(v_i .. v_{B-1})
//   [B, E)  back, raw values, running aggregate sum_b
//
// sum_rb = cat(v_R .. v_{B-1}) is fixed at the flip.  cat(older, newer) is
// op(newer, older), so query() is the newest-left fold.  fixup() does at most
// one unit of work: finish a suffix aggregate, else convert one front entry,
// else flip once the back is as long as the front.
template <class T, class Op>
class daba_lite {
public:
    explicit daba_lite(Op op) : op_(std::move(op)) {}

    std::size_t size() const { return std::size_t(E_ - F_); }
    bool empty() const { return E_ == F_; }

    void insert(const T& x)
    {
        vals_.push_back(x);
        aggs_.emplace_back();
        ++E_;
        sum_b_ = sum_b_ ? cat(*sum_b_, x) : x;
        fixup();
    }

    void evict()
    {
        if (empty()) throw empty_window();
        // never let F run into raw values
        if (R_ > F_ && A_ > R_ && F_ + 1 == R_) finish_a();
        vals_.pop_front();
        aggs_.pop_front();
        ++F_;
        L_ = std::max(L_, F_);
        R_ = std::max(R_, F_);
        A_ = std::max(A_, F_);
        B_ = std::max(B_, F_);
        if (F_ == E_) sum_b_.reset();
        fixup();
    }

    void combined_insert_evict(const T& x)
    {
        evict();
        insert(x);
    }

    T query()
    {
        if (empty()) throw empty_window();
        if (F_ >= B_) return *sum_b_;
        if (F_ >= R_ && F_ < A_) finish_a();
        T acc = (F_ < L_ || F_ >= R_) ? *agg(F_) : cat(*agg(F_), *sum_rb_);
        return sum_b_ ? cat(acc, *sum_b_) : acc;
    }

private:
    T cat(const T& older, const T& newer) const { return op_(newer, older); }
    T& val(std::uint64_t i) { return vals_[std::size_t(i - F_)]; }
    std::optional<T>& agg(std::uint64_t i) { return aggs_[std::size_t(i - F_)]; }

    void step_a()
    {
        std::uint64_t i = A_ - 1;
        agg(i) = A_ == B_ ? val(i) : cat(val(i), *agg(A_));
        --A_;
    }

    void finish_a()
    {
        while (A_ > R_) step_a();
    }

    void fixup()
    {
        if (A_ > R_) {
            step_a();
            return;
        }
        if (L_ < R_) {
            agg(L_) = cat(*agg(L_), *sum_rb_);
            ++L_;
            return;
        }
        if (E_ > B_ && E_ - B_ >= B_ - F_) {
            L_ = F_;
            R_ = B_;
            A_ = E_;
            B_ = E_;
            sum_rb_ = sum_b_;
            sum_b_.reset();
            step_a();
        }
    }

    Op op_;
    std::deque<T> vals_;
    std::deque<std::optional<T>> aggs_;
    std::uint64_t F_ = 0, L_ = 0, R_ = 0, A_ = 0, B_ = 0, E_ = 0;
    std::optional<T> sum_b_, sum_rb_;
};

template <class T, class Op>
daba_lite<T, Op> make_daba_lite(Op op) { return daba_lite<T, Op>(std::move(op)); }

} // namespace slidewin

#endif
