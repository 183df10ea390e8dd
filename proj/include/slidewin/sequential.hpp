#ifndef SLIDEWIN_SEQUENTIAL_HPP
#define SLIDEWIN_SEQUENTIAL_HPP

#include "sequential/naive.hpp"
#include "sequential/moving_sums.hpp"
#include "sequential/two_stacks.hpp"
#include "sequential/dew.hpp"
#include "sequential/daba_lite.hpp"
#include "sequential/slick_deque.hpp"
#include "sequential/time_window.hpp"

namespace slidewin {

template <class W, class T>
concept window_aggregator = requires(W w, const T& x) {
    w.insert(x);
    w.evict();
    w.query();
    w.combined_insert_evict(x);
    { w.size() } -> std::convertible_to<std::size_t>;
};

// drive an aggregator over data with a fixed window length
template <class T, class W>
std::vector<T> run_fixed_window(W& w, const std::vector<T>& data, std::size_t n)
{
    detail::check_window(n);
    std::vector<T> y;
    y.reserve(data.size());
    for (const auto& x : data) {
        if (w.size() == n)
            w.combined_insert_evict(x);
        else
            w.insert(x);
        y.push_back(w.query());
    }
    return y;
}

} // namespace slidewin

#endif
