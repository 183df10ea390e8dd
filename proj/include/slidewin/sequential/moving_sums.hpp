#ifndef SLIDEWIN_SEQUENTIAL_MOVING_SUMS_HPP
#define SLIDEWIN_SEQUENTIAL_MOVING_SUMS_HPP

#include <cstddef>
#include <vector>

#include "naive.hpp"

namespace slidewin {

enum class soe_order {
    add_last,      // a_i + (y_{i-1} - a_{i-n})
    subtract_last  // (a_i + y_{i-1}) - a_{i-n}
};

// Subtract-on-Evict.  Exact only for a group operation; drift and
// undefined values are not repaired.
template <class T, class Add, class Sub>
std::vector<T> subtract_on_evict(Add add, Sub sub, const std::vector<T>& data, std::size_t n,
                                 soe_order order = soe_order::add_last)
{
    detail::check_window(n);
    std::vector<T> y;
    y.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i == 0)
            y.push_back(data[0]);
        else if (i < n)
            y.push_back(add(data[i], y[i - 1]));
        else if (order == soe_order::add_last)
            y.push_back(add(data[i], sub(y[i - 1], data[i - n])));
        else
            y.push_back(sub(add(data[i], y[i - 1]), data[i - n]));
    }
    return y;
}

// z_i = a_i + z_{i-1}, sequentially
template <class T, class Add>
std::vector<T> prefix_sums(Add add, const std::vector<T>& data)
{
    std::vector<T> z;
    z.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) z.push_back(i == 0 ? data[0] : add(data[i], z[i - 1]));
    return z;
}

// y_i = z_i - z_{i-n}
template <class T, class Add, class Sub>
std::vector<T> difference_of_prefix_sums(Add add, Sub sub, const std::vector<T>& data, std::size_t n)
{
    detail::check_window(n);
    std::vector<T> z = prefix_sums<T>(add, data);
    std::vector<T> y;
    y.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) y.push_back(i < n ? z[i] : sub(z[i], z[i - n]));
    return y;
}

} // namespace slidewin

#endif
