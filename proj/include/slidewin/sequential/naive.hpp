#ifndef SLIDEWIN_SEQUENTIAL_NAIVE_HPP
#define SLIDEWIN_SEQUENTIAL_NAIVE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "../opcount.hpp"

namespace slidewin {

struct empty_window : std::out_of_range {
    empty_window() : std::out_of_range("window is empty") {}
};

namespace detail {
inline void check_window(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("window length must be >= 1");
}
}

// y_i = a_i * (a_{i-1} * (... * a_{max(1,i-n+1)})), the reference oracle
template <class T, class Op>
std::vector<T> naive_window(Op op, const std::vector<T>& data, std::size_t n)
{
    detail::check_window(n);
    std::vector<T> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        std::size_t lo = i + 1 >= n ? i + 1 - n : 0;
        T acc = data[lo];
        for (std::size_t j = lo + 1; j <= i; ++j) acc = op(data[j], acc);
        out.push_back(acc);
        mark_output(op);
    }
    return out;
}

// y_i = a_i . (a_{i-1} . (... (a_{i-n+1} . x_{i-n}))), with a_j dropped for j < 1
// and x_j = pad for j < 1.  x is indexed like a.
template <class A, class X, class Act>
std::vector<X> naive_windowed_recurrence(Act act, const std::vector<A>& a, const std::vector<X>& x,
                                         std::size_t n, const X& pad)
{
    detail::check_window(n);
    if (x.size() != a.size()) throw std::invalid_argument("naive_windowed_recurrence: size mismatch");
    std::vector<X> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        X acc = i >= n ? x[i - n] : pad;
        std::size_t lo = i + 1 >= n ? i + 1 - n : 0;
        for (std::size_t j = lo; j <= i; ++j) acc = act(a[j], acc);
        out.push_back(acc);
    }
    return out;
}

} // namespace slidewin

#endif
