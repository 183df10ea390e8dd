#ifndef SLIDEWIN_TESTS_SUPPORT_HPP
#define SLIDEWIN_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "slidewin/slidewin.hpp"

namespace testing_support {

namespace g = slidewin::gallery;

// SLIDEWIN_SEED overrides the fixed default
inline std::uint64_t seed()
{
    if (const char* s = std::getenv("SLIDEWIN_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240611;
}

using rng = std::mt19937_64;

inline double uniform(rng& r, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(r); }
inline std::int64_t uniform_int(rng& r, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(r);
}

// --- closeness, exact for discrete types and relative for doubles -----------------

inline double& tolerance()
{
    static double tol = 1e-9;
    return tol;
}

inline bool close(double a, double b)
{
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= tolerance() * std::max({1.0, std::abs(a), std::abs(b)});
}
inline bool close(std::int64_t a, std::int64_t b) { return a == b; }
inline bool close(int a, int b) { return a == b; }
inline bool close(const std::string& a, const std::string& b) { return a == b; }
inline bool close(const std::set<int>& a, const std::set<int>& b) { return a == b; }
template <class T>
bool close(const std::optional<T>& a, const std::optional<T>& b)
{
    if (!a || !b) return !a && !b;
    return close(*a, *b);
}
inline bool close(const g::arg_value& a, const g::arg_value& b) { return a == b; }
inline bool close(const g::max_count& a, const g::max_count& b) { return a == b; }
inline bool close(const g::lin& a, const g::lin& b) { return close(a.m, b.m) && close(a.a, b.a); }
inline bool close(const g::ewma_triple& a, const g::ewma_triple& b)
{
    return close(a.m, b.m) && close(a.a, b.a) && close(a.u, b.u);
}
inline bool close(const g::ewma_state& a, const g::ewma_state& b) { return close(a.x, b.x) && close(a.w, b.w); }
inline bool close(const g::pair_rep& a, const g::pair_rep& b) { return close(a.a, b.a) && close(a.b, b.b); }
inline bool close(const g::pair_state& a, const g::pair_state& b) { return close(a.z, b.z) && close(a.x, b.x); }
inline bool close(const g::quad_rep& a, const g::quad_rep& b)
{
    return close(a.a, b.a) && close(a.b, b.b) && close(a.c, b.c) && close(a.d, b.d);
}
inline bool close(const g::seg_rep& a, const g::seg_rep& b)
{
    return a.c == b.c && close(a.a, b.a) && close(a.z, b.z);
}
inline bool close(const g::run_rep& a, const g::run_rep& b) { return a == b; }
inline bool close(const g::mat2& a, const g::mat2& b)
{
    return close(a[0], b[0]) && close(a[1], b[1]) && close(a[2], b[2]) && close(a[3], b[3]);
}

template <class T>
bool close(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close(a[i], b[i])) return false;
    return true;
}

struct tolerance_scope {
    double saved;
    explicit tolerance_scope(double t) : saved(tolerance()) { tolerance() = t; }
    ~tolerance_scope() { tolerance() = saved; }
};

} // namespace testing_support

#endif
