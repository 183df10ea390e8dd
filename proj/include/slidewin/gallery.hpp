#ifndef SLIDEWIN_GALLERY_HPP
#define SLIDEWIN_GALLERY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace slidewin::gallery {

// --- associative operators ------------------------------------------------------
//
// Every operator is called as op(newer, older).

struct op_sum {
    template <class T>
    T operator()(const T& x, const T& y) const { return x + y; }
};

struct op_product {
    template <class T>
    T operator()(const T& x, const T& y) const { return x * y; }
};

// x * y = x followed by y, so a window reads newest first
struct op_concat {
    std::string operator()(const std::string& x, const std::string& y) const { return x + y; }
};

struct op_union {
    std::set<int> operator()(const std::set<int>& x, const std::set<int>& y) const
    {
        std::set<int> r = x;
        r.insert(y.begin(), y.end());
        return r;
    }
};

struct op_intersection {
    std::set<int> operator()(const std::set<int>& x, const std::set<int>& y) const
    {
        std::set<int> r;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(r, r.end()));
        return r;
    }
};

// coalesce(a, b) = b if a is undefined else a
struct op_coalesce {
    template <class T>
    std::optional<T> operator()(const std::optional<T>& a, const std::optional<T>& b) const
    {
        return a ? a : b;
    }
};

// selection operators from <= and >=
struct op_max {
    template <class T>
    T operator()(const T& x, const T& y) const { return x <= y ? y : x; }
};

struct op_min {
    template <class T>
    T operator()(const T& x, const T& y) const { return y <= x ? y : x; }
};

// sum where undefined absorbs, the failure case for subtract-on-evict
struct op_sum_undef {
    std::optional<double> operator()(const std::optional<double>& x, const std::optional<double>& y) const
    {
        if (!x || !y) return std::nullopt;
        return *x + *y;
    }
};

struct op_sub_undef {
    std::optional<double> operator()(const std::optional<double>& x, const std::optional<double>& y) const
    {
        if (!x || !y) return std::nullopt;
        return *x - *y;
    }
};

// --- argmax / max count --------------------------------------------------------

enum class argmax_mode { earliest, latest, set };

struct arg_value {
    double value = 0;
    std::set<std::uint64_t> keys;
    bool operator==(const arg_value&) const = default;
};

// requires a total order on values
struct rep_argmax {
    argmax_mode mode = argmax_mode::earliest;

    arg_value operator()(const arg_value& x1, const arg_value& x2) const
    {
        const double m1 = x1.value, m2 = x2.value;
        switch (mode) {
        case argmax_mode::earliest: return m1 <= m2 ? x2 : x1;
        case argmax_mode::latest: return m2 <= m1 ? x1 : x2;
        case argmax_mode::set:
            if (m1 == m2) {
                arg_value r = x1;
                r.keys.insert(x2.keys.begin(), x2.keys.end());
                return r;
            }
            return m1 <= m2 ? x2 : x1;
        }
        return x1;
    }
};

struct max_count {
    double value = 0;
    std::uint64_t count = 1;
    bool operator==(const max_count&) const = default;
};

struct rep_max_count {
    max_count operator()(const max_count& x1, const max_count& x2) const
    {
        if (x1.value == x2.value) return {x1.value, x1.count + x2.count};
        return x1.value <= x2.value ? x2 : x1;
    }
};

// --- function composition representations ---------------------------------------
//
// Each rep has lift(a), compose(l1, l2), apply(l, x) and act(a, x), with
// apply(l1, apply(l2, x)) == apply(compose(l1, l2), x).

// x -> a + m x
struct lin {
    double m = 1;
    double a = 0;
    bool operator==(const lin&) const = default;
};

inline lin compose_lin(const lin& l1, const lin& l2) { return {l1.m * l2.m, l1.a + l1.m * l2.a}; }

struct rep_linear_recurrence {
    lin lift(const lin& p) const { return p; }
    lin compose(const lin& l1, const lin& l2) const { return compose_lin(l1, l2); }
    double apply(const lin& l, double x) const { return l.a + l.m * x; }
    double act(const lin& p, double x) const { return p.a + p.m * x; }
    static lin identity() { return {1, 0}; }
};

struct rep_sum_missing {
    double lift(const std::optional<double>& a) const { return a.value_or(0.0); }
    double compose(double l1, double l2) const { return l1 + l2; }
    double apply(double l, double x) const { return l + x; }
    double act(const std::optional<double>& a, double x) const { return a.value_or(0.0) + x; }
};

struct scaled_missing {
    double m = 1;
    std::optional<double> a;
};

struct rep_sum_scale_missing {
    lin lift(const scaled_missing& s) const { return {s.m, s.a.value_or(0.0)}; }
    lin compose(const lin& l1, const lin& l2) const { return compose_lin(l1, l2); }
    double apply(const lin& l, double x) const { return l.a + l.m * x; }
    double act(const scaled_missing& s, double x) const { return s.a.value_or(0.0) + s.m * x; }
};

// x_i = (1-c) a_i + c x_{i-1}
struct rep_ewma_type1 {
    double c = 0.5;
    lin lift(double a) const { return {c, (1 - c) * a}; }
    lin compose(const lin& l1, const lin& l2) const { return compose_lin(l1, l2); }
    double apply(const lin& l, double x) const { return l.a + l.m * x; }
    double act(double a, double x) const { return (1 - c) * a + c * x; }
};

struct ewma_state {
    double x = 0;
    double w = 0;
    double average() const { return x / w; }
    bool operator==(const ewma_state&) const = default;
};

struct ewma_triple {
    double m = 1;
    double a = 0;
    double u = 0;
    bool operator==(const ewma_triple&) const = default;
};

// (x, w) -> (a_i + c x, 1 + c w)
struct rep_ewma_type2 {
    double c = 0.5;
    ewma_triple lift(double a) const { return {c, a, 1}; }
    ewma_triple compose(const ewma_triple& l1, const ewma_triple& l2) const
    {
        return {l1.m * l2.m, l1.a + l1.m * l2.a, l1.u + l1.m * l2.u};
    }
    ewma_state apply(const ewma_triple& l, const ewma_state& s) const { return {l.a + l.m * s.x, l.u + l.m * s.w}; }
    ewma_state act(double a, const ewma_state& s) const { return {a + c * s.x, 1 + c * s.w}; }
};

// x_i = a_i + c x_{i-1}; the window compose is (c^n, sum c^j a_{i-j})
struct rep_ewms {
    double c = 0.5;
    lin lift(double a) const { return {c, a}; }
    lin compose(const lin& l1, const lin& l2) const { return compose_lin(l1, l2); }
    double apply(const lin& l, double x) const { return l.a + l.m * x; }
    double act(double a, double x) const { return a + c * x; }
};

struct pair_state {
    double z = 0;
    double x = 0;
    bool operator==(const pair_state&) const = default;
};

struct pair_rep {
    double a = 0;
    double b = 0;
    bool operator==(const pair_rep&) const = default;
};

// (z, x) -> (a + z, max(a + z, x))
struct rep_max_of_sum {
    pair_rep lift(double a) const { return {a, a}; }
    pair_rep compose(const pair_rep& l1, const pair_rep& l2) const
    {
        return {l1.a + l2.a, std::max(l1.b + l2.a, l2.b)};
    }
    pair_state apply(const pair_rep& l, const pair_state& s) const
    {
        return {l.a + s.z, std::max(l.b + s.z, s.x)};
    }
    pair_state act(double a, const pair_state& s) const { return {a + s.z, std::max(a + s.z, s.x)}; }
};

// f_{a,b}(z) = max(z + a, b); f1 o f2 = f_{a1+a2, max(b2+a1, b1)}
inline pair_rep compose_clamp(const pair_rep& f1, const pair_rep& f2)
{
    return {f1.a + f2.a, std::max(f2.b + f1.a, f1.b)};
}

inline double apply_clamp(const pair_rep& f, double z) { return std::max(z + f.a, f.b); }

struct quad_rep {
    double a = 0, b = 0, c = 0, d = 0;
    bool operator==(const quad_rep&) const = default;
};

// Kadane: z_i = max(z_{i-1} + a_i, 0), x_i = max(z_i, x_{i-1})
struct rep_max_contiguous_subsequence {
    quad_rep lift(double a) const { return {a, 0, a, 0}; }
    quad_rep compose(const quad_rep& l1, const quad_rep& l2) const
    {
        pair_rep f = compose_clamp({l1.a, l1.b}, {l2.a, l2.b});
        pair_rep g = compose_clamp({l1.c, l1.d}, {l2.a, l2.b});
        return {f.a, f.b, std::max(g.a, l2.c), std::max(g.b, l2.d)};
    }
    pair_state apply(const quad_rep& l, const pair_state& s) const
    {
        return {apply_clamp({l.a, l.b}, s.z), std::max({s.z + l.c, l.d, s.x})};
    }
    pair_state act(double a, const pair_state& s) const
    {
        double z = std::max(s.z + a, 0.0);
        return {z, std::max(z, s.x)};
    }
};

struct cusum_input {
    double z = 0;
    double omega = 0;
};

// x_i = max(0, x_{i-1} + z_i - omega_i)
struct rep_cusum {
    pair_rep lift(const cusum_input& in) const { return {in.z - in.omega, 0}; }
    pair_rep compose(const pair_rep& l1, const pair_rep& l2) const { return compose_clamp(l1, l2); }
    double apply(const pair_rep& l, double x) const { return apply_clamp(l, x); }
    double act(const cusum_input& in, double x) const { return std::max(0.0, x + in.z - in.omega); }
};

// --- continued fractions ------------------------------------------------------

using mat2 = std::array<double, 4>;  // row major: a11 a12 a21 a22

inline mat2 matmul(const mat2& p, const mat2& q)
{
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
            p[2] * q[1] + p[3] * q[3]};
}

inline double frobenius_norm(const mat2& m) { return std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3]); }

// maximum absolute column sum
inline double one_norm(const mat2& m)
{
    return std::max(std::abs(m[0]) + std::abs(m[2]), std::abs(m[1]) + std::abs(m[3]));
}

inline mat2 scaled(const mat2& m, double s) { return {m[0] / s, m[1] / s, m[2] / s, m[3] / s}; }

enum class cfrac_norm {
    none,       // plain product
    frobenius,  // AB / |AB|_F
    one_norm,   // AB / |AB|_1
    left_norm   // AB / |A|_1, not associative
};

// y = a_i + 1/(a_{i-1} + 1/(...)); x is the tail value, infinity for a
// truncated fraction
struct rep_continued_fraction {
    cfrac_norm norm = cfrac_norm::none;

    mat2 lift(double a) const { return {a, 1, 1, 0}; }
    mat2 compose(const mat2& p, const mat2& q) const
    {
        mat2 r = matmul(p, q);
        switch (norm) {
        case cfrac_norm::none: return r;
        case cfrac_norm::frobenius: return scaled(r, frobenius_norm(r));
        case cfrac_norm::one_norm: return scaled(r, one_norm(r));
        case cfrac_norm::left_norm: return scaled(r, one_norm(p));
        }
        return r;
    }
    double apply(const mat2& m, double x) const
    {
        if (std::isinf(x)) return m[0] / m[2];
        return (m[0] * x + m[1]) / (m[2] * x + m[3]);
    }
    double act(double a, double x) const { return std::isinf(x) ? a : a + 1 / x; }
    static mat2 identity() { return {1, 0, 0, 1}; }
};

// --- segmented scan / run statistics ------------------------------------------

struct flagged {
    double a = 0;
    bool reset = false;
};

struct seg_rep {
    double a = 0;
    bool c = false;  // true: no reset inside, x passes through
    double z = 0;
    bool operator==(const seg_rep&) const = default;
};

// x_i = a_i if c_i else a_i * x_{i-1}
template <class Op = op_sum>
struct rep_segmented_scan {
    Op op{};
    seg_rep lift(const flagged& f) const { return {f.a, !f.reset, f.a}; }
    seg_rep compose(const seg_rep& l1, const seg_rep& l2) const
    {
        return {op(l1.a, l2.a), l1.c && l2.c, l1.c ? op(l1.a, l2.z) : l1.z};
    }
    double apply(const seg_rep& l, double x) const { return l.c ? op(l.a, x) : l.z; }
    double act(const flagged& f, double x) const { return f.reset ? f.a : op(f.a, x); }
};

struct run_rep {
    std::int64_t r = 0;
    bool c = false;
    std::int64_t z = 0;
    bool operator==(const run_rep&) const = default;
};

// x_i = x_{i-1} + 1 if a_i > 0 else 0
struct rep_run_statistics {
    run_rep lift(double a) const { return {1, a > 0, 0}; }
    run_rep compose(const run_rep& l1, const run_rep& l2) const
    {
        return {l1.r + l2.r, l1.c && l2.c, l1.c ? l1.r + l2.z : l1.z};
    }
    std::int64_t apply(const run_rep& l, std::int64_t x) const { return l.c ? x + l.r : l.z; }
    std::int64_t act(double a, std::int64_t x) const { return a > 0 ? x + 1 : 0; }
};

} // namespace slidewin::gallery

#endif
