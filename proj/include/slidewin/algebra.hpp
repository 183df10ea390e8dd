#ifndef SLIDEWIN_ALGEBRA_HPP
#define SLIDEWIN_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slidewin {

// op(x, y) returns x * y.  Nothing here assumes associativity.
template <class Op, class T>
concept binary_op = requires(const Op& op, const T& x, const T& y) {
    { op(x, y) } -> std::convertible_to<T>;
};

// act(a, x) returns a . x
template <class Act, class A, class X>
concept set_action = requires(const Act& act, const A& a, const X& x) {
    { act(a, x) } -> std::convertible_to<X>;
};

template <class Op>
struct opposite {
    Op op;
    template <class T>
    T operator()(const T& x, const T& y) const { return op(y, x); }
};

template <class Op>
opposite<Op> make_opposite(Op op) { return {std::move(op)}; }

inline bool approx_equal(double x, double y, double rel = 1e-9, double abs = 1e-9)
{
    if (x == y) return true;
    if (std::isnan(x) || std::isnan(y)) return false;
    if (std::isinf(x) || std::isinf(y)) return false;
    double d = std::fabs(x - y);
    return d <= abs || d <= rel * std::max(std::fabs(x), std::fabs(y));
}

// --- finite carriers ---------------------------------------------------------

inline constexpr std::size_t max_carrier = 8;

struct not_selective : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// binary relation on {0, .., size-1}
class relation {
public:
    explicit relation(std::size_t size) : n_(size)
    {
        if (size == 0 || size > max_carrier)
            throw std::invalid_argument("relation: carrier size must be in 1..8");
        for (auto& row : m_) row.fill(false);
    }

    relation(std::size_t size, std::initializer_list<std::pair<int, int>> pairs) : relation(size)
    {
        for (auto [x, y] : pairs) set(x, y);
    }

    std::size_t size() const { return n_; }
    bool operator()(int x, int y) const { return m_.at(x).at(y); }
    void set(int x, int y, bool v = true)
    {
        if (x < 0 || y < 0 || std::size_t(x) >= n_ || std::size_t(y) >= n_)
            throw std::out_of_range("relation: element outside carrier");
        m_[x][y] = v;
    }

    bool operator==(const relation& o) const
    {
        if (n_ != o.n_) return false;
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y)
                if (m_[x][y] != o.m_[x][y]) return false;
        return true;
    }

private:
    std::size_t n_;
    std::array<std::array<bool, max_carrier>, max_carrier> m_{};
};

// an operation on {0, .., size-1} stored as a multiplication table
class table_op {
public:
    table_op(std::size_t size, std::vector<int> table) : n_(size), t_(std::move(table))
    {
        if (size == 0 || size > max_carrier || t_.size() != size * size)
            throw std::invalid_argument("table_op: bad table");
        for (int v : t_)
            if (v < 0 || std::size_t(v) >= n_) throw std::invalid_argument("table_op: value outside carrier");
    }

    // rows[x][y] = x * y
    table_op(std::initializer_list<std::initializer_list<int>> rows)
        : table_op(rows.size(), flatten(rows)) {}

    std::size_t size() const { return n_; }
    int operator()(int x, int y) const { return t_[std::size_t(x) * n_ + std::size_t(y)]; }
    bool operator==(const table_op&) const = default;

private:
    static std::vector<int> flatten(std::initializer_list<std::initializer_list<int>> rows)
    {
        std::vector<int> out;
        for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
        return out;
    }
    std::size_t n_;
    std::vector<int> t_;
};

// x *_R y = y if x R y else x
inline table_op selection_op_from_relation(const relation& rel)
{
    std::size_t n = rel.size();
    std::vector<int> t(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            t[x * n + y] = rel(int(x), int(y)) ? int(y) : int(x);
    return {n, std::move(t)};
}

// x R_* y iff x * y = y
template <class Op>
relation relation_from_op(const Op& op, std::size_t size)
{
    relation r(size);
    for (int x = 0; x < int(size); ++x)
        for (int y = 0; y < int(size); ++y) {
            int v = op(x, y);
            if (v != x && v != y)
                throw not_selective("relation_from_op: op(" + std::to_string(x) + "," +
                                    std::to_string(y) + ") is neither argument");
            if (v == y) r.set(x, y);
        }
    return r;
}

template <class Op>
bool check_associative(const Op& op, std::size_t size)
{
    for (int x = 0; x < int(size); ++x)
        for (int y = 0; y < int(size); ++y)
            for (int z = 0; z < int(size); ++z)
                if (op(op(x, y), z) != op(x, op(y, z))) return false;
    return true;
}

template <class Op>
bool check_selective(const Op& op, std::size_t size)
{
    for (int x = 0; x < int(size); ++x)
        for (int y = 0; y < int(size); ++y) {
            int v = op(x, y);
            if (v != x && v != y) return false;
        }
    return true;
}

struct relation_properties {
    bool reflexive = true;
    bool connected = true;
    bool antisymmetric = true;
    bool transitive = true;
};

inline relation_properties check_relation_properties(const relation& r)
{
    relation_properties p;
    int n = int(r.size());
    for (int x = 0; x < n; ++x) {
        if (!r(x, x)) p.reflexive = false;
        for (int y = 0; y < n; ++y) {
            if (x != y && !r(x, y) && !r(y, x)) p.connected = false;
            if (x != y && r(x, y) && r(y, x)) p.antisymmetric = false;
            for (int z = 0; z < n; ++z)
                if (r(x, y) && r(y, z) && !r(x, z)) p.transitive = false;
        }
    }
    return p;
}

// all 2^(n(n-1)) reflexive relations on an n element carrier
inline std::vector<relation> all_reflexive_relations(std::size_t n)
{
    std::vector<std::pair<int, int>> off;
    for (int x = 0; x < int(n); ++x)
        for (int y = 0; y < int(n); ++y)
            if (x != y) off.emplace_back(x, y);
    if (off.size() > 20) throw std::invalid_argument("all_reflexive_relations: carrier too large");
    std::vector<relation> out;
    for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
        relation r(n);
        for (int x = 0; x < int(n); ++x) r.set(x, x);
        for (std::size_t b = 0; b < off.size(); ++b)
            if (mask >> b & 1u) r.set(off[b].first, off[b].second);
        out.push_back(r);
    }
    return out;
}

// a function on the carrier, as its list of values
using finite_function = std::vector<int>;

// closure under composition of { x -> act(a, x) : a in 0..n_elems-1 }
template <class Act>
std::set<finite_function> left_action_closure(const Act& act, std::size_t n_elems, std::size_t carrier)
{
    if (carrier == 0 || carrier > max_carrier) throw std::invalid_argument("left_action_closure: carrier size");
    std::set<finite_function> gens;
    for (int a = 0; a < int(n_elems); ++a) {
        finite_function f(carrier);
        for (int x = 0; x < int(carrier); ++x) f[x] = act(a, x);
        gens.insert(f);
    }
    std::set<finite_function> out = gens;
    std::vector<finite_function> todo(gens.begin(), gens.end());
    while (!todo.empty()) {
        finite_function g = todo.back();
        todo.pop_back();
        for (const auto& f : gens) {
            finite_function h(carrier);
            for (std::size_t x = 0; x < carrier; ++x) h[x] = f[g[x]];
            if (out.insert(h).second) todo.push_back(h);
        }
    }
    return out;
}

template <class Op>
std::set<finite_function> left_action_closure(const Op& op, std::size_t carrier)
{
    return left_action_closure([&](int a, int x) { return op(a, x); }, carrier, carrier);
}

// --- semidirect product Z+ x_L A ---------------------------------------------

template <class P>
struct semidirect_element {
    std::uint64_t index = 1;
    P payload{};
};

// <i,a> * <j,b> = <i+j, compose(a, shift(i, b))>
template <class Compose, class Shift>
auto semidirect_op(Compose compose, Shift shift)
{
    return [compose = std::move(compose), shift = std::move(shift)]<class P>(
               const semidirect_element<P>& u, const semidirect_element<P>& v) {
        return semidirect_element<P>{u.index + v.index, compose(u.payload, shift(u.index, v.payload))};
    };
}

// --- representations of function composition ----------------------------------
//
// A rep provides lift(a), compose(l1, l2), apply(l, x) and act(a, x).

template <class R, class A, class X>
concept composition_rep = requires(const R& r, const A& a, const X& x) {
    r.lift(a);
    r.compose(r.lift(a), r.lift(a));
    { r.apply(r.lift(a), x) } -> std::convertible_to<X>;
    { r.act(a, x) } -> std::convertible_to<X>;
};

template <class R, class A, class X, class Eq>
bool lift_faithful(const R& r, const A& a, const X& x, Eq eq)
{
    return eq(r.apply(r.lift(a), x), r.act(a, x));
}

template <class R, class L, class X, class Eq>
bool semi_associative(const R& r, const L& l1, const L& l2, const X& x, Eq eq)
{
    return eq(r.apply(l1, r.apply(l2, x)), r.apply(r.compose(l1, l2), x));
}

template <class R, class L, class X, class Eq>
bool bracketing_independent(const R& r, const L& l1, const L& l2, const L& l3, const X& x, Eq eq)
{
    return eq(r.apply(r.compose(l1, r.compose(l2, l3)), x), r.apply(r.compose(r.compose(l1, l2), l3), x));
}

} // namespace slidewin

#endif
