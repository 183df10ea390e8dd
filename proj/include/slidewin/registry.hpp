#ifndef SLIDEWIN_REGISTRY_HPP
#define SLIDEWIN_REGISTRY_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallery.hpp"
#include "sequential.hpp"
#include "vector_window.hpp"

// Operators and reps addressable by name, over rows of text fields.
namespace slidewin::registry {

struct parse_error : std::runtime_error {
    std::size_t line;
    parse_error(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no)
    {
    }
};

// algorithm and operator do not fit, e.g. slick with a non-selection operator
struct incompatible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unknown_name : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using row = std::vector<std::string>;

struct run_options {
    std::string algo = "naive";
    std::size_t n = 1;
    exponentiator expo{};
    double c = 0.5;
};

// --- text <-> numbers -----------------------------------------------------------

inline bool is_na(const std::string& s)
{
    return s.size() == 2 && std::toupper((unsigned char)s[0]) == 'N' && std::toupper((unsigned char)s[1]) == 'A';
}

// shortest round-trip form, at most 17 significant digits
inline std::string format_number(double v)
{
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline std::string format_number(std::int64_t v) { return std::to_string(v); }
inline std::string format_number(std::uint64_t v) { return std::to_string(v); }

inline std::string format_number(const std::optional<double>& v) { return v ? format_number(*v) : "NA"; }

inline std::optional<double> parse_number(const std::string& s, std::size_t line, bool allow_na)
{
    if (is_na(s)) {
        if (allow_na) return std::nullopt;
        throw parse_error(line, "NA not allowed here");
    }
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    double v = 0;
    auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
        throw parse_error(line, "not a number: '" + s + "'");
    return v;
}

inline double parse_double(const row& r, std::size_t col, std::size_t line)
{
    if (col >= r.size()) throw parse_error(line, "expected " + std::to_string(col + 1) + " columns");
    return *parse_number(r[col], line, false);
}

inline std::optional<double> parse_optional(const row& r, std::size_t col, std::size_t line)
{
    if (col >= r.size()) throw parse_error(line, "expected " + std::to_string(col + 1) + " columns");
    return parse_number(r[col], line, true);
}

inline void expect_columns(const row& r, std::size_t cols, std::size_t line)
{
    if (r.size() != cols)
        throw parse_error(line, "expected " + std::to_string(cols) + " column(s), got " + std::to_string(r.size()));
}

// --- algorithm dispatch ---------------------------------------------------------

inline const std::vector<std::string>& op_algorithms()
{
    static const std::vector<std::string> names = {
        "naive", "twostacks:cie", "twostacks:ie", "twostacks:ei", "twostacks:v3", "twostacks:v4", "dew1",
        "dew2",  "dew1s",         "dew2s",        "daba",         "slick",        "soe",          "dps",
        "vector"};
    return names;
}

inline const std::vector<std::string>& rep_algorithms()
{
    static const std::vector<std::string> names = {"naive",        "twostacks:cie", "twostacks:ie", "twostacks:ei",
                                                   "twostacks:v3", "twostacks:v4",  "vector"};
    return names;
}

namespace detail {

inline bool known(const std::vector<std::string>& names, const std::string& s)
{
    return std::find(names.begin(), names.end(), s) != names.end();
}

inline std::string variant_suffix(const std::string& algo)
{
    return algo.substr(std::string("twostacks:").size());
}

template <class T, class Op>
std::vector<T> run_op(Op op, const run_options& o, const std::vector<T>& data, bool selection)
{
    const std::string& a = o.algo;
    if (a == "naive") return naive_window(op, data, o.n);
    if (a.rfind("twostacks:", 0) == 0) return two_stacks(op, parse_two_stacks_variant(variant_suffix(a)), data, o.n);
    if (a == "dew1" || a == "dew2" || a == "dew1s" || a == "dew2s")
        return dew(op, a[3] == '1' ? 1 : 2, data, o.n, a.size() == 5 ? dew_impl::sentinel : dew_impl::basic);
    if (a == "daba") {
        auto w = make_daba_lite<T>(op);
        return run_fixed_window(w, data, o.n);
    }
    if (a == "slick") {
        if (!selection) throw incompatible("slick requires a selection operator");
        auto w = make_slick_deque<T>(op);
        return run_fixed_window(w, data, o.n);
    }
    if (a == "vector") {
        using scheme = fixed_len_scheme<T, Op>;
        scheme ctx{op};
        return scheme::extract(window_compose(ctx, scheme::embed(data), o.n, o.expo));
    }
    if (a == "soe" || a == "dps") throw incompatible(a + " requires a group operator (sum)");
    throw unknown_name("unknown algorithm: " + a);
}

template <class Rep, class A, class X>
std::vector<X> run_rep(const Rep& rep, const run_options& o, const std::vector<A>& a, const X& pad)
{
    std::vector<X> x(a.size(), pad);
    if (o.algo == "naive")
        return naive_windowed_recurrence([&](const A& e, const X& s) { return X(rep.act(e, s)); }, a, x, o.n, pad);
    if (o.algo.rfind("twostacks:", 0) == 0)
        return meta_windowed_recurrence(rep, a, x, o.n, pad, parse_two_stacks_variant(variant_suffix(o.algo)));
    if (o.algo == "vector") {
        if (a.empty()) return {};
        return window_apply(make_fixed_len_action<A>(rep, pad), o.n, a, x, o.expo);
    }
    if (known(op_algorithms(), o.algo)) throw incompatible(o.algo + " needs an associative operator, not a rep");
    throw unknown_name("unknown algorithm: " + o.algo);
}

template <class T, class F>
std::vector<std::string> format_all(const std::vector<T>& y, F f)
{
    std::vector<std::string> out;
    out.reserve(y.size());
    for (auto& v : y) out.push_back(f(v));
    return out;
}

} // namespace detail

using runner = std::function<std::vector<std::string>(const run_options&, const std::vector<row>&)>;

// 1-column numeric input, optionally allowing NA
inline std::vector<double> column(const std::vector<row>& rows)
{
    std::vector<double> v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        expect_columns(rows[i], 1, i + 1);
        v.push_back(parse_double(rows[i], 0, i + 1));
    }
    return v;
}

inline std::vector<std::optional<double>> optional_column(const std::vector<row>& rows)
{
    std::vector<std::optional<double>> v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        expect_columns(rows[i], 1, i + 1);
        v.push_back(parse_optional(rows[i], 0, i + 1));
    }
    return v;
}

inline const std::map<std::string, runner>& operators()
{
    using namespace gallery;
    using detail::format_all;
    using detail::run_op;
    static const std::map<std::string, runner> table = {
        {"sum",
         [](const run_options& o, const std::vector<row>& rows) {
             auto data = optional_column(rows);
             std::vector<std::optional<double>> y;
             if (o.algo == "soe")
                 y = subtract_on_evict(op_sum_undef{}, op_sub_undef{}, data, o.n);
             else if (o.algo == "dps")
                 y = difference_of_prefix_sums(op_sum_undef{}, op_sub_undef{}, data, o.n);
             else
                 y = run_op(op_sum_undef{}, o, data, false);
             return format_all(y, [](auto& v) { return format_number(v); });
         }},
        {"product",
         [](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_op(op_product{}, o, column(rows), false),
                               [](double v) { return format_number(v); });
         }},
        {"max",
         [](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_op(op_max{}, o, column(rows), true), [](double v) { return format_number(v); });
         }},
        {"min",
         [](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_op(op_min{}, o, column(rows), true), [](double v) { return format_number(v); });
         }},
        {"concat",
         [](const run_options& o, const std::vector<row>& rows) {
             std::vector<std::string> data;
             for (std::size_t i = 0; i < rows.size(); ++i) {
                 expect_columns(rows[i], 1, i + 1);
                 data.push_back(rows[i][0]);
             }
             return run_op(op_concat{}, o, data, false);
         }},
        {"coalesce",
         [](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_op(op_coalesce{}, o, optional_column(rows), true),
                               [](auto& v) { return format_number(v); });
         }},
        {"maxcount",
         [](const run_options& o, const std::vector<row>& rows) {
             std::vector<max_count> data;
             for (double v : column(rows)) data.push_back({v, 1});
             return format_all(run_op(rep_max_count{}, o, data, false), [](const max_count& m) {
                 return format_number(m.value) + "," + std::to_string(m.count);
             });
         }},
    };
    return table;
}

inline runner argmax_runner(gallery::argmax_mode mode)
{
    return [mode](const run_options& o, const std::vector<row>& rows) {
        std::vector<gallery::arg_value> data;
        auto col = column(rows);
        for (std::size_t i = 0; i < col.size(); ++i) data.push_back({col[i], {i + 1}});
        auto y = detail::run_op(gallery::rep_argmax{mode}, o, data, mode != gallery::argmax_mode::set);
        return detail::format_all(y, [](const gallery::arg_value& v) {
            std::string s = format_number(v.value) + ",";
            bool first = true;
            for (auto k : v.keys) {
                s += (first ? "" : " ") + std::to_string(k);
                first = false;
            }
            return s;
        });
    };
}

inline const std::map<std::string, runner>& reps()
{
    using namespace gallery;
    using detail::format_all;
    using detail::run_rep;
    auto num = [](double v) { return format_number(v); };
    auto cfrac = [num](cfrac_norm norm) -> runner {
        return [norm, num](const run_options& o, const std::vector<row>& rows) {
            return format_all(run_rep(rep_continued_fraction{norm}, o, column(rows),
                                      std::numeric_limits<double>::infinity()),
                              num);
        };
    };
    static const std::map<std::string, runner> table = {
        {"linrec",
         [num](const run_options& o, const std::vector<row>& rows) {
             std::vector<lin> a;
             for (std::size_t i = 0; i < rows.size(); ++i) {
                 expect_columns(rows[i], 2, i + 1);
                 a.push_back({parse_double(rows[i], 0, i + 1), parse_double(rows[i], 1, i + 1)});
             }
             return format_all(run_rep(rep_linear_recurrence{}, o, a, 0.0), num);
         }},
        {"sum_missing",
         [num](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_rep(rep_sum_missing{}, o, optional_column(rows), 0.0), num);
         }},
        {"sum_scale_missing",
         [num](const run_options& o, const std::vector<row>& rows) {
             std::vector<scaled_missing> a;
             for (std::size_t i = 0; i < rows.size(); ++i) {
                 expect_columns(rows[i], 2, i + 1);
                 a.push_back({parse_double(rows[i], 0, i + 1), parse_optional(rows[i], 1, i + 1)});
             }
             return format_all(run_rep(rep_sum_scale_missing{}, o, a, 0.0), num);
         }},
        {"ewma1",
         [num](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_rep(rep_ewma_type1{o.c}, o, column(rows), 0.0), num);
         }},
        {"ewma2",
         [num](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_rep(rep_ewma_type2{o.c}, o, column(rows), ewma_state{}),
                               [num](const ewma_state& s) { return num(s.average()); });
         }},
        {"ewms",
         [num](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_rep(rep_ewms{o.c}, o, column(rows), 0.0), num);
         }},
        {"maxsum",
         [num](const run_options& o, const std::vector<row>& rows) {
             pair_state pad{0, -std::numeric_limits<double>::infinity()};
             return format_all(run_rep(rep_max_of_sum{}, o, column(rows), pad),
                               [num](const pair_state& s) { return num(s.x); });
         }},
        {"mcs",
         [num](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_rep(rep_max_contiguous_subsequence{}, o, column(rows), pair_state{}),
                               [num](const pair_state& s) { return num(s.x); });
         }},
        {"cusum",
         [num](const run_options& o, const std::vector<row>& rows) {
             std::vector<cusum_input> a;
             for (std::size_t i = 0; i < rows.size(); ++i) {
                 expect_columns(rows[i], 2, i + 1);
                 a.push_back({parse_double(rows[i], 0, i + 1), parse_double(rows[i], 1, i + 1)});
             }
             return format_all(run_rep(rep_cusum{}, o, a, 0.0), num);
         }},
        {"segscan",
         [num](const run_options& o, const std::vector<row>& rows) {
             std::vector<flagged> a;
             for (std::size_t i = 0; i < rows.size(); ++i) {
                 expect_columns(rows[i], 2, i + 1);
                 double f = parse_double(rows[i], 1, i + 1);
                 if (f != 0 && f != 1) throw parse_error(i + 1, "reset flag must be 0 or 1");
                 a.push_back({parse_double(rows[i], 0, i + 1), f == 1});
             }
             return format_all(run_rep(rep_segmented_scan<>{}, o, a, 0.0), num);
         }},
        {"runstats",
         [](const run_options& o, const std::vector<row>& rows) {
             return format_all(run_rep(rep_run_statistics{}, o, column(rows), std::int64_t(0)),
                               [](std::int64_t v) { return std::to_string(v); });
         }},
        {"cfrac", cfrac(cfrac_norm::none)},
        {"cfrac.frobenius", cfrac(cfrac_norm::frobenius)},
        {"cfrac.one_norm", cfrac(cfrac_norm::one_norm)},
        {"cfrac.left_norm", cfrac(cfrac_norm::left_norm)},
    };
    return table;
}

inline std::vector<std::string> names()
{
    std::vector<std::string> r;
    for (auto& [k, v] : operators()) r.push_back(k);
    r.push_back("argmax.earliest");
    r.push_back("argmax.latest");
    r.push_back("argmax.set");
    for (auto& [k, v] : reps()) r.push_back(k);
    return r;
}

inline bool is_rep(const std::string& name) { return reps().count(name) != 0; }

inline std::vector<std::string> run(const std::string& name, const run_options& o, const std::vector<row>& rows)
{
    if (o.n == 0) throw std::invalid_argument("window length must be >= 1");
    if (auto it = operators().find(name); it != operators().end()) return it->second(o, rows);
    if (name == "argmax.earliest") return argmax_runner(gallery::argmax_mode::earliest)(o, rows);
    if (name == "argmax.latest") return argmax_runner(gallery::argmax_mode::latest)(o, rows);
    if (name == "argmax.set") return argmax_runner(gallery::argmax_mode::set)(o, rows);
    if (auto it = reps().find(name); it != reps().end()) return it->second(o, rows);
    throw unknown_name("unknown operator: " + name);
}

// split CSV text into rows, one per line; row i is line i+1
inline std::vector<row> parse_csv(const std::string& text)
{
    std::vector<row> rows;
    std::size_t line_no = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        row r;
        std::size_t p = 0;
        for (;;) {
            std::size_t q = line.find(',', p);
            std::string f = line.substr(p, q == std::string::npos ? std::string::npos : q - p);
            auto b = f.find_first_not_of(" \t"), e = f.find_last_not_of(" \t");
            r.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
            if (q == std::string::npos) break;
            p = q + 1;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace slidewin::registry

#endif
