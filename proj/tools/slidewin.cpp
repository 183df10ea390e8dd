// slidewin: run window algorithms, check operation counts, tabulate
// exponentiation methods.
//
// exit codes: 0 ok, 1 usage, 2 input parse error, 3 algorithm/operator
// mismatch, 4 count mismatch

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "slidewin/slidewin.hpp"

namespace sw = slidewin;
using json = nlohmann::json;

namespace {

struct range {
    std::uint64_t lo = 1, hi = 1;
};

// "7" or "2..32"
range parse_range(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            auto v = std::stoull(s);
            return {v, v};
        }
        return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad range '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct options {
    std::string algo = "naive";
    std::string op = "sum";
    std::string n = "1";
    std::string lengths;
    std::string method = "binary";
    std::string k = "1";
    std::string items;
    std::string input, output;
    std::string format = "csv";
    double c = 0.5;
    bool flip = false;
};

int cmd_run(const options& o)
{
    sw::registry::run_options ro;
    ro.algo = o.algo;
    ro.expo = sw::parse_exponentiator(o.method, unsigned(parse_range(o.k).lo), o.flip);
    ro.c = o.c;
    std::vector<std::size_t> lengths;
    if (o.lengths.empty()) {
        lengths.push_back(parse_range(o.n).lo);
    } else {
        for (auto& s : split(o.lengths, ',')) lengths.push_back(parse_range(s).lo);
        if (lengths.empty()) throw CLI::ValidationError("--lengths is empty");
    }
    auto rows = sw::registry::parse_csv(read_input(o.input));
    // one column per window length
    std::vector<std::vector<std::string>> ys;
    for (auto n : lengths) {
        ro.n = n;
        ys.push_back(sw::registry::run(o.op, ro, rows));
    }
    std::string text;
    if (o.format == "json") {
        json j{{"algo", o.algo}, {"op", o.op}};
        if (o.lengths.empty())
            j["n"] = lengths[0], j["y"] = ys[0];
        else
            j["lengths"] = lengths, j["y"] = ys;
        text = j.dump() + "\n";
    } else {
        for (std::size_t i = 0; i < ys[0].size(); ++i) {
            for (std::size_t c = 0; c < ys.size(); ++c) text += (c ? "," : "") + ys[c][i];
            text += "\n";
        }
    }
    write_output(o.output, text);
    return 0;
}

struct count_cell {
    std::string algo;
    std::uint64_t n, N, instrumented, formula, max_increment;
    bool increments_match;
    bool match() const { return instrumented == formula && increments_match; }
};

count_cell count_one(const std::string& algo, std::uint64_t n, std::uint64_t N)
{
    sw::op_counter counter;
    auto op = sw::instrument(sw::gallery::op_sum{}, counter);
    std::vector<std::int64_t> data(N);
    for (std::uint64_t i = 0; i < N; ++i) data[i] = std::int64_t(i % 7) - 3;
    count_cell c{algo, n, N, 0, 0, 0, false};
    sw::increment_trace expected;
    if (algo.rfind("twostacks:", 0) == 0) {
        auto v = sw::parse_two_stacks_variant(algo.substr(10));
        (void)sw::two_stacks(op, v, data, n);
        c.formula = sw::count_two_stacks(v, n, N);
        expected = sw::two_stacks_increments(v, n, N);
    } else if (algo == "dew1" || algo == "dew2") {
        int variant = algo == "dew1" ? 1 : 2;
        (void)sw::dew(op, variant, data, n);
        c.formula = sw::count_dew(variant, n, N);
        expected = sw::dew_increments(variant, n, N);
    } else {
        throw sw::registry::unknown_name("counts: unsupported algorithm " + algo);
    }
    c.instrumented = counter.total;
    c.max_increment = counter.max_increment();
    c.increments_match = counter.increments() == expected;
    return c;
}

int cmd_counts(const options& o)
{
    auto algos = split(o.algo == "naive" ? "twostacks:cie,twostacks:ie,twostacks:ei,twostacks:v3,twostacks:v4,dew1,dew2"
                                         : o.algo,
                       ',');
    range nr = parse_range(o.n);
    std::vector<count_cell> cells;
    for (auto& a : algos)
        for (auto n = nr.lo; n <= nr.hi; ++n) {
            range Nr = o.items.empty() ? range{1, 4 * n} : parse_range(o.items);
            for (auto N = Nr.lo; N <= Nr.hi; ++N) cells.push_back(count_one(a, n, N));
        }
    bool all = true;
    std::string text;
    if (o.format == "csv") {
        text = "algo,n,N,instrumented,formula,match,max_increment\n";
        for (auto& c : cells)
            text += c.algo + "," + std::to_string(c.n) + "," + std::to_string(c.N) + "," +
                    std::to_string(c.instrumented) + "," + std::to_string(c.formula) + "," +
                    (c.match() ? "true" : "false") + "," + std::to_string(c.max_increment) + "\n";
    } else {
        json j;
        j["cells"] = json::array();
        for (auto& c : cells)
            j["cells"].push_back({{"algo", c.algo},
                                  {"n", c.n},
                                  {"N", c.N},
                                  {"instrumented", c.instrumented},
                                  {"formula", c.formula},
                                  {"match", c.match()},
                                  {"max_increment", c.max_increment}});
        text = j.dump(1) + "\n";
    }
    for (auto& c : cells) all = all && c.match();
    write_output(o.output, text);
    return all ? 0 : 4;
}

int cmd_expo(const options& o)
{
    range nr = parse_range(o.n);
    range kr = parse_range(o.k);
    auto methods = split(o.method, ',');
    std::string text = "kind,method,n,k,value,best\n";
    for (auto& m : methods) {
        if (m != "binary" && m != "brauer" && m != "thurber")
            throw sw::registry::unknown_name("expo: method must be binary, brauer or thurber");
        std::map<unsigned, std::uint64_t> first, tally;
        for (auto n = nr.lo; n <= nr.hi; ++n) {
            if (n == 0) continue;
            unsigned best = m == "brauer" ? sw::brauer_best_k(n) : m == "thurber" ? sw::thurber_best_k(n) : 1;
            if (!first.count(best)) first[best] = n;
            ++tally[best];
            if (m == "binary") {
                text += "count,binary," + std::to_string(n) + ",1," + std::to_string(sw::binary_count(n)) + ",1\n";
                continue;
            }
            for (auto k = kr.lo; k <= kr.hi; ++k) {
                auto cnt = m == "brauer" ? sw::brauer_count(n, unsigned(k)) : sw::thurber_count(n, unsigned(k));
                text += "count," + m + "," + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(cnt) +
                        "," + (k == best ? "1" : "0") + "\n";
            }
        }
        if (m == "binary") continue;
        const double total = double(nr.hi - std::max<std::uint64_t>(nr.lo, 1) + 1);
        for (auto& [k, n] : first) text += "first," + m + "," + std::to_string(n) + "," + std::to_string(k) + ",,\n";
        for (auto& [k, t] : tally) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", 100.0 * double(t) / total);
            text += "percent," + m + "," + std::to_string(nr.hi) + "," + std::to_string(k) + "," + buf + ",\n";
        }
    }
    if (o.format == "json") {
        json rows = json::array();
        auto lines = split(text, '\n');
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto cols = sw::registry::parse_csv(lines[i]).front();
            rows.push_back({{"kind", cols[0]}, {"method", cols[1]}, {"n", cols[2]}, {"k", cols[3]}, {"value", cols[4]},
                            {"best", cols[5]}});
        }
        text = json{{"rows", rows}}.dump(1) + "\n";
    }
    write_output(o.output, text);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sliding window aggregation toolkit"};
    app.require_subcommand(1);
    options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output,-o", o.output, "output path (default stdout)");
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto run = app.add_subcommand("run", "run one algorithm over an input CSV");
    run->add_option("--algo", o.algo, "naive, twostacks:{cie,ie,ei,v3,v4}, dew1, dew2, dew1s, dew2s, daba, slick, soe, dps, vector");
    run->add_option("--op", o.op, "operator or rep name");
    auto n_opt = run->add_option("--n", o.n, "window length");
    run->add_option("--lengths", o.lengths, "comma list of window lengths, one output column each")->excludes(n_opt);
    run->add_option("--input,-i", o.input, "input CSV (default stdin)");
    run->add_option("--method", o.method, "exponentiation for --algo vector: binary, binary_down, parallel, brauer, thurber");
    run->add_option("--k", o.k, "window bits for brauer/thurber");
    run->add_flag("--flip", o.flip, "use the flipped bracketing");
    run->add_option("--c", o.c, "decay constant for ewma1, ewma2, ewms");
    add_common(run);

    auto counts = app.add_subcommand("counts", "compare instrumented operation counts with the closed forms");
    counts->add_option("--algo", o.algo, "comma list of twostacks:<variant>, dew1, dew2 (default all)");
    counts->add_option("--n", o.n, "window lengths, e.g. 2..32");
    counts->add_option("--items", o.items, "data lengths N, e.g. 1..40 (default 1..4n)");
    add_common(counts);

    auto expo = app.add_subcommand("expo", "tabulate exponentiation counts and best k");
    expo->add_option("--n", o.n, "exponents, e.g. 1..1000");
    expo->add_option("--method", o.method, "comma list of binary, brauer, thurber");
    expo->add_option("--k", o.k, "k range, e.g. 1..5");
    add_common(expo);

    auto list = app.add_subcommand("list", "list operator and rep names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (counts->parsed() && counts->count("--format") == 0) o.format = "json";
        if (*run) {
            if (run->count("--n") == 0 && run->count("--lengths") == 0) {
                std::cerr << "run: --n or --lengths is required\n";
                return 1;
            }
            return cmd_run(o);
        }
        if (*counts) return cmd_counts(o);
        if (*expo) return cmd_expo(o);
        if (*list) {
            for (auto& name : sw::registry::names()) std::cout << name << (sw::registry::is_rep(name) ? " rep" : " op") << "\n";
            return 0;
        }
    } catch (const sw::registry::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sw::registry::incompatible& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
