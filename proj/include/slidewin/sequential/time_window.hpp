#ifndef SLIDEWIN_SEQUENTIAL_TIME_WINDOW_HPP
#define SLIDEWIN_SEQUENTIAL_TIME_WINDOW_HPP

#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>

namespace slidewin {

struct non_monotonic_timestamp : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Keeps the items with timestamp >= t_latest - horizon.  An empty horizon
// means nothing is ever evicted.
template <class Agg, class Time = double>
class time_window {
public:
    time_window(Agg agg, std::optional<Time> horizon) : agg_(std::move(agg)), horizon_(horizon) {}

    template <class V>
    auto push(Time t, const V& v)
    {
        if (!stamps_.empty() && t < stamps_.back()) throw non_monotonic_timestamp("time_window: timestamp decreased");
        agg_.insert(v);
        stamps_.push_back(t);
        if (horizon_)
            while (stamps_.front() + *horizon_ < t) {
                agg_.evict();
                stamps_.pop_front();
            }
        return agg_.query();
    }

    std::size_t size() const { return stamps_.size(); }
    Agg& aggregator() { return agg_; }

private:
    Agg agg_;
    std::optional<Time> horizon_;
    std::deque<Time> stamps_;
};

} // namespace slidewin

#endif
