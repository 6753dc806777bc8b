#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numerals.hpp"

namespace hindman {

// Total 1-1 function on the positive integers, given as a finite exception
// table over [1, threshold] plus the affine tail x -> x + tail_offset at
// every argument the table does not cover. Range membership is decidable
// from the structure (range_oracle below); consumers that model a mere
// enumeration must stick to bounded_range_query.
class EnumeratedFunction {
public:
    EnumeratedFunction(std::vector<std::pair<nat, nat>> exceptions, nat tail_offset, nat threshold)
        : exceptions_(std::move(exceptions)), tail_offset_(tail_offset), threshold_(threshold) {
        if (tail_offset_ == 0)
            throw std::domain_error("EnumeratedFunction: tail offset must be positive");
        std::sort(exceptions_.begin(), exceptions_.end());
        for (std::size_t j = 0; j < exceptions_.size(); ++j) {
            auto [x, v] = exceptions_[j];
            if (x == 0 || x > threshold_)
                throw std::domain_error("EnumeratedFunction: exception argument outside [1, threshold]");
            if (v == 0)
                throw std::domain_error("EnumeratedFunction: exception value must be positive");
            if (j > 0 && exceptions_[j - 1].first == x)
                throw std::domain_error("EnumeratedFunction: duplicate exception argument");
        }
        // Injectivity: exception values pairwise distinct and never equal to a
        // tail value x + c produced at some argument outside the table.
        std::vector<nat> values;
        values.reserve(exceptions_.size());
        for (auto [x, v] : exceptions_) values.push_back(v);
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end())
            throw std::domain_error("EnumeratedFunction: exception values collide");
        for (nat v : values) {
            if (v <= tail_offset_) continue;
            nat x = v - tail_offset_;
            if (!has_exception(x))
                throw std::domain_error("EnumeratedFunction: exception value collides with tail");
        }
    }

    nat eval(nat x) const {
        if (x == 0) throw std::domain_error("EnumeratedFunction::eval: x must be positive");
        if (x <= threshold_) {
            auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(),
                                       std::pair<nat, nat>{x, 0});
            if (it != exceptions_.end() && it->first == x) return it->second;
        }
        return checked_add(x, tail_offset_);
    }

    nat tail_offset() const { return tail_offset_; }
    nat threshold() const { return threshold_; }
    const std::vector<std::pair<nat, nat>>& exceptions() const { return exceptions_; }

    bool has_exception(nat x) const {
        auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(),
                                   std::pair<nat, nat>{x, 0});
        return it != exceptions_.end() && it->first == x;
    }

    // Compact one-line form, stable across runs; used by dump headers.
    std::string describe() const {
        std::ostringstream out;
        out << "{";
        for (std::size_t j = 0; j < exceptions_.size(); ++j) {
            if (j > 0) out << ",";
            out << exceptions_[j].first << "->" << exceptions_[j].second;
        }
        out << "|tail+" << tail_offset_ << ",T=" << threshold_ << "}";
        return out.str();
    }

private:
    std::vector<std::pair<nat, nat>> exceptions_;  // sorted by argument
    nat tail_offset_;
    nat threshold_;
};

template <typename F>
concept QueryFunction = requires(const F& f, nat x) {
    { f.eval(x) } -> std::convertible_to<nat>;
};

// The only range access available to decoders: is there a witness x <= bound
// with f(x) = y? Evaluates f at nothing beyond `bound`.
template <QueryFunction F>
bool bounded_range_query(const F& f, nat y, nat bound) {
    for (nat x = 1; x <= bound; ++x)
        if (f.eval(x) == y) return true;
    return false;
}

// Privileged ground truth: decides y in range(f) from the table structure.
// Equals bounded_range_query(f, y, max(threshold, y)).
inline bool range_oracle(const EnumeratedFunction& f, nat y) {
    for (auto [x, v] : f.exceptions())
        if (v == y) return true;
    if (y <= f.tail_offset()) return false;
    return !f.has_exception(y - f.tail_offset());
}

// Privileged: the least x with f(x) = y, if any.
inline std::optional<nat> least_witness(const EnumeratedFunction& f, nat y) {
    std::optional<nat> best;
    for (auto [x, v] : f.exceptions())
        if (v == y && (!best || x < *best)) best = x;
    if (y > f.tail_offset()) {
        nat x = y - f.tail_offset();
        if (!f.has_exception(x) && (!best || x < *best)) best = x;
    }
    return best;
}

struct ScheduleEntry {
    nat stage;
    int value;  // 0 or 1
    bool operator==(const ScheduleEntry&) const = default;
};

// Finite stand-in for a limit-computable {0,1}-valued approximation f(k,s):
// each index k carries a stage-sorted mind-change schedule opening at stage 0,
// indices without a schedule sit on a constant default. The limit always
// exists and stabilizes at the last scheduled stage.
class LimitApproximation {
public:
    LimitApproximation(std::map<nat, std::vector<ScheduleEntry>> schedules, int default_value,
                       nat horizon)
        : schedules_(std::move(schedules)), default_value_(default_value), horizon_(horizon) {
        if (default_value_ != 0 && default_value_ != 1)
            throw std::domain_error("LimitApproximation: default value must be 0 or 1");
        for (const auto& [k, schedule] : schedules_) {
            if (k > horizon_)
                throw std::domain_error("LimitApproximation: schedule index beyond horizon");
            if (schedule.empty() || schedule.front().stage != 0)
                throw std::domain_error("LimitApproximation: schedule must open at stage 0");
            for (std::size_t j = 0; j < schedule.size(); ++j) {
                if (schedule[j].value != 0 && schedule[j].value != 1)
                    throw std::domain_error("LimitApproximation: schedule value must be 0 or 1");
                if (j > 0 && schedule[j].stage <= schedule[j - 1].stage)
                    throw std::domain_error("LimitApproximation: stages must strictly increase");
            }
        }
    }

    // f(k, s): the last scheduled value at a stage <= s.
    int eval(nat k, nat s) const {
        const auto* schedule = find(k);
        if (!schedule) return default_value_;
        int value = schedule->front().value;
        for (const auto& entry : *schedule) {
            if (entry.stage > s) break;
            value = entry.value;
        }
        return value;
    }

    // A(k) = lim_s f(k, s).
    int limit_value(nat k) const {
        const auto* schedule = find(k);
        return schedule ? schedule->back().value : default_value_;
    }

    nat stabilization_stage(nat k) const {
        const auto* schedule = find(k);
        return schedule ? schedule->back().stage : 0;
    }

    nat max_stabilization_stage() const {
        nat m = 0;
        for (const auto& [k, schedule] : schedules_) m = std::max(m, schedule.back().stage);
        return m;
    }

    nat horizon() const { return horizon_; }
    int default_value() const { return default_value_; }
    const std::map<nat, std::vector<ScheduleEntry>>& schedules() const { return schedules_; }

    std::string describe() const {
        std::ostringstream out;
        out << "{";
        for (const auto& [k, schedule] : schedules_) {
            out << k << ":";
            for (std::size_t j = 0; j < schedule.size(); ++j) {
                if (j > 0) out << ",";
                out << schedule[j].stage << "=" << schedule[j].value;
            }
            out << ";";
        }
        out << "default=" << default_value_ << ",K=" << horizon_ << "}";
        return out.str();
    }

private:
    const std::vector<ScheduleEntry>* find(nat k) const {
        auto it = schedules_.find(k);
        return it == schedules_.end() ? nullptr : &it->second;
    }

    std::map<nat, std::vector<ScheduleEntry>> schedules_;
    int default_value_;
    nat horizon_;
};

struct GapVerdict {
    Gap gap;
    bool is_short;
    bool very_short;
};

// A gap (a,b) is short when some y <= a lies in range(f) with no witness
// x <= b. Whether it is short does not depend on the owning number.
inline bool short_gap(const EnumeratedFunction& f, Gap gap) {
    for (nat y = 1; y <= gap.lo; ++y)
        if (range_oracle(f, y) && !bounded_range_query(f, y, gap.hi)) return true;
    return false;
}

// A gap (a,b) of n is very short when some y <= a has a witness x <= mu(n)
// but none <= b. Decidable from evaluations at arguments <= mu alone.
template <QueryFunction F>
bool very_short_gap(const F& f, Gap gap, nat mu) {
    for (nat y = 1; y <= gap.lo; ++y)
        if (bounded_range_query(f, y, mu) && !bounded_range_query(f, y, gap.hi)) return true;
    return false;
}

inline GapVerdict classify_gap(const EnumeratedFunction& f, Gap gap, nat mu) {
    if (gap.lo >= gap.hi) throw std::domain_error("classify_gap: gap must satisfy lo < hi");
    if (mu < gap.hi) throw std::domain_error("classify_gap: mu must bound the gap");
    return {gap, short_gap(f, gap), very_short_gap(f, gap, mu)};
}

// SG(n): exact short-gap count; privileged through range_oracle.
inline nat count_short_gaps(const EnumeratedFunction& f, nat n, nat base) {
    Decomposition d = decompose(n, base);
    nat count = 0;
    for (const Gap& gap : d.gaps)
        if (short_gap(f, gap)) ++count;
    return count;
}

// VSG(n): very-short-gap count; queries nothing beyond mu(n).
template <QueryFunction F>
nat count_very_short_gaps(const F& f, nat n, nat base) {
    Decomposition d = decompose(n, base);
    nat mu = d.highest_position();
    nat count = 0;
    for (const Gap& gap : d.gaps)
        if (very_short_gap(f, gap, mu)) ++count;
    return count;
}

// Freshness of a cut point: every y <= mu_n in range(f) has a witness
// <= lambda_m. Privileged; the engine behind the decoding arguments.
inline bool fresh_over(const EnumeratedFunction& f, nat mu_n, nat lambda_m) {
    for (nat y = 1; y <= mu_n; ++y) {
        if (!range_oracle(f, y)) continue;
        if (!bounded_range_query(f, y, lambda_m)) return false;
    }
    return true;
}

// Counting wrapper for query-discipline checks: remembers how often the
// inner function was evaluated and at how large an argument.
template <QueryFunction F>
struct QueryRecorder {
    const F& inner;
    mutable nat calls = 0;
    mutable nat max_argument = 0;

    nat eval(nat x) const {
        ++calls;
        max_argument = std::max(max_argument, x);
        return inner.eval(x);
    }

    void reset() {
        calls = 0;
        max_argument = 0;
    }
};

}  // namespace hindman
