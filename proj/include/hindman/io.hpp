#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numerals.hpp"
#include "stages.hpp"

namespace hindman {

namespace detail {

[[noreturn]] inline void parse_fail(const char* what, std::size_t line, const std::string& text) {
    std::ostringstream out;
    out << what << " at line " << line << ": " << text;
    throw std::runtime_error(out.str());
}

inline nat parse_nat(std::string_view token, std::size_t line, const std::string& text) {
    nat value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        parse_fail("expected a natural number", line, text);
    return value;
}

// Strip an end-of-line comment and surrounding whitespace, split the rest
// into tokens. Blank and comment-only lines come back empty.
inline std::vector<std::string> tokenize(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

}  // namespace detail

// Function file: one `x y` pair per line for the exception table, then a
// closing `tail c T` line. Blank lines and # comments are fine anywhere.
inline EnumeratedFunction read_enumerated_function(std::istream& in) {
    std::vector<std::pair<nat, nat>> exceptions;
    bool tail_seen = false;
    nat tail_offset = 0, threshold = 0;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (tail_seen) detail::parse_fail("content after the tail line", number, line);
        if (tokens[0] == "tail") {
            if (tokens.size() != 3) detail::parse_fail("tail line needs `tail c T`", number, line);
            tail_offset = detail::parse_nat(tokens[1], number, line);
            threshold = detail::parse_nat(tokens[2], number, line);
            tail_seen = true;
            continue;
        }
        if (tokens.size() != 2) detail::parse_fail("expected `x y`", number, line);
        exceptions.emplace_back(detail::parse_nat(tokens[0], number, line),
                                detail::parse_nat(tokens[1], number, line));
    }
    if (!tail_seen) throw std::runtime_error("function file is missing the tail line");
    return EnumeratedFunction(std::move(exceptions), tail_offset, threshold);
}

inline void write_enumerated_function(std::ostream& out, const EnumeratedFunction& f) {
    for (auto [x, v] : f.exceptions()) out << x << " " << v << "\n";
    out << "tail " << f.tail_offset() << " " << f.threshold() << "\n";
}

// Approximation file: one `k: s=v s=v ...` schedule per line, then
// `default v` and `horizon K` lines in either order.
inline LimitApproximation read_limit_approximation(std::istream& in) {
    std::map<nat, std::vector<ScheduleEntry>> schedules;
    bool default_seen = false, horizon_seen = false;
    int default_value = 0;
    nat horizon = 0;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "default") {
            if (tokens.size() != 2) detail::parse_fail("default line needs `default v`", number, line);
            default_value = static_cast<int>(detail::parse_nat(tokens[1], number, line));
            default_seen = true;
            continue;
        }
        if (tokens[0] == "horizon") {
            if (tokens.size() != 2)
                detail::parse_fail("horizon line needs `horizon K`", number, line);
            horizon = detail::parse_nat(tokens[1], number, line);
            horizon_seen = true;
            continue;
        }
        std::string_view head = tokens[0];
        if (head.empty() || head.back() != ':')
            detail::parse_fail("expected `k:` to open a schedule", number, line);
        head.remove_suffix(1);
        nat k = detail::parse_nat(head, number, line);
        if (schedules.count(k)) detail::parse_fail("duplicate schedule index", number, line);
        std::vector<ScheduleEntry> schedule;
        for (std::size_t j = 1; j < tokens.size(); ++j) {
            std::string_view entry = tokens[j];
            auto eq = entry.find('=');
            if (eq == std::string_view::npos)
                detail::parse_fail("schedule entries look like `s=v`", number, line);
            ScheduleEntry parsed;
            parsed.stage = detail::parse_nat(entry.substr(0, eq), number, line);
            parsed.value = static_cast<int>(detail::parse_nat(entry.substr(eq + 1), number, line));
            schedule.push_back(parsed);
        }
        if (schedule.empty()) detail::parse_fail("schedule has no entries", number, line);
        schedules.emplace(k, std::move(schedule));
    }
    if (!default_seen) throw std::runtime_error("approximation file is missing the default line");
    if (!horizon_seen) throw std::runtime_error("approximation file is missing the horizon line");
    return LimitApproximation(std::move(schedules), default_value, horizon);
}

inline void write_limit_approximation(std::ostream& out, const LimitApproximation& a) {
    for (const auto& [k, schedule] : a.schedules()) {
        out << k << ":";
        for (const ScheduleEntry& entry : schedule) out << " " << entry.stage << "=" << entry.value;
        out << "\n";
    }
    out << "default " << a.default_value() << "\n";
    out << "horizon " << a.horizon() << "\n";
}

// Set file: one positive integer per line, strictly increasing.
inline std::vector<nat> read_integer_set(std::istream& in) {
    std::vector<nat> xs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 1) detail::parse_fail("expected a single integer", number, line);
        nat x = detail::parse_nat(tokens[0], number, line);
        if (x == 0) detail::parse_fail("elements must be positive", number, line);
        if (!xs.empty() && x <= xs.back())
            detail::parse_fail("elements must strictly increase", number, line);
        xs.push_back(x);
    }
    return xs;
}

inline void write_integer_set(std::ostream& out, std::span<const nat> xs) {
    for (nat x : xs) out << x << "\n";
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

}  // namespace detail

inline EnumeratedFunction load_enumerated_function(const std::string& path) {
    auto in = detail::open_input(path);
    return read_enumerated_function(in);
}

inline LimitApproximation load_limit_approximation(const std::string& path) {
    auto in = detail::open_input(path);
    return read_limit_approximation(in);
}

inline std::vector<nat> load_integer_set(const std::string& path) {
    auto in = detail::open_input(path);
    return read_integer_set(in);
}

inline void save_enumerated_function(const std::string& path, const EnumeratedFunction& f) {
    auto out = detail::open_output(path);
    write_enumerated_function(out, f);
}

inline void save_limit_approximation(const std::string& path, const LimitApproximation& a) {
    auto out = detail::open_output(path);
    write_limit_approximation(out, a);
}

inline void save_integer_set(const std::string& path, std::span<const nat> xs) {
    auto out = detail::open_output(path);
    write_integer_set(out, xs);
}

}  // namespace hindman
