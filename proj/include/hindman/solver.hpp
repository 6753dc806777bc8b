#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "colorings.hpp"
#include "numerals.hpp"
#include "stages.hpp"

namespace hindman {

// Finite increasing set together with the sum length it is meant to be
// monochromatic for.
struct SolutionCandidate {
    std::vector<nat> elements;
    nat sum_bound = 1;
};

struct MonoCertificate {
    bool verdict = false;
    int color = -1;                       // set when verdict holds
    std::vector<nat> offending_first;     // subsets with differently colored
    std::vector<nat> offending_second;    // sums, set when verdict fails
};

namespace detail {

inline void require_increasing(std::span<const nat> xs, const char* who) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (xs[j] == 0) throw std::domain_error(std::string(who) + ": elements must be positive");
        if (j > 0 && xs[j] <= xs[j - 1])
            throw std::domain_error(std::string(who) + ": elements must be strictly increasing");
    }
}

// Visit index subsets of {0..m-1} of size 1..limit, sizes ascending and
// combinations in lexicographic order within a size. Stop when the visitor
// returns false.
template <typename Visitor>
void for_each_subset(std::size_t m, std::size_t limit, Visitor&& visit) {
    std::vector<std::size_t> idx;
    for (std::size_t size = 1; size <= std::min(limit, m); ++size) {
        idx.resize(size);
        for (std::size_t j = 0; j < size; ++j) idx[j] = j;
        while (true) {
            if (!visit(idx)) return;
            std::size_t j = size;
            while (j > 0 && idx[j - 1] == m - size + (j - 1)) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (std::size_t l = j; l < size; ++l) idx[l] = idx[l - 1] + 1;
        }
    }
}

inline nat subset_sum(std::span<const nat> xs, const std::vector<std::size_t>& idx) {
    nat sum = 0;
    for (std::size_t j : idx) sum = checked_add(sum, xs[j]);
    return sum;
}

}  // namespace detail

// FS^{<=n}(X): sums over nonempty subsets of at most n elements, deduplicated.
inline std::vector<nat> fs_bounded(std::span<const nat> xs, nat sum_bound) {
    if (xs.empty()) throw std::domain_error("fs_bounded: X must be nonempty");
    if (sum_bound == 0) throw std::domain_error("fs_bounded: sum bound must be positive");
    detail::require_increasing(xs, "fs_bounded");
    std::vector<nat> sums;
    detail::for_each_subset(xs.size(), sum_bound, [&](const std::vector<std::size_t>& idx) {
        sums.push_back(detail::subset_sum(xs, idx));
        return true;
    });
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

// Verdict over FS^{<=n}(X); when it fails, reports the least offending pair
// of subsets under the (size, lexicographic) subset order. The first subset
// in that order takes part in every least violation, so a single scan
// against its color suffices.
inline MonoCertificate is_monochromatic(const Coloring& c, std::span<const nat> xs, nat sum_bound) {
    if (xs.empty()) throw std::domain_error("is_monochromatic: X must be nonempty");
    if (sum_bound == 0) throw std::domain_error("is_monochromatic: sum bound must be positive");
    detail::require_increasing(xs, "is_monochromatic");
    MonoCertificate cert;
    std::vector<std::size_t> first_idx;
    int first_color = -1;
    detail::for_each_subset(xs.size(), sum_bound, [&](const std::vector<std::size_t>& idx) {
        int color = eval_color(c, detail::subset_sum(xs, idx));
        if (first_idx.empty()) {
            first_idx = idx;
            first_color = color;
            return true;
        }
        if (color == first_color) return true;
        for (std::size_t j : first_idx) cert.offending_first.push_back(xs[j]);
        for (std::size_t j : idx) cert.offending_second.push_back(xs[j]);
        return false;
    });
    cert.verdict = cert.offending_second.empty();
    if (cert.verdict) cert.color = first_color;
    return cert;
}

namespace detail {

// Depth-first search over increasing extensions with an incrementally
// maintained closure, pruning as soon as two colors appear among the sums.
class MonoSearch {
public:
    MonoSearch(const Coloring& c, nat horizon, nat sum_bound, nat size)
        : coloring_(c), horizon_(horizon), sum_bound_(sum_bound), size_(size),
          sums_by_size_(sum_bound + 1) {}

    // Least completion with the given first element, or none.
    std::optional<std::vector<nat>> run(nat first) {
        chosen_.clear();
        marks_.clear();
        for (auto& level : sums_by_size_) level.clear();
        color_ = -1;
        if (!push(first)) return std::nullopt;
        if (chosen_.size() == size_ || extend()) return chosen_;
        return std::nullopt;
    }

private:
    bool extend() {
        nat remaining = size_ - chosen_.size();
        for (nat x = chosen_.back() + 1; x <= horizon_ - (remaining - 1); ++x) {
            if (!push(x)) continue;
            if (chosen_.size() == size_ || extend()) return true;
            pop();
        }
        return false;
    }

    // Add x and every new sum it creates; fail (and roll back) on the first
    // color conflict. New sums combine x with sums over the previous
    // elements only, so levels are filled top-down to keep sources clean.
    bool push(nat x) {
        std::vector<std::size_t> saved(sums_by_size_.size());
        for (std::size_t j = 0; j < sums_by_size_.size(); ++j) saved[j] = sums_by_size_[j].size();
        chosen_.push_back(x);
        bool ok = admit(x, 1);
        for (std::size_t j = sum_bound_ - 1; ok && j >= 1; --j) {
            for (std::size_t l = 0; ok && l < saved[j]; ++l)
                ok = admit(checked_add(sums_by_size_[j][l], x), j + 1);
        }
        if (!ok) {
            chosen_.pop_back();
            rewind(saved);
            return false;
        }
        marks_.push_back(std::move(saved));
        return true;
    }

    bool admit(nat sum, std::size_t size) {
        int color = eval_color(coloring_, sum);
        if (color_ < 0) color_ = color;
        if (color != color_) return false;
        sums_by_size_[size].push_back(sum);
        return true;
    }

    void pop() {
        chosen_.pop_back();
        rewind(marks_.back());
        marks_.pop_back();
        if (chosen_.empty()) color_ = -1;
    }

    void rewind(const std::vector<std::size_t>& saved) {
        for (std::size_t j = 0; j < sums_by_size_.size(); ++j) sums_by_size_[j].resize(saved[j]);
    }

    const Coloring& coloring_;
    nat horizon_, sum_bound_, size_;
    std::vector<nat> chosen_;
    std::vector<std::vector<std::size_t>> marks_;
    std::vector<std::vector<nat>> sums_by_size_;
    int color_ = -1;
};

}  // namespace detail

// Least (by first element, then lexicographically) increasing set of the
// requested size inside [1, horizon] whose bounded sums are monochromatic,
// or none. With jobs > 1 the first elements are farmed out to worker
// threads; the result is the same set the sequential scan finds.
inline std::optional<SolutionCandidate> search_monochromatic(const Coloring& c, nat horizon,
                                                             nat sum_bound, nat size,
                                                             unsigned jobs = 1) {
    if (size == 0) throw std::domain_error("search_monochromatic: size must be positive");
    if (sum_bound == 0) throw std::domain_error("search_monochromatic: sum bound must be positive");
    if (horizon < size) return std::nullopt;
    nat last_first = horizon - size + 1;
    if (jobs <= 1 || last_first == 1) {
        detail::MonoSearch search(c, horizon, sum_bound, size);
        for (nat first = 1; first <= last_first; ++first)
            if (auto found = search.run(first)) return SolutionCandidate{std::move(*found), sum_bound};
        return std::nullopt;
    }

    std::vector<std::optional<std::vector<nat>>> found(last_first + 1);
    std::atomic<nat> next{1};
    std::atomic<nat> best{last_first + 1};
    auto worker = [&] {
        detail::MonoSearch search(c, horizon, sum_bound, size);
        while (true) {
            nat first = next.fetch_add(1);
            if (first > last_first || first > best.load()) break;
            if (auto got = search.run(first)) {
                found[first] = std::move(*got);
                nat seen = best.load();
                while (first < seen && !best.compare_exchange_weak(seen, first)) {}
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<nat>(jobs, last_first);
    pool.reserve(count);
    for (unsigned j = 0; j < count; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (nat first = 1; first <= last_first; ++first)
        if (found[first]) return SolutionCandidate{std::move(*found[first]), sum_bound};
    return std::nullopt;
}

// Keep every element whose lowest digit position clears the highest
// position of the previously kept one. The survivors satisfy the chain
// condition and inherit any closure property of the input set.
inline std::vector<nat> thin_chain(std::span<const nat> xs, nat base) {
    detail::require_increasing(xs, "thin_chain");
    std::vector<nat> kept;
    std::optional<nat> ceiling;
    for (nat x : xs) {
        Decomposition d = decompose(x, base);
        if (!ceiling || d.lowest_position() > *ceiling) {
            kept.push_back(x);
            ceiling = d.highest_position();
        }
    }
    return kept;
}

// Keep the largest class with a common first digit, ties toward the
// smaller digit.
inline std::vector<nat> thin_first_digit(std::span<const nat> xs, nat base) {
    detail::require_increasing(xs, "thin_first_digit");
    if (xs.empty()) return {};
    std::vector<std::vector<nat>> classes(base);
    for (nat x : xs) classes[decompose(x, base).first_digit()].push_back(x);
    std::size_t pick = 1;
    for (std::size_t digit = 2; digit < base; ++digit)
        if (classes[digit].size() > classes[pick].size()) pick = digit;
    return classes[pick];
}

// Consecutive elements occupy disjoint, increasing digit position ranges.
inline bool satisfies_chain_condition(std::span<const nat> xs, nat base) {
    detail::require_increasing(xs, "satisfies_chain_condition");
    std::optional<nat> ceiling;
    for (nat x : xs) {
        Decomposition d = decompose(x, base);
        if (ceiling && d.lowest_position() <= *ceiling) return false;
        ceiling = d.highest_position();
    }
    return true;
}

// Least bound below which every value y <= k in the range has a witness.
inline nat witness_ceiling(const EnumeratedFunction& f, nat k) {
    nat bound = 0;
    for (nat y = 1; y <= k; ++y)
        if (auto w = least_witness(f, y)) bound = std::max(bound, *w);
    return bound;
}

// Chain of base powers whose exponents outrun the witness bounds of f:
// the next exponent clears both its predecessor and every witness needed
// for values up to it. Uses structural range access, so this is on the
// privileged side of the interface.
inline SolutionCandidate synthesize_power_solution(const EnumeratedFunction& f, nat base,
                                                   nat length, nat sum_bound) {
    if (base != 3 && base != 7)
        throw std::domain_error("synthesize_power_solution: base must be 3 or 7");
    if (length == 0) throw std::domain_error("synthesize_power_solution: length must be positive");
    if (sum_bound == 0 || sum_bound > 3)
        throw std::domain_error("synthesize_power_solution: sum bound must be 1, 2, or 3");
    std::vector<nat> elements;
    nat exponent = 1;
    for (nat j = 0; j < length; ++j) {
        elements.push_back(checked_pow(base, exponent));
        exponent = std::max(checked_add(exponent, 1), witness_ceiling(f, exponent));
    }
    return {std::move(elements), sum_bound};
}

// Indices of the approximation sharing the given limit value, ascending.
inline std::vector<nat> limit_indices(const LimitApproximation& a, int value) {
    std::vector<nat> indices;
    for (nat k = 0; k <= a.horizon(); ++k)
        if (a.limit_value(k) == value) indices.push_back(k);
    return indices;
}

// One number per chosen index k, in the class of lowest nonzero ternary
// digit 1 at position k, taken at or past every stabilization stage of the
// approximation so that later evaluations all sit at the limit.
inline SolutionCandidate synthesize_delta2_solution(const LimitApproximation& a, nat count,
                                                    int limit_bit) {
    if (count == 0) throw std::domain_error("synthesize_delta2_solution: count must be positive");
    if (limit_bit != 0 && limit_bit != 1)
        throw std::domain_error("synthesize_delta2_solution: limit bit must be 0 or 1");
    std::vector<nat> indices = limit_indices(a, limit_bit);
    if (indices.size() < count)
        throw std::domain_error("synthesize_delta2_solution: not enough indices share that limit");
    indices.resize(count);
    nat floor = a.max_stabilization_stage();
    std::vector<nat> elements;
    for (nat k : indices) {
        nat power = checked_pow(3, k);
        nat modulus = checked_mul(power, 3);
        nat element = power;
        if (element < floor) {
            nat steps = (floor - element + modulus - 1) / modulus;
            element = checked_add(element, checked_mul(steps, modulus));
        }
        elements.push_back(element);
    }
    std::sort(elements.begin(), elements.end());
    return {std::move(elements), 2};
}

// As above with the limit value chosen automatically: the value shared by
// more indices wins, ties toward the one reaching the count at a smaller
// first index.
inline SolutionCandidate synthesize_delta2_solution(const LimitApproximation& a, nat count) {
    if (count == 0) throw std::domain_error("synthesize_delta2_solution: count must be positive");
    std::vector<nat> zeros = limit_indices(a, 0);
    std::vector<nat> ones = limit_indices(a, 1);
    bool zero_ok = zeros.size() >= count;
    bool one_ok = ones.size() >= count;
    if (!zero_ok && !one_ok)
        throw std::domain_error("synthesize_delta2_solution: not enough indices share a limit");
    int bit;
    if (zero_ok != one_ok) {
        bit = zero_ok ? 0 : 1;
    } else if (zeros.size() != ones.size()) {
        bit = zeros.size() > ones.size() ? 0 : 1;
    } else {
        bit = zeros.front() <= ones.front() ? 0 : 1;
    }
    return synthesize_delta2_solution(a, count, bit);
}

}  // namespace hindman
