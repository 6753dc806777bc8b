#pragma once

// Shared fixtures: one well-studied enumerated function whose hand-computed
// values anchor most expectations, a few structurally different variants,
// and approximations with enough mind changes to exercise stabilization.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include <hindman/hindman.hpp>

namespace fixtures {

using hindman::nat;

// f(1)=4 f(2)=6 f(3)=8 f(4)=2, tail x+6. Range {2,4,6,8} then [11,inf)
// minus the tail images stolen by the table.
inline hindman::EnumeratedFunction reference_f() {
    return hindman::EnumeratedFunction({{1, 4}, {2, 6}, {3, 8}, {4, 2}}, 6, 4);
}

// Small values appear late: f(2)=1 makes y=1 cheap but y=5 early.
inline hindman::EnumeratedFunction variant_f1() {
    return hindman::EnumeratedFunction({{1, 5}, {2, 1}, {3, 9}}, 7, 3);
}

// Shuffled low range with a short tail offset.
inline hindman::EnumeratedFunction variant_f2() {
    return hindman::EnumeratedFunction({{1, 3}, {4, 1}, {6, 2}}, 3, 6);
}

// Pure tail: range is exactly [3,inf).
inline hindman::EnumeratedFunction variant_f3() {
    return hindman::EnumeratedFunction({}, 2, 0);
}

inline std::vector<hindman::EnumeratedFunction> function_corpus() {
    return {reference_f(), variant_f1(), variant_f2(), variant_f3()};
}

// A(0)=1 with one mind change at stage 5; A(1)=0 flat; nothing else.
inline hindman::LimitApproximation reference_a() {
    std::map<nat, std::vector<hindman::ScheduleEntry>> schedules;
    schedules[0] = {{0, 0}, {5, 1}};
    schedules[1] = {{0, 0}};
    return hindman::LimitApproximation(std::move(schedules), 0, 1);
}

// Five scheduled indices, limits 1,1,1,1,0; max stabilization stage 9.
inline hindman::LimitApproximation approx_a1() {
    std::map<nat, std::vector<hindman::ScheduleEntry>> schedules;
    schedules[0] = {{0, 0}, {3, 1}, {6, 0}, {9, 1}};
    schedules[1] = {{0, 1}, {4, 0}, {8, 1}};
    schedules[2] = {{0, 1}, {2, 0}, {6, 1}};
    schedules[3] = {{0, 1}, {1, 0}, {4, 1}};
    schedules[4] = {{0, 0}, {2, 1}, {7, 0}};
    return hindman::LimitApproximation(std::move(schedules), 0, 4);
}

// Limit-0 majority: limits 0,0,1,0,0; max stabilization stage 9.
inline hindman::LimitApproximation approx_a2() {
    std::map<nat, std::vector<hindman::ScheduleEntry>> schedules;
    schedules[0] = {{0, 1}, {2, 0}, {5, 1}, {8, 0}};
    schedules[1] = {{0, 0}, {3, 1}, {7, 0}};
    schedules[2] = {{0, 1}, {1, 0}, {9, 1}};
    schedules[3] = {{0, 0}, {2, 1}, {4, 0}};
    schedules[4] = {{0, 1}, {3, 0}, {6, 0}};
    return hindman::LimitApproximation(std::move(schedules), 1, 4);
}

// Horizon 5 with one defaulted index; limits 1,1,1,1,0,0.
inline hindman::LimitApproximation approx_a3() {
    std::map<nat, std::vector<hindman::ScheduleEntry>> schedules;
    schedules[0] = {{0, 0}, {4, 1}, {9, 0}, {12, 1}};
    schedules[1] = {{0, 1}, {5, 0}, {10, 1}};
    schedules[2] = {{0, 0}, {3, 0}, {7, 1}};
    schedules[3] = {{0, 1}, {2, 0}, {8, 1}};
    schedules[4] = {{0, 1}, {1, 0}, {3, 0}};
    return hindman::LimitApproximation(std::move(schedules), 0, 5);
}

inline std::vector<hindman::LimitApproximation> approximation_corpus() {
    return {approx_a1(), approx_a2(), approx_a3()};
}

// Reference oracle for the solver: first monochromatic size-M combination
// of [1, horizon] in lexicographic order, checked by full enumeration.
inline std::optional<std::vector<nat>> naive_search(const hindman::Coloring& c, nat horizon,
                                                    nat sum_bound, nat size) {
    if (horizon < size) return std::nullopt;
    std::vector<nat> pick(size);
    for (nat j = 0; j < size; ++j) pick[j] = j + 1;
    while (true) {
        if (hindman::is_monochromatic(c, pick, sum_bound).verdict) return pick;
        nat j = size;
        while (j > 0 && pick[j - 1] == horizon - size + j) --j;
        if (j == 0) return std::nullopt;
        ++pick[j - 1];
        for (nat l = j; l < size; ++l) pick[l] = pick[l - 1] + 1;
    }
}

}  // namespace fixtures
