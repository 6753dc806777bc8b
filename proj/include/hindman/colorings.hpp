#pragma once

#include <functional>
#include <string>
#include <utility>

#include "numerals.hpp"
#include "stages.hpp"

namespace hindman {

// Fixed wire encoding for the named colors of 3-colorings.
inline constexpr int color_red = 0;
inline constexpr int color_green = 1;
inline constexpr int color_blue = 2;

inline char color_letter(int color) {
    switch (color) {
        case color_red: return 'R';
        case color_green: return 'G';
        case color_blue: return 'B';
    }
    throw std::domain_error("color_letter: not a 3-coloring color");
}

// A total coloring of the positive integers. Evaluators are pure and close
// over their parameters by value, so Coloring instances are safe to share.
struct Coloring {
    int color_count = 0;
    std::function<int(nat)> evaluator;
    std::string descriptor;
};

inline int eval_color(const Coloring& c, nat n) {
    if (n == 0) throw std::domain_error("eval_color: n must be positive");
    return c.evaluator(n);
}

// 2-coloring driven by a limit approximation: a number s in the class
// O_{k,1} (base 3) is colored by the stage-s guess f(k, s), one in O_{k,2}
// by its complement. Past stabilization the two sides of every level k
// disagree, which is the whole point.
inline Coloring delta2_coloring(LimitApproximation a) {
    std::string descriptor = "delta2" + a.describe();
    auto eval = [a = std::move(a)](nat s) {
        ResidueClass rc = residue_class(s, 3);
        int bit = a.eval(rc.level, s);
        return rc.digit == 1 ? bit : 1 - bit;
    };
    return {2, std::move(eval), std::move(descriptor)};
}

// 4-coloring over base-3 structure: the parity of the very-short-gap count,
// shifted by 2 when the first digit is 2.
inline Coloring four_coloring(EnumeratedFunction f) {
    std::string descriptor = "four" + f.describe();
    auto eval = [f = std::move(f)](nat n) {
        Decomposition d = decompose(n, 3);
        int parity = static_cast<int>(count_very_short_gaps(f, n, 3) % 2);
        return d.first_digit() == 1 ? parity : 2 + parity;
    };
    return {4, std::move(eval), std::move(descriptor)};
}

// 3-coloring over base-7 structure. The first nonzero heptary digit selects
// one of the classes {1,6}, {2,5}, {3,4}; the very-short-gap parity picks one
// of the two colors that class may take: R/G, G/B, B/R respectively.
inline Coloring three_coloring(EnumeratedFunction f) {
    std::string descriptor = "three" + f.describe();
    auto eval = [f = std::move(f)](nat n) {
        static constexpr int palette[3][2] = {
            {color_red, color_green},
            {color_green, color_blue},
            {color_blue, color_red},
        };
        ResidueClass rc = residue_class(n, 7);
        int parity = static_cast<int>(count_very_short_gaps(f, n, 7) % 2);
        return palette[pm_class(rc.digit) - 1][parity];
    };
    return {3, std::move(eval), std::move(descriptor)};
}

// Plain builtins for exercising the solver.
inline Coloring parity_coloring() {
    return {2, [](nat n) { return static_cast<int>(n % 2); }, "parity"};
}

inline Coloring constant_coloring(int color_count = 2, int color = 0) {
    if (color_count < 2) throw std::domain_error("constant_coloring: need at least 2 colors");
    if (color < 0 || color >= color_count)
        throw std::domain_error("constant_coloring: color out of range");
    std::string descriptor = "const(k=" + std::to_string(color_count) +
                             ",color=" + std::to_string(color) + ")";
    return {color_count, [color](nat) { return color; }, std::move(descriptor)};
}

}  // namespace hindman
