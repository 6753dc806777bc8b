#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hindman {

// The natural numbers of this library start at 1; every entry point rejects 0.
using nat = std::uint64_t;

// Desk-scale instances fit in 64 bits; wrap-around is a bug, not a feature.
inline nat checked_add(nat a, nat b) {
    nat r = a + b;
    if (r < a) throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

inline nat checked_mul(nat a, nat b) {
    if (a != 0 && b > ~nat{0} / a) throw std::overflow_error("checked_mul: 64-bit overflow");
    return a * b;
}

inline nat checked_pow(nat base, nat exponent) {
    nat r = 1;
    for (nat e = 0; e < exponent; ++e) r = checked_mul(r, base);
    return r;
}

struct Term {
    nat position;  // exponent of the base
    nat digit;     // in [1, base-1]
    bool operator==(const Term&) const = default;
};

// Interval between two consecutive nonzero digit positions of a number.
struct Gap {
    nat lo;
    nat hi;
    bool operator==(const Gap&) const = default;
};

// Nonzero digits of the base-b expansion of a positive integer, lowest first,
// with the gap list materialized once since everything downstream walks it.
struct Decomposition {
    nat base = 0;
    nat value = 0;
    std::vector<Term> terms;
    std::vector<Gap> gaps;

    nat lowest_position() const { return terms.front().position; }
    nat highest_position() const { return terms.back().position; }
    nat first_digit() const { return terms.front().digit; }
};

inline Decomposition decompose(nat n, nat base) {
    if (n == 0) throw std::domain_error("decompose: n must be positive");
    if (base < 2) throw std::domain_error("decompose: base must be at least 2");
    Decomposition d;
    d.base = base;
    d.value = n;
    nat position = 0;
    for (nat rest = n; rest != 0; rest /= base, ++position) {
        nat digit = rest % base;
        if (digit != 0) d.terms.push_back({position, digit});
    }
    for (std::size_t j = 0; j + 1 < d.terms.size(); ++j)
        d.gaps.push_back({d.terms[j].position, d.terms[j + 1].position});
    return d;
}

// The class of numbers whose lowest nonzero base-b digit is `digit`, sitting
// at position `level`: n ≡ digit * base^level (mod base^{level+1}).
struct ResidueClass {
    nat level;
    nat digit;
    bool operator==(const ResidueClass&) const = default;
};

inline ResidueClass residue_class(nat n, nat base) {
    if (n == 0) throw std::domain_error("residue_class: n must be positive");
    if (base < 2) throw std::domain_error("residue_class: base must be at least 2");
    nat level = 0;
    while (n % base == 0) {
        n /= base;
        ++level;
    }
    return {level, n % base};
}

inline bool residue_class_contains(const ResidueClass& rc, nat n, nat base) {
    return residue_class(n, base) == rc;
}

// Heptary digits i and 7-i play the same role; collapse them to one of three
// classes: {1,6} -> 1, {2,5} -> 2, {3,4} -> 3.
inline int pm_class(nat digit) {
    if (digit < 1 || digit > 6) throw std::domain_error("pm_class: digit must be in [1,6]");
    return static_cast<int>(digit <= 3 ? digit : 7 - digit);
}

}  // namespace hindman
