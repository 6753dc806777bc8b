#pragma once

#include <map>
#include <set>
#include <span>
#include <vector>

#include "colorings.hpp"
#include "numerals.hpp"
#include "solver.hpp"
#include "stages.hpp"

namespace hindman {

// Whether the chain behind a range decoding was checked against the
// structural description of the function. Verdicts from an unverified
// chain are best effort.
enum class Freshness { unverified, verified };

struct RangeEvidence {
    nat element = 0;    // chain element whose highest position covers the query
    nat successor = 0;  // next chain element, supplies the query bound
    nat bound = 0;      // lowest digit position of the successor
    bool operator==(const RangeEvidence&) const = default;
};

struct MembershipVerdict {
    nat query = 0;
    bool member = false;
    RangeEvidence evidence;
    bool certified = false;
    bool operator==(const MembershipVerdict&) const = default;
};

// Levels recovered from a 2-colored set, split by the limit bit they
// testify to, with one witness element recorded per level.
struct BSets {
    std::set<nat> b0;
    std::set<nat> b1;
    std::map<nat, nat> witness0;
    std::map<nat, nat> witness1;
};

// Read limit bits off colored numbers: an element of the digit-1 class at
// level k shows the bit directly, an element of the digit-2 class shows
// its complement. Levels above the horizon are ignored.
inline BSets decode_delta2(std::span<const nat> xs, const Coloring& c, nat horizon) {
    if (c.color_count != 2) throw std::domain_error("decode_delta2: needs a 2-coloring");
    BSets out;
    for (nat n : xs) {
        if (n == 0) throw std::domain_error("decode_delta2: elements must be positive");
        ResidueClass rc = residue_class(n, 3);
        if (rc.level > horizon) continue;
        int color = eval_color(c, n);
        if (color != 0 && color != 1) throw std::domain_error("decode_delta2: color out of range");
        int bit = rc.digit == 1 ? color : 1 - color;
        if (bit == 0) {
            if (out.b0.insert(rc.level).second) out.witness0[rc.level] = n;
        } else {
            if (out.b1.insert(rc.level).second) out.witness1[rc.level] = n;
        }
    }
    return out;
}

// Largest query the chain can answer: the highest digit position of its
// second largest element, since the largest element only ever serves as a
// successor.
inline nat decodable_bound(std::span<const nat> chain, nat base) {
    if (chain.size() < 2) return 0;
    return decompose(chain[chain.size() - 2], base).highest_position();
}

// Decide whether y is a value of f using nothing but bounded queries and
// the digit structure of the chain: the successor of the first element
// covering y caps the positions that need to be probed.
template <QueryFunction F>
MembershipVerdict decode_range_membership(const SolutionCandidate& candidate, const F& f, nat y,
                                          nat base, Freshness freshness = Freshness::unverified) {
    const std::vector<nat>& chain = candidate.elements;
    if (!satisfies_chain_condition(chain, base))
        throw std::domain_error("decode_range_membership: elements violate the chain condition");
    if (y == 0) throw std::domain_error("decode_range_membership: query must be positive");
    if (y > decodable_bound(chain, base))
        throw std::domain_error("decode_range_membership: query exceeds the decodable bound");
    std::size_t j = 0;
    while (decompose(chain[j], base).highest_position() < y) ++j;
    nat successor = chain[j + 1];
    nat bound = decompose(successor, base).lowest_position();
    MembershipVerdict verdict;
    verdict.query = y;
    verdict.member = bounded_range_query(f, y, bound);
    verdict.evidence = {chain[j], successor, bound};
    verdict.certified = freshness == Freshness::verified;
    return verdict;
}

// Every decodable query in order.
template <QueryFunction F>
std::vector<MembershipVerdict> decode_range_table(const SolutionCandidate& candidate, const F& f,
                                                  nat base,
                                                  Freshness freshness = Freshness::unverified) {
    std::vector<MembershipVerdict> table;
    nat top = decodable_bound(candidate.elements, base);
    table.reserve(top);
    for (nat y = 1; y <= top; ++y)
        table.push_back(decode_range_membership(candidate, f, y, base, freshness));
    return table;
}

// Structural check that each successor bound covers the witnesses of every
// value its predecessor can be queried about, which is exactly when the
// bounded verdicts above agree with true membership. Privileged.
inline bool chain_is_fresh(const EnumeratedFunction& f, std::span<const nat> chain, nat base) {
    if (!satisfies_chain_condition(chain, base)) return false;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        nat mu = decompose(chain[j], base).highest_position();
        nat lambda = decompose(chain[j + 1], base).lowest_position();
        if (!fresh_over(f, mu, lambda)) return false;
    }
    return true;
}

}  // namespace hindman
