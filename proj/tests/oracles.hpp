#pragma once

// Independent oracles used only by the test suites. These deliberately avoid
// the stabilizer-chain and normalized-census code paths they check.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "covers/census.hpp"
#include "covers/group.hpp"
#include "covers/perm.hpp"

namespace oracles {

// plain multiplication closure
inline std::set<covers::Perm> brute_force_closure(const std::vector<covers::Perm>& gens,
                                                  size_t limit = 2'000'000) {
    std::set<covers::Perm> seen;
    if (gens.empty()) return seen;
    std::vector<covers::Perm> todo{covers::Perm::identity(gens.front().degree())};
    seen.insert(todo.front());
    while (!todo.empty()) {
        covers::Perm cur = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            covers::Perm next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > limit) throw std::runtime_error("closure oracle limit hit");
                todo.push_back(std::move(next));
            }
        }
    }
    return seen;
}

// fully unnormalized census: g1 ranges over its whole class as well
struct RawCensus {
    std::map<std::string, std::uint64_t> buckets;
    std::uint64_t total = 0;
};

inline RawCensus unnormalized_census(const covers::SearchSpec& spec) {
    using namespace covers;
    RawCensus out;
    const int r = static_cast<int>(spec.types.size());
    std::vector<std::vector<Perm>> classes;
    for (int i = 0; i + 1 < r; ++i)
        classes.push_back(class_elements(spec.types[static_cast<size_t>(i)]));
    std::vector<Perm> tuple(static_cast<size_t>(r), Perm::identity(spec.degree));
    std::function<void(size_t, const Perm&)> rec = [&](size_t slot, const Perm& prefix) {
        if (slot + 1 == static_cast<size_t>(r)) {
            Perm last = prefix.inverse();
            if (CycleType(last) != spec.types.back()) return;
            tuple.back() = last;
            ++out.total;
            if (spec.require_transitive &&
                GroupHandle::orbit_partition(tuple, spec.degree).size() != 1)
                return;
            ++out.buckets[identify(GroupHandle::generate(tuple))];
        } else {
            for (const auto& g : classes[slot]) {
                tuple[slot] = g;
                rec(slot + 1, prefix * g);
            }
        }
    };
    rec(0, Perm::identity(spec.degree));
    return out;
}

} // namespace oracles
