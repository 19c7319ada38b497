#pragma once

// Statistical monodromy evidence: cycle types of Frobenius elements sampled
// by factoring specialized fibers P - t0*Q over an extension field.
//
// Observed types reflect the arithmetic monodromy over F_{p^k}, which
// contains the geometric group; absence bounds use an i.i.d. equidistribution
// model with no Chebotarev error term. Verdicts are evidence, never proof.
//
// Sampling is partitioned into fixed-size shards whose RNG streams depend
// only on (seed, shard index), so reports merge associatively and extending a
// run preserves its prefix.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "covers/error.hpp"
#include "covers/factor.hpp"
#include "covers/group.hpp"
#include "covers/perm.hpp"
#include "covers/ramify.hpp"

namespace covers {

struct SampleReport {
    std::string map_text;
    std::uint32_t ext_degree = 1;       // k: samples drawn from F_{p^k}
    std::uint64_t observations = 0;     // accepted specializations (the requested N)
    std::uint64_t rejected = 0;         // draws that hit branch values
    std::uint64_t total_draws = 0;      // observations + rejected
    std::uint64_t seed = 0;
    std::map<CycleType, std::uint64_t> histogram;
};

namespace detail {

// factor-degree pattern of a squarefree polynomial, distinct-degree pass only
inline std::vector<int> ddf_degree_pattern(const Poly& T) {
    std::vector<int> parts;
    Poly g = T.monic();
    Poly h = Poly::x(g.field()) % g;
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            parts.push_back(g.degree());
            break;
        }
        h = pow_mod(h, g.field().q(), g);
        Poly gd = poly_gcd(h - Poly::x(g.field()), g);
        if (gd.degree() > 0) {
            for (int i = 0; i < gd.degree() / d; ++i) parts.push_back(d);
            g = g / gd;
            h = h % g;
        }
    }
    return parts;
}

constexpr std::uint64_t kShardSize = 256;

inline std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
    // splitmix64 step keyed by the shard index
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (shard + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

inline SampleReport sample(const RationalMap& f, std::uint32_t k, std::uint64_t N,
                           std::uint64_t seed) {
    if (N < 1) throw ParseError("sample count must be >= 1");
    if (f.field.k() != 1)
        throw FieldMismatch("sampling lifts a prime-field map into its extensions");
    Poly W = f.num.derivative() * f.den - f.num * f.den.derivative();
    if (W.is_zero()) throw InseparableMap("cannot sample an inseparable map");

    Field E = k == 1 ? f.field : Field::extension(f.field.p(), k);
    Poly P = k == 1 ? f.num : lift_to(f.num, E);
    Poly Q = k == 1 ? f.den : lift_to(f.den, E);
    const int n = f.degree;

    SampleReport rep;
    rep.map_text = f.to_string();
    rep.ext_degree = k;
    rep.seed = seed;

    const std::uint64_t cap = 64 * N + 4096;
    std::uint64_t shard = 0;
    std::mt19937_64 rng(detail::shard_seed(seed, shard));
    std::uint64_t in_shard = 0;
    while (rep.observations < N) {
        if (rep.total_draws > cap)
            throw Error("sampling rejected nearly every draw; field too small for this map");
        if (in_shard == detail::kShardSize) {
            rng.seed(detail::shard_seed(seed, ++shard));
            in_shard = 0;
        }
        ++in_shard;
        ++rep.total_draws;
        Field::Elem t0(E.k());
        for (std::uint32_t j = 0; j < E.k(); ++j)
            t0[j] = static_cast<std::uint32_t>(rng() % E.p());
        Poly T = P - Q.scaled(t0);
        int drop = n - std::max(T.degree(), 0);
        if (drop >= 2 || T.degree() < 1) {  // ramified at the infinite sheet
            ++rep.rejected;
            continue;
        }
        if (poly_gcd(T, T.derivative()).degree() != 0) {  // t0 is a branch value
            ++rep.rejected;
            continue;
        }
        std::vector<int> parts = detail::ddf_degree_pattern(T);
        if (drop == 1) parts.push_back(1);
        ++rep.histogram[CycleType(n, parts)];
        ++rep.observations;
    }
    return rep;
}

// ---------------------------------------------------------------------------

struct CandidateModel {
    std::string name;
    std::uint64_t order = 0;
    std::map<CycleType, std::uint64_t> counts;  // exact frequencies: counts / order

    bool supports(const CycleType& t) const { return counts.count(t) != 0; }
};

inline CandidateModel type_distribution(const GroupHandle& G, std::uint64_t bound = 1'000'000) {
    CandidateModel m;
    m.name = identify(G);
    m.order = G.order();
    for (const auto& e : G.elements(bound)) ++m.counts[CycleType(e)];
    return m;
}

struct AbsenceBound {
    CycleType type;
    std::uint64_t count = 0, order = 1;  // frequency of the absent type
    double log10_probability = 0.0;      // log10 (1 - count/order)^N
    std::string expression;              // e.g. "(1 - 40/360)^2000"
};

struct CandidateVerdict {
    std::string name;
    bool excluded = false;
    std::string excluding_type;             // an observed type outside the support
    std::vector<AbsenceBound> absent_support;  // support types never observed
};

struct Discrimination {
    std::vector<CandidateVerdict> candidates;
    std::string favored;  // survivor with fully observed support, if unique
    std::uint64_t observations = 0;
    std::string caveat;
};

inline Discrimination discriminate(const SampleReport& report,
                                   const std::vector<CandidateModel>& candidates) {
    if (candidates.size() < 2)
        throw ParseError("discrimination needs at least two candidate models");
    Discrimination out;
    out.observations = report.observations;
    out.caveat =
        "evidence grade: observed types are arithmetic-monodromy Frobenius classes over the "
        "sampled extension (a group containing the geometric monodromy); absence bounds use an "
        "i.i.d. model without the Chebotarev error term";
    std::vector<const CandidateModel*> survivors;
    for (const auto& cand : candidates) {
        CandidateVerdict v;
        v.name = cand.name;
        for (const auto& [type, cnt] : report.histogram) {
            (void)cnt;
            if (!cand.supports(type)) {
                v.excluded = true;
                v.excluding_type = type.display_full();
                break;
            }
        }
        if (!v.excluded) survivors.push_back(&cand);
        out.candidates.push_back(std::move(v));
    }
    if (survivors.empty())
        throw NoSurvivingCandidate(
            "every candidate is excluded by an observed type; wrong candidate list or a bug");
    // a rare class can be genuinely absent over a small field, so bounds are
    // reported only for types that would separate the surviving candidates
    for (auto& v : out.candidates) {
        if (v.excluded) continue;
        const CandidateModel* cand = nullptr;
        for (const auto* s : survivors)
            if (s->name == v.name) cand = s;
        for (const auto& [type, cnt] : cand->counts) {
            if (report.histogram.count(type)) continue;
            bool distinguishing = false;
            for (const auto* other : survivors)
                if (other != cand && !other->supports(type)) distinguishing = true;
            if (!distinguishing) continue;
            AbsenceBound b;
            b.type = type;
            b.count = cnt;
            b.order = cand->order;
            double miss = 1.0 - static_cast<double>(cnt) / static_cast<double>(cand->order);
            b.log10_probability = static_cast<double>(report.observations) * std::log10(miss);
            b.expression = "(1 - " + std::to_string(cnt) + "/" + std::to_string(cand->order) +
                           ")^" + std::to_string(report.observations);
            v.absent_support.push_back(std::move(b));
        }
    }
    std::size_t clean = 0;
    for (const auto& v : out.candidates)
        if (!v.excluded && v.absent_support.empty()) {
            ++clean;
            if (out.favored.empty()) out.favored = v.name;
        }
    if (clean != 1) out.favored.clear();
    return out;
}

// ---------------------------------------------------------------------------

inline std::string sample_report_to_text(const SampleReport& rep) {
    std::string s = "frobenius sample of " + rep.map_text + "\n";
    s += "extension degree " + std::to_string(rep.ext_degree) + ", observations " +
         std::to_string(rep.observations) + ", rejected " + std::to_string(rep.rejected) +
         ", seed " + std::to_string(rep.seed) + "\n";
    for (const auto& [type, count] : rep.histogram)
        s += "  " + type.display() + " (" + type.display_full() + "): " + std::to_string(count) + "\n";
    return s;
}

inline std::string discrimination_to_text(const Discrimination& d) {
    std::string s;
    for (const auto& v : d.candidates) {
        if (v.excluded) {
            s += v.name + ": EXCLUDED (observed type " + v.excluding_type + " outside support)\n";
        } else if (v.absent_support.empty()) {
            s += v.name + ": consistent, full support observed\n";
        } else {
            s += v.name + ": disfavored; unobserved support types:\n";
            for (const auto& b : v.absent_support)
                s += "    " + b.type.display() + ": absence probability " + b.expression +
                     " = 10^" + std::to_string(b.log10_probability) + "\n";
        }
    }
    if (!d.favored.empty()) s += "favored: " + d.favored + "\n";
    s += "caveat: " + d.caveat + "\n";
    return s;
}

} // namespace covers
