#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hadsub/invariants.hpp"

namespace hadsub {

/// Deterministic angle sampler. Draws via an explicit 53-bit construction so
/// identical seeds give identical streams on every platform.
class PairSampler {
public:
    explicit PairSampler(std::uint64_t seed) : rng_(seed) {}

    double angle() {
        const std::uint64_t bits = rng_() >> 11;
        return kTwoPi * (static_cast<double>(bits) * 0x1.0p-53);
    }

    PhasePair pair() { return PhasePair(angle(), angle(), angle(), angle()); }

    /// Random pairs are distinct with probability one; resample on the
    /// measure-zero degenerate draw.
    PhasePair distinct_pair() {
        for (;;) {
            const PhasePair p = pair();
            if (build_uv(p).distinct) return p;
        }
    }

    std::mt19937_64& raw() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// The six exact commuting-square pairs, as (z₁, z₂) = (e^{i(α₁−β₁)}, e^{i(α₂−β₂)})
/// patterns realized with β = 0: angles 4π/3 ↔ ω, 2π/3 ↔ ω², 0 ↔ 1.
inline std::vector<PhasePair> commuting_square_pairs() {
    const double aw = 4.0 * std::numbers::pi / 3.0;   // e^{i·aw} = ω
    const double aw2 = 2.0 * std::numbers::pi / 3.0;  // e^{i·aw2} = ω²
    return {
        PhasePair(aw, aw, 0, 0),  PhasePair(aw2, aw2, 0, 0), PhasePair(0, aw, 0, 0),
        PhasePair(0, aw2, 0, 0),  PhasePair(aw, 0, 0, 0),    PhasePair(aw2, 0, 0, 0),
    };
}

struct SuiteResult {
    std::string name;
    bool pass = false;
    double worst_residual = 0.0;
    int samples = 0;
};

/// Aggregates pair_verdicts over seeded samples plus the exact
/// commuting-square pairs; one line per named check, worst residual wins.
inline std::vector<SuiteResult> run_verification(int samples, std::uint64_t seed) {
    PairSampler sampler(seed);
    std::map<std::string, SuiteResult> agg;
    const auto feed = [&](const PhasePair& p) {
        for (const Verdict& v : pair_verdicts(p)) {
            SuiteResult& r = agg.try_emplace(v.name, SuiteResult{v.name, true, 0.0, 0}).first->second;
            r.pass = r.pass && v.pass;
            r.worst_residual = std::max(r.worst_residual, v.residual);
            r.samples += 1;
        }
    };
    for (int i = 0; i < samples; ++i) feed(sampler.distinct_pair());
    for (const PhasePair& p : commuting_square_pairs()) feed(p);

    // exact-locus checks on the six commuting-square pairs
    SuiteResult cs{"commuting_square_locus", true, 0.0, 0};
    for (const PhasePair& p : commuting_square_pairs()) {
        const double rh = std::abs(entropy_h(p) - std::log(3.0));
        const SwAngle sw = sw_angle(p);
        cs.pass = cs.pass && is_commuting_square_pair(p) && sw.right_angle_marker && rh <= 1e-12;
        cs.worst_residual = std::max(cs.worst_residual, rh);
        cs.samples += 1;
    }
    agg.emplace(cs.name, cs);

    std::vector<SuiteResult> out;
    out.reserve(agg.size());
    for (auto& [name, r] : agg) out.push_back(std::move(r));
    return out;
}

}  // namespace hadsub
