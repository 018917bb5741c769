#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torus/certificate.hpp"
#include "torus/separated.hpp"

namespace torus {

enum class ClaimId { Lemma2_1, Lemma2_2, Prop2_3, CapacityCircle, ArSeparated };

const char* to_string(ClaimId id);

// Outcome of one executable theorem check. Fail verdicts always carry a
// concrete counterexample instance in `counterexample`.
struct VerificationReport {
    ClaimId claim_id{};
    std::vector<std::pair<std::string, std::string>> parameters;
    enum class Verdict { pass, fail, unsupported } verdict = Verdict::fail;

    struct Detail {
        std::string label;
        std::vector<std::pair<std::string, std::string>> values;
        bool ok = true;
    };
    std::vector<Detail> details;
    std::optional<std::uint64_t> seed;
    std::string counterexample;

    bool passed() const { return verdict == Verdict::pass; }
};

// Translation equivariance of Bowen balls: B_n(x, eps) == x + B_n(0, eps)
// under the xp map, checked by exact arc-union equality per sample point.
VerificationReport verify_lemma_2_1(long p, long n, const Rational& eps,
                                    const std::vector<CirclePoint>& samples);

// For p = 6^l: every component J = (a, b) of B_n(0, 1/6) has its endpoints
// mapped to 0 by f_p^n, and mu(B_{n+1} cap J) = mu(J)/3 exactly. Components
// failing the endpoint hypothesis are listed, never silently skipped.
VerificationReport verify_lemma_2_2(long l, long n);

// For p = 6^l: mu(B_n(0, 1/6)) = 3^{-n} exactly, and the packing bound is 3^n.
VerificationReport verify_prop_2_3(long l, long n);

// A_r = {i/2^r} is (r, 1/3)-separated under doubling; the closed-form oracle
// (writing i - j = 2^s * odd, iterate r-s-1 realizes distance exactly 1/2)
// is checked for every pair by independent integer arithmetic.
VerificationReport verify_ar_separated(long r, ExecPolicy policy = ExecPolicy::parallel);

// Smallest p for which the f_p image of every open interval of length
// 2*delta wraps around the whole circle: ceil(1/(2 delta)).
long min_expansion_p(const Rational& delta);

// One exactly-tracked orbit: deviations[i] = d(f_p^i(y), targets[i]) < delta.
struct ShadowResult {
    CirclePoint y;
    long p = 0;
    std::vector<Rational> deviations;
};

// Nested-preimage shadowing. y is the midpoint of a largest-measure
// component of the intersection (smallest start point on ties).
ShadowResult shadow_orbit(const std::vector<CirclePoint>& targets, const Rational& delta, long p);

std::vector<ShadowResult> shadow_many(const std::vector<std::vector<CirclePoint>>& orbit_targets,
                                      const Rational& delta, long p);

// Moves a separated set for an arbitrary PL map g onto a xp system: shadows
// every g-orbit within half the separation slack and re-certifies the
// shadow points for f_p from scratch.
struct TransferResult {
    long p = 0;
    std::vector<CirclePoint> points;
    Rational delta;  // half the separation slack
    SeparatedSetReport certification;
};

TransferResult transfer_separated(const PLCircleMap& g, const std::vector<CirclePoint>& points,
                                  long n, const Rational& eps,
                                  ExecPolicy policy = ExecPolicy::parallel);

// Capacity of the circle at eps = 1/3: every rational triple has some pair
// at distance <= 1/3 (checked over adversarial plus seeded random triples),
// while {0, 1/2} witnesses capacity >= 2.
VerificationReport verify_capacity_circle(std::size_t num_random_triples, std::uint64_t seed);

// Runs verify_capacity_circle and wraps the outcome as a claim for
// certificate emission.
CapacityClaim verified_circle_capacity(std::size_t num_random_triples, std::uint64_t seed);

}  // namespace torus
