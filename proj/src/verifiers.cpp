#include "torus/verifiers.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "torus/rng.hpp"

namespace torus {

namespace {

long pow6(long l) {
    if (l < 1 || l > 20) throw ValidationError("bad_exponent", "need 1 <= l <= 20");
    long p = 1;
    for (long i = 0; i < l; ++i) p *= 6;
    return p;
}

Rational pow3_inverse(long n) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 3, static_cast<unsigned long>(n));
    return Rational(mpz_class(1), d);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

const char* to_string(ClaimId id) {
    switch (id) {
        case ClaimId::Lemma2_1: return "Lemma2_1";
        case ClaimId::Lemma2_2: return "Lemma2_2";
        case ClaimId::Prop2_3: return "Prop2_3";
        case ClaimId::CapacityCircle: return "CapacityCircle";
        case ClaimId::ArSeparated: return "ArSeparated";
    }
    return "?";
}

VerificationReport verify_lemma_2_1(long p, long n, const Rational& eps,
                                    const std::vector<CirclePoint>& samples) {
    VerificationReport report;
    report.claim_id = ClaimId::Lemma2_1;
    report.parameters = {{"p", std::to_string(p)},
                         {"n", std::to_string(n)},
                         {"eps", eps.str()},
                         {"samples", std::to_string(samples.size())}};

    PLCircleMap map = PLCircleMap::times_p(p);
    ArcUnion centered = bowen_ball(map, CirclePoint(), n, eps);

    bool all_ok = true;
    for (const CirclePoint& x : samples) {
        ArcUnion direct = bowen_ball(map, x, n, eps);
        ArcUnion translated = translate(centered, x);
        bool ok = direct == translated;
        report.details.push_back({"x=" + x.str(),
                                  {{"measure", direct.measure().str()},
                                   {"translate_matches", bool_str(ok)}},
                                  ok});
        if (!ok && all_ok) {
            all_ok = false;
            report.counterexample = "B_n(" + x.str() + ", eps) differs from the translate";
        }
    }
    report.verdict = all_ok ? VerificationReport::Verdict::pass : VerificationReport::Verdict::fail;
    return report;
}

VerificationReport verify_lemma_2_2(long l, long n) {
    VerificationReport report;
    report.claim_id = ClaimId::Lemma2_2;
    long p = pow6(l);
    report.parameters = {{"l", std::to_string(l)}, {"p", std::to_string(p)}, {"n", std::to_string(n)}};

    PLCircleMap map = PLCircleMap::times_p(p);
    const Rational sixth(1, 6);
    ArcUnion ball_n = bowen_ball(map, CirclePoint(), n, sixth);
    ArcUnion ball_n1 = bowen_ball(map, CirclePoint(), n + 1, sixth);

    bool all_ratios_ok = true;
    std::size_t hypothesis_failures = 0;

    for (const Arc& component : ball_n.arcs()) {
        CirclePoint a = component.start;
        CirclePoint b = component.end();
        CirclePoint fa = iterate(map, a, n + 1).points.back();
        CirclePoint fb = iterate(map, b, n + 1).points.back();
        bool hypothesis = fa == CirclePoint() && fb == CirclePoint();

        Rational piece = intersect(ball_n1, ArcUnion::single(component)).measure();
        Rational third_of_component = component.length / Rational(3);
        bool ratio_ok = piece == third_of_component;

        report.details.push_back(
            {"J=(" + a.str() + "," + b.str() + ")",
             {{"endpoint_hypothesis", bool_str(hypothesis)},
              {"mu_J", component.length.str()},
              {"mu_intersection", piece.str()},
              {"ratio_exact", bool_str(ratio_ok)}},
             hypothesis && ratio_ok});

        if (!hypothesis) ++hypothesis_failures;
        if (hypothesis && !ratio_ok && all_ratios_ok) {
            all_ratios_ok = false;
            report.counterexample = "component starting at " + a.str() + " has measure ratio " +
                                    (piece / component.length).str();
        }
    }
    report.parameters.push_back({"components", std::to_string(ball_n.arcs().size())});
    report.parameters.push_back({"hypothesis_failures", std::to_string(hypothesis_failures)});
    report.verdict =
        all_ratios_ok ? VerificationReport::Verdict::pass : VerificationReport::Verdict::fail;
    return report;
}

VerificationReport verify_prop_2_3(long l, long n) {
    VerificationReport report;
    report.claim_id = ClaimId::Prop2_3;
    long p = pow6(l);
    report.parameters = {{"l", std::to_string(l)}, {"p", std::to_string(p)}, {"n", std::to_string(n)}};

    PLCircleMap map = PLCircleMap::times_p(p);
    Rational mu = bowen_ball(map, CirclePoint(), n, Rational(1, 6)).measure();
    Rational expected = pow3_inverse(n);
    mpz_class bound = packing_upper_bound(map, n, Rational(1, 3));
    mpz_class expected_bound;
    mpz_ui_pow_ui(expected_bound.get_mpz_t(), 3, static_cast<unsigned long>(n));

    bool ok = mu == expected && bound == expected_bound;
    report.details.push_back({"ball_measure",
                              {{"mu", mu.str()},
                               {"expected", expected.str()},
                               {"packing_bound", bound.get_str()}},
                              ok});
    if (!ok) report.counterexample = "measure " + mu.str() + ", expected " + expected.str();
    report.verdict = ok ? VerificationReport::Verdict::pass : VerificationReport::Verdict::fail;
    return report;
}

VerificationReport verify_ar_separated(long r, ExecPolicy policy) {
    VerificationReport report;
    report.claim_id = ClaimId::ArSeparated;
    if (r < 1 || r > 30) throw ValidationError("bad_rank", "need 1 <= r <= 30");
    report.parameters = {{"r", std::to_string(r)}};

    const std::uint64_t count = std::uint64_t(1) << r;
    std::vector<CirclePoint> points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        points.push_back(reduce(Rational(static_cast<long>(i), static_cast<long>(count))));
    }

    PLCircleMap doubling = PLCircleMap::times_p(2);
    CertifyResult cert = certify_separated(doubling, points, r, Rational(1, 3), policy);
    if (cert.certified) {
        BoundMonitor::instance().record_certified(r, Rational(1, 3), points.size(),
                                                  "verify_ar_separated");
    }

    // Independent oracle in pure integer arithmetic: for i != j write
    // i - j = 2^s * odd; after r-s-1 doublings the difference is 2^{r-1}/2^r,
    // i.e. distance exactly 1/2. Verified for every pair.
    bool oracle_ok = true;
    std::uint64_t bad_i = 0, bad_j = 0;
    for (std::uint64_t i = 0; i < count && oracle_ok; ++i) {
        for (std::uint64_t j = i + 1; j < count; ++j) {
            std::uint64_t diff = j - i;
            int s = __builtin_ctzll(diff);
            std::uint64_t shifted = (diff << (r - s - 1)) & (count - 1);
            if (shifted != count / 2) {
                oracle_ok = false;
                bad_i = i;
                bad_j = j;
                break;
            }
        }
    }

    report.details.push_back({"certification",
                              {{"pairs", std::to_string(cert.pair_count)},
                               {"certified", bool_str(cert.certified)},
                               {"closed_form_half_distance", bool_str(oracle_ok)}},
                              cert.certified && oracle_ok});
    if (!cert.certified) {
        report.counterexample = "pair rank " + std::to_string(cert.first_violation) +
                                " is not separated";
    } else if (!oracle_ok) {
        report.counterexample = "pair (" + std::to_string(bad_i) + ", " + std::to_string(bad_j) +
                                ") misses distance 1/2 at the closed-form index";
    }
    report.verdict = cert.certified && oracle_ok ? VerificationReport::Verdict::pass
                                                 : VerificationReport::Verdict::fail;
    return report;
}

long min_expansion_p(const Rational& delta) {
    if (delta.sign() <= 0 || delta >= Rational(1, 2)) {
        throw ValidationError("bad_delta", "need 0 < delta < 1/2, got " + delta.str());
    }
    // ceil(1 / (2 delta)) = ceil(den / (2 num))
    mpz_class two_num = 2 * delta.num();
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), delta.den().get_mpz_t(), two_num.get_mpz_t());
    if (!q.fits_slong_p()) throw ValidationError("bad_delta", "expansion degree overflows");
    return q.get_si();
}

ShadowResult shadow_orbit(const std::vector<CirclePoint>& targets, const Rational& delta,
                          long p) {
    if (targets.empty()) throw ValidationError("empty_targets", "need at least one target point");
    if (delta.sign() <= 0 || delta >= Rational(1, 2)) {
        throw ValidationError("bad_delta", "need 0 < delta < 1/2, got " + delta.str());
    }
    if (p < 1) throw ValidationError("bad_times_p", "need p >= 1");

    PLCircleMap map = PLCircleMap::times_p(p);
    const std::size_t n = targets.size();

    ArcUnion feasible = open_ball(targets[n - 1], delta);
    for (std::size_t j = n - 1; j-- > 0;) {
        feasible = intersect(open_ball(targets[j], delta), preimage(map, feasible));
        if (feasible.is_empty()) {
            throw EmptyIntersection(
                p, "shadowing intersection is empty at step " + std::to_string(j) +
                       "; p = " + std::to_string(p) + " is below the expansion threshold " +
                       std::to_string(min_expansion_p(delta)));
        }
    }

    // Canonical representative: midpoint of a largest component, smallest
    // start point on ties.
    assert(!feasible.is_full());
    const Arc* pick = nullptr;
    for (const Arc& arc : feasible.arcs()) {
        if (!pick || arc.length > pick->length) pick = &arc;
    }
    ShadowResult result;
    result.p = p;
    result.y = pick->start + pick->length / Rational(2);

    OrbitSegment orbit = iterate(map, result.y, static_cast<long>(n));
    result.deviations.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.deviations.push_back(circle_dist(orbit.points[i], targets[i]));
        assert(result.deviations.back() < delta);
    }
    return result;
}

std::vector<ShadowResult> shadow_many(const std::vector<std::vector<CirclePoint>>& orbit_targets,
                                      const Rational& delta, long p) {
    std::vector<ShadowResult> out;
    out.reserve(orbit_targets.size());
    for (const auto& targets : orbit_targets) out.push_back(shadow_orbit(targets, delta, p));
    return out;
}

TransferResult transfer_separated(const PLCircleMap& g, const std::vector<CirclePoint>& points,
                                  long n, const Rational& eps, ExecPolicy policy) {
    if (points.empty()) throw ValidationError("empty_set", "transfer needs a nonempty set");
    if (n < 1) throw ValidationError("bad_bowen_steps", "transfer requires n >= 1");

    // Re-derive the separation slack instead of trusting the caller.
    std::optional<Rational> d_min;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Rational d = bowen_dist(g, points[i], points[j], n);
            if (!d_min || d < *d_min) d_min = d;
        }
    }

    Rational delta;
    if (!d_min) {
        delta = eps;  // single point: no pairs constrain the choice
    } else {
        if (*d_min == eps) {
            throw NoSlack("minimal Bowen distance equals eps = " + eps.str() +
                          " exactly; transfer needs strict separation");
        }
        if (*d_min < eps) {
            throw ValidationError("not_separated",
                                  "input set is not (n, eps)-separated: min Bowen distance " +
                                      d_min->str());
        }
        delta = (*d_min - eps) / Rational(2);
    }

    Rational radius = delta / Rational(2);
    long p = min_expansion_p(radius);

    TransferResult result;
    result.p = p;
    result.delta = delta;
    result.points.reserve(points.size());
    for (const CirclePoint& x : points) {
        OrbitSegment orbit = iterate(g, x, n);
        result.points.push_back(shadow_orbit(orbit.points, radius, p).y);
    }

    result.certification =
        is_separated(PLCircleMap::times_p(p), result.points, n, eps, SepScanOptions{policy, true});
    return result;
}

VerificationReport verify_capacity_circle(std::size_t num_random_triples, std::uint64_t seed) {
    VerificationReport report;
    report.claim_id = ClaimId::CapacityCircle;
    report.parameters = {{"random_triples", std::to_string(num_random_triples)},
                         {"seed", std::to_string(seed)}};
    report.seed = seed;

    const Rational third(1, 3);

    // Capacity >= 2: the pair {0, 1/2} at distance 1/2 > 1/3.
    CirclePoint zero;
    CirclePoint half = reduce(Rational(1, 2));
    bool witness_ok = circle_dist(zero, half) > third;
    report.details.push_back(
        {"pair_witness", {{"d(0,1/2)", circle_dist(zero, half).str()}}, witness_ok});

    // Capacity <= 2: any triple has some pair at distance <= 1/3 (the three
    // gaps sum to 1, so the smallest is at most 1/3).
    auto triple_ok = [&](const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
        return circle_dist(a, b) <= third || circle_dist(a, c) <= third ||
               circle_dist(b, c) <= third;
    };

    std::vector<std::array<CirclePoint, 3>> adversarial = {
        {zero, reduce(Rational(1, 3)), reduce(Rational(2, 3))},
        {reduce(Rational(1, 7)), reduce(Rational(1, 7) + Rational(1, 3)),
         reduce(Rational(1, 7) + Rational(2, 3))},
        {zero, reduce(Rational(333, 1000)), reduce(Rational(667, 1000))},
        {zero, reduce(Rational(1, 3) + Rational(1, 1000000)),
         reduce(Rational(2, 3) - Rational(1, 1000000))},
        {zero, zero, half},
    };

    bool all_ok = witness_ok;
    for (const auto& t : adversarial) {
        bool ok = triple_ok(t[0], t[1], t[2]);
        report.details.push_back({"adversarial (" + t[0].str() + "," + t[1].str() + "," +
                                      t[2].str() + ")",
                                  {{"some_pair_le_third", bool_str(ok)}},
                                  ok});
        if (!ok && all_ok) {
            all_ok = false;
            report.counterexample = "triple (" + t[0].str() + "," + t[1].str() + "," + t[2].str() +
                                    ") has all pairwise distances > 1/3";
        }
    }

    SplitMix64 rng(seed);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < num_random_triples; ++k) {
        CirclePoint a = random_point(rng, 10000);
        CirclePoint b = random_point(rng, 10000);
        CirclePoint c = random_point(rng, 10000);
        if (!triple_ok(a, b, c)) {
            ++failures;
            if (all_ok) {
                all_ok = false;
                report.counterexample = "random triple (" + a.str() + "," + b.str() + "," +
                                        c.str() + ") has all pairwise distances > 1/3";
            }
        }
    }
    report.details.push_back({"random_triples",
                              {{"checked", std::to_string(num_random_triples)},
                               {"failures", std::to_string(failures)}},
                              failures == 0});

    report.verdict = all_ok ? VerificationReport::Verdict::pass : VerificationReport::Verdict::fail;
    return report;
}

CapacityClaim verified_circle_capacity(std::size_t num_random_triples, std::uint64_t seed) {
    VerificationReport report = verify_capacity_circle(num_random_triples, seed);
    CapacityClaim claim;
    claim.space = "circle";
    claim.eps = Rational(1, 3);
    claim.capacity = 2;
    claim.verified = report.passed();
    return claim;
}

}  // namespace torus
