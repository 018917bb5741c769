#pragma once

#include <string>

#include "torus/coloring.hpp"

namespace torus {

// Capacity statement C_d(space, eps) = capacity backing a certificate.
// Only the circle claim, checked by the verifier module, is ever marked
// verified in this artifact.
struct CapacityClaim {
    std::string space;  // "circle"
    Rational eps;
    long capacity = 0;
    bool verified = false;

    std::string description() const;  // e.g. "C_d(T,1/3)=2"
};

// Self-contained record asserting R(k+1, n) > m from a checked coloring.
struct RamseyCertificate {
    long k_plus_1 = 0;
    long num_colors = 0;
    std::size_t num_vertices = 0;
    std::string digest;     // content hash of the coloring
    std::string capacity;   // capacity claim description
    std::string claim;      // e.g. "R(3,5) > 32"

    bool operator==(const RamseyCertificate& o) const = default;
};

// SHA-256 hex digest of the coloring's canonical JSON serialization.
std::string coloring_digest(const EdgeColoring& coloring);

// Emits the certificate after re-checking that the coloring has no
// monochromatic (k+1)-clique; throws MonochromaticCliqueExists (with the
// witness) or UnverifiedCapacity otherwise.
RamseyCertificate emit_certificate(const EdgeColoring& coloring, long k,
                                   const CapacityClaim& capacity,
                                   ExecPolicy policy = ExecPolicy::parallel);

struct VerifyOutcome {
    bool ok = false;
    std::string reason;  // empty when ok
};

// Independent re-check: digest match, parameter match, and a fresh
// monochromatic-clique scan.
VerifyOutcome verify_certificate(const RamseyCertificate& cert, const EdgeColoring& coloring,
                                 ExecPolicy policy = ExecPolicy::parallel);

}  // namespace torus
