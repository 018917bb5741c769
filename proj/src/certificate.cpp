#include "torus/certificate.hpp"

#include <openssl/evp.h>

#include <cstdio>

#include "torus/json_io.hpp"

namespace torus {

std::string CapacityClaim::description() const {
    std::string space_tag = space == "circle" ? "T" : space;
    std::string eps_tag = eps.den() == 1 ? eps.num().get_str()
                                         : eps.num().get_str() + "/" + eps.den().get_str();
    return "C_d(" + space_tag + "," + eps_tag + ")=" + std::to_string(capacity);
}

std::string coloring_digest(const EdgeColoring& coloring) {
    std::string payload = io::to_json(coloring).dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(payload.data(), payload.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex.append(buf, 2);
    }
    return hex;
}

RamseyCertificate emit_certificate(const EdgeColoring& coloring, long k,
                                   const CapacityClaim& capacity, ExecPolicy policy) {
    if (k < 2) throw ValidationError("bad_clique_size", "certificates require k >= 2");
    if (!capacity.verified) {
        throw UnverifiedCapacity("capacity claim " + capacity.description() +
                                 " has not been verified");
    }
    if (capacity.space != "circle") {
        throw UnverifiedCapacity("only the circle capacity claim is accepted, got space \"" +
                                 capacity.space + "\"");
    }
    if (capacity.capacity != k) {
        throw UnverifiedCapacity("capacity claim asserts capacity " +
                                 std::to_string(capacity.capacity) +
                                 " but the certificate forbids K_" + std::to_string(k + 1));
    }

    auto witness = find_mono_clique(coloring, k + 1, policy);
    if (witness) {
        std::string verts;
        for (int v : *witness) verts += (verts.empty() ? "" : ",") + std::to_string(v);
        throw MonochromaticCliqueExists(*witness, "coloring contains a monochromatic K_" +
                                                      std::to_string(k + 1) + " on vertices [" +
                                                      verts + "]");
    }

    RamseyCertificate cert;
    cert.k_plus_1 = k + 1;
    cert.num_colors = coloring.num_colors();
    cert.num_vertices = coloring.vertex_count();
    cert.digest = coloring_digest(coloring);
    cert.capacity = capacity.description();
    cert.claim = "R(" + std::to_string(cert.k_plus_1) + "," + std::to_string(cert.num_colors) +
                 ") > " + std::to_string(cert.num_vertices);
    return cert;
}

VerifyOutcome verify_certificate(const RamseyCertificate& cert, const EdgeColoring& coloring,
                                 ExecPolicy policy) {
    if (cert.k_plus_1 < 3) return {false, "certificate k+1 below 3"};
    if (cert.num_vertices != coloring.vertex_count()) {
        return {false, "certificate vertex count " + std::to_string(cert.num_vertices) +
                           " does not match the coloring's " +
                           std::to_string(coloring.vertex_count())};
    }
    if (cert.num_colors != coloring.num_colors()) {
        return {false, "certificate color count does not match the coloring"};
    }
    std::string digest = coloring_digest(coloring);
    if (digest != cert.digest) {
        return {false, "digest mismatch: coloring hashes to " + digest};
    }
    std::string expected_claim = "R(" + std::to_string(cert.k_plus_1) + "," +
                                 std::to_string(cert.num_colors) + ") > " +
                                 std::to_string(cert.num_vertices);
    if (cert.claim != expected_claim) {
        return {false, "claim string does not match the certificate parameters"};
    }
    auto witness = find_mono_clique(coloring, cert.k_plus_1, policy);
    if (witness) {
        return {false, "coloring contains a monochromatic K_" + std::to_string(cert.k_plus_1)};
    }
    return {true, ""};
}

}  // namespace torus
