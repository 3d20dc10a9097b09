#ifndef PCX_AUT_HPP
#define PCX_AUT_HPP

#include <string>

#include "pcx/derived.hpp"

namespace pcx {

/// Explicit coherence data of the automorphism group of a complex E:
/// vertices of G1 are quasi-automorphisms, edges are homotopies H with
/// d(H) = psi - phi, G2 carries composition-up-to-homotopy witnesses.

struct G1Vertex {
    GradedMap phi;
};

struct G1Edge {
    GradedMap phi, psi; // quasi-automorphisms
    GradedMap H;        // degree -1, d(H) = psi - phi
};

struct G2Vertex {
    GradedMap phi01, phi12, phi02; // quasi-automorphisms
    GradedMap alpha;               // degree -1, d(alpha) = phi02 - phi12 o phi01
};

struct G2Edge {
    G2Vertex top;    // (phi_ij, alpha)
    G2Vertex bottom; // (psi_ij, beta)
    GradedMap H01, H02, H12; // degree -1 edges phi_ij -> psi_ij
    GradedMap theta;         // degree -2, the 2-homotopy
};

/// Outcome of a witness check; on failure names the first violated equation
/// and the lowest degree where its two sides differ.
struct VerifyReport {
    bool ok = true;
    std::string failed_equation;
    int degree = 0;

    explicit operator bool() const { return ok; }
};

VerifyReport verify_g1_vertex(const G1Vertex& w);
VerifyReport verify_g1_edge(const G1Edge& w);
VerifyReport verify_g2_vertex(const G2Vertex& w);
/// Checks both triangles, the three connecting edges, and the 2-homotopy
/// equation d(theta) = -H02 + H12 o phi01 + psi12 o H01 + beta - alpha.
VerifyReport verify_g2_edge(const G2Edge& w);

/// Composition horn filler: (phi01, phi12) |-> (phi01, phi12, phi12 o phi01, 0).
G2Vertex fill_inner_horn(const GradedMap& phi01, const GradedMap& phi12);

struct HomotopyInverse {
    GradedMap psi;    // chain map with phi o psi ~ id and psi o phi ~ id
    GradedMap to_id;  // H  with d(H)  = id - phi o psi
    GradedMap from_id; // H' with d(H') = id - psi o phi
};

/// Solves the homotopy-inverse system in the hom complex; over a field every
/// quasi-automorphism of a bounded complex of free modules has one.
HomotopyInverse quasi_automorphism_inverse(const GradedMap& phi);

} // namespace pcx

#endif
