#pragma once

#include <optional>

#include "folres/forms.hpp"
#include "folres/unipoly.hpp"

namespace folres {

// (Omega, eta, xi) subject to dOmega = eta^Omega, deta = Omega^xi,
// dxi = xi^eta.
struct ProjectiveTriple {
    OneForm Omega, eta, xi;
};

struct TripleVerdict {
    bool p1 = false, p2 = false, p3 = false;
    TwoForm r1, r2, r3;  // residual 2-forms for the failing axioms
    bool affine = false;  // deta = 0 and xi = 0
    bool pass() const { return p1 && p2 && p3; }
};

TripleVerdict verify_triple(const ProjectiveTriple& t);

struct ModificationParams {
    RationalFunction g, h;
};

// Omega' = g Omega; eta' = eta + dg/g + h Omega;
// xi' = (1/g)(xi - dh - h eta - (h^2/2) Omega).
ProjectiveTriple modify_triple(const ProjectiveTriple& t, const ModificationParams& p);

// df as a 1-form.
OneForm differential(const RationalFunction& f);

struct ExtractedF {
    RationalFunction F;
    bool closedness_ok = true;  // dOmega = -1/2 (dF/F) ^ Omega; vacuous at F = 0
};

// The multiplier in xi2 = xi1 + F Omega; the triples must share Omega and eta.
// Throws NotProportional when xi2 - xi1 is not a multiple of Omega.
ExtractedF extract_F(const ProjectiveTriple& t1, const ProjectiveTriple& t2);

enum class NormalFormCase { LinearI, SaddleNodeII, ResonantIII };

struct NormalFormParams {
    Scalar lambda;                 // case (i)
    long ell = 1;                  // case (ii)
    Scalar c;                      // case (ii) free constant
    // optional univariate correction composed with x^k y^l, case (i) resonant
    std::optional<std::pair<UniPoly, UniPoly>> phi;  // numerator / denominator
    long phi_k = 1, phi_l = 1;
};

// Builds Omega and F of the given family and checks dOmega = -1/2 (dF/F)^Omega.
bool check_normal_form_identity(NormalFormCase which, const RationalFunction& g,
                                const NormalFormParams& params);

// (g, h) followed by (1/g, -h/g) must reproduce the triple exactly.
bool roundtrip_check(const ProjectiveTriple& t, const ModificationParams& p);

}  // namespace folres
