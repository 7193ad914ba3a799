#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folres/forms.hpp"
#include "folres/point.hpp"

namespace folres {

enum class SingClass {
    Regular,
    Tangency,
    NondegenerateNonresonant,
    NondegenerateResonant,
    Hyperbolic,
    RealIrrationalUnknown,
    SaddleNode,
    NotIrreducible,
};

std::string to_string(SingClass c);

// Polynomial 1-form a dx + b dy with gcd(a, b) = 1; the common factor removed
// on construction is kept for inspection.
class FoliationForm {
public:
    FoliationForm(BiPoly a, BiPoly b, std::string chart = "base");

    const BiPoly& a() const { return a_; }
    const BiPoly& b() const { return b_; }
    const std::string& chart() const { return chart_; }
    const BiPoly& divided_factor() const { return divided_; }
    FieldPtr field() const { return merge_fields(a_.field(), b_.field()); }

    OneForm form() const { return {RationalFunction(a_), RationalFunction(b_)}; }
    // Algebraic multiplicity at the origin: minimal total degree over both
    // coefficients.
    long multiplicity() const;
    bool singular_at_origin() const;

    FoliationForm translated(const Scalar& x0, const Scalar& y0) const;
    FoliationForm lift_to(const FieldPtr& f) const;

    std::string to_string() const;

private:
    BiPoly a_, b_, divided_;
    std::string chart_;
};

struct SingularityRecord {
    AlgebraicPoint location;
    SingClass cls = SingClass::Regular;
    std::optional<Scalar> eig1, eig2;  // eigenvalues of the linear part of X = (-b, a)
    std::optional<Scalar> ratio;       // eigenvalue ratio, defined up to inversion
    bool ratio_infinite = false;       // saddle-node convention
    long saddle_node_order = -1;       // -1: not applicable or not computable
    std::map<std::string, Scalar> indices;  // divisor component id -> CS index
    std::map<std::string, bool> resonant_separatrix;
};

// curve divides the dx^dy coefficient of w ^ d(curve)?
bool is_invariant(const FoliationForm& F, const BiPoly& curve);

// Classification of the germ at the origin of F's chart.
SingularityRecord classify(const FoliationForm& F);

// Camacho-Sad index of F along an invariant axis at q on that axis.
// sigma 0 designates {x = 0} (q is a y-value), sigma 1 designates {y = 0}.
Scalar cs_index(const FoliationForm& F, int sigma, const Scalar& q);

// Zeros along a non-invariant axis of the coefficient whose vanishing makes F
// tangent to it, with multiplicities; singular points of F on the axis are
// among them.  Orbits of conjugate zeros come out as one point each.
std::vector<std::pair<AlgebraicPoint, int>> tangency_points(const FoliationForm& F,
                                                            int sigma);

}  // namespace folres
