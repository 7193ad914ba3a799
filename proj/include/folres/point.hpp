#pragma once

#include <optional>
#include <string>

#include "folres/bipoly.hpp"
#include "folres/unipoly.hpp"

namespace folres {

// A point of a chart, either with explicit coordinates in the active field or
// as a conjugate orbit: one coordinate runs over the roots of an irreducible
// polynomial, the other is fixed (points of interest always sit on an axis).
class AlgebraicPoint {
public:
    static AlgebraicPoint exact(std::string chart, Scalar x, Scalar y);
    // var 0: x runs over the roots of f, y = other; var 1 the other way round.
    static AlgebraicPoint orbit(std::string chart, UniPoly f, int var, Scalar other);

    const std::string& chart() const { return chart_; }
    bool is_explicit() const { return explicit_.has_value(); }
    const Scalar& x() const { return explicit_->first; }
    const Scalar& y() const { return explicit_->second; }
    const UniPoly& orbit_poly() const { return orbit_poly_; }
    int orbit_var() const { return orbit_var_; }
    const Scalar& orbit_other() const { return other_; }
    // Number of conjugate points represented (1 for explicit points).
    int orbit_size() const;

    std::string to_string() const;

private:
    std::string chart_;
    std::optional<std::pair<Scalar, Scalar>> explicit_;
    UniPoly orbit_poly_;
    int orbit_var_ = 0;
    Scalar other_;
};

// Coordinates of (a representative of) pt inside a common field, extending the
// base field by the orbit polynomial when needed.  Throws UnsupportedField if
// that would require a nested extension.
struct PointEmbedding {
    FieldPtr field;
    Scalar x, y;
};
PointEmbedding embed_point(const AlgebraicPoint& pt, const FieldPtr& base);

// p composed with the shift moving pt to the origin (field extended if needed).
BiPoly translate_to_origin(const BiPoly& p, const AlgebraicPoint& pt);

// Square root of s in its own field, if one exists there.
std::optional<Scalar> sqrt_in_field(const Scalar& s);

}  // namespace folres
