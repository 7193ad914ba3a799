#pragma once

#include "folres/bipoly.hpp"

namespace folres {

// Quotient of bivariate polynomials, stored gcd-reduced with the denominator's
// graded-lex leading coefficient equal to 1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Scalar(Rational(1))) {}
    RationalFunction(const BiPoly& num, const BiPoly& den);
    RationalFunction(const BiPoly& p) : RationalFunction(p, BiPoly(Scalar(Rational(1)))) {}
    RationalFunction(const Scalar& c) : RationalFunction(BiPoly(c)) {}
    RationalFunction(const Rational& c) : RationalFunction(BiPoly(Scalar(c))) {}

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    FieldPtr field() const { return merge_fields(num_.field(), den_.field()); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative(int var) const;
    RationalFunction compose(const BiPoly& fx, const BiPoly& fy) const;
    RationalFunction pow(long e) const;
    RationalFunction lift_to(const FieldPtr& f) const;

    std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

private:
    void reduce();
    BiPoly num_, den_;
};

}  // namespace folres
