#pragma once

#include "folres/scalar.hpp"
#include "folres/unipoly.hpp"

#include <map>
#include <string>
#include <utility>

namespace folres {

// Exponent pair (i, j) for x^i y^j under graded-lex order (total degree first,
// then x-degree); the map iterates smallest-first, so rbegin() is the leading
// term.
struct GradedLex {
    bool operator()(const std::pair<long, long>& a, const std::pair<long, long>& b) const {
        long da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    }
};

// Sparse bivariate polynomial over the active coefficient field.
class BiPoly {
public:
    using Exp = std::pair<long, long>;
    using Terms = std::map<Exp, Scalar, GradedLex>;

    BiPoly() = default;
    explicit BiPoly(const Scalar& c);
    explicit BiPoly(const Rational& c) : BiPoly(Scalar(c)) {}

    static BiPoly monomial(const Scalar& c, long i, long j);
    static BiPoly var_x() { return monomial(Scalar(Rational(1)), 1, 0); }
    static BiPoly var_y() { return monomial(Scalar(Rational(1)), 0, 1); }
    static BiPoly from_unipoly(const UniPoly& p, int var);  // var 0 -> x, 1 -> y

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coeff(long i, long j) const;
    long total_degree() const;     // -1 for zero
    long multiplicity() const;     // minimal total degree of a term; -1 for zero
    long degree_in(int var) const;
    FieldPtr field() const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Scalar& s) const;
    bool operator==(const BiPoly& o) const;
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly derivative(int var) const;
    Scalar eval(const Scalar& x, const Scalar& y) const;
    UniPoly restrict_to_axis(int zero_var) const;  // p(0, y) for zero_var 0; p(x, 0) for 1
    BiPoly substitute(int var, const Scalar& value) const;
    BiPoly compose(const BiPoly& fx, const BiPoly& fy) const;  // p(fx, fy)
    BiPoly translated(const Scalar& a, const Scalar& b) const;  // p(x + a, y + b)
    BiPoly pow(long e) const;
    BiPoly lift_to(const FieldPtr& field) const;

    // Exact division; second result is false if not divisible.
    std::pair<BiPoly, bool> divide_exact(const BiPoly& d) const;

    // Leading coefficient under graded-lex.
    Scalar leading_coeff() const;
    // Same polynomial scaled so the graded-lex leading coefficient is 1.
    BiPoly canonical() const;

    std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

private:
    void add_term(const Exp& e, const Scalar& c);
    Terms t_;
};

BiPoly gcd(const BiPoly& a, const BiPoly& b);  // canonical (leading coeff 1)

}  // namespace folres
