#pragma once

#include "folres/errors.hpp"
#include "folres/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace folres {

// A simple algebraic extension Q[z]/(m(z)), m monic irreducible over Q.
// minpoly holds the coefficients of m: c0 + c1 z + ... + c_{d-1} z^{d-1} + z^d,
// stored as {c0, ..., c_{d-1}, 1}.
class NumberField {
public:
    explicit NumberField(std::vector<Rational> minpoly, std::string gen = "z");

    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    const std::vector<Rational>& minpoly() const { return minpoly_; }
    const std::string& generator_name() const { return gen_; }

    // Power sums p_k = sum of k-th powers of the roots of the minimal
    // polynomial, via Newton's identities. Used to take traces.
    Rational power_sum(int k) const;

    bool same_as(const NumberField& other) const { return minpoly_ == other.minpoly_; }

    std::string to_string() const;

private:
    std::vector<Rational> minpoly_;
    std::string gen_;
    mutable std::vector<Rational> power_sums_;  // cache, grown on demand
};

using FieldPtr = std::shared_ptr<const NumberField>;

// An element of the active coefficient field: Q when field() is null,
// otherwise Q[z]/(m) in the power basis of z.
class Scalar {
public:
    Scalar() : c_{Rational(0)} {}
    Scalar(const Rational& r) : c_{r} {}
    Scalar(long n) : c_{Rational(n)} {}
    Scalar(int n) : c_{Rational(n)} {}
    Scalar(FieldPtr field, std::vector<Rational> coeffs);

    static Scalar generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const Rational& as_rational() const;  // requires is_rational()

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Sum over the conjugates of this element (rational by Galois stability).
    Rational trace() const;

    // View this element in a larger field; the element must be rational or the
    // fields must agree.
    Scalar lift_to(const FieldPtr& field) const;

    // Total ordering used only for canonical sorting of report entries.
    bool canonical_less(const Scalar& o) const;

    std::string to_string() const;

private:
    void normalize();

    FieldPtr field_;  // null = Q
    std::vector<Rational> c_;
};

// Common field of two elements; throws UnsupportedField on a genuine mismatch.
FieldPtr merge_fields(const FieldPtr& a, const FieldPtr& b);

}  // namespace folres
