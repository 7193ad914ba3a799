#pragma once

#include "folres/scalar.hpp"

#include <utility>
#include <vector>

namespace folres {

// Dense univariate polynomial over the active coefficient field.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(const Scalar& constant) : c_{constant} { trim(); }

    static UniPoly variable(const FieldPtr& field = nullptr);
    static UniPoly from_roots(const std::vector<Scalar>& roots);

    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Scalar& leading() const { return c_.back(); }
    Scalar coeff(int i) const;
    FieldPtr field() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Scalar& s) const;
    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Quotient and remainder; divisor's leading coefficient must be invertible.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    UniPoly shifted(const Scalar& a) const;  // p(t + a)
    UniPoly pow(long e) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> c_;  // c_[i] * t^i, no trailing zeros
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic

struct UniFactor {
    UniPoly factor;  // irreducible over the active field, monic
    int multiplicity;
};

// Squarefree decomposition (Yun): p = unit * prod f_i^i with f_i squarefree,
// pairwise coprime.
std::vector<UniFactor> squarefree_decomposition(const UniPoly& p);

// Full factorization per the v1 field strategy: rational-root extraction plus
// irreducibility certification for degree <= 3 over Q; over a proper extension
// only root deflation of degree <= 2 factors is attempted.  Throws
// UnsupportedField when irreducibility cannot be certified.
std::vector<UniFactor> factor_univariate(const UniPoly& p);

// Roots of p in the active field, with multiplicities.
std::vector<std::pair<Scalar, int>> field_roots(const UniPoly& p);

// Exact residue of num/den at the given pole (0 at a regular point).
Scalar residue_at(const UniPoly& num, const UniPoly& den, const Scalar& pole);

}  // namespace folres
