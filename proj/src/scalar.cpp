#include "folres/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace folres {

namespace {

// Dense univariate polynomials over Q, used only for field-internal reduction.
using QP = std::vector<Rational>;

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qp_mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

QP qp_sub(QP a, const QP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

QP qp_scale(QP a, const Rational& c) {
    for (auto& x : a) x *= c;
    qp_trim(a);
    return a;
}

// Remainder of a modulo monic m.
QP qp_rem_monic(QP a, const QP& m) {
    qp_trim(a);
    const size_t d = m.size() - 1;
    while (a.size() > d) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - d;
        for (size_t i = 0; i < d; ++i) a[shift + i] -= lead * m[i];
        a.pop_back();
        qp_trim(a);
    }
    return a;
}

// Extended gcd over Q[z]: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
    QP g, s, t;
};

ExtGcd qp_extgcd(QP a, QP b) {
    QP s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
    qp_trim(a);
    qp_trim(b);
    while (!b.empty()) {
        // divide a by b
        QP q{}, r = a;
        qp_trim(r);
        while (r.size() >= b.size() && !r.empty()) {
            Rational c = r.back() / b.back();
            size_t shift = r.size() - b.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += c;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
            qp_trim(r);
        }
        QP s2 = qp_sub(s0, qp_mul(q, s1));
        QP t2 = qp_sub(t0, qp_mul(q, t1));
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (a.empty()) throw DivisionByZero("gcd of zero polynomials");
    Rational lead = a.back();
    return ExtGcd{qp_scale(a, 1 / lead), qp_scale(s0, 1 / lead), qp_scale(t0, 1 / lead)};
}

}  // namespace

NumberField::NumberField(std::vector<Rational> minpoly, std::string gen)
    : minpoly_(std::move(minpoly)), gen_(std::move(gen)) {
    if (minpoly_.size() < 2) throw UnsupportedField("minimal polynomial must have degree >= 1");
    if (minpoly_.back() != 1) throw UnsupportedField("minimal polynomial must be monic");
}

Rational NumberField::power_sum(int k) const {
    const int d = degree();
    if (static_cast<int>(power_sums_.size()) <= k) {
        if (power_sums_.empty()) power_sums_.push_back(Rational(d));
        // Newton: p_k = -k e_k - sum_{i=1}^{k-1} e_i p_{k-i}, with
        // e_i = (-1)^i minpoly[d-i] (elementary symmetric functions).
        auto e = [&](int i) -> Rational {
            if (i > d) return Rational(0);
            Rational v = minpoly_[d - i];
            return (i % 2 == 0) ? v : -v;
        };
        for (int n = static_cast<int>(power_sums_.size()); n <= k; ++n) {
            Rational p = -Rational(n) * e(n);
            for (int i = 1; i < n; ++i) p -= e(i) * power_sums_[n - i];
            power_sums_.push_back(p);
        }
    }
    return power_sums_[k];
}

std::string NumberField::to_string() const {
    std::ostringstream os;
    os << "Q[" << gen_ << "]/(";
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = minpoly_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "");
        first = false;
        if (i == 0 || c != 1) {
            if (i > 0 && c == -1)
                os << "-";
            else
                os << rational_to_string(c);
        }
        if (i > 0) {
            os << gen_;
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    return os.str();
}

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rational(0));
    normalize();
}

Scalar Scalar::generator(FieldPtr field) {
    return Scalar(std::move(field), {Rational(0), Rational(1)});
}

void Scalar::normalize() {
    if (field_) {
        c_ = qp_rem_monic(c_, field_->minpoly());
    } else {
        qp_trim(c_);
        if (c_.size() > 1) throw UnsupportedField("nonconstant coefficients require a field");
    }
    if (c_.empty()) c_.push_back(Rational(0));
    // drop the field marker from elements that reduced to a rational constant?
    // No: keep the field so arithmetic stays closed under the extension.
}

bool Scalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Scalar::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const Rational& Scalar::as_rational() const {
    if (!is_rational()) throw UnsupportedField("scalar is not rational: " + to_string());
    return c_[0];
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

FieldPtr merge_fields(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b || a->same_as(*b)) return a;
    throw UnsupportedField("mixing elements of distinct extensions: " + a->to_string() +
                           " vs " + b->to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    FieldPtr f = merge_fields(field_, o.field_);
    QP r = c_;
    if (r.size() < o.c_.size()) r.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Scalar(f, std::move(r));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    FieldPtr f = merge_fields(field_, o.field_);
    return Scalar(f, qp_mul(c_, o.c_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return Scalar(field_, {1 / c_[0]});
    // extended Euclid against the minimal polynomial
    QP a = c_;
    qp_trim(a);
    ExtGcd eg = qp_extgcd(a, field_->minpoly());
    if (eg.g.size() != 1)
        throw UnsupportedField("minimal polynomial is not irreducible (gcd found)");
    return Scalar(field_, eg.s);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(Rational(1));
    r = r.lift_to(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i) {
        Rational a = i < c_.size() ? c_[i] : Rational(0);
        Rational b = i < o.c_.size() ? o.c_[i] : Rational(0);
        if (a != b) return false;
    }
    return true;
}

Rational Scalar::trace() const {
    if (!field_) return c_[0];
    Rational t(0);
    for (size_t k = 0; k < c_.size(); ++k) t += c_[k] * field_->power_sum(static_cast<int>(k));
    return t;
}

Scalar Scalar::lift_to(const FieldPtr& field) const {
    if (!field) {
        if (field_) {
            if (!is_rational())
                throw UnsupportedField("cannot restrict extension element to Q");
            return Scalar(c_[0]);
        }
        return *this;
    }
    if (!field_) return Scalar(field, c_);
    merge_fields(field_, field);
    return *this;
}

bool Scalar::canonical_less(const Scalar& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i) {
        Rational a = i < c_.size() ? c_[i] : Rational(0);
        Rational b = i < o.c_.size() ? o.c_[i] : Rational(0);
        if (a != b) return a < b;
    }
    return false;
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational_to_string(c_[0]);
    std::ostringstream os;
    const std::string& z = field_->generator_name();
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first && c_[i] > 0) os << "+";
        first = false;
        if (i == 0) {
            os << rational_to_string(c_[i]);
        } else {
            if (c_[i] == -1)
                os << "-";
            else if (c_[i] != 1)
                os << rational_to_string(c_[i]) << "*";
            os << z;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace folres
