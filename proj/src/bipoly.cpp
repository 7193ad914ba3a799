#include "folres/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace folres {

BiPoly::BiPoly(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(Exp{0, 0}, c);
}

BiPoly BiPoly::monomial(const Scalar& c, long i, long j) {
    BiPoly p;
    if (!c.is_zero()) p.t_.emplace(Exp{i, j}, c);
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, int var) {
    BiPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        Scalar c = p.coeff(i);
        if (c.is_zero()) continue;
        out.t_.emplace(var == 0 ? Exp{i, 0} : Exp{0, i}, c);
    }
    return out;
}

bool BiPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0});
}

Scalar BiPoly::constant_term() const { return coeff(0, 0); }

Scalar BiPoly::coeff(long i, long j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Scalar(Rational(0)) : it->second;
}

long BiPoly::total_degree() const {
    if (t_.empty()) return -1;
    auto& e = t_.rbegin()->first;
    return e.first + e.second;
}

long BiPoly::multiplicity() const {
    if (t_.empty()) return -1;
    auto& e = t_.begin()->first;
    return e.first + e.second;
}

long BiPoly::degree_in(int var) const {
    long d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, var == 0 ? e.first : e.second);
    return d;
}

FieldPtr BiPoly::field() const {
    for (const auto& [e, c] : t_)
        if (c.field()) return c.field();
    return nullptr;
}

void BiPoly::add_term(const Exp& e, const Scalar& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_)
            r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
}

BiPoly BiPoly::operator*(const Scalar& s) const {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) {
        Scalar v = c * s;
        if (!v.is_zero()) r.t_.emplace(e, v);
    }
    return r;
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = t_.begin();
    auto jt = o.t_.begin();
    for (; it != t_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

BiPoly BiPoly::derivative(int var) const {
    BiPoly r;
    for (const auto& [e, c] : t_) {
        long k = var == 0 ? e.first : e.second;
        if (k == 0) continue;
        Exp ne = var == 0 ? Exp{e.first - 1, e.second} : Exp{e.first, e.second - 1};
        r.add_term(ne, c * Scalar(Rational(k)));
    }
    return r;
}

Scalar BiPoly::eval(const Scalar& x, const Scalar& y) const {
    Scalar r(Rational(0));
    for (const auto& [e, c] : t_) r = r + c * x.pow(e.first) * y.pow(e.second);
    return r;
}

UniPoly BiPoly::restrict_to_axis(int zero_var) const {
    std::vector<Scalar> coeffs;
    for (const auto& [e, c] : t_) {
        if ((zero_var == 0 && e.first != 0) || (zero_var == 1 && e.second != 0)) continue;
        long k = zero_var == 0 ? e.second : e.first;
        if (static_cast<long>(coeffs.size()) <= k) coeffs.resize(k + 1, Scalar(Rational(0)));
        coeffs[k] = c;
    }
    return UniPoly(std::move(coeffs));
}

BiPoly BiPoly::substitute(int var, const Scalar& value) const {
    BiPoly r;
    for (const auto& [e, c] : t_) {
        if (var == 0)
            r.add_term({0, e.second}, c * value.pow(e.first));
        else
            r.add_term({e.first, 0}, c * value.pow(e.second));
    }
    return r;
}

BiPoly BiPoly::compose(const BiPoly& fx, const BiPoly& fy) const {
    // cache powers
    std::vector<BiPoly> px{BiPoly(Scalar(Rational(1)))};
    std::vector<BiPoly> py{BiPoly(Scalar(Rational(1)))};
    auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, long k) -> const BiPoly& {
        while (static_cast<long>(cache.size()) <= k) cache.push_back(cache.back() * base);
        return cache[k];
    };
    BiPoly r;
    for (const auto& [e, c] : t_) {
        r = r + power(px, fx, e.first) * power(py, fy, e.second) * c;
    }
    return r;
}

BiPoly BiPoly::translated(const Scalar& a, const Scalar& b) const {
    FieldPtr f = merge_fields(merge_fields(field(), a.field()), b.field());
    BiPoly x = BiPoly::var_x() + BiPoly(a.lift_to(f));
    BiPoly y = BiPoly::var_y() + BiPoly(b.lift_to(f));
    return lift_to(f).compose(x, y);
}

BiPoly BiPoly::pow(long e) const {
    BiPoly r(Scalar(Rational(1)));
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BiPoly BiPoly::lift_to(const FieldPtr& field) const {
    if (!field) return *this;
    BiPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c.lift_to(field));
    return r;
}

std::pair<BiPoly, bool> BiPoly::divide_exact(const BiPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    BiPoly q, r = *this;
    const auto& [de, dc] = *d.t_.rbegin();
    Scalar dinv = dc.inverse();
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.t_.rbegin();
        if (re.first < de.first || re.second < de.second) return {BiPoly(), false};
        Exp qe{re.first - de.first, re.second - de.second};
        Scalar qc = rc * dinv;
        BiPoly term = BiPoly::monomial(qc, qe.first, qe.second);
        q = q + term;
        r = r - term * d;
    }
    return {q, true};
}

Scalar BiPoly::leading_coeff() const {
    if (t_.empty()) return Scalar(Rational(0));
    return t_.rbegin()->second;
}

BiPoly BiPoly::canonical() const {
    if (t_.empty()) return *this;
    return *this * leading_coeff().inverse();
}

std::string BiPoly::to_string(const std::string& xv, const std::string& yv) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool neg = cs[0] == '-' && c.is_rational();
        if (!first) os << (neg ? "" : "+");
        first = false;
        bool unit = c.is_rational() && (c.is_one() || (-c).is_one());
        if (e.first == 0 && e.second == 0) {
            if (!c.is_rational()) os << "(" << cs << ")";
            else os << cs;
            continue;
        }
        if (!c.is_rational()) {
            os << "(" << cs << ")*";
        } else if (!unit) {
            os << cs << "*";
        } else if ((-c).is_one()) {
            os << "-";
        }
        bool needs_star = false;
        if (e.first > 0) {
            os << xv;
            if (e.first > 1) os << "^" << e.first;
            needs_star = true;
        }
        if (e.second > 0) {
            if (needs_star) os << "*";
            os << yv;
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

namespace {

// Polynomials in y with UniPoly-in-x coefficients, for the gcd routine.
using PolyY = std::vector<UniPoly>;

PolyY to_polyy(const BiPoly& p) {
    PolyY out;
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<long>(out.size()) <= e.second) out.resize(e.second + 1);
        std::vector<Scalar> cc = out[e.second].coeffs();
        if (static_cast<long>(cc.size()) <= e.first) cc.resize(e.first + 1, Scalar(Rational(0)));
        cc[e.first] = c;
        out[e.second] = UniPoly(std::move(cc));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

BiPoly from_polyy(const PolyY& p) {
    BiPoly out;
    for (size_t j = 0; j < p.size(); ++j) {
        for (int i = 0; i <= p[j].degree(); ++i) {
            Scalar c = p[j].coeff(i);
            if (!c.is_zero()) out = out + BiPoly::monomial(c, i, static_cast<long>(j));
        }
    }
    return out;
}

bool py_zero(const PolyY& p) { return p.empty(); }

void py_trim(PolyY& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

PolyY py_mul_coeff(PolyY p, const UniPoly& c) {
    for (auto& u : p) u = u * c;
    py_trim(p);
    return p;
}

PolyY py_divide_coeff(PolyY p, const UniPoly& c) {
    for (auto& u : p) {
        auto [q, r] = u.divmod(c);
        u = q;
    }
    py_trim(p);
    return p;
}

// Over Q, rescale by a rational so every coefficient is an integer and the
// overall integer content is 1; without this the PRS rows accumulate giant
// numerators and denominators even after content division.
void py_normalize(PolyY& p) {
    Integer l = 1;
    for (const auto& u : p)
        for (const auto& c : u.coeffs()) {
            if (!c.is_rational()) return;
            l = boost::multiprecision::lcm(
                l, boost::multiprecision::denominator(c.as_rational()));
        }
    Integer g = 0;
    for (const auto& u : p)
        for (const auto& c : u.coeffs())
            g = boost::multiprecision::gcd(
                g, boost::multiprecision::numerator(Rational(c.as_rational() * l)));
    if (g == 0) return;
    Scalar s(Rational(l, g));
    for (auto& u : p) u = u * s;
}

UniPoly py_content(const PolyY& p) {
    UniPoly g;
    for (const auto& u : p) g = gcd(g, u);
    return g;
}

// Pseudo-remainder of a by b in (K[x])[y].
PolyY py_prem(PolyY a, const PolyY& b) {
    py_trim(a);
    const long db = static_cast<long>(b.size()) - 1;
    const UniPoly& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !py_zero(a)) {
        long da = static_cast<long>(a.size()) - 1;
        UniPoly la = a.back();
        // a = lb * a - la * y^(da-db) * b
        PolyY scaled = py_mul_coeff(a, lb);
        PolyY sub(da - db, UniPoly());
        for (const auto& u : b) sub.push_back(u * la);
        if (scaled.size() < sub.size()) scaled.resize(sub.size());
        for (size_t i = 0; i < sub.size(); ++i) scaled[i] = scaled[i] - sub[i];
        py_trim(scaled);
        if (static_cast<long>(scaled.size()) - 1 >= da) {
            // leading term failed to cancel; should not happen
            throw std::logic_error("pseudo-division failed to reduce degree");
        }
        a = std::move(scaled);
    }
    return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    FieldPtr f = merge_fields(a.field(), b.field());
    PolyY pa = to_polyy(a.lift_to(f));
    PolyY pb = to_polyy(b.lift_to(f));
    // contents with respect to y
    UniPoly ca = py_content(pa);
    UniPoly cb = py_content(pb);
    UniPoly cg = gcd(ca, cb);
    pa = py_divide_coeff(pa, ca);
    pb = py_divide_coeff(pb, cb);
    py_normalize(pa);
    py_normalize(pb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    // primitive PRS
    while (!py_zero(pb) && pb.size() > 1) {
        PolyY r = py_prem(pa, pb);
        if (!py_zero(r)) {
            r = py_divide_coeff(r, py_content(r));
            py_normalize(r);
        }
        pa = std::move(pb);
        pb = std::move(r);
    }
    BiPoly result;
    if (py_zero(pb)) {
        result = from_polyy(pa);
    } else {
        // last nonzero remainder is a unit in y (degree 0): primitive parts coprime
        result = BiPoly(Scalar(Rational(1)));
    }
    result = result * BiPoly::from_unipoly(cg, 0);
    return result.canonical();
}

}  // namespace folres
