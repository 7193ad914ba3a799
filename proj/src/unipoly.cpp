#include "folres/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace folres {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::variable(const FieldPtr& field) {
    Scalar zero = Scalar(Rational(0)).lift_to(field);
    Scalar one = Scalar(Rational(1)).lift_to(field);
    return UniPoly({zero, one});
}

UniPoly UniPoly::from_roots(const std::vector<Scalar>& roots) {
    UniPoly p(Scalar(Rational(1)));
    for (const auto& r : roots) {
        p = p * UniPoly({-r, Scalar(Rational(1)).lift_to(r.field())});
    }
    return p;
}

Scalar UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(Rational(0));
    return c_[i];
}

FieldPtr UniPoly::field() const {
    for (const auto& c : c_)
        if (c.field()) return c.field();
    return nullptr;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Scalar> r = c_;
    if (r.size() < o.c_.size()) r.resize(o.c_.size(), Scalar(Rational(0)));
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(Rational(0)));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Scalar& s) const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    UniPoly q, r = *this;
    Scalar linv = d.leading().inverse();
    std::vector<Scalar> qc;
    if (r.degree() >= d.degree()) qc.assign(r.degree() - d.degree() + 1, Scalar(Rational(0)));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Scalar c = r.leading() * linv;
        qc[shift] = c;
        std::vector<Scalar> sub(shift, Scalar(Rational(0)));
        sub.insert(sub.end(), d.c_.begin(), d.c_.end());
        r = r - UniPoly(std::move(sub)) * c;
    }
    return {UniPoly(std::move(qc)), r};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Scalar> r(c_.size() - 1, Scalar(Rational(0)));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(Rational(static_cast<long>(i)));
    return UniPoly(std::move(r));
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar r(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::shifted(const Scalar& a) const {
    // Horner on t + a.
    UniPoly x_plus_a({a, Scalar(Rational(1)).lift_to(a.field())});
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x_plus_a + UniPoly(*it);
    return r;
}

UniPoly UniPoly::pow(long e) const {
    UniPoly r(Scalar(Rational(1)));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        if (!first) os << (cs[0] == '-' ? "" : "+");
        first = false;
        if (i == 0 || !(c_[i].is_one() || (-c_[i]).is_one())) {
            os << cs;
            if (i > 0) os << "*";
        } else if ((-c_[i]).is_one()) {
            os << "-";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Integer-coefficient path: primitive pseudo-remainder sequence, which keeps
// coefficient growth polynomial instead of the exponential blowup of monic
// Euclid over Q.
using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer z_content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

void z_make_primitive(ZPoly& p) {
    Integer g = z_content(p);
    if (g == 0 || g == 1) return;
    for (auto& c : p) c /= g;
}

ZPoly z_prem(ZPoly a, const ZPoly& b) {
    z_trim(a);
    const long db = static_cast<long>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        z_trim(a);
        if (static_cast<long>(a.size()) - 1 >= da)
            throw std::logic_error("integer pseudo-division failed to reduce degree");
        z_make_primitive(a);
    }
    return a;
}

bool all_rational(const UniPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

ZPoly clear_denominators(const UniPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs())
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.as_rational()));
    ZPoly out;
    for (const auto& c : p.coeffs()) {
        Rational r = c.as_rational() * l;
        out.push_back(boost::multiprecision::numerator(r));
    }
    z_make_primitive(out);
    return out;
}

UniPoly from_zpoly(const ZPoly& p) {
    std::vector<Scalar> cs;
    for (const auto& c : p) cs.emplace_back(Rational(c));
    return UniPoly(cs);
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (all_rational(a) && all_rational(b)) {
        ZPoly x = clear_denominators(a), y = clear_denominators(b);
        if (x.size() < y.size()) std::swap(x, y);
        while (!y.empty()) {
            ZPoly r = z_prem(x, y);
            x = std::move(y);
            y = std::move(r);
        }
        return from_zpoly(x).monic();
    }
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

std::vector<UniFactor> squarefree_decomposition(const UniPoly& p) {
    std::vector<UniFactor> out;
    UniPoly f = p.monic();
    if (f.degree() < 1) return out;
    UniPoly g = gcd(f, f.derivative());
    UniPoly w = f.divmod(g).first;
    int i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, g);
        UniPoly z = w.divmod(y).first;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        ++i;
        w = y;
        g = g.divmod(y).first;
    }
    return out;
}

namespace {

std::vector<Integer> divisors_of(const Integer& n) {
    std::vector<Integer> out;
    Integer m = abs(n);
    if (m == 0) return out;
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d * d != m) out.push_back(m / d);
        }
    }
    return out;
}

// Rational roots of a squarefree polynomial over Q.
std::vector<Scalar> rational_roots_squarefree(const UniPoly& p) {
    std::vector<Scalar> roots;
    UniPoly f = p;
    // clear denominators
    Integer l = 1;
    for (const auto& c : f.coeffs()) {
        l = lcm(l, denominator(c.as_rational()));
    }
    std::vector<Integer> ic;
    for (const auto& c : f.coeffs()) {
        Rational v = c.as_rational() * Rational(l);
        ic.push_back(numerator(v));
    }
    // strip root at 0
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar(Rational(0)));
    if (low + 1 >= ic.size()) return roots;
    Integer a0 = ic[low], an = ic.back();
    for (const Integer& pnum : divisors_of(a0)) {
        for (const Integer& qden : divisors_of(an)) {
            if (gcd(pnum, qden) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand(s * pnum, qden);
                if (p.eval(Scalar(cand)).is_zero()) roots.push_back(Scalar(cand));
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.canonical_less(b); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<UniFactor> factor_univariate(const UniPoly& p) {
    if (p.is_zero()) throw DivisionByZero("factoring the zero polynomial");
    std::vector<UniFactor> out;
    if (p.degree() == 0) return out;
    FieldPtr field = p.field();
    for (const auto& sf : squarefree_decomposition(p)) {
        UniPoly rem = sf.factor;
        if (!field) {
            for (const Scalar& r : rational_roots_squarefree(rem)) {
                UniPoly lin({-r, Scalar(Rational(1))});
                rem = rem.divmod(lin).first;
                out.push_back({lin, sf.multiplicity});
            }
            if (rem.degree() >= 1) {
                if (rem.degree() == 1) {
                    out.push_back({rem.monic(), sf.multiplicity});
                } else if (rem.degree() <= 3) {
                    // no rational root and degree 2 or 3: irreducible over Q
                    out.push_back({rem.monic(), sf.multiplicity});
                } else {
                    throw UnsupportedField(
                        "cannot certify irreducibility of degree " +
                        std::to_string(rem.degree()) + " factor over Q");
                }
            }
        } else {
            // Over an extension: deflate linear factors at the generator and by
            // direct linear solve; anything of higher degree is unsupported.
            bool progress = true;
            while (rem.degree() >= 1 && progress) {
                progress = false;
                if (rem.degree() == 1) {
                    out.push_back({rem.monic(), sf.multiplicity});
                    rem = UniPoly(Scalar(Rational(1)));
                    break;
                }
                Scalar z = Scalar::generator(field);
                for (const Scalar& cand : {z, -z}) {
                    if (rem.eval(cand).is_zero()) {
                        UniPoly lin({-cand, Scalar(Rational(1)).lift_to(field)});
                        rem = rem.divmod(lin).first;
                        out.push_back({lin, sf.multiplicity});
                        progress = true;
                        break;
                    }
                }
            }
            if (rem.degree() >= 1)
                throw UnsupportedField("factorization over a proper extension is unsupported");
        }
    }
    // deterministic order
    std::sort(out.begin(), out.end(), [](const UniFactor& a, const UniFactor& b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        const auto& ac = a.factor.coeffs();
        const auto& bc = b.factor.coeffs();
        for (size_t i = 0; i < ac.size(); ++i) {
            if (ac[i] != bc[i]) return ac[i].canonical_less(bc[i]);
        }
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

std::vector<std::pair<Scalar, int>> field_roots(const UniPoly& p) {
    std::vector<std::pair<Scalar, int>> out;
    for (const auto& f : factor_univariate(p)) {
        if (f.factor.degree() == 1) {
            out.emplace_back(-f.factor.coeff(0), f.multiplicity);
        }
    }
    return out;
}

Scalar residue_at(const UniPoly& num, const UniPoly& den, const Scalar& pole) {
    if (den.is_zero()) throw DivisionByZero("residue of a function with zero denominator");
    if (num.is_zero()) return Scalar(Rational(0));
    UniPoly n = num.shifted(pole);
    UniPoly d = den.shifted(pole);
    auto strip = [](UniPoly& p) {
        int k = 0;
        std::vector<Scalar> c = p.coeffs();
        size_t i = 0;
        while (i < c.size() && c[i].is_zero()) ++i;
        k = static_cast<int>(i);
        c.erase(c.begin(), c.begin() + i);
        p = UniPoly(std::move(c));
        return k;
    };
    int kd = strip(d);
    int kn = strip(n);
    int order = kd - kn;  // pole order
    if (order <= 0) return Scalar(Rational(0));
    // coefficient of t^(order-1) in the power series n/d, d(0) != 0
    int want = order - 1;
    std::vector<Scalar> series(want + 1, Scalar(Rational(0)));
    Scalar d0inv = d.coeff(0).inverse();
    for (int i = 0; i <= want; ++i) {
        Scalar acc = n.coeff(i);
        for (int j = 1; j <= i; ++j) acc = acc - d.coeff(j) * series[i - j];
        series[i] = acc * d0inv;
    }
    return series[want];
}

}  // namespace folres
