#include "eptl/ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace eptl {

GaussRat GaussRat::inverse() const {
    mpq_class n = re * re + im * im;
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    return GaussRat(re / n, -im / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussRat::str() const {
    if (sgn(im) == 0) return re.get_str();
    if (sgn(re) == 0) return im.get_str() + "i";
    std::string s = re.get_str();
    if (sgn(im) > 0) s += "+";
    return s + im.get_str() + "i";
}

namespace {

bool key_less(const Term& a, const Term& b) {
    return a.eu != b.eu ? a.eu < b.eu : a.ev < b.ev;
}

bool same_key(const Term& a, const Term& b) { return a.eu == b.eu && a.ev == b.ev; }

int checked_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
#ifndef NDEBUG
    if (s > std::numeric_limits<int>::max() || s < std::numeric_limits<int>::min())
        throw std::overflow_error("Laurent exponent overflow");
#endif
    return static_cast<int>(s);
}

cplx ipow(cplx z, int k) {
    if (k < 0) return 1.0 / ipow(z, -k);
    cplx r = 1.0;
    while (k) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back(Term{0, 0, GaussRat(c)});
}

LaurentPoly::LaurentPoly(GaussRat c, int eu, int ev) {
    if (!c.is_zero()) terms_.push_back(Term{eu, ev, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(int eu, int ev, GaussRat c) { return LaurentPoly(std::move(c), eu, ev); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), key_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        Term acc = std::move(terms_[i]);
        std::size_t j = i + 1;
        while (j < terms_.size() && same_key(acc, terms_[j])) {
            acc.c += terms_[j].c;
            ++j;
        }
        if (!acc.c.is_zero()) terms_[out++] = std::move(acc);
        i = j;
    }
    terms_.resize(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && key_less(terms_[i], o.terms_[j]))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || key_less(o.terms_[j], terms_[i])) {
            out.push_back(o.terms_[j++]);
        } else {
            Term t = std::move(terms_[i++]);
            t.c += o.terms_[j++].c;
            if (!t.c.is_zero()) out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            r.terms_.push_back(Term{checked_add(x.eu, y.eu), checked_add(x.ev, y.ev), x.c * y.c});
    if (a.terms_.size() > 1 && b.terms_.size() > 1) r.normalize();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= c;
    return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!same_key(a.terms_[i], b.terms_[i]) || a.terms_[i].c != b.terms_[i].c) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(int a, int b) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        t.eu = checked_add(t.eu, a);
        t.ev = checked_add(t.ev, b);
    }
    return r;
}

LaurentPoly LaurentPoly::invert_v() const { return subst_v(-1); }

LaurentPoly LaurentPoly::subst_v(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.ev *= k;
    r.normalize();
    return r;
}

GaussRat LaurentPoly::coeff(int eu, int ev) const {
    Term key{eu, ev, {}};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
    if (it != terms_.end() && same_key(*it, key)) return it->c;
    return GaussRat(0);
}

int LaurentPoly::min_eu() const {
    if (terms_.empty()) throw std::domain_error("exponent of zero polynomial");
    return terms_.front().eu;
}

int LaurentPoly::max_eu() const {
    if (terms_.empty()) throw std::domain_error("exponent of zero polynomial");
    return terms_.back().eu;
}

int LaurentPoly::min_ev() const {
    if (terms_.empty()) throw std::domain_error("exponent of zero polynomial");
    int m = terms_.front().ev;
    for (const auto& t : terms_) m = std::min(m, t.ev);
    return m;
}

int LaurentPoly::max_ev() const {
    if (terms_.empty()) throw std::domain_error("exponent of zero polynomial");
    int m = terms_.front().ev;
    for (const auto& t : terms_) m = std::max(m, t.ev);
    return m;
}

std::pair<int, int> LaurentPoly::monomial_content() const {
    if (terms_.empty()) return {0, 0};
    return {min_eu(), min_ev()};
}

bool LaurentPoly::try_div(const LaurentPoly& b, LaurentPoly& q) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    q = LaurentPoly();
    if (is_zero()) return true;
    if (b.is_monomial()) {
        const Term& t = b.terms_.front();
        GaussRat inv = t.c.inverse();
        q = shifted(-t.eu, -t.ev);
        q *= inv;
        return true;
    }
    // Newton polytope of the quotient is bounded by the box below.
    const int lo_u = min_eu() - b.min_eu(), hi_u = max_eu() - b.max_eu();
    const int lo_v = min_ev() - b.min_ev(), hi_v = max_ev() - b.max_ev();
    if (lo_u > hi_u || lo_v > hi_v) return false;
    const Term& lead = b.terms_.back();
    GaussRat lead_inv = lead.c.inverse();
    LaurentPoly r = *this;
    std::vector<Term> qt;
    while (!r.is_zero()) {
        const Term& rt = r.terms_.back();
        Term t{rt.eu - lead.eu, rt.ev - lead.ev, rt.c * lead_inv};
        if (t.eu < lo_u || t.eu > hi_u || t.ev < lo_v || t.ev > hi_v) return false;
        LaurentPoly step = b.shifted(t.eu, t.ev);
        step *= t.c;
        r -= step;
        qt.push_back(std::move(t));
    }
    q = from_terms(std::move(qt));
    return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
    LaurentPoly q;
    if (!try_div(b, q)) throw std::domain_error("inexact Laurent division");
    return q;
}

cplx LaurentPoly::eval(cplx u, cplx v) const {
    if (u == 0.0 || v == 0.0) throw std::domain_error("evaluation at zero");
    cplx s = 0;
    for (const auto& t : terms_) s += t.c.to_complex() * ipow(u, t.eu) * ipow(v, t.ev);
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string c = it->c.str();
        bool compound = sgn(it->c.re) != 0 && sgn(it->c.im) != 0;
        if (compound) c = "(" + c + ")";
        if (!first) os << (c[0] == '-' ? " - " : " + ");
        else if (c[0] == '-') os << "-";
        if (c[0] == '-') c = c.substr(1);
        bool unit = (c == "1");
        bool bare = (it->eu == 0 && it->ev == 0);
        if (!unit || bare) os << c;
        if (it->eu != 0) os << (unit ? "" : "*") << "u" << (it->eu != 1 ? "^" + std::to_string(it->eu) : "");
        if (it->ev != 0) os << ((unit && it->eu == 0) ? "" : "*") << "v" << (it->ev != 1 ? "^" + std::to_string(it->ev) : "");
        first = false;
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms_)
        arr.push_back({{"eu", t.eu}, {"ev", t.ev}, {"re", t.c.re.get_str()}, {"im", t.c.im.get_str()}});
    return nlohmann::json{{"terms", arr}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        mpq_class re(t.at("re").get<std::string>()), im(t.at("im").get<std::string>());
        re.canonicalize();
        im.canonicalize();
        terms.push_back(Term{t.at("eu").get<int>(), t.at("ev").get<int>(), GaussRat(re, im)});
    }
    return from_terms(std::move(terms));
}

RingFraction::RingFraction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    strip();
}

void RingFraction::strip() {
    auto [a, b] = den_.monomial_content();
    den_ = den_.shifted(-a, -b);
    num_ = num_.shifted(-a, -b);
    if (num_.is_zero()) den_ = LaurentPoly(1);
}

RingFraction& RingFraction::operator+=(const RingFraction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    strip();
    return *this;
}

RingFraction& RingFraction::operator-=(const RingFraction& o) { return *this += -o; }

RingFraction& RingFraction::operator*=(const RingFraction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    strip();
    return *this;
}

RingFraction& RingFraction::operator/=(const RingFraction& o) {
    if (o.num_.is_zero()) throw std::domain_error("division by zero fraction");
    num_ *= o.den_;
    den_ *= o.num_;
    strip();
    return *this;
}

RingFraction RingFraction::pow(unsigned k) const { return RingFraction(num_.pow(k), den_.pow(k)); }

bool RingFraction::equal_up_to_sign(const RingFraction& o) const {
    LaurentPoly l = num_ * o.den_, r = o.num_ * den_;
    return l == r || l == -r;
}

bool equal_up_to_sign(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == -b; }

namespace trig {

namespace {
GaussRat sign(int k) { return GaussRat((k % 2 == 0) ? 1 : -1); }
GaussRat ipow_i(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussRat(1);
        case 1: return GaussRat(0, 1);
        case 2: return GaussRat(-1);
        default: return GaussRat(0, -1);
    }
}
}  // namespace

LaurentPoly S(int k) {
    // 1/(2i) = -i/2
    GaussRat c = sign(k + 1) * GaussRat(0, mpq_class(-1, 2));
    return (LaurentPoly::u(2 * k) - LaurentPoly::u(-2 * k)) * c;
}

LaurentPoly C(int k) {
    GaussRat c = sign(k) * GaussRat(mpq_class(1, 2), 0);
    return (LaurentPoly::u(2 * k) + LaurentPoly::u(-2 * k)) * c;
}

LaurentPoly four_C_sq(int two_x) {
    GaussRat s = sign(two_x);
    return LaurentPoly::monomial(2 * two_x, 0, s) + LaurentPoly(2) + LaurentPoly::monomial(-2 * two_x, 0, s);
}

LaurentPoly beta() { return LaurentPoly::u(2) + LaurentPoly::u(-2); }

LaurentPoly alpha(int N) { return LaurentPoly::v(N) + LaurentPoly::v(-N); }

LaurentPoly minus_u2_pow(int two_x) {
    if (two_x % 2 == 0) return LaurentPoly::monomial(two_x, 0, sign(two_x / 2));
    return LaurentPoly::monomial(two_x, 0, ipow_i(two_x));
}

LaurentPoly bracket(int two_x, int N) {
    return minus_u2_pow(two_x).shifted(0, N) - minus_u2_pow(-two_x).shifted(0, -N);
}

}  // namespace trig

}  // namespace eptl
