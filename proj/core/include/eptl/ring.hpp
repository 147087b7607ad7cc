#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace eptl {

using cplx = std::complex<double>;

// Element of Q(i).
struct GaussRat {
    mpq_class re;
    mpq_class im;

    GaussRat() = default;
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat I() { return GaussRat(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    GaussRat inverse() const;
    cplx to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
    GaussRat operator-() const { return GaussRat(-re, -im); }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;
};

struct Term {
    int eu = 0;
    int ev = 0;
    GaussRat c;
};

// Laurent polynomial in u, v over Q(i). Terms sorted by (eu, ev), no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(GaussRat c, int eu = 0, int ev = 0);

    static LaurentPoly monomial(int eu, int ev, GaussRat c = GaussRat(1));
    static LaurentPoly u(int k = 1) { return monomial(k, 0); }
    static LaurentPoly v(int k = 1) { return monomial(0, k); }
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const GaussRat& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const GaussRat& c) { return a *= c; }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(unsigned k) const;
    // Multiply by u^a v^b.
    LaurentPoly shifted(int a, int b) const;
    // Substitution v -> v^{-1}.
    LaurentPoly invert_v() const;
    // Substitution v -> v^k (k may be negative).
    LaurentPoly subst_v(int k) const;
    // Coefficient of u^eu v^ev.
    GaussRat coeff(int eu, int ev) const;

    int min_eu() const;
    int max_eu() const;
    int min_ev() const;
    int max_ev() const;
    // Largest monomial u^a v^b dividing every term (componentwise minimum exponents).
    std::pair<int, int> monomial_content() const;

    // Exact division; throws std::domain_error if b does not divide *this.
    LaurentPoly exact_div(const LaurentPoly& b) const;
    // Returns false when b does not divide *this.
    bool try_div(const LaurentPoly& b, LaurentPoly& q) const;

    cplx eval(cplx u, cplx v) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    std::vector<Term> terms_;
    void normalize();
};

// Fraction with shared Laurent numerator/denominator; only monomial content is removed.
class RingFraction {
public:
    RingFraction() : num_(0), den_(1) {}
    RingFraction(LaurentPoly n) : num_(std::move(n)), den_(1) {}
    RingFraction(LaurentPoly n, LaurentPoly d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RingFraction& operator+=(const RingFraction& o);
    RingFraction& operator-=(const RingFraction& o);
    RingFraction& operator*=(const RingFraction& o);
    RingFraction& operator/=(const RingFraction& o);
    friend RingFraction operator+(RingFraction a, const RingFraction& b) { return a += b; }
    friend RingFraction operator-(RingFraction a, const RingFraction& b) { return a -= b; }
    friend RingFraction operator*(RingFraction a, const RingFraction& b) { return a *= b; }
    friend RingFraction operator/(RingFraction a, const RingFraction& b) { return a /= b; }
    RingFraction operator-() const { return RingFraction(-num_, den_); }
    RingFraction pow(unsigned k) const;

    friend bool operator==(const RingFraction& a, const RingFraction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RingFraction& a, const RingFraction& b) { return !(a == b); }
    // Equality up to a global sign.
    bool equal_up_to_sign(const RingFraction& o) const;

    cplx eval(cplx u, cplx v) const { return num_.eval(u, v) / den_.eval(u, v); }
    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

private:
    LaurentPoly num_;
    LaurentPoly den_;
    void strip();
};

bool equal_up_to_sign(const LaurentPoly& a, const LaurentPoly& b);

namespace trig {
// S_k = sin(k Lambda), C_k = cos(k Lambda), Lambda = pi - lambda, u = e^{i lambda / 2}.
LaurentPoly S(int k);
LaurentPoly C(int k);
// C at half-integer argument x = two_x / 2, only through 4 C_x^2 which stays Laurent.
LaurentPoly four_C_sq(int two_x);
LaurentPoly beta();
LaurentPoly alpha(int N);
// (-u^2)^x as a Laurent monomial, x = two_x / 2; the half power is (i u).
LaurentPoly minus_u2_pow(int two_x);
// <x> = (-u^2)^x v^N - (-u^2)^{-x} v^{-N}.
LaurentPoly bracket(int two_x, int N);
}  // namespace trig

// Numeric point on the unit circle: u = e^{i lambda/2}, v = e^{i mu}.
struct NumericPoint {
    double lambda = 0;
    double mu = 0;
    cplx u() const { return std::polar(1.0, lambda / 2); }
    cplx v() const { return std::polar(1.0, mu); }
};

}  // namespace eptl
