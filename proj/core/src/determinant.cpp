#include "eptl/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace eptl {

LaurentPoly det_cofactor(const RingMatrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m(0, 0);
    LaurentPoly s;
    std::vector<int> rows(n - 1);
    std::iota(rows.begin(), rows.end(), 1);
    for (int j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        LaurentPoly t = m(0, j) * det_cofactor(m.submatrix(rows, cols));
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

LaurentPoly det_bareiss(const RingMatrix& m0) {
    const int n = m0.rows();
    if (n != m0.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return LaurentPoly(1);
    RingMatrix m = m0;
    LaurentPoly prev(1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return LaurentPoly();
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t.exact_div(prev);
            }
            m(i, k) = LaurentPoly();
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return (s >= p || s < a) ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
u64 invmod(u64 a, u64 p) {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return powmod(a, p - 2, p);
}

u64 mpz_mod_u64(const mpz_class& z, u64 p) {
    mpz_class r;
    mpz_class pp;
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

mpz_class to_mpz(u64 x) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &x);
    return z;
}

// Primes p = 1 mod 4 below 2^62, with a square root of -1.
struct Prime {
    u64 p;
    u64 iota;
};

Prime prime_at(int k) {
    static std::vector<Prime> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= k) {
        mpz_class start = cache.empty() ? (mpz_class(1) << 62) : to_mpz(cache.back().p);
        mpz_class q = start - 1;
        while (true) {
            if (mpz_probab_prime_p(q.get_mpz_t(), 30) && mpz_fdiv_ui(q.get_mpz_t(), 4) == 1) break;
            q -= 1;
        }
        u64 p = 0;
        mpz_export(&p, nullptr, 1, sizeof(u64), 0, 0, q.get_mpz_t());
        u64 iota = 0;
        for (u64 g = 2;; ++g) {
            u64 c = powmod(g, (p - 1) / 4, p);
            if (mulmod(c, c, p) == p - 1) {
                iota = c;
                break;
            }
        }
        cache.push_back({p, iota});
    }
    return cache[k];
}

u64 det_mod(std::vector<u64>& a, int n, u64 p) {
    u64 det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i * n + k]) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            det = p - det;
            if (det == p) det = 0;
        }
        u64 d = a[k * n + k];
        det = mulmod(det, d, p);
        u64 inv = invmod(d, p);
        for (int i = k + 1; i < n; ++i) {
            u64 f = mulmod(a[i * n + k], inv, p);
            if (!f) continue;
            for (int j = k + 1; j < n; ++j) a[i * n + j] = submod(a[i * n + j], mulmod(f, a[k * n + j], p), p);
        }
    }
    return det;
}

// Coefficients c_0..c_D of the polynomial through (xs[k], ys[k]).
std::vector<u64> interpolate(const std::vector<u64>& xs, std::vector<u64> ys, u64 p) {
    const int m = static_cast<int>(xs.size());
    // Newton divided differences in place.
    for (int j = 1; j < m; ++j)
        for (int i = m - 1; i >= j; --i) {
            u64 num = submod(ys[i], ys[i - 1], p);
            u64 den = submod(xs[i], xs[i - j], p);
            ys[i] = mulmod(num, invmod(den, p), p);
        }
    std::vector<u64> c(m, 0);
    // Horner on the Newton form.
    for (int i = m - 1; i >= 0; --i) {
        // c <- c * (x - xs[i]) + ys[i]
        for (int k = m - 1; k >= 1; --k) c[k] = submod(c[k - 1], mulmod(c[k], xs[i], p), p);
        c[0] = submod(ys[i], mulmod(c[0], xs[i], p), p);
    }
    return c;
}

struct FlatTerm {
    int row, col, eu, ev;
    mpz_class re, im;
};

}  // namespace

LaurentPoly det_modular(const RingMatrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return LaurentPoly(1);

    std::vector<FlatTerm> terms;
    mpz_class total_scale = 1;
    mpz_class bound = 1;
    bool complex_coeffs = false;
    long long Lu = 0, Hu = 0, Lv = 0, Hv = 0;
    long long gu = 0, gv = 0;
    for (int i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        bool any = false;
        int mnu = 0, mxu = 0, mnv = 0, mxv = 0;
        for (int j = 0; j < n; ++j) {
            for (const auto& t : m(i, j).terms()) {
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.c.re.get_den_mpz_t());
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.c.im.get_den_mpz_t());
                if (!any) {
                    mnu = mxu = t.eu;
                    mnv = mxv = t.ev;
                    any = true;
                }
                mnu = std::min(mnu, t.eu);
                mxu = std::max(mxu, t.eu);
                mnv = std::min(mnv, t.ev);
                mxv = std::max(mxv, t.ev);
            }
        }
        if (!any) return LaurentPoly();
        mpz_class rowsum = 0;
        for (int j = 0; j < n; ++j) {
            for (const auto& t : m(i, j).terms()) {
                mpq_class re = t.c.re * lcm, im = t.c.im * lcm;
                FlatTerm f{i, j, t.eu, t.ev, re.get_num(), im.get_num()};
                if (sgn(f.im) != 0) complex_coeffs = true;
                rowsum += abs(f.re) + abs(f.im);
                gu = std::gcd(gu, static_cast<long long>(t.eu - mnu));
                gv = std::gcd(gv, static_cast<long long>(t.ev - mnv));
                terms.push_back(std::move(f));
            }
        }
        bound *= rowsum;
        total_scale *= lcm;
        Lu += mnu;
        Hu += mxu;
        Lv += mnv;
        Hv += mxv;
    }
    if (gu == 0) gu = 1;
    if (gv == 0) gv = 1;
    const int Du = static_cast<int>((Hu - Lu) / gu);
    const int Dv = static_cast<int>((Hv - Lv) / gv);

    int emin_u = 0, emax_u = 0, emin_v = 0, emax_v = 0;
    for (const auto& t : terms) {
        emin_u = std::min(emin_u, t.eu);
        emax_u = std::max(emax_u, t.eu);
        emin_v = std::min(emin_v, t.ev);
        emax_v = std::max(emax_v, t.ev);
    }

    const std::size_t ncoef = static_cast<std::size_t>(Du + 1) * (Dv + 1);
    std::vector<mpz_class> re_acc(ncoef, 0), im_acc(ncoef, 0);
    mpz_class modulus = 1;
    mpz_class need = 2 * bound + 1;

    for (int pi = 0; modulus < need; ++pi) {
        Prime pr = prime_at(pi);
        const u64 p = pr.p;
        const int n_emb = complex_coeffs ? 2 : 1;
        std::vector<std::vector<u64>> emb_coef(n_emb);
        for (int e = 0; e < n_emb; ++e) {
            u64 iota = (e == 0) ? pr.iota : p - pr.iota;
            std::vector<u64> cv(terms.size());
            for (std::size_t k = 0; k < terms.size(); ++k)
                cv[k] = addmod(mpz_mod_u64(terms[k].re, p), mulmod(mpz_mod_u64(terms[k].im, p), iota, p), p);

            auto points = [&](int D, long long g, int base) {
                std::vector<u64> pts, xs;
                for (u64 z = static_cast<u64>(base);; ++z) {
                    if (static_cast<int>(pts.size()) == D + 1) break;
                    u64 x = powmod(z, static_cast<u64>(g), p);
                    if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
                    pts.push_back(z);
                    xs.push_back(x);
                }
                return std::make_pair(pts, xs);
            };
            auto [us, xs] = points(Du, gu, 2);
            auto [vs, ys] = points(Dv, gv, 3);

            auto power_table = [&](u64 z, int lo, int hi) {
                std::vector<u64> t(hi - lo + 1);
                u64 zi = invmod(z, p);
                t[-lo] = 1;
                for (int e = 1; e <= hi; ++e) t[e - lo] = mulmod(t[e - 1 - lo], z, p);
                for (int e = -1; e >= lo; --e) t[e - lo] = mulmod(t[e + 1 - lo], zi, p);
                return t;
            };
            std::vector<std::vector<u64>> upow(Du + 1), vpow(Dv + 1);
            for (int s = 0; s <= Du; ++s) upow[s] = power_table(us[s], emin_u, emax_u);
            for (int t = 0; t <= Dv; ++t) vpow[t] = power_table(vs[t], emin_v, emax_v);

            std::vector<std::vector<u64>> vals(Du + 1, std::vector<u64>(Dv + 1));
            std::vector<u64> a(static_cast<std::size_t>(n) * n);
            for (int s = 0; s <= Du; ++s) {
                for (int t = 0; t <= Dv; ++t) {
                    std::fill(a.begin(), a.end(), 0);
                    for (std::size_t k = 0; k < terms.size(); ++k) {
                        const auto& ft = terms[k];
                        u64 val = mulmod(cv[k], mulmod(upow[s][ft.eu - emin_u], vpow[t][ft.ev - emin_v], p), p);
                        auto& slot = a[static_cast<std::size_t>(ft.row) * n + ft.col];
                        slot = addmod(slot, val, p);
                    }
                    u64 d = det_mod(a, n, p);
                    // Strip the monomial u^Lu v^Lv.
                    u64 su = powmod(invmod(us[s], p), static_cast<u64>(Lu >= 0 ? Lu : 0), p);
                    if (Lu < 0) su = powmod(us[s], static_cast<u64>(-Lu), p);
                    u64 sv = powmod(invmod(vs[t], p), static_cast<u64>(Lv >= 0 ? Lv : 0), p);
                    if (Lv < 0) sv = powmod(vs[t], static_cast<u64>(-Lv), p);
                    vals[s][t] = mulmod(d, mulmod(su, sv, p), p);
                }
            }
            // Interpolate in y for each x sample, then in x for each y-coefficient.
            std::vector<std::vector<u64>> cy(Du + 1);
            for (int s = 0; s <= Du; ++s) cy[s] = interpolate(ys, vals[s], p);
            std::vector<u64> coef(ncoef);
            for (int b = 0; b <= Dv; ++b) {
                std::vector<u64> col(Du + 1);
                for (int s = 0; s <= Du; ++s) col[s] = cy[s][b];
                auto cx = interpolate(xs, col, p);
                for (int a2 = 0; a2 <= Du; ++a2) coef[static_cast<std::size_t>(a2) * (Dv + 1) + b] = cx[a2];
            }
            emb_coef[e] = std::move(coef);
        }

        // Residues of real and imaginary parts.
        std::vector<u64> rre(ncoef), rim(ncoef, 0);
        if (complex_coeffs) {
            u64 inv2 = invmod(2, p), inv2i = invmod(mulmod(2, pr.iota, p), p);
            for (std::size_t k = 0; k < ncoef; ++k) {
                rre[k] = mulmod(addmod(emb_coef[0][k], emb_coef[1][k], p), inv2, p);
                rim[k] = mulmod(submod(emb_coef[0][k], emb_coef[1][k], p), inv2i, p);
            }
        } else {
            rre = emb_coef[0];
        }
        // Garner step.
        mpz_class P = to_mpz(p);
        u64 minv = invmod(mpz_mod_u64(modulus, p), p);
        auto lift = [&](mpz_class& X, u64 r) {
            u64 x = mpz_mod_u64(X, p);
            u64 h = mulmod(submod(r, x, p), minv, p);
            X += modulus * to_mpz(h);
        };
        for (std::size_t k = 0; k < ncoef; ++k) {
            lift(re_acc[k], rre[k]);
            if (complex_coeffs) lift(im_acc[k], rim[k]);
        }
        modulus *= P;
    }

    mpz_class half = modulus / 2;
    std::vector<Term> out;
    for (int a2 = 0; a2 <= Du; ++a2) {
        for (int b = 0; b <= Dv; ++b) {
            std::size_t k = static_cast<std::size_t>(a2) * (Dv + 1) + b;
            mpz_class re = re_acc[k], im = im_acc[k];
            if (re > half) re -= modulus;
            if (im > half) im -= modulus;
            if (sgn(re) == 0 && sgn(im) == 0) continue;
            mpq_class qre(re, total_scale), qim(im, total_scale);
            qre.canonicalize();
            qim.canonicalize();
            out.push_back(Term{static_cast<int>(Lu + gu * a2), static_cast<int>(Lv + gv * b), GaussRat(qre, qim)});
        }
    }
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly det_exact(const RingMatrix& m) {
    if (m.rows() <= 3) return det_bareiss(m);
    return det_modular(m);
}

cplx det_numeric(const NumMatrix& m) {
    if (m.rows() == 0) return 1.0;
    return m.partialPivLu().determinant();
}

std::pair<double, cplx> det_numeric_log(const NumMatrix& m) {
    if (m.rows() == 0) return {0.0, 1.0};
    Eigen::PartialPivLU<NumMatrix> lu(m);
    const NumMatrix& a = lu.matrixLU();
    double lg = 0;
    cplx ph = lu.permutationP().determinant();
    for (int i = 0; i < a.rows(); ++i) {
        const double r = std::abs(a(i, i));
        if (r == 0) return {-std::numeric_limits<double>::infinity(), 0.0};
        lg += std::log(r);
        ph *= a(i, i) / r;
    }
    return {lg, ph};
}

std::pair<double, cplx> det_numeric_log_extended(const RingMatrix& m, double lambda, double mu) {
    using lcplx = std::complex<long double>;
    using LMatrix = Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic>;
    const int n = m.rows();
    if (n == 0) return {0.0, 1.0};
    const long double hl = static_cast<long double>(lambda) / 2, ml = mu;
    LMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lcplx z = 0;
            for (const auto& t : m(i, j).terms()) {
                long double ph = hl * t.eu + ml * t.ev;
                z += lcplx(t.c.re.get_d(), t.c.im.get_d()) * lcplx(std::cos(ph), std::sin(ph));
            }
            a(i, j) = z;
        }
    Eigen::PartialPivLU<LMatrix> lu(a);
    const LMatrix& f = lu.matrixLU();
    long double lg = 0;
    lcplx ph = static_cast<long double>(lu.permutationP().determinant());
    for (int i = 0; i < n; ++i) {
        const long double r = std::abs(f(i, i));
        if (r == 0) return {-std::numeric_limits<double>::infinity(), 0.0};
        lg += std::log(r);
        ph *= f(i, i) / r;
    }
    return {static_cast<double>(lg), cplx(static_cast<double>(ph.real()), static_cast<double>(ph.imag()))};
}

}  // namespace eptl
