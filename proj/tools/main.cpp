#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eptl/determinant.hpp"
#include "eptl/intertwiner.hpp"
#include "eptl/linkrep.hpp"
#include "eptl/projectors.hpp"
#include "eptl/spinrep.hpp"
#include "eptl/transfer.hpp"
#include "eptl/verify.hpp"

using namespace eptl;
using nlohmann::json;

namespace {

struct Global {
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 1;
    double tol = -1;  // negative: each command uses its own default
    double tol_or(double def) const { return tol > 0 ? tol : def; }
};

// Thrown for verification failures; mapped to exit code 1.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void check_nd(int N, int d) {
    if (N < 1 || N > 12) throw std::invalid_argument("--n must lie in 1..12");
    if (d < 0 || d > N || (N - d) % 2) throw std::invalid_argument("--d must satisfy 0 <= d <= n and d = n mod 2");
}

void print_matrix(const RingMatrix& m, const std::string& format) {
    if (format == "json") {
        std::cout << m.to_json().dump(1) << "\n";
    } else if (format == "csv") {
        std::cout << "row,col,row_label,col_label,entry\n";
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m(i, j).is_zero()) continue;
                std::cout << i << "," << j << "," << csv_quote(i < (int)m.row_labels.size() ? m.row_labels[i] : "") << ","
                          << csv_quote(j < (int)m.col_labels.size() ? m.col_labels[j] : "") << "," << csv_quote(m(i, j).str())
                          << "\n";
            }
    } else {
        for (int i = 0; i < m.rows(); ++i) {
            if (i < (int)m.row_labels.size()) std::cout << m.row_labels[i] << ": ";
            for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " | " : "") << m(i, j).str();
            std::cout << "\n";
        }
    }
}

void print_numeric(const NumMatrix& m, const std::string& format) {
    if (format == "json") {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json r = json::array();
            for (int j = 0; j < m.cols(); ++j) r.push_back(cjson(m(i, j)));
            rows.push_back(r);
        }
        std::cout << json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}}.dump(1) << "\n";
    } else {
        if (format == "csv") std::cout << "row,col,re,im\n";
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m(i, j) == cplx(0)) continue;
                std::cout << i << (format == "csv" ? "," : " ") << j << (format == "csv" ? "," : " ") << fmt(m(i, j).real())
                          << (format == "csv" ? "," : " ") << fmt(m(i, j).imag()) << "\n";
            }
    }
}

// Emits a check result and throws when it failed.
void emit_check(const std::string& name, const CheckReport& r, const std::string& format, json extra = json::object()) {
    if (format == "json") {
        extra["check"] = name;
        extra["ok"] = r.ok;
        if (!r.ok) extra["witness"] = r.detail;
        std::cout << extra.dump(1) << "\n";
    } else if (format == "csv") {
        std::cout << "check,N,d,ok,witness\n"
                  << name << "," << extra.value("N", 0) << "," << extra.value("d", 0) << "," << (r.ok ? 1 : 0) << ","
                  << csv_quote(r.ok ? "" : r.detail) << "\n";
    } else {
        std::cout << name << ": " << (r.ok ? "ok" : "FAILED");
        if (!r.ok) std::cout << " " << r.detail;
        std::cout << "\n";
    }
    if (!r.ok) throw CheckFailed(name + " failed");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) v.push_back(std::stoi(tok));
    return v;
}

struct Range {
    double a = 0, b = 0;
    int steps = 1;
    double at(int k) const { return steps <= 1 ? a : a + (b - a) * k / (steps - 1); }
};

Range parse_range(const std::string& s) {
    Range r;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> r.a >> c1 >> r.b >> c2 >> r.steps) || c1 != ':' || c2 != ':' || r.steps < 1)
        throw std::invalid_argument("range must look like a:b:steps");
    return r;
}

Generator parse_generator(const std::string& op, int N) {
    Word w = parse_word(op);
    if (w.size() != 1) throw std::invalid_argument("expected a single generator: " + op);
    if (w[0].kind == GenKind::E && (w[0].index < 1 || w[0].index > N)) throw std::invalid_argument("e_i index out of range");
    return w[0];
}

void cmd_enumerate(int N, int d, const Global& g) {
    check_nd(N, d);
    auto basis = enumerate_states(N, d);
    if (g.format == "json") {
        json states = json::array();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            json arcs = json::array();
            for (auto [i, j] : basis[k].arcs()) arcs.push_back({i, j});
            states.push_back({{"index", k}, {"label", basis[k].str()}, {"ascii", basis[k].ascii()}, {"r", basis[k].r()},
                              {"arcs", arcs}, {"defects", basis[k].defects()}});
        }
        std::cout << json{{"N", N}, {"d", d}, {"dimension", basis.size()}, {"states", states}}.dump(1) << "\n";
    } else if (g.format == "csv") {
        std::cout << "index,r,ascii,label\n";
        for (std::size_t k = 0; k < basis.size(); ++k)
            std::cout << k << "," << basis[k].r() << "," << basis[k].ascii() << "," << csv_quote(basis[k].str()) << "\n";
    } else {
        for (std::size_t k = 0; k < basis.size(); ++k)
            std::cout << std::setw(4) << k << "  " << basis[k].ascii() << "  " << basis[k].str() << "\n";
    }
}

void cmd_gram(int N, int d, bool open, const std::string& twists, const Global& g) {
    check_nd(N, d);
    if (!open) {
        print_matrix(gram_matrix_tilde(N, d), g.format);
        return;
    }
    std::vector<int> tw = twists.empty() ? std::vector<int>(d, 1) : parse_int_list(twists);
    if ((int)tw.size() != d) throw std::invalid_argument("--twists needs one exponent per defect");
    print_matrix(gram_matrix_open(N, d, Twist::vector(tw)), g.format);
}

void cmd_spin(int N, int d, const std::string& op, const Global& g) {
    check_nd(N, d);
    SpinIndex sec(N, d);
    if (op == "hamiltonian") print_matrix(spin_hamiltonian(sec), g.format);
    else print_matrix(tau_generator(parse_generator(op, N), sec), g.format);
}

void cmd_link(int N, int d, const std::string& op, const Global& g) {
    check_nd(N, d);
    if (op == "hamiltonian") print_matrix(link_hamiltonian(N, d), g.format);
    else print_matrix(omega_matrix(parse_word(op), N, d), g.format);
}

void cmd_intertwiner(int N, int d, const std::string& check, const Global& g) {
    check_nd(N, d);
    if (check == "matrix") {
        print_matrix(i_matrix(N, d), g.format);
    } else if (check == "factorization") {
        emit_check("factorization", factorization_check(N, d), g.format, {{"N", N}, {"d", d}});
    } else if (check == "intertwine") {
        emit_check("intertwine", intertwining_check(N, d), g.format, {{"N", N}, {"d", d}});
    } else if (check == "det") {
        if (N > 8) throw std::invalid_argument("exact determinant limited to n <= 8");
        LaurentPoly det = det_exact(i_matrix(N, d)), f = formula::det_intertwiner(N, d);
        const int unit = unit_between(det, f);
        static const char* units[] = {"1", "i", "-1", "-i"};
        json j{{"N", N}, {"d", d}, {"det", det.to_json()}, {"formula", f.to_json()},
               {"ratio", unit < 0 ? "none" : units[unit]}, {"X1", formula::X1(N, d)}, {"X2", formula::X2(N, d)},
               {"max_eu", det.max_eu()}, {"max_ev", det.max_ev()}};
        emit_check("det", det_intertwiner_check(N, d), g.format, j);
    } else {
        throw std::invalid_argument("unknown --check " + check);
    }
}

void cmd_projector(int N, int d, const std::string& check, const Global& g) {
    check_nd(N, d);
    if (N > 8) throw std::invalid_argument("projector checks limited to n <= 8");
    if (check == "wj") {
        CheckReport r;
        for (int n = 2; n <= std::min(N, 5) && r.ok; ++n) r = wj_properties_check(n, N, d);
        emit_check("wj", r, g.format, {{"N", N}, {"d", d}});
    } else if (check == "gamma") {
        CheckReport r = gamma_block_check(N, d);
        json j{{"N", N}, {"d", d}};
        if (g.format == "json") {
            GammaMatrix gm = gamma_matrix(N, d);
            json den = json::array();
            for (const auto& x : gm.den) den.push_back(x.to_json());
            j["gamma_numerator"] = gm.num.to_json();
            j["column_denominators"] = den;
        }
        emit_check("gamma", r, g.format, j);
    } else if (check == "kfactor") {
        CheckReport r;
        json ks = json::array();
        for (int rr = 1; d + 2 * rr <= N; ++rr) {
            RingFraction a = k_factor(d, rr, KMode::ClosedForm, N);
            bool rec = a == k_factor(d, rr, KMode::Recursion, N), gp = a == k_factor(d, rr, KMode::GramPairing, N);
            if (!rec || !gp) r.fail("r=" + std::to_string(rr) + (rec ? "" : " recursion") + (gp ? "" : " Gram pairing"));
            ks.push_back({{"r", rr}, {"numerator", a.num().to_json()}, {"denominator", a.den().to_json()}});
        }
        emit_check("kfactor", r, g.format, {{"N", N}, {"d", d}, {"K", ks}});
    } else if (check == "recursion") {
        if (d < 1) throw std::invalid_argument("recursion needs d >= 1");
        emit_check("recursion", gram_recursion_check(N, d), g.format, {{"N", N}, {"d", d}});
    } else {
        throw std::invalid_argument("unknown --check " + check);
    }
}

void cmd_transfer(int N, int d, double lambda, double nu, double nu_im, double mu, const std::string& check, const Global& g) {
    check_nd(N, d);
    if (N < 2) throw std::invalid_argument("transfer matrix needs n >= 2");
    const TransferPoint p{lambda, cplx(nu, nu_im), mu};
    if (check.empty()) {
        print_numeric(transfer_matrix(N, d, p), g.format);
        return;
    }
    TransferReport t;
    if (check == "commute") {
        std::mt19937_64 rng(g.seed);
        std::uniform_real_distribution<double> dist(-1, 1);
        t = check_commute(N, d, lambda, p.nu, cplx(dist(rng), 0.3 * dist(rng)), mu, g.tol_or(1e-9));
    } else if (check == "translate") {
        t = check_translate(N, d, p, g.tol_or(1e-9));
    } else if (check == "cross") {
        t = check_crossing(N, d, p, g.tol_or(1e-9));
    } else if (check == "expand") {
        t = check_expansion(N, d, lambda, mu, g.tol_or(1e-5));
    } else if (check == "constructions") {
        t = check_constructions(N, d, p, g.tol_or(1e-12));
    } else {
        throw std::invalid_argument("unknown --check " + check);
    }
    CheckReport r;
    if (!t.ok) r.fail(t.detail);
    emit_check(check, r, g.format, {{"N", N}, {"d", d}, {"residual", t.residual}});
}

void cmd_scan(int N, int d, const std::string& lr, const std::string& mr, const Global& g) {
    check_nd(N, d);
    Range L = parse_range(lr), M = parse_range(mr);
    RingMatrix I = i_matrix(N, d);
    const double tol = g.tol_or(1e-8);
    json rows = json::array();
    if (g.format != "json") std::cout << "lambda,mu,predicted_critical,min_singular_value,which_k\n";
    for (int a = 0; a < L.steps; ++a)
        for (int b = 0; b < M.steps; ++b) {
            CriticalSample s = critical_sample(N, d, I, L.at(a), M.at(b), tol);
            if (g.format == "json")
                rows.push_back({{"lambda", s.lambda}, {"mu", s.mu}, {"predicted_critical", s.predicted},
                                {"min_singular_value", s.min_singular_value}, {"which_k", s.which_k}});
            else
                std::cout << fmt(s.lambda) << "," << fmt(s.mu) << "," << (s.predicted ? 1 : 0) << "," << fmt(s.min_singular_value)
                          << "," << s.which_k << "\n";
        }
    if (g.format == "json") std::cout << json{{"N", N}, {"d", d}, {"samples", rows}}.dump(1) << "\n";
}

void cmd_spectrum(int N, int d, double lambda, double mu, const Global& g) {
    check_nd(N, d);
    SpectrumComparison s = spectrum_compare(N, d, lambda, mu);
    if (s.critical) std::cerr << "warning: critical point, a bracket <k+d/2> vanishes (min |sin| = " << fmt(s.min_bracket) << ")\n";
    const double tol = g.tol_or(1e-8);
    if (g.format == "json") {
        json pairs = json::array();
        for (std::size_t k = 0; k < s.link.size(); ++k) pairs.push_back({cjson(s.link[k]), cjson(s.spin[k])});
        std::cout << json{{"N", N}, {"d", d}, {"lambda", lambda}, {"mu", mu}, {"pairs", pairs},
                          {"max_deviation", s.max_deviation}, {"critical", s.critical}}
                         .dump(1)
                  << "\n";
    } else {
        std::cout << "link_re,link_im,spin_re,spin_im\n";
        for (std::size_t k = 0; k < s.link.size(); ++k)
            std::cout << fmt(s.link[k].real()) << "," << fmt(s.link[k].imag()) << "," << fmt(s.spin[k].real()) << ","
                      << fmt(s.spin[k].imag()) << "\n";
        std::cout << "# max_deviation " << fmt(s.max_deviation) << "\n";
    }
    if (!s.critical && s.max_deviation > tol) throw CheckFailed("spectra differ");
}

void cmd_verify(const std::string& suite, int n_max, int d, const Global& g) {
    VerifyOptions o;
    o.n_max = n_max;
    o.d = d;
    o.seed = g.seed;
    o.threads = g.threads;
    VerificationReport r = run_suite(suite, o);
    std::cerr << "verify " << suite << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << fmt(r.seconds) << " s\n";
    if (g.format == "json") {
        json j = r.to_json();
        j.erase("seconds");
        std::cout << j.dump(1) << "\n";
    } else {
        if (g.format == "csv") std::cout << "N,d,identity,witness\n";
        else std::cout << "suite " << suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
        for (const auto& f : r.failures)
            std::cout << f.N << "," << f.d << "," << csv_quote(f.identity) << "," << csv_quote(f.witness) << "\n";
    }
    if (!r.ok()) throw CheckFailed("verification failed");
}

void cmd_export(int N, int d, const std::string& what, const std::string& path, const Global& g) {
    check_nd(N, d);
    if (N > 8) throw std::invalid_argument("export limited to n <= 8");
    json out{{"N", N}, {"d", d}};
    auto want = [&](const std::string& k) { return what == "all" || what == k; };
    bool any = false;
    if (want("link")) {
        json gens = json::object();
        for (int i = 1; i <= N; ++i) gens["e" + std::to_string(i)] = omega_generator(Generator::e(i), N, d).to_json();
        gens["omega"] = omega_generator(Generator::omega(), N, d).to_json();
        gens["omega^-1"] = omega_generator(Generator::omega_inv(), N, d).to_json();
        out["link"] = gens;
        any = true;
    }
    if (want("spin")) {
        SpinIndex sec(N, d);
        json gens = json::object();
        for (int i = 1; i <= N; ++i) gens["e" + std::to_string(i)] = tau_generator(Generator::e(i), sec).to_json();
        gens["omega"] = tau_generator(Generator::omega(), sec).to_json();
        gens["omega^-1"] = tau_generator(Generator::omega_inv(), sec).to_json();
        out["spin"] = gens;
        any = true;
    }
    if (want("gram")) {
        out["gram"] = gram_matrix_tilde(N, d).to_json();
        any = true;
    }
    if (want("intertwiner")) {
        out["intertwiner"] = i_matrix(N, d).to_json();
        any = true;
    }
    if (!any) throw std::invalid_argument("--what must be one of all, link, spin, gram, intertwiner");
    if (g.format != "json") throw std::invalid_argument("export writes json only");
    if (path.empty() || path == "-") {
        std::cout << out.dump(1) << "\n";
    } else {
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot open " + path);
        f << out.dump(1) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enlarged periodic Temperley-Lieb algebra: link states, XXZ spin chain, intertwiner, Gram form"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "ascii"}));
    app.add_option("--seed", g.seed, "Seed for randomized checks");
    app.add_option("--threads", g.threads, "Worker threads for verify")->check(CLI::Range(1, 256));
    app.add_option("--tol", g.tol, "Tolerance override for numeric checks");

    int N = 4, d = 0;
    auto nd = [&](CLI::App* s) {
        s->add_option("--n", N, "Number of sites")->required();
        s->add_option("--d", d, "Number of defects")->required();
    };

    auto* en = app.add_subcommand("enumerate", "List the link-state basis");
    nd(en);

    bool open = false;
    std::string twists;
    auto* gr = app.add_subcommand("gram", "Gram matrix on link states");
    nd(gr);
    gr->add_flag("--open", open, "States without seam-crossing arcs, per-defect twists");
    gr->add_option("--twists", twists, "Comma-separated twist exponents, one per defect");

    std::string op;
    auto* sp = app.add_subcommand("spin", "Spin-chain matrices on the S^z = d/2 sector");
    nd(sp);
    sp->add_option("--op", op, "e_i, omega, omega^-1 or hamiltonian")->required();

    auto* lk = app.add_subcommand("link", "Link-state matrix of a word or of the Hamiltonian");
    nd(lk);
    lk->add_option("--op", op, "Word such as 'e1 e3 omega', or hamiltonian")->required();

    std::string check;
    auto* in = app.add_subcommand("intertwiner", "Intertwiner between link and spin representations");
    nd(in);
    in->add_option("--check", check, "matrix, factorization, det or intertwine")->required();

    auto* pr = app.add_subcommand("projector", "Wenzl-Jones projectors and the block decomposition");
    nd(pr);
    pr->add_option("--check", check, "wj, gamma, kfactor or recursion")->required();

    double lambda = M_PI / 3, nu = 0.2, nu_im = 0, mu = 0.3;
    auto* tr = app.add_subcommand("transfer", "Loop transfer matrix");
    nd(tr);
    tr->add_option("--lambda", lambda, "Spectral parameter");
    tr->add_option("--nu", nu, "Anisotropy, real part");
    tr->add_option("--nu-im", nu_im, "Anisotropy, imaginary part");
    tr->add_option("--mu", mu, "Twist angle, v = e^{i mu}");
    tr->add_option("--check", check, "commute, translate, cross, expand or constructions; omitted prints T");
    tr->add_option("--out", g.format, "Alias of --format")->check(CLI::IsMember({"json", "csv", "ascii"}));

    std::string lr = "0.1:3.0:30", mr = "-1.5:1.5:30";
    auto* sc = app.add_subcommand("scan-critical", "Smallest singular value of the intertwiner on a grid");
    nd(sc);
    sc->add_option("--lambda-range", lr, "a:b:steps");
    sc->add_option("--mu-range", mr, "a:b:steps");
    sc->add_option("--out", g.format, "Alias of --format")->check(CLI::IsMember({"json", "csv", "ascii"}));

    auto* spc = app.add_subcommand("spectrum", "Eigenvalues of H in both representations");
    nd(spc);
    spc->add_option("--lambda", lambda, "Spectral parameter");
    spc->add_option("--mu", mu, "Twist angle");

    std::string suite = "all";
    int n_max = 6, dfilter = -1;
    auto* ve = app.add_subcommand("verify", "Run identity suites");
    ve->add_option("--suite", suite, "algebra, intertwine, gram, determinants, projectors, transfer or all")
        ->check(CLI::IsMember({"algebra", "intertwine", "gram", "determinants", "projectors", "transfer", "all"}));
    ve->add_option("--n-max", n_max, "Largest chain length (2..10)");
    ve->add_option("--d", dfilter, "Only this number of defects");

    std::string what = "all", path;
    auto* ex = app.add_subcommand("export", "Write generator, Gram and intertwiner matrices as json");
    nd(ex);
    ex->add_option("--what", what, "all, link, spin, gram or intertwiner");
    ex->add_option("--output", path, "File path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*en) cmd_enumerate(N, d, g);
        else if (*gr) cmd_gram(N, d, open, twists, g);
        else if (*sp) cmd_spin(N, d, op, g);
        else if (*lk) cmd_link(N, d, op, g);
        else if (*in) cmd_intertwiner(N, d, check, g);
        else if (*pr) cmd_projector(N, d, check, g);
        else if (*tr) cmd_transfer(N, d, lambda, nu, nu_im, mu, check, g);
        else if (*sc) cmd_scan(N, d, lr, mr, g);
        else if (*spc) cmd_spectrum(N, d, lambda, mu, g);
        else if (*ve) cmd_verify(suite, n_max, dfilter, g);
        else if (*ex) cmd_export(N, d, what, path, g);
    } catch (const CheckFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
