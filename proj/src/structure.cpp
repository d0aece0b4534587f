#include "poisson/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

std::string check_message(const CheckResult& c) {
    return "identity '" + c.identity + "' fails at basis tuple (" +
           std::to_string(c.witness[0]) + "," + std::to_string(c.witness[1]) + "," +
           std::to_string(c.witness[2]) + ")";
}

// Rows C with W = {x : Cx = 0}; explicit column count survives dim(W)=0.
Matrix constraints_of(const Subspace& w) {
    std::size_t n = w.ambient();
    if (w.dim() == 0) return Matrix::identity(n);
    auto ker = Matrix::from_rows(w.basis()).nullspace();
    Matrix c(ker.size(), n);
    for (std::size_t r = 0; r < ker.size(); ++r)
        for (std::size_t j = 0; j < n; ++j) c.at(r, j) = ker[r][j];
    return c;
}

}  // namespace

PoissonPair split(const AlgebraStructure& a, bool skip_validation) {
    if (!skip_validation) {
        CheckResult adm = check_admissible(a);
        if (!adm.passed) throw input_error("split: " + check_message(adm));
    }
    PoissonPair p(a.skew_half(), a.sym_half());
    if (!skip_validation) {
        // Guaranteed once the input is compatible; failure is a library bug.
        if (!check_lie(p.bracket).passed || !check_comm_assoc(p.product).passed ||
            !check_leibniz(p).passed)
            throw internal_error("split produced an invalid bracket/product pair");
    }
    return p;
}

AlgebraStructure combine(const PoissonPair& p, bool skip_validation) {
    if (!skip_validation) {
        CheckResult lie = check_lie(p.bracket);
        if (!lie.passed) throw input_error("combine: " + check_message(lie));
        CheckResult ca = check_comm_assoc(p.product);
        if (!ca.passed) throw input_error("combine: " + check_message(ca));
        CheckResult lz = check_leibniz(p);
        if (!lz.passed) throw input_error("combine: " + check_message(lz));
    }
    return p.bracket.plus(p.product);
}

Subspace lie_center(const PoissonPair& p) {
    std::size_t n = p.dim();
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix rj = p.bracket.right_mult(basis_vec(n, j));  // x -> {x, e_j}
        for (std::size_t r = 0; r < n; ++r) rows.push_back(rj.row(r));
    }
    return Subspace::span(n, Matrix::from_rows(rows).nullspace());
}

bool is_idempotent(const AlgebraStructure& a, const Vec& e) {
    if (e.size() != a.dim()) throw input_error("idempotent candidate has wrong dimension");
    return vec_is_zero(vec_sub(a.multiply(e, e), e));
}

namespace {

// Dense univariate polynomial over Q, lowest degree first; used only by the
// exact dim-2 idempotent solver.
struct Poly {
    std::vector<Rational> c;

    static Poly zero() { return Poly{}; }
    static Poly constant(const Rational& r) {
        Poly p;
        if (!r.is_zero()) p.c = {r};
        return p;
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    Poly operator+(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.trim();
        return r;
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        Poly r;
        r.c.resize(c.size() + o.c.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }
    Rational eval(const Rational& x) const {
        Rational v(0);
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
};

Poly det_poly(std::vector<std::vector<Poly>>& m, std::size_t size) {
    // Laplace expansion; sizes here are at most 4.
    if (size == 1) return m[0][0];
    Poly acc = Poly::zero();
    for (std::size_t r = 0; r < size; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 0; i < size; ++i) {
            if (i == r) continue;
            minor.push_back(std::vector<Poly>(m[i].begin() + 1, m[i].end()));
        }
        Poly term = m[r][0] * det_poly(minor, size - 1);
        if (r % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

// All rational roots of a polynomial of degree <= 2 (empty set when the
// polynomial is identically zero is signalled via *all_roots).
std::vector<Rational> quadratic_roots(const Poly& p, bool* identically_zero) {
    *identically_zero = p.is_zero();
    std::vector<Rational> roots;
    if (p.is_zero() || p.deg() == 0) return roots;
    if (p.deg() == 1) {
        roots.push_back(-p.c[0] / p.c[1]);
        return roots;
    }
    Rational a = p.c[2], b = p.c[1], cc = p.c[0];
    Rational disc = b * b - Rational(4) * a * cc;
    Rational root;
    if (!disc.sqrt_exact(root)) return roots;
    roots.push_back((-b + root) / (Rational(2) * a));
    if (!root.is_zero()) roots.push_back((-b - root) / (Rational(2) * a));
    return roots;
}

std::vector<long> divisors_of(long v) {
    std::vector<long> d;
    v = std::abs(v);
    if (v == 0) return d;
    for (long i = 1; i * i <= v; ++i)
        if (v % i == 0) {
            d.push_back(i);
            if (i != v / i) d.push_back(v / i);
        }
    return d;
}

// Rational roots of an arbitrary-degree polynomial with rational
// coefficients, via the rational-root theorem after clearing denominators.
// Gives up (returns empty) when coefficients exceed machine range; the
// callers treat that as "search exhausted", never as proof of absence.
std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> roots;
    if (p.is_zero()) return roots;
    if (p.deg() <= 2) {
        bool zero;
        return quadratic_roots(p, &zero);
    }
    // clear denominators
    long lcm = 1;
    for (const auto& co : p.c) {
        long num, den;
        if (!co.fits_long(num, den)) return roots;
        lcm = std::lcm(lcm, den);
        if (lcm > static_cast<long>(1e12)) return roots;
    }
    std::vector<long> ic;
    long gcd = 0;
    for (const auto& co : p.c) {
        long num, den;
        co.fits_long(num, den);
        long v = num * (lcm / den);
        ic.push_back(v);
        gcd = std::gcd(gcd, v);
    }
    if (gcd > 1)
        for (auto& v : ic) v /= gcd;
    long lead = ic.back();
    long tail = 0;
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;  // factor out powers of x
    tail = ic[low];
    std::set<std::string> seen;
    auto consider = [&](const Rational& r) {
        if (!p.eval(r).is_zero()) return;
        if (seen.insert(r.str()).second) roots.push_back(r);
    };
    if (low > 0) consider(Rational(0));
    for (long pn : divisors_of(tail))
        for (long q : divisors_of(lead)) {
            consider(Rational(pn, q));
            consider(Rational(-pn, q));
        }
    return roots;
}

// Exact enumeration of the solutions of x·x = x in dimension 2 with rational
// coordinates, by eliminating one variable through a Sylvester resultant.
// When the two conics share a whole component the resultant vanishes and we
// return nothing extra (the caller's grid results stand).
void exact_idempotents_dim2(const AlgebraStructure& a, std::vector<Vec>& out) {
    // x = (s, t):  F = a0(s) + a1(s)·t + a2·t²,  G likewise, from x·x - x.
    Poly s_poly;  // the monomial s
    s_poly.c = {Rational(0), Rational(1)};
    Poly s2 = s_poly * s_poly;

    auto component = [&](std::size_t k) {
        std::vector<Poly> co(3, Poly::zero());
        co[0] = Poly::constant(a.c(0, 0, k)) * s2;                          // s² term
        co[1] = Poly::constant(a.c(0, 1, k) + a.c(1, 0, k)) * s_poly;       // st term
        co[2] = Poly::constant(a.c(1, 1, k));                               // t² term
        if (k == 0) co[0] = co[0] - s_poly;                                 // -s
        if (k == 1) co[1] = co[1] - Poly::constant(Rational(1));            // -t
        return co;
    };
    std::vector<Poly> F = component(0), G = component(1);

    auto deg_in_t = [](const std::vector<Poly>& p) {
        int d = -1;
        for (int i = 0; i < 3; ++i)
            if (!p[i].is_zero()) d = i;
        return d;
    };
    int dF = deg_in_t(F), dG = deg_in_t(G);
    // F has a -s term and G a -t term, so neither vanishes identically and
    // G always has positive degree in t.

    std::vector<Rational> s_candidates;
    if (dF <= 0) {
        s_candidates = rational_roots(F[0]);
    } else {
        // Sylvester matrix of F and G as polynomials in t, entries in Q[s].
        std::size_t size = static_cast<std::size_t>(dF + dG);
        std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size, Poly::zero()));
        for (int r = 0; r < dG; ++r)
            for (int i = 0; i <= dF; ++i) syl[r][r + i] = F[dF - i];
        for (int r = 0; r < dF; ++r)
            for (int i = 0; i <= dG; ++i) syl[dG + r][r + i] = G[dG - i];
        Poly res = det_poly(syl, size);
        if (res.is_zero()) return;  // common component; see comment above
        s_candidates = rational_roots(res);
    }

    for (const Rational& s0 : s_candidates) {
        Poly fu, gu;
        fu.c = {F[0].eval(s0), F[1].eval(s0), F[2].eval(s0)};
        fu.trim();
        gu.c = {G[0].eval(s0), G[1].eval(s0), G[2].eval(s0)};
        gu.trim();
        bool f_zero, g_zero;
        std::vector<Rational> ft = quadratic_roots(fu, &f_zero);
        std::vector<Rational> gt = quadratic_roots(gu, &g_zero);
        if (f_zero && g_zero) continue;  // vertical line inside both conics
        std::vector<Rational> ts = f_zero ? gt : ft;
        for (const Rational& t0 : ts) {
            Vec x = {s0, t0};
            if (!vec_is_zero(x) && is_idempotent(a, x)) out.push_back(x);
        }
    }
}

}  // namespace

std::vector<Vec> find_idempotents(const AlgebraStructure& a, std::size_t budget) {
    std::size_t n = a.dim();
    std::vector<Vec> found;
    std::set<std::string> seen;
    auto consider = [&](const Vec& x) {
        if (vec_is_zero(x) || !is_idempotent(a, x)) return;
        std::string key;
        for (const auto& c : x) key += c.str() + ",";
        if (seen.insert(key).second) found.push_back(x);
    };

    for (std::size_t i = 0; i < n; ++i) consider(basis_vec(n, i));

    static const Rational grid_vals[5] = {Rational(0), Rational(1), Rational(-1),
                                          Rational(1, 2), Rational(-1, 2)};
    std::vector<std::size_t> odo(n, 0);
    for (std::size_t count = 0; count < budget; ++count) {
        Vec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = grid_vals[odo[i]];
        consider(x);
        std::size_t pos = 0;
        while (pos < n && ++odo[pos] == 5) odo[pos++] = 0;
        if (pos == n) break;
    }

    if (n == 1) {
        const Rational& c = a.c(0, 0, 0);
        if (!c.is_zero()) consider({c.inverse()});
    } else if (n == 2) {
        std::vector<Vec> exact;
        exact_idempotents_dim2(a, exact);
        for (const auto& x : exact) consider(x);
    }
    return found;
}

PierceDecomposition pierce(const AlgebraStructure& a, const Vec& e) {
    std::size_t n = a.dim();
    if (vec_is_zero(e) || !is_idempotent(a, e))
        throw input_error("pierce requires a nonzero idempotent");
    CheckResult adm = check_admissible(a);
    if (!adm.passed) throw input_error("pierce: " + check_message(adm));

    Matrix L = a.left_mult(e), R = a.right_mult(e);
    Matrix I = Matrix::identity(n);
    auto eig = [&](const Matrix& m, int lambda) {
        Matrix shifted = lambda == 0 ? m : m - I;
        return Subspace::span(n, shifted.nullspace());
    };
    Subspace l0 = eig(L, 0), l1 = eig(L, 1), r0 = eig(R, 0), r1 = eig(R, 1);

    PierceDecomposition d;
    d.idempotent = e;
    d.p00 = l0.intersect(r0);
    d.p11 = l1.intersect(r1);
    Subspace p01 = l0.intersect(r1), p10 = l1.intersect(r0);
    if (p01.dim() != 0 || p10.dim() != 0)
        throw input_error("pierce: mixed eigenspaces are nonzero");
    if (d.p00.dim() + d.p11.dim() != n || d.p00.intersect(d.p11).dim() != 0)
        throw input_error("pierce: multiplication by e has eigenvalues besides 0 and 1");

    // e central: left and right multiplication agree.
    if (!(L - R).is_zero()) throw internal_error("pierce: idempotent is not central");
    // Both summands multiplicatively closed.
    auto closed = [&](const Subspace& s) {
        for (const auto& x : s.basis())
            for (const auto& y : s.basis())
                if (!s.contains(a.multiply(x, y))) return false;
        return true;
    };
    if (!closed(d.p00) || !closed(d.p11))
        throw internal_error("pierce: eigen summand not multiplicatively closed");
    return d;
}

std::vector<Subspace> pierce_multi(const AlgebraStructure& a, const std::vector<Vec>& es) {
    std::size_t n = a.dim();
    if (es.empty()) throw input_error("pierce_multi needs at least one idempotent");
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            if (!vec_is_zero(a.multiply(es[i], es[j])))
                throw input_error("pierce_multi: idempotents are not orthogonal");
        }
    std::vector<Subspace> parts;
    Subspace common = Subspace::full(n);
    for (const auto& e : es) {
        PierceDecomposition d = pierce(a, e);
        common = common.intersect(d.p00);
        parts.push_back(d.p11);
    }
    parts.insert(parts.begin(), common);
    std::size_t total = 0;
    for (const auto& s : parts) total += s.dim();
    Subspace sum(n);
    for (const auto& s : parts) sum = sum.sum(s);
    if (total != n || sum.dim() != n)
        throw internal_error("pierce_multi: summands do not decompose the space");
    return parts;
}

bool is_nilpotent_element(const AlgebraStructure& a, const Vec& x) {
    return vec_is_zero(a.power(x, static_cast<unsigned>(a.dim()) + 1));
}

RadicalReport radicals(const AlgebraStructure& a, unsigned trials, std::uint64_t seed) {
    std::size_t n = a.dim();
    CheckResult adm = check_admissible(a);
    if (!adm.passed) throw input_error("radicals: " + check_message(adm));
    PoissonPair p = split(a, /*skip_validation=*/true);

    RadicalReport rep;
    // Trace form of the commutative part; its kernel is the radical there.
    Matrix tf(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            tf.at(i, j) = p.product.left_mult(p.product.basis_product(i, j)).trace();
    rep.jacobson_of_product = Subspace::span(n, tf.nullspace());

    // Largest subspace of it that is a two-sided ideal for the full product
    // (equivalently: bracket ideal and product ideal at once).
    Subspace w = rep.jacobson_of_product;
    while (true) {
        Matrix c = constraints_of(w);
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < c.rows(); ++r) rows.push_back(c.row(r));
        for (std::size_t j = 0; j < n; ++j) {
            Matrix cr = c * a.right_mult(basis_vec(n, j));
            Matrix cl = c * a.left_mult(basis_vec(n, j));
            for (std::size_t r = 0; r < c.rows(); ++r) {
                rows.push_back(cr.row(r));
                rows.push_back(cl.row(r));
            }
        }
        Subspace next = rows.empty() ? Subspace::full(n)
                                     : Subspace::span(n, Matrix::from_rows(rows).nullspace());
        if (next.dim() == w.dim()) {
            w = next;
            break;
        }
        w = next;
    }
    rep.nilradical = w;
    if (!rep.jacobson_of_product.contains(rep.nilradical))
        throw internal_error("radicals: nilradical escaped the commutative radical");

    rep.is_nilalgebra = true;
    Rng rng(seed);
    for (std::size_t i = 0; i < n && rep.is_nilalgebra; ++i)
        if (!is_nilpotent_element(a, basis_vec(n, i))) rep.is_nilalgebra = false;
    for (unsigned t = 0; t < trials && rep.is_nilalgebra; ++t)
        if (!is_nilpotent_element(a, rng.next_vec(n))) rep.is_nilalgebra = false;
    // With zero commutative part every square vanishes (x·x is symmetric),
    // so nilpotency is proved, not sampled.
    rep.nilalgebra_certified = rep.is_nilalgebra && p.product.is_zero();

    std::vector<Vec> idems = find_idempotents(a, 4000);
    std::size_t best_dim = 0;
    for (const auto& e : idems) {
        PierceDecomposition d = pierce(a, e);
        if (d.p11.dim() > best_dim) {
            best_dim = d.p11.dim();
            rep.principal_idempotent = e;
        }
    }
    return rep;
}

Cochain3 associativity_residual(const AlgebraStructure& s) {
    return associator_tensor(s);
}

CompatibleProducts compatible_products(const AlgebraStructure& bracket) {
    CheckResult lie = check_lie(bracket);
    if (!lie.passed) throw input_error("compatible_products: " + check_message(lie));
    std::size_t n = bracket.dim();
    std::size_t N = n * n * n;

    // Unknown product table s in flat coordinates. Symmetry rows:
    // s(i,j,k) - s(j,i,k) = 0. Derivation rows come from
    // {x, s(y,z)} - s({x,y}, z) - s(y, {x,z}) = 0 at basis triples.
    std::vector<Vec> rows;
    auto flat = [n](std::size_t i, std::size_t j, std::size_t k) { return k * n * n + i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec row = vec_zero(N);
                row[flat(i, j, k)] += Rational(1);
                row[flat(j, i, k)] -= Rational(1);
                rows.push_back(row);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec bxy = bracket.basis_product(x, y);
                Vec bxz = bracket.basis_product(x, z);
                for (std::size_t out = 0; out < n; ++out) {
                    Vec row = vec_zero(N);
                    // {e_x, s(e_y,e_z)} contributes via s(y,z,m)·{e_x,e_m}.
                    for (std::size_t m = 0; m < n; ++m)
                        row[flat(y, z, m)] += bracket.c(x, m, out);
                    for (std::size_t m = 0; m < n; ++m) {
                        if (!bxy[m].is_zero()) row[flat(m, z, out)] -= bxy[m];
                        if (!bxz[m].is_zero()) row[flat(y, m, out)] -= bxz[m];
                    }
                    rows.push_back(row);
                }
            }
    CompatibleProducts res;
    res.dim_bracket = n;
    res.linear_space = Subspace::span(N, Matrix::from_rows(rows).nullspace());

    // Radical of the polarized associativity form restricted to that space.
    std::vector<AlgebraStructure> basis;
    for (const auto& b : res.linear_space.basis()) basis.push_back(AlgebraStructure::unflatten(n, b));
    std::size_t d = basis.size();
    std::vector<Vec> core_rows;
    for (std::size_t t = 0; t < d; ++t) {
        // B(s, b_t) flattened, as a linear function of s's coordinates.
        std::vector<Vec> bcols;
        for (std::size_t m = 0; m < d; ++m) {
            const AlgebraStructure& bm = basis[m];
            const AlgebraStructure& bt = basis[t];
            Cochain3 r(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                        Vec v = bm.multiply(bt.multiply(x, y), z);
                        v = vec_add(v, bt.multiply(bm.multiply(x, y), z));
                        v = vec_sub(v, bm.multiply(x, bt.multiply(y, z)));
                        v = vec_sub(v, bt.multiply(x, bm.multiply(y, z)));
                        for (std::size_t l = 0; l < n; ++l) r.t(i, j, k, l) = v[l];
                    }
            bcols.push_back(r.flatten());
        }
        std::size_t M = n * n * n * n;
        for (std::size_t r = 0; r < M; ++r) {
            Vec row(d);
            bool nonzero = false;
            for (std::size_t m = 0; m < d; ++m) {
                row[m] = bcols[m][r];
                nonzero = nonzero || !row[m].is_zero();
            }
            if (nonzero) core_rows.push_back(row);
        }
    }
    std::vector<Vec> core_gens;
    if (d > 0) {
        std::vector<Vec> coeff_basis = core_rows.empty()
                                           ? Subspace::full(d).basis()
                                           : Matrix::from_rows(core_rows).nullspace();
        for (const auto& coef : coeff_basis) {
            Vec g = vec_zero(N);
            for (std::size_t m = 0; m < d; ++m)
                if (!coef[m].is_zero()) g = vec_add(g, vec_scale(coef[m], res.linear_space.basis()[m]));
            core_gens.push_back(g);
        }
    }
    res.associative_core = Subspace::span(N, core_gens);
    return res;
}

Subspace square_span(const AlgebraStructure& a) {
    std::size_t n = a.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(a.basis_product(i, j));
    return Subspace::span(n, gens);
}

Subspace ideal_closure(const AlgebraStructure& a, const Vec& v) {
    std::size_t n = a.dim();
    Subspace s = Subspace::span(n, {v});
    while (true) {
        std::vector<Vec> gens = s.basis();
        for (const auto& b : s.basis())
            for (std::size_t j = 0; j < n; ++j) {
                gens.push_back(a.multiply(b, basis_vec(n, j)));
                gens.push_back(a.multiply(basis_vec(n, j), b));
            }
        Subspace next = Subspace::span(n, gens);
        if (next.dim() == s.dim()) return next;
        s = next;
    }
}

OperatorAlgebraReport multiplication_algebra(const AlgebraStructure& a, unsigned trials,
                                             std::uint64_t seed) {
    std::size_t n = a.dim();
    OperatorAlgebraReport rep;

    auto flatten_mat = [n](const Matrix& m) {
        Vec v(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) v[r * n + c] = m.at(r, c);
        return v;
    };
    auto unflatten_mat = [n](const Vec& v) {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
        return m;
    };

    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(a.left_mult(basis_vec(n, i)));
        gens.push_back(a.right_mult(basis_vec(n, i)));
    }
    std::vector<Vec> flat;
    for (const auto& g : gens) flat.push_back(flatten_mat(g));
    Subspace span = Subspace::span(n * n, flat);
    while (true) {
        std::vector<Vec> grown = span.basis();
        for (const auto& b : span.basis()) {
            Matrix bm = unflatten_mat(b);
            for (const auto& g : gens) {
                grown.push_back(flatten_mat(bm * g));
                grown.push_back(flatten_mat(g * bm));
            }
        }
        Subspace next = Subspace::span(n * n, grown);
        if (next.dim() == span.dim()) break;
        span = next;
    }
    rep.dim = span.dim();
    for (const auto& b : span.basis()) rep.basis.push_back(unflatten_mat(b));

    // Left/right translation relations, on basis vectors and random samples.
    Rng rng(seed);
    std::vector<Vec> probes;
    for (std::size_t i = 0; i < n; ++i) probes.push_back(basis_vec(n, i));
    for (unsigned t = 0; t < trials; ++t) probes.push_back(rng.next_vec(n));
    rep.relations_hold = true;
    for (const auto& x : probes) {
        Vec x2 = a.multiply(x, x);
        Matrix L = a.left_mult(x), R = a.right_mult(x);
        Matrix L2 = a.left_mult(x2), R2 = a.right_mult(x2);
        Matrix rl = R * L;
        Matrix lhs1 = L * R - rl;
        Matrix lhs2 = L2 + L2 + L2 + L2 - (L * L + L * L + L * L) + R * R - (rl + rl);
        Matrix lhs3 = R2 + R2 + R2 + R2 - (R * R + R * R + R * R) + L * L - (rl + rl);
        if (!lhs1.is_zero() || !lhs2.is_zero() || !lhs3.is_zero()) {
            rep.relations_hold = false;
            break;
        }
    }

    rep.square_is_whole = square_span(a).dim() == n;
    rep.simplicity = "probably_simple";
    if (!rep.square_is_whole) {
        rep.simplicity = "not_simple";
        Subspace sq = square_span(a);
        // P·P is itself an ideal; when proper it is the witness, and when
        // zero any coordinate line is one.
        if (sq.dim() > 0)
            rep.proper_ideal = sq;
        else
            rep.proper_ideal = Subspace::span(n, {basis_vec(n, 0)});
    } else {
        for (const auto& x : probes) {
            if (vec_is_zero(x)) continue;
            Subspace ideal = ideal_closure(a, x);
            if (ideal.dim() < n) {
                rep.simplicity = "not_simple";
                rep.proper_ideal = ideal;
                break;
            }
        }
    }
    return rep;
}

}  // namespace poisson
