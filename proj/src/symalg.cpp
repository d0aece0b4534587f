#include "poisson/symalg.hpp"

#include <algorithm>
#include <functional>

#include "poisson/errors.hpp"
#include "poisson/identities.hpp"

namespace poisson {

namespace {

void enumerate_degree(std::size_t n, unsigned degree, std::vector<unsigned>& prefix,
                      std::vector<std::vector<unsigned>>& out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned e = degree + 1; e-- > 0;) {
        prefix.push_back(e);
        enumerate_degree(n, degree - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

unsigned MonomialBasis::degree(std::size_t idx) const {
    unsigned d = 0;
    for (unsigned e : monomials[idx]) d += e;
    return d;
}

bool MonomialBasis::index_of(const std::vector<unsigned>& expo, std::size_t& out) const {
    unsigned d = 0;
    for (unsigned e : expo) d += e;
    if (d > truncation) return false;
    auto it = std::find(monomials.begin(), monomials.end(), expo);
    if (it == monomials.end()) return false;
    out = static_cast<std::size_t>(it - monomials.begin());
    return true;
}

MonomialBasis monomial_basis(std::size_t generators, unsigned truncation) {
    if (generators == 0) throw input_error("monomial basis needs at least one generator");
    MonomialBasis b;
    b.generators = generators;
    b.truncation = truncation;
    std::vector<unsigned> prefix;
    for (unsigned d = 0; d <= truncation; ++d)
        enumerate_degree(generators, d, prefix, b.monomials);
    return b;
}

SymAlg build_symalg(const AlgebraStructure& lie, unsigned truncation) {
    if (truncation < 1) throw input_error("build_symalg: truncation must be at least 1");
    CheckResult lc = check_lie(lie);
    if (!lc.passed) throw input_error("build_symalg: generator table fails '" + lc.identity + "'");

    std::size_t n = lie.dim();
    MonomialBasis basis = monomial_basis(n, truncation);
    std::size_t N = basis.size();
    SymAlg s{std::move(basis), PoissonPair(N)};

    // Fast exponent-vector lookup for table assembly.
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t t = 0; t < N; ++t) index[s.basis.monomials[t]] = t;
    auto idx_of = [&](const std::vector<unsigned>& expo, std::size_t& out) {
        auto it = index.find(expo);
        if (it == index.end()) return false;
        out = it->second;
        return true;
    };

    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            const auto& ma = s.basis.monomials[a];
            const auto& mb = s.basis.monomials[b];

            std::vector<unsigned> prod(n);
            for (std::size_t i = 0; i < n; ++i) prod[i] = ma[i] + mb[i];
            std::size_t pt;
            if (idx_of(prod, pt)) s.pair.product.c(a, b, pt) = Rational(1);

            // ∂m_a/∂e_i ∂m_b/∂e_j picks up factor a_i·b_j and lowers the
            // joint exponent at i and j; the bracket then raises slot k.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Rational& cijk = lie.c(i, j, k);
                        if (cijk.is_zero()) continue;
                        auto add_term = [&](std::size_t di, std::size_t dj, long coeff) {
                            if (coeff == 0) return;
                            std::vector<unsigned> e = prod;
                            if (e[di] == 0 || e[dj] == 0) return;  // derivative vanished
                            --e[di];
                            --e[dj];
                            ++e[k];
                            std::size_t t;
                            if (!idx_of(e, t)) return;  // truncated tail
                            s.pair.bracket.c(a, b, t) += cijk * Rational(coeff);
                        };
                        // ma[i]*mb[j] and the mirrored ma[j]*mb[i] term; when
                        // i == j in the exponent slots the decrements stack,
                        // which the guard above handles via `prod`.
                        if (ma[i] > 0 && mb[j] > 0)
                            add_term(i, j, static_cast<long>(ma[i]) * mb[j]);
                        if (ma[j] > 0 && mb[i] > 0)
                            add_term(j, i, -static_cast<long>(ma[j]) * mb[i]);
                    }
                }
        }

    CheckResult plie = check_lie(s.pair.bracket);
    if (!plie.passed) throw internal_error("build_symalg: bracket table fails Jacobi");
    CheckResult pca = check_comm_assoc(s.pair.product);
    if (!pca.passed) throw internal_error("build_symalg: product table fails associativity");
    CheckResult plz = check_leibniz(s.pair);
    if (!plz.passed) throw internal_error("build_symalg: pair fails the derivation rule");
    return s;
}

AdSpectrum ad_spectrum(const SymAlg& s, const Vec& x) {
    std::size_t N = s.basis.size();
    if (x.size() != N) throw input_error("ad_spectrum: element has wrong dimension");
    Matrix ad = s.pair.bracket.left_mult(x);
    AdSpectrum out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            if (r != c && !ad.at(r, c).is_zero()) {
                out.diagonal = false;
                out.witness = {r, c};
                return out;
            }
    out.diagonal = true;
    for (std::size_t t = 0; t < N; ++t) out.eigenvalues.push_back(ad.at(t, t));
    return out;
}

Cochain2 biderivation_extend(
    const SymAlg& s, const std::map<std::pair<std::size_t, std::size_t>, Vec>& gen_values) {
    std::size_t n = s.basis.generators;
    std::size_t N = s.basis.size();

    // Dense skew table over generator pairs.
    std::vector<Vec> gen(n * n, vec_zero(N));
    for (const auto& [key, val] : gen_values) {
        if (key.first >= n || key.second >= n)
            throw input_error("biderivation_extend: generator index out of range");
        if (val.size() != N)
            throw input_error("biderivation_extend: value has wrong monomial dimension");
        gen[key.first * n + key.second] = val;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!vec_is_zero(vec_add(gen[i * n + j], gen[j * n + i])))
                throw input_error("biderivation_extend: generator values are not skew");

    // Monomial index of each single generator, and of m with one exponent
    // lowered (for the descent).
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t t = 0; t < N; ++t) index[s.basis.monomials[t]] = t;

    // m_t · v, truncating overflow.
    auto mono_mul = [&](std::size_t t, const Vec& v) {
        Vec out = vec_zero(N);
        const auto& m = s.basis.monomials[t];
        for (std::size_t u = 0; u < N; ++u) {
            if (v[u].is_zero()) continue;
            std::vector<unsigned> e = s.basis.monomials[u];
            for (std::size_t i = 0; i < s.basis.generators; ++i) e[i] += m[i];
            auto it = index.find(e);
            if (it != index.end()) out[it->second] += v[u];
        }
        return out;
    };

    auto gen_index = [&](std::size_t i) {
        std::vector<unsigned> e(n, 0);
        e[i] = 1;
        return index.at(e);
    };

    // Memoized descent over basis pairs; arguments only shrink, so every
    // recursive call stays inside the basis.
    std::vector<Vec> memo(N * N);
    std::vector<bool> have(N * N, false);

    std::function<const Vec&(std::size_t, std::size_t)> phi_mm = [&](std::size_t a,
                                                                     std::size_t b) -> const Vec& {
        std::size_t key = a * N + b;
        if (have[key]) return memo[key];
        unsigned da = s.basis.degree(a), db = s.basis.degree(b);
        Vec result;
        if (da == 0 || db == 0) {
            result = vec_zero(N);
        } else if (da == 1 && db == 1) {
            std::size_t i = 0, j = 0;
            const auto& ma = s.basis.monomials[a];
            const auto& mb = s.basis.monomials[b];
            while (ma[i] == 0) ++i;
            while (mb[j] == 0) ++j;
            result = gen[i * n + j];
        } else if (da > 1) {
            const auto& ma = s.basis.monomials[a];
            std::size_t i = 0;
            while (ma[i] == 0) ++i;
            std::vector<unsigned> rest = ma;
            --rest[i];
            std::size_t a0 = index.at(rest);
            std::size_t gi = gen_index(i);
            result = vec_add(mono_mul(gi, phi_mm(a0, b)), mono_mul(a0, phi_mm(gi, b)));
        } else {
            const auto& mb = s.basis.monomials[b];
            std::size_t j = 0;
            while (mb[j] == 0) ++j;
            std::vector<unsigned> rest = mb;
            --rest[j];
            std::size_t b0 = index.at(rest);
            std::size_t gj = gen_index(j);
            result = vec_add(mono_mul(gj, phi_mm(a, b0)), mono_mul(b0, phi_mm(a, gj)));
        }
        memo[key] = std::move(result);
        have[key] = true;
        return memo[key];
    };

    Cochain2 phi(N);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            const Vec& v = phi_mm(a, b);
            for (std::size_t t = 0; t < N; ++t) phi.c(a, b, t) = v[t];
        }
    return phi;
}

}  // namespace poisson
