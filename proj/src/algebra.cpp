#include "poisson/algebra.hpp"

#include <sstream>

#include "poisson/errors.hpp"

namespace poisson {

Vec AlgebraStructure::basis_product(std::size_t i, std::size_t j) const {
    Vec v = vec_zero(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
    return v;
}

Vec AlgebraStructure::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw internal_error("multiply dim mismatch");
    Vec out = vec_zero(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k) {
                const Rational& cc = c(i, j, k);
                if (!cc.is_zero()) out[k] += f * cc;
            }
        }
    }
    return out;
}

Vec AlgebraStructure::associator(const Vec& x, const Vec& y, const Vec& z) const {
    return vec_sub(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
}

Vec AlgebraStructure::power(const Vec& x, unsigned m) const {
    if (m == 0) throw internal_error("power exponent must be positive");
    Vec p = x;
    for (unsigned i = 1; i < m; ++i) p = multiply(x, p);
    return p;
}

AlgebraStructure AlgebraStructure::plus(const AlgebraStructure& o) const {
    if (n_ != o.n_) throw internal_error("algebra sum dim mismatch");
    AlgebraStructure r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

AlgebraStructure AlgebraStructure::minus(const AlgebraStructure& o) const {
    if (n_ != o.n_) throw internal_error("algebra diff dim mismatch");
    AlgebraStructure r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

AlgebraStructure AlgebraStructure::scaled(const Rational& f) const {
    AlgebraStructure r(*this);
    for (auto& x : r.c_) x *= f;
    return r;
}

AlgebraStructure AlgebraStructure::opposite() const {
    AlgebraStructure r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) r.c(i, j, k) = c(j, i, k);
    return r;
}

AlgebraStructure AlgebraStructure::skew_half() const {
    return minus(opposite()).scaled(Rational(1, 2));
}

AlgebraStructure AlgebraStructure::sym_half() const {
    return plus(opposite()).scaled(Rational(1, 2));
}

AlgebraStructure AlgebraStructure::change_basis(const Matrix& g) const {
    if (g.rows() != n_ || g.cols() != n_) throw input_error("basis matrix must be n x n");
    Matrix ginv;
    if (!g.invert(ginv)) throw input_error("basis matrix is singular");
    AlgebraStructure r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Vec fi = g.apply(basis_vec(n_, i));
        for (std::size_t j = 0; j < n_; ++j) {
            Vec fj = g.apply(basis_vec(n_, j));
            Vec prod = ginv.apply(multiply(fi, fj));
            for (std::size_t k = 0; k < n_; ++k) r.c(i, j, k) = prod[k];
        }
    }
    return r;
}

bool AlgebraStructure::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

AlgebraStructure AlgebraStructure::unflatten(std::size_t dim, const Vec& flat) {
    if (flat.size() != dim * dim * dim) throw internal_error("unflatten size mismatch");
    AlgebraStructure a(dim);
    a.c_ = flat;
    return a;
}

Matrix AlgebraStructure::left_mult(const Vec& x) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec col = multiply(x, basis_vec(n_, j));
        for (std::size_t r = 0; r < n_; ++r) m.at(r, j) = col[r];
    }
    return m;
}

Matrix AlgebraStructure::right_mult(const Vec& x) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec col = multiply(basis_vec(n_, j), x);
        for (std::size_t r = 0; r < n_; ++r) m.at(r, j) = col[r];
    }
    return m;
}

Vec Cochain3::value(std::size_t i, std::size_t j, std::size_t k) const {
    Vec v = vec_zero(n_);
    for (std::size_t l = 0; l < n_; ++l) v[l] = t(i, j, k, l);
    return v;
}

Vec Cochain3::apply(const Vec& x, const Vec& y, const Vec& z) const {
    Vec out = vec_zero(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k) {
                if (z[k].is_zero()) continue;
                Rational g = f * z[k];
                for (std::size_t l = 0; l < n_; ++l) {
                    const Rational& tt = t(i, j, k, l);
                    if (!tt.is_zero()) out[l] += g * tt;
                }
            }
        }
    }
    return out;
}

Cochain3 Cochain3::plus(const Cochain3& o) const {
    if (n_ != o.n_) throw internal_error("cochain3 sum dim mismatch");
    Cochain3 r(*this);
    for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] += o.t_[i];
    return r;
}

Cochain3 Cochain3::minus(const Cochain3& o) const {
    if (n_ != o.n_) throw internal_error("cochain3 diff dim mismatch");
    Cochain3 r(*this);
    for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] -= o.t_[i];
    return r;
}

Cochain3 Cochain3::scaled(const Rational& f) const {
    Cochain3 r(*this);
    for (auto& x : r.t_) x *= f;
    return r;
}

bool Cochain3::is_zero() const {
    for (const auto& x : t_)
        if (!x.is_zero()) return false;
    return true;
}

Cochain3 Cochain3::unflatten(std::size_t dim, const Vec& flat) {
    if (flat.size() != dim * dim * dim * dim) throw internal_error("unflatten size mismatch");
    Cochain3 c(dim);
    c.t_ = flat;
    return c;
}

namespace {

Json entries_to_json(const AlgebraStructure& a) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Json out = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Rational& c = a.c(i, j, k);
                if (c.is_zero()) continue;
                Json v;
                v["k"] = k;
                v["v"] = c.str();
                out.push_back(v);
            }
            if (out.empty()) continue;
            Json e;
            e["i"] = i;
            e["j"] = j;
            e["out"] = out;
            arr.push_back(e);
        }
    return arr;
}

std::size_t read_dim(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
        throw input_error("expected an object with an unsigned 'dim' field");
    std::size_t n = j["dim"].get<std::size_t>();
    if (n == 0 || n > 64) throw input_error("dim out of supported range [1, 64]");
    return n;
}

void read_entries(AlgebraStructure& a, const Json& arr, const std::string& key) {
    if (!arr.is_array()) throw input_error("'" + key + "' must be an array of entries");
    for (const auto& e : arr) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("out"))
            throw input_error("each '" + key + "' entry needs fields i, j, out");
        std::size_t i = e["i"].get<std::size_t>();
        std::size_t j = e["j"].get<std::size_t>();
        if (i >= a.dim() || j >= a.dim())
            throw input_error("entry index out of range in '" + key + "'");
        if (!e["out"].is_array())
            throw input_error("'out' must be an array of {k, v} terms in '" + key + "'");
        for (const auto& t : e["out"]) {
            if (!t.is_object() || !t.contains("k") || !t.contains("v"))
                throw input_error("each 'out' term needs fields k, v in '" + key + "'");
            std::size_t k = t["k"].get<std::size_t>();
            if (k >= a.dim()) throw input_error("entry index out of range in '" + key + "'");
            std::string v = t["v"].is_string() ? t["v"].get<std::string>() : t["v"].dump();
            a.c(i, j, k) += Rational::parse(v);
        }
    }
}

}  // namespace

Json algebra_to_json(const AlgebraStructure& a) {
    Json j;
    j["dim"] = a.dim();
    j["products"] = entries_to_json(a);
    return j;
}

AlgebraStructure algebra_from_json(const Json& j) {
    std::size_t n = read_dim(j);
    AlgebraStructure a(n);
    if (!j.contains("products")) throw input_error("algebra JSON needs a 'products' array");
    read_entries(a, j["products"], "products");
    return a;
}

Json cochain2_to_json(const Cochain2& a) {
    Json j;
    j["dim"] = a.dim();
    j["cochain"] = entries_to_json(a);
    return j;
}

Cochain2 cochain2_from_json(const Json& j) {
    std::size_t n = read_dim(j);
    Cochain2 a(n);
    if (!j.contains("cochain")) throw input_error("cochain JSON needs a 'cochain' array");
    read_entries(a, j["cochain"], "cochain");
    return a;
}

Json cochain3_to_json(const Cochain3& t) {
    Json j;
    j["dim"] = t.dim();
    Json arr = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t jj = 0; jj < t.dim(); ++jj)
            for (std::size_t k = 0; k < t.dim(); ++k) {
                Json out = Json::array();
                for (std::size_t l = 0; l < t.dim(); ++l) {
                    const Rational& c = t.t(i, jj, k, l);
                    if (c.is_zero()) continue;
                    Json v;
                    v["l"] = l;
                    v["v"] = c.str();
                    out.push_back(v);
                }
                if (out.empty()) continue;
                Json e;
                e["i"] = i;
                e["j"] = jj;
                e["k"] = k;
                e["out"] = out;
                arr.push_back(e);
            }
    j["cochain"] = arr;
    return j;
}

Json pair_to_json(const PoissonPair& p) {
    Json j;
    j["dim"] = p.dim();
    j["bracket"] = entries_to_json(p.bracket);
    j["product"] = entries_to_json(p.product);
    return j;
}

PoissonPair pair_from_json(const Json& j) {
    std::size_t n = read_dim(j);
    PoissonPair p(n);
    if (!j.contains("bracket") || !j.contains("product"))
        throw input_error("pair JSON needs 'bracket' and 'product' arrays");
    read_entries(p.bracket, j["bracket"], "bracket");
    read_entries(p.product, j["product"], "product");
    return p;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = rows;
    return j;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
        throw input_error("expected an object with a 'matrix' row array");
    const Json& rows = j["matrix"];
    std::vector<Vec> rv;
    for (const auto& row : rows) {
        if (!row.is_array()) throw input_error("'matrix' rows must be arrays");
        Vec v;
        for (const auto& x : row)
            v.push_back(Rational::parse(x.is_string() ? x.get<std::string>() : x.dump()));
        rv.push_back(v);
    }
    for (const auto& v : rv)
        if (v.size() != rv[0].size()) throw input_error("'matrix' rows have unequal lengths");
    return Matrix::from_rows(rv);
}

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("expected an array of rational strings");
    Vec v;
    for (const auto& x : j) v.push_back(Rational::parse(x.is_string() ? x.get<std::string>() : x.dump()));
    return v;
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["ambient"] = s.ambient();
    j["dim"] = s.dim();
    Json rows = Json::array();
    for (const auto& b : s.basis()) rows.push_back(vec_to_json(b));
    j["basis"] = rows;
    return j;
}

Vec vec_parse(const std::string& coords) {
    Vec v;
    std::stringstream ss(coords);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(Rational::parse(tok));
    if (v.empty()) throw input_error("empty coordinate list");
    return v;
}

}  // namespace poisson
