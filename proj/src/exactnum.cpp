#include "poisson/exactnum.hpp"

#include <algorithm>

#include "poisson/errors.hpp"

namespace poisson {

Rational::Rational(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    std::string t = s;
    // mpq_class accepts "p/q" directly but not surrounding spaces.
    t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
    std::size_t slash = t.find('/');
    std::string num = slash == std::string::npos ? t : t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    auto digits_ok = [](const std::string& d, bool sign_ok) {
        if (d.empty()) return false;
        std::size_t i = (sign_ok && (d[0] == '-' || d[0] == '+')) ? 1 : 0;
        if (i == d.size()) return false;
        for (; i < d.size(); ++i)
            if (d[i] < '0' || d[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw input_error("malformed rational literal: '" + s + "'");
    mpq_class v(num + "/" + den);
    if (v.get_den() == 0) throw input_error("rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw input_error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw input_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

bool Rational::fits_long(long& num, long& den) const {
    if (!v_.get_num().fits_slong_p() || !v_.get_den().fits_slong_p()) return false;
    num = v_.get_num().get_si();
    den = v_.get_den().get_si();
    return true;
}

bool Rational::sqrt_exact(Rational& out) const {
    if (sgn() < 0) return false;
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(mpq_class(rn) / mpq_class(rd));
    return true;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Vec vec_zero(std::size_t n) { return Vec(n, Rational(0)); }

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec r = vec_zero(n);
    r[i] = Rational(1);
    return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw internal_error("ragged rows in from_rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(r, k);
            if (v.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += v * o.at(k, c);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix sum shape mismatch");
    Matrix m(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix diff shape mismatch");
    Matrix m(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw internal_error("matrix apply shape mismatch");
    Vec y = vec_zero(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
    return y;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Rational Matrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

Matrix Matrix::rref() const {
    Matrix m(*this);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < m.rows_; ++col) {
        std::size_t sel = m.rows_;
        for (std::size_t r = pivot_row; r < m.rows_; ++r)
            if (!m.at(r, col).is_zero()) { sel = r; break; }
        if (sel == m.rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
        Rational inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < cols_; ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows_; ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(pivot_row, c);
        }
        ++pivot_row;
    }
    Matrix out(pivot_row, cols_);
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

std::size_t Matrix::rank() const { return rref().rows(); }

std::vector<Vec> Matrix::nullspace() const {
    Matrix r = rref();
    std::vector<std::size_t> pivot_col(r.rows());
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (c < cols_ && r.at(i, c).is_zero()) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = vec_zero(cols_);
        v[free_col] = Rational(1);
        for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = -r.at(i, free_col);
        basis.push_back(v);
    }
    return basis;
}

bool Matrix::solve(const Vec& b, Vec& x) const {
    if (b.size() != rows_) throw internal_error("solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    Matrix r = aug.rref();
    x = vec_zero(cols_);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (c < cols_ + 1 && r.at(i, c).is_zero()) ++c;
        if (c == cols_) return false;  // row [0 ... 0 | 1]: inconsistent
        if (c > cols_) continue;
        x[c] = r.at(i, cols_);  // free variables stay zero
    }
    return true;
}

bool Matrix::invert(Matrix& out) const {
    if (rows_ != cols_) return false;
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = Rational(1);
    }
    Matrix r = aug.rref();
    if (r.rows() != rows_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r.at(i, c) != (i == c ? Rational(1) : Rational(0))) return false;
    out = Matrix(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = r.at(i, cols_ + c);
    return true;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& gens) {
    Subspace s(ambient);
    if (gens.empty()) return s;
    Matrix r = Matrix::from_rows(gens).rref();
    for (std::size_t i = 0; i < r.rows(); ++i) s.basis_.push_back(r.row(i));
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(basis_vec(ambient, i));
    return span(ambient, rows);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw internal_error("subspace membership shape mismatch");
    if (vec_is_zero(v)) return true;
    // Reduce v against the RREF basis rows; membership iff the residue is zero.
    Vec r = v;
    for (const auto& b : basis_) {
        std::size_t lead = 0;
        while (lead < ambient_ && b[lead].is_zero()) ++lead;
        if (lead < ambient_ && !r[lead].is_zero()) r = vec_sub(r, vec_scale(r[lead], b));
    }
    return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    // x in both spans iff x = a^T U = b^T W; solve [U^T | -W^T] kernel and
    // read off the U-combination part.
    std::size_t k = dim(), m = o.dim();
    Matrix stk(ambient_, k + m);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < ambient_; ++r) stk.at(r, c) = basis_[c][r];
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < ambient_; ++r) stk.at(r, k + c) = -o.basis_[c][r];
    std::vector<Vec> gens;
    for (const auto& ker : stk.nullspace()) {
        Vec x = vec_zero(ambient_);
        for (std::size_t c = 0; c < k; ++c)
            if (!ker[c].is_zero()) x = vec_add(x, vec_scale(ker[c], basis_[c]));
        gens.push_back(x);
    }
    return span(ambient_, gens);
}

Rng::Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

std::uint64_t Rng::next_u64() {
    // xorshift64*
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545f4914f6cdd1dull;
}

long Rng::next_long(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Rng::next_rational(long max_num, long max_den) {
    long num = next_long(-max_num, max_num);
    long den = next_long(1, max_den);
    return Rational(num, den);
}

Vec Rng::next_vec(std::size_t n, long max_num, long max_den) {
    Vec v(n);
    for (auto& x : v) x = next_rational(max_num, max_den);
    return v;
}

}  // namespace poisson
