#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace poisson {

// Exact rational scalar backed by GMP. Always kept in canonical form
// (reduced, positive denominator). Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "p", "-p" or "p/q" with arbitrary precision digits.
    static Rational parse(const std::string& s);

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return v_ == 0; }
    int sgn() const { return ::sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;

    bool is_integer() const { return v_.get_den() == 1; }
    // Numerator/denominator as machine longs; false when they do not fit.
    bool fits_long(long& num, long& den) const;
    // Exact rational square root; false when none exists in Q.
    bool sqrt_exact(Rational& out) const;

    // Canonical string: "p" when the denominator is 1, else "p/q".
    std::string str() const;

private:
    mpq_class v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

using Vec = std::vector<Rational>;

Vec vec_zero(std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec basis_vec(std::size_t n, std::size_t i);

// Dense matrix over the rationals with exact Gauss-Jordan elimination.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    Vec apply(const Vec& x) const;  // matrix times column vector
    Vec row(std::size_t r) const;
    Rational trace() const;

    // Reduced row echelon form; zero rows dropped. Pivot columns get a
    // leading 1 with zeros above and below.
    Matrix rref() const;
    std::size_t rank() const;
    // Canonical kernel basis: one vector per free column, with -1 in unit
    // position convention normalized so each vector has a 1 in its free slot.
    std::vector<Vec> nullspace() const;
    // Any particular solution of Ax = b; returns false when inconsistent.
    bool solve(const Vec& b, Vec& x) const;
    bool invert(Matrix& out) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// A linear subspace of Q^n held as its canonical RREF row basis, so two
// subspaces are equal iff their representations are equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vec>& gens);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

// Deterministic rational generator for property tests: numerators in
// [-max_num, max_num], denominators in [1, max_den]. xorshift-based so the
// stream is reproducible from the seed across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next_u64();
    long next_long(long lo, long hi);  // inclusive bounds
    Rational next_rational(long max_num = 3, long max_den = 2);
    Vec next_vec(std::size_t n, long max_num = 3, long max_den = 2);

private:
    std::uint64_t s_;
};

}  // namespace poisson
