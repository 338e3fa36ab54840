#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace toporep {

using Rational = mpq_class;

/// A prime field GF(p) (p prime, p <= 2^31) or the rationals.
class FieldSpec {
public:
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() { return FieldSpec(0); }
    /// "GF(p)", "p", "Q" or "rationals".
    static FieldSpec parse(const std::string& name);

    bool is_prime() const { return p_ != 0; }
    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    /// Canonical form: residue in [0,p) or a fraction in lowest terms.
    Rational normalize(const Rational& x) const;
    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

class ExactVector {
public:
    ExactVector() = default;
    ExactVector(FieldSpec field, std::vector<Rational> entries);
    static ExactVector from_ints(FieldSpec field, const std::vector<long>& entries);
    static ExactVector zero(FieldSpec field, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }
    bool is_zero() const;

    bool operator==(const ExactVector& o) const {
        return field_ == o.field_ && entries_ == o.entries_;
    }

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Rational> entries_;
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
    static ExactMatrix from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows);
    static ExactMatrix from_vectors_as_rows(const std::vector<ExactVector>& rows,
                                            FieldSpec field, std::size_t cols);
    static ExactMatrix identity(FieldSpec field, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Rational& v) {
        data_[r * cols_ + c] = field_.normalize(v);
    }
    ExactVector row(std::size_t r) const;
    ExactVector column(std::size_t c) const;
    ExactMatrix transpose() const;
    ExactMatrix select_columns(const std::vector<std::size_t>& cols) const;
    ExactMatrix select_rows(const std::vector<std::size_t>& rows) const;
    ExactVector multiply(const ExactVector& x) const;
    bool is_symmetric() const;

    bool operator==(const ExactMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

Rational bilinear(const ExactVector& u, const ExactVector& v);

std::size_t rank(const ExactMatrix& m);

/// Basis of the right null space {x : Mx = 0}, one vector per free column.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

/// True iff v lies in the span of `s` (empty span = {0}).
bool in_span(const ExactVector& v, const std::vector<ExactVector>& s);

/// Row rank of a list of vectors of equal length.
std::size_t rank_of(const std::vector<ExactVector>& vectors);

/// Indices (in input order) of a maximal independent prefix-greedy subset.
std::vector<std::size_t> independent_columns(const ExactMatrix& m);

std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

}  // namespace toporep
