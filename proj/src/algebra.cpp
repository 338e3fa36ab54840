#include "toporep/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "toporep/error.hpp"
#include "toporep/gfp.hpp"

namespace toporep {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 31) || !is_prime_number(p))
        fail(ErrorKind::invalid_parameter, "field characteristic must be a prime <= 2^31");
    return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q" || s == "rationals" || s == "rational") return rationals();
    if (s.rfind("gf(", 0) == 0 && s.back() == ')') s = s.substr(3, s.size() - 4);
    else if (s.rfind("gf", 0) == 0) s = s.substr(2);
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 12)
        fail(ErrorKind::invalid_input, "unrecognized field '" + name + "'");
    return prime(std::stoull(s));
}

std::string FieldSpec::name() const {
    return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

Rational FieldSpec::normalize(const Rational& x) const {
    Rational y = x;
    y.canonicalize();
    if (is_rationals()) return y;
    mpz_class p(p_);
    mpz_class num = y.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = y.get_den() % p;
    if (den == 0) fail(ErrorKind::invalid_input, "denominator divisible by field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = num * inv % p;
    return Rational(r);
}

ExactVector::ExactVector(FieldSpec field, std::vector<Rational> entries)
    : field_(field), entries_(std::move(entries)) {
    for (auto& e : entries_) e = field_.normalize(e);
}

ExactVector ExactVector::from_ints(FieldSpec field, const std::vector<long>& entries) {
    std::vector<Rational> e;
    e.reserve(entries.size());
    for (long x : entries) e.emplace_back(x);
    return ExactVector(field, std::move(e));
}

ExactVector ExactVector::zero(FieldSpec field, std::size_t n) {
    return ExactVector(field, std::vector<Rational>(n, Rational(0)));
}

bool ExactVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(ErrorKind::dimension_mismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Rational(rows[r][c]));
    }
    return m;
}

ExactMatrix ExactMatrix::from_vectors_as_rows(const std::vector<ExactVector>& rows, FieldSpec field,
                                              std::size_t cols) {
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols || !(rows[r].field() == field))
            fail(ErrorKind::dimension_mismatch, "vector length or field mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
    return ExactVector(field_, std::vector<Rational>(data_.begin() + r * cols_,
                                                     data_.begin() + (r + 1) * cols_));
}

ExactVector ExactMatrix::column(std::size_t c) const {
    std::vector<Rational> e;
    for (std::size_t r = 0; r < rows_; ++r) e.push_back(at(r, c));
    return ExactVector(field_, std::move(e));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    ExactMatrix m(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) m.data_[r * cols.size() + j] = at(r, cols[j]);
    return m;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    ExactMatrix m(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) m.data_[i * cols_ + c] = at(rows[i], c);
    return m;
}

ExactVector ExactMatrix::multiply(const ExactVector& x) const {
    if (x.size() != cols_ || !(x.field() == field_))
        fail(ErrorKind::dimension_mismatch, "matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * x[c];
    return ExactVector(field_, std::move(out));
}

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

Rational bilinear(const ExactVector& u, const ExactVector& v) {
    if (!(u.field() == v.field()) || u.size() != v.size())
        fail(ErrorKind::dimension_mismatch, "bilinear form needs equal field and length");
    Rational acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return u.field().normalize(acc);
}

namespace {

gfp::Vec to_residues(const ExactMatrix& m, std::size_t r) {
    gfp::Vec v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v[c] = static_cast<gfp::Elem>(m.at(r, c).get_num().get_ui());
    return v;
}

// Fraction-free (Bareiss) elimination over Z after clearing each row's
// denominators; entries stay bounded by minors of the scaled matrix.
std::size_t rational_rank(const ExactMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
    }
    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rk;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[r][j] = a[rk][c] * a[r][j] - a[r][c] * a[rk][j];
                mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

// Reduced row echelon form; returns pivot columns. Works on a copy.
struct Rref {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;
};

Rref rref(const ExactMatrix& m) {
    const FieldSpec& f = m.field();
    Rref out;
    out.rows.assign(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.rows[r][c] = m.at(r, c);
    auto& a = out.rows;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
        std::size_t piv = rk;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rk]);
        Rational s = f.normalize(Rational(1) / a[rk][c]);
        for (auto& x : a[rk]) x = f.normalize(x * s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rk || a[r][c] == 0) continue;
            Rational factor = a[r][c];
            for (std::size_t j = 0; j < m.cols(); ++j) a[r][j] = f.normalize(a[r][j] - factor * a[rk][j]);
        }
        out.pivots.push_back(c);
        ++rk;
    }
    a.resize(rk);
    return out;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_rationals()) return rational_rank(m);
    gfp::Field f{m.field().characteristic()};
    gfp::Echelon e(f, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(to_residues(m, r));
    return e.rank();
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
    auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<ExactVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(m.cols(), Rational(0));
        x[free] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = -red.rows[i][free];
        basis.emplace_back(m.field(), std::move(x));
    }
    return basis;
}

std::size_t rank_of(const std::vector<ExactVector>& vectors) {
    if (vectors.empty()) return 0;
    return rank(ExactMatrix::from_vectors_as_rows(vectors, vectors.front().field(),
                                                  vectors.front().size()));
}

bool in_span(const ExactVector& v, const std::vector<ExactVector>& s) {
    for (const auto& w : s)
        if (!(w.field() == v.field()) || w.size() != v.size())
            fail(ErrorKind::dimension_mismatch, "span members must match field and length");
    if (v.is_zero()) return true;
    if (s.empty()) return false;
    auto with = s;
    with.push_back(v);
    return rank_of(s) == rank_of(with);
}

std::vector<std::size_t> independent_columns(const ExactMatrix& m) {
    if (m.rows() == 0) return {};
    return rref(m).pivots;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        return i < t.size() && std::all_of(t.begin() + i, t.end(), ::isdigit);
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorKind::parse_error, "bad rational literal '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) fail(ErrorKind::parse_error, "zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace toporep
