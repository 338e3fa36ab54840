#include "toporep/gfp.hpp"

namespace toporep::gfp {

Elem Field::pow(Elem a, std::uint64_t e) const {
    std::uint64_t result = 1 % p, base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Elem>(result);
}

Elem Field::dot(std::span<const Elem> a, std::span<const Elem> b) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::uint64_t{a[i]} * b[i];
        if (acc >= (std::uint64_t{1} << 62)) acc %= p;
    }
    return static_cast<Elem>(acc % p);
}

Vec Echelon::reduce(std::span<const Elem> v) const {
    Vec r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Elem c = r[pivots_[i]];
        if (c == 0) continue;
        const auto& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < dim_; ++j)
            if (row[j]) r[j] = f_.sub(r[j], f_.mul(c, row[j]));
    }
    return r;
}

bool Echelon::contains(std::span<const Elem> v) const {
    auto r = reduce(v);
    for (Elem x : r)
        if (x) return false;
    return true;
}

bool Echelon::insert(std::span<const Elem> v) {
    auto r = reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && r[lead] == 0) ++lead;
    if (lead == dim_) return false;
    Elem s = f_.inv(r[lead]);
    for (std::size_t j = lead; j < dim_; ++j) r[j] = f_.mul(r[j], s);
    rows_.push_back(std::move(r));
    pivots_.push_back(lead);
    return true;
}

std::size_t rank(Field f, std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    Echelon e(f, rows.front().size());
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

std::vector<Vec> all_vectors(Field f, std::size_t dim) {
    std::vector<Vec> out;
    Vec cur(dim, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = dim;
        while (i > 0) {
            --i;
            if (++cur[i] < f.p) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (dim == 0) return out;
    }
}

std::vector<Vec> projective_points(Field f, std::size_t dim) {
    std::vector<Vec> out;
    for (auto& v : all_vectors(f, dim)) {
        std::size_t i = 0;
        while (i < dim && v[i] == 0) ++i;
        if (i < dim && v[i] == 1) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace toporep::gfp
