#pragma once

// Small dense prime-field kernels shared by the exhaustive searches.

#include <cstdint>
#include <span>
#include <vector>

namespace toporep::gfp {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

struct Field {
    std::uint32_t p;

    Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p - b) % p); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const { return pow(a, p - 2); }

    Elem dot(std::span<const Elem> a, std::span<const Elem> b) const;
};

/// Incrementally maintained row echelon basis.
class Echelon {
public:
    Echelon(Field f, std::size_t dim) : f_(f), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    /// Reduces v against the basis; returns the residue.
    Vec reduce(std::span<const Elem> v) const;
    bool contains(std::span<const Elem> v) const;
    /// Inserts v; returns false (and leaves the basis unchanged) if dependent.
    bool insert(std::span<const Elem> v);

private:
    Field f_;
    std::size_t dim_;
    std::vector<Vec> rows_;         // each row has a leading 1 at pivots_[i]
    std::vector<std::size_t> pivots_;
};

std::size_t rank(Field f, std::vector<Vec> rows);

/// All vectors of F_p^dim whose first nonzero coordinate is 1, in
/// lexicographic order of coordinates.
std::vector<Vec> projective_points(Field f, std::size_t dim);

/// Every element of F_p^dim (including zero), lexicographic.
std::vector<Vec> all_vectors(Field f, std::size_t dim);

}  // namespace toporep::gfp
