#pragma once

#include "chipfire/types.hpp"

namespace chipfire {

// Integer lattice spanned by a list of generator vectors, with a Hermite
// normal form for exact membership and canonical coset representatives.
class LatticeHandle {
public:
    LatticeHandle() = default;
    LatticeHandle(std::vector<Vec> generators, std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return hnf_.size(); }
    const std::vector<Vec>& generators() const { return generators_; }
    const std::vector<std::vector<mpz_class>>& normal_form() const { return hnf_; }

    bool contains(const Vec& x) const;
    bool contains(const QVec& x) const;

    // Canonical representative of x + L; equal for x, y iff x - y in L.
    Vec residue(const Vec& x) const;

    // Lattice generated by diag(w) applied to each generator.
    LatticeHandle scaled(const Vec& w) const;

private:
    std::vector<mpz_class> residue_big(const Vec& x) const;

    std::size_t dim_ = 0;
    std::vector<Vec> generators_;
    std::vector<std::vector<mpz_class>> hnf_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec> hnf_small_;
    bool small_ = false;
};

bool lattice_membership(const LatticeHandle& L, const QVec& x);
LatticeHandle scale_lattice(const LatticeHandle& L, const Vec& w);

}  // namespace chipfire
