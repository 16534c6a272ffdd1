#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "aginv/integer_matrix.hpp"

namespace aginv {

// Finitely generated abelian group in canonical form:
//
//   Z^free_rank  (+)  Z/d_1 (+) ... (+) Z/d_k   with  2 <= d_1 | d_2 | ... | d_k.
//
// Canonical generators are ordered torsion first (orders d_1..d_k), then the
// free generators. Values are immutable after construction.
class FinGenAbGroup {
public:
    FinGenAbGroup() = default;  // the trivial group

    static FinGenAbGroup trivial() { return {}; }
    static FinGenAbGroup free_of_rank(std::size_t rank);
    // Z/n; n >= 1, and Z/1 is the trivial group.
    static FinGenAbGroup cyclic(const Int& n);
    // (Z/n)^k
    static FinGenAbGroup cyclic_power(const Int& n, std::size_t k);
    // Canonicalizes an arbitrary list of moduli (each >= 1) plus a free rank.
    static FinGenAbGroup from_factors(std::vector<Int> moduli, std::size_t free_rank = 0);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    std::size_t torsion_generator_count() const { return factors_.size(); }
    std::size_t generator_count() const { return factors_.size() + free_rank_; }

    // Order of the i-th canonical generator; 0 encodes infinite order.
    Int generator_order(std::size_t i) const;

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    // Product of the invariant factors; throws std::domain_error when infinite.
    Int order() const;

    // The canonical presentation's relations embedded in Z^generator_count():
    // one column d_i * e_i per torsion generator.
    IntegerMatrix relation_columns() const;

    friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;

    // e.g. "Z^2 + Z/2 + Z/6", "0" for the trivial group
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> factors_;
};

std::ostream& operator<<(std::ostream& os, const FinGenAbGroup& g);

// Cokernel of the relation matrix: Z^generators modulo the row span of
// `relations` (one relation per row), in canonical form.
FinGenAbGroup group_from_presentation(std::size_t generators, const IntegerMatrix& relations);

FinGenAbGroup direct_sum(const FinGenAbGroup& a, const FinGenAbGroup& b);

// Subgroup killed by n, n >= 1. A free summand contributes a full Z/n block:
// free generators record divisible coordinates (torus characters, Tate-module
// directions), whose level-n torsion is cyclic of order n.
FinGenAbGroup n_torsion(const FinGenAbGroup& a, const Int& n);

// Hom(A, B), extended biadditively from Hom(Z/a, Z/b) = Z/gcd(a,b),
// Hom(Z, B) = B and Hom(Z/a, Z) = 0. One argument must be finite.
FinGenAbGroup hom_group(const FinGenAbGroup& a, const FinGenAbGroup& b);

// A (x) B, extended biadditively from Z/a (x) Z/b = Z/gcd(a,b) and
// Z (x) B = B.
FinGenAbGroup tensor_product(const FinGenAbGroup& a, const FinGenAbGroup& b);

// Lambda^2 A for finite A, presented on generators e_i ^ e_j (i < j) with
// relations d_i (e_i ^ e_j) and d_j (e_i ^ e_j). For a divisibility chain
// this comes out as the direct sum of Z/d_i over pairs i < j.
FinGenAbGroup exterior_square(const FinGenAbGroup& a);

}  // namespace aginv
