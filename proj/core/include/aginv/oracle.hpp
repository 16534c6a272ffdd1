#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aginv/abelian_group.hpp"
#include "aginv/numeric.hpp"

namespace aginv::oracle {

// Multiplication table of a finite group on elements 0..order-1. The group
// axioms are checked at construction. Tables are built explicitly (never from
// presentations), keeping this module independent of the abelian engine.
class FiniteGroupTable {
public:
    FiniteGroupTable(std::string name, std::size_t order, std::vector<unsigned> table,
                     unsigned identity);

    unsigned mul(unsigned a, unsigned b) const { return table_[a * order_ + b]; }
    std::size_t order() const { return order_; }
    unsigned identity() const { return identity_; }
    const std::string& name() const { return name_; }
    const std::vector<unsigned>& table() const { return table_; }
    bool is_abelian() const;

    static FiniteGroupTable cyclic(std::size_t n);
    static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
    static FiniteGroupTable klein_four();
    static FiniteGroupTable symmetric_3();
    static FiniteGroupTable dihedral_4();    // symmetries of the square, order 8
    static FiniteGroupTable quaternion_8();  // {+-1, +-i, +-j, +-k}

private:
    std::string name_;
    std::size_t order_;
    std::vector<unsigned> table_;
    unsigned identity_;
};

// Every group of order <= 8 (all eleven abelian ones and S3, D4, Q8), plus
// the cyclic groups up to order 12, filtered by max_order.
std::vector<FiniteGroupTable> builtin_catalog(std::size_t max_order);

struct Mismatch {
    std::string input;
    std::string expected;
    std::string got;
};

struct OracleVerdict {
    std::string suite;
    std::size_t cases_run = 0;
    std::vector<Mismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
};

// Search-space guards. Exceeding a guard is an error, never silent truncation.
inline constexpr std::size_t kDefaultExteriorSquareBound = 256;
inline constexpr std::size_t kDefaultHomCountBound = 64;
inline constexpr std::size_t kDefaultEckmannHiltonBound = 12;

// Lambda^2 A by enumeration: builds A (x) A on generator pairs with bilinear
// relations, then quotients by the subgroup generated by a (x) a for EVERY
// element a of A (the diagonal is not additive in a, so generators alone
// would not span it), reducing via the Smith form.
FinGenAbGroup exterior_square_bruteforce(const FinGenAbGroup& a,
                                         std::size_t order_bound = kDefaultExteriorSquareBound);

// |Hom(A, B)| by enumerating candidate generator images in B and filtering
// by the well-definedness condition d_i * image = 0.
std::uint64_t hom_count_bruteforce(const FinGenAbGroup& a, const FinGenAbGroup& b,
                                   std::size_t order_bound = kDefaultHomCountBound);

// Exhaustive search for second operations m on G with m(1,g) = m(g,1) = g
// satisfying the interchange law m(a,b) m(c,d) = m(ac, bd). The classical
// unit-sharing argument forces any such m to coincide with the group law and
// the group to be commutative; this search verifies that fact by enumeration.
// Returns the surviving operation tables.
std::vector<std::vector<unsigned>> eckmann_hilton_search(
    const FiniteGroupTable& g, std::size_t order_bound = kDefaultEckmannHiltonBound);

// Enumerates the invariant-factor chains of all finite abelian groups of
// order <= max_order (the trivial group included), in deterministic order.
std::vector<std::vector<Int>> invariant_factor_chains(std::uint64_t max_order);

struct BerkovichSweepGrid {
    std::uint32_t max_g = 3;
    std::uint32_t max_r = 3;
    std::vector<Int> characteristics = {0, 5};
    unsigned long n_min = 2;
    unsigned long n_max = 12;
};

// For every descriptor in the grid (all valid rho) and every coprime n,
// recomputes the three Berkovich cardinalities from first principles
// (powers of n determined by rho and binomials) and checks them against the
// engine, the exactness identity |left| * |right| = |middle|, and, where the
// torsion group fits the bruteforce bound, the wedge rank by enumeration.
OracleVerdict berkovich_cardinality_sweep(const BerkovichSweepGrid& grid);

// Counts subsets of an m-element generator set per degree and checks the
// counts against binomials, their sum against 2^m, and the symmetry
// C(m,i) = C(m,m-i). Requires max_m <= 12.
OracleVerdict betti_sum_check(std::uint32_t max_m);

// Agreement sweeps used by `verify` and the acceptance suite.
OracleVerdict exterior_square_agreement_sweep(std::uint64_t max_order = 64);
OracleVerdict hom_count_agreement_sweep(std::uint64_t max_order = 32);
OracleVerdict eckmann_hilton_sweep(std::size_t max_order = 8);

}  // namespace aginv::oracle
