#pragma once

#include <cstdint>
#include <vector>

#include "aginv/abelian_group.hpp"
#include "aginv/descriptor.hpp"

namespace aginv {

// Structure report for the maximal prime-to-p quotient of the etale
// fundamental group of a connected algebraic group.
//
// The group is always abelian (every prime-to-p Galois cover of a connected
// algebraic group is a central isogeny). For commutative groups the structure
// is exact: a free Z_(p')-module of rank 2g+r. The rank is pinned down by
// combining freeness with the n-torsion count: pi1/n has rank 2g+r at every
// level n coprime to p, so a free module must have rank exactly 2g+r.
// Non-commutative groups only get the generator bound, and torsion can occur
// (the special orthogonal groups have pi1 of order 2 in characteristic 0).
struct Pi1Report {
    enum class Exactness { exact, bound_only };

    bool abelian = true;
    Exactness exactness = Exactness::bound_only;
    std::uint64_t free_rank = 0;  // rank over Z_(p'); meaningful when exact
    std::uint64_t generator_bound = 0;
    Int excluded_prime = 0;
    bool torsion_possible = true;

    friend bool operator==(const Pi1Report&, const Pi1Report&) = default;
};

// Two-stage bookkeeping for the surjection chain
// pi1(affine part) -> pi1(G) -> pi1(A) -> 0: the kernel over A is generated
// by at most r elements and pi1(A) is free of rank 2g.
struct HomotopySequenceRanks {
    std::uint64_t affine_part_bound = 0;  // r
    std::uint64_t abelian_part_rank = 0;  // 2g

    friend bool operator==(const HomotopySequenceRanks&, const HomotopySequenceRanks&) = default;
};

// Ranks of the etale cohomology H^i(G, Z/n): the cohomology ring is the
// exterior algebra on H^1, which has rank m = 2g+r, so betti[i] = C(m, i).
struct CohomologyProfile {
    Int n = 0;
    std::uint64_t top_degree = 0;  // m = 2g+r
    std::vector<Int> betti;        // indices 0..m

    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

struct CardinalityCertificate {
    Int left_order = 0;
    Int middle_order = 0;
    Int right_order = 0;
    bool holds = false;  // |left| * |right| == |middle|

    friend bool operator==(const CardinalityCertificate&, const CardinalityCertificate&) = default;
};

// The three terms of the short exact sequence
//   0 -> Pic G / n Pic G -> Hom(Lambda^2(nG), mu_n) -> nBr G -> 0
// at a level n coprime to the characteristic, with mu_n identified with Z/n
// throughout.
struct BerkovichReport {
    Int n = 0;
    FinGenAbGroup left;    // Pic G / n Pic G
    FinGenAbGroup middle;  // Hom(Lambda^2(nG), mu_n)
    FinGenAbGroup right;   // nBr G
    CardinalityCertificate certificate;

    friend bool operator==(const BerkovichReport&, const BerkovichReport&) = default;
};

struct HomSpacePi1Bound {
    std::uint64_t generator_bound = 0;  // 2(g - g_H) + r - r_H
    bool abelian = true;

    friend bool operator==(const HomSpacePi1Bound&, const HomSpacePi1Bound&) = default;
};

// All operations below expect a descriptor that already passed validate().

Pi1Report pi1_report(const GroupDescriptor& d);

HomotopySequenceRanks homotopy_sequence_ranks(const GroupDescriptor& d);

// nG = (Z/n)^(2g+r). Commutative only; n coprime to the characteristic.
FinGenAbGroup n_torsion_group(const GroupDescriptor& d, const Int& n);

// Z_ell-rank of the Tate module: 2g+r. Requires a prime ell != char_p.
std::uint64_t tate_rank(const GroupDescriptor& d, const Int& ell);

CohomologyProfile cohomology_profile(const GroupDescriptor& d, const Int& n);

// H^1(G, mu_n) = Hom(nG, mu_n), computed through the Hom functor.
FinGenAbGroup h1_mu_n(const GroupDescriptor& d, const Int& n);

// Pic G / n Pic G = (Z/n)^rho: modulo n only the free Neron-Severi part of
// Pic survives, the divisible part dies.
FinGenAbGroup picard_mod_n(const GroupDescriptor& d, const Int& n);

BerkovichReport berkovich_sequence(const GroupDescriptor& d, const Int& n);

// Corank of the ell-primary Brauer torsion: (2g+r)(2g+r-1)/2 - rho.
Int brauer_ell_corank(const GroupDescriptor& d, const Int& ell);

HomSpacePi1Bound homspace_pi1_bound(const HomSpaceDescriptor& x);

}  // namespace aginv
