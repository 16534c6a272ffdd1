#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aginv/errors.hpp"
#include "aginv/numeric.hpp"

namespace aginv {

// Numerical data of a connected algebraic group over an algebraically closed
// field of characteristic p >= 0. By the Chevalley decomposition the group is
// an extension of an abelian variety A by a connected linear group:
//   g   = dim A
//   r   = rank of the affine part (dimension of a maximal torus)
//   u   = unipotent dimension; carried for documentation, enters no formula
//   rho = rank of the Neron-Severi group of A
// Commutativity cannot be derived from this data, so it is an input flag.
struct GroupDescriptor {
    Int char_p = 0;  // 0 or a prime
    std::uint32_t g = 0;
    std::uint32_t r = 0;
    std::uint32_t u = 0;
    std::uint32_t rho = 0;
    bool commutative = false;
    std::string label;

    std::uint64_t two_g_plus_r() const { return 2 * std::uint64_t(g) + r; }

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// A homogeneous space G/H with connected stabilizer H; g_h and r_h are the
// dimension of the abelian variety quotient of H and the rank of H.
struct HomSpaceDescriptor {
    GroupDescriptor group;
    std::uint32_t g_h = 0;
    std::uint32_t r_h = 0;
    bool stabilizer_connected = true;

    friend bool operator==(const HomSpaceDescriptor&, const HomSpaceDescriptor&) = default;
};

enum class Strictness {
    warn,    // the Neron-Severi cohomological bound only produces a warning
    strict,  // warnings become errors
};

// Checks every structural invariant and returns the descriptor unchanged.
// All violations are collected into a single ValidationError. The bound
// rho <= g(2g-1) (Neron-Severi inside degree-2 cohomology) is a warning by
// default; the hard bound is rho <= (2g+r)(2g+r-1)/2, which keeps the
// Brauer corank non-negative.
GroupDescriptor validate(const GroupDescriptor& d, Strictness strictness = Strictness::warn,
                         std::vector<std::string>* warnings = nullptr);

HomSpaceDescriptor validate(const HomSpaceDescriptor& d,
                            Strictness strictness = Strictness::warn,
                            std::vector<std::string>* warnings = nullptr);

// Succeeds iff char_p = 0 or gcd(n, char_p) = 1; throws CoprimalityError.
void coprimality_guard(const GroupDescriptor& d, const Int& n);

}  // namespace aginv
