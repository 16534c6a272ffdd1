#include "aginv/invariants.hpp"

#include <stdexcept>

namespace aginv {

namespace {

// The Berkovich computation materializes C(2g+r, 2) presentation generators;
// past this rank the Smith reduction stops being desk-scale.
constexpr std::uint64_t kMaxBerkovichRank = 32;

void require_commutative(const GroupDescriptor& d, const char* what) {
    if (!d.commutative)
        throw std::domain_error(std::string(what) +
                                ": requires a commutative descriptor; for non-commutative "
                                "groups only the pi1 generator bound is available");
}

void require_good_prime(const GroupDescriptor& d, const Int& ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("ell = " + ell.get_str() + " is not prime");
    if (ell == d.char_p) throw CoprimalityError(ell, d.char_p);
}

}  // namespace

Pi1Report pi1_report(const GroupDescriptor& d) {
    Pi1Report report;
    report.abelian = true;
    report.generator_bound = d.two_g_plus_r();
    report.excluded_prime = d.char_p;
    if (d.commutative) {
        report.exactness = Pi1Report::Exactness::exact;
        report.free_rank = d.two_g_plus_r();
        report.torsion_possible = false;
    } else {
        report.exactness = Pi1Report::Exactness::bound_only;
        report.free_rank = 0;
        report.torsion_possible = true;
    }
    return report;
}

HomotopySequenceRanks homotopy_sequence_ranks(const GroupDescriptor& d) {
    return HomotopySequenceRanks{d.r, 2 * std::uint64_t(d.g)};
}

FinGenAbGroup n_torsion_group(const GroupDescriptor& d, const Int& n) {
    require_commutative(d, "n_torsion_group");
    coprimality_guard(d, n);
    return FinGenAbGroup::cyclic_power(n, d.two_g_plus_r());
}

std::uint64_t tate_rank(const GroupDescriptor& d, const Int& ell) {
    require_commutative(d, "tate_rank");
    require_good_prime(d, ell);
    return d.two_g_plus_r();
}

CohomologyProfile cohomology_profile(const GroupDescriptor& d, const Int& n) {
    require_commutative(d, "cohomology_profile");
    coprimality_guard(d, n);
    CohomologyProfile profile;
    profile.n = n;
    profile.top_degree = d.two_g_plus_r();
    profile.betti.reserve(profile.top_degree + 1);
    for (std::uint64_t i = 0; i <= profile.top_degree; ++i)
        profile.betti.push_back(binomial(profile.top_degree, i));
    return profile;
}

FinGenAbGroup h1_mu_n(const GroupDescriptor& d, const Int& n) {
    return hom_group(n_torsion_group(d, n), FinGenAbGroup::cyclic(n));
}

FinGenAbGroup picard_mod_n(const GroupDescriptor& d, const Int& n) {
    require_commutative(d, "picard_mod_n");
    coprimality_guard(d, n);
    return FinGenAbGroup::cyclic_power(n, d.rho);
}

BerkovichReport berkovich_sequence(const GroupDescriptor& d, const Int& n) {
    require_commutative(d, "berkovich_sequence");
    coprimality_guard(d, n);
    const std::uint64_t m = d.two_g_plus_r();
    if (m > kMaxBerkovichRank)
        throw std::length_error("berkovich_sequence: 2g+r = " + std::to_string(m) +
                                " exceeds the supported rank " +
                                std::to_string(kMaxBerkovichRank));

    BerkovichReport report;
    report.n = n;
    report.left = picard_mod_n(d, n);
    report.middle = hom_group(exterior_square(n_torsion_group(d, n)), FinGenAbGroup::cyclic(n));

    // The left term embeds as a direct summand of the middle (Z/n)^C(m,2),
    // so the quotient is again free over Z/n, of rank C(m,2) - rho. For
    // composite n the same shape follows prime-power-wise by CRT.
    const std::uint64_t pairs = m * (m - 1) / 2;
    if (d.rho > pairs)
        throw std::logic_error("berkovich_sequence: rho exceeds C(2g+r, 2); descriptor "
                               "was not validated");
    report.right = FinGenAbGroup::cyclic_power(n, pairs - d.rho);

    report.certificate.left_order = report.left.order();
    report.certificate.middle_order = report.middle.order();
    report.certificate.right_order = report.right.order();
    report.certificate.holds = report.certificate.left_order * report.certificate.right_order ==
                               report.certificate.middle_order;
    if (!report.certificate.holds)
        throw std::logic_error("berkovich_sequence: cardinality certificate failed; "
                               "this is an internal defect");
    return report;
}

Int brauer_ell_corank(const GroupDescriptor& d, const Int& ell) {
    require_commutative(d, "brauer_ell_corank");
    require_good_prime(d, ell);
    Int m = d.two_g_plus_r();
    Int corank = m * (m - 1) / 2 - d.rho;
    if (corank < 0)
        throw std::logic_error("brauer_ell_corank: negative corank; descriptor was not "
                               "validated");
    return corank;
}

HomSpacePi1Bound homspace_pi1_bound(const HomSpaceDescriptor& x) {
    if (!x.stabilizer_connected)
        throw std::domain_error(
            "homspace_pi1_bound: requires a connected stabilizer (for a finite subgroup "
            "Gamma of GL(n), pi1^(p') of GL(n)/Gamma is Gamma itself, which the bound "
            "cannot see)");
    if (x.g_h > x.group.g || x.r_h > x.group.r)
        throw std::invalid_argument("homspace_pi1_bound: stabilizer invariants exceed the "
                                    "ambient group; descriptor was not validated");
    std::uint64_t bound = 2 * (std::uint64_t(x.group.g) - x.g_h) + (x.group.r - x.r_h);
    return HomSpacePi1Bound{bound, true};
}

}  // namespace aginv
