#include "report.hpp"

#include <sstream>

namespace aginv::cli {

namespace {

// Arbitrary-precision values render as JSON numbers while they fit 64 bits
// and as decimal strings beyond; desk-scale reports always get numbers.
nlohmann::json json_int(const Int& v) {
    if (v >= 0 && v.fits_ulong_p()) return std::uint64_t(v.get_ui());
    if (v < 0 && v.fits_slong_p()) return std::int64_t(v.get_si());
    return v.get_str();
}

nlohmann::json descriptor_to_json(const GroupDescriptor& d, const char* kind) {
    return {
        {"kind", kind},
        {"label", d.label},
        {"char", json_int(d.char_p)},
        {"g", d.g},
        {"r", d.r},
        {"u", d.u},
        {"rho", d.rho},
        {"commutative", d.commutative},
    };
}

std::string group_text(const FinGenAbGroup& g) { return g.to_string(); }

}  // namespace

GroupReport compute_group_report(const GroupDescriptor& d, const std::optional<Int>& n,
                                 const std::optional<Int>& ell) {
    GroupReport report;
    report.descriptor = d;
    report.pi1 = pi1_report(d);
    report.bounds = homotopy_sequence_ranks(d);
    report.n = n;
    if (n) {
        report.torsion = n_torsion_group(d, *n);
        report.profile = cohomology_profile(d, *n);
        report.berkovich = berkovich_sequence(d, *n);
    }
    report.ell = ell;
    if (ell) report.brauer_corank = brauer_ell_corank(d, *ell);
    return report;
}

HomSpaceReport compute_homspace_report(const HomSpaceDescriptor& d) {
    return HomSpaceReport{d, homspace_pi1_bound(d)};
}

nlohmann::json group_to_json(const FinGenAbGroup& g) {
    nlohmann::json factors = nlohmann::json::array();
    for (const Int& d : g.invariant_factors()) factors.push_back(json_int(d));
    return {{"free_rank", g.free_rank()}, {"invariant_factors", factors}};
}

nlohmann::json to_json(const GroupReport& report) {
    nlohmann::json out;
    out["descriptor"] = descriptor_to_json(report.descriptor, "group");

    nlohmann::json pi1;
    pi1["abelian"] = report.pi1.abelian;
    bool exact = report.pi1.exactness == Pi1Report::Exactness::exact;
    pi1["exactness"] = exact ? "exact" : "bound-only";
    if (exact) pi1["free_rank_over_z_p_prime"] = report.pi1.free_rank;
    pi1["generator_bound"] = report.pi1.generator_bound;
    pi1["excluded_prime"] = json_int(report.pi1.excluded_prime);
    pi1["torsion_possible"] = report.pi1.torsion_possible;
    out["pi1"] = pi1;

    out["bounds"] = {{"affine_part_bound", report.bounds.affine_part_bound},
                     {"abelian_part_rank", report.bounds.abelian_part_rank}};

    if (report.torsion) out["torsion"] = group_to_json(*report.torsion);
    if (report.profile) {
        nlohmann::json betti = nlohmann::json::array();
        for (const Int& b : report.profile->betti) betti.push_back(json_int(b));
        out["betti"] = betti;
    }
    if (report.berkovich) {
        const BerkovichReport& b = *report.berkovich;
        out["berkovich"] = {{"n", json_int(b.n)},
                            {"left", group_to_json(b.left)},
                            {"middle", group_to_json(b.middle)},
                            {"right", group_to_json(b.right)},
                            {"exact", b.certificate.holds}};
    }
    if (report.brauer_corank) out["brauer_corank"] = json_int(*report.brauer_corank);
    return out;
}

nlohmann::json to_json(const HomSpaceReport& report) {
    nlohmann::json out;
    nlohmann::json desc = descriptor_to_json(report.descriptor.group, "homspace");
    desc["g_H"] = report.descriptor.g_h;
    desc["r_H"] = report.descriptor.r_h;
    desc["stabilizer_connected"] = report.descriptor.stabilizer_connected;
    out["descriptor"] = desc;
    out["bounds"] = {{"generator_bound", report.bounds.generator_bound},
                     {"abelian", report.bounds.abelian}};
    return out;
}

std::string render_text(const GroupReport& report) {
    const GroupDescriptor& d = report.descriptor;
    std::ostringstream os;
    os << "descriptor: " << (d.label.empty() ? "(unnamed)" : d.label) << " (group, char "
       << d.char_p << ", g = " << d.g << ", r = " << d.r << ", u = " << d.u
       << ", rho = " << d.rho << ", " << (d.commutative ? "commutative" : "non-commutative")
       << ")\n";

    bool exact = report.pi1.exactness == Pi1Report::Exactness::exact;
    os << "pi1^(p'):   abelian";
    if (exact)
        os << ", free Z_(p')-module of rank " << report.pi1.free_rank << " (= 2g+r)";
    else
        os << ", quotient of Z_(p')^" << report.pi1.generator_bound
           << " (bound only, torsion possible)";
    if (report.pi1.excluded_prime != 0)
        os << ", excluded prime p = " << report.pi1.excluded_prime;
    os << "\n";
    os << "homotopy:   affine part contributes at most r = " << report.bounds.affine_part_bound
       << " generators; abelian part is free of rank 2g = " << report.bounds.abelian_part_rank
       << "\n";

    if (report.n) {
        os << "n-torsion:  nG = " << group_text(*report.torsion) << "  (n = " << *report.n
           << ")\n";
        os << "betti:     ";
        for (const Int& b : report.profile->betti) os << " " << b;
        os << "   (H^i(G, Z/n) ranks, exterior algebra on H^1)\n";
        const BerkovichReport& b = *report.berkovich;
        os << "berkovich:  0 -> " << group_text(b.left) << " -> " << group_text(b.middle)
           << " -> " << group_text(b.right) << " -> 0   (Pic G/n -> Hom(L^2(nG), mu_n) -> nBr G)\n";
        os << "            cardinality certificate: " << b.certificate.left_order << " * "
           << b.certificate.right_order << " = " << b.certificate.middle_order
           << (b.certificate.holds ? "  [exact]" : "  [FAILED]") << "\n";
    }
    if (report.brauer_corank)
        os << "brauer:     Br G {ell = " << *report.ell << "} ~ (Q_ell/Z_ell)^"
           << *report.brauer_corank << "   (corank (2g+r)(2g+r-1)/2 - rho)\n";

    os << "notes:      generator bound 2g+r = " << report.pi1.generator_bound
       << (exact ? "; commutative case is exact: pi1 is free over Z_(p')"
                 : "; non-commutative case keeps the bound only")
       << "\n";
    return os.str();
}

std::string render_text(const HomSpaceReport& report) {
    const HomSpaceDescriptor& x = report.descriptor;
    std::ostringstream os;
    os << "descriptor: " << (x.group.label.empty() ? "(unnamed)" : x.group.label)
       << " (homspace, char " << x.group.char_p << ", g = " << x.group.g
       << ", r = " << x.group.r << ", g_H = " << x.g_h << ", r_H = " << x.r_h
       << ", stabilizer " << (x.stabilizer_connected ? "connected" : "NOT connected") << ")\n";
    os << "pi1^(p'):   abelian, quotient of Z_(p')^" << report.bounds.generator_bound
       << "   (bound 2(g-g_H) + r - r_H)\n";
    if (report.bounds.generator_bound == 0)
        os << "notes:      bound 0: the space is simply connected prime to p\n";
    return os.str();
}

}  // namespace aginv::cli
