#include "aginv/descriptor.hpp"

namespace aginv {

namespace {

void check_group(const GroupDescriptor& d, Strictness strictness,
                 std::vector<ValidationError::Violation>& violations,
                 std::vector<std::string>* warnings) {
    if (d.char_p != 0 && !is_prime(d.char_p))
        violations.push_back({"char", "characteristic must be 0 or a prime, got " +
                                          d.char_p.get_str()});

    if (d.g == 0 && d.rho != 0)
        violations.push_back({"rho", "rho must be 0 when g = 0 (no abelian variety part)"});
    if (d.g >= 1 && d.rho == 0)
        violations.push_back({"rho", "rho must be >= 1 when g >= 1 (an abelian variety has "
                                     "a nontrivial Neron-Severi group)"});

    // Hard bound: the Brauer corank (2g+r)(2g+r-1)/2 - rho must be >= 0.
    Int m = d.two_g_plus_r();
    Int corank_bound = m * (m - 1) / 2;
    if (Int(d.rho) > corank_bound)
        violations.push_back({"rho", "rho = " + std::to_string(d.rho) +
                                         " exceeds (2g+r)(2g+r-1)/2 = " + corank_bound.get_str() +
                                         ", making the Brauer corank negative"});

    // Soft bound: NS A embeds in a degree-2 cohomology group of rank g(2g-1).
    if (d.g >= 1) {
        Int ns_bound = Int(d.g) * (2 * Int(d.g) - 1);
        if (Int(d.rho) > ns_bound) {
            std::string msg = "rho = " + std::to_string(d.rho) +
                              " exceeds the cohomological bound g(2g-1) = " + ns_bound.get_str();
            if (strictness == Strictness::strict)
                violations.push_back({"rho", msg});
            else if (warnings)
                warnings->push_back("rho: " + msg);
        }
    }
}

}  // namespace

GroupDescriptor validate(const GroupDescriptor& d, Strictness strictness,
                         std::vector<std::string>* warnings) {
    std::vector<ValidationError::Violation> violations;
    check_group(d, strictness, violations, warnings);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return d;
}

HomSpaceDescriptor validate(const HomSpaceDescriptor& d, Strictness strictness,
                            std::vector<std::string>* warnings) {
    std::vector<ValidationError::Violation> violations;
    check_group(d.group, strictness, violations, warnings);

    if (d.g_h > d.group.g)
        violations.push_back({"g_H", "stabilizer invariant g_H = " + std::to_string(d.g_h) +
                                         " exceeds the ambient g = " + std::to_string(d.group.g)});
    if (d.r_h > d.group.r)
        violations.push_back({"r_H", "stabilizer invariant r_H = " + std::to_string(d.r_h) +
                                         " exceeds the ambient r = " + std::to_string(d.group.r)});
    if (!d.stabilizer_connected)
        violations.push_back(
            {"stabilizer_connected",
             "computations require a connected stabilizer: for a finite subgroup Gamma of "
             "GL(n), the quotient GL(n)/Gamma has prime-to-p fundamental group Gamma, so no "
             "bound of the form 2(g-g_H)+r-r_H can hold for disconnected stabilizers"});

    if (!violations.empty()) throw ValidationError(std::move(violations));
    return d;
}

void coprimality_guard(const GroupDescriptor& d, const Int& n) {
    if (n < 1) throw std::invalid_argument("coprimality_guard: n must be positive");
    if (d.char_p != 0 && gcd(n, d.char_p) != 1) throw CoprimalityError(n, d.char_p);
}

}  // namespace aginv
