#include "aginv/abelian_group.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "aginv/smith.hpp"

namespace aginv {

namespace {

bool is_divisibility_chain(const std::vector<Int>& factors) {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i + 1] % factors[i] != 0) return false;
    return true;
}

}  // namespace

FinGenAbGroup FinGenAbGroup::free_of_rank(std::size_t rank) {
    return from_factors({}, rank);
}

FinGenAbGroup FinGenAbGroup::cyclic(const Int& n) {
    return from_factors({n});
}

FinGenAbGroup FinGenAbGroup::cyclic_power(const Int& n, std::size_t k) {
    return from_factors(std::vector<Int>(k, n));
}

FinGenAbGroup FinGenAbGroup::from_factors(std::vector<Int> moduli, std::size_t free_rank) {
    for (const Int& d : moduli)
        if (d < 1) throw std::invalid_argument("from_factors: moduli must be >= 1");

    std::erase(moduli, 1);
    std::sort(moduli.begin(), moduli.end());

    FinGenAbGroup g;
    g.free_rank_ = free_rank;
    if (is_divisibility_chain(moduli)) {
        g.factors_ = std::move(moduli);
        return g;
    }
    // Not already a chain: canonicalize through the Smith form of the
    // diagonal presentation.
    std::size_t k = moduli.size();
    FinGenAbGroup canon =
        group_from_presentation(k, IntegerMatrix::diagonal(k, k, moduli));
    g.factors_ = canon.factors_;
    return g;
}

Int FinGenAbGroup::generator_order(std::size_t i) const {
    if (i < factors_.size()) return factors_[i];
    if (i < generator_count()) return 0;
    throw std::out_of_range("generator_order: index past generator count");
}

Int FinGenAbGroup::order() const {
    if (!is_finite()) throw std::domain_error("order: group is infinite");
    Int n = 1;
    for (const Int& d : factors_) n *= d;
    return n;
}

IntegerMatrix FinGenAbGroup::relation_columns() const {
    IntegerMatrix rel(generator_count(), factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) rel(j, j) = factors_[j];
    return rel;
}

std::string FinGenAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank_ == 1)
        out = "Z";
    else if (free_rank_ > 1)
        out = "Z^" + std::to_string(free_rank_);
    for (const Int& d : factors_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FinGenAbGroup& g) {
    return os << g.to_string();
}

FinGenAbGroup group_from_presentation(std::size_t generators, const IntegerMatrix& relations) {
    if (relations.cols() != generators)
        throw std::invalid_argument("group_from_presentation: relation matrix must have one column per generator");

    SmithResult snf = smith_normal_form(relations);
    std::vector<Int> factors;
    for (const Int& d : snf.diagonal())
        if (d > 1) factors.push_back(d);
    std::size_t free_rank = generators - snf.rank;

    // The Smith diagonal is already a divisibility chain, so this is cheap.
    return FinGenAbGroup::from_factors(std::move(factors), free_rank);
}

FinGenAbGroup direct_sum(const FinGenAbGroup& a, const FinGenAbGroup& b) {
    std::vector<Int> moduli = a.invariant_factors();
    moduli.insert(moduli.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FinGenAbGroup::from_factors(std::move(moduli), a.free_rank() + b.free_rank());
}

FinGenAbGroup n_torsion(const FinGenAbGroup& a, const Int& n) {
    if (n < 1) throw std::invalid_argument("n_torsion: n must be positive");
    std::vector<Int> moduli;
    moduli.reserve(a.torsion_generator_count() + a.free_rank());
    for (const Int& d : a.invariant_factors()) moduli.push_back(gcd(d, n));
    moduli.insert(moduli.end(), a.free_rank(), n);
    return FinGenAbGroup::from_factors(std::move(moduli));
}

FinGenAbGroup hom_group(const FinGenAbGroup& a, const FinGenAbGroup& b) {
    if (!a.is_finite() && !b.is_finite())
        throw std::domain_error("hom_group: both arguments infinite is out of scope");

    std::vector<Int> moduli;
    // Hom(Z/d, Z/e) = Z/gcd(d, e); Hom(Z/d, Z) = 0.
    for (const Int& d : a.invariant_factors())
        for (const Int& e : b.invariant_factors()) moduli.push_back(gcd(d, e));
    // Hom(Z, B) = B, one copy per free generator of A.
    for (std::size_t i = 0; i < a.free_rank(); ++i)
        moduli.insert(moduli.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FinGenAbGroup::from_factors(std::move(moduli), a.free_rank() * b.free_rank());
}

FinGenAbGroup tensor_product(const FinGenAbGroup& a, const FinGenAbGroup& b) {
    std::vector<Int> moduli;
    for (const Int& d : a.invariant_factors())
        for (const Int& e : b.invariant_factors()) moduli.push_back(gcd(d, e));
    for (std::size_t i = 0; i < a.free_rank(); ++i)
        moduli.insert(moduli.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    for (std::size_t i = 0; i < b.free_rank(); ++i)
        moduli.insert(moduli.end(), a.invariant_factors().begin(), a.invariant_factors().end());
    return FinGenAbGroup::from_factors(std::move(moduli), a.free_rank() * b.free_rank());
}

FinGenAbGroup exterior_square(const FinGenAbGroup& a) {
    if (!a.is_finite())
        throw std::domain_error("exterior_square: finite input required");

    const auto& d = a.invariant_factors();
    const std::size_t k = d.size();
    const std::size_t pairs = k * (k - 1) / 2;

    // Generators e_i ^ e_j, i < j, in lexicographic order; each is killed by
    // both d_i and d_j (bilinearity on either slot).
    IntegerMatrix relations(2 * pairs, pairs);
    std::size_t col = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            relations(2 * col, col) = d[i];
            relations(2 * col + 1, col) = d[j];
            ++col;
        }
    return group_from_presentation(pairs, relations);
}

}  // namespace aginv
