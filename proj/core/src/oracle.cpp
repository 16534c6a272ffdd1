#include "aginv/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <utility>

#include "aginv/invariants.hpp"

namespace aginv::oracle {

// ---------------------------------------------------------------------------
// FiniteGroupTable

FiniteGroupTable::FiniteGroupTable(std::string name, std::size_t order,
                                   std::vector<unsigned> table, unsigned identity)
    : name_(std::move(name)), order_(order), table_(std::move(table)), identity_(identity) {
    if (order_ == 0) throw std::invalid_argument("FiniteGroupTable: order must be positive");
    if (table_.size() != order_ * order_)
        throw std::invalid_argument("FiniteGroupTable: table must be order x order");
    for (unsigned v : table_)
        if (v >= order_) throw std::invalid_argument("FiniteGroupTable: entry out of range");
    if (identity_ >= order_)
        throw std::invalid_argument("FiniteGroupTable: identity out of range");

    for (unsigned a = 0; a < order_; ++a)
        if (mul(identity_, a) != a || mul(a, identity_) != a)
            throw std::invalid_argument("FiniteGroupTable: identity law fails");
    for (unsigned a = 0; a < order_; ++a) {
        bool has_inverse = false;
        for (unsigned b = 0; b < order_ && !has_inverse; ++b)
            has_inverse = mul(a, b) == identity_ && mul(b, a) == identity_;
        if (!has_inverse) throw std::invalid_argument("FiniteGroupTable: missing inverse");
    }
    for (unsigned a = 0; a < order_; ++a)
        for (unsigned b = 0; b < order_; ++b)
            for (unsigned c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("FiniteGroupTable: associativity fails");
}

bool FiniteGroupTable::is_abelian() const {
    for (unsigned a = 0; a < order_; ++a)
        for (unsigned b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
    std::vector<unsigned> table(n * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    return FiniteGroupTable("Z/" + std::to_string(n), n, std::move(table), 0);
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
    std::size_t n = a.order() * b.order();
    std::vector<unsigned> table(n * n);
    auto encode = [&](unsigned x, unsigned y) { return x * unsigned(b.order()) + y; };
    for (unsigned x1 = 0; x1 < a.order(); ++x1)
        for (unsigned y1 = 0; y1 < b.order(); ++y1)
            for (unsigned x2 = 0; x2 < a.order(); ++x2)
                for (unsigned y2 = 0; y2 < b.order(); ++y2)
                    table[encode(x1, y1) * n + encode(x2, y2)] =
                        encode(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroupTable(a.name() + " x " + b.name(), n, std::move(table),
                            encode(a.identity(), b.identity()));
}

FiniteGroupTable FiniteGroupTable::klein_four() {
    FiniteGroupTable v = direct_product(cyclic(2), cyclic(2));
    return FiniteGroupTable("Klein four", v.order(), v.table(), v.identity());
}

FiniteGroupTable FiniteGroupTable::symmetric_3() {
    // Elements are the permutations of {0,1,2} in lexicographic order;
    // composition (p * q)(x) = p(q(x)).
    std::array<std::array<unsigned, 3>, 6> perms{};
    std::array<unsigned, 3> base{0, 1, 2};
    for (std::size_t i = 0; i < 6; ++i) {
        perms[i] = base;
        std::next_permutation(base.begin(), base.end());
    }
    auto index_of = [&](const std::array<unsigned, 3>& p) -> unsigned {
        for (unsigned i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("symmetric_3: permutation not found");
    };
    std::vector<unsigned> table(36);
    for (unsigned i = 0; i < 6; ++i)
        for (unsigned j = 0; j < 6; ++j) {
            std::array<unsigned, 3> comp{};
            for (unsigned x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            table[i * 6 + j] = index_of(comp);
        }
    return FiniteGroupTable("S3", 6, std::move(table), 0);
}

FiniteGroupTable FiniteGroupTable::dihedral_4() {
    // r^a s^b with a mod 4, b mod 2, encoded as a + 4b; s r = r^-1 s.
    auto encode = [](unsigned a, unsigned b) { return a + 4 * b; };
    std::vector<unsigned> table(64);
    for (unsigned a1 = 0; a1 < 4; ++a1)
        for (unsigned b1 = 0; b1 < 2; ++b1)
            for (unsigned a2 = 0; a2 < 4; ++a2)
                for (unsigned b2 = 0; b2 < 2; ++b2) {
                    unsigned a = b1 ? (a1 + 4 - a2) % 4 : (a1 + a2) % 4;
                    table[encode(a1, b1) * 8 + encode(a2, b2)] = encode(a, (b1 + b2) % 2);
                }
    return FiniteGroupTable("D4", 8, std::move(table), 0);
}

FiniteGroupTable FiniteGroupTable::quaternion_8() {
    // Elements 2*axis + sign with axes 1, i, j, k and sign 0 = +, 1 = -.
    // axis_mul[a][b] = (axis, extra sign) for the basis product.
    struct Bas {
        unsigned axis;
        unsigned sign;
    };
    constexpr Bas axis_mul[4][4] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    std::vector<unsigned> table(64);
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            Bas r = axis_mul[a / 2][b / 2];
            unsigned sign = (a % 2) ^ (b % 2) ^ r.sign;
            table[a * 8 + b] = 2 * r.axis + sign;
        }
    return FiniteGroupTable("Q8", 8, std::move(table), 0);
}

std::vector<FiniteGroupTable> builtin_catalog(std::size_t max_order) {
    std::vector<FiniteGroupTable> catalog;
    auto add = [&](FiniteGroupTable t) {
        if (t.order() <= max_order) catalog.push_back(std::move(t));
    };
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 12); ++n)
        add(FiniteGroupTable::cyclic(n));
    add(FiniteGroupTable::klein_four());
    add(FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                         FiniteGroupTable::cyclic(4)));
    add(FiniteGroupTable::direct_product(
        FiniteGroupTable::cyclic(2),
        FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                         FiniteGroupTable::cyclic(2))));
    add(FiniteGroupTable::symmetric_3());
    add(FiniteGroupTable::dihedral_4());
    add(FiniteGroupTable::quaternion_8());
    std::stable_sort(catalog.begin(), catalog.end(),
                     [](const FiniteGroupTable& a, const FiniteGroupTable& b) {
                         return a.order() < b.order();
                     });
    return catalog;
}

// ---------------------------------------------------------------------------
// element enumeration over a finite group in canonical form

namespace {

// Mixed-radix element coordinates over the invariant factors.
struct ElementSpace {
    std::vector<unsigned long> radix;
    std::uint64_t size = 1;

    explicit ElementSpace(const FinGenAbGroup& g) {
        for (const Int& d : g.invariant_factors()) {
            radix.push_back(d.get_ui());
            size *= radix.back();
        }
    }

    std::vector<unsigned long> decode(std::uint64_t index) const {
        std::vector<unsigned long> coords(radix.size());
        for (std::size_t i = radix.size(); i-- > 0;) {
            coords[i] = index % radix[i];
            index /= radix[i];
        }
        return coords;
    }
};

std::uint64_t checked_order(const FinGenAbGroup& g, std::size_t bound, const char* what) {
    if (!g.is_finite()) throw std::domain_error(std::string(what) + ": finite input required");
    Int order = g.order();
    if (order > Int(static_cast<unsigned long>(bound)))
        throw std::domain_error(std::string(what) + ": order " + order.get_str() +
                                " exceeds the bound " + std::to_string(bound));
    return order.get_ui();
}

}  // namespace

FinGenAbGroup exterior_square_bruteforce(const FinGenAbGroup& a, std::size_t order_bound) {
    std::uint64_t order = checked_order(a, order_bound, "exterior_square_bruteforce");
    const auto& d = a.invariant_factors();
    const std::size_t k = d.size();
    const std::size_t tensor_gens = k * k;

    // A (x) A on generators g_i (x) g_j with both bilinear relations, plus
    // one relation a (x) a per element of A.
    IntegerMatrix relations(2 * tensor_gens + order, tensor_gens);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t col = i * k + j;
            relations(2 * col, col) = d[i];
            relations(2 * col + 1, col) = d[j];
        }
    ElementSpace space(a);
    for (std::uint64_t e = 0; e < order; ++e) {
        auto coords = space.decode(e);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                relations(2 * tensor_gens + e, i * k + j) = Int(coords[i]) * Int(coords[j]);
    }
    return group_from_presentation(tensor_gens, relations);
}

std::uint64_t hom_count_bruteforce(const FinGenAbGroup& a, const FinGenAbGroup& b,
                                   std::size_t order_bound) {
    checked_order(a, order_bound, "hom_count_bruteforce");
    std::uint64_t b_order = checked_order(b, order_bound, "hom_count_bruteforce");

    const auto& da = a.invariant_factors();
    ElementSpace space(b);

    // Precompute which elements of B are killed by each source order.
    std::vector<std::vector<std::uint64_t>> valid(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) {
        unsigned long d = da[i].get_ui();
        for (std::uint64_t x = 0; x < b_order; ++x) {
            auto coords = space.decode(x);
            bool killed = true;
            for (std::size_t j = 0; j < coords.size() && killed; ++j)
                killed = (d * coords[j]) % space.radix[j] == 0;
            if (killed) valid[i].push_back(x);
        }
    }
    std::uint64_t count = 1;
    for (const auto& v : valid) count *= v.size();
    return count;
}

std::vector<std::vector<unsigned>> eckmann_hilton_search(const FiniteGroupTable& g,
                                                         std::size_t order_bound) {
    const std::size_t n = g.order();
    if (n > order_bound)
        throw std::domain_error("eckmann_hilton_search: order " + std::to_string(n) +
                                " exceeds the bound " + std::to_string(order_bound));
    const unsigned e = g.identity();
    constexpr int kUnset = -1;

    std::vector<int> m(n * n, kUnset);
    for (unsigned a = 0; a < n; ++a) {
        m[e * n + a] = int(a);
        m[a * n + e] = int(a);
    }
    std::vector<std::size_t> cells;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            if (m[a * n + b] == kUnset) cells.push_back(a * n + b);

    // Interchange instances whose three cells are all assigned must agree
    // with the ambient multiplication. Unit instances (b = c = e) are checked
    // first: they pin every free cell, so wrong candidates die immediately.
    auto consistent = [&]() {
        for (unsigned a = 0; a < n; ++a)
            for (unsigned d = 0; d < n; ++d) {
                int lhs = m[a * n + d];
                if (lhs != kUnset && unsigned(lhs) != g.mul(a, d)) return false;
            }
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c = 0; c < n; ++c)
                    for (unsigned d = 0; d < n; ++d) {
                        int x = m[a * n + b], y = m[c * n + d];
                        int z = m[g.mul(a, c) * n + g.mul(b, d)];
                        if (x == kUnset || y == kUnset || z == kUnset) continue;
                        if (g.mul(unsigned(x), unsigned(y)) != unsigned(z)) return false;
                    }
        return true;
    };

    std::vector<std::vector<unsigned>> found;
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (depth == cells.size()) {
            found.emplace_back(m.begin(), m.end());
            return;
        }
        std::size_t cell = cells[depth];
        for (unsigned v = 0; v < n; ++v) {
            m[cell] = int(v);
            if (consistent()) self(self, depth + 1);
        }
        m[cell] = kUnset;
    };
    if (consistent()) dfs(dfs, 0);
    return found;
}

// ---------------------------------------------------------------------------
// sweeps

std::vector<std::vector<Int>> invariant_factor_chains(std::uint64_t max_order) {
    std::vector<std::vector<Int>> chains;
    std::vector<Int> current;
    // Each factor is a multiple of its predecessor; budget tracks the order
    // still available for the remaining factors.
    auto recurse = [&](auto&& self, const Int& budget) -> void {
        chains.push_back(current);
        Int start = current.empty() ? Int(2) : current.back();
        Int step = current.empty() ? Int(1) : current.back();
        for (Int d = start; d <= budget; d += step) {
            current.push_back(d);
            self(self, budget / d);
            current.pop_back();
        }
    };
    if (max_order >= 1) recurse(recurse, Int(static_cast<unsigned long>(max_order)));
    return chains;
}

namespace {

std::string chain_to_string(const std::vector<Int>& chain) {
    std::string s = "[";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ",";
        s += chain[i].get_str();
    }
    return s + "]";
}

}  // namespace

OracleVerdict berkovich_cardinality_sweep(const BerkovichSweepGrid& grid) {
    OracleVerdict verdict{"exactness", 0, {}};
    for (const Int& p : grid.characteristics) {
        for (unsigned long n_ul = grid.n_min; n_ul <= grid.n_max; ++n_ul) {
            Int n = static_cast<unsigned long>(n_ul);
            if (p != 0 && gcd(n, p) != 1) continue;
            for (std::uint32_t g = 0; g <= grid.max_g; ++g)
                for (std::uint32_t r = 0; r <= grid.max_r; ++r) {
                    std::uint64_t m = 2 * std::uint64_t(g) + r;
                    std::uint64_t pairs = m * (m - 1) / 2;
                    std::uint32_t rho_min = g == 0 ? 0 : 1;
                    std::uint64_t rho_max = g == 0 ? 0 : pairs;
                    for (std::uint64_t rho = rho_min; rho <= rho_max; ++rho) {
                        GroupDescriptor d;
                        d.char_p = p;
                        d.g = g;
                        d.r = r;
                        d.rho = std::uint32_t(rho);
                        d.commutative = true;

                        ++verdict.cases_run;
                        std::string input = "(p=" + p.get_str() + ", g=" + std::to_string(g) +
                                            ", r=" + std::to_string(r) +
                                            ", rho=" + std::to_string(rho) +
                                            ", n=" + n.get_str() + ")";

                        BerkovichReport rep = berkovich_sequence(d, n);
                        Int left = pow_int(n, rho);
                        Int middle = pow_int(n, pairs);
                        Int right = pow_int(n, pairs - rho);

                        if (rep.left.order() != left || rep.middle.order() != middle ||
                            rep.right.order() != right) {
                            verdict.mismatches.push_back(
                                {input,
                                 left.get_str() + "/" + middle.get_str() + "/" + right.get_str(),
                                 rep.left.order().get_str() + "/" + rep.middle.order().get_str() +
                                     "/" + rep.right.order().get_str()});
                            continue;
                        }
                        if (!rep.certificate.holds || left * right != middle) {
                            verdict.mismatches.push_back(
                                {input, "|left| * |right| == |middle|", "certificate failed"});
                            continue;
                        }
                        // Independent wedge rank, when the torsion group is
                        // small enough to enumerate.
                        if (pow_int(n, m) <= Int(static_cast<unsigned long>(
                                                 kDefaultExteriorSquareBound))) {
                            FinGenAbGroup wedge = exterior_square_bruteforce(
                                FinGenAbGroup::cyclic_power(n, m));
                            if (wedge.torsion_generator_count() !=
                                rep.middle.torsion_generator_count())
                                verdict.mismatches.push_back(
                                    {input,
                                     "middle rank " +
                                         std::to_string(rep.middle.torsion_generator_count()),
                                     "bruteforce wedge rank " +
                                         std::to_string(wedge.torsion_generator_count())});
                        }
                    }
                }
        }
    }
    return verdict;
}

OracleVerdict betti_sum_check(std::uint32_t max_m) {
    if (max_m > 12) throw std::invalid_argument("betti_sum_check: max_m must be <= 12");
    OracleVerdict verdict{"betti", 0, {}};
    for (std::uint32_t m = 0; m <= max_m; ++m) {
        ++verdict.cases_run;
        std::string input = "m=" + std::to_string(m);
        std::vector<std::uint64_t> counts(m + 1, 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask)
            ++counts[std::popcount(mask)];

        std::uint64_t total = 0;
        bool ok = true;
        for (std::uint32_t i = 0; i <= m; ++i) {
            total += counts[i];
            if (Int(static_cast<unsigned long>(counts[i])) != binomial(m, i)) ok = false;
            if (counts[i] != counts[m - i]) ok = false;
        }
        if (total != std::uint64_t(1) << m) ok = false;
        if (!ok)
            verdict.mismatches.push_back(
                {input, "subset counts = binomials, symmetric, summing to 2^m",
                 "enumeration disagrees"});
    }
    return verdict;
}

OracleVerdict exterior_square_agreement_sweep(std::uint64_t max_order) {
    OracleVerdict verdict{"wedge", 0, {}};
    for (const auto& chain : invariant_factor_chains(max_order)) {
        ++verdict.cases_run;
        FinGenAbGroup a = FinGenAbGroup::from_factors(chain);
        FinGenAbGroup closed = exterior_square(a);
        FinGenAbGroup brute =
            exterior_square_bruteforce(a, std::max<std::size_t>(std::size_t(max_order),
                                                                kDefaultExteriorSquareBound));
        if (closed != brute)
            verdict.mismatches.push_back(
                {chain_to_string(chain), brute.to_string(), closed.to_string()});
    }
    return verdict;
}

OracleVerdict hom_count_agreement_sweep(std::uint64_t max_order) {
    OracleVerdict verdict{"hom", 0, {}};
    auto chains = invariant_factor_chains(max_order);
    for (const auto& ca : chains)
        for (const auto& cb : chains) {
            ++verdict.cases_run;
            FinGenAbGroup a = FinGenAbGroup::from_factors(ca);
            FinGenAbGroup b = FinGenAbGroup::from_factors(cb);
            std::uint64_t brute =
                hom_count_bruteforce(a, b, std::max<std::size_t>(std::size_t(max_order),
                                                                 kDefaultHomCountBound));
            Int closed = hom_group(a, b).order();
            if (closed != Int(static_cast<unsigned long>(brute)))
                verdict.mismatches.push_back(
                    {"Hom(" + chain_to_string(ca) + ", " + chain_to_string(cb) + ")",
                     std::to_string(brute), closed.get_str()});
        }
    return verdict;
}

OracleVerdict eckmann_hilton_sweep(std::size_t max_order) {
    OracleVerdict verdict{"eh", 0, {}};
    for (const FiniteGroupTable& g : builtin_catalog(max_order)) {
        ++verdict.cases_run;
        auto results = eckmann_hilton_search(g);
        if (g.is_abelian()) {
            bool ok = results.size() == 1 && results.front() == g.table();
            if (!ok)
                verdict.mismatches.push_back({g.name(), "exactly the original operation",
                                              std::to_string(results.size()) + " operations"});
        } else if (!results.empty()) {
            verdict.mismatches.push_back(
                {g.name(), "no unit-sharing interchange operation",
                 std::to_string(results.size()) + " operations"});
        }
    }
    return verdict;
}

}  // namespace aginv::oracle
