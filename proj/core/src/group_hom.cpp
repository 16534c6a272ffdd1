#include "aginv/group_hom.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "aginv/smith.hpp"

namespace aginv {

GroupHom::GroupHom(FinGenAbGroup source, FinGenAbGroup target, IntegerMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
        throw std::invalid_argument(
            "GroupHom: matrix must be target generators x source generators");

    // d_j * (column j) must vanish in the target.
    for (std::size_t j = 0; j < source_.generator_count(); ++j) {
        Int d = source_.generator_order(j);
        if (d == 0) continue;  // free generator, no constraint
        for (std::size_t i = 0; i < target_.generator_count(); ++i) {
            Int scaled = d * matrix_(i, j);
            Int e = target_.generator_order(i);
            bool ok = (e == 0) ? (scaled == 0) : (scaled % e == 0);
            if (!ok)
                throw std::invalid_argument(
                    "GroupHom: image of generator " + std::to_string(j) +
                    " is not killed by its order " + d.get_str());
        }
    }
}

GroupHom GroupHom::zero(FinGenAbGroup source, FinGenAbGroup target) {
    IntegerMatrix m(target.generator_count(), source.generator_count());
    return GroupHom(std::move(source), std::move(target), std::move(m));
}

GroupHom GroupHom::identity(const FinGenAbGroup& g) {
    return GroupHom(g, g, IntegerMatrix::identity(g.generator_count()));
}

namespace {

// A sublattice (plus torsion relations) of Z^ambient described by the column
// span of a generating matrix, encoded through its Smith form. Columns
// U^{-1} (d_i e_i), i < rank, form a basis of the span.
struct LatticeSpan {
    IntegerMatrix u;         // left Smith factor of the generating matrix
    std::vector<Int> diag;   // full Smith diagonal
    std::size_t rank;
    std::size_t ambient;
};

LatticeSpan lattice_span(const IntegerMatrix& generators) {
    SmithResult snf = smith_normal_form(generators);
    return LatticeSpan{std::move(snf.u), snf.diagonal(), snf.rank, generators.rows()};
}

// Coordinates of column c of `m` in the basis of the span, or nullopt when
// the column lies outside the lattice.
std::optional<std::vector<Int>> coordinates_in(const LatticeSpan& span, const IntegerMatrix& m,
                                               std::size_t c) {
    // y = U * column
    std::vector<Int> y(span.ambient, 0);
    for (std::size_t i = 0; i < span.ambient; ++i)
        for (std::size_t k = 0; k < span.ambient; ++k) y[i] += span.u(i, k) * m(k, c);

    std::vector<Int> x(span.rank, 0);
    for (std::size_t i = 0; i < span.ambient; ++i) {
        if (i < span.rank) {
            if (y[i] % span.diag[i] != 0) return std::nullopt;
            x[i] = y[i] / span.diag[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return x;
}

// (column span of num) / (column span of den), with den contained in num.
FinGenAbGroup span_quotient(const IntegerMatrix& num, const IntegerMatrix& den) {
    LatticeSpan span = lattice_span(num);
    IntegerMatrix relations(den.cols(), span.rank);
    for (std::size_t c = 0; c < den.cols(); ++c) {
        auto x = coordinates_in(span, den, c);
        if (!x)
            throw std::logic_error("span_quotient: denominator escapes the numerator span");
        for (std::size_t j = 0; j < span.rank; ++j) relations(c, j) = (*x)[j];
    }
    return group_from_presentation(span.rank, relations);
}

// Generators (as columns in Z^source-generators) of the full preimage of the
// target's relation lattice: an integer vector u maps to zero in the target
// iff F u lands in the span of the target relations.
IntegerMatrix kernel_columns(const GroupHom& f) {
    IntegerMatrix rel = f.target().relation_columns();
    IntegerMatrix stacked = hcat(f.matrix(), rel);
    SmithResult snf = smith_normal_form(stacked);

    std::size_t total = stacked.cols();
    std::size_t a = f.source().generator_count();
    IntegerMatrix cols(a, total - snf.rank);
    for (std::size_t c = snf.rank; c < total; ++c)
        for (std::size_t i = 0; i < a; ++i) cols(i, c - snf.rank) = snf.v(i, c);
    return cols;
}

bool span_contains_columns(const LatticeSpan& span, const IntegerMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!coordinates_in(span, m, c)) return false;
    return true;
}

}  // namespace

FinGenAbGroup kernel(const GroupHom& f) {
    IntegerMatrix gens = kernel_columns(f);
    IntegerMatrix rel = f.source().relation_columns();
    return span_quotient(hcat(gens, rel), rel);
}

FinGenAbGroup image(const GroupHom& f) {
    IntegerMatrix rel = f.target().relation_columns();
    return span_quotient(hcat(f.matrix(), rel), rel);
}

FinGenAbGroup cokernel(const GroupHom& f) {
    IntegerMatrix rel = f.target().relation_columns();
    IntegerMatrix relations = vcat(f.matrix().transposed(), rel.transposed());
    return group_from_presentation(f.target().generator_count(), relations);
}

ExactnessCertificate verify_short_exact(const GroupHom& f, const GroupHom& g) {
    if (f.target() != g.source())
        throw std::invalid_argument("verify_short_exact: target(f) != source(g)");

    ExactnessCertificate cert;
    cert.f_injective = kernel(f).is_trivial();
    cert.g_surjective = cokernel(g).is_trivial();

    // image(f) and kernel(g) as sublattices of Z^middle-generators, both
    // containing the middle relations; compare by mutual inclusion.
    IntegerMatrix rel = f.target().relation_columns();
    IntegerMatrix image_gens = hcat(f.matrix(), rel);
    IntegerMatrix kernel_gens = hcat(kernel_columns(g), rel);
    LatticeSpan image_span = lattice_span(image_gens);
    LatticeSpan kernel_span = lattice_span(kernel_gens);
    cert.image_equals_kernel = span_contains_columns(image_span, kernel_gens) &&
                               span_contains_columns(kernel_span, image_gens);

    cert.all_finite =
        f.source().is_finite() && f.target().is_finite() && g.target().is_finite();
    if (f.source().is_finite()) cert.left_order = f.source().order();
    if (f.target().is_finite()) cert.middle_order = f.target().order();
    if (g.target().is_finite()) cert.right_order = g.target().order();
    if (cert.all_finite)
        cert.cardinality_holds = cert.left_order * cert.right_order == cert.middle_order;
    return cert;
}

}  // namespace aginv
