#pragma once

#include "aginv/abelian_group.hpp"

namespace aginv {

// Homomorphism between groups in canonical form. Column j of the matrix is
// the image of the j-th source generator, written in target generator
// coordinates. Well-definedness (each column killed by its generator's
// order) is checked at construction.
class GroupHom {
public:
    GroupHom(FinGenAbGroup source, FinGenAbGroup target, IntegerMatrix matrix);

    static GroupHom zero(FinGenAbGroup source, FinGenAbGroup target);
    static GroupHom identity(const FinGenAbGroup& g);

    const FinGenAbGroup& source() const { return source_; }
    const FinGenAbGroup& target() const { return target_; }
    const IntegerMatrix& matrix() const { return matrix_; }

private:
    FinGenAbGroup source_;
    FinGenAbGroup target_;
    IntegerMatrix matrix_;
};

FinGenAbGroup kernel(const GroupHom& f);
FinGenAbGroup image(const GroupHom& f);
FinGenAbGroup cokernel(const GroupHom& f);

struct ExactnessCertificate {
    bool f_injective = false;
    bool g_surjective = false;
    bool image_equals_kernel = false;  // as subgroups of the middle term

    bool all_finite = false;
    Int left_order = 0;    // 0 when the corresponding group is infinite
    Int middle_order = 0;
    Int right_order = 0;
    bool cardinality_holds = false;  // |left| * |right| == |middle|, when all finite

    bool exact() const { return f_injective && g_surjective && image_equals_kernel; }
};

// Certifies exactness of 0 -> source(f) -> middle -> target(g) -> 0.
// Requires target(f) == source(g); throws std::invalid_argument otherwise.
ExactnessCertificate verify_short_exact(const GroupHom& f, const GroupHom& g);

}  // namespace aginv
