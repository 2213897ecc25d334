#pragma once

#include "nucal/algebra.hpp"

namespace nucal {

enum class Side { Left, Middle, Right };

const char* side_name(Side s);

// Elements that associate with everything when placed in the given slot of
// J(.,.,.); computed as one stacked kernel over all basis pairs.
Subspace nucleus(const Algebra& a, Side side);

// nucleus() plus the certification the result is required to satisfy.
struct NucleusReport {
    Subspace subspace;
    bool closed;       // closed under multiplication
    bool associative;  // restricted product associates
};
NucleusReport nucleus_report(const Algebra& a, Side side);

// Five-term derivation identity of J, checked on all basis quadruples.
// Holds for every algebra; a false return means the multiplication is broken.
bool verify_associator_identity(const Algebra& a, unsigned workers = 1);

struct CommutativeNucleusReport {
    bool is_commutative;
    bool left_equals_right;
    bool left_in_middle;
    std::size_t dim_left, dim_middle, dim_right;
};
CommutativeNucleusReport commutative_nucleus_relations(const Algebra& a);

// True iff the (unique) unit lies in all three nuclei.  Throws
// PreconditionError when the algebra has no unit.
bool unit_in_nuclei(const Algebra& a);

}  // namespace nucal
