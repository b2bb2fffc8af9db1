#pragma once

#include <vector>

#include "tdcad/solver.hpp"

namespace tdcad {

// Finite union of pairwise-disjoint regular-system zero sets inside C^k,
// k = ambient_level. Disjointness is a construction-time obligation: sets
// are only built from a single system, from solver output, or from the
// MPD/SMPD operations, all of which produce disjoint parts.
class ConstructibleSet {
public:
    static ConstructibleSet empty(VarOrderPtr order, int ambient);
    static ConstructibleSet whole_space(VarOrderPtr order, int ambient);
    static ConstructibleSet from_system(const RegularSystem& rs, int ambient);
    // Parts must have pairwise disjoint zero sets (solver / MPD / SMPD output).
    static ConstructibleSet from_disjoint_parts(VarOrderPtr order, int ambient,
                                                std::vector<RegularSystem> parts);
    // {all eqs = 0, all ineqs != 0} via the solver.
    static ConstructibleSet from_conditions(VarOrderPtr order, int ambient,
                                            std::vector<Polynomial> eqs,
                                            std::vector<Polynomial> ineqs);

    int ambient_level() const { return ambient_; }
    const VarOrderPtr& order() const { return order_; }
    const std::vector<RegularSystem>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }

    bool contains(const std::vector<Rational>& point) const;

    std::string debug_string() const;

private:
    ConstructibleSet(VarOrderPtr order, int ambient, std::vector<RegularSystem> parts);

    VarOrderPtr order_;
    int ambient_ = 0;
    std::vector<RegularSystem> parts_;
};

ConstructibleSet cs_difference(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet cs_intersection(const ConstructibleSet& a, const ConstructibleSet& b);
bool cs_is_empty(const ConstructibleSet& a);
bool cs_contains(const ConstructibleSet& a, const std::vector<Rational>& point);
bool cs_subset(const ConstructibleSet& a, const ConstructibleSet& b);
bool cs_equal(const ConstructibleSet& a, const ConstructibleSet& b);

}  // namespace tdcad
