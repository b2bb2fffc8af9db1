#include "tdcad/constructible.hpp"

#include <sstream>

namespace tdcad {

namespace {

void check_levels(int ambient, const std::vector<RegularSystem>& parts) {
    for (const RegularSystem& rs : parts) {
        int lvl = rs.set().top_level();
        for (const Polynomial& h : rs.ineq_factors()) lvl = std::max(lvl, h.level());
        if (lvl > ambient) throw MathError("constructible set: part exceeds ambient level");
    }
}

void check_same_level(const ConstructibleSet& a, const ConstructibleSet& b) {
    if (a.ambient_level() != b.ambient_level())
        throw MathError("constructible sets live at different ambient levels");
}

}  // namespace

ConstructibleSet::ConstructibleSet(VarOrderPtr order, int ambient,
                                   std::vector<RegularSystem> parts)
    : order_(std::move(order)), ambient_(ambient), parts_(std::move(parts)) {
    if (ambient_ < 0 || ambient_ > order_->size())
        throw MathError("ambient level out of range");
    check_levels(ambient_, parts_);
    sort_systems(parts_);
}

ConstructibleSet ConstructibleSet::empty(VarOrderPtr order, int ambient) {
    return ConstructibleSet(std::move(order), ambient, {});
}

ConstructibleSet ConstructibleSet::whole_space(VarOrderPtr order, int ambient) {
    RegularSystem all = RegularSystem::whole_space(order);
    return ConstructibleSet(std::move(order), ambient, {all});
}

ConstructibleSet ConstructibleSet::from_system(const RegularSystem& rs, int ambient) {
    return ConstructibleSet(rs.order(), ambient, {rs});
}

ConstructibleSet ConstructibleSet::from_disjoint_parts(VarOrderPtr order, int ambient,
                                                       std::vector<RegularSystem> parts) {
    return ConstructibleSet(std::move(order), ambient, std::move(parts));
}

ConstructibleSet ConstructibleSet::from_conditions(VarOrderPtr order, int ambient,
                                                   std::vector<Polynomial> eqs,
                                                   std::vector<Polynomial> ineqs) {
    auto parts = solve_system(order, std::move(eqs), std::move(ineqs));
    return ConstructibleSet(std::move(order), ambient, std::move(parts));
}

bool ConstructibleSet::contains(const std::vector<Rational>& point) const {
    if ((int)point.size() != ambient_)
        throw MathError("point dimension does not match ambient level");
    for (const RegularSystem& rs : parts_)
        if (rs.contains(point)) return true;
    return false;
}

std::string ConstructibleSet::debug_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? " u " : "") << parts_[i].debug_string();
    os << "}";
    return os.str();
}

ConstructibleSet cs_difference(const ConstructibleSet& a, const ConstructibleSet& b) {
    check_same_level(a, b);
    std::vector<RegularSystem> out;
    for (const RegularSystem& part : a.parts()) {
        std::vector<RegularSystem> pieces{part};
        for (const RegularSystem& bp : b.parts()) {
            std::vector<RegularSystem> next;
            for (const RegularSystem& piece : pieces) {
                auto d = cell_difference(piece, bp);
                next.insert(next.end(), d.begin(), d.end());
            }
            pieces = std::move(next);
            if (pieces.empty()) break;
        }
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return ConstructibleSet::from_disjoint_parts(a.order(), a.ambient_level(), std::move(out));
}

ConstructibleSet cs_intersection(const ConstructibleSet& a, const ConstructibleSet& b) {
    check_same_level(a, b);
    std::vector<RegularSystem> out;
    for (const RegularSystem& pa : a.parts()) {
        for (const RegularSystem& pb : b.parts()) {
            std::vector<Polynomial> eqs = pa.equations();
            for (const Polynomial& e : pb.equations()) eqs.push_back(e);
            std::vector<Polynomial> ineqs = pa.nonvanishing();
            for (const Polynomial& n : pb.nonvanishing()) ineqs.push_back(n);
            auto cells = solve_system(a.order(), std::move(eqs), std::move(ineqs));
            out.insert(out.end(), cells.begin(), cells.end());
        }
    }
    return ConstructibleSet::from_disjoint_parts(a.order(), a.ambient_level(), std::move(out));
}

bool cs_is_empty(const ConstructibleSet& a) { return a.is_empty(); }

bool cs_contains(const ConstructibleSet& a, const std::vector<Rational>& point) {
    return a.contains(point);
}

bool cs_subset(const ConstructibleSet& a, const ConstructibleSet& b) {
    return cs_is_empty(cs_difference(a, b));
}

bool cs_equal(const ConstructibleSet& a, const ConstructibleSet& b) {
    return cs_subset(a, b) && cs_subset(b, a);
}

}  // namespace tdcad
