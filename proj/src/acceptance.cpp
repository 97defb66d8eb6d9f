#include "dycknet/acceptance.hpp"

namespace dycknet {

AcceptanceSet AcceptanceSet::exact_zero() {
    AcceptanceSet s;
    s.kind_ = Kind::ExactZero;
    return s;
}

AcceptanceSet AcceptanceSet::open_interval(Rational lo, Rational hi) {
    if (!(lo < hi)) throw DomainError("open interval needs lo < hi");
    AcceptanceSet s;
    s.kind_ = Kind::OpenInterval;
    s.lo_ = std::move(lo);
    s.hi_ = std::move(hi);
    return s;
}

AcceptanceSet AcceptanceSet::finite_set(std::vector<Rational> values) {
    if (values.empty()) throw DomainError("finite acceptance set must be nonempty");
    AcceptanceSet s;
    s.kind_ = Kind::FiniteSet;
    s.values_ = std::move(values);
    return s;
}

bool AcceptanceSet::contains(const Rational& v) const {
    switch (kind_) {
    case Kind::ExactZero: return v.is_zero();
    case Kind::OpenInterval: return lo_ < v && v < hi_;
    case Kind::FiniteSet:
        for (const auto& x : values_)
            if (x == v) return true;
        return false;
    }
    return false;
}

bool AcceptanceSet::contains(const BigFloat& v) const {
    switch (kind_) {
    case Kind::ExactZero: return v.is_zero();
    case Kind::OpenInterval: return v.cmp(lo_) > 0 && v.cmp(hi_) < 0;
    case Kind::FiniteSet:
        for (const auto& x : values_)
            if (v.cmp(x) == 0) return true;
        return false;
    }
    return false;
}

} // namespace dycknet
