#include "polycosec/sequence_table.hpp"

#include <cassert>

namespace polycosec {

std::string family_name(Family f) {
    switch (f) {
    case Family::D: return "D";
    case Family::DMulti: return "Dmulti";
    case Family::B: return "B";
    case Family::C: return "C";
    }
    return "?";
}

std::string route_name(Route r) {
    switch (r) {
    case Route::DefinitionSeries: return "series";
    case Route::Recurrence: return "recurrence";
    case Route::Formula1: return "formula1";
    case Route::Formula2: return "formula2";
    case Route::GridSmallF: return "grid-f";
    case Route::GridBigF: return "grid-F";
    case Route::Explicit: return "explicit";
    case Route::SeriesOracle: return "series";
    }
    return "?";
}

void SequenceTable::set(long n, Rational value, Route route) {
    // Parity vanishing is structural for the cosecant families.
    if (family_ == Family::D)
        assert(n % 2 == 0 || value.is_zero());
    if (family_ == Family::DMulti) {
        const long r = static_cast<long>(indices_.depth());
        assert(((n - (r - 1)) % 2 + 2) % 2 == 0 || value.is_zero());
    }
    values_[n] = {std::move(value), route};
}

const Rational& SequenceTable::value(long n) const {
    return values_.at(n).first;
}

Route SequenceTable::route(long n) const {
    return values_.at(n).second;
}

} // namespace polycosec
