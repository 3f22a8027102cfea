#pragma once

#include "polycosec/index_vector.hpp"
#include "polycosec/rational.hpp"

#include <map>
#include <string>

namespace polycosec {

enum class Family { D, DMulti, B, C };

std::string family_name(Family f);

/// Which computational path produced a value.
enum class Route {
    DefinitionSeries, // generating-function long division
    Recurrence,       // row recurrence from the base family
    Formula1,         // first closed Stirling/Bernoulli formula
    Formula2,         // second closed Stirling formula
    GridSmallF,       // read off the bivariate f(x,y) grid
    GridBigF,         // read off the bivariate F(x,y) grid
    Explicit,         // explicit Stirling sum (poly-Bernoulli families)
    SeriesOracle,     // series expansion oracle (poly-Bernoulli families)
};

std::string route_name(Route r);

/// Computed family values keyed by n, each carrying its route tag.
class SequenceTable {
public:
    SequenceTable(Family family, IndexVector indices)
        : family_(family), indices_(std::move(indices)) {}

    Family family() const { return family_; }
    const IndexVector& indices() const { return indices_; }

    void set(long n, Rational value, Route route);
    const Rational& value(long n) const;
    Route route(long n) const;
    bool has(long n) const { return values_.count(n) != 0; }
    long max_n() const { return values_.empty() ? -1 : values_.rbegin()->first; }

    const std::map<long, std::pair<Rational, Route>>& entries() const { return values_; }

private:
    Family family_;
    IndexVector indices_;
    std::map<long, std::pair<Rational, Route>> values_;
};

} // namespace polycosec
