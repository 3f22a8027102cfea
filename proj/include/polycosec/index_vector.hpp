#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycosec {

/// Ordered upper-index vector (k_1, ..., k_r), r >= 1.
class IndexVector {
public:
    IndexVector(std::initializer_list<long> entries) : entries_(entries) { validate(); }
    explicit IndexVector(std::vector<long> entries) : entries_(std::move(entries)) { validate(); }

    std::size_t depth() const { return entries_.size(); }
    long operator[](std::size_t i) const { return entries_.at(i); }
    const std::vector<long>& entries() const { return entries_; }

    // "k1,k2,...,kr"
    std::string str() const;

    bool operator==(const IndexVector&) const = default;

private:
    void validate() const {
        if (entries_.empty())
            throw std::invalid_argument("index vector must have depth >= 1");
    }

    std::vector<long> entries_;
};

} // namespace polycosec
