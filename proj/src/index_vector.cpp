#include "polycosec/index_vector.hpp"

namespace polycosec {

std::string IndexVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(entries_[i]);
    }
    return out;
}

} // namespace polycosec
