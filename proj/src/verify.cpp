#include "polycosec/verify.hpp"

namespace polycosec {

void VerifyReport::add(const std::string& label, bool pass, const std::string& detail) {
    items_.push_back({label, pass, detail});
    if (!pass)
        ++fail_count_;
}

void VerifyReport::note(const std::string& key, const std::string& value) {
    notes_.emplace_back(key, value);
}

void VerifyReport::merge(const VerifyReport& other) {
    for (const auto& it : other.items_) {
        items_.push_back(it);
        if (!it.pass)
            ++fail_count_;
    }
    for (const auto& n : other.notes_)
        notes_.push_back(n);
}

void VerifyReport::print(std::ostream& os) const {
    os << "check " << name_ << "\n";
    for (const auto& it : items_) {
        os << "  " << (it.pass ? "ok  " : "FAIL") << "  " << it.label;
        if (!it.detail.empty())
            os << "  " << it.detail;
        os << "\n";
    }
    for (const auto& [k, v] : notes_)
        os << "  note  " << k << " = " << v << "\n";
    if (all_pass())
        os << "PASS\n";
    else
        os << "FAIL: " << fail_count_ << "\n";
}

} // namespace polycosec
