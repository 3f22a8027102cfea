#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace polycosec {

/// Outcome of one identity check, plus free-form side notes
/// (e.g. a measured constant).
class VerifyReport {
public:
    explicit VerifyReport(std::string name) : name_(std::move(name)) {}

    void add(const std::string& label, bool pass, const std::string& detail = "");
    void note(const std::string& key, const std::string& value);
    void merge(const VerifyReport& other);

    const std::string& name() const { return name_; }
    bool all_pass() const { return fail_count_ == 0; }
    int fail_count() const { return fail_count_; }
    std::size_t item_count() const { return items_.size(); }

    struct Item {
        std::string label;
        bool pass;
        std::string detail;
    };

    const std::vector<Item>& items() const { return items_; }
    const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }

    // Per-cell lines, notes, then a summary line "PASS" or "FAIL: <count>".
    void print(std::ostream& os) const;

private:
    std::string name_;
    std::vector<Item> items_;
    std::vector<std::pair<std::string, std::string>> notes_;
    int fail_count_ = 0;
};

} // namespace polycosec
