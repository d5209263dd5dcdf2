#pragma once

#include <string>
#include <vector>

namespace striphom {

// Outcome of a verification pass: empty issue list means everything checked
// out. Notes carry non-failing observations (probe output, statistics).
struct Report {
    std::vector<std::string> issues;
    std::vector<std::string> notes;

    bool ok() const { return issues.empty(); }
    void fail(std::string msg) { issues.push_back(std::move(msg)); }
    void note(std::string msg) { notes.push_back(std::move(msg)); }
    void merge(const Report& other) {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

}  // namespace striphom
