#include "hamfix/report.hpp"

#include <algorithm>

namespace hamfix {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

void Report::pass(std::string check, std::string detail) {
    findings_.push_back({std::move(check), Status::pass, std::move(detail), {}});
}

void Report::fail(std::string check, std::string detail, std::vector<std::string> witnesses) {
    findings_.push_back({std::move(check), Status::fail, std::move(detail), std::move(witnesses)});
}

void Report::inconclusive(std::string check, std::string detail, std::vector<std::string> witnesses) {
    findings_.push_back({std::move(check), Status::inconclusive, std::move(detail), std::move(witnesses)});
}

void Report::append(const Report& other) {
    findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

std::vector<Finding> Report::violations() const {
    std::vector<Finding> out;
    for (const auto& f : findings_)
        if (f.status == Status::fail) out.push_back(f);
    return out;
}

size_t Report::violation_count() const {
    return static_cast<size_t>(
        std::count_if(findings_.begin(), findings_.end(), [](const Finding& f) { return f.status == Status::fail; }));
}

const Finding* Report::find(const std::string& check) const {
    for (const auto& f : findings_)
        if (f.check == check) return &f;
    return nullptr;
}

Status Report::overall() const {
    bool open = false;
    for (const auto& f : findings_) {
        if (f.status == Status::fail) return Status::fail;
        if (f.status == Status::inconclusive) open = true;
    }
    return open ? Status::inconclusive : Status::pass;
}

}  // namespace hamfix
