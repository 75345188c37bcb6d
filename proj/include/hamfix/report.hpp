#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hamfix {

// Input cannot be interpreted: bad ids, malformed weights, schema errors.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (wrong dimension, non-generic
// direction, missing field it needs).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input whose values contradict each other.
class InconsistentDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required continuation (edge, level) is absent from the data.
class IncompleteDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, inconclusive };

const char* to_string(Status s);

struct Finding {
    std::string check;
    Status status = Status::pass;
    std::string detail;
    std::vector<std::string> witnesses;
};

class Report {
public:
    void add(Finding f) { findings_.push_back(std::move(f)); }
    void pass(std::string check, std::string detail = {});
    void fail(std::string check, std::string detail, std::vector<std::string> witnesses = {});
    void inconclusive(std::string check, std::string detail, std::vector<std::string> witnesses = {});
    void append(const Report& other);

    const std::vector<Finding>& findings() const { return findings_; }
    std::vector<Finding> violations() const;
    size_t violation_count() const;
    const Finding* find(const std::string& check) const;
    bool passed() const { return violation_count() == 0; }
    // fail if any finding fails, else inconclusive if any is, else pass
    Status overall() const;

private:
    std::vector<Finding> findings_;
};

}  // namespace hamfix
