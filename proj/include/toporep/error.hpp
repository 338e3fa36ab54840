#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace toporep {

enum class ErrorKind {
    invalid_parameter,
    invalid_input,
    dimension_mismatch,
    unsupported_search_field,
    instance_too_large,
    poset_too_large,
    budget_exceeded,
    insufficient_rank,
    not_monotone,
    wrong_arity,
    parse_error,
    internal_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // budget-style failures map to a distinct CLI exit code
    bool is_budget() const {
        return kind_ == ErrorKind::instance_too_large || kind_ == ErrorKind::poset_too_large ||
               kind_ == ErrorKind::budget_exceeded;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Cooperative cancellation for the exhaustive searches. A default-constructed
/// budget never expires.
class SearchBudget {
public:
    SearchBudget() = default;

    static SearchBudget seconds(double s) {
        SearchBudget b;
        b.deadline_ = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(s));
        return b;
    }

    // Polled from inner loops; only touches the clock every 4096 calls.
    void tick() const {
        if (!deadline_) return;
        if ((++counter_ & 0xFFF) != 0) return;
        if (std::chrono::steady_clock::now() > *deadline_)
            fail(ErrorKind::budget_exceeded, "search time budget exceeded");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    mutable std::uint64_t counter_ = 0;
};

}  // namespace toporep
