#include "toporep/error.hpp"

namespace toporep {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::dimension_mismatch: return "dimension-mismatch";
        case ErrorKind::unsupported_search_field: return "unsupported-search-field";
        case ErrorKind::instance_too_large: return "instance-too-large";
        case ErrorKind::poset_too_large: return "poset-too-large";
        case ErrorKind::budget_exceeded: return "budget-exceeded";
        case ErrorKind::insufficient_rank: return "insufficient-rank";
        case ErrorKind::not_monotone: return "not-monotone";
        case ErrorKind::wrong_arity: return "wrong-arity";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::internal_error: return "internal-error";
    }
    return "unknown";
}

}  // namespace toporep
