#include "bkpvc/error.hpp"

namespace bkpvc {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::cycle_detected: return "CycleDetected";
        case Errc::invalid_vertex: return "InvalidVertex";
        case Errc::duplicate_edge: return "DuplicateEdge";
        case Errc::self_loop: return "SelfLoop";
        case Errc::empty_forest: return "EmptyForest";
        case Errc::invalid_k: return "InvalidK";
        case Errc::too_large: return "TooLarge";
        case Errc::domain_violation: return "DomainViolation";
        case Errc::not_a_cover: return "NotACover";
        case Errc::mismatched_inputs: return "MismatchedInputs";
        case Errc::invalid_params: return "InvalidParams";
        case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace bkpvc
