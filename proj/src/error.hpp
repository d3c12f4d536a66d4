#ifndef HCDC_ERROR_HPP
#define HCDC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hcdc {

// Every precondition / input failure in the library throws hcdc::error with a
// machine-checkable code plus a human message naming the offending object.
enum class errc {
    duplicate_edge,
    self_loop,
    index_out_of_range,
    malformed_graph6,
    not_two_regular,
    no_perfect_matching,
    not_alternating,
    exchange_broke_regularity,
    inconsistent_inputs,
    not_bridgeless_cubic,
    internal_invariant_violation,
    too_large,
    retries_exhausted,
    io_error,
    bad_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::self_loop: return "SelfLoop";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::malformed_graph6: return "MalformedGraph6";
        case errc::not_two_regular: return "NotTwoRegular";
        case errc::no_perfect_matching: return "NoPerfectMatching";
        case errc::not_alternating: return "NotAlternating";
        case errc::exchange_broke_regularity: return "ExchangeBrokeRegularity";
        case errc::inconsistent_inputs: return "InconsistentInputs";
        case errc::not_bridgeless_cubic: return "NotBridgelessCubic";
        case errc::internal_invariant_violation: return "InternalInvariantViolation";
        case errc::too_large: return "TooLarge";
        case errc::retries_exhausted: return "RetriesExhausted";
        case errc::io_error: return "IoError";
        case errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace hcdc

#endif
