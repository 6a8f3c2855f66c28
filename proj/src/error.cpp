#include "evf/error.hpp"

namespace evf {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::empty_universe: return "EmptyUniverse";
        case ErrorCode::too_large: return "TooLarge";
        case ErrorCode::duplicate_label: return "DuplicateLabel";
        case ErrorCode::out_of_universe: return "OutOfUniverse";
        case ErrorCode::not_a_partition: return "NotAPartition";
        case ErrorCode::duplicate_member: return "DuplicateMember";
        case ErrorCode::no_atoms: return "NoAtoms";
        case ErrorCode::not_a_member: return "NotAMember";
        case ErrorCode::not_in_family: return "NotInFamily";
        case ErrorCode::negative_mass: return "NegativeMass";
        case ErrorCode::sum_not_one: return "SumNotOne";
        case ErrorCode::duplicate_assignment: return "DuplicateAssignment";
        case ErrorCode::zero_observations: return "ZeroObservations";
        case ErrorCode::empty_sample: return "EmptySample";
        case ErrorCode::bad_normalization: return "BadNormalization";
        case ErrorCode::value_out_of_range: return "ValueOutOfRange";
        case ErrorCode::unknown_filter: return "UnknownFilter";
        case ErrorCode::bad_config: return "BadConfig";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::io_error: return "IoError";
    }
    return "Error";
}

}  // namespace evf
