#include "pcrp/errors.hpp"

namespace pcrp {

const char* errc_name(errc c) {
    switch (c) {
        case errc::cycle_detected: return "CycleDetected";
        case errc::contract_endpoint: return "ContractEndpoint";
        case errc::not_reachable: return "NotReachable";
        case errc::path_budget_exceeded: return "PathBudgetExceeded";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
        case errc::infeasible: return "Infeasible";
        case errc::not_coverable: return "NotCoverable";
        case errc::malformed_path: return "MalformedPath";
        case errc::improper_coloring: return "ImproperColoring";
        case errc::invalid_cover: return "InvalidCover";
        case errc::not_a_clique: return "NotAClique";
        case errc::not_enough_pairs: return "NotEnoughPairs";
        case errc::size_limit_exceeded: return "SizeLimitExceeded";
        case errc::disconnected: return "Disconnected";
        case errc::disconnected_output: return "DisconnectedOutput";
    }
    return "Error";
}

}  // namespace pcrp
