#ifndef PCRP_ERRORS_HPP
#define PCRP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcrp {

enum class errc {
    cycle_detected,
    contract_endpoint,
    not_reachable,
    path_budget_exceeded,
    parse_error,
    validation_error,
    infeasible,
    not_coverable,
    malformed_path,
    improper_coloring,
    invalid_cover,
    not_a_clique,
    not_enough_pairs,
    size_limit_exceeded,
    disconnected,
    disconnected_output,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pcrp

#endif
