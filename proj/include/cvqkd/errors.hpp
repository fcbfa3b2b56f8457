#pragma once

#include <stdexcept>
#include <string>

namespace cvqkd {

// Stable error codes; the CLI maps them 1:1 to process exit status.
enum class errc : int {
    generic = 1,
    domain = 2,
    empty_batch = 3,
    config = 4,
    identification = 5,
    degenerate_attack = 6,
    infeasible = 7,
    degenerate_data = 8,
    unphysical_state = 9,
    no_positive_rate = 10,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct domain_error : error {
    explicit domain_error(const std::string& what) : error(errc::domain, what) {}
};

struct empty_batch_error : error {
    explicit empty_batch_error(const std::string& what) : error(errc::empty_batch, what) {}
};

struct config_error : error {
    explicit config_error(const std::string& what) : error(errc::config, what) {}
};

struct identification_error : error {
    explicit identification_error(const std::string& what) : error(errc::identification, what) {}
};

struct degenerate_attack_error : error {
    explicit degenerate_attack_error(const std::string& what) : error(errc::degenerate_attack, what) {}
};

struct infeasible_error : error {
    explicit infeasible_error(const std::string& what) : error(errc::infeasible, what) {}
};

struct degenerate_data_error : error {
    explicit degenerate_data_error(const std::string& what) : error(errc::degenerate_data, what) {}
};

struct unphysical_state_error : error {
    explicit unphysical_state_error(const std::string& what) : error(errc::unphysical_state, what) {}
};

struct no_positive_rate_error : error {
    explicit no_positive_rate_error(const std::string& what) : error(errc::no_positive_rate, what) {}
};

} // namespace cvqkd
