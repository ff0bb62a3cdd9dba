// Error taxonomy shared by all modules. Every failure mode a caller can
// recover from (or report with a distinct exit code) gets its own type.
#pragma once

#include <stdexcept>
#include <string>

namespace rda {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Configuration / input problems (CLI exit code 2).
class config_error : public error {
public:
    using error::error;
};

class syntax_error : public config_error {
public:
    syntax_error(const std::string& what, std::size_t offset)
        : config_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class invalid_grid_error : public config_error {
public:
    using config_error::config_error;
};

class invalid_coefficient_error : public config_error {
public:
    using config_error::config_error;
};

class domain_error : public config_error {
public:
    using config_error::config_error;
};

class dimension_error : public config_error {
public:
    using config_error::config_error;
};

// Numerical failures (CLI exit code 3).
class numerical_error : public error {
public:
    using error::error;
};

class near_singular_error : public numerical_error {
public:
    near_singular_error(const std::string& what, double cond_estimate)
        : numerical_error(what), cond_(cond_estimate) {}
    double cond_estimate() const { return cond_; }

private:
    double cond_;
};

class resonance_error : public near_singular_error {
public:
    using near_singular_error::near_singular_error;
};

class degenerate_kernel_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class no_convergence_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class not_principal_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class violated_lemma_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class no_crossing_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class wrong_branch_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class inconsistency_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class wrong_regime_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class trivial_solution_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class degenerate_duality_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class degenerate_transversality_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class divergence_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

}  // namespace rda
