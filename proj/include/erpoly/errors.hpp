#pragma once

#include <stdexcept>
#include <string>

namespace erpoly {

// Precondition violations. Structural "no decomposition exists" results are
// plain absent optionals, never exceptions.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct trivial_dependence_error : precondition_error {
    explicit trivial_dependence_error(const std::string& what)
        : precondition_error(what) {}
};

struct degenerate_parameters_error : precondition_error {
    explicit degenerate_parameters_error(const std::string& what)
        : precondition_error(what) {}
};

struct unreachable_cardinality_error : std::runtime_error {
    explicit unreachable_cardinality_error(const std::string& what)
        : std::runtime_error(what) {}
};

struct precision_exhausted_error : std::runtime_error {
    explicit precision_exhausted_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace erpoly
