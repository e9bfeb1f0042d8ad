#pragma once

#include <stdexcept>
#include <string>

namespace nok {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- input / parsing failures (CLI exit code 2) ----

struct parse_error : error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
    explicit parse_error(const std::string& msg) : error(msg) {}
};

struct syntax_error : parse_error {
    using parse_error::parse_error;
};

struct not_homogeneous : parse_error {
    using parse_error::parse_error;
};

struct too_few_variables : parse_error {
    using parse_error::parse_error;
};

// ---- violated preconditions (CLI exit code 3) ----

struct precondition_error : error {
    using error::error;
};

struct zero_denominator : precondition_error {
    using precondition_error::precondition_error;
};

struct non_unit_constant_term : precondition_error {
    using precondition_error::precondition_error;
};

struct duplicate_abscissa : precondition_error {
    using precondition_error::precondition_error;
};

struct zero_polynomial : precondition_error {
    using precondition_error::precondition_error;
};

struct dimension_too_large : precondition_error {
    using precondition_error::precondition_error;
};

struct not_monomial : precondition_error {
    using precondition_error::precondition_error;
};

struct degree_too_small : precondition_error {
    using precondition_error::precondition_error;
};

struct index_out_of_range : precondition_error {
    using precondition_error::precondition_error;
};

// ---- resource caps (CLI exit code 4) ----

struct budget_exceeded : error {
    using error::error;
};

// ---- failed internal consistency checks (CLI exit code 5) ----

struct consistency_error : error {
    using error::error;
};

struct inconsistent_extra_point : consistency_error {
    using consistency_error::consistency_error;
};

struct residual_spurious_pole : consistency_error {
    using consistency_error::consistency_error;
};

struct non_integer_degree : consistency_error {
    using consistency_error::consistency_error;
};

struct internal_error : consistency_error {
    using consistency_error::consistency_error;
};

} // namespace nok
