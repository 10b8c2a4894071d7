#pragma once

#include <stdexcept>
#include <string>

namespace wellglm {

/// Broad failure class. The CLI maps each category to an exit code.
enum class ErrorCategory { Config, Data, Numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string code, const std::string& what)
        : std::runtime_error(what), category_(category), code_(std::move(code)) {}

    ErrorCategory category() const noexcept { return category_; }
    /// Short machine-readable tag, e.g. "schema" or "divergence".
    const std::string& code() const noexcept { return code_; }

private:
    ErrorCategory category_;
    std::string code_;
};

#define WELLGLM_DEFINE_ERROR(Name, Category, Code)                      \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& what)                          \
            : Error(ErrorCategory::Category, Code, what) {}             \
    }

WELLGLM_DEFINE_ERROR(ConfigError, Config, "config");
WELLGLM_DEFINE_ERROR(SpecError, Config, "spec");

WELLGLM_DEFINE_ERROR(SchemaError, Data, "schema");
WELLGLM_DEFINE_ERROR(DuplicateRowError, Data, "duplicate-row");
WELLGLM_DEFINE_ERROR(EmptyDatasetError, Data, "empty-dataset");
WELLGLM_DEFINE_ERROR(ShapeError, Data, "shape");
WELLGLM_DEFINE_ERROR(DomainError, Data, "domain");
WELLGLM_DEFINE_ERROR(ParseError, Data, "parse");
WELLGLM_DEFINE_ERROR(ValidationError, Data, "validation");

WELLGLM_DEFINE_ERROR(DegenerateWeightsError, Numerical, "degenerate-weights");
WELLGLM_DEFINE_ERROR(DegenerateDesignError, Numerical, "degenerate-design");
WELLGLM_DEFINE_ERROR(NotPositiveDefiniteError, Numerical, "not-positive-definite");
WELLGLM_DEFINE_ERROR(DivergenceError, Numerical, "divergence");
WELLGLM_DEFINE_ERROR(UndefinedVarianceError, Numerical, "undefined-variance");
WELLGLM_DEFINE_ERROR(DegenerateDistributionError, Numerical, "degenerate-distribution");
WELLGLM_DEFINE_ERROR(RankError, Numerical, "rank");

#undef WELLGLM_DEFINE_ERROR

}  // namespace wellglm
