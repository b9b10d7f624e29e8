#pragma once

#include <stdexcept>
#include <string>

namespace regencheck {

// Base class for every toolkit error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- core ---
class ZeroNormEmbedding : public Error {
public:
    explicit ZeroNormEmbedding(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class EmptyEnsemble : public Error {
public:
    EmptyEnsemble() : Error("ensemble similarity requires at least one score") {}
};

class InvalidImage : public Error {
public:
    explicit InvalidImage(const std::string& msg) : Error(msg) {}
};

// --- zoo / backends ---
enum class PipelineStage { CAPTION, GENERATE, EMBED };

inline const char* stage_name(PipelineStage s) {
    switch (s) {
        case PipelineStage::CAPTION: return "CAPTION";
        case PipelineStage::GENERATE: return "GENERATE";
        case PipelineStage::EMBED: return "EMBED";
    }
    return "?";
}

class BackendFailure : public Error {
public:
    BackendFailure(PipelineStage stage, const std::string& model_id, const std::string& msg)
        : Error(std::string("[") + stage_name(stage) + "] " + model_id + ": " + msg),
          stage(stage),
          model_id(model_id) {}
    PipelineStage stage;
    std::string model_id;
};

class UnrenderableCaption : public Error {
public:
    explicit UnrenderableCaption(const std::string& msg) : Error(msg) {}
};

class DuplicateModelId : public Error {
public:
    explicit DuplicateModelId(const std::string& id) : Error("duplicate model id: " + id) {}
};

class UnknownModelId : public Error {
public:
    explicit UnknownModelId(const std::string& id) : Error("unknown model id: " + id) {}
};

// --- stochastic ---
class EmptyZoo : public Error {
public:
    explicit EmptyZoo(const std::string& msg) : Error(msg) {}
};

class SubsetTooLarge : public Error {
public:
    SubsetTooLarge(std::size_t n, std::size_t total)
        : Error("requested encoder subset of size " + std::to_string(n) +
                " from a zoo of " + std::to_string(total)) {}
};

// --- calibrate ---
class MissingClass : public Error {
public:
    explicit MissingClass(const std::string& msg) : Error(msg) {}
};

// --- attacks / adaptive ---
class NonDifferentiableBackend : public Error {
public:
    explicit NonDifferentiableBackend(const std::string& id)
        : Error("backend does not expose gradients: " + id) {}
};

class BudgetViolated : public Error {
public:
    explicit BudgetViolated(const std::string& msg) : Error(msg) {}
};

class DivergenceDetected : public Error {
public:
    explicit DivergenceDetected(const std::string& msg) : Error(msg) {}
};

class BackendMissingFeatureTap : public Error {
public:
    explicit BackendMissingFeatureTap(const std::string& id)
        : Error("backend does not expose internal features: " + id) {}
};

// --- harness ---
class ManifestSchemaError : public Error {
public:
    explicit ManifestSchemaError(const std::string& msg) : Error(msg) {}
};

class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& msg) : Error(msg) {}
};

class InsufficientSamples : public Error {
public:
    explicit InsufficientSamples(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace regencheck
