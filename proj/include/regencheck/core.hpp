#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regencheck/image.hpp"

namespace regencheck {

struct Caption {
    std::string text;
    std::string source_model_id;

    bool empty_after_trim() const;
};

struct Embedding {
    std::vector<double> values;
    std::string encoder_id;

    std::size_t dim() const { return values.size(); }
    // Throws on NaN/Inf or empty vector.
    void validate() const;
};

// Per-encoder cosine scores plus their arithmetic mean.
struct SimilarityBreakdown {
    std::vector<std::pair<std::string, double>> per_encoder;
    double ensemble = 0.0;

    // Computes the ensemble mean; throws EmptyEnsemble on an empty list.
    static SimilarityBreakdown from_scores(std::vector<std::pair<std::string, double>> scores);
};

enum class Label { ADVERSARIAL, CLEAN };

inline const char* label_name(Label l) { return l == Label::ADVERSARIAL ? "ADVERSARIAL" : "CLEAN"; }

// Which models and seeds produced a verdict; filled in by the detect entry points.
struct DetectionProvenance {
    std::string generator_id;
    std::vector<std::string> encoder_ids;
    double otu_scale = 0.0;
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> otu_seeds;
};

struct Verdict {
    Label label = Label::CLEAN;
    double score = 0.0;
    double threshold = 0.0;
    SimilarityBreakdown breakdown;
    DetectionProvenance provenance;
};

// cos(a, b) = a.b / (|a||b|), clamped to [-1, 1].
// Throws DimensionMismatch on unequal lengths or encoder ids, ZeroNormEmbedding when a norm is < 1e-12.
double cosine_similarity(const Embedding& a, const Embedding& b);

// Arithmetic mean; throws EmptyEnsemble on an empty list.
double ensemble_similarity(const std::vector<double>& scores);

// ADVERSARIAL iff score < threshold (strict); equality is CLEAN.
Verdict classify(double score, double threshold);
Verdict classify(double score, double threshold, SimilarityBreakdown breakdown);

}  // namespace regencheck
