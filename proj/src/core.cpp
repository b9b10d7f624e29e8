#include "regencheck/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "regencheck/error.hpp"

namespace regencheck {

bool Caption::empty_after_trim() const {
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

void Embedding::validate() const {
    if (values.empty()) throw DimensionMismatch("embedding has dimension 0 (encoder " + encoder_id + ")");
    for (double v : values) {
        if (!std::isfinite(v))
            throw InvalidImage("embedding from " + encoder_id + " contains NaN/Inf");
    }
}

SimilarityBreakdown SimilarityBreakdown::from_scores(std::vector<std::pair<std::string, double>> scores) {
    if (scores.empty()) throw EmptyEnsemble();
    SimilarityBreakdown b;
    b.per_encoder = std::move(scores);
    double sum = 0.0;
    for (const auto& [id, s] : b.per_encoder) sum += s;
    b.ensemble = sum / static_cast<double>(b.per_encoder.size());
    return b;
}

double cosine_similarity(const Embedding& a, const Embedding& b) {
    if (a.values.size() != b.values.size())
        throw DimensionMismatch("embedding dims differ: " + std::to_string(a.values.size()) + " vs " +
                                std::to_string(b.values.size()));
    if (a.encoder_id != b.encoder_id)
        throw DimensionMismatch("embeddings come from different encoders: " + a.encoder_id + " vs " + b.encoder_id);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        dot += a.values[i] * b.values[i];
        na += a.values[i] * a.values[i];
        nb += b.values[i] * b.values[i];
    }
    na = std::sqrt(na);
    nb = std::sqrt(nb);
    if (na < 1e-12 || nb < 1e-12)
        throw ZeroNormEmbedding("zero-norm embedding from encoder " + a.encoder_id);
    // Numerical noise can land a hair outside [-1, 1]; clamp before use.
    return std::clamp(dot / (na * nb), -1.0, 1.0);
}

double ensemble_similarity(const std::vector<double>& scores) {
    if (scores.empty()) throw EmptyEnsemble();
    double sum = 0.0;
    for (double s : scores) sum += s;
    return sum / static_cast<double>(scores.size());
}

Verdict classify(double score, double threshold) {
    Verdict v;
    v.score = score;
    v.threshold = threshold;
    v.label = score < threshold ? Label::ADVERSARIAL : Label::CLEAN;
    return v;
}

Verdict classify(double score, double threshold, SimilarityBreakdown breakdown) {
    Verdict v = classify(score, threshold);
    v.breakdown = std::move(breakdown);
    return v;
}

}  // namespace regencheck
