#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scalemate/pairs.hpp"

namespace scalemate {

// Three-way outcome: UNKNOWN means at least one word is absent from the
// backing resource, which is not the same thing as being dissimilar.
enum class Verdict {
    Similar,
    Dissimilar,
    Unknown,
};

enum class UnknownPolicy { Keep, Drop };

std::optional<UnknownPolicy> unknown_policy_from_string(std::string_view name);

// Standard cosine in double precision. Throws ConfigError on dimension
// mismatch or a zero vector (zero vectors are already rejected at load).
double cosine(std::span<const double> u, std::span<const double> v);

struct VectorTable {
    std::unordered_map<std::string, std::vector<double>> vectors;
    std::size_t dimension = 0;
    std::size_t zero_rejected = 0;     // zero vectors dropped at load
    std::size_t duplicates_dropped = 0;

    const std::vector<double>* find(std::string_view word) const;
};

// Text format: one `word v1 v2 ... vd` per line, space-separated decimals.
// All vectors must share one dimension; a mismatch is a parse error.
VectorTable load_vector_table(const std::string& path);

struct AttributeMap {
    // Attribute sets are stored sorted and deduplicated; never empty.
    std::unordered_map<std::string, std::vector<std::string>> attributes;
    std::size_t skipped_lines = 0;

    const std::vector<std::string>* find(std::string_view word) const;
};

// TSV format: `word<TAB>attr1,attr2,...` per line.
AttributeMap load_attribute_map(const std::string& path);

struct ThesaurusEntries {
    std::vector<std::vector<std::string>> entries;          // each holds >= 2 distinct words
    std::unordered_map<std::string, std::vector<std::uint32_t>> index; // word -> sorted entry ids
    std::size_t skipped_lines = 0;                           // entries with < 2 distinct words

    const std::vector<std::uint32_t>* find(std::string_view word) const;
};

// Text format: one entry per line, words space-separated.
ThesaurusEntries load_thesaurus(const std::string& path);

enum class MeasureKind { Vector, Attribute, Thesaurus };

std::optional<MeasureKind> measure_kind_from_string(std::string_view name);
std::string_view to_string(MeasureKind kind);

// Uniform "are these two words similar?" contract over the three resource
// kinds. judge() is pure and symmetric; loaded resources are immutable.
class SimilarityMeasure {
public:
    virtual ~SimilarityMeasure() = default;
    virtual Verdict judge(std::string_view a, std::string_view b) const = 0;
    virtual std::string_view name() const = 0;
};

class VectorMeasure final : public SimilarityMeasure {
public:
    VectorMeasure(VectorTable table, double tau = 0.0)
        : table_(std::move(table)), tau_(tau) {}
    Verdict judge(std::string_view a, std::string_view b) const override;
    std::string_view name() const override { return "vector"; }
    double tau() const { return tau_; }

private:
    VectorTable table_;
    double tau_;
};

class AttributeMeasure final : public SimilarityMeasure {
public:
    explicit AttributeMeasure(AttributeMap map) : map_(std::move(map)) {}
    Verdict judge(std::string_view a, std::string_view b) const override;
    std::string_view name() const override { return "attribute"; }

private:
    AttributeMap map_;
};

class ThesaurusMeasure final : public SimilarityMeasure {
public:
    explicit ThesaurusMeasure(ThesaurusEntries entries) : entries_(std::move(entries)) {}
    Verdict judge(std::string_view a, std::string_view b) const override;
    std::string_view name() const override { return "thesaurus"; }

private:
    ThesaurusEntries entries_;
};

std::unique_ptr<SimilarityMeasure> load_measure(MeasureKind kind, const std::string& resource_path,
                                                double tau = 0.0);

// Keeps SIMILAR records; DISSIMILAR records are always dropped and UNKNOWN
// ones follow the policy. Survivors are copied unchanged, ties included.
std::vector<PairRecord> filter_by_similarity(std::span<const PairRecord> records,
                                             const SimilarityMeasure& measure,
                                             UnknownPolicy policy = UnknownPolicy::Drop);

} // namespace scalemate
