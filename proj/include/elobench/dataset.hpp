#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace elobench::dataset {

enum class Source { GoogleTrends, Quora, ShareGpt, LmsysChat1M, AlpacaEval, Other };

std::string_view to_string(Source source);
Source source_from_string(std::string_view tag, bool* known = nullptr);

struct Question {
    std::string id;
    std::string text;
    Source source = Source::Other;
};

/// Immutable-after-load collection of contest questions with per-source
/// provenance. Stored on disk as newline-delimited JSON records
/// {"id": ..., "text": ..., "source": ...}.
class QuestionStore {
public:
    /// Unknown source tags map to Other and add a warning; blank text and
    /// duplicate ids are rejected with the offending line number.
    static QuestionStore load(const std::filesystem::path& path,
                              std::vector<std::string>* warnings = nullptr);

    void save(const std::filesystem::path& path) const;

    void add(Question question);

    std::size_t size() const { return questions_.size(); }
    bool empty() const { return questions_.empty(); }
    const Question& at(std::size_t index) const { return questions_.at(index); }
    const Question* find(std::string_view id) const;
    const std::vector<Question>& questions() const { return questions_; }

    /// Exact per-source counts.
    std::map<Source, std::size_t> stats() const;

private:
    std::vector<Question> questions_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Deterministic question draw for one pair: a pure function of the sorted
/// pair ids and the master seed, independent of competition order. Draws are
/// without replacement while the store allows, with replacement otherwise.
/// Asking for a larger count later extends the same stream (common prefix).
std::vector<std::string> sample_for_pair(const QuestionStore& store, std::string_view id_a,
                                         std::string_view id_b, std::size_t count,
                                         std::uint64_t master_seed);

}  // namespace elobench::dataset
