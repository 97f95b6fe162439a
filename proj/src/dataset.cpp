#include "elobench/dataset.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "elobench/errors.hpp"
#include "elobench/hash.hpp"
#include "elobench/rng.hpp"

namespace elobench::dataset {

using nlohmann::json;

std::string_view to_string(Source source) {
    switch (source) {
        case Source::GoogleTrends: return "google_trends";
        case Source::Quora: return "quora";
        case Source::ShareGpt: return "sharegpt";
        case Source::LmsysChat1M: return "lmsys_chat_1m";
        case Source::AlpacaEval: return "alpaca_eval";
        case Source::Other: return "other";
    }
    return "other";
}

Source source_from_string(std::string_view tag, bool* known) {
    if (known) *known = true;
    if (tag == "google_trends") return Source::GoogleTrends;
    if (tag == "quora") return Source::Quora;
    if (tag == "sharegpt") return Source::ShareGpt;
    if (tag == "lmsys_chat_1m") return Source::LmsysChat1M;
    if (tag == "alpaca_eval") return Source::AlpacaEval;
    if (tag == "other") return Source::Other;
    if (known) *known = false;
    return Source::Other;
}

void QuestionStore::add(Question question) {
    if (question.text.empty()) {
        throw DataError("question '" + question.id + "' has empty text");
    }
    if (question.id.empty()) {
        throw DataError("question with empty id");
    }
    if (index_.count(question.id)) {
        throw DataError("duplicate question id '" + question.id + "'");
    }
    index_.emplace(question.id, questions_.size());
    questions_.push_back(std::move(question));
}

const Question* QuestionStore::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &questions_[it->second];
}

std::map<Source, std::size_t> QuestionStore::stats() const {
    std::map<Source, std::size_t> counts;
    for (auto source : {Source::GoogleTrends, Source::Quora, Source::ShareGpt,
                        Source::LmsysChat1M, Source::AlpacaEval, Source::Other}) {
        counts[source] = 0;
    }
    for (const auto& q : questions_) ++counts[q.source];
    return counts;
}

QuestionStore QuestionStore::load(const std::filesystem::path& path,
                                  std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open question file: " + path.string());

    QuestionStore store;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw DataError("question file parse error: " + std::string(e.what()), line_no);
        }
        if (!record.is_object() || !record.contains("id") || !record.contains("text")) {
            throw DataError("question record needs 'id' and 'text' fields", line_no);
        }
        Question q;
        q.id = record.at("id").get<std::string>();
        q.text = record.at("text").get<std::string>();
        if (record.contains("source")) {
            bool known = true;
            const auto tag = record.at("source").get<std::string>();
            q.source = source_from_string(tag, &known);
            if (!known && warnings) {
                warnings->push_back("line " + std::to_string(line_no) + ": unknown source '" +
                                    tag + "' mapped to 'other'");
            }
        }
        try {
            store.add(std::move(q));
        } catch (const DataError& e) {
            throw DataError(e.what(), line_no);
        }
    }
    return store;
}

void QuestionStore::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write question file: " + path.string());
    for (const auto& q : questions_) {
        json record = {{"id", q.id}, {"text", q.text}, {"source", std::string(to_string(q.source))}};
        out << record.dump() << '\n';
    }
}

std::vector<std::string> sample_for_pair(const QuestionStore& store, std::string_view id_a,
                                         std::string_view id_b, std::size_t count,
                                         std::uint64_t master_seed) {
    if (store.empty()) throw InvalidArgument("sample_for_pair: empty question store");

    const auto [lo, hi] = std::minmax(id_a, id_b);
    const std::uint64_t seed =
        hash::mix(hash::mix(master_seed, hash::fnv1a("question-stream")),
                  hash::mix(hash::fnv1a(lo), hash::fnv1a(hi)));
    rng::Engine engine(seed);

    // One stream per pair: a Fisher-Yates pass until the store is exhausted,
    // then uniform draws from the same engine. Any two counts share a prefix.
    std::vector<std::string> ids;
    ids.reserve(count);
    const std::size_t distinct = std::min(count, store.size());
    for (std::size_t index : rng::sample_without_replacement(store.size(), distinct, engine)) {
        ids.push_back(store.at(index).id);
    }
    for (std::size_t i = distinct; i < count; ++i) {
        ids.push_back(store.at(rng::below(engine, store.size())).id);
    }
    return ids;
}

}  // namespace elobench::dataset
