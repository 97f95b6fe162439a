#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "elobench/dataset.hpp"
#include "elobench/elo.hpp"

namespace elobench::tournament {

struct PlayerId {
    std::string id;
    std::string display_name;
};

/// One scheduled contest. Player fields index into TournamentPlan::players;
/// the question is fixed before any match runs.
struct MatchSlot {
    std::uint32_t player_a = 0;
    std::uint32_t player_b = 0;
    std::string question_id;
};

struct TournamentPlan {
    std::vector<PlayerId> players;
    int meetings_per_pair = 1;
    std::vector<MatchSlot> slots;
};

/// Permutation governing the order in which slot outcomes are applied to
/// ratings. Outcomes themselves never depend on it.
struct CompetitionOrder {
    std::vector<std::size_t> permutation;
    std::uint64_t seed = 0;
};

struct RunConfig {
    int orderings_count = 100;
    std::uint64_t master_seed = 0;
    elo::EloConfig elo;
};

using RatingTable = std::map<std::string, double>;

/// Everything known about one resolved slot. Written to the match log.
struct MatchRecord {
    std::size_t slot_index = 0;
    std::string player_a;
    std::string player_b;
    std::string question_id;
    std::string response_a;
    std::string response_b;
    int winner = 0;  // 1 / 2 / 0 / -1, in canonical (A, B) orientation
    std::string explanation;
    elo::MatchOutcome outcome = elo::MatchOutcome::TieGood;
    bool position_flipped = false;
    std::int64_t timestamp_ms = 0;
};

/// Resolves a slot to an outcome. Implementations must be a function of the
/// pair and the question only, never of current ratings, so that outcomes can
/// be computed once and replayed over every competition order.
class OutcomeProvider {
public:
    virtual ~OutcomeProvider() = default;
    virtual MatchRecord resolve(std::size_t slot_index, const PlayerId& a, const PlayerId& b,
                                const std::string& question_id) = 0;
};

/// Full round-robin: every unordered pair meets exactly meetings_per_pair
/// times, N(N-1)H/2 slots in total.
TournamentPlan build_round_robin(std::vector<PlayerId> players, int meetings_per_pair);

/// Fast registration: only matches involving at least one new player, H per
/// pair, (2*N1 + N2 - 1)*N2*H/2 slots. Existing ratings are kept; new players
/// start at initial_rating.
std::pair<TournamentPlan, RatingTable> build_fast_registration(const RatingTable& existing,
                                                               std::vector<PlayerId> new_players,
                                                               int meetings_per_pair,
                                                               double initial_rating = 1000.0);

/// Fixes every slot's question up front. Per pair the draw is a pure function
/// of (sorted pair ids, master_seed); see dataset::sample_for_pair.
TournamentPlan assign_questions(TournamentPlan plan, const dataset::QuestionStore& store,
                                std::uint64_t master_seed);

std::vector<CompetitionOrder> make_orderings(std::size_t slot_count, int orderings_count,
                                             std::uint64_t master_seed);

/// Applies outcomes slot-by-slot in permutation order, starting from
/// `starting` when given, otherwise from initial_rating for every player.
RatingTable replay_ordering(const TournamentPlan& plan,
                            const std::vector<elo::MatchOutcome>& outcomes,
                            const CompetitionOrder& order, const RunConfig& config,
                            const RatingTable* starting = nullptr);

/// Per-player median over the tables; for an even count, the mean of the two
/// middle values. All tables must share one player set.
RatingTable aggregate_median(const std::vector<RatingTable>& tables);

struct TournamentResult {
    RatingTable median;
    std::vector<RatingTable> per_ordering;
    std::vector<MatchRecord> log;  // slot order
};

using RecordSink = std::function<void(const MatchRecord&)>;

/// Resolves every slot exactly once (reusing `resume` records when given),
/// streams new records to `sink` in slot order, then replays
/// orderings_count randomized orders and aggregates the median table.
/// Slot resolution may use up to `workers` concurrent threads.
TournamentResult run_tournament(const TournamentPlan& plan, OutcomeProvider& provider,
                                const RunConfig& config, const RatingTable* starting = nullptr,
                                const std::vector<MatchRecord>* resume = nullptr,
                                const RecordSink& sink = {}, int workers = 1);

}  // namespace elobench::tournament
