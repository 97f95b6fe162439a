#include "elobench/elo.hpp"

#include <cmath>
#include <string>

#include "elobench/errors.hpp"

namespace elobench::elo {

void validate(const EloConfig& config) {
    if (!std::isfinite(config.initial_rating)) {
        throw InvalidArgument("initial_rating must be finite");
    }
    if (!(config.k_factor > 0.0) || !std::isfinite(config.k_factor)) {
        throw InvalidArgument("k_factor must be positive and finite");
    }
}

double expected_score(double rating_a, double rating_b) {
    if (!std::isfinite(rating_a) || !std::isfinite(rating_b)) {
        throw InvalidArgument("expected_score: ratings must be finite");
    }
    return 1.0 / (1.0 + std::pow(10.0, (rating_b - rating_a) / 400.0));
}

std::pair<double, double> score_of(MatchOutcome outcome) {
    switch (outcome) {
        case MatchOutcome::WinA: return {1.0, 0.0};
        case MatchOutcome::WinB: return {0.0, 1.0};
        case MatchOutcome::TieGood:
        case MatchOutcome::TieBad: return {0.5, 0.5};
    }
    throw InvalidArgument("score_of: unknown outcome");
}

std::pair<double, double> apply_update(double rating_a, double rating_b, MatchOutcome outcome,
                                       const EloConfig& config) {
    validate(config);
    const double expected_a = expected_score(rating_a, rating_b);
    const auto [score_a, score_b] = score_of(outcome);
    // The two deltas are exact negatives of each other, so applying a single
    // delta with opposite signs conserves the pair total to the last bit of
    // the additions.
    const double delta = config.k_factor * (score_a - expected_a);
    return {rating_a + delta, rating_b - delta};
}

int winner_of(MatchOutcome outcome) {
    switch (outcome) {
        case MatchOutcome::WinA: return 1;
        case MatchOutcome::WinB: return 2;
        case MatchOutcome::TieGood: return 0;
        case MatchOutcome::TieBad: return -1;
    }
    throw InvalidArgument("winner_of: unknown outcome");
}

MatchOutcome outcome_from_winner(int winner) {
    switch (winner) {
        case 1: return MatchOutcome::WinA;
        case 2: return MatchOutcome::WinB;
        case 0: return MatchOutcome::TieGood;
        case -1: return MatchOutcome::TieBad;
    }
    throw InvalidArgument("outcome_from_winner: winner must be 1, 2, 0 or -1, got " +
                          std::to_string(winner));
}

std::string_view to_string(MatchOutcome outcome) {
    switch (outcome) {
        case MatchOutcome::WinA: return "win_a";
        case MatchOutcome::WinB: return "win_b";
        case MatchOutcome::TieGood: return "tie_good";
        case MatchOutcome::TieBad: return "tie_bad";
    }
    return "unknown";
}

MatchOutcome outcome_from_string(std::string_view name) {
    if (name == "win_a") return MatchOutcome::WinA;
    if (name == "win_b") return MatchOutcome::WinB;
    if (name == "tie_good") return MatchOutcome::TieGood;
    if (name == "tie_bad") return MatchOutcome::TieBad;
    throw InvalidArgument("outcome_from_string: unknown outcome '" + std::string(name) + "'");
}

}  // namespace elobench::elo
