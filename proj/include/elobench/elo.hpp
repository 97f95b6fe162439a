#pragma once

#include <string_view>
#include <utility>

namespace elobench::elo {

/// System constants shared by every rating update.
struct EloConfig {
    double initial_rating = 1000.0;
    double k_factor = 4.0;
};

/// Result of one pairwise contest, seen from the canonical (A, B) orientation.
/// TieGood and TieBad score identically; the distinction is kept for analysis
/// of judge behaviour, not for rating math.
enum class MatchOutcome { WinA, WinB, TieGood, TieBad };

/// Expected score of A against B: 1 / (1 + 10^((rating_b - rating_a) / 400)).
/// The complement is B's expected score. Throws InvalidArgument on
/// non-finite input.
double expected_score(double rating_a, double rating_b);

/// Actual scores (S_A, S_B): win 1, loss 0, either tie 0.5. Always sums to 1.
std::pair<double, double> score_of(MatchOutcome outcome);

/// One rating update: R' = R + K * (S - E), applied to both players.
/// The pair's total rating is conserved. Throws InvalidArgument on
/// non-finite ratings or an invalid config.
std::pair<double, double> apply_update(double rating_a, double rating_b, MatchOutcome outcome,
                                       const EloConfig& config);

void validate(const EloConfig& config);

/// Judge winner integer for an outcome: WinA 1, WinB 2, TieGood 0, TieBad -1.
int winner_of(MatchOutcome outcome);
MatchOutcome outcome_from_winner(int winner);

std::string_view to_string(MatchOutcome outcome);
MatchOutcome outcome_from_string(std::string_view name);

}  // namespace elobench::elo
