#pragma once

#include <span>
#include <vector>

#include "toksoft/policy.hpp"
#include "toksoft/types.hpp"

namespace toksoft {

// --- distribution-level kernels ---------------------------------------------

// Exact discrete KL(p || q); terms with p_i = 0 contribute nothing; throws
// SupportViolation when p_i > 0 while q_i = 0. Clamped at 0 against rounding.
double kl_divergence(std::span<const double> p, std::span<const double> q);

// dot(p, values) - beta * KL(p || ref): the bracketed soft value term.
double expected_value_minus_kl(std::span<const double> p,
                               std::span<const double> ref,
                               std::span<const double> values, double beta);

// Distribution proportional to ref_i * exp(values_i / beta), normalized.
// The exponent is max-subtracted and then clamped to [-60, 60], so tiny beta
// stays finite and a constant shift of the values cancels exactly.
std::vector<double> tilted_distribution(std::span<const double> ref,
                                        std::span<const double> values,
                                        double beta);

// --- context-level operations ------------------------------------------------

double kl_term(const TokenDistribution& pi, const TokenDistribution& pibar,
               const Context& ctx);

// Exact expectation of q over the vocabulary minus beta * kl_term; no
// sampling anywhere.
double soft_state_value(const TokenDistribution& pi,
                        const TokenDistribution& pibar, const TokenValue& q,
                        const Context& ctx, double beta);

std::vector<double> optimal_soft_policy(const TokenDistribution& pibar,
                                        const TokenValue& q, const Context& ctx,
                                        double beta);

// KL between pi and the optimal soft policy of q at ctx.
double policy_kl_objective(const TokenDistribution& pi,
                           const TokenDistribution& pibar, const TokenValue& q,
                           const Context& ctx, double beta);

enum class TargetCase { WithinAction, ActionBoundary };

struct TokenTarget {
  Context ctx;
  TokenId token = 0;
  double value = 0.0;
  TargetCase kase = TargetCase::WithinAction;
};

// Target for the j-th token (1-based) of the transition's action.
//   j <  |a|: within_gamma * soft value at (state, w_{1:j});
//   j == |a|: reward + gamma * soft value at (next_state, empty prefix),
//             bootstrap dropped when done.
// within_gamma is 1 for the consistent update; the discounted variant passes
// gamma here instead.
TokenTarget per_token_target(const Transition& tr, int j,
                             const TokenDistribution& pi,
                             const TokenDistribution& pibar,
                             const TokenValue& q_target, double beta,
                             double gamma, double within_gamma = 1.0);

TokenTarget per_token_target(const Transition& tr, int j,
                             const TokenDistribution& pi,
                             const TokenDistribution& pibar,
                             const TokenValue& q_target, const RunConfig& cfg);

}  // namespace toksoft
