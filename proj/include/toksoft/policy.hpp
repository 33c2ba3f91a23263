#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "toksoft/rng.hpp"
#include "toksoft/vocab.hpp"

namespace toksoft {

// Conditioning pair for every per-token quantity: the environment state plus
// the action tokens already emitted within the current step.
struct Context {
  TokenSeq state;
  TokenSeq prefix;

  auto operator<=>(const Context&) const = default;
};

struct ContextHash {
  std::size_t operator()(const Context& c) const;
};

// Read interface of a conditional next-token distribution.
class TokenDistribution {
 public:
  virtual ~TokenDistribution() = default;
  virtual int vocab_size() const = 0;
  // Nonnegative vector over the vocabulary summing to 1.
  virtual std::vector<double> probs(const Context& ctx) const = 0;
};

// Read interface of a token-level value function.
class TokenValue {
 public:
  virtual ~TokenValue() = default;
  virtual int vocab_size() const = 0;
  virtual std::vector<double> values(const Context& ctx) const = 0;
  double value(const Context& ctx, TokenId token) const;
};

class UniformReference : public TokenDistribution {
 public:
  explicit UniformReference(int vocab_size) : n_(vocab_size) {}
  int vocab_size() const override { return n_; }
  std::vector<double> probs(const Context&) const override;

 private:
  int n_;
};

// Deterministic pseudo-random distribution: each context hashes to its own
// Dirichlet(1) row. Used by property tests that need arbitrary but
// reproducible policies without materializing the context space.
class HashedRandomDistribution : public TokenDistribution {
 public:
  HashedRandomDistribution(int vocab_size, std::uint64_t seed)
      : n_(vocab_size), seed_(seed) {}
  int vocab_size() const override { return n_; }
  std::vector<double> probs(const Context& ctx) const override;

 private:
  int n_;
  std::uint64_t seed_;
};

// Tabular policy. Rows never explicitly set read through to the frozen
// reference distribution, so a fresh table coincides with the reference
// without pre-enumerating the context space.
class PolicyTable : public TokenDistribution {
 public:
  explicit PolicyTable(std::shared_ptr<const TokenDistribution> reference);

  int vocab_size() const override;
  std::vector<double> probs(const Context& ctx) const override;

  // Row must be nonnegative and sum to 1 (within 1e-9); throws otherwise.
  void set_row(const Context& ctx, std::vector<double> row);
  bool has_row(const Context& ctx) const;
  const std::unordered_map<Context, std::vector<double>, ContextHash>& rows() const {
    return rows_;
  }
  const TokenDistribution& reference() const { return *ref_; }
  std::shared_ptr<const TokenDistribution> reference_ptr() const { return ref_; }

 private:
  std::shared_ptr<const TokenDistribution> ref_;
  std::unordered_map<Context, std::vector<double>, ContextHash> rows_;
};

// Tabular token-level Q function; unseen entries read as 0.
class QTable : public TokenValue {
 public:
  explicit QTable(int vocab_size) : n_(vocab_size) {}

  int vocab_size() const override { return n_; }
  std::vector<double> values(const Context& ctx) const override;

  void set(const Context& ctx, TokenId token, double value);
  void set_row(const Context& ctx, std::vector<double> row);
  bool has_row(const Context& ctx) const;
  const std::unordered_map<Context, std::vector<double>, ContextHash>& rows() const {
    return rows_;
  }

 private:
  int n_;
  std::unordered_map<Context, std::vector<double>, ContextHash> rows_;
};

// target <- lambda * target + (1 - lambda) * online, over the union of rows.
void polyak_update(QTable& target, const QTable& online, double lambda);
void polyak_update(std::span<double> target, std::span<const double> online,
                   double lambda);

// Autoregressive draw: tokens sampled from pi until eos (if any) or max_len;
// the eos token itself is part of the returned action. Never empty.
TokenSeq sample_action(const TokenDistribution& pi, const TokenSeq& state,
                       int max_len, std::optional<TokenId> eos, Rng& rng);

// Product of per-token conditionals along the given action.
double action_prob(const TokenDistribution& pi, const TokenSeq& state,
                   const TokenSeq& action);

}  // namespace toksoft
