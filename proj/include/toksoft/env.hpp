#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "toksoft/policy.hpp"
#include "toksoft/types.hpp"
#include "toksoft/vocab.hpp"

namespace toksoft {

struct StepResult {
  TokenSeq next_state;
  double reward = 0.0;
  // Episode over: terminal state entered or the step limit was hit.
  bool done = false;
  // The time-limit case specifically (subset of done). A transition stored
  // for learning should bootstrap through a truncation but not a terminal.
  bool truncated = false;
};

class TokenEnv {
 public:
  virtual ~TokenEnv() = default;

  virtual const Vocabulary& vocab() const = 0;
  virtual int max_action_len() const = 0;
  virtual int max_episode_steps() const = 0;
  virtual void set_max_episode_steps(int t) = 0;
  // Upper bound on |state| over all reachable states.
  virtual int max_state_len() const = 0;

  virtual TokenSeq reset() = 0;
  virtual StepResult step(const TokenSeq& action) = 0;

  // All legal actions in lexicographic id order; throws SpaceTooLarge when
  // the enumeration would exceed 1e6 entries.
  virtual std::vector<TokenSeq> enumerate_actions() const = 0;

  // The frozen prior this environment pairs with (uniform for the tabular
  // env, grammar-aware for the expression env).
  virtual std::shared_ptr<const TokenDistribution> make_reference() const = 0;

  // Episode-position snapshot for checkpoints (one line of text).
  virtual std::string runtime_state() const = 0;
  virtual void restore_runtime_state(const std::string& line) = 0;
};

// ---------------------------------------------------------------------------
// Fully enumerable random MDP with fixed-length actions over a tiny alphabet.

struct TabularEnvSpec {
  int n_states = 2;
  int vocab_size = 2;
  int action_len = 2;
  std::uint64_t spec_seed = 0;
  std::vector<std::vector<double>> reward;      // [state][action index]
  std::vector<std::vector<int>> transition;     // [state][action index]
  std::set<int> terminal_states;

  int action_count() const;  // vocab_size^action_len
  void validate() const;     // throws ConfigError

  // Uniform rewards in [-1, 1], uniform transitions, state 0 never terminal.
  static TabularEnvSpec random(Rng& rng, int max_states, int max_vocab,
                               int max_action_len, int min_action_len = 1);

  std::string to_text() const;
  static TabularEnvSpec from_text(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static TabularEnvSpec load(const std::filesystem::path& path);
};

class TabularEnv : public TokenEnv {
 public:
  TabularEnv(TabularEnvSpec spec, int max_episode_steps = 50);

  const Vocabulary& vocab() const override { return vocab_; }
  int max_action_len() const override { return spec_.action_len; }
  int max_episode_steps() const override { return max_steps_; }
  void set_max_episode_steps(int t) override { max_steps_ = t; }
  int max_state_len() const override { return state_width_; }

  TokenSeq reset() override;
  StepResult step(const TokenSeq& action) override;
  std::vector<TokenSeq> enumerate_actions() const override;
  std::shared_ptr<const TokenDistribution> make_reference() const override;
  std::string runtime_state() const override;
  void restore_runtime_state(const std::string& line) override;

  const TabularEnvSpec& spec() const { return spec_; }
  bool is_terminal(int state_id) const;
  int state_width() const { return state_width_; }

  // Fixed-width base-d encoding of a state id (and its inverse).
  TokenSeq encode_state(int state_id) const;
  int decode_state(const TokenSeq& state) const;

  // Position of an action in enumerate_actions() order.
  int action_index(const TokenSeq& action) const;

 private:
  TabularEnvSpec spec_;
  Vocabulary vocab_;
  int state_width_;
  int max_steps_;
  int current_ = 0;
  int steps_ = 0;
};

// ---------------------------------------------------------------------------
// Expression synthesis: emit a single-digit infix expression whose value
// should be close to a target; failed parses produce a reflection state
// carrying the bad action and an error-code token.

struct ExprEnvSpec {
  long long target = 12;
  double scale = 12.0;
  int max_action_len = 6;
  int max_episode_steps = 5;
};

class ExprEnv : public TokenEnv {
 public:
  // Token ids, fixed by construction order of the vocabulary.
  static constexpr TokenId kDigit0 = 0;  // '0'..'9' are ids 0..9
  static constexpr TokenId kPlus = 10;
  static constexpr TokenId kMinus = 11;
  static constexpr TokenId kTimes = 12;
  static constexpr TokenId kEos = 13;
  static constexpr TokenId kGoal = 14;
  static constexpr TokenId kSep = 15;
  static constexpr TokenId kErrEmpty = 16;
  static constexpr TokenId kErrLeadingOp = 17;
  static constexpr TokenId kErrTrailingOp = 18;
  static constexpr TokenId kErrAdjacentOps = 19;
  static constexpr TokenId kErrAdjacentDigits = 20;
  static constexpr TokenId kErrBadToken = 21;
  // Digits, operators and eos; the alphabet actions are enumerated over.
  static constexpr int kExprAlphabet = 14;

  explicit ExprEnv(ExprEnvSpec spec = {});

  const Vocabulary& vocab() const override { return vocab_; }
  int max_action_len() const override { return spec_.max_action_len; }
  int max_episode_steps() const override { return spec_.max_episode_steps; }
  void set_max_episode_steps(int t) override { spec_.max_episode_steps = t; }
  int max_state_len() const override;

  TokenSeq reset() override;
  StepResult step(const TokenSeq& action) override;
  std::vector<TokenSeq> enumerate_actions() const override;
  std::shared_ptr<const TokenDistribution> make_reference() const override;
  std::string runtime_state() const override;
  void restore_runtime_state(const std::string& line) override;

  const ExprEnvSpec& spec() const { return spec_; }
  const TokenSeq& prompt() const { return prompt_; }

  // Left-to-right, equal-precedence evaluation of the action body (tokens
  // before the first eos). Returns the value or the error-code token id.
  struct ParseOutcome {
    bool ok = false;
    long long value = 0;
    TokenId error = kErrEmpty;
  };
  ParseOutcome parse(const TokenSeq& action) const;

  static const std::vector<std::string>& symbols();

 private:
  ExprEnvSpec spec_;
  Vocabulary vocab_;
  TokenSeq prompt_;
  TokenSeq state_;
  int steps_ = 0;
};

// Grammar-aware prior over the expression vocabulary: 0.9 spread uniformly
// over tokens that keep the expression well-formed after the current prefix,
// 0.1 over everything else. Strictly positive everywhere.
class ExprGrammarReference : public TokenDistribution {
 public:
  ExprGrammarReference() = default;
  int vocab_size() const override;
  std::vector<double> probs(const Context& ctx) const override;
};

}  // namespace toksoft
