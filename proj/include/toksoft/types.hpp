#pragma once

#include <cstdint>
#include <string>

#include "toksoft/vocab.hpp"

namespace toksoft {

// One environment interaction. `done` marks entry into a truly terminal
// state; episodes cut by the step limit are stored with done=false so that
// learners keep bootstrapping through the time limit.
struct Transition {
  TokenSeq state;
  TokenSeq action;
  double reward = 0.0;
  TokenSeq next_state;
  bool done = false;
};

enum class Algo { Etpo, EtpoDisc, Etpo1Step, PpoKl, Oracle };
enum class EnvKind { Tabular, Expr };
enum class ModelKind { Tabular, Parametric };

std::string to_string(Algo a);
std::string to_string(EnvKind e);
std::string to_string(ModelKind m);
Algo parse_algo(const std::string& s);          // throws ConfigError
EnvKind parse_env_kind(const std::string& s);   // throws ConfigError
ModelKind parse_model_kind(const std::string& s);

// Every knob of a run. Flat on purpose: serializes to the key=value config
// format and maps 1:1 onto CLI flags.
struct RunConfig {
  Algo algo = Algo::Etpo;
  EnvKind env = EnvKind::Expr;
  ModelKind mode = ModelKind::Tabular;

  double beta = 1.0;     // KL coefficient
  double gamma = 0.99;   // inter-step discount
  double polyak = 0.995; // target smoothing coefficient
  double lr = 1e-3;

  int max_action_len = 6;
  int max_episode_steps = 5;
  int buffer_capacity = 10000;
  int batch_size = 32;
  std::uint64_t seed = 0;
  long long steps = 1000;  // environment-step budget
  int hidden_width = 32;

  // PPO-KL specifics; standard defaults.
  int ppo_rollout = 128;
  double ppo_clip = 0.2;
  double ppo_value_coef = 0.5;
  int ppo_epochs = 4;

  // Environment construction.
  long long expr_target = 12;
  double expr_scale = 12.0;
  int tab_n_states = 5;
  int tab_vocab_size = 3;
  int tab_action_len = 2;
  std::uint64_t tab_seed = 0;  // 0 -> derive from seed

  // Checkpointing (0 disables).
  long long checkpoint_every = 0;
  std::string checkpoint_path;

  void validate() const;  // throws ConfigError
};

}  // namespace toksoft
