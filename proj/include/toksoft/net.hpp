#pragma once

#include <memory>
#include <span>
#include <vector>

#include "toksoft/policy.hpp"
#include "toksoft/rng.hpp"

namespace toksoft {

// Positional one-hot encoding of a Context: max_state_len + max_prefix_len
// slots, each one-hot over vocab_size + 1 (the extra class marks an empty
// slot). Overlong states keep their most recent tokens.
struct FeatureSpec {
  int vocab_size = 0;
  int max_state_len = 0;
  int max_prefix_len = 0;

  int dim() const { return (max_state_len + max_prefix_len) * (vocab_size + 1); }
  std::vector<double> encode(const Context& ctx) const;
};

// One hidden tanh layer, explicit reverse-mode gradients, flat parameter
// vector [W1 | b1 | W2 | b2]. No external autodiff.
class ParametricNet {
 public:
  ParametricNet(int in_dim, int hidden_dim, int out_dim);

  // Hidden layer random (scaled by 1/sqrt(in_dim)), output layer zero, so the
  // initial output is exactly zero while gradients still flow.
  void init(Rng& rng);

  int in_dim() const { return in_; }
  int hidden_dim() const { return hidden_; }
  int out_dim() const { return out_; }
  int param_count() const { return static_cast<int>(params_.size()); }
  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }
  void set_params(std::span<const double> p);

  struct Cache {
    std::vector<double> x;
    std::vector<double> h;
  };

  std::vector<double> forward(std::span<const double> x,
                              Cache* cache = nullptr) const;

  // Gradient of dot(d_out, output) w.r.t. the parameters, for the forward
  // pass recorded in cache.
  std::vector<double> backward(const Cache& cache,
                               std::span<const double> d_out) const;

  void accumulate_backward(const Cache& cache, std::span<const double> d_out,
                           std::span<double> grad) const;

 private:
  int in_, hidden_, out_;
  std::vector<double> params_;

  // Views into params_.
  std::span<const double> w1() const;
  std::span<const double> b1() const;
  std::span<const double> w2() const;
  std::span<const double> b2() const;
};

// Policy head: probs = softmax(net(ctx) + log anchor(ctx)). With a zero
// output layer this makes the initial policy coincide with the anchor; pass
// no anchor for a plain softmax head.
class ParametricPolicy : public TokenDistribution {
 public:
  ParametricPolicy(FeatureSpec feat, int hidden_dim,
                   std::shared_ptr<const TokenDistribution> anchor, Rng& rng);

  int vocab_size() const override { return feat_.vocab_size; }
  std::vector<double> probs(const Context& ctx) const override;

  struct Eval {
    std::vector<double> probs;
    ParametricNet::Cache cache;
  };
  Eval eval(const Context& ctx) const;

  // Gradient w.r.t. parameters of dot(d_logits, logits).
  void accumulate_backward(const Eval& eval, std::span<const double> d_logits,
                           std::span<double> grad) const;

  ParametricNet& net() { return net_; }
  const ParametricNet& net() const { return net_; }
  const FeatureSpec& features() const { return feat_; }
  const TokenDistribution* anchor() const { return anchor_.get(); }

 private:
  FeatureSpec feat_;
  ParametricNet net_;
  std::shared_ptr<const TokenDistribution> anchor_;
};

// Q head: values are the raw logits; zero at init.
class ParametricQ : public TokenValue {
 public:
  ParametricQ(FeatureSpec feat, int hidden_dim, Rng& rng);

  int vocab_size() const override { return feat_.vocab_size; }
  std::vector<double> values(const Context& ctx) const override;

  struct Eval {
    std::vector<double> values;
    ParametricNet::Cache cache;
  };
  Eval eval(const Context& ctx) const;
  void accumulate_backward(const Eval& eval, std::span<const double> d_values,
                           std::span<double> grad) const;

  ParametricNet& net() { return net_; }
  const ParametricNet& net() const { return net_; }
  const FeatureSpec& features() const { return feat_; }

 private:
  FeatureSpec feat_;
  ParametricNet net_;
};

}  // namespace toksoft
