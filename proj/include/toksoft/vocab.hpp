#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace toksoft {

using TokenId = std::int32_t;

// An ordered sequence of token ids. States, actions and action prefixes are
// all TokenSeqs; value semantics throughout.
struct TokenSeq {
  std::vector<TokenId> ids;

  TokenSeq() = default;
  TokenSeq(std::initializer_list<TokenId> init) : ids(init) {}
  explicit TokenSeq(std::vector<TokenId> v) : ids(std::move(v)) {}

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
  TokenId operator[](std::size_t i) const { return ids[i]; }
  void push_back(TokenId id) { ids.push_back(id); }

  // First n tokens as a copy.
  TokenSeq prefix(std::size_t n) const;
  TokenSeq append(TokenId id) const;
  TokenSeq concat(const TokenSeq& other) const;
  bool contains_subsequence(const TokenSeq& needle) const;

  auto operator<=>(const TokenSeq&) const = default;
};

struct TokenSeqHash {
  std::size_t operator()(const TokenSeq& s) const;
};

// Fixed token inventory: dense 0-based ids, unique printable symbols, and an
// optional end-of-action marker.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> symbols,
                      std::optional<TokenId> eos_id = std::nullopt);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(TokenId id) const;
  TokenId id(const std::string& symbol) const;  // throws UnknownSymbol
  bool has(const std::string& symbol) const;
  std::optional<TokenId> eos_id() const { return eos_; }

  // All ids strictly inside [0, size()).
  bool valid(const TokenSeq& seq) const;

  // Stable content hash used by checkpoint headers.
  std::uint64_t fingerprint() const;

  TokenSeq encode(std::span<const std::string> symbols) const;
  std::vector<std::string> decode(const TokenSeq& seq) const;
  std::string render(const TokenSeq& seq, const std::string& sep = " ") const;

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, TokenId> index_;
  std::optional<TokenId> eos_;
};

}  // namespace toksoft
