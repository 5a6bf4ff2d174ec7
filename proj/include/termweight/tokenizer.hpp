#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace termweight {

struct TokenizerConfig {
  bool lowercase = true;
  bool strip_punctuation = true;

  bool operator==(const TokenizerConfig&) const = default;
};

/// Interface for swapping in another tokenizer. Implementations must be
/// deterministic and return only nonempty tokens.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::vector<std::string> tokenize(std::string_view text) const = 0;
  virtual std::string name() const = 0;
};

/// Lowercases, splits on Unicode whitespace and trims punctuation off both
/// ends of every piece. Pieces made only of punctuation (emoticons such as
/// ":)") are kept whole.
class DefaultTokenizer final : public Tokenizer {
 public:
  explicit DefaultTokenizer(TokenizerConfig config = {}) : config_(config) {}

  std::vector<std::string> tokenize(std::string_view text) const override;
  std::string name() const override { return "default"; }
  const TokenizerConfig& config() const noexcept { return config_; }

 private:
  TokenizerConfig config_;
};

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config = {});

/// True if `text` is well-formed UTF-8 (no overlongs, no surrogates).
bool is_valid_utf8(std::string_view text);

}  // namespace termweight
