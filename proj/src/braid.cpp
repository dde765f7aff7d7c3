// Copyright 2026 The jonesnmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jonesnmr/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "jonesnmr/errors.hpp"

namespace jonesnmr {

BraidGenerator::BraidGenerator(int index, int sign) : index(index), sign(sign) {
  if (index < 1) throw std::invalid_argument("braid generator index must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("braid generator sign must be +1 or -1");
}

BraidWord::BraidWord(int strands, std::vector<BraidGenerator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw std::invalid_argument("a braid needs at least 2 strands");
  for (const auto& g : letters_) {
    if (g.index > strands_ - 1) {
      throw std::invalid_argument("generator s" + std::to_string(g.index) +
                                  " does not exist in B_" + std::to_string(strands_));
    }
  }
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  // Reads an optionally signed decimal integer at the cursor.
  long long integer(bool allow_sign) {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (allow_sign && end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    const std::size_t digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == digits) throw ParseError("expected an integer", start);
    long long value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end) throw ParseError("integer out of range", start);
    pos_ = end;
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

constexpr long long kMaxExpansion = 1 << 20;

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 2) throw std::invalid_argument("a braid needs at least 2 strands");
  Lexer lex(text);
  std::vector<BraidGenerator> letters;
  lex.skip_space();
  while (!lex.done()) {
    const std::size_t term_start = lex.pos();
    if (lex.peek() != 's') throw ParseError("expected 's<index>'", term_start);
    lex.advance();
    const std::size_t index_pos = lex.pos();
    const long long index = lex.integer(false);
    if (index < 1) throw ParseError("generator index must be >= 1", index_pos);
    if (index > strands - 1) {
      throw ParseError("generator index s" + std::to_string(index) + " out of range for " +
                           std::to_string(strands) + " strands",
                       index_pos);
    }
    long long exponent = 1;
    if (lex.peek() == '^') {
      lex.advance();
      const std::size_t exp_pos = lex.pos();
      exponent = lex.integer(true);
      if (exponent == 0) throw ParseError("zero exponent", exp_pos);
      if (exponent > kMaxExpansion || -exponent > kMaxExpansion) {
        throw ParseError("exponent too large", exp_pos);
      }
    }
    if (!lex.done() && !std::isspace(static_cast<unsigned char>(lex.peek()))) {
      throw ParseError("unexpected character '" + std::string(1, lex.peek()) + "'", lex.pos());
    }
    const int sign = exponent > 0 ? 1 : -1;
    for (long long k = 0; k < (exponent > 0 ? exponent : -exponent); ++k) {
      letters.emplace_back(static_cast<int>(index), sign);
    }
    lex.skip_space();
  }
  return BraidWord(strands, std::move(letters));
}

std::string render(const BraidWord& word) {
  std::string out;
  const auto& letters = word.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long long run = static_cast<long long>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(letters[i].index);
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

int exponent_sum(const BraidWord& word) {
  int sum = 0;
  for (const auto& g : word.letters()) sum += g.sign;
  return sum;
}

BraidWord invert(const BraidWord& word) {
  std::vector<BraidGenerator> letters;
  letters.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(word.strands(), std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("concat: strand counts differ");
  std::vector<BraidGenerator> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

}  // namespace jonesnmr
