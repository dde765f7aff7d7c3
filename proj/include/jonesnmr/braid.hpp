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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jonesnmr {

/// One letter of a braid word: sigma_index (sign +1) or its inverse (sign -1).
struct BraidGenerator {
  int index = 1;
  int sign = 1;

  BraidGenerator() = default;
  BraidGenerator(int index, int sign);

  BraidGenerator inverse() const { return {index, -sign}; }

  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
};

/// A word in the braid group B_n. The empty word is the identity braid.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidGenerator> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<BraidGenerator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidGenerator> letters_;
};

/// Parses the ASCII braid grammar
///
///   word := term* ;  term := "s" INT ("^" SIGNED_INT)?
///
/// Terms are whitespace separated, INT >= 1, SIGNED_INT != 0. `s1^3` expands
/// to three copies of sigma_1 and `s2^-2` to two copies of sigma_2^-1.
/// Throws ParseError on malformed input, zero exponents, or a generator index
/// that does not fit in `strands`.
BraidWord parse_braid(std::string_view text, int strands);

/// Canonical printer: maximal runs of equal letters become `s<i>^<k>`, single
/// positive letters print as `s<i>`. parse_braid(render(b), n) == b.
std::string render(const BraidWord& word);

/// Sum of the generator signs (the writhe of the closed braid diagram).
int exponent_sum(const BraidWord& word);

/// Reversed word with every sign flipped, i.e. the group inverse.
BraidWord invert(const BraidWord& word);

/// Product a*b; strand counts must agree.
BraidWord concat(const BraidWord& a, const BraidWord& b);

}  // namespace jonesnmr
