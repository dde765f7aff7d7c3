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

#include "jonesnmr/jones.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "jonesnmr/errors.hpp"

namespace jonesnmr {

Complex normalized_invariant(Complex bracket, int exponent_sum, Complex A) {
  return ipow(-A * A * A, -static_cast<long long>(exponent_sum)) * bracket;
}

Complex bracket_from_trace(Complex trace, int exponent_sum, const ReprParams& params) {
  const double d = params.delta;
  return trace + ipow(params.A, exponent_sum) * (d * d - 2.0);
}

InvariantValues evaluate(const BraidWord& word, const ReprParams& params) {
  const int writhe = exponent_sum(word);
  InvariantValues v;
  v.trace = rho_word(word, params).trace();
  v.bracket = bracket_from_trace(v.trace, writhe, params);
  v.f = normalized_invariant(v.bracket, writhe, params.A);
  v.t = ipow(params.A, -4);
  v.jones = v.f;
  return v;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

TLDiagram TLDiagram::identity(int strands) {
  TLDiagram d{strands, std::vector<int>(2 * strands), 0};
  for (int j = 0; j < strands; ++j) {
    d.partner[j] = strands + j;
    d.partner[strands + j] = j;
  }
  return d;
}

TLDiagram TLDiagram::cup_cap(int strands, int i) {
  if (i < 1 || i > strands - 1) throw std::out_of_range("cup_cap: i must lie in [1, strands-1]");
  TLDiagram d = identity(strands);
  const int l = i - 1;
  const int r = i;
  d.partner[l] = r;
  d.partner[r] = l;
  d.partner[strands + l] = strands + r;
  d.partner[strands + r] = strands + l;
  return d;
}

bool TLDiagram::is_valid() const {
  const int points = 2 * strands;
  if (strands < 1 || static_cast<int>(partner.size()) != points || loops < 0) return false;
  for (int p = 0; p < points; ++p) {
    const int q = partner[p];
    if (q < 0 || q >= points || q == p || partner[q] != p) return false;
  }
  // Position around the boundary circle: top row left to right, then the
  // bottom row right to left.
  auto circ = [&](int p) { return p < strands ? p : 3 * strands - 1 - p; };
  for (int p = 0; p < points; ++p) {
    for (int q = 0; q < points; ++q) {
      int a = circ(p), b = circ(partner[p]);
      int c = circ(q), e = circ(partner[q]);
      if (a > b) std::swap(a, b);
      const bool c_in = a < c && c < b;
      const bool e_in = a < e && e < b;
      if (c_in != e_in) return false;
    }
  }
  return true;
}

int TLDiagram::closure_components() const {
  DisjointSets sets(2 * strands);
  for (int p = 0; p < 2 * strands; ++p) sets.unite(p, partner[p]);
  for (int j = 0; j < strands; ++j) sets.unite(j, strands + j);
  int circles = 0;
  for (int p = 0; p < 2 * strands; ++p) circles += sets.find(p) == p ? 1 : 0;
  return circles;
}

TLDiagram compose_tl(const TLDiagram& d1, const TLDiagram& d2) {
  if (d1.strands != d2.strands) throw DimensionError("compose_tl: strand counts differ");
  const int n = d1.strands;
  // Points: [0, n) top of d1, [n, 2n) the shared middle row, [2n, 3n) bottom of d2.
  DisjointSets sets(3 * n);
  for (int p = 0; p < 2 * n; ++p) {
    sets.unite(p, d1.partner[p]);
    sets.unite(p + n, d2.partner[p] + n);
  }

  TLDiagram out{n, std::vector<int>(2 * n, -1), d1.loops + d2.loops};
  std::vector<int> first_outer(3 * n, -1);
  auto visit = [&](int point, int outer) {
    const int root = sets.find(point);
    if (first_outer[root] < 0) {
      first_outer[root] = outer;
    } else {
      out.partner[first_outer[root]] = outer;
      out.partner[outer] = first_outer[root];
    }
  };
  for (int p = 0; p < n; ++p) visit(p, p);
  for (int p = 0; p < n; ++p) visit(2 * n + p, n + p);
  // Components living only in the middle row are closed circles.
  for (int p = n; p < 2 * n; ++p) {
    const int root = sets.find(p);
    if (root == p && first_outer[root] < 0) ++out.loops;
  }
  return out;
}

Complex bracket_state_sum(const BraidWord& word, Complex A, StateSumLimits limits) {
  const int n = word.strands();
  const auto c = static_cast<int>(word.size());
  if (n > limits.max_strands) {
    throw LimitError("state sum limited to " + std::to_string(limits.max_strands) + " strands");
  }
  if (c > limits.max_letters) {
    throw LimitError("state sum limited to " + std::to_string(limits.max_letters) + " crossings");
  }
  const Complex delta = -A * A - 1.0 / (A * A);
  const TLDiagram vertical = TLDiagram::identity(n);
  std::vector<TLDiagram> cups;
  for (int i = 1; i < n; ++i) cups.push_back(TLDiagram::cup_cap(n, i));

  Complex total{0.0, 0.0};
  const unsigned long long states = 1ULL << c;
  for (unsigned long long mask = 0; mask < states; ++mask) {
    TLDiagram diagram = vertical;
    int a_minus_b = 0;
    for (int k = 0; k < c; ++k) {
      const auto& g = word.letters()[k];
      const bool cup = (mask >> k) & 1ULL;
      // For a positive crossing the vertical smoothing carries A; the sign
      // flips the labels of the two smoothings.
      const bool a_smoothing = cup == (g.sign < 0);
      a_minus_b += a_smoothing ? 1 : -1;
      if (cup) diagram = compose_tl(diagram, cups[g.index - 1]);
    }
    const int circles = diagram.closure_components() + diagram.loops;
    total += ipow(A, a_minus_b) * ipow(delta, circles - 1);
  }
  return total;
}

}  // namespace jonesnmr
