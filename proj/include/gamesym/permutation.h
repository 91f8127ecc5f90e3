// Copyright 2026 The gamesym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMESYM_PERMUTATION_H_
#define GAMESYM_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gamesym {

// A bijection on player indices {0, ..., n-1}; images()[i] is sigma(i).
// Ordering is lexicographic on the image vector.
class Permutation {
 public:
  Permutation() = default;

  static Permutation Identity(int n);
  // Throws Error(kInvalidConstraint) unless images is a bijection.
  static Permutation FromImages(std::vector<int> images);
  // Swaps a and b; Transposition(n, a, a) is the identity.
  static Permutation Transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  std::span<const int> images() const { return images_; }
  bool IsIdentity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// (sigma tau)(i) = sigma(tau(i)). With this convention a -> a sigma is a right
// action on profiles: (a sigma) tau = a (sigma tau).
Permutation Compose(const Permutation& sigma, const Permutation& tau);

// Left-to-right product of a sequence, e.g. Compose({p, q, r}) = p q r.
Permutation Compose(std::span<const Permutation> factors);

Permutation Inverse(const Permutation& sigma);

// Disjoint cycles, each starting at its smallest element, sorted by that
// element. Fixed points are omitted.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

CycleForm CycleDecomposition(const Permutation& sigma);
Permutation FromCycleForm(int n, const CycleForm& form);

// 1-based cycle notation: "(1 2)(3 4)", identity is "()".
std::string ToCycleString(const Permutation& sigma);
// Inverse of ToCycleString for a given degree. Accepts any valid cycle list,
// not only the canonical one.
Permutation ParseCycleString(int n, std::string_view text);

// sigma(from) = to.
struct Pin {
  int from;
  int to;
};

// Calls visit on every permutation of degree n satisfying all pins, in
// lexicographic order of images, until visit returns false. There are
// (n - |pins|)! of them. Throws Error(kInvalidConstraint) for non-injective
// or out-of-range pins.
void ForEachConstrained(int n, std::span<const Pin> pins,
                        const std::function<bool(const Permutation&)>& visit);

std::vector<Permutation> EnumerateConstrained(int n,
                                              std::span<const Pin> pins);

// All of S_n in lexicographic order.
std::vector<Permutation> AllPermutations(int n);

std::size_t Factorial(int n);

}  // namespace gamesym

#endif  // GAMESYM_PERMUTATION_H_
