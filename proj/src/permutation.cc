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

#include "gamesym/permutation.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gamesym/error.h"

namespace gamesym {

Permutation Permutation::Identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::FromImages(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorCode::kInvalidConstraint,
                  "images do not form a permutation of 0.." +
                      std::to_string(n - 1));
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::Transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw Error(ErrorCode::kOutOfRange, "transposition index out of range");
  }
  Permutation p = Identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

bool Permutation::IsIdentity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "cannot compose permutations of degree " +
                    std::to_string(sigma.size()) + " and " +
                    std::to_string(tau.size()));
  }
  std::vector<int> images(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) images[i] = sigma(tau(i));
  return Permutation::FromImages(std::move(images));
}

Permutation Compose(std::span<const Permutation> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::kSizeMismatch, "empty product has no degree");
  }
  Permutation product = factors.front();
  for (const auto& f : factors.subspan(1)) product = Compose(product, f);
  return product;
}

Permutation Inverse(const Permutation& sigma) {
  std::vector<int> images(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) images[sigma(i)] = i;
  return Permutation::FromImages(std::move(images));
}

CycleForm CycleDecomposition(const Permutation& sigma) {
  CycleForm form;
  std::vector<bool> done(sigma.size(), false);
  for (int start = 0; start < sigma.size(); ++start) {
    if (done[start] || sigma(start) == start) continue;
    std::vector<int> cycle;
    for (int i = start; !done[i]; i = sigma(i)) {
      done[i] = true;
      cycle.push_back(i);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

Permutation FromCycleForm(int n, const CycleForm& form) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : form.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 0 || from >= n || used[from]) {
        throw Error(ErrorCode::kInvalidConstraint,
                    "cycles are not disjoint or out of range");
      }
      used[from] = true;
      images[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation::FromImages(std::move(images));
}

std::string ToCycleString(const Permutation& sigma) {
  const CycleForm form = CycleDecomposition(sigma);
  if (form.cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : form.cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation ParseCycleString(int n, std::string_view text) {
  // Cycles are multiplied left to right, so "(1 2)(2 3)" is a product of
  // transpositions rather than a disjoint form.
  Permutation result = Permutation::Identity(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kParse,
                 "bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() &&
             std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int value = 0;
      const std::size_t begin = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (pos == begin) throw fail("expected a player label");
      if (value < 1 || value > n) throw fail("label out of range");
      cycle.push_back(value - 1);
    }
    if (cycle.size() > 1) {
      CycleForm single{{cycle}};
      result = Compose(result, FromCycleForm(n, single));
    }
  }
  return result;
}

void ForEachConstrained(int n, std::span<const Pin> pins,
                        const std::function<bool(const Permutation&)>& visit) {
  std::vector<int> images(n, -1);
  std::vector<bool> value_used(n, false);
  for (const Pin& pin : pins) {
    if (pin.from < 0 || pin.from >= n || pin.to < 0 || pin.to >= n) {
      throw Error(ErrorCode::kInvalidConstraint, "pin out of range");
    }
    if (images[pin.from] != -1 && images[pin.from] != pin.to) {
      throw Error(ErrorCode::kInvalidConstraint,
                  "pins assign two images to player " +
                      std::to_string(pin.from + 1));
    }
    if (images[pin.from] == -1 && value_used[pin.to]) {
      throw Error(ErrorCode::kInvalidConstraint,
                  "pins are not injective at image " +
                      std::to_string(pin.to + 1));
    }
    images[pin.from] = pin.to;
    value_used[pin.to] = true;
  }

  std::vector<int> free_slots;
  std::vector<int> free_values;
  for (int i = 0; i < n; ++i) {
    if (images[i] == -1) free_slots.push_back(i);
    if (!value_used[i]) free_values.push_back(i);
  }
  // Fixed slots never change, so lexicographic order of the free values in
  // slot order is lexicographic order of the full image vector.
  do {
    for (std::size_t k = 0; k < free_slots.size(); ++k) {
      images[free_slots[k]] = free_values[k];
    }
    if (!visit(Permutation::FromImages(images))) return;
  } while (std::next_permutation(free_values.begin(), free_values.end()));
}

std::vector<Permutation> EnumerateConstrained(int n,
                                              std::span<const Pin> pins) {
  std::vector<Permutation> out;
  ForEachConstrained(n, pins, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Permutation> AllPermutations(int n) {
  return EnumerateConstrained(n, {});
}

std::size_t Factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

}  // namespace gamesym
