// Copyright 2026 The Triblock Authors
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

// Permutations, partial position-to-vertex maps and generating sets.

#ifndef TRIBLOCK_PERMGROUP_H_
#define TRIBLOCK_PERMGROUP_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triblock {

// Dense bijection on {0..n-1}; p[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation Identity(int n);
  // Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation FromCycles(int n, std::string_view cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool IsIdentity() const;
  // Smallest point not fixed, or -1 for the identity.
  int FirstMovedPoint() const;
  std::string ToCycleString() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (Compose(a, b))(i) = a(b(i)). Throws std::invalid_argument on size
// mismatch.
Permutation Compose(const Permutation& a, const Permutation& b);
Permutation Inverse(const Permutation& a);

// Injective assignment of arrangement positions to vertices of the target
// graph. Positions are 1-based, matching arrangement intervals [i_k, j_k].
class PartialMap {
 public:
  static constexpr int kUnassigned = -1;

  PartialMap() = default;
  explicit PartialMap(int n) : images_(n, kUnassigned) {}

  int num_positions() const { return static_cast<int>(images_.size()); }

  // Throws std::invalid_argument if the position is already assigned, or the
  // vertex is already used by another position.
  void Assign(int position, int vertex);

  // kUnassigned when the position is not in the support.
  int Image(int position) const { return images_[position - 1]; }
  bool Contains(int position) const {
    return images_[position - 1] != kUnassigned;
  }
  bool UsesVertex(int vertex) const;

  // Supported positions in ascending order.
  std::vector<int> Support() const;
  int SupportSize() const;
  bool IsTotal() const { return SupportSize() == num_positions(); }

  // The permutation sending position p (0-based index p-1) to Image(p).
  // Requires IsTotal().
  Permutation AsPermutation() const;

  friend auto operator<=>(const PartialMap&, const PartialMap&) = default;
  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  std::vector<int> images_;
};

// Union of two maps with disjoint supports. Returns nullopt when some vertex
// is claimed by both (a collision, which callers drop). Overlapping supports
// or mismatched sizes throw std::invalid_argument.
std::optional<PartialMap> DirectProduct(const PartialMap& a,
                                        const PartialMap& b);

// A reduced generating set, optionally carrying one coset representative.
struct GenSet {
  int n = 0;
  std::vector<Permutation> generators;
  std::optional<Permutation> representative;
};

// Jerrum's filter: returns generators of the same group, at most n-1 of them
// and never the identity. Throws std::invalid_argument on mixed sizes.
GenSet ReduceGenerators(std::span<const Permutation> perms, int n);

// Elements of <s.generators>, breadth-first from the identity. Returns
// nullopt once more than `cap` distinct elements are found.
std::optional<std::vector<Permutation>> Closure(const GenSet& s,
                                                int64_t cap);

// log2(n!), used as a reference bound on generating-set sizes.
double Log2Factorial(int n);

}  // namespace triblock

#endif  // TRIBLOCK_PERMGROUP_H_
