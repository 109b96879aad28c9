// Copyright 2026 The amekit Authors
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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "amekit/errors.hpp"
#include "amekit/tolerances.hpp"

namespace amekit {

/// Computational-basis label of one qudit, in Z_d.
using Dit = int;
using Labels = std::vector<Dit>;
/// Ordered list of party indices (0-based).
using Parties = std::vector<std::size_t>;

/// d^n, rejecting anything beyond the desk-scale limit.
inline std::size_t state_dimension(std::size_t parties, int d) {
  if (d < 2) throw DomainError("local dimension must be at least 2");
  std::size_t dim = 1;
  for (std::size_t i = 0; i < parties; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > kMaxAmplitudes) {
      throw DomainError("d^n = " + std::to_string(d) + "^" +
                        std::to_string(parties) + " exceeds the limit of " +
                        std::to_string(kMaxAmplitudes) + " amplitudes");
    }
  }
  return dim;
}

/// Flat index of a label tuple; the first label is the most significant digit.
inline std::size_t basis_index(std::span<const Dit> labels, int d) {
  if (labels.empty()) throw DomainError("basis_index: empty label list");
  if (d < 2) throw DomainError("basis_index: local dimension must be >= 2");
  std::size_t index = 0;
  for (Dit k : labels) {
    if (k < 0 || k >= d) {
      throw DomainError("basis_index: label " + std::to_string(k) +
                        " outside Z_" + std::to_string(d));
    }
    index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(k);
  }
  return index;
}

/// Inverse of basis_index for a fixed number of parties.
inline Labels basis_labels(std::size_t index, std::size_t parties, int d) {
  if (d < 2) throw DomainError("basis_labels: local dimension must be >= 2");
  Labels labels(parties);
  for (std::size_t j = parties; j-- > 0;) {
    labels[j] = static_cast<Dit>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  if (index != 0) throw DomainError("basis_labels: index out of range");
  return labels;
}

/// Checks that `parties` are distinct and below n.
inline void check_parties(std::span<const std::size_t> parties, std::size_t n,
                          const char* who) {
  std::vector<bool> seen(n, false);
  for (std::size_t p : parties) {
    if (p >= n) {
      throw DomainError(std::string(who) + ": party " + std::to_string(p) +
                        " out of range for " + std::to_string(n) + " parties");
    }
    if (seen[p]) {
      throw DomainError(std::string(who) + ": party " + std::to_string(p) +
                        " listed twice");
    }
    seen[p] = true;
  }
}

/// Parties of {0..n-1} not in `parties`, ascending.
inline Parties complement(std::span<const std::size_t> parties, std::size_t n) {
  std::vector<bool> taken(n, false);
  for (std::size_t p : parties) taken.at(p) = true;
  Parties rest;
  rest.reserve(n - parties.size());
  for (std::size_t p = 0; p < n; ++p) {
    if (!taken[p]) rest.push_back(p);
  }
  return rest;
}

/// Flat offsets contributed by a party subset.
///
/// Entry t holds the full-register index of the basis state whose labels on
/// `parties` spell t (big-endian in the listed order) and are zero
/// elsewhere. Any full index is offsets(S)[s] + offsets(complement)[r].
inline std::vector<std::size_t> party_offsets(std::span<const std::size_t> parties,
                                              std::size_t n, int d) {
  const auto ud = static_cast<std::size_t>(d);
  std::vector<std::size_t> stride(n);
  std::size_t s = 1;
  for (std::size_t p = n; p-- > 0;) {
    stride[p] = s;
    s *= ud;
  }
  std::vector<std::size_t> offsets{0};
  for (std::size_t p : parties) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * ud);
    for (std::size_t base : offsets) {
      for (std::size_t k = 0; k < ud; ++k) next.push_back(base + k * stride[p]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

/// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<Parties> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Parties> out;
  if (k > n) return out;
  Parties current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

inline std::string join(std::span<const std::size_t> parties) {
  std::string s;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parties[i]);
  }
  return s;
}

}  // namespace amekit
