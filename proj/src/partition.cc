// Copyright 2026 The lppgame Authors
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

#include <algorithm>
#include <charconv>
#include <string>

#include "lppgame/errors.h"
#include "lppgame/model.h"

namespace lppgame {

Coalition::Coalition(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw DomainError("a coalition must be nonempty");
  if (members_.front() < 0) throw DomainError("negative producer index");
}

Coalition Coalition::FromMask(std::uint64_t mask) {
  std::vector<int> members;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) members.push_back(i);
  }
  return Coalition(std::move(members));
}

Coalition Coalition::Everyone(int producers) {
  std::vector<int> members(producers);
  for (int i = 0; i < producers; ++i) members[i] = i;
  return Coalition(std::move(members));
}

bool Coalition::Contains(int producer) const {
  return std::binary_search(members_.begin(), members_.end(), producer);
}

std::uint64_t Coalition::Mask() const {
  std::uint64_t mask = 0;
  for (int i : members_) {
    if (i >= 64) throw CapacityError("coalition mask limited to 64 producers");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::string Coalition::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(members_[i] + 1);
  }
  return out + "}";
}

Partition::Partition(int producers, std::vector<Coalition> blocks)
    : producers_(producers), blocks_(std::move(blocks)) {
  if (producers_ < 1) throw DomainError("a partition needs at least one producer");
  std::vector<int> owner(producers_, -1);
  for (int b = 0; b < size(); ++b) {
    for (int i : blocks_[b].members()) {
      if (i >= producers_) {
        throw DomainError("producer " + std::to_string(i + 1) + " out of range (n = " +
                          std::to_string(producers_) + ")");
      }
      if (owner[i] >= 0) {
        throw DomainError("producer " + std::to_string(i + 1) +
                          " appears in more than one block");
      }
      owner[i] = b;
    }
  }
  for (int i = 0; i < producers_; ++i) {
    if (owner[i] < 0) {
      throw DomainError("producer " + std::to_string(i + 1) + " is in no block");
    }
  }
}

std::string Partition::ToString() const {
  std::string out;
  for (int b = 0; b < size(); ++b) {
    if (b > 0) out += "|";
    const auto& m = blocks_[b].members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(m[i] + 1);
    }
  }
  return out;
}

std::vector<Partition> EnumeratePartitions(int producers) {
  if (producers < 1) throw DomainError("need at least one producer");
  if (producers > kMaxEnumeratedProducers) {
    throw CapacityError("partition enumeration is capped at n = " +
                        std::to_string(kMaxEnumeratedProducers));
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(producers, 0);
  std::vector<int> prefix_max(producers, 0);
  std::vector<Partition> out;
  while (true) {
    const int blocks = prefix_max.back() + 1;
    std::vector<std::vector<int>> members(blocks);
    for (int i = 0; i < producers; ++i) members[a[i]].push_back(i);
    std::vector<Coalition> coalitions;
    coalitions.reserve(blocks);
    for (auto& m : members) coalitions.emplace_back(std::move(m));
    out.emplace_back(producers, std::move(coalitions));

    int i = producers - 1;
    while (i > 0 && a[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (int j = i + 1; j < producers; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

Partition ParsePartitionSpec(std::string_view spec, int producers) {
  std::vector<Coalition> blocks;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t bar = std::min(spec.find('|', start), spec.size());
    const std::string_view block = spec.substr(start, bar - start);
    std::vector<int> members;
    std::size_t pos = 0;
    while (pos <= block.size()) {
      const std::size_t comma = std::min(block.find(',', pos), block.size());
      std::string_view token = block.substr(pos, comma - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int member = 0;
      const auto [end, ec] =
          std::from_chars(token.data(), token.data() + token.size(), member);
      if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError("malformed partition spec '" + std::string(spec) + "'");
      }
      if (member < 1 || member > producers) {
        throw DomainError("producer " + std::to_string(member) + " out of range (n = " +
                          std::to_string(producers) + ")");
      }
      if (std::find(members.begin(), members.end(), member - 1) != members.end()) {
        throw DomainError("producer " + std::to_string(member) + " repeated in a block");
      }
      members.push_back(member - 1);
      pos = comma + 1;
    }
    blocks.emplace_back(std::move(members));
    start = bar + 1;
  }
  return Partition(producers, std::move(blocks));
}

Partition SingletonPartition(int producers) {
  std::vector<Coalition> blocks;
  for (int i = 0; i < producers; ++i) blocks.emplace_back(std::vector<int>{i});
  return Partition(producers, std::move(blocks));
}

}  // namespace lppgame
