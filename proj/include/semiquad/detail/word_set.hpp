#pragma once

#include <cstdint>
#include <algorithm>
#include <cstring>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

namespace semiquad::detail {

// Insertion-ordered set of equal-length byte strings. Members live back to
// back in one arena, so the set doubles as a BFS queue; lookups go through an
// open-addressing table of member indices.
class FixedWordSet {
 public:
  void reset(std::size_t width) {
    width_ = width;
    size_ = 0;
    arena_.clear();
    // drop a table left large by a big class rather than clearing it
    if (table_.size() >= 64 && table_.size() <= 4096) std::fill(table_.begin(), table_.end(), kEmpty);
    else table_.assign(64, kEmpty);
  }

  std::size_t size() const noexcept { return size_; }

  std::string_view at(std::size_t i) const noexcept {
    return {arena_.data() + i * width_, width_};
  }

  // Returns the member index and whether the word was new.
  std::pair<std::uint32_t, bool> insert(std::string_view w) {
    if (2 * (size_ + 1) > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    std::size_t h = std::hash<std::string_view>{}(w) & mask;
    while (table_[h] != kEmpty) {
      if (std::memcmp(arena_.data() + std::size_t(table_[h]) * width_, w.data(), width_) == 0) {
        return {table_[h], false};
      }
      h = (h + 1) & mask;
    }
    const auto idx = static_cast<std::uint32_t>(size_++);
    table_[h] = idx;
    arena_.insert(arena_.end(), w.begin(), w.end());
    return {idx, true};
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void grow() {
    std::vector<std::uint32_t> bigger(table_.size() * 2, kEmpty);
    const std::size_t mask = bigger.size() - 1;
    for (std::size_t i = 0; i < size_; ++i) {
      std::size_t h = std::hash<std::string_view>{}(at(i)) & mask;
      while (bigger[h] != kEmpty) h = (h + 1) & mask;
      bigger[h] = static_cast<std::uint32_t>(i);
    }
    table_ = std::move(bigger);
  }

  std::size_t width_ = 0;
  std::size_t size_ = 0;
  std::vector<char> arena_;
  std::vector<std::uint32_t> table_;
};

}  // namespace semiquad::detail
