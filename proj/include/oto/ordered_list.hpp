#ifndef OTO_ORDERED_LIST_HPP
#define OTO_ORDERED_LIST_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "oto/types.hpp"

namespace oto {

/// Handle to a cell of an OrderedList. Stays valid until the cell is
/// deleted; using it afterwards raises StaleHandle.
struct OrderLabel {
  std::uint32_t index = 0;
  std::uint32_t generation = 0;

  friend constexpr bool operator==(const OrderLabel&, const OrderLabel&) = default;
};

// Ordered list with constant-time order queries (order maintenance).
//
// Every live cell carries a 64-bit tag and tags increase along the list,
// so compare() is a single integer comparison. A new cell takes the
// midpoint tag of its neighbours. When there is no room, the smallest
// aligned tag range around the insertion point whose density is below
// kDensity^level is spread out evenly (Bender et al. list labeling,
// O(log n) amortized retags). A hidden head sentinel with tag 0 anchors
// insert_before on the first cell.
class OrderedList {
 public:
  OrderedList();

  /// Appends a new cell at the end.
  OrderLabel push_back();
  OrderLabel insert_after(OrderLabel anchor);
  OrderLabel insert_before(OrderLabel anchor);
  void erase(OrderLabel label);

  std::strong_ordering compare(OrderLabel a, OrderLabel b) const;
  bool precedes(OrderLabel a, OrderLabel b) const { return tag(a) < tag(b); }

  bool is_live(OrderLabel label) const noexcept;
  std::uint64_t tag(OrderLabel label) const;

  std::size_t size() const noexcept { return size_; }

  /// Live cells in list order.
  std::vector<OrderLabel> labels() const;

  /// Cells whose tag was rewritten by renumbering, since construction.
  std::uint64_t retag_count() const noexcept { return retags_; }

  /// Debug check: tags strictly increase along the links.
  bool tags_monotone() const;

 private:
  struct Cell {
    std::uint64_t tag = 0;
    std::uint32_t prev = kNone;
    std::uint32_t next = kNone;
    std::uint32_t generation = 0;
    bool live = false;
  };

  static constexpr std::uint32_t kNone = 0xffffffffu;
  static constexpr std::uint32_t kHead = 0;
  static constexpr double kDensity = 1.5;

  const Cell& checked(OrderLabel label) const;
  std::uint32_t allocate();
  OrderLabel link_after(std::uint32_t anchor);
  void renumber_around(std::uint32_t anchor);
  // Exclusive upper bound for a new tag after `anchor`: the next tag, or
  // 2^64 at the end of the list.
  unsigned __int128 upper_tag(std::uint32_t anchor) const;

  std::vector<Cell> cells_;
  std::vector<std::uint32_t> free_;
  std::uint32_t tail_ = kHead;
  std::size_t size_ = 0;
  std::uint64_t retags_ = 0;
};

}  // namespace oto

#endif  // OTO_ORDERED_LIST_HPP
