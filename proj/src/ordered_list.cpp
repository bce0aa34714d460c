#include "oto/ordered_list.hpp"

#include <cmath>
#include <string>

namespace oto {

namespace {

using u128 = unsigned __int128;

constexpr u128 kTagSpace = u128{1} << 64;
// Step used by push_back so that appending n cells does not trigger
// renumbering until ~2^32 appends.
constexpr std::uint64_t kAppendStep = std::uint64_t{1} << 32;

}  // namespace

OrderedList::OrderedList() {
  Cell head;
  head.live = true;
  cells_.push_back(head);
}

const OrderedList::Cell& OrderedList::checked(OrderLabel label) const {
  if (label.index == kHead || label.index >= cells_.size())
    throw StaleHandle("order label " + std::to_string(label.index) +
                      " does not belong to this list");
  const Cell& c = cells_[label.index];
  if (!c.live || c.generation != label.generation)
    throw StaleHandle("order label " + std::to_string(label.index) + " is dead");
  return c;
}

bool OrderedList::is_live(OrderLabel label) const noexcept {
  if (label.index == kHead || label.index >= cells_.size()) return false;
  const Cell& c = cells_[label.index];
  return c.live && c.generation == label.generation;
}

std::uint64_t OrderedList::tag(OrderLabel label) const { return checked(label).tag; }

std::strong_ordering OrderedList::compare(OrderLabel a, OrderLabel b) const {
  return checked(a).tag <=> checked(b).tag;
}

std::uint32_t OrderedList::allocate() {
  if (!free_.empty()) {
    const std::uint32_t i = free_.back();
    free_.pop_back();
    return i;
  }
  cells_.emplace_back();
  return static_cast<std::uint32_t>(cells_.size() - 1);
}

unsigned __int128 OrderedList::upper_tag(std::uint32_t anchor) const {
  const std::uint32_t next = cells_[anchor].next;
  return next == kNone ? kTagSpace : u128{cells_[next].tag};
}

OrderLabel OrderedList::link_after(std::uint32_t anchor) {
  if (upper_tag(anchor) - cells_[anchor].tag < 2) renumber_around(anchor);

  const std::uint64_t lo = cells_[anchor].tag;
  const u128 gap = upper_tag(anchor) - lo;
  const std::uint32_t idx = allocate();  // may reallocate cells_
  Cell& c = cells_[idx];
  c.tag = static_cast<std::uint64_t>(lo + gap / 2);
  c.prev = anchor;
  c.next = cells_[anchor].next;
  c.live = true;
  if (c.next != kNone)
    cells_[c.next].prev = idx;
  else
    tail_ = idx;
  cells_[anchor].next = idx;
  ++size_;
  return {idx, c.generation};
}

void OrderedList::renumber_around(std::uint32_t anchor) {
  const std::uint64_t t = cells_[anchor].tag;
  std::uint32_t left = anchor;
  std::uint32_t right = anchor;
  std::uint64_t count = 1;

  for (int level = 1; level <= 64; ++level) {
    const u128 width = u128{1} << level;
    const u128 range_lo = u128{t} & ~(width - 1);
    const u128 range_hi = range_lo + width - 1;

    while (cells_[left].prev != kNone && cells_[cells_[left].prev].tag >= range_lo) {
      left = cells_[left].prev;
      ++count;
    }
    while (cells_[right].next != kNone && cells_[cells_[right].next].tag <= range_hi) {
      right = cells_[right].next;
      ++count;
    }

    // Overflow threshold (1/kDensity)^level of the range, i.e. at most
    // (2/kDensity)^level cells once the new one is added.
    const double capacity = std::pow(2.0 / kDensity, level);
    if (static_cast<double>(count + 1) >= capacity) continue;

    const u128 step = width / (count + 1);
    u128 next_tag = range_lo;
    for (std::uint32_t i = left;; i = cells_[i].next) {
      cells_[i].tag = static_cast<std::uint64_t>(next_tag);
      next_tag += step;
      ++retags_;
      if (i == right) break;
    }
    return;
  }
  throw std::length_error("ordered list exceeded its 64-bit tag capacity");
}

OrderLabel OrderedList::push_back() {
  const std::uint64_t lo = cells_[tail_].tag;
  if (kTagSpace - lo > u128{2} * kAppendStep) {
    const std::uint32_t anchor = tail_;
    const std::uint32_t idx = allocate();
    Cell& c = cells_[idx];
    c.tag = lo + kAppendStep;
    c.prev = anchor;
    c.next = kNone;
    c.live = true;
    cells_[anchor].next = idx;
    tail_ = idx;
    ++size_;
    return {idx, c.generation};
  }
  return link_after(tail_);
}

OrderLabel OrderedList::insert_after(OrderLabel anchor) {
  checked(anchor);
  return link_after(anchor.index);
}

OrderLabel OrderedList::insert_before(OrderLabel anchor) {
  return link_after(checked(anchor).prev);
}

void OrderedList::erase(OrderLabel label) {
  checked(label);
  Cell& c = cells_[label.index];
  cells_[c.prev].next = c.next;
  if (c.next != kNone)
    cells_[c.next].prev = c.prev;
  else
    tail_ = c.prev;
  c.live = false;
  c.prev = c.next = kNone;
  ++c.generation;
  free_.push_back(label.index);
  --size_;
}

std::vector<OrderLabel> OrderedList::labels() const {
  std::vector<OrderLabel> result;
  result.reserve(size_);
  for (std::uint32_t i = cells_[kHead].next; i != kNone; i = cells_[i].next)
    result.push_back({i, cells_[i].generation});
  return result;
}

bool OrderedList::tags_monotone() const {
  for (std::uint32_t i = kHead; cells_[i].next != kNone; i = cells_[i].next)
    if (cells_[cells_[i].next].tag <= cells_[i].tag) return false;
  return true;
}

}  // namespace oto
