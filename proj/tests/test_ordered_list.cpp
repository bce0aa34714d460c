#include <gtest/gtest.h>

#include <algorithm>
#include <list>

#include "oto/ordered_list.hpp"
#include "oto/random.hpp"

namespace oto {
namespace {

std::vector<std::uint32_t> indices(const std::vector<OrderLabel>& labels) {
  std::vector<std::uint32_t> out;
  for (OrderLabel l : labels) out.push_back(l.index);
  return out;
}

TEST(OrderedList, PushBackKeepsOrder) {
  OrderedList list;
  const OrderLabel a = list.push_back();
  const OrderLabel b = list.push_back();
  EXPECT_TRUE(list.precedes(a, b));
  EXPECT_EQ(list.compare(b, a), std::strong_ordering::greater);
  EXPECT_EQ(list.compare(a, a), std::strong_ordering::equal);
  EXPECT_EQ(list.size(), 2u);
}

TEST(OrderedList, InsertBeforeFirstCell) {
  OrderedList list;
  const OrderLabel a = list.push_back();
  const OrderLabel b = list.insert_before(a);
  const OrderLabel c = list.insert_before(b);
  EXPECT_EQ(indices(list.labels()), indices({c, b, a}));
  EXPECT_TRUE(list.tags_monotone());
}

TEST(OrderedList, EraseInvalidatesHandle) {
  OrderedList list;
  const OrderLabel a = list.push_back();
  const OrderLabel b = list.push_back();
  list.erase(a);
  EXPECT_FALSE(list.is_live(a));
  EXPECT_THROW(list.tag(a), StaleHandle);
  EXPECT_THROW(list.insert_after(a), StaleHandle);
  EXPECT_THROW(list.erase(a), StaleHandle);
  // The freed slot is reused under a new generation.
  const OrderLabel c = list.push_back();
  EXPECT_TRUE(list.is_live(c));
  EXPECT_FALSE(list.is_live(a));
  EXPECT_TRUE(list.precedes(b, c));
}

TEST(OrderedList, ForeignHandleRejected) {
  OrderedList list;
  list.push_back();
  EXPECT_THROW(list.tag(OrderLabel{1234, 0}), StaleHandle);
}

TEST(OrderedList, RepeatedInsertAtOnePointRenumbers) {
  OrderedList list;
  const OrderLabel first = list.push_back();
  list.push_back();
  OrderLabel anchor = first;
  for (int i = 0; i < 5000; ++i) anchor = list.insert_after(first);
  EXPECT_TRUE(list.tags_monotone());
  EXPECT_GT(list.retag_count(), 0u);
  EXPECT_EQ(list.size(), 5002u);
  EXPECT_TRUE(list.precedes(first, anchor));
}

// Random operations mirrored on std::list; positions must always agree.
TEST(OrderedList, MatchesLinkedListOracle) {
  SplitMix64 rng(42);
  OrderedList list;
  std::list<std::uint64_t> oracle;  // packed (index, generation)
  auto pack = [](OrderLabel l) { return std::uint64_t{l.index} << 32 | l.generation; };
  auto unpack = [](std::uint64_t k) {
    return OrderLabel{static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k)};
  };
  oracle.push_back(pack(list.push_back()));
  for (int step = 0; step < 20000; ++step) {
    auto it = oracle.begin();
    std::advance(it, rng.below(oracle.size()));
    const OrderLabel at = unpack(*it);
    const std::uint64_t op = rng.below(10);
    if (op < 4) {
      oracle.insert(std::next(it), pack(list.insert_after(at)));
    } else if (op < 8) {
      oracle.insert(it, pack(list.insert_before(at)));
    } else if (op < 9 && oracle.size() > 1) {
      list.erase(at);
      oracle.erase(it);
    } else {
      oracle.push_back(pack(list.push_back()));
    }
    if (step % 1000 == 0) {
      std::vector<std::uint64_t> got;
      for (OrderLabel l : list.labels()) got.push_back(pack(l));
      ASSERT_EQ(got, std::vector<std::uint64_t>(oracle.begin(), oracle.end()));
    }
  }
  EXPECT_TRUE(list.tags_monotone());
  std::vector<std::uint64_t> got;
  for (OrderLabel l : list.labels()) got.push_back(pack(l));
  EXPECT_EQ(got, std::vector<std::uint64_t>(oracle.begin(), oracle.end()));
  // Pairwise comparisons agree with list positions.
  std::vector<OrderLabel> seq;
  for (std::uint64_t k : oracle) seq.push_back(unpack(k));
  for (std::size_t i = 0; i + 1 < seq.size(); i += 7)
    EXPECT_TRUE(list.precedes(seq[i], seq[i + 1]));
}

TEST(OrderedList, AmortizedRetagsStayModest) {
  OrderedList list;
  SplitMix64 rng(9);
  std::vector<OrderLabel> live{list.push_back()};
  const int inserts = 100000;
  for (int i = 0; i < inserts; ++i) live.push_back(list.insert_after(live[rng.below(live.size())]));
  EXPECT_TRUE(list.tags_monotone());
  // O(log n) amortized; 64 per insert is far above what the scheme needs.
  EXPECT_LT(list.retag_count(), 64u * inserts);
}

}  // namespace
}  // namespace oto
