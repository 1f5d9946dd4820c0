#include "trigrid/index.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "naive_oracle.hpp"

namespace trigrid {
namespace {

using testing::NaiveOracle;
using testing::random_key;

TripletId T(const IndexConfig& cfg, const char* s) {
  return TripletId{cfg.code(s[0]), cfg.code(s[1]), cfg.code(s[2])};
}

std::vector<std::uint32_t> marked(const TripletIndex& idx, const char* s) {
  return idx.grid().mark_vector(T(idx.config(), s)).positions();
}

// The four-key walkthrough corpus reused across the query tests.
class WalkthroughIndex : public ::testing::TestWithParam<ContainerVariant> {
 protected:
  WalkthroughIndex() : cfg_("ABCD", 8), idx_(cfg_, GetParam()) {
    for (const char* key : {"ABCDA", "ADCDB", "CCDA", "BCDAAD"})
      EXPECT_EQ(idx_.insert(key), InsertResult::inserted);
  }

  IndexConfig cfg_;
  TripletIndex idx_;
};

INSTANTIATE_TEST_SUITE_P(BothVariants, WalkthroughIndex,
                         ::testing::Values(ContainerVariant::list, ContainerVariant::tree));

TEST(TripletsOf, SlidesAUnitWindow) {
  IndexConfig cfg("ABCD", 8);
  std::vector<TripletOccurrence> expected = {{T(cfg, "ACA"), 1}, {T(cfg, "CAD"), 2}};
  EXPECT_EQ(triplets_of("ACAD", cfg), expected);

  expected = {{T(cfg, "ADC"), 1}, {T(cfg, "DCD"), 2}, {T(cfg, "CDB"), 3}};
  EXPECT_EQ(triplets_of("ADCDB", cfg), expected);

  expected = {{T(cfg, "ABC"), 1}};
  EXPECT_EQ(triplets_of("ABC", cfg), expected);

  EXPECT_THROW(triplets_of("AB", cfg), LengthError);
  EXPECT_THROW(triplets_of("ABCABCA{", cfg), EncodingError);
  EXPECT_THROW(triplets_of("ABCABCABC", cfg), LengthError);  // n = 9 > l = 8
}

TEST(Insert, SetsPositionsMarkAndHead) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  EXPECT_EQ(idx.insert("ACAD"), InsertResult::inserted);

  EXPECT_TRUE(idx.grid().test_position(T(cfg, "ACA"), 1));
  EXPECT_TRUE(idx.grid().test_position(T(cfg, "CAD"), 2));
  EXPECT_TRUE(idx.grid().test_mark(T(cfg, "CAD"), 2));
  EXPECT_FALSE(idx.grid().test_mark(T(cfg, "ACA"), 1));

  const Container* c = idx.container_at(T(cfg, "CAD"), 2);
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->contains_head("A"));
  EXPECT_EQ(c->size(), 1u);
}

TEST(Insert, DuplicateLeavesStateIdentical) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  idx.insert("ACAD");
  IndexStats before = idx.stats();
  EXPECT_EQ(idx.insert("ACAD"), InsertResult::duplicate);
  IndexStats after = idx.stats();
  EXPECT_EQ(after.key_count, before.key_count);
  EXPECT_EQ(after.container_count, before.container_count);
  EXPECT_EQ(idx.container_at(T(cfg, "CAD"), 2)->size(), 1u);
  EXPECT_EQ(idx.length_count(4), 1u);
  EXPECT_EQ(idx.total_characters(), 4u);
}

TEST_P(WalkthroughIndex, MarksLandOnTerminalTriplets) {
  EXPECT_EQ(marked(idx_, "CDA"), (std::vector<std::uint32_t>{2, 3}));
  EXPECT_TRUE(idx_.grid().test_mark(T(cfg_, "CDB"), 3));
  EXPECT_TRUE(idx_.grid().test_mark(T(cfg_, "AAD"), 4));
  EXPECT_EQ(idx_.grid().position_vector(T(cfg_, "BCD")).positions(),
            (std::vector<std::uint32_t>{1, 2}));
}

TEST_P(WalkthroughIndex, IndexSearchWalksEveryTriplet) {
  SearchOutcome hit = idx_.search("ADCDB", SearchStrategy::index_search);
  EXPECT_TRUE(hit.found);
  EXPECT_EQ(hit.pruned_at, PrunePoint::none);
  EXPECT_EQ(hit.containers_probed, 1u);

  SearchOutcome pruned = idx_.search("DCDB", SearchStrategy::index_search);
  EXPECT_FALSE(pruned.found);
  EXPECT_EQ(pruned.pruned_at, PrunePoint::triplet);
  EXPECT_EQ(pruned.pruned_triplet, 1u);
  EXPECT_EQ(pruned.containers_probed, 0u);

  // Every triplet of "ADCDA" passes but the container rejects the head: the
  // index-level false positive costs one probe.
  SearchOutcome fp = idx_.search("ADCDA", SearchStrategy::index_search);
  EXPECT_FALSE(fp.found);
  EXPECT_EQ(fp.pruned_at, PrunePoint::container);
  EXPECT_EQ(fp.containers_probed, 1u);
}

TEST_P(WalkthroughIndex, DirectSearchTestsOnlyTheMark) {
  SearchOutcome hit = idx_.search("ADCDB", SearchStrategy::direct_search);
  EXPECT_TRUE(hit.found);
  EXPECT_EQ(hit.containers_probed, 1u);

  SearchOutcome pruned = idx_.search("DCDB", SearchStrategy::direct_search);
  EXPECT_FALSE(pruned.found);
  EXPECT_EQ(pruned.pruned_at, PrunePoint::mark_check);
  EXPECT_EQ(pruned.containers_probed, 0u);

  SearchOutcome fp = idx_.search("ADCDA", SearchStrategy::direct_search);
  EXPECT_FALSE(fp.found);
  EXPECT_EQ(fp.pruned_at, PrunePoint::container);
  EXPECT_EQ(fp.containers_probed, 1u);
}

TEST(Search, CompositeKeyCaughtAtContainer) {
  // "ABCD" assembles from triplets of two other keys; only the container
  // check can reject it.
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  idx.insert("ABCA");
  idx.insert("DBCD");
  for (SearchStrategy strategy : {SearchStrategy::index_search, SearchStrategy::direct_search}) {
    SearchOutcome out = idx.search("ABCD", strategy);
    EXPECT_FALSE(out.found);
    EXPECT_EQ(out.pruned_at, PrunePoint::container);
    EXPECT_EQ(out.containers_probed, 1u);
  }
}

TEST(Search, RejectsOutOfRangeKeys) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  EXPECT_THROW(idx.search("ABCDABC", SearchStrategy::index_search), LengthError);
  EXPECT_THROW(idx.search("", SearchStrategy::index_search), LengthError);
  EXPECT_THROW(idx.search("ABCZ", SearchStrategy::direct_search), EncodingError);
  EXPECT_THROW(idx.insert("ABCDABC"), LengthError);
  EXPECT_THROW(idx.insert("AZ"), EncodingError);
}

TEST(ShortKeys, LiveInTheShortstore) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  EXPECT_EQ(idx.insert("A"), InsertResult::inserted);
  EXPECT_EQ(idx.insert("AB"), InsertResult::inserted);
  EXPECT_EQ(idx.insert("AB"), InsertResult::duplicate);
  EXPECT_EQ(idx.key_count(), 2u);
  EXPECT_EQ(idx.shortstore().size(), 2u);
  EXPECT_EQ(idx.stats().container_count, 0u);
  EXPECT_EQ(idx.length_count(1), 0u);  // histograms cover grid keys only
  EXPECT_EQ(idx.total_characters(), 3u);

  for (SearchStrategy strategy : {SearchStrategy::index_search, SearchStrategy::direct_search}) {
    SearchOutcome out = idx.search("AB", strategy);
    EXPECT_TRUE(out.found);
    EXPECT_EQ(out.containers_probed, 0u);
    EXPECT_FALSE(idx.search("BA", strategy).found);
  }

  EXPECT_EQ(idx.remove("A"), RemoveResult::removed);
  EXPECT_EQ(idx.remove("A"), RemoveResult::absent);
  EXPECT_EQ(idx.key_count(), 1u);
}

TEST_P(WalkthroughIndex, SuffixSearchPrunesThenFilters) {
  SuffixOutcome bcda = idx_.suffix_search("BCDA");
  EXPECT_EQ(bcda.survivors.positions(), (std::vector<std::uint32_t>{2, 3}));
  EXPECT_EQ(bcda.containers_probed, 2u);
  ASSERT_EQ(bcda.hits.size(), 1u);
  EXPECT_EQ(bcda.hits[0].key, "ABCDA");

  SuffixOutcome acda = idx_.suffix_search("ACDA");
  EXPECT_TRUE(acda.hits.empty());
  EXPECT_FALSE(acda.survivors.any());
  EXPECT_EQ(acda.containers_probed, 0u);

  // "DCDA" survives pruning at position 3 but the container filter rejects
  // the head: a suffix-level false positive.
  SuffixOutcome dcda = idx_.suffix_search("DCDA");
  EXPECT_TRUE(dcda.hits.empty());
  EXPECT_EQ(dcda.survivors.positions(), (std::vector<std::uint32_t>{3}));
  EXPECT_EQ(dcda.containers_probed, 1u);
}

TEST_P(WalkthroughIndex, SuffixOfExactlyOneTriplet) {
  EXPECT_EQ(idx_.suffix_keys("CDA"), (std::set<std::string>{"ABCDA", "CCDA"}));
  EXPECT_EQ(idx_.suffix_keys("AAD"), (std::set<std::string>{"BCDAAD"}));
}

TEST_P(WalkthroughIndex, ShortSuffixFallsBackToScan) {
  idx_.insert("DA");
  SuffixOutcome out = idx_.suffix_search("DA");
  EXPECT_TRUE(out.scanned);
  std::set<std::string> keys;
  for (const SuffixHit& hit : out.hits) keys.insert(hit.key);
  EXPECT_EQ(keys, (std::set<std::string>{"ABCDA", "CCDA", "DA"}));

  EXPECT_EQ(idx_.suffix_keys("D"), (std::set<std::string>{"BCDAAD"}));
}

TEST_P(WalkthroughIndex, OverlongSuffixMatchesNothing) {
  SuffixOutcome out = idx_.suffix_search("ABCABCABC");  // longer than l = 8
  EXPECT_TRUE(out.hits.empty());
  EXPECT_EQ(out.containers_probed, 0u);
  EXPECT_THROW(idx_.suffix_search(""), LengthError);
  EXPECT_THROW(idx_.suffix_search("AB#"), EncodingError);
}

TEST(Delete, ClearsMarkButNeverPositions) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  idx.insert("ACAD");
  EXPECT_EQ(idx.remove("ACAD"), RemoveResult::removed);

  EXPECT_FALSE(idx.grid().test_mark(T(cfg, "CAD"), 2));
  EXPECT_TRUE(idx.grid().test_position(T(cfg, "ACA"), 1));
  EXPECT_TRUE(idx.grid().test_position(T(cfg, "CAD"), 2));
  EXPECT_EQ(idx.container_at(T(cfg, "CAD"), 2), nullptr);
  EXPECT_EQ(idx.key_count(), 0u);
  EXPECT_EQ(idx.length_count(4), 0u);
  EXPECT_FALSE(idx.search("ACAD", SearchStrategy::direct_search).found);
}

TEST(Delete, SharedContainerSurvives) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  idx.insert("ACAD");
  idx.insert("BCAD");
  EXPECT_EQ(idx.remove("ACAD"), RemoveResult::removed);

  EXPECT_TRUE(idx.grid().test_mark(T(cfg, "CAD"), 2));
  ASSERT_NE(idx.container_at(T(cfg, "CAD"), 2), nullptr);
  EXPECT_EQ(idx.container_at(T(cfg, "CAD"), 2)->size(), 1u);
  EXPECT_TRUE(idx.search("BCAD", SearchStrategy::index_search).found);
  EXPECT_FALSE(idx.search("ACAD", SearchStrategy::index_search).found);
}

TEST(Delete, AbsentKeyLeavesStateUntouched) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  idx.insert("ACAD");
  EXPECT_EQ(idx.remove("ACAB"), RemoveResult::absent);
  EXPECT_EQ(idx.remove("DDD"), RemoveResult::absent);
  EXPECT_EQ(idx.key_count(), 1u);
  EXPECT_TRUE(idx.search("ACAD", SearchStrategy::index_search).found);
}

TEST(Update, DeleteThenInsert) {
  IndexConfig cfg("ABCD", 6);
  TripletIndex idx(cfg);
  idx.insert("ACAD");
  EXPECT_EQ(idx.update("ACAD", "BCAD"), UpdateResult::updated);
  EXPECT_FALSE(idx.search("ACAD", SearchStrategy::index_search).found);
  EXPECT_TRUE(idx.search("BCAD", SearchStrategy::index_search).found);
  EXPECT_EQ(idx.key_count(), 1u);

  // Absent old key: reported, and the new key is not inserted.
  EXPECT_EQ(idx.update("DDDD", "AAAA"), UpdateResult::absent_old);
  EXPECT_FALSE(idx.search("AAAA", SearchStrategy::index_search).found);

  idx.insert("CCCC");
  EXPECT_EQ(idx.update("BCAD", "CCCC"), UpdateResult::duplicate_new);
  EXPECT_FALSE(idx.search("BCAD", SearchStrategy::index_search).found);
  EXPECT_TRUE(idx.search("CCCC", SearchStrategy::index_search).found);
}

TEST_P(WalkthroughIndex, StatsCountContainers) {
  IndexStats s = idx_.stats();
  EXPECT_EQ(s.key_count, 4u);
  EXPECT_EQ(s.container_count, 4u);  // (CDA,2) (CDA,3) (CDB,3) (AAD,4)
  EXPECT_EQ(s.max_container_size, 1u);
  EXPECT_DOUBLE_EQ(s.avg_container_size, 1.0);
}

TEST(Stats, EmptyIndexIsAllZero) {
  TripletIndex idx(IndexConfig("ABCD", 6));
  IndexStats s = idx.stats();
  EXPECT_EQ(s.key_count, 0u);
  EXPECT_EQ(s.container_count, 0u);
  EXPECT_EQ(s.max_container_size, 0u);
  EXPECT_DOUBLE_EQ(s.avg_container_size, 0.0);
}

TEST(Stats, MatchesBruteForceRecount) {
  std::mt19937_64 rng(17);
  IndexConfig cfg("ABCD", 10);
  TripletIndex idx(cfg);
  NaiveOracle oracle;
  for (int i = 0; i < 200; ++i) {
    std::string key = random_key(rng, cfg.alphabet(), cfg.l());
    EXPECT_EQ(idx.insert(key) == InsertResult::inserted, oracle.insert(key));
  }
  std::uint64_t containers = 0, total = 0, max_size = 0, short_keys = 0;
  for (const auto& [ckey, container] : idx.containers()) {
    ++containers;
    total += container.size();
    max_size = std::max<std::uint64_t>(max_size, container.size());
  }
  for (const std::string& key : oracle.keys())
    if (key.size() < 3) ++short_keys;
  IndexStats s = idx.stats();
  EXPECT_EQ(s.key_count, oracle.size());
  EXPECT_EQ(s.container_count, containers);
  EXPECT_EQ(s.max_container_size, max_size);
  EXPECT_DOUBLE_EQ(s.avg_container_size, static_cast<double>(total) / containers);
  EXPECT_EQ(total + short_keys, oracle.size());
}

TEST_P(WalkthroughIndex, HistogramsTrackLengths) {
  EXPECT_EQ(idx_.length_count(4), 1u);
  EXPECT_EQ(idx_.length_count(5), 2u);
  EXPECT_EQ(idx_.length_count(6), 1u);
  EXPECT_EQ(idx_.length_count(7), 0u);
  EXPECT_EQ(idx_.length_count_at_least(1), 4u);
  EXPECT_EQ(idx_.length_count_at_least(5), 3u);
  EXPECT_EQ(idx_.length_count_at_least(6), 1u);
  EXPECT_EQ(idx_.length_count_at_least(7), 0u);
  EXPECT_EQ(idx_.total_characters(), 20u);

  idx_.remove("ADCDB");
  EXPECT_EQ(idx_.length_count(5), 1u);
  EXPECT_EQ(idx_.length_count_at_least(5), 2u);
  EXPECT_EQ(idx_.total_characters(), 15u);
}

TEST(Properties, NoFalseNegativesAndStrategyAgreement) {
  std::mt19937_64 rng(23);
  for (std::uint32_t k : {2u, 4u}) {
    IndexConfig cfg(std::string("ABCDEFGHIJKLMNOPQRSTUVWXYZ").substr(0, k), 12);
    TripletIndex idx(cfg);
    NaiveOracle oracle;
    for (int i = 0; i < 300; ++i) {
      std::string key = random_key(rng, cfg.alphabet(), cfg.l());
      idx.insert(key);
      oracle.insert(key);
    }
    for (const std::string& key : oracle.keys()) {
      EXPECT_TRUE(idx.search(key, SearchStrategy::index_search).found);
      EXPECT_TRUE(idx.search(key, SearchStrategy::direct_search).found);
    }
    for (int i = 0; i < 500; ++i) {
      std::string probe = random_key(rng, cfg.alphabet(), cfg.l());
      SearchOutcome via_index = idx.search(probe, SearchStrategy::index_search);
      SearchOutcome via_mark = idx.search(probe, SearchStrategy::direct_search);
      EXPECT_EQ(via_index.found, via_mark.found);
      EXPECT_EQ(via_index.found, oracle.contains(probe));
      // Index pruning is sound: a triplet miss can only happen on absent keys.
      if (via_index.pruned_at == PrunePoint::triplet) {
        EXPECT_FALSE(oracle.contains(probe));
      }
    }
  }
}

TEST(Properties, SuffixSearchMatchesOracle) {
  std::mt19937_64 rng(29);
  for (std::uint32_t k : {2u, 4u, 26u}) {
    IndexConfig cfg(std::string("ABCDEFGHIJKLMNOPQRSTUVWXYZ").substr(0, k), 12);
    for (ContainerVariant variant : {ContainerVariant::list, ContainerVariant::tree}) {
      TripletIndex idx(cfg, variant);
      NaiveOracle oracle;
      for (int i = 0; i < 250; ++i) {
        std::string key = random_key(rng, cfg.alphabet(), cfg.l());
        idx.insert(key);
        oracle.insert(key);
      }
      for (int i = 0; i < 200; ++i) {
        std::string suffix = random_key(rng, cfg.alphabet(), cfg.l());
        EXPECT_EQ(idx.suffix_keys(suffix), oracle.with_suffix(suffix)) << "suffix " << suffix;
      }
    }
  }
}

TEST(Properties, DeleteRestoresObservableState) {
  std::mt19937_64 rng(31);
  IndexConfig cfg("ABCD", 10);
  for (int round = 0; round < 20; ++round) {
    TripletIndex idx(cfg);
    NaiveOracle oracle;
    for (int i = 0; i < 60; ++i) {
      std::string key = random_key(rng, cfg.alphabet(), cfg.l());
      idx.insert(key);
      oracle.insert(key);
    }
    std::string extra;
    do {
      extra = random_key(rng, cfg.alphabet(), cfg.l());
    } while (oracle.contains(extra));

    auto mark_plane = [&] {
      std::vector<bool> bits;
      std::uint64_t cells = static_cast<std::uint64_t>(cfg.k()) * cfg.k() * cfg.k();
      for (std::uint64_t code = 0; code < cells; ++code) {
        TripletId t = triplet_from_code(code, cfg.k());
        for (std::uint32_t w = 1; w <= cfg.l(); ++w) bits.push_back(idx.grid().test_mark(t, w));
      }
      return bits;
    };
    auto container_dump = [&] {
      std::vector<std::pair<ContainerKey, std::vector<StoredKey>>> dump;
      for (const auto& [ckey, container] : idx.containers())
        dump.emplace_back(ckey, container.snapshot());
      return dump;
    };

    std::vector<bool> marks_before = mark_plane();
    auto containers_before = container_dump();
    IndexStats stats_before = idx.stats();
    std::uint64_t chars_before = idx.total_characters();

    EXPECT_EQ(idx.insert(extra), InsertResult::inserted);
    EXPECT_EQ(idx.remove(extra), RemoveResult::removed);

    EXPECT_EQ(mark_plane(), marks_before);
    EXPECT_EQ(container_dump(), containers_before);
    IndexStats stats_after = idx.stats();
    EXPECT_EQ(stats_after.key_count, stats_before.key_count);
    EXPECT_EQ(stats_after.container_count, stats_before.container_count);
    EXPECT_EQ(idx.total_characters(), chars_before);
    for (const std::string& key : oracle.keys()) {
      EXPECT_TRUE(idx.search(key, SearchStrategy::index_search).found);
    }
  }
}

TEST(Properties, EntriesWithPayloadsCoexist) {
  // Two originating keys may store the same fragment; they remain distinct
  // entries and deletion removes exactly one.
  IndexConfig cfg("ABCD", 8);
  TripletIndex idx(cfg);
  EXPECT_EQ(idx.insert_entry("DCB", "ABCD"), InsertResult::inserted);
  EXPECT_EQ(idx.insert_entry("DCB", "BBCD"), InsertResult::inserted);
  EXPECT_EQ(idx.insert_entry("DCB", "ABCD"), InsertResult::duplicate);
  EXPECT_EQ(idx.key_count(), 2u);
  EXPECT_EQ(idx.container_at(T(cfg, "DCB"), 1)->size(), 2u);
  EXPECT_TRUE(idx.search("DCB", SearchStrategy::index_search).found);

  SuffixOutcome out = idx.suffix_search("DCB");
  ASSERT_EQ(out.hits.size(), 2u);
  EXPECT_EQ(out.hits[0].payload, "ABCD");
  EXPECT_EQ(out.hits[1].payload, "BBCD");

  EXPECT_EQ(idx.remove_entry("DCB", "ABCD"), RemoveResult::removed);
  EXPECT_TRUE(idx.search("DCB", SearchStrategy::index_search).found);
  EXPECT_EQ(idx.remove_entry("DCB", "BBCD"), RemoveResult::removed);
  EXPECT_FALSE(idx.search("DCB", SearchStrategy::direct_search).found);
  EXPECT_EQ(idx.key_count(), 0u);
}

TEST(Restore, RebuildsAndValidates) {
  IndexConfig cfg("ABCD", 8);
  TripletIndex idx(cfg);
  for (const char* key : {"ABCDA", "ADCDB", "CCDA", "BCDAAD", "A", "DB"}) idx.insert(key);
  idx.remove("ADCDB");  // leave a stale position trail behind

  BitGrid grid(cfg);
  std::uint64_t cells = static_cast<std::uint64_t>(cfg.k()) * cfg.k() * cfg.k();
  for (std::uint64_t code = 0; code < cells; ++code) {
    TripletId t = triplet_from_code(code, cfg.k());
    for (std::uint32_t w = 1; w <= cfg.l(); ++w) {
      if (idx.grid().test_position(t, w)) grid.set_position(t, w);
      if (idx.grid().test_mark(t, w)) grid.set_mark(t, w);
    }
  }
  std::vector<std::pair<ContainerKey, std::vector<StoredKey>>> containers;
  for (const auto& [ckey, container] : idx.containers())
    containers.emplace_back(ckey, container.snapshot());
  std::vector<StoredKey> short_entries(idx.shortstore().entries().begin(),
                                       idx.shortstore().entries().end());

  TripletIndex copy = TripletIndex::restore(cfg, ContainerVariant::tree, std::move(grid),
                                            containers, short_entries);
  EXPECT_EQ(copy.key_count(), idx.key_count());
  EXPECT_EQ(copy.total_characters(), idx.total_characters());
  EXPECT_EQ(copy.length_count(5), idx.length_count(5));
  EXPECT_TRUE(copy.search("ABCDA", SearchStrategy::index_search).found);
  EXPECT_FALSE(copy.search("ADCDB", SearchStrategy::direct_search).found);
  EXPECT_TRUE(copy.grid().test_position(T(cfg, "ADC"), 1));  // stale trail preserved
  EXPECT_TRUE(copy.search("DB", SearchStrategy::index_search).found);

  // A container without its mark bit is rejected.
  BitGrid bare(cfg);
  EXPECT_THROW(TripletIndex::restore(cfg, ContainerVariant::list, std::move(bare), containers, {}),
               std::invalid_argument);

  // A mark bit without its container is rejected.
  BitGrid marked_only(cfg);
  marked_only.set_mark(T(cfg, "CDA"), 3);
  EXPECT_THROW(TripletIndex::restore(cfg, ContainerVariant::list, std::move(marked_only), {}, {}),
               std::invalid_argument);
}

}  // namespace
}  // namespace trigrid
