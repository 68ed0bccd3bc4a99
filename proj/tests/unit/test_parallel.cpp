#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "bohrlab/parallel.hpp"

namespace bohr {
namespace {

TEST(Parallel, MapKeepsIndexOrder)
{
    const auto squares = parallel_map(1000, [](std::size_t i) { return i * i; });
    ASSERT_EQ(squares.size(), 1000u);
    for (std::size_t i = 0; i < squares.size(); ++i) {
        EXPECT_EQ(squares[i], i * i);
    }
    EXPECT_TRUE(parallel_map(0, [](std::size_t i) { return i; }).empty());
}

TEST(Parallel, EveryIndexRunsOnce)
{
    std::vector<std::atomic<int>> hits(500);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) {
        EXPECT_EQ(h.load(), 1);
    }
}

TEST(Parallel, RethrowsWorkerException)
{
    EXPECT_THROW(parallel_for(100,
                              [](std::size_t i) {
                                  if (i == 37) {
                                      throw std::runtime_error("boom");
                                  }
                              }),
                 std::runtime_error);
}

TEST(Parallel, ThreadCountFromEnvironment)
{
    ::setenv("BOHR_LAB_THREADS", "3", 1);
    EXPECT_EQ(thread_count(), 3u);
    ::setenv("BOHR_LAB_THREADS", "garbage", 1);
    EXPECT_GE(thread_count(), 1u);
    ::unsetenv("BOHR_LAB_THREADS");
    EXPECT_GE(thread_count(), 1u);
}

} // namespace
} // namespace bohr
