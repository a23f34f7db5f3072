#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chroma/sequences.hpp"

using namespace chroma;

TEST_CASE("fibonacci base cases and small values") {
    CHECK(fibonacci(0) == BigInt(0));
    CHECK(fibonacci(1) == BigInt(1));
    CHECK(fibonacci(2) == BigInt(1));
    CHECK(fibonacci(10) == BigInt(55));
    CHECK(fibonacci(25) == BigInt(75025));
    CHECK_THROWS(fibonacci(-1));
}

TEST_CASE("fibonacci stays exact far beyond 64 bits") {
    CHECK(fibonacci(102).to_string() == "927372692193078999176");
    CHECK(fibonacci(300).to_string() ==
          "222232244629420445529739893461909967206666939096499764990979600");
}

TEST_CASE("sequence clusters") {
    CHECK(sequence_cluster(SequenceKind::s1_mirror_naturals, 4).sizes() ==
          std::vector<int>{4, 3, 2, 1});
    CHECK(sequence_cluster(SequenceKind::s2_mirror_fibonacci, 4).sizes() ==
          std::vector<int>{3, 2, 1, 1});
    CHECK(sequence_cluster(SequenceKind::s1_mirror_naturals, 1).sizes() == std::vector<int>{1});
    CHECK_THROWS(sequence_cluster(SequenceKind::s1_mirror_naturals, 0));
}

TEST_CASE("sequence totals follow the closed sums") {
    for (int l = 1; l <= 25; ++l) {
        CHECK(sequence_cluster(SequenceKind::s1_mirror_naturals, l).total() ==
              1ll * l * (l + 1) / 2);
        CHECK(BigInt(sequence_cluster(SequenceKind::s2_mirror_fibonacci, l).total()) ==
              fibonacci(l + 2) - BigInt(1));
    }
}

TEST_CASE("sequence clusters are non-increasing") {
    for (int l = 1; l <= 20; ++l)
        for (SequenceKind kind :
             {SequenceKind::s1_mirror_naturals, SequenceKind::s2_mirror_fibonacci}) {
            auto sizes = sequence_cluster(kind, l).sizes();
            for (std::size_t i = 0; i + 1 < sizes.size(); ++i) CHECK(sizes[i] >= sizes[i + 1]);
        }
}
