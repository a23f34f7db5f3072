#ifndef CHROMA_SEQUENCES_HPP
#define CHROMA_SEQUENCES_HPP

#include "chroma/bigint.hpp"
#include "chroma/cluster.hpp"

namespace chroma {

enum class SequenceKind {
    s1_mirror_naturals,   // a_i = l - (i-1)
    s2_mirror_fibonacci,  // a_i = f_{l-(i-1)}
};

// f_0 = 0, f_1 = 1, f_n = f_{n-1} + f_{n-2}, by iteration.
BigInt fibonacci(int n);

// s1(l) = [l, l-1, ..., 1]; s2(l) = [f_l, f_{l-1}, ..., f_1]. Both are
// non-increasing, so they are already initiation-ordered.
ColourCluster sequence_cluster(SequenceKind kind, int num_colours);

}  // namespace chroma

#endif
