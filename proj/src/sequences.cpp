#include "chroma/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace chroma {

BigInt fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("negative Fibonacci index");
    BigInt a(0), b(1);
    for (int i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

ColourCluster sequence_cluster(SequenceKind kind, int num_colours) {
    if (num_colours < 1) throw std::invalid_argument("sequence needs at least one colour");
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(num_colours));
    for (int i = 1; i <= num_colours; ++i) {
        int mirrored = num_colours - (i - 1);
        if (kind == SequenceKind::s1_mirror_naturals) {
            sizes.push_back(mirrored);
        } else {
            BigInt f = fibonacci(mirrored);
            if (f > BigInt(1'000'000'000ll)) throw std::runtime_error("class size too large");
            sizes.push_back(static_cast<int>(f.to_long_long()));
        }
    }
    return ColourCluster(std::move(sizes));
}

}  // namespace chroma
