#include "chroma/formulas.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "chroma/sequences.hpp"

namespace chroma {

namespace {

struct IdInfo {
    FormulaId id;
    std::string_view name;
    bool interpreted;
};

// clang-format off
constexpr IdInfo kIds[] = {
    {FormulaId::TREE_M1_BOUNDS,   "TREE_M1_BOUNDS",   false},
    {FormulaId::TREE_M2,          "TREE_M2",          false},
    {FormulaId::TREE_M3,          "TREE_M3",          false},
    {FormulaId::COR_L2_BOUNDS,    "COR_L2_BOUNDS",    false},
    {FormulaId::P33_M1,           "P33_M1",           false},
    {FormulaId::P33_M2,           "P33_M2",           false},
    {FormulaId::P33_M3,           "P33_M3",           false},
    {FormulaId::L34_M2_CLOSED,    "L34_M2_CLOSED",    false},
    {FormulaId::L34_M3_CLOSED,    "L34_M3_CLOSED",    false},
    {FormulaId::P35_M1_MIN,       "P35_M1_MIN",       false},
    {FormulaId::P35_M1_MAX,       "P35_M1_MAX",       false},
    {FormulaId::P35_M2_MIN,       "P35_M2_MIN",       false},
    {FormulaId::P35_M2_MIN_PROOF, "P35_M2_MIN_PROOF", true},
    {FormulaId::P35_M2_MAX,       "P35_M2_MAX",       false},
    {FormulaId::P35_M3_MIN,       "P35_M3_MIN",       false},
    {FormulaId::P35_M3_MAX,       "P35_M3_MAX",       false},
    {FormulaId::C36_M1_MIN,       "C36_M1_MIN",       false},
    {FormulaId::C36_M1_MAX,       "C36_M1_MAX",       false},
    {FormulaId::C36_M2_MIN,       "C36_M2_MIN",       false},
    {FormulaId::C36_M2_MAX,       "C36_M2_MAX",       false},
    {FormulaId::C36_M3_MIN,       "C36_M3_MIN",       false},
    {FormulaId::C36_M3_MAX,       "C36_M3_MAX",       false},
    {FormulaId::P37_M1_MIN,       "P37_M1_MIN",       false},
    {FormulaId::P37_M1_MAX,       "P37_M1_MAX",       false},
    {FormulaId::P37_M2_MIN,       "P37_M2_MIN",       false},
    {FormulaId::P37_M2_MAX,       "P37_M2_MAX",       false},
    {FormulaId::P37_M3_MIN,       "P37_M3_MIN",       false},
    {FormulaId::P37_M3_MAX,       "P37_M3_MAX",       false},
    {FormulaId::C38_M1_MIN,       "C38_M1_MIN",       false},
    {FormulaId::C38_M1_MAX,       "C38_M1_MAX",       false},
    {FormulaId::C38_M2_MIN,       "C38_M2_MIN",       false},
    {FormulaId::C38_M2_MAX,       "C38_M2_MAX",       false},
    {FormulaId::C38_M3_MIN,       "C38_M3_MIN",       true},
    {FormulaId::C38_M3_MAX,       "C38_M3_MAX",       true},
    {FormulaId::T41_T1_M1_MIN,    "T41_T1_M1_MIN",    false},
    {FormulaId::T41_T1_M1_MAX,    "T41_T1_M1_MAX",    false},
    {FormulaId::T41_T1_M2_MIN,    "T41_T1_M2_MIN",    false},
    {FormulaId::T41_T1_M2_MAX,    "T41_T1_M2_MAX",    false},
    {FormulaId::T41_T1_M3_MIN,    "T41_T1_M3_MIN",    false},
    {FormulaId::T41_T1_M3_MAX,    "T41_T1_M3_MAX",    false},
    {FormulaId::T41_T2_M1_MIN,    "T41_T2_M1_MIN",    false},
    {FormulaId::T41_T2_M1_MAX,    "T41_T2_M1_MAX",    true},
    {FormulaId::T41_T2_M2_MIN,    "T41_T2_M2_MIN",    false},
    {FormulaId::T41_T2_M2_MAX,    "T41_T2_M2_MAX",    false},
    {FormulaId::T41_T2_M3_MIN,    "T41_T2_M3_MIN",    false},
    {FormulaId::T41_T2_M3_MAX,    "T41_T2_M3_MAX",    true},
    {FormulaId::R42_M1MIN_CLOSED, "R42_M1MIN_CLOSED", false},
    {FormulaId::T43_T1_M1_MIN,    "T43_T1_M1_MIN",    false},
    {FormulaId::T43_T1_M1_MAX,    "T43_T1_M1_MAX",    false},
    {FormulaId::T43_T1_M2_MIN,    "T43_T1_M2_MIN",    false},
    {FormulaId::T43_T1_M2_MAX,    "T43_T1_M2_MAX",    false},
    {FormulaId::T43_T1_M3_MIN,    "T43_T1_M3_MIN",    false},
    {FormulaId::T43_T1_M3_MAX,    "T43_T1_M3_MAX",    false},
    {FormulaId::T43_T2_M1_MIN,    "T43_T2_M1_MIN",    false},
    {FormulaId::T43_T2_M1_MAX,    "T43_T2_M1_MAX",    false},
    {FormulaId::T43_T2_M2_MIN,    "T43_T2_M2_MIN",    false},
    {FormulaId::T43_T2_M2_MAX,    "T43_T2_M2_MAX",    false},
    {FormulaId::T43_T2_M3_MIN,    "T43_T2_M3_MIN",    false},
    {FormulaId::T43_T2_M3_MAX,    "T43_T2_M3_MAX",    true},
    {FormulaId::FIB_SUM,          "FIB_SUM",          false},
    {FormulaId::FIB_SUMSQ,        "FIB_SUMSQ",        false},
    {FormulaId::FIB_SUMCUBE,      "FIB_SUMCUBE",      false},
    {FormulaId::FIB_SUMQUAD,      "FIB_SUMQUAD",      false},
};
// clang-format on

const IdInfo& info(FormulaId id) {
    for (const auto& entry : kIds)
        if (entry.id == id) return entry;
    throw std::invalid_argument("bad parameters");
}

using R = Rational;

BigInt bi(long long v) { return BigInt(v); }

// The recurring double sums from the completion corollaries.
BigInt sum_d1(int l) {  // sum_{j=2}^{l-1} sum_{i=j+1}^{l} j*i
    BigInt s(0);
    for (int j = 2; j <= l - 1; ++j)
        for (int i = j + 1; i <= l; ++i) s += bi(1ll * j * i);
    return s;
}
BigInt sum_d2(int l) {  // sum_{j=1}^{l-2} sum_{i=j+1}^{l-1} j*i
    BigInt s(0);
    for (int j = 1; j <= l - 2; ++j)
        for (int i = j + 1; i <= l - 1; ++i) s += bi(1ll * j * i);
    return s;
}
BigInt sum_d3(int l) {  // sum_{j=2}^{l-2} sum_{i=j+1}^{l-1} i*(l+1-2i)
    BigInt s(0);
    for (int j = 2; j <= l - 2; ++j)
        for (int i = j + 1; i <= l - 1; ++i) s += bi(1ll * i * (l + 1 - 2 * i));
    return s;
}
BigInt sum_e1(int l) {  // sum_{j=1}^{l-2} sum_{i=j+2}^{l} j*i
    BigInt s(0);
    for (int j = 1; j <= l - 2; ++j)
        for (int i = j + 2; i <= l; ++i) s += bi(1ll * j * i);
    return s;
}
BigInt sum_e2(int l) {  // sum_{j=1}^{l-1} sum_{i=1}^{j} i
    BigInt s(0);
    for (int j = 1; j <= l - 1; ++j)
        for (int i = 1; i <= j; ++i) s += bi(i);
    return s;
}
BigInt sum_e3(int l) {  // sum_{j=1}^{l-2} sum_{i=1}^{j} i, reading "i=i" as i=1
    BigInt s(0);
    for (int j = 1; j <= l - 2; ++j)
        for (int i = 1; i <= j; ++i) s += bi(i);
    return s;
}

R balanced_partite_formula(FormulaId id, long long n, long long r) {
    if (n < 1 || r < 2) throw std::invalid_argument("bad parameters");
    BigInt N(n);
    switch (id) {
        case FormulaId::P33_M1:
            return R(N * bi(r) * bi(r + 1) * bi(2 * r + 1), bi(6));
        case FormulaId::P33_M2: {
            BigInt s(0);
            for (long long i = 2; i <= r; ++i) s += bi(i) * bi(i) * bi(i - 1);
            return R(N * N * s, bi(2));
        }
        case FormulaId::P33_M3: {
            BigInt s(0);
            for (long long i = 1; i <= r - 1; ++i) s += bi(i) * bi(r - 1);
            return R(N * N * s);
        }
        case FormulaId::L34_M2_CLOSED: {
            BigInt t = bi(2) * BigInt::pow(bi(r), 4) - bi(r) * bi(2 * r + 1) * bi(r + 3);
            return R(N * N * t, bi(24));
        }
        case FormulaId::L34_M3_CLOSED:
            return R(N * N * bi(r) * bi(r - 1) * bi(r - 1), bi(2));
        default:
            throw std::invalid_argument("bad parameters");
    }
}

R cluster_formula(FormulaId id, const ColourCluster& c) {
    const int l = c.num_colours();
    auto th = [&](int i) { return bi(c.size_of(i)); };
    switch (id) {
        case FormulaId::P35_M1_MIN:
        case FormulaId::C36_M1_MIN:
        case FormulaId::P37_M1_MIN:
        case FormulaId::C38_M1_MIN: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += th(i) * bi(1ll * i * i);
            return R(s);
        }
        case FormulaId::P35_M1_MAX:
        case FormulaId::C36_M1_MAX:
        case FormulaId::P37_M1_MAX:
        case FormulaId::C38_M1_MAX: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += th(i) * bi(1ll * (l - i + 1) * (l - i + 1));
            return R(s);
        }
        case FormulaId::P35_M2_MIN: {
            BigInt s = bi(2ll * (l - 1));
            for (int i = 2; i <= l; ++i) s += th(i) * bi(i);
            return R(s);
        }
        case FormulaId::P35_M2_MIN_PROOF: {
            BigInt s = bi(2) * (th(1) - bi(1));
            for (int i = 2; i <= l; ++i) s += th(i) * bi(i);
            return R(s);
        }
        case FormulaId::P35_M2_MAX: {
            BigInt s = bi(l) * bi(1ll * (l - 1) * (l - 1));
            for (int i = 2; i <= l; ++i) s += th(i) * bi(1ll * l * (l - i + 1));
            return R(s);
        }
        case FormulaId::P35_M3_MIN: {
            BigInt s = bi(l - 1);
            for (int i = 2; i <= l; ++i) s += th(i) * bi(i - 1);
            return R(s);
        }
        case FormulaId::P35_M3_MAX: {
            BigInt s = bi(1ll * (l - 1) * (l - 1));
            for (int i = 2; i <= l; ++i) s += th(i) * bi(l - i + 1);
            return R(s);
        }
        case FormulaId::C36_M2_MIN:
            return cluster_formula(FormulaId::P35_M2_MIN, c) + R(sum_d1(l));
        case FormulaId::C36_M2_MAX:
            return cluster_formula(FormulaId::P35_M2_MAX, c) + R(sum_d2(l));
        case FormulaId::C36_M3_MIN:
            return cluster_formula(FormulaId::P35_M3_MIN, c) + R(sum_d3(l));
        case FormulaId::C36_M3_MAX:
            return cluster_formula(FormulaId::P35_M3_MAX, c) + R(sum_d3(l));
        case FormulaId::P37_M2_MIN: {
            BigInt s = bi(2) * (th(1) - bi(1));
            for (int i = 1; i <= l - 1; ++i) s += bi(1ll * i * (i + 1)) * th(i + 1);
            return R(s);
        }
        case FormulaId::P37_M2_MAX: {
            BigInt s = bi(1ll * l * (l - 1)) * (th(1) - bi(1));
            for (int i = 1; i <= l - 1; ++i) s += bi(1ll * i * (i + 1)) * th(l - i + 1);
            return R(s);
        }
        case FormulaId::P37_M3_MIN: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += th(i);
            return R(s - bi(l));
        }
        case FormulaId::P37_M3_MAX: {
            BigInt d = th(1) - bi(1);
            BigInt s = d * d;
            for (int i = 2; i <= l; ++i) s += bi(l - i + 1) * th(i);
            return R(s);
        }
        case FormulaId::C38_M2_MIN:
            return cluster_formula(FormulaId::P37_M2_MIN, c) + R(sum_e1(l));
        case FormulaId::C38_M2_MAX:
            return cluster_formula(FormulaId::P37_M2_MAX, c) + R(sum_e1(l));
        case FormulaId::C38_M3_MIN:
            return cluster_formula(FormulaId::P37_M3_MIN, c) + R(sum_e2(l)) - R(l - 2);
        case FormulaId::C38_M3_MAX:
            return cluster_formula(FormulaId::P37_M3_MAX, c) + R(sum_e3(l));
        default:
            throw std::invalid_argument("bad parameters");
    }
}

R mirror_naturals_formula(FormulaId id, int l) {
    if (l < 1) throw std::invalid_argument("bad parameters");
    switch (id) {
        case FormulaId::T41_T1_M1_MIN:
        case FormulaId::T41_T2_M1_MIN: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += bi(l - i + 1) * bi(1ll * i * i);
            return R(s);
        }
        case FormulaId::T41_T1_M1_MAX:
        case FormulaId::T41_T2_M1_MAX: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += BigInt::pow(bi(l - i + 1), 3);
            return R(s);
        }
        case FormulaId::T41_T1_M2_MIN: {
            BigInt s = bi(2ll * (l - 1));
            for (int i = 2; i <= l; ++i) s += bi(i) * bi(l - i + 1);
            return R(s + sum_d1(l));
        }
        case FormulaId::T41_T1_M2_MAX: {
            BigInt s = bi(l) * bi(1ll * (l - 1) * (l - 1));
            for (int i = 2; i <= l; ++i) s += bi(l) * bi(1ll * (l - i + 1) * (l - i + 1));
            return R(s + sum_d2(l));
        }
        case FormulaId::T41_T1_M3_MIN: {
            BigInt s = bi(l - 1);
            for (int i = 2; i <= l; ++i) s += bi(i - 1) * bi(l - i + 1);
            return R(s + sum_d3(l));
        }
        case FormulaId::T41_T1_M3_MAX: {
            BigInt s = bi(1ll * (l - 1) * (l - 1));
            for (int i = 2; i <= l; ++i) s += bi(1ll * (l - i + 1) * (l - i + 1));
            return R(s + sum_d3(l));
        }
        case FormulaId::T41_T2_M2_MIN: {
            BigInt s = bi(2ll * (l - 1));
            for (int i = 1; i <= l - 1; ++i) s += bi(1ll * i * (i + 1)) * bi(l - i);
            return R(s + sum_e1(l));
        }
        case FormulaId::T41_T2_M2_MAX: {
            BigInt s = bi(1ll * l * (l - 1)) * bi(l - 1);
            for (int i = 1; i <= l - 1; ++i) s += bi(2ll * i) * bi(i + 1) * bi(i - 1);
            return R(s + sum_e1(l));
        }
        case FormulaId::T41_T2_M3_MIN: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += bi(l - i + 1);
            return R(s - bi(l) + sum_e2(l) - bi(l - 2));
        }
        case FormulaId::T41_T2_M3_MAX: {
            BigInt s = bi(1ll * (l - 1) * (l - 1));
            for (int i = 2; i <= l; ++i) s += bi(1ll * (l - i + 1) * (l - i + 1));
            return R(s + sum_e3(l));
        }
        case FormulaId::R42_M1MIN_CLOSED: {
            BigInt L(l);
            BigInt poly = BigInt::pow(L, 4) + bi(4) * BigInt::pow(L, 3) + bi(5) * L * L + bi(2) * L;
            return R(poly, bi(12));
        }
        default:
            throw std::invalid_argument("bad parameters");
    }
}

R mirror_fibonacci_formula(FormulaId id, int l) {
    if (l < 1) throw std::invalid_argument("bad parameters");
    auto f = [](int k) { return fibonacci(k); };
    switch (id) {
        case FormulaId::T43_T1_M1_MIN:
        case FormulaId::T43_T2_M1_MIN: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += f(l - i + 1) * bi(1ll * i * i);
            return R(s);
        }
        case FormulaId::T43_T1_M1_MAX:
        case FormulaId::T43_T2_M1_MAX: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += f(l - i + 1) * bi(1ll * (l - i + 1) * (l - i + 1));
            return R(s);
        }
        case FormulaId::T43_T1_M2_MIN: {
            BigInt s = bi(2) * (f(l) - bi(1));
            for (int i = 2; i <= l; ++i) s += bi(i) * f(l - i + 1);
            return R(s + sum_d1(l));
        }
        case FormulaId::T43_T1_M2_MAX: {
            BigInt d = f(l) - bi(1);
            BigInt s = bi(l) * d * d;
            for (int i = 2; i <= l; ++i) s += f(l - i + 1) * bi(1ll * l * (l - i + 1));
            return R(s + sum_d2(l));
        }
        case FormulaId::T43_T1_M3_MIN: {
            BigInt s = bi(l - 1);
            for (int i = 2; i <= l; ++i) s += f(l - i + 1) * bi(i - 1);
            return R(s + sum_d3(l));
        }
        case FormulaId::T43_T1_M3_MAX: {
            BigInt s = bi(1ll * (l - 1) * (l - 1));
            for (int i = 2; i <= l; ++i) s += f(l - i + 1) * bi(l - i + 1);
            return R(s + sum_d3(l));
        }
        case FormulaId::T43_T2_M2_MIN: {
            BigInt s = bi(2) * (f(l) - bi(1));
            for (int i = 1; i <= l - 1; ++i) s += f(i - 1) * bi(1ll * i * (i + 1));
            return R(s + sum_e1(l));
        }
        case FormulaId::T43_T2_M2_MAX: {
            BigInt s = bi(1ll * l * (l - 1)) * (f(l) - bi(1));
            for (int i = 1; i <= l - 1; ++i) s += f(i) * bi(1ll * i * (i + 1));
            return R(s + sum_e1(l));
        }
        case FormulaId::T43_T2_M3_MIN: {
            BigInt s(0);
            for (int i = 1; i <= l; ++i) s += f(l - i + 1);
            return R(s - bi(l) + sum_e2(l) - bi(l - 2));
        }
        case FormulaId::T43_T2_M3_MAX: {
            BigInt d = f(l) - bi(1);
            BigInt s = d * d;
            for (int i = 2; i <= l; ++i) s += f(l - i + 1) * bi(l - i + 1);
            return R(s + sum_e3(l));
        }
        default:
            throw std::invalid_argument("bad parameters");
    }
}

R fibonacci_identity_formula(FormulaId id, int a, int l) {
    if (l < 1) throw std::invalid_argument("bad parameters");
    auto f = [](int k) { return fibonacci(k); };
    BigInt alt = (l + 1) % 2 == 0 ? bi(1) : bi(-1);  // (-1)^{l+1}
    switch (id) {
        case FormulaId::FIB_SUM:
            if (a < 1 || a > l) throw std::invalid_argument("bad parameters");
            return R(f(l + 2) - f(a + 1));
        case FormulaId::FIB_SUMSQ:
            return R(f(l + 1) * f(l + 2));
        case FormulaId::FIB_SUMCUBE:
            return R(f(3 * l + 2) + bi(6) * alt * f(l - 1) + bi(5));
        case FormulaId::FIB_SUMQUAD:
            return R(f(4 * l + 2) + bi(4) * alt * f(2 * l + 1) + bi(6ll * l) + bi(3));
        default:
            throw std::invalid_argument("bad parameters");
    }
}

enum class Family { tree, cor, p33, l34, cluster_t1, cluster_t1c, cluster_t2, cluster_t2c, t41, r42, t43, fib };

Family family_of(FormulaId id) {
    switch (id) {
        case FormulaId::TREE_M1_BOUNDS:
        case FormulaId::TREE_M2:
        case FormulaId::TREE_M3: return Family::tree;
        case FormulaId::COR_L2_BOUNDS: return Family::cor;
        case FormulaId::P33_M1:
        case FormulaId::P33_M2:
        case FormulaId::P33_M3: return Family::p33;
        case FormulaId::L34_M2_CLOSED:
        case FormulaId::L34_M3_CLOSED: return Family::l34;
        case FormulaId::P35_M1_MIN:
        case FormulaId::P35_M1_MAX:
        case FormulaId::P35_M2_MIN:
        case FormulaId::P35_M2_MIN_PROOF:
        case FormulaId::P35_M2_MAX:
        case FormulaId::P35_M3_MIN:
        case FormulaId::P35_M3_MAX: return Family::cluster_t1;
        case FormulaId::C36_M1_MIN:
        case FormulaId::C36_M1_MAX:
        case FormulaId::C36_M2_MIN:
        case FormulaId::C36_M2_MAX:
        case FormulaId::C36_M3_MIN:
        case FormulaId::C36_M3_MAX: return Family::cluster_t1c;
        case FormulaId::P37_M1_MIN:
        case FormulaId::P37_M1_MAX:
        case FormulaId::P37_M2_MIN:
        case FormulaId::P37_M2_MAX:
        case FormulaId::P37_M3_MIN:
        case FormulaId::P37_M3_MAX: return Family::cluster_t2;
        case FormulaId::C38_M1_MIN:
        case FormulaId::C38_M1_MAX:
        case FormulaId::C38_M2_MIN:
        case FormulaId::C38_M2_MAX:
        case FormulaId::C38_M3_MIN:
        case FormulaId::C38_M3_MAX: return Family::cluster_t2c;
        case FormulaId::R42_M1MIN_CLOSED: return Family::r42;
        case FormulaId::FIB_SUM:
        case FormulaId::FIB_SUMSQ:
        case FormulaId::FIB_SUMCUBE:
        case FormulaId::FIB_SUMQUAD: return Family::fib;
        default: break;
    }
    return formula_name(id)[1] == '4' && formula_name(id)[2] == '1' ? Family::t41 : Family::t43;
}

// Which index an extremal id reads, and which side.
struct ExtremalSlot {
    int index;    // 1, 2, 3
    bool is_min;
};

ExtremalSlot extremal_slot(FormulaId id) {
    std::string_view name = formula_name(id);
    std::size_t m = name.find("_M");
    int index = name[m + 2] - '0';
    bool is_min = name.find("_MIN") != std::string_view::npos;
    return {index, is_min};
}

long long pick(const ZagrebExtrema& ex, const ExtremalSlot& slot) {
    const IndexExtremum& e = slot.index == 1 ? ex.m1 : slot.index == 2 ? ex.m2 : ex.m3;
    return slot.is_min ? e.min_value : e.max_value;
}

const ColourCluster& require_cluster(const FormulaInput& in) {
    if (!in.cluster) throw std::invalid_argument("bad parameters");
    return *in.cluster;
}

const ColouredGraph& require_tree(const FormulaInput& in) {
    if (!in.tree) throw std::invalid_argument("bad parameters");
    return *in.tree;
}

// T41/T43 ids describe the completed embodiments of the sequence clusters.
EmbodimentKind completed_kind_of(FormulaId id) {
    return formula_name(id).find("_T1_") != std::string_view::npos
               ? EmbodimentKind::type1_complete
               : EmbodimentKind::type2_complete;
}

}  // namespace

std::string_view formula_name(FormulaId id) { return info(id).name; }
bool formula_interpreted(FormulaId id) { return info(id).interpreted; }

std::vector<FormulaId> all_formula_ids() {
    std::vector<FormulaId> out;
    for (const auto& entry : kIds) out.push_back(entry.id);
    return out;
}

FormulaValue FormulaValue::scalar(Rational v) { return FormulaValue{v, std::move(v), false}; }
FormulaValue FormulaValue::range(Rational lo, Rational hi) {
    return FormulaValue{std::move(lo), std::move(hi), true};
}

std::string FormulaValue::to_string() const {
    if (!interval) return lo.to_string();
    return lo.to_string() + ".." + hi.to_string();
}

std::string_view to_string(CompareStatus s) {
    switch (s) {
        case CompareStatus::match: return "match";
        case CompareStatus::mismatch: return "mismatch";
        case CompareStatus::bound_holds: return "bound_holds";
        case CompareStatus::bound_violated: return "bound_violated";
        case CompareStatus::non_integer: return "non_integer";
        case CompareStatus::error: return "error";
    }
    return "unknown";
}

const ZagrebExtrema& ExtremaCache::get(EmbodimentKind kind, const ColourCluster& c,
                                       int perm_limit) {
    if (c.num_colours() > perm_limit) throw std::runtime_error("factorial search refused");
    auto key = std::make_pair(static_cast<int>(kind), c.sizes());
    auto it = store.find(key);
    if (it == store.end())
        it = store.emplace(key, extremal_indices(build_embodiment(c, kind), perm_limit)).first;
    return it->second;
}

FormulaValue evaluate_formula(FormulaId id, const FormulaInput& in) {
    switch (family_of(id)) {
        case Family::tree: {
            long long n = in.n > 0 ? in.n
                                   : static_cast<long long>(require_tree(in).graph.order());
            if (id == FormulaId::TREE_M1_BOUNDS)
                return FormulaValue::range(R(n + 3), R(4 * n - 3));
            if (id == FormulaId::TREE_M2) return FormulaValue::scalar(R(2 * (n - 1)));
            return FormulaValue::scalar(R(n - 1));
        }
        case Family::cor: {
            const auto& c = require_cluster(in);
            if (c.num_colours() != 2) throw std::invalid_argument("bad parameters");
            long long n = c.total();
            return FormulaValue::range(R(n + 3), R(4 * n - 3));
        }
        case Family::p33:
        case Family::l34:
            return FormulaValue::scalar(balanced_partite_formula(id, in.n, in.r));
        case Family::cluster_t1:
        case Family::cluster_t1c:
        case Family::cluster_t2:
        case Family::cluster_t2c:
            return FormulaValue::scalar(cluster_formula(id, require_cluster(in)));
        case Family::t41:
        case Family::r42:
            return FormulaValue::scalar(mirror_naturals_formula(id, in.l));
        case Family::t43:
            return FormulaValue::scalar(mirror_fibonacci_formula(id, in.l));
        case Family::fib:
            return FormulaValue::scalar(fibonacci_identity_formula(id, in.a, in.l));
    }
    throw std::invalid_argument("bad parameters");
}

FormulaValue oracle_value(FormulaId id, const FormulaInput& in, const CompareOptions& opt) {
    ExtremaCache local;
    ExtremaCache& cache = opt.cache ? *opt.cache : local;

    auto extremal_of = [&](EmbodimentKind kind, const ColourCluster& c) -> const ZagrebExtrema& {
        return cache.get(kind, c, opt.perm_limit);
    };
    auto slot_value = [&](EmbodimentKind kind, const ColourCluster& c) {
        return FormulaValue::scalar(R(pick(extremal_of(kind, c), extremal_slot(id))));
    };

    switch (family_of(id)) {
        case Family::tree: {
            ZagrebExtrema ex = extremal_indices(require_tree(in), opt.perm_limit);
            if (id == FormulaId::TREE_M1_BOUNDS)
                return FormulaValue::range(R(ex.m1.min_value), R(ex.m1.max_value));
            const IndexExtremum& e = id == FormulaId::TREE_M2 ? ex.m2 : ex.m3;
            return FormulaValue::range(R(e.min_value), R(e.max_value));
        }
        case Family::cor: {
            ZagrebExtrema ex = extremal_indices(require_tree(in), opt.perm_limit);
            return FormulaValue::range(R(ex.m1.min_value), R(ex.m1.max_value));
        }
        case Family::p33:
        case Family::l34: {
            if (in.n < 1 || in.r < 2) throw std::invalid_argument("bad parameters");
            ColourCluster parts(std::vector<int>(static_cast<std::size_t>(in.r), in.n));
            ChromaticIndices ix = chromatic_indices(multipartite_max(parts));
            long long v = (id == FormulaId::P33_M1)                                     ? ix.m1
                          : (id == FormulaId::P33_M2 || id == FormulaId::L34_M2_CLOSED) ? ix.m2
                                                                                        : ix.m3;
            return FormulaValue::scalar(R(v));
        }
        case Family::cluster_t1:
            return slot_value(EmbodimentKind::type1_tree, require_cluster(in));
        case Family::cluster_t1c:
            return slot_value(EmbodimentKind::type1_complete, require_cluster(in));
        case Family::cluster_t2:
            return slot_value(EmbodimentKind::type2_tree, require_cluster(in));
        case Family::cluster_t2c:
            return slot_value(EmbodimentKind::type2_complete, require_cluster(in));
        case Family::t41:
        case Family::t43: {
            ColourCluster c = sequence_cluster(family_of(id) == Family::t41
                                                   ? SequenceKind::s1_mirror_naturals
                                                   : SequenceKind::s2_mirror_fibonacci,
                                               in.l);
            if (c.num_colours() == 1)
                return FormulaValue::scalar(
                    R(pick(extremal_indices(null_embodiment(c), opt.perm_limit),
                           extremal_slot(id))));
            return slot_value(completed_kind_of(id), c);
        }
        case Family::r42: {
            // Closure check: the closed form against its own summation.
            FormulaInput sub;
            sub.cluster = sequence_cluster(SequenceKind::s1_mirror_naturals, in.l);
            return evaluate_formula(FormulaId::P35_M1_MIN, sub);
        }
        case Family::fib: {
            if (in.l < 1) throw std::invalid_argument("bad parameters");
            int from = id == FormulaId::FIB_SUM ? in.a : 1;
            if (id == FormulaId::FIB_SUM && (in.a < 1 || in.a > in.l))
                throw std::invalid_argument("bad parameters");
            unsigned power = id == FormulaId::FIB_SUM      ? 1
                             : id == FormulaId::FIB_SUMSQ  ? 2
                             : id == FormulaId::FIB_SUMCUBE ? 3
                                                            : 4;
            BigInt s(0);
            for (int i = from; i <= in.l; ++i) s += BigInt::pow(fibonacci(i), power);
            return FormulaValue::scalar(R(s));
        }
    }
    throw std::invalid_argument("bad parameters");
}

namespace {

nlohmann::ordered_json params_echo(FormulaId id, const FormulaInput& in, bool canonicalized) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    switch (family_of(id)) {
        case Family::tree:
            if (!in.source.empty()) p["source"] = in.source;
            if (in.cluster) p["cluster"] = in.cluster->sizes();
            p["n"] = in.n > 0 ? in.n
                              : static_cast<int>(in.tree ? in.tree->graph.order() : 0);
            break;
        case Family::cor:
            if (!in.source.empty()) p["source"] = in.source;
            if (in.cluster) p["cluster"] = in.cluster->sizes();
            break;
        case Family::p33:
        case Family::l34:
            p["n"] = in.n;
            p["r"] = in.r;
            break;
        case Family::cluster_t1:
        case Family::cluster_t1c:
        case Family::cluster_t2:
        case Family::cluster_t2c:
            if (in.cluster) p["cluster"] = in.cluster->sizes();
            if (canonicalized) p["canonicalized"] = true;
            break;
        case Family::t41:
        case Family::r42:
        case Family::t43:
            p["l"] = in.l;
            break;
        case Family::fib:
            if (id == FormulaId::FIB_SUM) p["a"] = in.a;
            p["l"] = in.l;
            break;
    }
    return p;
}

bool wants_canonical_cluster(FormulaId id) {
    switch (family_of(id)) {
        case Family::cluster_t1:
        case Family::cluster_t1c:
        case Family::cluster_t2:
        case Family::cluster_t2c:
            return true;
        default:
            return false;
    }
}

}  // namespace

ComparisonRecord compare(FormulaId id, const FormulaInput& in, const CompareOptions& opt) {
    ComparisonRecord rec;
    rec.id = id;
    rec.interpreted = formula_interpreted(id);

    FormulaInput input = in;
    bool canonicalized = false;
    if (wants_canonical_cluster(id) && input.cluster) {
        auto [canon, map] = canonicalize(*input.cluster);
        if (canon.sizes() != input.cluster->sizes()) {
            input.cluster = canon;
            canonicalized = true;
        }
    }
    rec.params = params_echo(id, input, canonicalized);

    try {
        rec.formula = evaluate_formula(id, input);
        rec.oracle = oracle_value(id, input, opt);
        bool is_bounds = id == FormulaId::TREE_M1_BOUNDS || id == FormulaId::COR_L2_BOUNDS;
        if (is_bounds) {
            bool holds = rec.formula.lo <= rec.oracle.lo && rec.oracle.hi <= rec.formula.hi;
            rec.status = holds ? CompareStatus::bound_holds : CompareStatus::bound_violated;
        } else if (rec.formula.collapsed() && rec.oracle.collapsed() &&
                   rec.formula.lo == rec.oracle.lo) {
            rec.status = CompareStatus::match;
        } else if (opt.strict_integer &&
                   !(rec.formula.lo.is_integer() && rec.formula.hi.is_integer())) {
            rec.status = CompareStatus::non_integer;
        } else {
            rec.status = CompareStatus::mismatch;
        }
    } catch (const std::exception& e) {
        rec.status = CompareStatus::error;
        rec.error = e.what();
    }
    return rec;
}

std::vector<std::vector<int>> non_increasing_clusters(int l_min, int l_max, int r_max) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int length, int cap) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int r = cap; r >= 1; --r) {
            cur.push_back(r);
            self(self, length, r);
            cur.pop_back();
        }
    };
    for (int l = l_min; l <= l_max; ++l) extend(extend, l, r_max);
    return out;
}

namespace {

std::vector<FormulaId> family_ids(Family fam) {
    std::vector<FormulaId> out;
    for (const auto& entry : kIds)
        if (family_of(entry.id) == fam) out.push_back(entry.id);
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"tree", "cor", "p33", "l34", "p35", "c36", "p37",
            "c38", "t41", "r42", "t43", "fib", "structure"};
}

namespace {

nlohmann::ordered_json config_echo(const SuiteConfig& cfg, const std::vector<std::string>& suites) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["suites"] = suites;
    j["l_max"] = cfg.l_max;
    j["n_max"] = cfg.n_max;
    j["r_max"] = cfg.r_max;
    j["r42_l_max"] = cfg.r42_l_max;
    j["fib_l_max"] = cfg.fib_l_max;
    j["random_clusters"] = cfg.random_clusters;
    j["seed"] = cfg.seed;
    j["clusters"] = cfg.clusters;
    j["perm_limit"] = cfg.perm_limit;
    j["strict_integer"] = cfg.strict_integer;
    j["inject_structural_fault"] = cfg.inject_structural_fault;
    j["solver"] = {{"max_order", cfg.solver.max_order}, {"node_budget", cfg.solver.node_budget}};
    return j;
}

std::vector<std::string> expand_suites(const SuiteConfig& cfg) {
    std::vector<std::string> known = suite_names();
    if (cfg.suites.empty()) return known;
    for (const auto& s : cfg.suites)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::invalid_argument("bad config");
    std::vector<std::string> out = cfg.suites;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate_config(const SuiteConfig& cfg) {
    if (cfg.l_max < 1 || cfg.n_max < 0 || cfg.r_max < 1 || cfg.r42_l_max < 1 ||
        cfg.fib_l_max < 1 || cfg.random_clusters < 0 || cfg.perm_limit < 1)
        throw std::invalid_argument("bad config");
}

// Grid clusters, then supplied, then seeded random; canonical and distinct.
std::vector<ColourCluster> suite_clusters(const SuiteConfig& cfg) {
    std::vector<ColourCluster> out;
    std::set<std::vector<int>> seen;
    auto push = [&](std::vector<int> sizes) {
        auto [canon, map] = canonicalize(ColourCluster(std::move(sizes)));
        if (canon.num_colours() >= 2 && seen.insert(canon.sizes()).second)
            out.push_back(canon);
    };
    for (auto& sizes : non_increasing_clusters(2, cfg.l_max, cfg.r_max)) push(std::move(sizes));
    for (const auto& sizes : cfg.clusters) push(sizes);
    std::mt19937 rng(cfg.seed);
    for (int i = 0; i < cfg.random_clusters; ++i) {
        int l = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, cfg.l_max - 1)));
        std::vector<int> sizes;
        for (int k = 0; k < l; ++k)
            sizes.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.r_max)));
        push(std::move(sizes));
    }
    return out;
}

bool has_suite(const std::vector<std::string>& suites, std::string_view name) {
    return std::find(suites.begin(), suites.end(), std::string(name)) != suites.end();
}

}  // namespace

DiscrepancyReport run_suite(const SuiteConfig& cfg) {
    validate_config(cfg);
    auto suites = expand_suites(cfg);

    DiscrepancyReport report;
    report.config = config_echo(cfg, suites);

    ExtremaCache cache;
    CompareOptions opt{cfg.perm_limit, cfg.strict_integer, &cache};
    auto clusters = suite_clusters(cfg);

    // Guard violations surface as per-record errors, never as silent gaps.
    auto emit_cluster_family = [&](std::string_view suite, Family fam) {
        if (!has_suite(suites, std::string(suite))) return;
        for (const auto& c : clusters)
            for (FormulaId id : family_ids(fam)) {
                FormulaInput in;
                in.cluster = c;
                report.records.push_back(compare(id, in, opt));
            }
    };

    if (has_suite(suites, "tree") || has_suite(suites, "cor")) {
        for (const auto& c : clusters) {
            if (c.num_colours() != 2 || c.total() < 4) continue;
            for (TreeKind kind : {TreeKind::type1, TreeKind::type2}) {
                ColouredGraph tree =
                    kind == TreeKind::type1 ? type1_tree(c) : type2_tree(c);
                FormulaInput in;
                in.tree = &tree;
                in.cluster = c;
                in.n = static_cast<int>(tree.graph.order());
                in.source = kind == TreeKind::type1 ? "type1" : "type2";
                if (has_suite(suites, "tree")) {
                    report.records.push_back(compare(FormulaId::TREE_M1_BOUNDS, in, opt));
                    report.records.push_back(compare(FormulaId::TREE_M2, in, opt));
                    report.records.push_back(compare(FormulaId::TREE_M3, in, opt));
                }
                if (has_suite(suites, "cor"))
                    report.records.push_back(compare(FormulaId::COR_L2_BOUNDS, in, opt));
            }
        }
    }

    if (has_suite(suites, "p33") || has_suite(suites, "l34")) {
        for (int n = 1; n <= cfg.n_max; ++n)
            for (int r = 2; r <= cfg.r_max; ++r) {
                FormulaInput in;
                in.n = n;
                in.r = r;
                if (has_suite(suites, "p33")) {
                    report.records.push_back(compare(FormulaId::P33_M1, in, opt));
                    report.records.push_back(compare(FormulaId::P33_M2, in, opt));
                    report.records.push_back(compare(FormulaId::P33_M3, in, opt));
                }
                if (has_suite(suites, "l34")) {
                    report.records.push_back(compare(FormulaId::L34_M2_CLOSED, in, opt));
                    report.records.push_back(compare(FormulaId::L34_M3_CLOSED, in, opt));
                }
            }
    }

    emit_cluster_family("p35", Family::cluster_t1);
    emit_cluster_family("c36", Family::cluster_t1c);
    emit_cluster_family("p37", Family::cluster_t2);
    emit_cluster_family("c38", Family::cluster_t2c);

    for (auto [suite, fam] : {std::pair{"t41", Family::t41}, std::pair{"t43", Family::t43}}) {
        if (!has_suite(suites, suite)) continue;
        for (int l = 2; l <= cfg.l_max; ++l)
            for (FormulaId id : family_ids(fam)) {
                FormulaInput in;
                in.l = l;
                report.records.push_back(compare(id, in, opt));
            }
    }

    if (has_suite(suites, "r42"))
        for (int l = 1; l <= cfg.r42_l_max; ++l) {
            FormulaInput in;
            in.l = l;
            report.records.push_back(compare(FormulaId::R42_M1MIN_CLOSED, in, opt));
        }

    if (has_suite(suites, "fib")) {
        for (int l = 1; l <= cfg.fib_l_max; ++l)
            for (int a = 1; a <= l; ++a) {
                FormulaInput in;
                in.a = a;
                in.l = l;
                report.records.push_back(compare(FormulaId::FIB_SUM, in, opt));
            }
        for (FormulaId id :
             {FormulaId::FIB_SUMSQ, FormulaId::FIB_SUMCUBE, FormulaId::FIB_SUMQUAD})
            for (int l = 1; l <= cfg.fib_l_max; ++l) {
                FormulaInput in;
                in.l = l;
                report.records.push_back(compare(id, in, opt));
            }
    }

    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const ComparisonRecord& a, const ComparisonRecord& b) {
                         if (a.id != b.id) return a.id < b.id;
                         return a.params.dump() < b.params.dump();
                     });

    if (has_suite(suites, "structure")) report.structure = structural_suite(cfg);
    return report;
}

namespace {

Graph drop_first_edge(const Graph& g) {
    if (g.size() == 0) return g;
    std::vector<EdgeLabel> edges(g.edges().begin() + 1, g.edges().end());
    return Graph::from(g.vertices(), std::move(edges));
}

}  // namespace

std::vector<StructureRecord> structural_suite(const SuiteConfig& cfg) {
    validate_config(cfg);
    std::vector<StructureRecord> out;
    auto clusters = suite_clusters(cfg);

    auto record = [&](std::string check, nlohmann::ordered_json params, bool pass,
                      std::string detail) {
        out.push_back(StructureRecord{std::move(check), std::move(params), pass,
                                      pass ? std::string{} : std::move(detail)});
    };

    for (const auto& c : clusters) {
        const int l = c.num_colours();
        const long long total = c.total();
        nlohmann::ordered_json base{{"cluster", c.sizes()}};

        std::vector<std::pair<TreeKind, std::string>> kinds{{TreeKind::type1, "type1"},
                                                            {TreeKind::type2, "type2"}};
        std::vector<ColouredGraph> completed;
        for (auto& [kind, name] : kinds) {
            ColouredGraph tree = kind == TreeKind::type1 ? type1_tree(c) : type2_tree(c);
            if (cfg.inject_structural_fault)
                tree = ColouredGraph::make(drop_first_edge(tree.graph), tree.colouring, c);
            nlohmann::ordered_json params{{"kind", name}, {"cluster", c.sizes()}};

            GraphStats st = graph_stats(tree.graph);
            bool minimal = st.connected && st.acyclic &&
                           st.size == static_cast<std::size_t>(total - 1) &&
                           is_proper(tree.graph, tree.colouring);
            record("tree_minimum_edges", params, minimal,
                   "expected connected acyclic proper tree of size total-1");

            if (total <= 20)
                record("rainbow_subtree", params, has_rainbow_connected_subgraph(tree),
                       "expected a rainbow connected subgraph");

            ColouredGraph done = complete_embodiment(tree, kind);
            long long added = static_cast<long long>(done.graph.size()) -
                              static_cast<long long>(tree.graph.size());
            record("completion_edge_count", params,
                   added == 1ll * (l - 1) * (l - 2) / 2 && is_proper(done.graph, done.colouring),
                   "expected (l-1)(l-2)/2 new edges and a proper colouring");

            if (done.graph.order() <= cfg.solver.max_order)
                record("chromatic_number_complete", params,
                       chromatic_number_exact(done.graph, cfg.solver) == l,
                       "expected chi equal to the number of colours");
            completed.push_back(std::move(done));
        }

        ColouredGraph thorn = thorn_embodiment(c);
        record("thorn_size", base,
               thorn.graph.size() == completed[0].graph.size() &&
                   is_proper(thorn.graph, thorn.colouring),
               "expected thorn size to equal the completed Type-I size");
        if (thorn.graph.order() <= cfg.solver.max_order)
            record("thorn_chromatic", base, chromatic_number_exact(thorn.graph, cfg.solver) == l,
                   "expected chi equal to the number of colours");

        ColouredGraph multi = multipartite_max(c);
        long long sq_sum = 0;
        for (int r : c.sizes()) sq_sum += 1ll * r * r;
        record("multipartite_size", base,
               static_cast<long long>(multi.graph.size()) == (total * total - sq_sum) / 2,
               "expected (total^2 - sum r_i^2)/2 edges");
        bool contains = true;
        for (const auto& g : {completed[0].graph, completed[1].graph, thorn.graph})
            for (const auto& e : g.edges())
                if (!multi.graph.has_edge(e.first, e.second)) contains = false;
        record("multipartite_contains", base, contains,
               "expected every completed embodiment edge inside the multipartite graph");

        if (l <= cfg.perm_limit && total <= 16) {
            ZagrebExtrema a = extremal_indices(completed[0], cfg.perm_limit);
            ZagrebExtrema b = extremal_indices(completed[1], cfg.perm_limit);
            ZagrebExtrema t = extremal_indices(thorn, cfg.perm_limit);
            record("equal_m1_extrema", base,
                   a.m1.min_value == b.m1.min_value && b.m1.min_value == t.m1.min_value &&
                       a.m1.max_value == b.m1.max_value && b.m1.max_value == t.m1.max_value,
                   "expected identical m1 extrema across embodiments of one cluster");
        }
    }
    return out;
}

std::size_t DiscrepancyReport::structure_failures() const {
    std::size_t n = 0;
    for (const auto& rec : structure)
        if (!rec.pass) ++n;
    return n;
}

nlohmann::ordered_json report_to_json(const DiscrepancyReport& report) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["config"] = report.config;

    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    std::map<std::string_view, std::size_t> counts;
    for (const auto& rec : report.records) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        r["id"] = std::string(formula_name(rec.id));
        r["params"] = rec.params;
        if (rec.status == CompareStatus::error) {
            r["formula"] = nullptr;
            r["oracle"] = nullptr;
        } else {
            r["formula"] = rec.formula.to_string();
            r["oracle"] = rec.oracle.to_string();
        }
        r["status"] = std::string(to_string(rec.status));
        r["interpreted"] = rec.interpreted;
        if (!rec.error.empty()) r["error"] = rec.error;
        records.push_back(std::move(r));
        ++counts[to_string(rec.status)];
    }
    j["records"] = std::move(records);

    nlohmann::ordered_json structure = nlohmann::ordered_json::array();
    for (const auto& rec : report.structure) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        r["check"] = rec.check;
        r["params"] = rec.params;
        r["pass"] = rec.pass;
        if (!rec.detail.empty()) r["detail"] = rec.detail;
        structure.push_back(std::move(r));
    }
    j["structure"] = std::move(structure);

    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    summary["records"] = report.records.size();
    for (std::string_view key :
         {"match", "mismatch", "bound_holds", "bound_violated", "non_integer", "error"})
        summary[std::string(key)] = counts.count(key) ? counts[key] : 0;
    summary["structure_checks"] = report.structure.size();
    summary["structure_failures"] = report.structure_failures();
    j["summary"] = std::move(summary);
    return j;
}

std::string report_to_string(const DiscrepancyReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

}  // namespace chroma
