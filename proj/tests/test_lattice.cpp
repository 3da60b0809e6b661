#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "delpezzo/lattice.hpp"

using namespace delpezzo;

namespace {
LatticeClass LC(std::initializer_list<long> cs) { return LatticeClass(std::vector<long>(cs)); }

/* Independent oracle: plain box enumeration over |c_i| <= box with a
 * prefix square cutoff, no Cauchy-Schwarz reasoning shared with the
 * implementation. */
std::vector<LatticeClass> box_enumerate(int n, long vv, long vk, long box) {
    std::vector<LatticeClass> out;
    std::vector<long> c(static_cast<size_t>(n) + 1, -box);
    while (true) {
        long self = c[0] * c[0];
        for (int i = 1; i <= n; ++i) self -= c[i] * c[i];
        if (self == vv) {
            long k = -3 * c[0];
            for (int i = 1; i <= n; ++i) k -= c[i];
            if (k == vk) out.emplace_back(c);
        }
        int pos = n;
        while (pos >= 0 && c[pos] == box) c[pos--] = -box;
        if (pos < 0) break;
        ++c[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("pairing and canonical class") {
    auto K3 = canonical_class(3);
    CHECK(pairing(K3, K3) == 6);  // 9 - 3
    CHECK(pairing(canonical_class(8), canonical_class(8)) == 1);
    auto e1 = LatticeClass::basis(2, 1);
    CHECK(pairing(e1, e1) == -1);
    auto line = LC({1, -1, -1});
    CHECK(pairing(line, line) == -1);
    CHECK(pairing(line, canonical_class(2)) == -1);
    CHECK_THROWS_AS(pairing(e1, K3), std::invalid_argument);
    CHECK(LC({1, -1, -1}).str() == "e0 - e1 - e2");
    CHECK(LC({-3, 1, 1}).str() == "-3e0 + e1 + e2");
    CHECK(LatticeClass::zero(2).str() == "0");
}

TEST_CASE("exceptional class counts 1..8") {
    const long expected[] = {1, 3, 6, 10, 16, 27, 56, 240};
    for (int n = 1; n <= 8; ++n) {
        auto classes = enumerate_exceptional_classes(n);
        CHECK(static_cast<long>(classes.size()) == expected[n - 1]);
        auto K = canonical_class(n);
        for (const auto& v : classes) {
            CHECK(pairing(v, v) == -1);
            CHECK(pairing(v, K) == -1);
        }
        CHECK(std::is_sorted(classes.begin(), classes.end()));
        CHECK(std::adjacent_find(classes.begin(), classes.end()) == classes.end());
    }
    CHECK_THROWS_AS(enumerate_exceptional_classes(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_exceptional_classes(9), std::invalid_argument);
}

TEST_CASE("exceptional classes match the box oracle exactly") {
    // box 7 is past every certified bound for n <= 5
    for (int n = 1; n <= 5; ++n) {
        auto fast = enumerate_exceptional_classes(n);
        auto slow = box_enumerate(n, -1, -1, 7);
        CHECK(fast == slow);
    }
    // n = 6: the classical 27 lines
    auto lines = enumerate_exceptional_classes(6);
    auto oracle = box_enumerate(6, -1, -1, 4);
    CHECK(lines == oracle);
    CHECK(lines.size() == 27);
}

TEST_CASE("root counts and closure under negation") {
    const long expected[] = {0, 2, 8, 20, 40, 72, 126, 240};
    for (int n = 1; n <= 8; ++n) {
        auto roots = enumerate_roots(n);
        CHECK(static_cast<long>(roots.size()) == expected[n - 1]);
        std::set<LatticeClass> all(roots.begin(), roots.end());
        for (const auto& v : roots) CHECK(all.count(-v) == 1);
    }
    // oracle cross-check on small ranks
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_roots(n) == box_enumerate(n, -2, 0, 7));
    CHECK(enumerate_roots(2) == std::vector<LatticeClass>{LC({0, -1, 1}), LC({0, 1, -1})});
}

TEST_CASE("dynkin labels parse and print") {
    CHECK(DynkinType::parse("E8").str() == "E8");
    CHECK(DynkinType::parse("2A3+A1").str() == "2A3+A1");
    CHECK(DynkinType::parse("A1+2A3").str() == "2A3+A1");  // canonical order
    CHECK(DynkinType::parse("A2+E6").str() == "E6+A2");
    CHECK(DynkinType::parse("D4+3A1").str() == "D4+3A1");
    CHECK(DynkinType::parse("A5+A1+A2").str() == "A5+A2+A1");
    CHECK(DynkinType::parse("2D4").total_rank() == 8);
    CHECK(DynkinType::parse("0").empty());
    CHECK(DynkinType::parse("0").str() == "0");
    CHECK(DynkinType::parse("E8") == DynkinType::parse("E8"));
    CHECK(DynkinType::parse("E7+A1") != DynkinType::parse("E8"));
    CHECK_THROWS_AS(DynkinType::parse("B2"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType::parse("A0"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType::parse(""), std::invalid_argument);
}

TEST_CASE("dynkin recognition on explicit configurations") {
    // path of three: A3
    auto a3 = dynkin_type({LC({0, 1, -1, 0, 0}), LC({0, 0, 1, -1, 0}), LC({0, 0, 0, 1, -1})});
    CHECK(a3.str() == "A3");

    // permutation invariance
    auto a3p = dynkin_type({LC({0, 0, 0, 1, -1}), LC({0, 1, -1, 0, 0}), LC({0, 0, 1, -1, 0})});
    CHECK(a3p == a3);

    // a 2-chain plus an orthogonal isolated root
    auto mixed =
        dynkin_type({LC({0, 1, -1, 0, 0, 0}), LC({0, 0, 1, -1, 0, 0}), LC({0, 0, 0, 0, 1, -1})});
    CHECK(mixed.str() == "A2+A1");

    // D4: star with centre e2-e3; arms e1-e2, e3-e4, e0-e1-e2-e6
    std::vector<LatticeClass> d4 = {LC({0, 0, 1, -1, 0, 0, 0}), LC({0, 1, -1, 0, 0, 0, 0}),
                                    LC({0, 0, 0, 1, -1, 0, 0}), LC({1, -1, -1, 0, 0, 0, -1})};
    CHECK(dynkin_type(d4).str() == "D4");

    // D5: extend the e3-e4 arm by e4-e5
    auto d5 = d4;
    d5.push_back(LC({0, 0, 0, 0, 1, -1, 0}));
    CHECK(dynkin_type(d5).str() == "D5");

    // E6, E7, E8: path e1-e2, ..., plus e0-e1-e2-e3 hung on e3-e4
    for (int n : {6, 7, 8}) {
        std::vector<LatticeClass> roots;
        std::vector<long> triple(static_cast<size_t>(n) + 1, 0);
        triple[0] = 1;
        triple[1] = triple[2] = triple[3] = -1;
        roots.emplace_back(triple);
        for (int i = 1; i < n; ++i) {
            std::vector<long> c(static_cast<size_t>(n) + 1, 0);
            c[static_cast<size_t>(i)] = 1;
            c[static_cast<size_t>(i) + 1] = -1;
            roots.emplace_back(c);
        }
        CHECK(dynkin_type(roots).str() == std::string("E") + std::to_string(n));
    }

    CHECK(dynkin_type({}).empty());
}

TEST_CASE("dynkin recognition rejects non-ADE input") {
    // triangle (cycle): e1-e2, e2-e3, e3-e1 pair 1 cyclically
    CHECK_THROWS_AS(
        dynkin_type({LC({0, 1, -1, 0}), LC({0, 0, 1, -1}), LC({0, -1, 0, 1})}),
        std::domain_error);
    // duplicate root
    CHECK_THROWS_AS(dynkin_type({LC({0, 1, -1}), LC({0, 1, -1})}), std::invalid_argument);
    // not a root: e1 has K-degree -1
    CHECK_THROWS_AS(dynkin_type({LatticeClass::basis(2, 1)}), std::invalid_argument);
    // pairing 2: v and -v are distinct but pair to 2
    CHECK_THROWS_AS(dynkin_type({LC({0, 1, -1}), LC({0, -1, 1})}), std::invalid_argument);
}

TEST_CASE("random root subsets never silently misclassify") {
    // sample subsets of the n=8 root system; whenever dynkin_type
    // accepts, the reported rank must equal the subset size and every
    // component must be a legal ADE label
    auto roots = enumerate_roots(8);
    std::mt19937_64 rng(17);
    int accepted = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LatticeClass> sub;
        size_t want = 1 + rng() % 6;
        std::set<size_t> seen;
        while (sub.size() < want) {
            size_t k = rng() % roots.size();
            if (seen.insert(k).second) sub.push_back(roots[k]);
        }
        bool pairings_ok = true;
        for (size_t i = 0; i < sub.size() && pairings_ok; ++i)
            for (size_t j = i + 1; j < sub.size(); ++j) {
                long p = pairing(sub[i], sub[j]);
                if (p != 0 && p != 1) {
                    pairings_ok = false;
                    break;
                }
            }
        if (!pairings_ok) continue;
        try {
            auto t = dynkin_type(sub);
            CHECK(t.total_rank() == static_cast<int>(sub.size()));
            ++accepted;
        } catch (const std::domain_error&) {
            // non-ADE shape; acceptable
        }
    }
    CHECK(accepted > 20);
}
