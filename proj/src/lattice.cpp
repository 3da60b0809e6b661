#include "delpezzo/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace delpezzo {

namespace {

void check_rank(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("blow-up count must be in 1..8, got " + std::to_string(n));
}

long isqrt_floor(long x) {
    if (x < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/* Fill positions i..n with integers summing to `sum` and with squares
 * summing to `sq`; prune by Cauchy-Schwarz on the suffix. */
void descend(std::vector<long>& c, size_t i, long sum, long sq,
             std::vector<LatticeClass>& out) {
    const long k = static_cast<long>(c.size() - i);
    if (k == 0) {
        if (sum == 0 && sq == 0) out.emplace_back(c);
        return;
    }
    if (sq < 0 || sum * sum > k * sq) return;
    const long bound = isqrt_floor(sq);
    for (long v = -bound; v <= bound; ++v) {
        c[i] = v;
        descend(c, i + 1, sum - v, sq - v * v, out);
    }
    c[i] = 0;
}

/* All v with v.v = vv and v.K = vk. The constraints pin, for each c0,
 * sum c_i = -3c0 - vk and sum c_i^2 = c0^2 - vv; Cauchy-Schwarz then
 * bounds c0 itself: (-3c0 - vk)^2 <= n (c0^2 - vv). */
std::vector<LatticeClass> enumerate_with(int n, long vv, long vk) {
    check_rank(n);
    std::vector<LatticeClass> out;
    // Certified c0 window: (9-n) c0^2 + 6 vk c0 + (vk^2 + n vv) <= 0,
    // solved exactly by walking out from the vertex of the quadratic
    // (positive leading coefficient for n <= 8, so the feasible set is
    // one interval). The truncated vertex can land one off the real
    // minimum, so all three nearby integers are tried as seeds.
    const long A = 9 - n, B = 6 * vk, C = vk * vk + n * vv;
    auto feasible = [&](long c0) { return A * c0 * c0 + B * c0 + C <= 0; };
    const long v0 = -B / (2 * A);
    long seed = v0;
    bool found = false;
    for (long cand : {v0, v0 - 1, v0 + 1})
        if (feasible(cand)) {
            seed = cand;
            found = true;
            break;
        }
    if (!found) return out;
    long lo = seed, hi = seed;
    while (feasible(lo - 1)) --lo;
    while (feasible(hi + 1)) ++hi;
    for (long c0 = lo; c0 <= hi; ++c0) {
        const long sum = -3 * c0 - vk;
        const long sq = c0 * c0 - vv;
        std::vector<long> c(static_cast<size_t>(n) + 1);
        c[0] = c0;
        descend(c, 1, sum, sq, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

LatticeClass LatticeClass::zero(int n) {
    return LatticeClass(std::vector<long>(static_cast<size_t>(n) + 1, 0));
}

LatticeClass LatticeClass::basis(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("basis index out of range");
    LatticeClass v = zero(n);
    v.c[static_cast<size_t>(i)] = 1;
    return v;
}

LatticeClass LatticeClass::operator+(const LatticeClass& o) const {
    if (c.size() != o.c.size()) throw std::invalid_argument("lattice rank mismatch");
    LatticeClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

LatticeClass LatticeClass::operator-(const LatticeClass& o) const { return *this + (-o); }

LatticeClass LatticeClass::operator-() const {
    LatticeClass r = *this;
    for (long& x : r.c) x = -x;
    return r;
}

LatticeClass LatticeClass::operator*(long k) const {
    LatticeClass r = *this;
    for (long& x : r.c) x *= k;
    return r;
}

std::string LatticeClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long a = c[i];
        if (first) {
            if (a < 0) os << '-';
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (std::labs(a) != 1) os << std::labs(a);
        os << 'e' << i;
    }
    if (first) os << '0';
    return os.str();
}

long pairing(const LatticeClass& u, const LatticeClass& v) {
    if (u.c.size() != v.c.size())
        throw std::invalid_argument("lattice rank mismatch in pairing");
    if (u.c.empty()) throw std::invalid_argument("empty lattice class");
    long s = u.c[0] * v.c[0];
    for (size_t i = 1; i < u.c.size(); ++i) s -= u.c[i] * v.c[i];
    return s;
}

LatticeClass canonical_class(int n) {
    if (n < 0) throw std::invalid_argument("negative blow-up count");
    std::vector<long> c(static_cast<size_t>(n) + 1, 1);
    c[0] = -3;
    return LatticeClass(std::move(c));
}

long self_intersection(const LatticeClass& v) { return pairing(v, v); }

std::vector<LatticeClass> enumerate_exceptional_classes(int n) {
    return enumerate_with(n, -1, -1);
}

std::vector<LatticeClass> enumerate_roots(int n) { return enumerate_with(n, -2, 0); }

int DynkinType::total_rank() const {
    int r = 0;
    for (const auto& comp : components) r += comp.rank;
    return r;
}

namespace {

/* display order: E < D < A, then rank descending */
bool component_less(const DynkinComponent& a, const DynkinComponent& b) {
    auto key = [](char s) { return s == 'E' ? 0 : s == 'D' ? 1 : 2; };
    if (key(a.series) != key(b.series)) return key(a.series) < key(b.series);
    return a.rank > b.rank;
}

void validate_component(const DynkinComponent& comp) {
    if (comp.series == 'A' && comp.rank >= 1) return;
    if (comp.series == 'D' && comp.rank >= 4) return;
    if (comp.series == 'E' && comp.rank >= 6 && comp.rank <= 8) return;
    throw std::invalid_argument(std::string("not an ADE component: ") + comp.series +
                                std::to_string(comp.rank));
}

}  // namespace

std::string DynkinType::str() const {
    if (components.empty()) return "0";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < components.size()) {
        size_t j = i;
        while (j < components.size() && components[j] == components[i]) ++j;
        if (!first) os << '+';
        first = false;
        if (j - i > 1) os << (j - i);
        os << components[i].series << components[i].rank;
        i = j;
    }
    return os.str();
}

DynkinType DynkinType::parse(const std::string& s) {
    DynkinType t;
    if (s == "0") return t;
    if (s.empty()) throw std::invalid_argument("empty Dynkin label (use \"0\" for none)");
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string part = s.substr(pos, end - pos);
        size_t k = 0;
        long mult = 1;
        if (k < part.size() && std::isdigit(static_cast<unsigned char>(part[k]))) {
            size_t used = 0;
            mult = std::stol(part.substr(k), &used);
            k += used;
        }
        if (k >= part.size() || (part[k] != 'A' && part[k] != 'D' && part[k] != 'E'))
            throw std::invalid_argument("bad Dynkin label: " + s);
        char series = part[k++];
        if (k >= part.size()) throw std::invalid_argument("bad Dynkin label: " + s);
        size_t used = 0;
        long rank = std::stol(part.substr(k), &used);
        if (k + used != part.size() || mult < 1 || rank < 1 || rank > 64)
            throw std::invalid_argument("bad Dynkin label: " + s);
        DynkinComponent comp{series, static_cast<int>(rank)};
        validate_component(comp);
        for (long m = 0; m < mult; ++m) t.components.push_back(comp);
        pos = end + (end < s.size() ? 1 : 0);
    }
    std::sort(t.components.begin(), t.components.end(), component_less);
    return t;
}

DynkinType dynkin_type(const std::vector<LatticeClass>& roots) {
    const size_t m = roots.size();
    DynkinType result;
    if (m == 0) return result;
    const int n = roots[0].n();
    const LatticeClass K = canonical_class(n);
    for (size_t i = 0; i < m; ++i) {
        if (pairing(roots[i], roots[i]) != -2 || pairing(roots[i], K) != 0)
            throw std::invalid_argument("class " + roots[i].str() + " is not a (-2)-root");
        for (size_t j = i + 1; j < m; ++j) {
            if (roots[i] == roots[j])
                throw std::invalid_argument("duplicate root " + roots[i].str());
            long p = pairing(roots[i], roots[j]);
            if (p != 0 && p != 1)
                throw std::invalid_argument("pairing of " + roots[i].str() + " and " +
                                            roots[j].str() + " is " + std::to_string(p) +
                                            ", want 0 or 1");
        }
    }

    std::vector<std::vector<size_t>> adj(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (pairing(roots[i], roots[j]) == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (size_t i = 0; i < m; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    for (int cidx = 0; cidx < ncomp; ++cidx) {
        std::vector<size_t> nodes;
        for (size_t i = 0; i < m; ++i)
            if (comp[i] == cidx) nodes.push_back(i);
        size_t edges = 0;
        std::vector<size_t> trivalent;
        bool path = true;
        for (size_t v : nodes) {
            edges += adj[v].size();
            if (adj[v].size() >= 4)
                throw std::domain_error("valence-" + std::to_string(adj[v].size()) +
                                        " vertex: not an ADE configuration");
            if (adj[v].size() == 3) {
                trivalent.push_back(v);
                path = false;
            }
        }
        edges /= 2;
        if (edges != nodes.size() - 1)
            throw std::domain_error("cycle detected: not an ADE configuration");
        if (path) {
            result.components.push_back({'A', static_cast<int>(nodes.size())});
            continue;
        }
        if (trivalent.size() > 1)
            throw std::domain_error("two branch vertices: not an ADE configuration");
        // arm lengths from the unique trivalent node
        const size_t center = trivalent[0];
        std::vector<int> arms;
        for (size_t start : adj[center]) {
            int len = 1;
            size_t prev = center, cur = start;
            while (true) {
                size_t next = m;  // sentinel
                for (size_t w : adj[cur])
                    if (w != prev) next = w;
                if (next == m) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        const int rank = static_cast<int>(nodes.size());
        if (arms[0] == 1 && arms[1] == 1) {
            result.components.push_back({'D', rank});
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
            result.components.push_back({'E', rank});
        } else {
            throw std::domain_error("branch arms (" + std::to_string(arms[0]) + "," +
                                    std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                                    "): not an ADE configuration");
        }
    }
    std::sort(result.components.begin(), result.components.end(), component_less);
    return result;
}

}  // namespace delpezzo
