#include "flatsaf/genperm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flatsaf {

std::vector<std::string> GenPerm::alphabet() const {
    std::set<std::string> s(top.begin(), top.end());
    s.insert(bottom.begin(), bottom.end());
    return {s.begin(), s.end()};
}

void GenPerm::validate() const {
    if (top.empty() || bottom.empty()) throw std::domain_error("empty row in permutation");
    std::map<std::string, int> count;
    for (const auto& x : top) count[x]++;
    for (const auto& x : bottom) count[x]++;
    for (const auto& [sym, c] : count)
        if (c != 2)
            throw std::domain_error("symbol '" + sym + "' occurs " + std::to_string(c) +
                                    " times, expected 2");
}

GenPerm GenPerm::parse(const std::string& s) {
    GenPerm g;
    std::vector<std::string>* row = &g.top;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "/") {
            if (row == &g.bottom) throw std::invalid_argument("more than two rows");
            row = &g.bottom;
        } else {
            row->push_back(tok);
        }
    }
    g.validate();
    return g;
}

std::string GenPerm::str() const {
    std::ostringstream os;
    for (int i = 0; i < l(); ++i) os << (i ? " " : "") << top[i];
    os << " / ";
    for (int i = 0; i < m(); ++i) os << (i ? " " : "") << bottom[i];
    return os.str();
}

GenPerm GenPerm::canonical() const {
    std::map<std::string, std::string> names;
    int next = 1;
    auto name = [&](const std::string& s) {
        auto it = names.find(s);
        if (it == names.end()) it = names.emplace(s, std::to_string(next++)).first;
        return it->second;
    };
    GenPerm out;
    for (const auto& x : top) out.top.push_back(name(x));
    for (const auto& x : bottom) out.bottom.push_back(name(x));
    return out;
}

bool GenPerm::iso_equal(const GenPerm& other) const {
    return canonical() == other.canonical();
}

GenPerm GenPerm::relabeled(const std::vector<std::pair<std::string, std::string>>& map) const {
    auto ren = [&](const std::string& s) {
        for (const auto& [from, to] : map)
            if (from == s) return to;
        return s;
    };
    GenPerm out;
    for (const auto& x : top) out.top.push_back(ren(x));
    for (const auto& x : bottom) out.bottom.push_back(ren(x));
    return out;
}

bool isTruePermutation(const GenPerm& g) {
    std::set<std::string> t(g.top.begin(), g.top.end());
    std::set<std::string> b(g.bottom.begin(), g.bottom.end());
    return t.size() == g.top.size() && b.size() == g.bottom.size() && t == b;
}

namespace {

// Letter set of a corner with a multiplicity check: returns false when some
// letter occurs twice inside the corner.
bool corner_set(const std::vector<std::string>& row, int from, int count,
                std::set<std::string>& out) {
    out.clear();
    for (int i = 0; i < count; ++i)
        if (!out.insert(row[from + i]).second) return false;
    return true;
}

std::set<std::string> intersect(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.begin()));
    return r;
}

std::set<std::string> unite(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> r = a;
    r.insert(b.begin(), b.end());
    return r;
}

} // namespace

bool irreducible(const GenPerm& g) {
    g.validate();
    const int l = g.l(), m = g.m();
    std::set<std::string> TL, TR, BL, BR;
    for (int i = 0; i <= l; ++i) {         // top prefix length
        if (!corner_set(g.top, 0, i, TL)) continue;
        for (int p = 0; i + p <= l; ++p) { // top suffix length
            if (!corner_set(g.top, l - p, p, TR)) continue;
            for (int j = 0; j <= m; ++j) {
                if (!corner_set(g.bottom, 0, j, BL)) continue;
                for (int q = 0; j + q <= m; ++q) {
                    if (!corner_set(g.bottom, m - q, q, BR)) continue;

                    int empties = (i == 0) + (p == 0) + (j == 0) + (q == 0);
                    bool side_ok =
                        empties == 0 ||
                        (empties == 1 && (i == 0 || j == 0)) ||
                        (empties == 2 && ((i == 0 && j == 0) || (p == 0 && q == 0)));
                    if (!side_ok) continue;
                    if (i == 0 && p == 0 && j == 0 && q == 0) continue;

                    auto A = intersect(TL, BL);
                    auto B = intersect(TL, TR);
                    auto C = intersect(BL, BR);
                    auto D = intersect(TR, BR);
                    if (unite(A, B) != TL) continue;
                    if (unite(D, B) != TR) continue;
                    if (unite(A, C) != BL) continue;
                    if (unite(D, C) != BR) continue;
                    // A, B, C, D are pairwise disjoint automatically: a letter
                    // has two occurrences in total, so it lies in at most two
                    // corners.  Not all empty is implied by a nonempty corner.
                    return false; // decomposition found
                }
            }
        }
    }
    return true;
}

namespace {

struct Occ {
    int row;   // 0 top, 1 bottom
    int index;
};

std::vector<Occ> occurrences(const GenPerm& g, const std::string& sym) {
    std::vector<Occ> r;
    for (int i = 0; i < g.l(); ++i)
        if (g.top[i] == sym) r.push_back({0, i});
    for (int i = 0; i < g.m(); ++i)
        if (g.bottom[i] == sym) r.push_back({1, i});
    return r;
}

} // namespace

GenPerm rauzyMove(const GenPerm& g, int type) {
    g.validate();
    GenPerm h = type == 0 ? g : g.row_swapped();
    // In the normalized picture the top-end letter wins.
    const std::string winner = h.top.back();
    const std::string loser = h.bottom.back();
    if (winner == loser) throw std::domain_error("same rightmost letter in both rows");
    if (h.bottom.size() == 1) throw std::domain_error("row would become empty");
    h.bottom.pop_back();
    // The winner's other occurrence.
    Occ twin{-1, -1};
    for (int i = 0; i < h.l() - 1; ++i)
        if (h.top[i] == winner) twin = {0, i};
    for (int i = 0; i < h.m(); ++i)
        if (h.bottom[i] == winner) twin = {1, i};
    if (twin.row == 0)
        h.top.insert(h.top.begin() + twin.index, loser); // same row: left of twin
    else
        h.bottom.insert(h.bottom.begin() + twin.index + 1, loser); // other row: right of twin
    return type == 0 ? h : h.row_swapped();
}

GenPerm rauzySingPerm(const GenPerm& g) {
    g.validate();
    if (g.d() <= 1) throw std::domain_error("singular induction needs d >= 2");
    GenPerm h = g;
    const std::string w = h.top.back();
    const std::string lo = h.bottom.back();
    if (w == lo) {
        // Both occurrences sit at the two row ends; erase them.
        h.top.pop_back();
        h.bottom.pop_back();
    } else {
        // Type-0 move with the winner's length formally becoming zero, then
        // erase the winner: net effect, the loser replaces the winner's twin.
        h.top.pop_back();
        h.bottom.pop_back();
        bool replaced = false;
        for (auto& x : h.top)
            if (x == w) { x = lo; replaced = true; }
        for (auto& x : h.bottom)
            if (x == w) { x = lo; replaced = true; }
        if (!replaced) throw std::domain_error("degenerate singular induction");
    }
    if (h.top.empty() || h.bottom.empty()) throw std::domain_error("row became empty");
    return h;
}

std::vector<GenPerm> inverseRauzySing(const GenPerm& g, const std::string& alpha) {
    g.validate();
    for (const auto& s : g.alphabet())
        if (s == alpha) throw std::domain_error("letter '" + alpha + "' already used");

    std::vector<GenPerm> candidates;
    auto add = [&](GenPerm cand) {
        cand.validate();
        if (!rauzySingPerm(cand).iso_equal(g)) return;
        for (const auto& seen : candidates)
            if (seen.iso_equal(cand)) return;
        candidates.push_back(std::move(cand));
    };

    // Replace one occurrence by alpha, append alpha to one row end and the
    // replaced letter to the other.  Both orientations, plus the exception
    // with alpha at the end of both rows.
    for (int row = 0; row < 2; ++row) {
        const auto& src = row == 0 ? g.top : g.bottom;
        for (size_t i = 0; i < src.size(); ++i) {
            std::string beta = src[i];
            GenPerm t = g;
            (row == 0 ? t.top : t.bottom)[i] = alpha;
            GenPerm a = t, b = t;
            a.top.push_back(alpha);
            a.bottom.push_back(beta);
            b.top.push_back(beta);
            b.bottom.push_back(alpha);
            add(a);
            add(b);
        }
    }
    GenPerm exc = g;
    exc.top.push_back(alpha);
    exc.bottom.push_back(alpha);
    add(exc);
    return candidates;
}

namespace {

// All ways to arrange d symbols, each twice, over rows of sizes (l, m):
// enumerate pairings of the 2d positions.
void enumerate_pairings(int n, std::vector<int>& partner, std::vector<std::vector<int>>& out) {
    int first = -1;
    for (int i = 0; i < n; ++i)
        if (partner[i] < 0) { first = i; break; }
    if (first < 0) {
        out.push_back(partner);
        return;
    }
    for (int j = first + 1; j < n; ++j) {
        if (partner[j] >= 0) continue;
        partner[first] = j;
        partner[j] = first;
        enumerate_pairings(n, partner, out);
        partner[first] = partner[j] = -1;
    }
}

} // namespace

std::vector<GenPerm> enumerateCanonical(int l, int m) {
    std::vector<int> partner(l + m, -1);
    std::vector<std::vector<int>> pairings;
    enumerate_pairings(l + m, partner, pairings);
    std::vector<GenPerm> out;
    for (const auto& p : pairings) {
        std::vector<std::string> sym(l + m);
        int next = 1;
        for (int i = 0; i < l + m; ++i) {
            if (p[i] > i) {
                sym[i] = sym[p[i]] = std::to_string(next++);
            }
        }
        GenPerm g(std::vector<std::string>(sym.begin(), sym.begin() + l),
                  std::vector<std::string>(sym.begin() + l, sym.end()));
        out.push_back(g.canonical());
    }
    return out;
}

std::vector<GenPerm> inverseRauzySingBruteForce(const GenPerm& g, const std::string& alpha) {
    g.validate();
    std::vector<GenPerm> out;
    GenPerm gc = g.canonical();
    for (GenPerm cand : enumerateCanonical(g.l() + 1, g.m() + 1)) {
        GenPerm red;
        try {
            red = rauzySingPerm(cand);
        } catch (const std::domain_error&) {
            continue;
        }
        if (!red.iso_equal(gc)) continue;
        bool dup = false;
        for (const auto& seen : out)
            if (seen.iso_equal(cand)) { dup = true; break; }
        if (!dup) {
            // Present with the requested fresh letter in place of the symbol
            // that disappears under the forward map.
            out.push_back(cand);
        }
    }
    (void)alpha;
    return out;
}

std::optional<std::string> exceptionalSetMembership(const GenPerm& g) {
    g.validate();
    if (g.d() != 5) throw std::domain_error("exceptional sets are defined for d = 5");
    static const std::vector<std::pair<const char*, const char*>> tables = {
        {"A B C D a / a A D C B", "E1"},
        {"A B C D a / B a D C A", "E1"},
        {"a B C D a / B A D C A", "E2"},
        {"A a C D a / B A D C B", "E2"},
    };
    for (const auto& [text, tag] : tables)
        if (g.iso_equal(GenPerm::parse(text))) return std::string(tag);

    // E3: a 2-letter crossed block at either end, the rest a 3-letter table.
    auto block_at = [&](bool prefix) -> bool {
        if (g.l() < 3 || g.m() < 3) return false;
        std::string x, y, y2, x2;
        if (prefix) {
            x = g.top[0]; y = g.top[1];
            y2 = g.bottom[0]; x2 = g.bottom[1];
        } else {
            x = g.top[g.l() - 2]; y = g.top[g.l() - 1];
            y2 = g.bottom[g.m() - 2]; x2 = g.bottom[g.m() - 1];
        }
        if (x == y || x != x2 || y != y2) return false;
        // Both occurrences of x and y must lie in the block.
        int cx = 0, cy = 0;
        for (const auto& s : g.top) { cx += s == x; cy += s == y; }
        for (const auto& s : g.bottom) { cx += s == x; cy += s == y; }
        return cx == 2 && cy == 2;
    };
    if (block_at(true) || block_at(false)) return std::string("E3");
    return std::nullopt;
}

} // namespace flatsaf
