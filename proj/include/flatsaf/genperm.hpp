#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flatsaf {

// Two-row symbol table in which every symbol occurs exactly twice.
// Type (l, m) with l = top row size, m = bottom row size, l + m = 2d.
struct GenPerm {
    std::vector<std::string> top, bottom;

    GenPerm() = default;
    GenPerm(std::vector<std::string> t, std::vector<std::string> b)
        : top(std::move(t)), bottom(std::move(b)) {}

    int l() const { return static_cast<int>(top.size()); }
    int m() const { return static_cast<int>(bottom.size()); }
    int d() const { return (l() + m()) / 2; }

    std::vector<std::string> alphabet() const; // sorted, unique

    // Throws if a symbol count differs from two or a row is empty.
    void validate() const;

    // Text format: symbols whitespace-separated, rows separated by "/".
    static GenPerm parse(const std::string& s);
    std::string str() const;

    // Rename symbols by first occurrence (top row first) to "1", "2", ...
    GenPerm canonical() const;
    bool iso_equal(const GenPerm& other) const;
    GenPerm row_swapped() const { return GenPerm(bottom, top); }
    GenPerm relabeled(const std::vector<std::pair<std::string, std::string>>& map) const;

    friend bool operator==(const GenPerm& a, const GenPerm& b) {
        return a.top == b.top && a.bottom == b.bottom;
    }
};

bool isTruePermutation(const GenPerm& g);

// Decomposition test of Definition-style corner sets: exhaustive search over
// all prefix/suffix quadruples.  True iff no decomposition exists.
bool irreducible(const GenPerm& g);

// Formal combinatorial Rauzy moves (no lengths).
// Type 0: top-end letter wins, bottom-end letter loses.
// Type 1: bottom-end letter wins.
// Undefined when both rows end with the same letter or a row would empty.
GenPerm rauzyMove(const GenPerm& g, int type);

// Formal singular induction: type-0 move then erase the (now zero length)
// top-end letter; when both rows end with the same letter, erase it.
// Result has d-1 letters.
GenPerm rauzySingPerm(const GenPerm& g);

// All permutations over alphabet + {alpha} whose singular induction gives g
// up to relabeling, deduplicated up to relabeling.
std::vector<GenPerm> inverseRauzySing(const GenPerm& g, const std::string& alpha);

// Exhaustive reference enumeration of the same set (test oracle; exponential).
std::vector<GenPerm> inverseRauzySingBruteForce(const GenPerm& g, const std::string& alpha);

// Membership (up to relabeling) in the three exceptional families of the
// five-letter reduction lemma.  Requires d = 5.
std::optional<std::string> exceptionalSetMembership(const GenPerm& g);

// All canonical generalized permutations with given type (l, m).
std::vector<GenPerm> enumerateCanonical(int l, int m);

} // namespace flatsaf
