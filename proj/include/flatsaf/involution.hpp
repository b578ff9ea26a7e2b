#pragma once

#include "flatsaf/genperm.hpp"
#include "flatsaf/knum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace flatsaf {

struct RauzyStep {
    enum class Kind { Top, Bottom, Singular, EraseCylinderLetter };
    Kind kind;
    std::string winner, loser;

    nlohmann::json to_json() const;
    static const char* kind_name(Kind k);
};

// Exact interval exchange transformation on [0, total): branches are
// half-open intervals translated rigidly.
struct ExactIET {
    struct Branch {
        KNum start, length, translation;
    };
    std::vector<Branch> branches; // sorted by start, tiling [0, total)
    KNum total;

    KNum apply(const KNum& x) const;
    int branch_of(const KNum& x) const;
    // Interior discontinuities of the map and of its inverse.
    std::vector<KNum> singularities() const;
    std::vector<KNum> inverse_singularities() const;
    void validate() const; // branches tile the domain, image tiles it too
};

// Generalized permutation with exact positive lengths; both rows tile one
// interval of length L.
class LinearInvolution {
public:
    LinearInvolution() = default;
    LinearInvolution(GenPerm perm, std::map<std::string, KNum> lengths);

    const GenPerm& perm() const { return perm_; }
    const std::map<std::string, KNum>& lengths() const { return lengths_; }
    const KNum& length(const std::string& sym) const;
    KNum total() const; // L

    QuadField field() const;

    // Start coordinates of the i-th interval of a row (row 0 = top).
    std::vector<KNum> starts(int row) const;

    static LinearInvolution from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    std::string str() const;

private:
    GenPerm perm_;
    std::map<std::string, KNum> lengths_;
};

// validate() constructor wrapper matching the spec surface.
LinearInvolution validate(const GenPerm& g, const std::map<std::string, KNum>& lengths);

// The orientation double: an IET over 2d letters on [0, 2L).
ExactIET doubleIET(const LinearInvolution& T);

// SAF invariant, normalized as half the SAF of the double so that linear
// involutions which are IETs agree with the classical value.
WedgeNum saf(const LinearInvolution& T);

// SAF of an exact IET: sum of length ^ translation over branches.
WedgeNum safIET(const ExactIET& T);

// t_alpha for a true permutation: bottom prefix sum minus top prefix sum.
std::map<std::string, KNum> translationLengths(const LinearInvolution& T);

// flux(T) = sum lambda_alpha * conj(t_alpha); requires a true permutation.
KNum galoisFlux(const LinearInvolution& T);

// Splitting into two linear involutions at balanced prefixes, leftmost split
// (smallest i0 + j0, then smallest i0).
std::optional<std::pair<LinearInvolution, LinearInvolution>> isDecomposed(const LinearInvolution& T);

struct Connection {
    KNum point;  // in double coordinates on [0, 2L)
    int length;  // number of iterations
};

// Orbits of inverse singularities, searched for hits on singularities.
std::optional<Connection> hasConnection(const LinearInvolution& T, int maxSteps);

// Rauzy induction; requires distinct rightmost letters with distinct lengths.
std::pair<LinearInvolution, RauzyStep> rauzy(const LinearInvolution& T);

// Singular induction for equal rightmost lengths; drops one letter.
std::pair<LinearInvolution, RauzyStep> rauzySing(const LinearInvolution& T);

// Remove the letter ending both rows (a vertical cylinder component).
std::pair<LinearInvolution, RauzyStep> eraseCylinderLetter(const LinearInvolution& T);

// Whether every orbit of the double closes within the budget; starts from
// every branch midpoint.  Used as an independent periodicity oracle.
bool allOrbitsClose(const LinearInvolution& T, int budget);

} // namespace flatsaf
