#include "flatsaf/decide.hpp"

namespace flatsaf {

nlohmann::json DecisionTree::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case Kind::BaseCP: j["kind"] = "cp-base"; break;
        case Kind::NotCPLeaf: j["kind"] = "saf-nonzero"; break;
        case Kind::Budget: j["kind"] = "budget-exhausted"; break;
        case Kind::Step:
            j["kind"] = "step";
            j["step"] = step->to_json();
            break;
        case Kind::Split:
            j["kind"] = "split";
            j["top-prefix"] = splitTop;
            j["bottom-prefix"] = splitBottom;
            break;
    }
    if (!children.empty()) {
        j["children"] = nlohmann::json::array();
        for (const auto& c : children) j["children"].push_back(c.to_json());
    }
    return j;
}

const char* PeriodicityVerdict::kind_name(Kind k) {
    switch (k) {
        case Kind::CP: return "CP";
        case Kind::NotCP: return "NotCP";
        case Kind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

nlohmann::json PeriodicityVerdict::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    if (certificate) j["certificate"] = certificate->to_json();
    j["replay"] = tree.to_json();
    j["steps"] = stepsUsed;
    return j;
}

namespace {

PeriodicityVerdict decide_rec(LinearInvolution T, long& budget, long& used) {
    PeriodicityVerdict out;
    std::vector<RauzyStep> chain;

    auto wrap = [&](DecisionTree leaf) {
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            DecisionTree node;
            node.kind = DecisionTree::Kind::Step;
            node.step = *it;
            node.children.push_back(std::move(leaf));
            leaf = std::move(node);
        }
        out.tree = std::move(leaf);
        out.stepsUsed = used;
        return out;
    };

    for (;;) {
        if (!saf(T).is_zero()) {
            out.kind = PeriodicityVerdict::Kind::NotCP;
            out.certificate = T;
            DecisionTree leaf;
            leaf.kind = DecisionTree::Kind::NotCPLeaf;
            return wrap(std::move(leaf));
        }
        if (T.perm().d() <= 2) {
            out.kind = PeriodicityVerdict::Kind::CP;
            DecisionTree leaf;
            leaf.kind = DecisionTree::Kind::BaseCP;
            return wrap(std::move(leaf));
        }
        if (auto split = isDecomposed(T)) {
            auto [T1, T2] = *split;
            PeriodicityVerdict r1 = decide_rec(T1, budget, used);
            PeriodicityVerdict r2 = decide_rec(T2, budget, used);
            DecisionTree node;
            node.kind = DecisionTree::Kind::Split;
            node.splitTop = T1.perm().l();
            node.splitBottom = T1.perm().m();
            node.children.push_back(r1.tree);
            node.children.push_back(r2.tree);
            if (r1.kind == PeriodicityVerdict::Kind::CP && r2.kind == PeriodicityVerdict::Kind::CP) {
                out.kind = PeriodicityVerdict::Kind::CP;
            } else if (r1.kind == PeriodicityVerdict::Kind::NotCP ||
                       r2.kind == PeriodicityVerdict::Kind::NotCP) {
                out.kind = PeriodicityVerdict::Kind::NotCP;
                // Prefer the smallest witness, e.g. a rotation over a larger
                // sub-involution, when both halves fail.
                const PeriodicityVerdict* pick = nullptr;
                if (r1.kind == PeriodicityVerdict::Kind::NotCP) pick = &r1;
                if (r2.kind == PeriodicityVerdict::Kind::NotCP &&
                    (!pick || r2.certificate->perm().d() < pick->certificate->perm().d()))
                    pick = &r2;
                out.certificate = pick->certificate;
            } else {
                out.kind = PeriodicityVerdict::Kind::Inconclusive;
            }
            return wrap(std::move(node));
        }
        if (budget <= 0) {
            out.kind = PeriodicityVerdict::Kind::Inconclusive;
            DecisionTree leaf;
            leaf.kind = DecisionTree::Kind::Budget;
            return wrap(std::move(leaf));
        }
        --budget;
        ++used;

        const std::string& a = T.perm().top.back();
        const std::string& b = T.perm().bottom.back();
        std::pair<LinearInvolution, RauzyStep> next =
            a == b ? eraseCylinderLetter(T)
                   : (T.length(a) == T.length(b) ? rauzySing(T) : rauzy(T));
        chain.push_back(next.second);
        T = std::move(next.first);
    }
}

} // namespace

PeriodicityVerdict decideCompletePeriodicity(const LinearInvolution& T, long budget) {
    long b = budget, used = 0;
    PeriodicityVerdict v = decide_rec(T, b, used);
    v.stepsUsed = used;
    if (v.kind == PeriodicityVerdict::Kind::CP && !saf(T).is_zero())
        throw std::logic_error("CP verdict with nonzero SAF");
    return v;
}

namespace {

bool replay_rec(LinearInvolution T, const DecisionTree& node) {
    switch (node.kind) {
        case DecisionTree::Kind::BaseCP:
            return T.perm().d() <= 2 && saf(T).is_zero();
        case DecisionTree::Kind::NotCPLeaf:
            return !saf(T).is_zero();
        case DecisionTree::Kind::Budget:
            return true;
        case DecisionTree::Kind::Step: {
            const RauzyStep& s = *node.step;
            std::pair<LinearInvolution, RauzyStep> next = [&] {
                switch (s.kind) {
                    case RauzyStep::Kind::Top:
                    case RauzyStep::Kind::Bottom: return rauzy(T);
                    case RauzyStep::Kind::Singular: return rauzySing(T);
                    case RauzyStep::Kind::EraseCylinderLetter: return eraseCylinderLetter(T);
                }
                throw std::logic_error("bad step kind");
            }();
            if (next.second.kind != s.kind || next.second.winner != s.winner ||
                next.second.loser != s.loser)
                return false;
            return replay_rec(next.first, node.children.at(0));
        }
        case DecisionTree::Kind::Split: {
            auto split = isDecomposed(T);
            if (!split) return false;
            if (split->first.perm().l() != node.splitTop ||
                split->first.perm().m() != node.splitBottom)
                return false;
            return replay_rec(split->first, node.children.at(0)) &&
                   replay_rec(split->second, node.children.at(1));
        }
    }
    return false;
}

} // namespace

bool replay(const LinearInvolution& T, const DecisionTree& tree) { return replay_rec(T, tree); }

} // namespace flatsaf
