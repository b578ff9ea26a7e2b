#include "flatsaf/involution.hpp"

#include <algorithm>
#include <sstream>

namespace flatsaf {

const char* RauzyStep::kind_name(Kind k) {
    switch (k) {
        case Kind::Top: return "top";
        case Kind::Bottom: return "bottom";
        case Kind::Singular: return "singular";
        case Kind::EraseCylinderLetter: return "erase-cylinder-letter";
    }
    return "?";
}

nlohmann::json RauzyStep::to_json() const {
    return nlohmann::json{{"kind", kind_name(kind)}, {"winner", winner}, {"loser", loser}};
}

KNum ExactIET::apply(const KNum& x) const {
    return x + branches[branch_of(x)].translation;
}

int ExactIET::branch_of(const KNum& x) const {
    if (x.sign() < 0 || x >= total) throw std::domain_error("point outside interval");
    int lo = 0, hi = static_cast<int>(branches.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (x >= branches[mid].start)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::vector<KNum> ExactIET::singularities() const {
    std::vector<KNum> s;
    for (size_t i = 1; i < branches.size(); ++i) s.push_back(branches[i].start);
    return s;
}

std::vector<KNum> ExactIET::inverse_singularities() const {
    std::vector<KNum> s;
    for (const auto& b : branches) {
        KNum img = b.start + b.translation;
        if (img.sign() != 0) s.push_back(img);
    }
    std::sort(s.begin(), s.end());
    return s;
}

void ExactIET::validate() const {
    if (branches.empty()) throw std::domain_error("empty IET");
    KNum pos(Rat(0));
    for (const auto& b : branches) {
        if (b.start != pos) throw std::domain_error("IET branches do not tile the domain");
        if (b.length.sign() <= 0) throw std::domain_error("non-positive branch length");
        pos = pos + b.length;
    }
    if (pos != total) throw std::domain_error("IET branch lengths do not sum to the total");
    // Image intervals tile [0, total) as well.
    std::vector<std::pair<KNum, KNum>> img;
    for (const auto& b : branches) img.push_back({b.start + b.translation, b.length});
    std::sort(img.begin(), img.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    KNum at(Rat(0));
    for (const auto& [s, len] : img) {
        if (s != at) throw std::domain_error("IET images do not tile the domain");
        at = at + len;
    }
    if (at != total) throw std::domain_error("IET images do not tile the domain");
}

LinearInvolution::LinearInvolution(GenPerm perm, std::map<std::string, KNum> lengths)
    : perm_(std::move(perm)), lengths_(std::move(lengths)) {
    perm_.validate();
    QuadField F(1);
    for (const auto& [sym, len] : lengths_) {
        if (len.sign() <= 0) throw std::domain_error("non-positive length for '" + sym + "'");
        if (!len.field().is_rational()) F = len.field();
    }
    for (const auto& sym : perm_.alphabet())
        if (!lengths_.count(sym)) throw std::domain_error("missing length for '" + sym + "'");
    KNum t0(Rat(0)), t1(Rat(0));
    for (const auto& s : perm_.top) t0 += length(s);
    for (const auto& s : perm_.bottom) t1 += length(s);
    if (t0 != t1) throw std::domain_error("row sums differ: " + t0.str() + " vs " + t1.str());
}

LinearInvolution validate(const GenPerm& g, const std::map<std::string, KNum>& lengths) {
    return LinearInvolution(g, lengths);
}

const KNum& LinearInvolution::length(const std::string& sym) const {
    auto it = lengths_.find(sym);
    if (it == lengths_.end()) throw std::domain_error("no length for '" + sym + "'");
    return it->second;
}

KNum LinearInvolution::total() const {
    KNum t(Rat(0));
    for (const auto& s : perm_.top) t += length(s);
    return t;
}

QuadField LinearInvolution::field() const {
    for (const auto& [sym, len] : lengths_)
        if (!len.field().is_rational()) return len.field();
    return QuadField(1);
}

std::vector<KNum> LinearInvolution::starts(int row) const {
    const auto& syms = row == 0 ? perm_.top : perm_.bottom;
    std::vector<KNum> out;
    KNum pos(Rat(0));
    for (const auto& s : syms) {
        out.push_back(pos);
        pos += length(s);
    }
    return out;
}

LinearInvolution LinearInvolution::from_json(const nlohmann::json& j) {
    GenPerm g = GenPerm::parse(j.at("perm").get<std::string>());
    std::map<std::string, KNum> lengths;
    for (const auto& [sym, val] : j.at("lengths").items()) lengths[sym] = KNum::from_json(val);
    // Promote everything into one field.
    QuadField F(1);
    for (const auto& [sym, v] : lengths)
        if (!v.field().is_rational()) F = v.field();
    for (auto& [sym, v] : lengths) v = promote(v, F);
    return LinearInvolution(g, lengths);
}

nlohmann::json LinearInvolution::to_json() const {
    nlohmann::json lens = nlohmann::json::object();
    for (const auto& [sym, v] : lengths_) lens[sym] = v.str();
    return nlohmann::json{{"perm", perm_.str()}, {"lengths", lens}};
}

std::string LinearInvolution::str() const {
    std::ostringstream os;
    os << perm_.str() << " ; ";
    bool first = true;
    for (const auto& [sym, v] : lengths_) {
        if (!first) os << ", ";
        os << sym << "=" << v.str();
        first = false;
    }
    return os.str();
}

namespace {

struct OccRef {
    int row, index;
    KNum start;
};

// Occurrence table: for each symbol its one or two positions per row with
// start coordinates.
std::map<std::string, std::vector<OccRef>> occurrence_table(const LinearInvolution& T) {
    std::map<std::string, std::vector<OccRef>> occ;
    for (int row = 0; row < 2; ++row) {
        const auto& syms = row == 0 ? T.perm().top : T.perm().bottom;
        auto st = T.starts(row);
        for (size_t i = 0; i < syms.size(); ++i)
            occ[syms[i]].push_back({row, static_cast<int>(i), st[i]});
    }
    return occ;
}

} // namespace

ExactIET doubleIET(const LinearInvolution& T) {
    // Copy 0 carries the top row with u = x; copy 1 carries the bottom row
    // with u = 2L - x.  Cross-row pairs translate by s1 - s0 within a copy,
    // same-row pairs jump between the copies.
    KNum L = T.total();
    KNum twoL = L + L;
    auto occ = occurrence_table(T);
    ExactIET out;
    out.total = twoL;

    auto topStarts = T.starts(0);
    auto botStarts = T.starts(1);
    std::vector<ExactIET::Branch> br;

    for (size_t i = 0; i < T.perm().top.size(); ++i) {
        const std::string& sym = T.perm().top[i];
        const KNum& len = T.length(sym);
        const auto& o = occ[sym];
        const OccRef* twin = nullptr;
        for (const auto& r : o)
            if (!(r.row == 0 && r.index == static_cast<int>(i))) twin = &r;
        KNum s0 = topStarts[i];
        if (twin->row == 1) {
            br.push_back({s0, len, twin->start - s0});
        } else {
            // translation 2L - (s + s' + len) into copy 1
            br.push_back({s0, len, twoL - (s0 + twin->start + len)});
        }
    }
    for (size_t i = 0; i < T.perm().bottom.size(); ++i) {
        const std::string& sym = T.perm().bottom[i];
        const KNum& len = T.length(sym);
        const auto& o = occ[sym];
        const OccRef* twin = nullptr;
        for (const auto& r : o)
            if (!(r.row == 1 && r.index == static_cast<int>(i))) twin = &r;
        KNum s1 = botStarts[i];
        KNum ustart = twoL - s1 - len; // copy-1 slot of this occurrence
        if (twin->row == 0) {
            br.push_back({ustart, len, s1 - twin->start});
        } else {
            br.push_back({ustart, len, (s1 + twin->start + len) - twoL});
        }
    }
    std::sort(br.begin(), br.end(),
              [](const ExactIET::Branch& a, const ExactIET::Branch& b) { return a.start < b.start; });
    out.branches = std::move(br);
    out.validate();
    return out;
}

WedgeNum safIET(const ExactIET& T) {
    WedgeNum acc;
    for (const auto& b : T.branches) acc = acc + wedgeK(b.length, b.translation);
    return acc;
}

WedgeNum saf(const LinearInvolution& T) {
    // Half the SAF of the double; in closed form the 2L parts of the
    // same-row branch translations cancel because the top pairs and bottom
    // pairs carry equal total length.
    auto occ = occurrence_table(T);
    WedgeNum acc;
    for (const auto& [sym, refs] : occ) {
        const KNum& len = T.length(sym);
        if (refs[0].row != refs[1].row) {
            const KNum& s0 = refs[0].row == 0 ? refs[0].start : refs[1].start;
            const KNum& s1 = refs[0].row == 0 ? refs[1].start : refs[0].start;
            acc = acc + wedgeK(len, s1 - s0);
        } else {
            WedgeNum w = wedgeK(len, refs[0].start + refs[1].start + len);
            acc = refs[0].row == 0 ? acc - w : acc + w;
        }
    }
    return acc;
}

std::map<std::string, KNum> translationLengths(const LinearInvolution& T) {
    if (!isTruePermutation(T.perm()))
        throw std::domain_error("translation lengths require a true permutation");
    std::map<std::string, KNum> t;
    auto topStarts = T.starts(0);
    auto botStarts = T.starts(1);
    for (size_t i = 0; i < T.perm().top.size(); ++i) {
        const std::string& sym = T.perm().top[i];
        for (size_t j = 0; j < T.perm().bottom.size(); ++j)
            if (T.perm().bottom[j] == sym) t[sym] = botStarts[j] - topStarts[i];
    }
    return t;
}

KNum galoisFlux(const LinearInvolution& T) {
    auto t = translationLengths(T);
    KNum acc(Rat(0));
    for (const auto& [sym, tr] : t) acc += T.length(sym) * tr.conj();
    return acc;
}

std::optional<std::pair<LinearInvolution, LinearInvolution>> isDecomposed(const LinearInvolution& T) {
    const GenPerm& g = T.perm();
    const int l = g.l(), m = g.m();
    auto topStarts = T.starts(0);
    auto botStarts = T.starts(1);
    // Leftmost split: smallest i0 + j0, then smallest i0.
    for (int s = 2; s <= l - 1 + m - 1; ++s) {
        for (int i0 = 1; i0 < l; ++i0) {
            int j0 = s - i0;
            if (j0 < 1 || j0 >= m) continue;
            std::map<std::string, int> cnt;
            for (int i = 0; i < i0; ++i) cnt[g.top[i]]++;
            for (int j = 0; j < j0; ++j) cnt[g.bottom[j]]++;
            bool ok = true;
            for (const auto& [sym, c] : cnt)
                if (c != 2) { ok = false; break; }
            if (!ok) continue;
            KNum st(Rat(0)), sb(Rat(0));
            for (int i = 0; i < i0; ++i) st += T.length(g.top[i]);
            for (int j = 0; j < j0; ++j) sb += T.length(g.bottom[j]);
            if (st != sb) continue;
            GenPerm g1(std::vector<std::string>(g.top.begin(), g.top.begin() + i0),
                       std::vector<std::string>(g.bottom.begin(), g.bottom.begin() + j0));
            GenPerm g2(std::vector<std::string>(g.top.begin() + i0, g.top.end()),
                       std::vector<std::string>(g.bottom.begin() + j0, g.bottom.end()));
            std::map<std::string, KNum> l1, l2;
            for (const auto& sym : g1.alphabet()) l1[sym] = T.length(sym);
            for (const auto& sym : g2.alphabet()) l2[sym] = T.length(sym);
            return std::make_pair(LinearInvolution(g1, l1), LinearInvolution(g2, l2));
        }
    }
    return std::nullopt;
}

std::optional<Connection> hasConnection(const LinearInvolution& T, int maxSteps) {
    ExactIET D = doubleIET(T);
    KNum L = T.total();
    // Interior singular points of the double (copy boundaries excluded).
    std::vector<KNum> sing;
    for (const auto& s : D.singularities())
        if (s != L) sing.push_back(s);
    auto is_sing = [&](const KNum& x) {
        for (const auto& s : sing)
            if (s == x) return true;
        return false;
    };
    std::vector<KNum> from;
    for (const auto& s : sing) from.push_back(D.apply(s));
    for (auto x : from) {
        for (int r = 0; r <= maxSteps; ++r) {
            if (is_sing(x)) return Connection{x, r};
            x = D.apply(x);
        }
    }
    return std::nullopt;
}

namespace {

LinearInvolution with_perm(const LinearInvolution& T, const GenPerm& g,
                           const std::map<std::string, KNum>& lengths) {
    return LinearInvolution(g, lengths);
}

} // namespace

std::pair<LinearInvolution, RauzyStep> rauzy(const LinearInvolution& T) {
    const GenPerm& g = T.perm();
    const std::string& a = g.top.back();
    const std::string& b = g.bottom.back();
    if (a == b) throw std::domain_error("same rightmost letter: use eraseCylinderLetter");
    int cmp = (T.length(a) - T.length(b)).sign();
    if (cmp == 0) throw std::domain_error("equal rightmost lengths: use rauzySing");
    int type = cmp > 0 ? 0 : 1;
    const std::string& winner = type == 0 ? a : b;
    const std::string& loser = type == 0 ? b : a;
    GenPerm h = rauzyMove(g, type);
    std::map<std::string, KNum> lengths = T.lengths();
    lengths[winner] = lengths[winner] - lengths[loser];
    RauzyStep step{type == 0 ? RauzyStep::Kind::Top : RauzyStep::Kind::Bottom, winner, loser};
    return {with_perm(T, h, lengths), step};
}

std::pair<LinearInvolution, RauzyStep> rauzySing(const LinearInvolution& T) {
    const GenPerm& g = T.perm();
    if (g.d() <= 1) throw std::domain_error("singular induction needs d >= 2");
    const std::string& a = g.top.back();
    const std::string& b = g.bottom.back();
    if (a != b && T.length(a) != T.length(b))
        throw std::domain_error("singular induction needs equal rightmost lengths");
    GenPerm h = rauzySingPerm(g);
    std::map<std::string, KNum> lengths;
    for (const auto& sym : h.alphabet()) lengths[sym] = T.length(sym);
    RauzyStep step{a == b ? RauzyStep::Kind::EraseCylinderLetter : RauzyStep::Kind::Singular, a, b};
    return {with_perm(T, h, lengths), step};
}

std::pair<LinearInvolution, RauzyStep> eraseCylinderLetter(const LinearInvolution& T) {
    const GenPerm& g = T.perm();
    const std::string& a = g.top.back();
    if (a != g.bottom.back()) throw std::domain_error("rows do not end with the same letter");
    if (g.d() <= 1) throw std::domain_error("erasing the last letter");
    GenPerm h = g;
    h.top.pop_back();
    h.bottom.pop_back();
    std::map<std::string, KNum> lengths;
    for (const auto& sym : h.alphabet()) lengths[sym] = T.length(sym);
    RauzyStep step{RauzyStep::Kind::EraseCylinderLetter, a, a};
    return {with_perm(T, h, lengths), step};
}

bool allOrbitsClose(const LinearInvolution& T, int budget) {
    ExactIET D = doubleIET(T);
    Rat half(1, 2);
    for (const auto& b : D.branches) {
        KNum mid = b.start + KNum(half) * b.length;
        KNum x = mid;
        bool closed = false;
        for (int i = 0; i < budget; ++i) {
            x = D.apply(x);
            if (x == mid) { closed = true; break; }
        }
        if (!closed) return false;
    }
    return true;
}

} // namespace flatsaf
