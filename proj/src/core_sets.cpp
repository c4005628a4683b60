#include "orthantgeo/core_sets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace og {

namespace {
constexpr int kEnumCap = 22;  // 2^n mask scans beyond this are out of desk scale
}

Mask compress_mask(Mask m, Mask sel) {
    Mask out = 0;
    int pos = 0;
    while (sel) {
        const int i = lowest_bit(sel);
        if (has_bit(m, i)) out |= bit(pos);
        ++pos;
        sel &= sel - 1;
    }
    return out;
}

Mask spread_mask(Mask m, Mask sel) {
    Mask out = 0;
    int pos = 0;
    while (sel) {
        const int i = lowest_bit(sel);
        if (has_bit(m, pos)) out |= bit(i);
        ++pos;
        sel &= sel - 1;
    }
    return out;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 64) throw std::invalid_argument("Universe: more than 64 elements");
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("Universe: duplicate label '" + labels_[i] + "'");
    }
}

std::optional<int> Universe::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> Universe::mask_labels(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (has_bit(m, i)) out.push_back(labels_[i]);
    return out;
}

Mask Universe::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) {
        auto idx = index_of(l);
        if (!idx) throw std::invalid_argument("Universe: unknown label '" + l + "'");
        m |= bit(*idx);
    }
    return m;
}

SetFamily SetFamily::make(Universe u, std::vector<Mask> members) {
    const Mask full = u.full_mask();
    for (Mask m : members)
        if ((m & ~full) != 0)
            throw std::invalid_argument("SetFamily: member outside universe width");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SetFamily{std::move(u), std::move(members)};
}

bool SetFamily::contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

std::string sign_vector_str(const SignVector& sv, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (i) out += ',';
        out += sv.at(i) > 0 ? '+' : sv.at(i) < 0 ? '-' : '0';
    }
    return out;
}

SignVector parse_sign_vector(const std::string& s, int n) {
    SignVector sv;
    int i = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
        const char c = s[p];
        if (c == ',' || c == ' ') continue;
        if (i >= n) throw std::invalid_argument("sign vector longer than universe");
        if (c == '+')
            sv.plus |= bit(i);
        else if (c == '-')
            sv.minus |= bit(i);
        else if (c != '0')
            throw std::invalid_argument("sign vector: bad character");
        ++i;
    }
    if (i != n) throw std::invalid_argument("sign vector shorter than universe");
    return sv;
}

SetFamily complement_family(const SetFamily& f) {
    const int n = f.n();
    if (n > kEnumCap)
        throw std::invalid_argument("complement_family: universe too large to enumerate");
    std::vector<Mask> out;
    out.reserve((std::size_t{1} << n) - f.size());
    std::size_t j = 0;
    for (Mask m = 0; m <= f.universe.full_mask(); ++m) {
        while (j < f.members.size() && f.members[j] < m) ++j;
        if (j < f.members.size() && f.members[j] == m) continue;
        out.push_back(m);
        if (m == f.universe.full_mask()) break;  // n == 64 overflow guard (unreachable here)
    }
    return SetFamily{f.universe, std::move(out)};
}

Universe sub_universe(const Universe& u, Mask y) {
    std::vector<std::string> labels;
    for (int i = 0; i < u.size(); ++i)
        if (has_bit(y, i)) labels.push_back(u.label(i));
    return Universe(std::move(labels));
}

SetFamily trace(const SetFamily& f, Mask y) {
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask m : f.members) out.push_back(compress_mask(m & y, y));
    return SetFamily::make(sub_universe(f.universe, y), std::move(out));
}

bool is_shattered(const SetFamily& f, Mask x) {
    const int k = popcount(x);
    if (k > kEnumCap) throw std::invalid_argument("is_shattered: set too large");
    const std::size_t need = std::size_t{1} << k;
    std::vector<bool> seen(need, false);
    std::size_t count = 0;
    for (Mask m : f.members) {
        const Mask sub = compress_mask(m & x, x);
        if (!seen[sub]) {
            seen[sub] = true;
            if (++count == need) return true;
        }
    }
    return false;
}

bool is_strongly_shattered(const SetFamily& f, Mask x) {
    const int k = popcount(x);
    if (k > kEnumCap) throw std::invalid_argument("is_strongly_shattered: set too large");
    // Candidate supports are Y = S \ X for members S; the X-cube over Y must
    // be entirely inside the family.
    std::set<Mask> supports;
    for (Mask m : f.members) supports.insert(m & ~x);
    const Mask full_sub = x;
    for (Mask y : supports) {
        bool all = true;
        // iterate sub-masks of x
        Mask sub = full_sub;
        while (true) {
            if (!f.contains(y | sub)) {
                all = false;
                break;
            }
            if (sub == 0) break;
            sub = (sub - 1) & full_sub;
        }
        if (all) return true;
    }
    return false;
}

std::vector<Mask> shattered_sets(const SetFamily& f) {
    std::vector<Mask> result;
    if (f.members.empty()) return result;
    result.push_back(0);  // empty set is shattered by any nonempty family
    const int n = f.n();
    std::set<Mask> level = {Mask{0}};
    while (!level.empty()) {
        std::set<Mask> next;
        for (Mask x : level) {
            for (int e = 0; e < n; ++e) {
                if (has_bit(x, e)) continue;
                const Mask cand = x | bit(e);
                if (next.count(cand)) continue;
                // all k-subsets of cand must be shattered already
                bool closed = true;
                for (Mask drop = cand; drop; drop &= drop - 1) {
                    if (!level.count(cand & ~(drop & -drop))) {
                        closed = false;
                        break;
                    }
                }
                if (closed && is_shattered(f, cand)) next.insert(cand);
            }
        }
        for (Mask x : next) result.push_back(x);
        level = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

int vc_dimension(const SetFamily& f) {
    if (f.members.empty()) throw std::invalid_argument("vc_dimension: empty family");
    int best = 0;
    for (Mask x : shattered_sets(f)) best = std::max(best, popcount(x));
    return best;
}

bool is_ample(const SetFamily& f) {
    for (Mask x : shattered_sets(f))
        if (!is_strongly_shattered(f, x)) return false;
    return true;
}

std::vector<SignVector> maximal_cubes(const SetFamily& f) {
    const Mask full = f.universe.full_mask();
    // Cube = (free set X, support Y), Y ⊆ U\X; present iff every Y ∪ X',
    // X' ⊆ X, is a member.  Level k holds cubes with |X| = k.
    using Cube = std::pair<Mask, Mask>;  // (free, support)
    std::vector<SignVector> out;
    std::set<Cube> level;
    for (Mask m : f.members) level.insert({0, m});
    while (!level.empty()) {
        std::set<Cube> next;
        for (const auto& [fr, sup] : level) {
            bool extendable = false;
            for (int e = 0; e < f.n(); ++e) {
                if (has_bit(fr, e)) continue;
                const Cube partner{fr, sup ^ bit(e)};
                if (level.count(partner)) {
                    extendable = true;
                    next.insert({fr | bit(e), sup & ~bit(e)});
                }
            }
            if (!extendable) {
                SignVector sv;
                sv.plus = sup;
                sv.minus = full & ~(fr | sup);
                out.push_back(sv);
            }
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), [full](const SignVector& a, const SignVector& b) {
        const Mask za = full & ~(a.plus | a.minus), zb = full & ~(b.plus | b.minus);
        return za != zb ? za < zb : a.plus < b.plus;
    });
    return out;
}

}  // namespace og
