#include "klsw/tworow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klsw {
namespace tworow {

ArcDiagram build_diagram(const comb::Word& k) {
    for (int x : k)
        if (x != 1 && x != 2) throw std::invalid_argument("build_diagram: alphabet is {1,2}");
    ArcDiagram d;
    d.word = k;
    std::vector<int> open;
    for (int p = 1; p <= (int)k.size(); ++p) {
        if (k[p - 1] == 2) {
            open.push_back(p);
        } else if (!open.empty()) {
            d.arcs.emplace_back(open.back(), p);
            open.pop_back();
        } else {
            d.unpaired_ones.push_back(p);
        }
    }
    d.unpaired_twos = open;
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

bool is_yamanouchi(const comb::Word& k) { return build_diagram(k).yamanouchi(); }

std::string ArcDiagram::render() const {
    std::ostringstream os;
    os << comb::word_to_string(word) << "  arcs:";
    for (auto& [a, b] : arcs) os << " (" << a << "," << b << ")";
    if (!unpaired_ones.empty()) {
        os << "  unpaired 1s:";
        for (int p : unpaired_ones) os << " " << p;
    }
    if (!unpaired_twos.empty()) {
        os << "  unpaired 2s:";
        for (int p : unpaired_twos) os << " " << p;
    }
    return os.str();
}

comb::Word flip_unpaired_one(const comb::Word& k, int j) {
    auto d = build_diagram(k);
    if (j < 1 || j > (int)d.unpaired_ones.size())
        throw std::invalid_argument("flip_unpaired_one: no such unpaired 1");
    comb::Word out = k;
    out[d.unpaired_ones[j - 1] - 1] = 2;
    return out;
}

std::optional<comb::Word> crystal_f1(const comb::Word& k) {
    auto d = build_diagram(k);
    if (d.unpaired_ones.empty()) return std::nullopt;
    comb::Word out = k;
    out[d.unpaired_ones.back() - 1] = 2;
    return out;
}

std::optional<comb::Word> crystal_e1(const comb::Word& k) {
    auto d = build_diagram(k);
    if (d.unpaired_twos.empty()) return std::nullopt;
    comb::Word out = k;
    out[d.unpaired_twos.front() - 1] = 1;
    return out;
}

std::vector<std::pair<int, comb::Word>> f1_upper_closed_form(const comb::Word& k) {
    auto d = build_diagram(k);
    std::vector<std::pair<int, comb::Word>> out;
    for (int j = 1; j <= (int)d.unpaired_ones.size(); ++j)
        out.emplace_back(j, flip_unpaired_one(k, j));
    return out;
}

std::vector<std::pair<int, comb::Word>> e1_lower_closed_form(const comb::Word& k) {
    std::vector<std::pair<int, comb::Word>> out;
    for (int p = 1; p <= (int)k.size(); ++p) {
        if (k[p - 1] != 2) continue;
        comb::Word kp = k;
        kp[p - 1] = 1;
        auto d = build_diagram(kp);
        auto it = std::find(d.unpaired_ones.begin(), d.unpaired_ones.end(), p);
        if (it == d.unpaired_ones.end()) continue;  // alpha(k', k) = 0
        int alpha = (int)(it - d.unpaired_ones.begin()) + 1;
        out.emplace_back(alpha, kp);
    }
    return out;
}

std::vector<std::pair<RatFn, comb::Word>> projected_lower_tworow(const comb::Word& k) {
    if (!is_yamanouchi(k)) throw std::invalid_argument("projected_lower_tworow: not Yamanouchi");
    const int r = (int)k.size();
    auto content = comb::word_content(k, 2);
    comb::Partition lambda;
    for (int c : content)
        if (c > 0) lambda.push_back(c);
    if (!comb::is_partition(lambda))
        throw std::invalid_argument("projected_lower_tworow: content is not a partition");
    std::vector<std::pair<RatFn, comb::Word>> out;
    out.emplace_back(RatFn::one(), k);
    if (lambda.size() < 2) return out;  // one-row module: nothing to correct
    const int l = lambda[0] - lambda[1];
    comb::Word m(k.begin(), k.end() - 1);  // k_r = 1 for Yamanouchi words
    // the restricted element c'_{(k|_{r-1})-dagger} lies in the cell labeled
    // by P(k|_{r-1}); its shape picks the case
    comb::Partition sh_trunc = comb::rsk(m).first.shape();
    comb::Partition lam1{lambda[0] - 1, lambda[1]}, lam2{lambda[0], lambda[1] - 1};
    if (lam1[1] == 0) lam1.pop_back();
    if (lam2[1] == 0) lam2.pop_back();
    if (lambda[0] - 1 >= lambda[1] && sh_trunc == lam1) {
        const RatFn scale = -(RatFn::one() / RatFn::qint(l + 1));
        for (auto& [alpha, j] : e1_lower_closed_form(m)) {
            auto fj = crystal_f1(j);
            if (!fj) continue;  // term with undefined crystal flip is dropped
            comb::Word w = *fj;
            w.push_back(1);
            // quotient by lower cells: keep only words of the top cell; a
            // non-Yamanouchi word must come from a strictly lower cell
            if (!is_yamanouchi(w)) {
                comb::Partition sh = comb::rsk(w).first.shape();
                if (!(sh != lambda && comb::dominance_leq(lambda, sh)))
                    throw std::logic_error("projected_lower_tworow: stray non-cell term");
                continue;
            }
            out.emplace_back(scale * RatFn::qint(alpha), w);
        }
    } else if (sh_trunc != lam2) {
        throw std::logic_error("projected_lower_tworow: truncated shape outside the dichotomy");
    }
    return out;
}

std::vector<std::pair<RatFn, comb::Tableau>> projected_lower_tworow_tableaux(const comb::Word& k,
                                                                             bool dagger_side) {
    std::vector<std::pair<RatFn, comb::Tableau>> out;
    for (auto& [c, w] : projected_lower_tworow(k)) {
        comb::Tableau q = comb::rsk(w).second;
        out.emplace_back(c, dagger_side ? comb::evacuation(q) : q);
    }
    return out;
}

}  // namespace tworow
}  // namespace klsw
