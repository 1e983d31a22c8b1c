#include "gk/pbw.hpp"

#include <sstream>

namespace gk {

std::string PBWMonomial::to_text(const std::vector<std::string>& labels) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << labels[i];
        if (exp[i] > 1) os << "^" << exp[i];
    }
    if (first) os << "1";
    return os.str();
}

void uelem_add(UElem& into, const PBWMonomial& m, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = into.find(m);
    if (it == into.end()) {
        into.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

bool uelem_equal(const UElem& a, const UElem& b) { return a == b; }

PBWContext::PBWContext(LieAlgebraData L, std::vector<int> order)
    : lie_(std::move(L)), order_(std::move(order)) {
    int n = lie_.rank();
    if (static_cast<int>(order_.size()) != n) throw error("PBWContext: order must list every index");
    pos_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        int i = order_[p];
        if (i < 0 || i >= n || pos_[i] >= 0) throw error("PBWContext: bad order permutation");
        pos_[i] = p;
    }
}

UElem PBWContext::straighten(const std::vector<int>& word, StraightenStrategy strategy) const {
    // work queue of (word, coefficient); inversions resolved by
    // x_b x_a = x_a x_b + [x_b, x_a]
    UElem result;
    std::vector<std::pair<std::vector<int>, RingElem>> queue;
    queue.emplace_back(word, RingElem(1));
    while (!queue.empty()) {
        auto [w, coeff] = std::move(queue.back());
        queue.pop_back();
        int inv = -1;
        int len = static_cast<int>(w.size());
        if (strategy == StraightenStrategy::FirstInversion) {
            for (int p = 0; p + 1 < len; ++p)
                if (pos_[w[p]] > pos_[w[p + 1]]) {
                    inv = p;
                    break;
                }
        } else {
            for (int p = len - 2; p >= 0; --p)
                if (pos_[w[p]] > pos_[w[p + 1]]) {
                    inv = p;
                    break;
                }
        }
        if (inv < 0) {
            PBWMonomial m = PBWMonomial::one(rank());
            for (int ltr : w) ++m.exp[static_cast<size_t>(pos_[ltr])];
            uelem_add(result, m, coeff);
            continue;
        }
        int b = w[inv], a = w[inv + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[inv], swapped[inv + 1]);
        queue.emplace_back(std::move(swapped), coeff);
        const auto& br = lie_.bracket(b, a);
        for (int k = 0; k < rank(); ++k) {
            if (br[k].is_zero()) continue;
            std::vector<int> shorter;
            shorter.reserve(w.size() - 1);
            for (int p = 0; p < len; ++p) {
                if (p == inv) shorter.push_back(k);
                else if (p != inv + 1) shorter.push_back(w[p]);
            }
            queue.emplace_back(std::move(shorter), coeff * br[k]);
        }
    }
    return result;
}

std::vector<int> PBWContext::word_of(const PBWMonomial& m) const {
    std::vector<int> w;
    for (int p = 0; p < rank(); ++p)
        for (unsigned e = 0; e < m.exp[static_cast<size_t>(p)]; ++e) w.push_back(order_[p]);
    return w;
}

UElem PBWContext::mul(const UElem& a, const UElem& b, int cap) const {
    UElem out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma.degree() + mb.degree() > cap)
                throw cap_exceeded("product degree " + std::to_string(ma.degree() + mb.degree()) +
                                   " exceeds cap " + std::to_string(cap));
            std::vector<int> w = word_of(ma);
            std::vector<int> wb = word_of(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            UElem s = straighten(w);
            RingElem c = ca * cb;
            for (const auto& [m, coeff] : s) uelem_add(out, m, c * coeff);
        }
    return out;
}

UElem PBWContext::adjoint_action(const std::vector<RingElem>& x, const UElem& u, int cap) const {
    if (static_cast<int>(x.size()) != rank()) throw error("adjoint_action: coordinate size");
    UElem xe;
    for (int i = 0; i < rank(); ++i) {
        if (x[i].is_zero()) continue;
        PBWMonomial m = PBWMonomial::one(rank());
        m.exp[static_cast<size_t>(pos_[i])] = 1;
        uelem_add(xe, m, x[i]);
    }
    UElem xu = mul(xe, u, cap);
    UElem ux = mul(u, xe, cap);
    for (const auto& [m, c] : ux) uelem_add(xu, m, -c);
    return xu;
}

UElem pbw_straighten(const PBWContext& ctx, const std::vector<int>& word, int cap,
                     StraightenStrategy strategy) {
    if (static_cast<int>(word.size()) > cap)
        throw cap_exceeded("word of length " + std::to_string(word.size()) + " exceeds cap " +
                           std::to_string(cap));
    return ctx.straighten(word, strategy);
}

DividedPowerResult divided_power_check(const Mat& N, int m) {
    DividedPowerResult out;
    const BaseRing& R = N.ring();
    if (N.rows() != N.cols()) {
        out.witness = "operator matrix not square";
        return out;
    }
    Mat power = Mat::identity(R, N.rows());
    for (int j = 0; j < m; ++j) {
        Mat next = power * N;  // = N^j after loop entry with power = N^{j-1}
        power = next;
        if (j + 1 == m && !power.is_zero()) {
            out.witness = "operator not nilpotent of order " + std::to_string(m);
            return out;
        }
    }
    out.nilpotent = true;
    out.powers.clear();
    Mat divided = Mat::identity(R, N.rows());
    out.powers.push_back(divided);
    for (int j = 1; j < m; ++j) {
        Mat raw = divided * N;  // N^{(j-1)} * N = j * N^{(j)}
        Mat next(R, N.rows(), N.cols());
        for (int r = 0; r < N.rows(); ++r)
            for (int s = 0; s < N.cols(); ++s) {
                auto q = exact_div(R, raw.at(r, s), RingElem(j));
                if (!q) {
                    out.witness = "N^" + std::to_string(j) + "/" + std::to_string(j) +
                                  "! leaves the lattice at entry (" + std::to_string(r) + "," +
                                  std::to_string(s) + ") = " + to_string(raw.at(r, s)) + "/" +
                                  std::to_string(j);
                    return out;
                }
                next.at(r, s) = *q;
            }
        divided = next;
        out.powers.push_back(divided);
    }
    out.pass = true;
    return out;
}

}  // namespace gk
