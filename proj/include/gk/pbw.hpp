#pragma once

#include <compare>
#include <map>

#include "gk/lie.hpp"

namespace gk {

/// Exponent vector (n_1,...,n_s) of an ordered monomial x_1^{n_1}...x_s^{n_s}
/// relative to a fixed ordered basis.
struct PBWMonomial {
    std::vector<unsigned> exp;

    int degree() const {
        int d = 0;
        for (unsigned e : exp) d += static_cast<int>(e);
        return d;
    }
    static PBWMonomial one(int n) { return {std::vector<unsigned>(static_cast<size_t>(n), 0u)}; }
    bool operator==(const PBWMonomial&) const = default;
    // degree, then lexicographic: a deterministic total order for map keys
    std::strong_ordering operator<=>(const PBWMonomial& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        for (size_t i = 0; i < exp.size(); ++i)
            if (auto c = exp[i] <=> o.exp[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    std::string to_text(const std::vector<std::string>& labels) const;
};

/// Element of U(L) in the PBW basis of a chosen basis order.
using UElem = std::map<PBWMonomial, RingElem>;

void uelem_add(UElem& into, const PBWMonomial& m, const RingElem& c);
bool uelem_equal(const UElem& a, const UElem& b);

enum class StraightenStrategy { FirstInversion, LastInversion };

/// Straightening context: a Lie algebra together with a total order on its
/// basis (given as the list of original indices in increasing PBW position).
class PBWContext {
  public:
    PBWContext(LieAlgebraData L, std::vector<int> order);

    const LieAlgebraData& lie() const { return lie_; }
    int rank() const { return lie_.rank(); }
    /// PBW position of original basis index i.
    int position(int i) const { return pos_[i]; }
    int index_at(int p) const { return order_[p]; }

    /// Rewrites a word (list of original basis indices) into the ordered basis.
    UElem straighten(const std::vector<int>& word,
                     StraightenStrategy strategy = StraightenStrategy::FirstInversion) const;

    std::vector<int> word_of(const PBWMonomial& m) const;
    UElem mul(const UElem& a, const UElem& b, int cap) const;
    UElem from_word(const std::vector<int>& word) const { return straighten(word); }

    /// [x, u] for x given by coordinates in the original basis.
    UElem adjoint_action(const std::vector<RingElem>& x, const UElem& u, int cap) const;

  private:
    LieAlgebraData lie_;
    std::vector<int> order_;  // position -> original index
    std::vector<int> pos_;    // original index -> position
};

/// Spec-surface entry point: rejects words longer than the declared cap.
UElem pbw_straighten(const PBWContext& ctx, const std::vector<int>& word, int cap,
                     StraightenStrategy strategy = StraightenStrategy::FirstInversion);

struct DividedPowerResult {
    bool pass = false;
    bool nilpotent = false;       // precondition N^m = 0
    std::vector<Mat> powers;      // N^{(j)} = N^j / j!, j = 0..m-1, when pass
    std::string witness;          // failure description otherwise
};

/// Checks that N^j / j! preserves the lattice for all j < m, exactly.
DividedPowerResult divided_power_check(const Mat& N, int m);

}  // namespace gk
