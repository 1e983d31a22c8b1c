#pragma once

#include <set>

#include "gk/lattice.hpp"

namespace gk {

/// Weight = character of a split torus, an integer vector of fixed length.
using Weight = std::vector<long long>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
long long weight_dot(const Weight& a, const std::vector<long long>& b);
std::string weight_text(const Weight& w);

enum class GroupClass { Trivial, Torus, Chevalley };

/// Raising/lowering pair of an SL2-type operator: e shifts weights by +alpha,
/// f by -alpha, and [e,f] acts on the weight-mu component as <mu, coroot>.
struct ChevalleyOps {
    Weight alpha;
    std::vector<long long> coroot;
    Mat e, f;
    std::vector<Mat> e_div, f_div;  // divided powers e^{(j)}, f^{(j)}, j = 0..bound
};

/// K-module encoding: a weight-graded lattice for a split torus, optionally
/// with certified divided-power operators for SL2-type groups, or a bare
/// lattice with trivial K.
struct KModule {
    GroupClass cls = GroupClass::Trivial;
    BaseRing ring;
    std::vector<std::string> labels;
    int char_rank = 0;
    std::vector<Weight> weights;     // empty iff Trivial
    std::vector<ChevalleyOps> ops;   // Chevalley only

    static KModule trivial(BaseRing R, std::vector<std::string> labels);
    static KModule torus(BaseRing R, std::vector<std::string> labels, std::vector<Weight> ws);
    /// Validates supports, certifies divided powers, checks the [e,f] pairing.
    static KModule chevalley(BaseRing R, std::vector<std::string> labels, std::vector<Weight> ws,
                             std::vector<ChevalleyOps> ops);

    int rank() const { return static_cast<int>(labels.size()); }
    std::set<Weight> distinct_weights() const;
    Mat weight_projection(const Weight& mu) const;
    bool same_group(const KModule& other) const;
};

struct KValidationReport {
    bool ok = true;
    std::string message = "ok";
};

KValidationReport validate_kmodule(const KModule& V);

/// Weight projections plus every stored divided power of positive index:
/// exactly the operator family whose stable lattices are the subcomodules
/// in this encoding.
std::vector<Mat> comodule_operators(const KModule& V);

struct Sublattice {
    KModule ambient;
    Lattice lat;
    bool saturated = false;  // meaningful when lat.coeff() == ambient ring
};

/// Smallest subcomodule containing the columns of gens; coefficients may be
/// taken in a subring (ZZ inside QQ) to extract integral forms.
Sublattice generated_subcomodule(const KModule& V, const Mat& gens,
                                 std::optional<BaseRing> coeff = std::nullopt);

/// Largest subcomodule of V contained in the sublattice V0.
Sublattice maximal_subcomodule(const KModule& V, const Lattice& V0);

/// Torus: the weight-0 part.  Chevalley: weight-0 meet ker(e) meet ker(f).
/// Trivial: everything.
Sublattice invariants_K(const KModule& V);

KModule internal_hom_K(const KModule& V, const KModule& W);  // basis w_i (x) v_j*
KModule tensor_K(const KModule& V, const KModule& W);        // basis v_i (x) w_j
KModule unit_K(const KModule& like);                         // trivial rank 1, same group
KModule dual_K(const KModule& V);

KModule base_change(const RingMap& f, const KModule& V);

/// K-structure induced on a subcomodule lattice; basis columns must be
/// weight-homogeneous and operator-stable (they are, for closure outputs).
KModule restrict_kmodule(const KModule& V, const Lattice& L, const std::string& label_prefix);

/// Weight of a homogeneous ambient vector, if homogeneous.
std::optional<Weight> homogeneous_weight(const KModule& V, const Mat& col);

}  // namespace gk
