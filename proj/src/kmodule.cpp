#include "gk/kmodule.hpp"

#include <sstream>

#include "gk/pbw.hpp"

namespace gk {

Weight weight_add(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw error("weight_add: rank mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Weight weight_sub(const Weight& a, const Weight& b) { return weight_add(a, weight_neg(b)); }

Weight weight_neg(const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

long long weight_dot(const Weight& a, const std::vector<long long>& b) {
    if (a.size() != b.size()) throw error("weight_dot: rank mismatch");
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string weight_text(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

KModule KModule::trivial(BaseRing R, std::vector<std::string> ls) {
    KModule V;
    V.cls = GroupClass::Trivial;
    V.ring = std::move(R);
    V.labels = std::move(ls);
    return V;
}

KModule KModule::torus(BaseRing R, std::vector<std::string> ls, std::vector<Weight> ws) {
    KModule V;
    V.cls = GroupClass::Torus;
    V.ring = std::move(R);
    V.labels = std::move(ls);
    V.weights = std::move(ws);
    if (V.labels.size() != V.weights.size()) throw error("torus module: weight table size mismatch");
    V.char_rank = V.weights.empty() ? 0 : static_cast<int>(V.weights[0].size());
    for (const auto& w : V.weights)
        if (static_cast<int>(w.size()) != V.char_rank) throw error("torus module: ragged weights");
    return V;
}

namespace {

int nilpotency_bound(const KModule& V) { return static_cast<int>(V.distinct_weights().size()) + 1; }

void certify_ops(KModule& V) {
    int m = nilpotency_bound(V);
    for (auto& op : V.ops) {
        auto re = divided_power_check(op.e, m);
        if (!re.pass) throw error("chevalley module: e operator fails divided powers: " + re.witness);
        auto rf = divided_power_check(op.f, m);
        if (!rf.pass) throw error("chevalley module: f operator fails divided powers: " + rf.witness);
        op.e_div = std::move(re.powers);
        op.f_div = std::move(rf.powers);
    }
}

}  // namespace

KModule KModule::chevalley(BaseRing R, std::vector<std::string> ls, std::vector<Weight> ws,
                           std::vector<ChevalleyOps> ops) {
    KModule V = torus(std::move(R), std::move(ls), std::move(ws));
    V.cls = GroupClass::Chevalley;
    V.ops = std::move(ops);
    certify_ops(V);
    auto rep = validate_kmodule(V);
    if (!rep.ok) throw error("chevalley module: " + rep.message);
    return V;
}

std::set<Weight> KModule::distinct_weights() const {
    return std::set<Weight>(weights.begin(), weights.end());
}

Mat KModule::weight_projection(const Weight& mu) const {
    Mat P(ring, rank(), rank());
    for (int i = 0; i < rank(); ++i)
        if (weights[static_cast<size_t>(i)] == mu) P.at(i, i) = RingElem(1);
    return P;
}

bool KModule::same_group(const KModule& o) const {
    if (cls != o.cls || char_rank != o.char_rank) return false;
    if (ops.size() != o.ops.size()) return false;
    for (size_t k = 0; k < ops.size(); ++k)
        if (ops[k].alpha != o.ops[k].alpha || ops[k].coroot != o.ops[k].coroot) return false;
    return true;
}

KValidationReport validate_kmodule(const KModule& V) {
    if (V.cls == GroupClass::Trivial) return {};
    if (V.weights.size() != V.labels.size()) return {false, "weight table size mismatch"};
    for (const auto& op : V.ops) {
        if (static_cast<int>(op.alpha.size()) != V.char_rank ||
            static_cast<int>(op.coroot.size()) != V.char_rank)
            return {false, "operator root data rank mismatch"};
        if (weight_dot(op.alpha, op.coroot) != 2) return {false, "<alpha, alpha^vee> != 2"};
        // support: e raises weights by alpha, f lowers
        for (int i = 0; i < V.rank(); ++i)
            for (int j = 0; j < V.rank(); ++j) {
                if (!op.e.at(i, j).is_zero() &&
                    V.weights[static_cast<size_t>(i)] !=
                        weight_add(V.weights[static_cast<size_t>(j)], op.alpha))
                    return {false, "e does not shift weights by alpha at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")"};
                if (!op.f.at(i, j).is_zero() &&
                    V.weights[static_cast<size_t>(i)] !=
                        weight_sub(V.weights[static_cast<size_t>(j)], op.alpha))
                    return {false, "f does not shift weights by -alpha at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")"};
            }
        // [e,f] = <mu, coroot> on the weight-mu component
        Mat comm = op.e * op.f - op.f * op.e;
        for (int i = 0; i < V.rank(); ++i)
            for (int j = 0; j < V.rank(); ++j) {
                RingElem want = (i == j)
                                    ? RingElem(weight_dot(V.weights[static_cast<size_t>(i)], op.coroot))
                                    : RingElem(0);
                if (comm.at(i, j) != want)
                    return {false, "[e,f] does not act by the coroot pairing at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")"};
            }
        if (op.e_div.empty() || op.f_div.empty())
            return {false, "operators lack divided-power certificates"};
    }
    return {};
}

std::vector<Mat> comodule_operators(const KModule& V) {
    std::vector<Mat> ops;
    if (V.cls == GroupClass::Trivial) return ops;
    for (const Weight& mu : V.distinct_weights()) ops.push_back(V.weight_projection(mu));
    for (const auto& op : V.ops) {
        for (size_t j = 1; j < op.e_div.size(); ++j)
            if (!op.e_div[j].is_zero()) ops.push_back(op.e_div[j]);
        for (size_t j = 1; j < op.f_div.size(); ++j)
            if (!op.f_div[j].is_zero()) ops.push_back(op.f_div[j]);
    }
    return ops;
}

Sublattice generated_subcomodule(const KModule& V, const Mat& gens, std::optional<BaseRing> coeff) {
    BaseRing cr = coeff.value_or(V.ring);
    std::vector<Mat> ops = comodule_operators(V);
    Lattice L = Lattice::span(cr, V.ring, gens);
    for (;;) {
        Mat acc = L.basis();
        for (const Mat& T : ops) acc = Mat::hcat(acc, T * L.basis());
        Lattice next = Lattice::span(cr, V.ring, acc);
        if (next == L) break;
        L = next;
    }
    Sublattice out{V, L, false};
    if (cr == V.ring && !V.ring.is_field() && L.rank() > 0) out.saturated = L.is_saturated_in_ambient();
    return out;
}

Sublattice maximal_subcomodule(const KModule& V, const Lattice& V0) {
    std::vector<Mat> ops = comodule_operators(V);
    Lattice L = V0;
    for (;;) {
        std::vector<Lattice> targets(ops.size(), L);
        Lattice next = constrained_sublattice(L, ops, targets);
        if (next == L) break;
        L = next;
    }
    Sublattice out{V, L, false};
    if (L.coeff() == V.ring && !V.ring.is_field() && L.rank() > 0)
        out.saturated = L.is_saturated_in_ambient();
    return out;
}

Sublattice invariants_K(const KModule& V) {
    if (V.cls == GroupClass::Trivial)
        return {V, Lattice::full(V.ring, V.ring, V.rank()), true};
    Weight zero(static_cast<size_t>(V.char_rank), 0);
    // rows: one selector per nonzero-weight coordinate, then e and f per pair
    std::vector<Mat> blocks;
    Mat sel(V.ring, V.rank(), V.rank());
    for (int i = 0; i < V.rank(); ++i)
        if (V.weights[static_cast<size_t>(i)] != zero) sel.at(i, i) = RingElem(1);
    blocks.push_back(sel);
    for (const auto& op : V.ops) {
        blocks.push_back(op.e);
        blocks.push_back(op.f);
    }
    Mat stacked = blocks[0];
    for (size_t k = 1; k < blocks.size(); ++k) stacked = Mat::vcat(stacked, blocks[k]);
    Mat K = kernel_basis(stacked);
    Lattice L = Lattice::span(V.ring, V.ring, K);
    return {V, L, L.rank() == 0 || L.is_saturated_in_ambient()};
}

namespace {

void require_same_group(const KModule& V, const KModule& W, const char* who) {
    if (!V.same_group(W)) throw error(std::string(who) + ": modules over different groups");
    if (!(V.ring == W.ring)) throw error(std::string(who) + ": modules over different rings");
}

}  // namespace

KModule internal_hom_K(const KModule& V, const KModule& W) {
    require_same_group(V, W, "internal_hom_K");
    int rv = V.rank(), rw = W.rank();
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(rv) * rw);
    for (int i = 0; i < rw; ++i)
        for (int j = 0; j < rv; ++j) labels.push_back(W.labels[i] + "(x)" + V.labels[j] + "*");
    if (V.cls == GroupClass::Trivial) {
        KModule H = KModule::trivial(V.ring, labels);
        return H;
    }
    std::vector<Weight> ws;
    for (int i = 0; i < rw; ++i)
        for (int j = 0; j < rv; ++j)
            ws.push_back(weight_sub(W.weights[static_cast<size_t>(i)], V.weights[static_cast<size_t>(j)]));
    if (V.cls == GroupClass::Torus) return KModule::torus(V.ring, labels, ws);
    std::vector<ChevalleyOps> hops;
    Mat Iv = Mat::identity(V.ring, rv), Iw = Mat::identity(V.ring, rw);
    for (size_t k = 0; k < V.ops.size(); ++k) {
        ChevalleyOps op;
        op.alpha = V.ops[k].alpha;
        op.coroot = V.ops[k].coroot;
        // (x.f)(v) = x f(v) - f(x v): flat index (i,j) = i*rv + j, row-major vec
        op.e = Mat::kron(W.ops[k].e, Iv) - Mat::kron(Iw, V.ops[k].e.transpose());
        op.f = Mat::kron(W.ops[k].f, Iv) - Mat::kron(Iw, V.ops[k].f.transpose());
        hops.push_back(std::move(op));
    }
    return KModule::chevalley(V.ring, labels, ws, hops);
}

KModule tensor_K(const KModule& V, const KModule& W) {
    require_same_group(V, W, "tensor_K");
    int rv = V.rank(), rw = W.rank();
    std::vector<std::string> labels;
    for (int i = 0; i < rv; ++i)
        for (int j = 0; j < rw; ++j) labels.push_back(V.labels[i] + "(x)" + W.labels[j]);
    if (V.cls == GroupClass::Trivial) return KModule::trivial(V.ring, labels);
    std::vector<Weight> ws;
    for (int i = 0; i < rv; ++i)
        for (int j = 0; j < rw; ++j)
            ws.push_back(weight_add(V.weights[static_cast<size_t>(i)], W.weights[static_cast<size_t>(j)]));
    if (V.cls == GroupClass::Torus) return KModule::torus(V.ring, labels, ws);
    std::vector<ChevalleyOps> tops;
    Mat Iv = Mat::identity(V.ring, rv), Iw = Mat::identity(V.ring, rw);
    for (size_t k = 0; k < V.ops.size(); ++k) {
        ChevalleyOps op;
        op.alpha = V.ops[k].alpha;
        op.coroot = V.ops[k].coroot;
        op.e = Mat::kron(V.ops[k].e, Iw) + Mat::kron(Iv, W.ops[k].e);
        op.f = Mat::kron(V.ops[k].f, Iw) + Mat::kron(Iv, W.ops[k].f);
        tops.push_back(std::move(op));
    }
    return KModule::chevalley(V.ring, labels, ws, tops);
}

KModule unit_K(const KModule& like) {
    if (like.cls == GroupClass::Trivial) return KModule::trivial(like.ring, {"1"});
    Weight zero(static_cast<size_t>(like.char_rank), 0);
    if (like.cls == GroupClass::Torus) return KModule::torus(like.ring, {"1"}, {zero});
    std::vector<ChevalleyOps> ops;
    for (const auto& op : like.ops) {
        ChevalleyOps z;
        z.alpha = op.alpha;
        z.coroot = op.coroot;
        z.e = Mat(like.ring, 1, 1);
        z.f = Mat(like.ring, 1, 1);
        ops.push_back(std::move(z));
    }
    return KModule::chevalley(like.ring, {"1"}, {zero}, ops);
}

KModule dual_K(const KModule& V) { return internal_hom_K(V, unit_K(V)); }

KModule base_change(const RingMap& f, const KModule& V) {
    KModule W = V;
    W.ring = f.target;
    for (auto& op : W.ops) {
        op.e = apply_ring_map(f, op.e);
        op.f = apply_ring_map(f, op.f);
        op.e_div.clear();
        op.f_div.clear();
    }
    if (W.cls == GroupClass::Chevalley) certify_ops(W);
    return W;
}

std::optional<Weight> homogeneous_weight(const KModule& V, const Mat& col) {
    std::optional<Weight> w;
    for (int i = 0; i < V.rank(); ++i) {
        if (col.at(i, 0).is_zero()) continue;
        const Weight& wi = V.weights[static_cast<size_t>(i)];
        if (!w) w = wi;
        else if (*w != wi) return std::nullopt;
    }
    if (!w && V.rank() > 0) w = V.weights.empty() ? Weight{} : Weight(static_cast<size_t>(V.char_rank), 0);
    return w;
}

KModule restrict_kmodule(const KModule& V, const Lattice& L, const std::string& label_prefix) {
    int r = L.rank();
    std::vector<std::string> labels;
    for (int j = 0; j < r; ++j) labels.push_back(label_prefix + std::to_string(j));
    const BaseRing& sub_ring = L.coeff();
    if (V.cls == GroupClass::Trivial) return KModule::trivial(sub_ring, labels);

    std::vector<Weight> ws;
    for (int j = 0; j < r; ++j) {
        auto w = homogeneous_weight(V, L.basis().col(j));
        if (!w) throw error("restrict_kmodule: basis column " + std::to_string(j) +
                            " is not weight-homogeneous");
        ws.push_back(*w);
    }
    if (V.cls == GroupClass::Torus) return KModule::torus(sub_ring, labels, ws);

    std::vector<ChevalleyOps> rops;
    for (const auto& op : V.ops) {
        ChevalleyOps ro;
        ro.alpha = op.alpha;
        ro.coroot = op.coroot;
        auto ec = L.coords_of(op.e * L.basis());
        auto fc = L.coords_of(op.f * L.basis());
        if (!ec || !fc) throw error("restrict_kmodule: lattice not operator-stable");
        ro.e = ec->with_ring(sub_ring);
        ro.f = fc->with_ring(sub_ring);
        rops.push_back(std::move(ro));
    }
    return KModule::chevalley(sub_ring, labels, ws, rops);
}

}  // namespace gk
