#include "gk/lie.hpp"

#include <algorithm>

namespace gk {

LieAlgebraData::LieAlgebraData(BaseRing R, std::vector<std::string> labels)
    : ring(std::move(R)), basis(std::move(labels)) {
    int n = rank();
    c.assign(n, std::vector<std::vector<RingElem>>(n, std::vector<RingElem>(n)));
}

void LieAlgebraData::set_bracket(int i, int j, const std::vector<RingElem>& v) {
    int n = rank();
    if (static_cast<int>(v.size()) != n) throw error("set_bracket: coefficient size mismatch");
    c[i][j] = v;
    c[j][i].resize(n);
    for (int k = 0; k < n; ++k) c[j][i][k] = -v[k];
}

std::vector<RingElem> LieAlgebraData::bracket_vec(const std::vector<RingElem>& x,
                                                  const std::vector<RingElem>& y) const {
    int n = rank();
    std::vector<RingElem> out(n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            RingElem f = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                if (!c[i][j][k].is_zero()) out[k] += f * c[i][j][k];
        }
    }
    return out;
}

Mat LieAlgebraData::ad(int i) const {
    int n = rank();
    Mat m(ring, n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m.at(k, j) = c[i][j][k];
    return m;
}

int LieAlgebraData::index_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
        if (basis[i] == label) return i;
    throw error("no basis element named " + label);
}

LieValidationReport validate_lie(const LieAlgebraData& L) {
    int n = L.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (static_cast<int>(L.c[i][j].size()) != n)
                return {false, "structure constants not fully populated", std::array<int, 3>{i, j, 0}};
            for (int k = 0; k < n; ++k)
                if (!in_ring(L.ring, L.c[i][j][k]))
                    return {false, "structure constant outside " + L.ring.name(),
                            std::array<int, 3>{i, j, k}};
        }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (!L.c[i][i][k].is_zero())
                return {false, "[x,x] != 0 at basis index " + std::to_string(i),
                        std::array<int, 3>{i, i, k}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (L.c[i][j][k] != -L.c[j][i][k])
                    return {false, "antisymmetry fails", std::array<int, 3>{i, j, k}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                // [[xi,xj],xk] + [[xj,xk],xi] + [[xk,xi],xj] = 0
                std::vector<RingElem> acc(n);
                auto add_term = [&](int a, int b, int cc) {
                    const auto& ab = L.c[a][b];
                    for (int t = 0; t < n; ++t) {
                        if (ab[t].is_zero()) continue;
                        for (int s = 0; s < n; ++s) acc[s] += ab[t] * L.c[t][cc][s];
                    }
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                for (int s = 0; s < n; ++s)
                    if (!acc[s].is_zero())
                        return {false,
                                "Jacobi identity fails on basis triple (" + L.basis[i] + "," +
                                    L.basis[j] + "," + L.basis[k] + ")",
                                std::array<int, 3>{i, j, k}};
            }
    return {true, "ok", std::nullopt};
}

LieAlgebraData reorder_basis(const LieAlgebraData& L, const std::vector<int>& perm) {
    int n = L.rank();
    if (static_cast<int>(perm.size()) != n) throw error("reorder_basis: bad permutation");
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = L.basis[perm[i]];
    LieAlgebraData out(L.ring, labels);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.c[inv[i]][inv[j]][inv[k]] = L.c[i][j][k];
    return out;
}

SubalgebraDecomposition SubalgebraDecomposition::make(const LieAlgebraData& parent,
                                                      std::vector<int> sub,
                                                      std::vector<int> complement) {
    int n = parent.rank();
    std::vector<bool> seen(n, false);
    for (int i : sub) {
        if (i < 0 || i >= n || seen[i]) throw error("decomposition: bad subalgebra index");
        seen[i] = true;
    }
    for (int i : complement) {
        if (i < 0 || i >= n || seen[i]) throw error("decomposition: bad complement index");
        seen[i] = true;
    }
    if (static_cast<int>(sub.size() + complement.size()) != n)
        throw error("decomposition: indices do not exhaust the basis");
    auto closed = [&](const std::vector<int>& part, const char* what) {
        std::vector<bool> inside(n, false);
        for (int i : part) inside[i] = true;
        for (int i : part)
            for (int j : part)
                for (int k = 0; k < n; ++k)
                    if (!parent.c[i][j][k].is_zero() && !inside[k])
                        throw error(std::string("decomposition: ") + what +
                                    " is not closed under the bracket");
    };
    closed(sub, "subalgebra");
    closed(complement, "complement");
    return {std::move(sub), std::move(complement)};
}

LieAlgebraData restrict_to_indices(const LieAlgebraData& L, const std::vector<int>& idx,
                                   const std::string& err_context) {
    std::vector<std::string> labels;
    for (int i : idx) labels.push_back(L.basis[i]);
    LieAlgebraData out(L.ring, labels);
    int m = static_cast<int>(idx.size());
    std::vector<int> pos(L.rank(), -1);
    for (int a = 0; a < m; ++a) pos[idx[a]] = a;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < L.rank(); ++k) {
                const RingElem& x = L.c[idx[a]][idx[b]][k];
                if (x.is_zero()) continue;
                if (pos[k] < 0)
                    throw error(err_context + ": bracket leaves the coordinate subalgebra");
                out.c[a][b][pos[k]] = x;
            }
    return out;
}

}  // namespace gk
