#pragma once

#include <map>
#include <optional>
#include <vector>

#include "partalg/algebra_element.hpp"
#include "partalg/diagram_poset.hpp"
#include "partalg/errors.hpp"
#include "partalg/fields.hpp"
#include "partalg/linalg.hpp"
#include "partalg/partition.hpp"
#include "partalg/specht.hpp"

namespace partalg {

enum class AlgebraKind { partition_algebra, symmetric_group };

struct ModuleTag {
    AlgebraKind kind = AlgebraKind::partition_algebra;
    int n = 0;  // diagram size, or the m of S_m
    friend bool operator==(const ModuleTag&, const ModuleTag&) = default;
};

// A module given by one square matrix per algebra generator. The generator
// list is fixed globally: adjacent transpositions for S_m, and the
// s/p2/p1 family from module_action_generators() for P_n(delta).
template <class F>
struct MatrixModule {
    ModuleTag tag;
    long dim = 0;
    std::vector<Mat<F>> gens;
    std::optional<Partition> label;
};

template <class F>
Mat<F> mat_from_integral(const F& f, const MatI& m) {
    Mat<F> out = Mat<F>::zero(f, m.rows, m.cols);
    for (size_t i = 0; i < m.data.size(); ++i) out.data[i] = f.from_int(m.data[i]);
    return out;
}

template <class F>
typename F::Elt eval_delta_poly(const F& f, const typename F::Elt& delta, const DeltaPoly& p) {
    auto power = [&](int e) {
        typename F::Elt base = delta;
        if (e < 0) {
            if (f.is_zero(delta)) throw delta_not_invertible("delta = 0 cannot be inverted");
            base = f.inv(delta);
            e = -e;
        }
        typename F::Elt out = f.one();
        for (int k = 0; k < e; ++k) out = f.mul(out, base);
        return out;
    };
    typename F::Elt sum = f.zero();
    for (const auto& [e, c] : p.coeffs()) sum = f.add(sum, f.mul(f.from_int(c), power(e)));
    return sum;
}

template <class F>
MatrixModule<F> specht_module(const F& f, const SpechtIntegral& sp) {
    MatrixModule<F> mod;
    mod.tag = {AlgebraKind::symmetric_group, sp.m};
    mod.dim = sp.dim;
    mod.label = sp.shape;
    for (const auto& g : sp.gens) mod.gens.push_back(mat_from_integral(f, g));
    return mod;
}

template <class F>
MatrixModule<F> specht_module(const F& f, const Partition& lam) {
    return specht_module(f, specht_integral(lam));
}

// Rank of the canonical bilinear form on S^lambda over the field.
template <class F>
long specht_gram_rank_over(const F& f, const Partition& lam) {
    auto sp = specht_integral(lam);
    return static_cast<long>(mat_rank(f, mat_from_integral(f, sp.gram)));
}

// Everything needed to act with arbitrary diagrams on the cell module
// Delta_lambda(n) = V(n,t) (x)_{S_t} S^lambda. The basis is indexed by
// (orbit representative, standard tableau) pairs.
template <class F>
struct CellContext {
    F field;
    typename F::Elt delta;
    int n = 0;
    Partition label;
    int t = 0;
    SpechtIntegral sp;
    std::vector<Diagram> reps;
    std::map<Diagram, size_t> rep_index;
    long dim = 0;

    size_t basis_index(size_t rep, size_t tab) const { return rep * sp.dim + tab; }

    // Matrix of the left action of a single diagram.
    Mat<F> action(const Diagram& g) const {
        const F& f = field;
        if (g.n() != n) throw size_mismatch("diagram size differs from module size");
        Mat<F> out = Mat<F>::zero(f, dim, dim);
        std::map<std::vector<int>, Mat<F>> perm_cache;
        for (size_t k = 0; k < reps.size(); ++k) {
            auto prod = multiply(g, reps[k]);
            if (prod.diagram.propagating_count() < t) continue;  // acts as zero
            auto dec = decompose_IT(prod.diagram, t);
            size_t k2 = rep_index.at(dec.rep);
            auto it = perm_cache.find(dec.sigma);
            if (it == perm_cache.end()) {
                auto mi = specht_permutation_matrix(sp, dec.sigma);
                it = perm_cache.emplace(dec.sigma, mat_from_integral(f, mi)).first;
            }
            const Mat<F>& pm = it->second;
            typename F::Elt scale = f.one();
            for (int a = 0; a < prod.delta_power; ++a) scale = f.mul(scale, delta);
            for (long r = 0; r < sp.dim; ++r)
                for (long c = 0; c < sp.dim; ++c) {
                    if (f.is_zero(pm.at(r, c))) continue;
                    out.at(basis_index(k2, r), basis_index(k, c)) =
                        f.add(out.at(basis_index(k2, r), basis_index(k, c)),
                              f.mul(scale, pm.at(r, c)));
                }
        }
        return out;
    }

    Mat<F> action(const AlgebraElement& e) const {
        const F& f = field;
        Mat<F> out = Mat<F>::zero(f, dim, dim);
        for (const auto& [d, c] : e.terms()) {
            auto scaled = mat_scale(f, action(d), eval_delta_poly(f, delta, c));
            out = mat_add(f, out, scaled);
        }
        return out;
    }

    MatrixModule<F> module() const {
        MatrixModule<F> mod;
        mod.tag = {AlgebraKind::partition_algebra, n};
        mod.dim = dim;
        mod.label = label;
        for (const auto& g : module_action_generators(n)) mod.gens.push_back(action(g));
        return mod;
    }
};

template <class F>
CellContext<F> cell_context(const F& f, const typename F::Elt& delta, const Partition& lam,
                            int n) {
    if (lam.size() > n) throw label_too_large("|" + lam.str() + "| > n = " + std::to_string(n));
    CellContext<F> ctx{f, delta, n, lam, static_cast<int>(lam.size()), specht_integral(lam),
                       {},    {},    0};
    ctx.reps = propagating_orbit_reps(n, ctx.t);
    for (size_t i = 0; i < ctx.reps.size(); ++i) ctx.rep_index[ctx.reps[i]] = i;
    ctx.dim = static_cast<long>(ctx.reps.size()) * ctx.sp.dim;
    return ctx;
}

template <class F>
MatrixModule<F> cell_module(const F& f, const typename F::Elt& delta, const Partition& lam,
                            int n) {
    return cell_context(f, delta, lam, n).module();
}

}  // namespace partalg
