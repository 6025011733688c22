#pragma once

#include <random>
#include <vector>

#include "partalg/linalg.hpp"
#include "partalg/matrix_module.hpp"

namespace partalg {

using Rng = std::mt19937_64;

template <class F>
std::vector<typename F::Elt> random_vector(const F& f, size_t dim, Rng& rng) {
    std::vector<typename F::Elt> v(dim, f.zero());
    for (auto& e : v) {
        if constexpr (F::is_finite)
            e = f.element_by_index(rng() % f.order());
        else
            e = f.from_int(static_cast<long>(rng() % 9) - 4);
    }
    return v;
}

// Closure of the span of the seeds under the generator action.
template <class F>
EchelonSpace<F> spin_space(const F& f, const std::vector<Mat<F>>& gens, size_t dim,
                           const std::vector<std::vector<typename F::Elt>>& seeds) {
    EchelonSpace<F> space(f, dim);
    std::vector<std::vector<typename F::Elt>> queue;
    for (const auto& s : seeds)
        if (space.add(s)) queue.push_back(s);
    while (!queue.empty()) {
        auto v = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            auto w = mat_vec(f, g, v);
            if (space.add(w)) queue.push_back(std::move(w));
        }
    }
    return space;
}

// Spin with generation bookkeeping: raw[k] = gens[gen_of[k]] * raw[parent[k]]
// for k > 0 (raw vectors are never normalized, so the tree relation is exact).
template <class F>
struct SpinTree {
    EchelonSpace<F> space;
    std::vector<std::vector<typename F::Elt>> raw;
    std::vector<int> parent;
    std::vector<int> gen_of;
};

template <class F>
SpinTree<F> spin_tree(const F& f, const std::vector<Mat<F>>& gens, size_t dim,
                      const std::vector<typename F::Elt>& seed) {
    SpinTree<F> t{EchelonSpace<F>(f, dim), {}, {}, {}};
    if (!t.space.add(seed)) return t;
    t.raw.push_back(seed);
    t.parent.push_back(-1);
    t.gen_of.push_back(-1);
    size_t next = 0;
    while (next < t.raw.size()) {
        auto v = t.raw[next];  // copy; raw grows below
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            auto w = mat_vec(f, gens[gi], v);
            if (t.space.add(w)) {
                t.raw.push_back(std::move(w));
                t.parent.push_back(static_cast<int>(next));
                t.gen_of.push_back(static_cast<int>(gi));
            }
        }
        ++next;
    }
    return t;
}

// A random element of the acting algebra: a short integer combination of
// generator words of length <= 4 (the identity word included).
template <class F>
Mat<F> random_algebra_element(const F& f, const std::vector<Mat<F>>& gens, size_t dim,
                              Rng& rng) {
    Mat<F> out = Mat<F>::zero(f, dim, dim);
    size_t words = 1 + rng() % 3;
    for (size_t w = 0; w < words; ++w) {
        Mat<F> word = Mat<F>::identity(f, dim);
        size_t len = rng() % 5;
        for (size_t k = 0; k < len && !gens.empty(); ++k)
            word = mat_mul(f, word, gens[rng() % gens.size()]);
        typename F::Elt c;
        if constexpr (F::is_finite)
            c = f.element_by_index(1 + rng() % (f.order() - 1));
        else
            c = f.from_int(1 + static_cast<long>(rng() % 4));
        out = mat_add(f, out, mat_scale(f, word, c));
    }
    return out;
}

namespace detail {

// All 1-dimensional subspaces of the row space of `basis`, one representative
// each; empty when the count would exceed the cap (enumeration incomplete).
template <class F>
std::vector<std::vector<typename F::Elt>> projective_points(const F& f, const Mat<F>& basis,
                                                            size_t cap) {
    std::vector<std::vector<typename F::Elt>> out;
    if constexpr (!F::is_finite) {
        return out;
    } else {
        size_t k = basis.rows;
        if (k == 0) return out;
        double count = (std::pow(static_cast<double>(f.order()), static_cast<double>(k)) - 1) /
                       (f.order() - 1);
        if (count > static_cast<double>(cap)) return out;
        // Representatives: first nonzero coordinate equal to 1.
        std::vector<size_t> digits(k, 0);
        while (true) {
            size_t lead = k;
            for (size_t i = 0; i < k; ++i)
                if (digits[i] != 0) {
                    lead = i;
                    break;
                }
            if (lead < k && f.eq(f.element_by_index(digits[lead]), f.one())) {
                std::vector<typename F::Elt> v(basis.cols, f.zero());
                for (size_t i = lead; i < k; ++i) {
                    auto c = f.element_by_index(digits[i]);
                    if (f.is_zero(c)) continue;
                    for (size_t j = 0; j < basis.cols; ++j)
                        v[j] = f.add(v[j], f.mul(c, basis.at(i, j)));
                }
                out.push_back(std::move(v));
            }
            size_t pos = 0;
            while (pos < k && ++digits[pos] == f.order()) digits[pos++] = 0;
            if (pos == k) break;
        }
        return out;
    }
}

}  // namespace detail

// Restriction of the module to an invariant subspace given by a reduced
// echelon basis, and the induced quotient module.
template <class F>
MatrixModule<F> restrict_to(const F& f, const MatrixModule<F>& m, const EchelonSpace<F>& sub) {
    MatrixModule<F> out;
    out.tag = m.tag;
    out.dim = static_cast<long>(sub.dim_space());
    for (const auto& g : m.gens) {
        Mat<F> gg = Mat<F>::zero(f, out.dim, out.dim);
        for (size_t r = 0; r < sub.dim_space(); ++r) {
            auto img = mat_vec(f, g, sub.rows()[r]);
            auto coords = sub.expand(img);
            for (size_t k = 0; k < coords.size(); ++k) gg.at(k, r) = coords[k];
        }
        out.gens.push_back(std::move(gg));
    }
    return out;
}

template <class F>
MatrixModule<F> quotient_by(const F& f, const MatrixModule<F>& m, const EchelonSpace<F>& sub) {
    std::vector<char> is_pivot(m.dim, 0);
    for (size_t c : sub.pivots()) is_pivot[c] = 1;
    std::vector<size_t> comp;
    for (long c = 0; c < m.dim; ++c)
        if (!is_pivot[c]) comp.push_back(c);

    auto reduce_mod_sub = [&](std::vector<typename F::Elt> v) {
        for (size_t r = 0; r < sub.dim_space(); ++r) {
            auto c = v[sub.pivots()[r]];
            if (f.is_zero(c)) continue;
            for (long j = 0; j < m.dim; ++j) v[j] = f.sub(v[j], f.mul(c, sub.rows()[r][j]));
        }
        return v;
    };

    MatrixModule<F> out;
    out.tag = m.tag;
    out.dim = static_cast<long>(comp.size());
    for (const auto& g : m.gens) {
        Mat<F> gg = Mat<F>::zero(f, out.dim, out.dim);
        for (size_t r = 0; r < comp.size(); ++r) {
            std::vector<typename F::Elt> e(m.dim, f.zero());
            e[comp[r]] = f.one();
            auto img = reduce_mod_sub(mat_vec(f, g, e));
            for (size_t k = 0; k < comp.size(); ++k) gg.at(k, r) = img[comp[k]];
        }
        out.gens.push_back(std::move(gg));
    }
    return out;
}

// Dimension of the unital matrix algebra generated by the action; the module
// is absolutely irreducible iff this is dim^2. Capped; returns 0 when skipped.
template <class F>
size_t action_algebra_dim(const F& f, const MatrixModule<F>& m, size_t dim_cap = 64) {
    if (static_cast<size_t>(m.dim) > dim_cap) return 0;
    size_t d = m.dim;
    EchelonSpace<F> space(f, d * d);
    std::vector<Mat<F>> queue;
    Mat<F> id = Mat<F>::identity(f, d);
    space.add(id.data);
    queue.push_back(id);
    while (!queue.empty()) {
        Mat<F> w = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : m.gens) {
            Mat<F> prod = mat_mul(f, w, g);
            if (space.add(prod.data)) queue.push_back(std::move(prod));
        }
    }
    return space.dim_space();
}

// MeatAxe chop: split along kernels of singular algebra elements, certify
// irreducibility by Norton's criterion (complete enumeration of the kernel's
// projective points on both the module and its transpose), with the
// action-algebra dimension as a secondary certificate on small modules.
// Raises chop_budget_exceeded rather than returning a possibly-reducible
// factor.
template <class F>
std::vector<MatrixModule<F>> composition_factors(const F& f, const MatrixModule<F>& m, Rng& rng,
                                                 int budget = 64) {
    std::vector<MatrixModule<F>> out;
    if (m.dim == 0) return out;
    if (m.dim == 1) {
        out.push_back(m);
        return out;
    }
    if (m.gens.empty()) {
        // The algebra is the ground field; the module is dim copies of the
        // trivial simple.
        MatrixModule<F> triv;
        triv.tag = m.tag;
        triv.dim = 1;
        for (long i = 0; i < m.dim; ++i) out.push_back(triv);
        return out;
    }

    const size_t d = m.dim;
    std::vector<Mat<F>> gens_t;
    for (const auto& g : m.gens) gens_t.push_back(mat_transpose(g));

    auto recurse_split = [&](const EchelonSpace<F>& sub) {
        auto factors = composition_factors(f, restrict_to(f, m, sub), rng, budget);
        auto rest = composition_factors(f, quotient_by(f, m, sub), rng, budget);
        out = std::move(factors);
        out.insert(out.end(), rest.begin(), rest.end());
    };

    std::vector<typename F::Elt> shifts;
    if constexpr (F::is_finite) {
        for (size_t i = 0; i < f.order(); ++i) shifts.push_back(f.element_by_index(i));
    } else {
        for (long c : {0, 1, -1, 2, -2}) shifts.push_back(f.from_int(c));
    }

    auto rows_of = [&](const Mat<F>& mat) {
        std::vector<std::vector<typename F::Elt>> rows;
        for (size_t r = 0; r < mat.rows; ++r) {
            std::vector<typename F::Elt> v(mat.cols);
            for (size_t j = 0; j < mat.cols; ++j) v[j] = mat.at(r, j);
            rows.push_back(std::move(v));
        }
        return rows;
    };
    // Splits from a proper dual submodule: its annihilator in M.
    auto split_from_dual = [&](const EchelonSpace<F>& dual_span) {
        Mat<F> perp = nullspace(f, dual_span.basis_matrix());
        auto sub = spin_space(f, m.gens, d, rows_of(perp));
        if (sub.dim_space() == 0 || sub.dim_space() >= d)
            throw error("perp of a proper dual submodule must be proper");
        recurse_split(sub);
    };

    for (int attempt = 0; attempt < budget; ++attempt) {
        // First sweep the generators themselves (often singular), then random
        // short words.
        Mat<F> theta = attempt < static_cast<int>(m.gens.size())
                           ? m.gens[attempt]
                           : random_algebra_element(f, m.gens, d, rng);
        for (const auto& c : shifts) {
            Mat<F> shifted = theta;
            for (size_t i = 0; i < d; ++i) shifted.at(i, i) = f.sub(shifted.at(i, i), c);
            Mat<F> null = nullspace(f, shifted);
            if (null.rows == 0 || null.rows == d) continue;

            // Certification needs every projective point of the kernel spun on
            // both sides; only affordable for small nullity. Larger kernels
            // still yield cheap split attempts from a few vectors.
            auto points = detail::projective_points(f, null, 40);
            bool complete_primal = !points.empty();
            if (points.empty()) {
                points = rows_of(null);
                points.resize(std::min<size_t>(points.size(), 4));
                points.push_back(random_vector(f, null.rows, rng));  // combo coords
                auto& combo = points.back();
                std::vector<typename F::Elt> v(d, f.zero());
                for (size_t r = 0; r < null.rows; ++r)
                    for (size_t j = 0; j < d; ++j)
                        v[j] = f.add(v[j], f.mul(combo[r], null.at(r, j)));
                combo = std::move(v);
            }
            for (const auto& v : points) {
                auto sub = spin_space(f, m.gens, d, {v});
                if (sub.dim_space() > 0 && sub.dim_space() < d) {
                    recurse_split(sub);
                    return out;
                }
            }
            if (!complete_primal) continue;

            Mat<F> null_t = nullspace(f, mat_transpose(shifted));
            auto points_t = detail::projective_points(f, null_t, 40);
            bool complete_dual = !points_t.empty();
            if (points_t.empty()) {
                points_t = rows_of(null_t);
                points_t.resize(std::min<size_t>(points_t.size(), 4));
            }
            bool all_dual_full = true;
            for (const auto& w : points_t) {
                auto dual_span = spin_space(f, gens_t, d, {w});
                if (dual_span.dim_space() > 0 && dual_span.dim_space() < d) {
                    split_from_dual(dual_span);
                    return out;
                }
                if (dual_span.dim_space() < d) all_dual_full = false;
            }

            if (complete_primal && complete_dual && all_dual_full) {
                out.push_back(m);  // certified irreducible (Norton)
                return out;
            }
        }
    }

    // Secondary certificate: a split algebra acts on an irreducible module as
    // the full matrix algebra (cellular algebras are split over any field).
    size_t alg_dim = action_algebra_dim(f, m);
    if (alg_dim == d * d) {
        out.push_back(m);
        return out;
    }
    throw chop_budget_exceeded("chop could not certify a factor of dimension " +
                               std::to_string(d));
}

// dim Hom(M, N) for modules over the same generator list. M must be cyclic
// (cell modules with simple head are); falls back to the dense intertwiner
// system on small modules.
template <class F>
long hom_dim(const F& f, const MatrixModule<F>& m, const MatrixModule<F>& n, Rng& rng) {
    if (m.tag != n.tag || m.gens.size() != n.gens.size())
        throw generator_mismatch("hom_dim needs modules over one algebra");
    if (m.dim == 0 || n.dim == 0) return 0;
    const size_t dm = m.dim, dn = n.dim;

    // Look for a cyclic generator of M.
    SpinTree<F> tree(EchelonSpace<F>(f, dm), {}, {}, {});
    bool cyclic = false;
    for (size_t i = 0; i < dm + 8 && !cyclic; ++i) {
        std::vector<typename F::Elt> seed;
        if (i < dm) {
            seed.assign(dm, f.zero());
            seed[i] = f.one();
        } else {
            seed = random_vector(f, dm, rng);
        }
        tree = spin_tree(f, m.gens, dm, seed);
        cyclic = tree.space.dim_space() == dm;
    }

    if (cyclic) {
        if (dm * dn * dn > 400000000ull)
            throw desk_scale_exceeded("hom_dim instance too large");
        // Express every g * raw[j] over the raw basis with one augmented
        // elimination: columns of A are the raw vectors.
        Mat<F> aug = Mat<F>::zero(f, dm, dm + dm * m.gens.size());
        for (size_t k = 0; k < dm; ++k)
            for (size_t i = 0; i < dm; ++i) aug.at(i, k) = tree.raw[k][i];
        for (size_t j = 0; j < dm; ++j)
            for (size_t gi = 0; gi < m.gens.size(); ++gi) {
                auto w = mat_vec(f, m.gens[gi], tree.raw[j]);
                size_t col = dm + j * m.gens.size() + gi;
                for (size_t i = 0; i < dm; ++i) aug.at(i, col) = w[i];
            }
        auto pivots = rref(f, aug);
        if (pivots.size() != dm || pivots.back() >= dm)
            throw error("raw spin vectors should form a basis");
        // Row r of the reduced system now gives the coefficient of raw[r].

        // W_k: N-side images of the raw tree under a candidate hom image u.
        std::vector<Mat<F>> w_mats;
        w_mats.push_back(Mat<F>::identity(f, dn));
        for (size_t k = 1; k < dm; ++k)
            w_mats.push_back(mat_mul(f, n.gens[tree.gen_of[k]], w_mats[tree.parent[k]]));

        EchelonSpace<F> constraints(f, dn);
        for (size_t j = 0; j < dm && constraints.dim_space() < dn; ++j)
            for (size_t gi = 0; gi < m.gens.size(); ++gi) {
                Mat<F> c = mat_mul(f, n.gens[gi], w_mats[j]);
                size_t col = dm + j * m.gens.size() + gi;
                for (size_t k = 0; k < dm; ++k) {
                    const auto& coeff = aug.at(k, col);
                    if (f.is_zero(coeff)) continue;
                    c = mat_add(f, c, mat_scale(f, w_mats[k], f.neg(coeff)));
                }
                for (size_t r = 0; r < dn; ++r) {
                    std::vector<typename F::Elt> row(dn);
                    for (size_t jj = 0; jj < dn; ++jj) row[jj] = c.at(r, jj);
                    constraints.add(std::move(row));
                }
            }
        return static_cast<long>(dn - constraints.dim_space());
    }

    if (dm * dn > 4096) throw desk_scale_exceeded("hom_dim instance too large for dense solve");
    // Dense intertwiner system: X G_M = G_N X, unknowns X (dn x dm).
    EchelonSpace<F> constraints(f, dn * dm);
    for (size_t gi = 0; gi < m.gens.size(); ++gi) {
        for (size_t i = 0; i < dn; ++i)
            for (size_t j = 0; j < dm; ++j) {
                std::vector<typename F::Elt> row(dn * dm, f.zero());
                for (size_t l = 0; l < dm; ++l)
                    row[i * dm + l] = f.add(row[i * dm + l], m.gens[gi].at(l, j));
                for (size_t k = 0; k < dn; ++k)
                    row[k * dm + j] = f.sub(row[k * dm + j], n.gens[gi].at(i, k));
                constraints.add(std::move(row));
            }
    }
    return static_cast<long>(dn * dm - constraints.dim_space());
}

}  // namespace partalg
