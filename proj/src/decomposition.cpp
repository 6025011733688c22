#include "partalg/decomposition.hpp"

#include <algorithm>

#include "partalg/abacus.hpp"
#include "partalg/diagram_poset.hpp"

namespace partalg {

namespace {

size_t index_of(const std::vector<Partition>& labels, const Partition& p) {
    auto it = std::find(labels.begin(), labels.end(), p);
    if (it == labels.end()) throw error("label not found: " + p.str());
    return static_cast<size_t>(it - labels.begin());
}

}  // namespace

long LabeledMatrix::at(const Partition& r, const Partition& c) const {
    return entries[index_of(rows, r)][index_of(cols, c)];
}

long& LabeledMatrix::at(const Partition& r, const Partition& c) {
    return entries[index_of(rows, r)][index_of(cols, c)];
}

bool LabeledMatrix::has_col(const Partition& c) const {
    return std::find(cols.begin(), cols.end(), c) != cols.end();
}

LabeledMatrix labeled_identity(const std::vector<Partition>& rows,
                               const std::vector<Partition>& cols) {
    LabeledMatrix out;
    out.rows = rows;
    out.cols = cols;
    out.entries.assign(rows.size(), std::vector<long>(cols.size(), 0));
    for (const auto& r : rows)
        if (out.has_col(r)) out.at(r, r) = 1;
    return out;
}

LabeledMatrix labeled_product(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (a.cols != b.rows) throw error("labeled matrix product needs aligned labels");
    LabeledMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    out.entries.assign(a.rows.size(), std::vector<long>(b.cols.size(), 0));
    for (size_t i = 0; i < a.rows.size(); ++i)
        for (size_t k = 0; k < a.cols.size(); ++k) {
            if (a.entries[i][k] == 0) continue;
            for (size_t j = 0; j < b.cols.size(); ++j)
                out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
        }
    return out;
}

LabeledMatrix decomp_char0(int n, long delta, bool delta_integral) {
    auto labels = partitions_up_to(n).members;
    LabeledMatrix out = labeled_identity(labels, labels);
    if (!delta_integral) return out;
    auto blocks = blocks_char0(n, delta);
    for (const auto& cls : blocks.classes) {
        auto chain = martin_chain(cls, delta);
        for (size_t i = 0; i + 1 < chain.size(); ++i) out.at(chain[i], chain[i + 1]) = 1;
    }
    return out;
}

namespace {

std::vector<Partition> regular_labels(const std::vector<Partition>& labels, int p) {
    std::vector<Partition> out;
    for (const auto& l : labels)
        if (is_p_regular(l, p)) out.push_back(l);
    return out;
}

Partition hook_partition(int a, int b) {  // (a, 1^b)
    std::vector<int> parts{a};
    for (int i = 0; i < b; ++i) parts.push_back(1);
    return Partition(parts);
}

LabeledMatrix sym_group_decomp_oracle(int m, int p, uint64_t seed, long bound);

}  // namespace

LabeledMatrix sym_group_decomp(int m, int p, uint64_t seed, long bound) {
    auto rows = partitions_of(m);
    auto cols = regular_labels(rows, p);
    if (m < p) return labeled_identity(rows, cols);
    if (m == p) {
        // Peel's composition series of the hook Specht modules assembled with
        // unit rows on the (self-p-core) non-hooks.
        LabeledMatrix out = labeled_identity(rows, cols);
        for (int mm = 1; mm < p - 1; ++mm)
            out.at(hook_partition(p - mm, mm), hook_partition(p - mm + 1, mm - 1)) = 1;
        out.at(hook_partition(1, p - 1), hook_partition(2, p - 2)) = 1;
        return out;
    }
    return sym_group_decomp_oracle(m, p, seed, bound);
}

LabeledMatrix sym_group_block_stack(int n, int p, uint64_t seed, long bound) {
    auto rows = partitions_up_to(n).members;
    auto cols = regular_labels(rows, p);
    LabeledMatrix out;
    out.rows = rows;
    out.cols = cols;
    out.entries.assign(rows.size(), std::vector<long>(cols.size(), 0));
    for (int m = 0; m <= n; ++m) {
        auto block = sym_group_decomp(m, p, seed, bound);
        for (const auto& r : block.rows)
            for (const auto& c : block.cols)
                if (block.at(r, c) != 0) out.at(r, c) = block.at(r, c);
    }
    return out;
}

LabeledMatrix decomp_charp_theorem(const DecompRequest& req) {
    const FieldSpec& spec = req.field;
    spec.validate();
    if (!spec.modular()) throw error("decomp_charp_theorem needs characteristic p");
    const int p = spec.characteristic;
    const int n = req.n;
    auto rows = partitions_up_to(n).members;
    auto cols = regular_labels(rows, p);

    if (spec.delta_is_generator)  // case (i): delta outside F_p
        return sym_group_block_stack(n, p, req.seed, req.bound);

    long delta_rep = ((spec.delta_int % p) + p) % p;

    if (n < p) {
        // Case (ii): one delta+rp-pair target per row, if any.
        LabeledMatrix out = labeled_identity(rows, cols);
        for (const auto& mu : rows) {
            std::optional<Partition> target;
            for (long dp = -n; dp <= 2 * n; ++dp) {
                if (((dp - delta_rep) % p + p) % p != 0) continue;
                for (const auto& lam : rows) {
                    if (!is_delta_pair(mu, lam, dp)) continue;
                    if (target && *target != lam)
                        throw error("two distinct pair targets for row " + mu.str());
                    target = lam;
                }
            }
            if (target) out.at(mu, *target) = 1;
        }
        return out;
    }

    if (n == p && delta_rep == p - 1) {
        // Case (iii): Peel's principal block, characteristic 0 elsewhere.
        LabeledMatrix out = labeled_identity(rows, cols);
        out.at(Partition{}, hook_partition(p, 0)) = 1;
        for (int mm = 1; mm < p - 1; ++mm)
            out.at(hook_partition(p - mm, mm), hook_partition(p - mm + 1, mm - 1)) = 1;
        // Delta_{(1^p)} is simple with a p-regular head; no diagonal entry.
        out.at(hook_partition(1, p - 1), hook_partition(2, p - 2)) = 1;

        LabeledMatrix char0 = decomp_char0(n, p - 1);
        for (const auto& mu : rows) {
            if (p_core(mu, p).empty()) continue;  // principal block handled above
            for (const auto& lam : char0.cols) {
                long e = char0.at(mu, lam);
                if (e == 0) continue;
                if (!out.has_col(lam))
                    throw error("non-principal char-0 entry lands on a p-singular column at " +
                                mu.str() + " -> " + lam.str());
                out.at(mu, lam) = e;
            }
        }
        return out;
    }

    throw unsupported_case("no theorem covers n = " + std::to_string(n) + ", p = " +
                           std::to_string(p) + ", delta = " + spec.delta_str() +
                           "; only the oracle applies");
}

namespace {

// Shared implementation: oracle over the three concrete fields.
template <class F>
LabeledMatrix oracle_impl(const F& f, const typename F::Elt& delta, int n, const FieldSpec& spec,
                          uint64_t seed, long bound) {
    auto rows = partitions_up_to(n).members;
    std::vector<Partition> cols =
        spec.modular() ? regular_labels(rows, spec.characteristic) : rows;

    std::function<bool(const Partition&, const Partition&)> same_block;
    if (!spec.modular()) {
        if (spec.delta_nonintegral)
            same_block = [](const Partition& a, const Partition& b) { return a == b; };
        else
            same_block = [n, d = spec.delta_int](const Partition& a, const Partition& b) {
                return same_block_char0(a, b, d, n);
            };
    } else if (spec.delta_is_generator) {
        same_block = [](const Partition&, const Partition&) { return true; };
    } else {
        int p = spec.characteristic;
        long rep = ((spec.delta_int % p) + p) % p;
        same_block = [n, p, rep](const Partition& a, const Partition& b) {
            return same_block_charp(a, b, rep, p, n);
        };
    }

    return oracle_decomposition<F>(
        f, rows, cols,
        [&](const Partition& lam) { return cell_module(f, delta, lam, n); }, same_block, seed,
        bound);
}

LabeledMatrix sym_group_decomp_oracle(int m, int p, uint64_t seed, long bound) {
    PrimeField f{static_cast<uint64_t>(p)};
    auto rows = partitions_of(m);
    auto cols = regular_labels(rows, p);
    auto same_block = [p](const Partition& a, const Partition& b) {
        return p_core(a, p) == p_core(b, p);
    };
    return oracle_decomposition<PrimeField>(
        f, rows, cols,
        [&](const Partition& lam) { return specht_module(f, lam); }, same_block, seed, bound);
}

template <class R>
R with_spec_field(const FieldSpec& spec,
                  const std::function<R(const Rationals&, const Rationals::Elt&)>& char0,
                  const std::function<R(const PrimeField&, const PrimeField::Elt&)>& charp,
                  const std::function<R(const QuadExtField&, const QuadExtField::Elt&)>& quad) {
    spec.validate();
    if (!spec.modular()) {
        Rationals f;
        // Any non-integral rational is generic: no delta-pair condition can
        // hold, so 1/2 realizes the semisimple regime exactly.
        Rationals::Elt delta =
            spec.delta_nonintegral ? Rationals::Elt(1, 2) : f.from_int(spec.delta_int);
        return char0(f, delta);
    }
    if (spec.delta_is_generator) {
        QuadExtField f = QuadExtField::canonical(spec.characteristic);
        return quad(f, f.x());
    }
    PrimeField f{static_cast<uint64_t>(spec.characteristic)};
    return charp(f, f.from_int(spec.delta_int));
}

}  // namespace

LabeledMatrix decomposition_matrix_oracle(int n, const FieldSpec& spec, uint64_t seed,
                                          long bound) {
    if (n == 0) {
        spec.validate();
        auto labels = partitions_up_to(0).members;
        return labeled_identity(labels, labels);
    }
    return with_spec_field<LabeledMatrix>(
        spec,
        [&](const Rationals& f, const Rationals::Elt& d) {
            return oracle_impl(f, d, n, spec, seed, bound);
        },
        [&](const PrimeField& f, const PrimeField::Elt& d) {
            return oracle_impl(f, d, n, spec, seed, bound);
        },
        [&](const QuadExtField& f, const QuadExtField::Elt& d) {
            return oracle_impl(f, d, n, spec, seed, bound);
        });
}

bool product_check_remark(int p, uint64_t seed, long bound) {
    FieldSpec spec;
    spec.characteristic = p;
    spec.delta_int = p - 1;
    DecompRequest req{p, spec, seed, bound};
    LabeledMatrix theorem = decomp_charp_theorem(req);
    LabeledMatrix dk = decomp_char0(p, p - 1);
    LabeledMatrix s = sym_group_block_stack(p, p, seed, bound);
    return labeled_product(dk, s) == theorem;
}

bool counterexample_check(uint64_t seed, long bound) {
    FieldSpec spec;
    spec.characteristic = 3;
    spec.delta_int = 1;
    LabeledMatrix oracle = decomposition_matrix_oracle(4, spec, seed, bound);

    // Entries forced by lifting characteristic-0 homomorphisms.
    if (oracle.at(Partition::parse("2,1"), Partition::parse("2,1,1")) != 1) return false;
    if (oracle.at(Partition::parse("1"), Partition::parse("4")) < 1) return false;
    if (oracle.at(Partition::parse("2,2"), Partition::parse("4")) == 0) return false;

    LabeledMatrix s = sym_group_block_stack(4, 3, seed, bound);
    for (long delta : {1L, 4L}) {  // the two non-semisimple lifts of 1 mod 3
        LabeledMatrix product = labeled_product(decomp_char0(4, delta), s);
        if (product == oracle) return false;
    }
    return true;
}

long specht_gram_rank(const Partition& lam, const FieldSpec& spec) {
    spec.validate();
    if (spec.modular() && !is_p_regular(lam, spec.characteristic))
        throw p_singular_label("dim D^lambda is undefined at the p-singular " + lam.str());
    auto sp = specht_integral(lam);
    if (!spec.modular()) {
        Rationals f;
        return static_cast<long>(mat_rank(f, mat_from_integral(f, sp.gram)));
    }
    PrimeField f{static_cast<uint64_t>(spec.characteristic)};
    return static_cast<long>(mat_rank(f, mat_from_integral(f, sp.gram)));
}

namespace {

template <class F>
bool psi_check_impl(const F& f, const typename F::Elt& delta, const Partition& mu, int n,
                    long* kernel_dim) {
    auto ctx = cell_context(f, delta, mu, n);
    const long d = ctx.dim;

    // Joint kernel of all p_{i,j}.
    std::vector<Mat<F>> ops;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ops.push_back(ctx.action(generator_diagram(GenKind::p2, i, j, n)));
    Mat<F> stacked = Mat<F>::zero(f, ops.size() * d, d);
    for (size_t k = 0; k < ops.size(); ++k)
        for (long r = 0; r < d; ++r)
            for (long c = 0; c < d; ++c) stacked.at(k * d + r, c) = ops[k].at(r, c);
    Mat<F> kernel = nullspace(f, stacked);
    if (kernel_dim) *kernel_dim = static_cast<long>(kernel.rows);

    // Expected span: psi_y (x) s over the Mobius basis of Psi(n,t).
    EchelonSpace<F> expected(f, d);
    for (const auto& psi : psi_basis(n, ctx.t)) {
        for (long j = 0; j < ctx.sp.dim; ++j) {
            std::vector<typename F::Elt> v(d, f.zero());
            for (const auto& [x, coeff] : psi.terms()) {
                auto dec = decompose_IT(x, ctx.t);
                size_t rep_idx = ctx.rep_index.at(dec.rep);
                auto pm = specht_permutation_matrix(ctx.sp, dec.sigma);
                auto c = eval_delta_poly(f, delta, coeff);
                for (long r = 0; r < ctx.sp.dim; ++r) {
                    auto term = f.mul(c, f.from_int(pm.at(r, j)));
                    size_t idx = ctx.basis_index(rep_idx, r);
                    v[idx] = f.add(v[idx], term);
                }
            }
            expected.add(std::move(v));
        }
    }

    if (expected.dim_space() != kernel.rows) return false;
    for (size_t r = 0; r < kernel.rows; ++r) {
        std::vector<typename F::Elt> v(kernel.cols);
        for (size_t c = 0; c < kernel.cols; ++c) v[c] = kernel.at(r, c);
        if (!expected.contains(v)) return false;
    }
    return true;
}

}  // namespace

bool psi_annihilator_check(const Partition& mu, int n, const FieldSpec& spec, long* kernel_dim) {
    return with_spec_field<bool>(
        spec,
        [&](const Rationals& f, const Rationals::Elt& d) {
            return psi_check_impl(f, d, mu, n, kernel_dim);
        },
        [&](const PrimeField& f, const PrimeField::Elt& d) {
            return psi_check_impl(f, d, mu, n, kernel_dim);
        },
        [&](const QuadExtField& f, const QuadExtField::Elt& d) {
            return psi_check_impl(f, d, mu, n, kernel_dim);
        });
}

namespace {

template <class F>
std::vector<Partition> factors_impl(const F& f, const typename F::Elt& delta, const Partition& mu,
                                    int n, const FieldSpec& spec, uint64_t seed) {
    auto rows = partitions_up_to(n).members;
    std::vector<Partition> cols = spec.modular() ? regular_labels(rows, spec.characteristic) : rows;
    Rng rng(seed);
    auto m = cell_module(f, delta, mu, n);
    auto factors = composition_factors(f, m, rng);
    std::map<Partition, MatrixModule<F>> cells;
    std::vector<std::pair<Partition, const MatrixModule<F>*>> candidates;
    for (const auto& lam : cols) cells.emplace(lam, cell_module(f, delta, lam, n));
    for (const auto& lam : cols) candidates.push_back({lam, &cells.at(lam)});
    std::vector<Partition> out;
    for (const auto& fac : factors) out.push_back(identify_factor(f, fac, candidates, rng));
    std::sort(out.begin(), out.end(), canonical_label_less);
    return out;
}

}  // namespace

std::vector<Partition> cell_module_factors(const Partition& mu, int n, const FieldSpec& spec,
                                           uint64_t seed) {
    return with_spec_field<std::vector<Partition>>(
        spec,
        [&](const Rationals& f, const Rationals::Elt& d) {
            return factors_impl(f, d, mu, n, spec, seed);
        },
        [&](const PrimeField& f, const PrimeField::Elt& d) {
            return factors_impl(f, d, mu, n, spec, seed);
        },
        [&](const QuadExtField& f, const QuadExtField::Elt& d) {
            return factors_impl(f, d, mu, n, spec, seed);
        });
}

std::vector<Partition> specht_module_factors(const Partition& mu, int p, uint64_t seed) {
    PrimeField f{static_cast<uint64_t>(p)};
    Rng rng(seed);
    auto m = specht_module(f, mu);
    auto factors = composition_factors(f, m, rng);
    auto cols = regular_labels(partitions_of(mu.size()), p);
    std::map<Partition, MatrixModule<PrimeField>> cells;
    for (const auto& lam : cols) cells.emplace(lam, specht_module(f, lam));
    std::vector<Partition> out;
    for (const auto& fac : factors) {
        std::vector<std::pair<Partition, const MatrixModule<PrimeField>*>> candidates;
        for (const auto& lam : cols)
            if (p_core(lam, p) == p_core(mu, p)) candidates.push_back({lam, &cells.at(lam)});
        out.push_back(identify_factor(f, fac, candidates, rng));
    }
    std::sort(out.begin(), out.end(), canonical_label_less);
    return out;
}

void validate_cellular_shape(const LabeledMatrix& m) {
    for (const auto& mu : m.rows) {
        for (const auto& lam : m.cols) {
            long e = m.at(mu, lam);
            if (e == 0) continue;
            if (mu == lam) {
                if (e != 1) throw error("diagonal entry != 1 at " + mu.str());
                continue;
            }
            bool above = lam.size() > mu.size() ||
                         (lam.size() == mu.size() && dominance_leq(mu, lam) && !(mu == lam));
            if (!above)
                throw error("cellular order violated at " + mu.str() + " -> " + lam.str());
        }
    }
}

}  // namespace partalg
