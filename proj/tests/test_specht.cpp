#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "partalg/specht.hpp"

using namespace partalg;

namespace {

// Independent tabloid-expansion oracle. A tabloid is keyed by its sorted
// rows; the polytabloid is the signed sum over the column group.
using TabloidVec = std::map<Tableau, long long>;

int perm_sign(const std::vector<int>& from, const std::vector<int>& to) {
    std::map<int, int> pos;
    for (size_t i = 0; i < from.size(); ++i) pos[from[i]] = static_cast<int>(i);
    std::vector<int> perm(to.size());
    for (size_t i = 0; i < to.size(); ++i) perm[i] = pos.at(to[i]);
    int sign = 1;
    std::vector<char> seen(perm.size(), 0);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1, ++len;
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

TabloidVec polytabloid(const Tableau& t) {
    TabloidVec out;
    size_t ncols = 0;
    for (const auto& row : t) ncols = std::max(ncols, row.size());
    std::vector<std::vector<std::pair<int, int>>> columns(ncols);
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t[i].size(); ++j) columns[j].push_back({(int)i, (int)j});
    Tableau cur = t;
    auto rec = [&](auto&& self, size_t col, int sign) -> void {
        if (col == ncols) {
            Tableau key = cur;
            for (auto& row : key) std::sort(row.begin(), row.end());
            out[key] += sign;
            return;
        }
        auto cells = columns[col];
        std::vector<int> vals;
        for (auto [i, j] : cells) vals.push_back(cur[i][j]);
        std::vector<int> sorted_vals = vals;
        std::sort(sorted_vals.begin(), sorted_vals.end());
        std::vector<int> p(vals.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            std::vector<int> arranged(p.size());
            for (size_t k = 0; k < p.size(); ++k) arranged[k] = sorted_vals[p[k]];
            for (size_t k = 0; k < cells.size(); ++k)
                cur[cells[k].first][cells[k].second] = arranged[k];
            self(self, col + 1, sign * perm_sign(vals, arranged));
        } while (std::next_permutation(p.begin(), p.end()));
        for (size_t k = 0; k < cells.size(); ++k) cur[cells[k].first][cells[k].second] = vals[k];
    };
    rec(rec, 0, 1);
    return out;
}

TabloidVec apply_transposition(const TabloidVec& v, int a) {
    TabloidVec out;
    for (const auto& [key, c] : v) {
        Tableau moved = key;
        for (auto& row : moved)
            for (int& x : row) {
                if (x == a)
                    x = a + 1;
                else if (x == a + 1)
                    x = a;
            }
        for (auto& row : moved) std::sort(row.begin(), row.end());
        out[moved] += c;
    }
    return out;
}

std::vector<Partition> shapes_up_to(int m) {
    std::vector<Partition> out;
    for (int k = 0; k <= m; ++k)
        for (const auto& lam : partitions_of(k)) out.push_back(lam);
    return out;
}

}  // namespace

TEST_CASE("dimensions match the hook length formula") {
    for (const auto& lam : shapes_up_to(6)) {
        auto sp = specht_integral(lam);
        CHECK(sp.dim == hook_length_count(lam));
        CHECK(sp.dim == static_cast<long>(standard_tableaux(lam).size()));
    }
    CHECK(specht_integral(Partition::parse("2,1")).dim == 2);
}

TEST_CASE("trivial and sign modules") {
    for (int n = 2; n <= 5; ++n) {
        auto triv = specht_integral(Partition(std::vector<int>{n}));
        CHECK(triv.dim == 1);
        for (const auto& g : triv.gens) CHECK(g.at(0, 0) == 1);
        auto sign = specht_integral(Partition(std::vector<int>(n, 1)));
        CHECK(sign.dim == 1);
        for (const auto& g : sign.gens) CHECK(g.at(0, 0) == -1);
    }
}

TEST_CASE("Coxeter relations") {
    for (const auto& lam : shapes_up_to(6)) {
        auto sp = specht_integral(lam);
        MatI id = mati_identity(sp.dim);
        for (size_t a = 0; a < sp.gens.size(); ++a) {
            CHECK(mati_mul(sp.gens[a], sp.gens[a]) == id);
            if (a + 1 < sp.gens.size()) {
                auto lhs = mati_mul(sp.gens[a], mati_mul(sp.gens[a + 1], sp.gens[a]));
                auto rhs = mati_mul(sp.gens[a + 1], mati_mul(sp.gens[a], sp.gens[a + 1]));
                CHECK(lhs == rhs);
            }
            for (size_t b = a + 2; b < sp.gens.size(); ++b)
                CHECK(mati_mul(sp.gens[a], sp.gens[b]) == mati_mul(sp.gens[b], sp.gens[a]));
        }
    }
}

TEST_CASE("Garnir matrices agree with the tabloid-expansion oracle") {
    for (const auto& lam : shapes_up_to(6)) {
        if (lam.size() < 2) continue;
        auto sp = specht_integral(lam);
        std::vector<TabloidVec> basis_vecs;
        for (const auto& t : sp.tableaux) basis_vecs.push_back(polytabloid(t));
        for (size_t a = 0; a < sp.gens.size(); ++a) {
            for (long col = 0; col < sp.dim; ++col) {
                TabloidVec lhs = apply_transposition(basis_vecs[col], static_cast<int>(a) + 1);
                TabloidVec rhs;
                for (long r = 0; r < sp.dim; ++r) {
                    long long c = sp.gens[a].at(r, col);
                    if (c == 0) continue;
                    for (const auto& [key, v] : basis_vecs[r]) rhs[key] += c * v;
                }
                for (auto& [key, v] : rhs)
                    if (lhs.find(key) == lhs.end()) lhs[key] = 0;
                for (const auto& [key, v] : lhs) CHECK(v == rhs[key]);
            }
        }
    }
}

TEST_CASE("gram matrix") {
    for (const auto& lam : shapes_up_to(5)) {
        auto sp = specht_integral(lam);
        // symmetric, and diagonal entries equal the column-group order
        for (long i = 0; i < sp.dim; ++i)
            for (long j = 0; j < sp.dim; ++j) CHECK(sp.gram.at(i, j) == sp.gram.at(j, i));
    }
    auto sp21 = specht_integral(Partition::parse("2,1"));
    long long det = sp21.gram.at(0, 0) * sp21.gram.at(1, 1) -
                    sp21.gram.at(0, 1) * sp21.gram.at(1, 0);
    CHECK(det == 3);  // rank 1 mod 3, full rank otherwise
}

TEST_CASE("gram form is invariant under the group action") {
    std::mt19937_64 rng(2);
    for (const auto& lam : shapes_up_to(5)) {
        if (lam.size() < 2) continue;
        auto sp = specht_integral(lam);
        for (const auto& g : sp.gens) {
            // g^T G g = G since transpositions are orthogonal for the form
            MatI gt(sp.dim, sp.dim);
            for (long i = 0; i < sp.dim; ++i)
                for (long j = 0; j < sp.dim; ++j) gt.at(i, j) = g.at(j, i);
            CHECK(mati_mul(gt, mati_mul(sp.gram, g)) == sp.gram);
        }
    }
}

TEST_CASE("permutation matrices") {
    auto sp = specht_integral(Partition::parse("2,1"));
    std::vector<int> id{1, 2, 3};
    CHECK(specht_permutation_matrix(sp, id) == mati_identity(2));
    CHECK(specht_permutation_matrix(sp, {2, 1, 3}) == sp.gens[0]);
    CHECK(specht_permutation_matrix(sp, {1, 3, 2}) == sp.gens[1]);

    // Multiplicativity on random pairs for a bigger shape.
    auto sp2 = specht_integral(Partition::parse("3,2"));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> sigma{1, 2, 3, 4, 5}, tau{1, 2, 3, 4, 5};
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        std::vector<int> comp(5);
        for (int i = 0; i < 5; ++i) comp[i] = sigma[tau[i] - 1];
        CHECK(specht_permutation_matrix(sp2, comp) ==
              mati_mul(specht_permutation_matrix(sp2, sigma),
                       specht_permutation_matrix(sp2, tau)));
    }
}
