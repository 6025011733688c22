#include "partalg/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "partalg/errors.hpp"

namespace partalg {

MatI mati_mul(const MatI& a, const MatI& b) {
    if (a.cols != b.rows) throw error("integer matrix shape mismatch");
    MatI out(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            long long v = a.at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(k, j);
        }
    return out;
}

MatI mati_identity(size_t n) {
    MatI m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool operator==(const MatI& a, const MatI& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

namespace {

std::vector<int> column_word(const Tableau& t) {
    std::vector<int> word;
    size_t ncols = t.empty() ? 0 : t[0].size();
    for (size_t j = 0; j < ncols; ++j)
        for (const auto& row : t)
            if (j < row.size()) word.push_back(row[j]);
    return word;
}

void standard_rec(const Partition& shape, int next, int m, Tableau& t,
                  std::vector<Tableau>& out) {
    if (next > m) {
        out.push_back(t);
        return;
    }
    for (int i = 0; i < shape.length(); ++i) {
        size_t row_len = t[i].size();
        if (static_cast<int>(row_len) >= shape.part(i + 1)) continue;
        // Rows fill left to right; need the column predecessor present.
        if (i > 0 && t[i - 1].size() <= row_len) continue;
        t[i].push_back(next);
        standard_rec(shape, next + 1, m, t, out);
        t[i].pop_back();
    }
}

// Sign of the permutation sending from[i] -> to[i] (same value sets).
int relative_sign(const std::vector<int>& from, const std::vector<int>& to) {
    std::map<int, int> pos;
    for (size_t i = 0; i < from.size(); ++i) pos[from[i]] = static_cast<int>(i);
    std::vector<int> perm(to.size());
    for (size_t i = 0; i < to.size(); ++i) perm[i] = pos.at(to[i]);
    int sign = 1;
    std::vector<char> seen(perm.size(), 0);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

struct Straightener {
    const Partition& shape;
    const std::vector<Tableau>& standard;
    std::map<Tableau, size_t> standard_index;
    std::map<Tableau, std::vector<long long>> memo;

    explicit Straightener(const Partition& shape_, const std::vector<Tableau>& std_)
        : shape(shape_), standard(std_) {
        for (size_t i = 0; i < standard.size(); ++i) standard_index[standard[i]] = i;
    }

    // Expansion of e_t over standard polytabloids.
    std::vector<long long> expand(const Tableau& t) {
        // Column-sort first; the column group acts by sign.
        Tableau sorted = t;
        int sign = 1;
        size_t ncols = shape.length() == 0 ? 0 : static_cast<size_t>(shape.part(1));
        for (size_t j = 0; j < ncols; ++j) {
            std::vector<int> col;
            for (const auto& row : sorted)
                if (j < row.size()) col.push_back(row[j]);
            std::vector<int> col_sorted = col;
            std::sort(col_sorted.begin(), col_sorted.end());
            sign *= relative_sign(col, col_sorted);
            size_t k = 0;
            for (auto& row : sorted)
                if (j < row.size()) row[j] = col_sorted[k++];
        }
        auto coeffs = expand_column_sorted(sorted);
        if (sign == -1)
            for (auto& c : coeffs) c = -c;
        return coeffs;
    }

    std::vector<long long> expand_column_sorted(const Tableau& t) {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;

        // Find the first row descent.
        int vi = -1, vj = -1;
        for (size_t i = 0; i < t.size() && vi < 0; ++i)
            for (size_t j = 0; j + 1 < t[i].size(); ++j)
                if (t[i][j] > t[i][j + 1]) {
                    vi = static_cast<int>(i);
                    vj = static_cast<int>(j);
                    break;
                }
        if (vi < 0) {
            std::vector<long long> out(standard.size(), 0);
            out[standard_index.at(t)] = 1;
            memo[t] = out;
            return out;
        }

        // Garnir move on the descent: A = column vj rows vi..bottom,
        // B = column vj+1 rows 0..vi.
        std::vector<std::pair<int, int>> cells_a, cells_b;
        for (size_t i = vi; i < t.size(); ++i)
            if (static_cast<size_t>(vj) < t[i].size()) cells_a.push_back({(int)i, vj});
        for (int i = 0; i <= vi; ++i) cells_b.push_back({i, vj + 1});

        std::vector<int> vals;
        for (auto [i, j] : cells_a) vals.push_back(t[i][j]);
        for (auto [i, j] : cells_b) vals.push_back(t[i][j]);
        std::vector<int> orig = vals;
        const size_t ka = cells_a.size();
        std::sort(vals.begin(), vals.end());

        std::vector<long long> out(standard.size(), 0);
        // All splits of the values into new A-cells / B-cells contents, each
        // placed in increasing order. The identity split is the original one.
        std::vector<char> pick(vals.size(), 0);
        std::fill(pick.begin(), pick.begin() + ka, 1);
        std::sort(pick.begin(), pick.end());  // lowest lexicographic selector
        do {
            std::vector<int> in_a, in_b;
            for (size_t i = 0; i < vals.size(); ++i) (pick[i] ? in_a : in_b).push_back(vals[i]);
            std::vector<int> arranged;
            arranged.insert(arranged.end(), in_a.begin(), in_a.end());
            arranged.insert(arranged.end(), in_b.begin(), in_b.end());
            if (arranged == orig) continue;  // tau = id is the left-hand side
            Tableau u = t;
            for (size_t k = 0; k < cells_a.size(); ++k) u[cells_a[k].first][cells_a[k].second] = in_a[k];
            for (size_t k = 0; k < cells_b.size(); ++k) u[cells_b[k].first][cells_b[k].second] = in_b[k];
            int sgn = relative_sign(orig, arranged);
            auto sub = expand(u);
            for (size_t k = 0; k < out.size(); ++k) out[k] -= sgn * sub[k];
        } while (std::next_permutation(pick.begin(), pick.end()));

        memo[t] = out;
        return out;
    }
};

// Tabloid expansion of a polytabloid, used for the Gram form. Tabloids are
// keyed by their sorted rows.
std::map<Tableau, long long> tabloid_expansion(const Partition& shape, const Tableau& t) {
    std::map<Tableau, long long> out;
    size_t ncols = shape.length() == 0 ? 0 : static_cast<size_t>(shape.part(1));
    std::vector<std::vector<std::pair<int, int>>> columns;  // cells per column
    for (size_t j = 0; j < ncols; ++j) {
        std::vector<std::pair<int, int>> col;
        for (size_t i = 0; i < t.size(); ++i)
            if (j < t[i].size()) col.push_back({(int)i, (int)j});
        columns.push_back(col);
    }
    Tableau cur = t;
    std::vector<int> perm_sign_stack;
    auto emit = [&](int sign) {
        Tableau key = cur;
        for (auto& row : key) std::sort(row.begin(), row.end());
        out[key] += sign;
    };
    // Iterate over the full column group as a product of per-column symmetric
    // groups via recursive permutation of each column's values.
    auto rec = [&](auto&& self, size_t col_idx, int sign) -> void {
        if (col_idx == columns.size()) {
            emit(sign);
            return;
        }
        auto& cells = columns[col_idx];
        std::vector<int> vals;
        for (auto [i, j] : cells) vals.push_back(cur[i][j]);
        std::vector<int> sorted_vals = vals;
        std::sort(sorted_vals.begin(), sorted_vals.end());
        std::vector<int> p(sorted_vals.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            std::vector<int> arranged(p.size());
            for (size_t k = 0; k < p.size(); ++k) arranged[k] = sorted_vals[p[k]];
            int s = relative_sign(vals, arranged);
            for (size_t k = 0; k < cells.size(); ++k)
                cur[cells[k].first][cells[k].second] = arranged[k];
            self(self, col_idx + 1, sign * s);
        } while (std::next_permutation(p.begin(), p.end()));
        for (size_t k = 0; k < cells.size(); ++k) cur[cells[k].first][cells[k].second] = vals[k];
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    std::vector<Tableau> out;
    Tableau t(shape.length());
    int m = static_cast<int>(shape.size());
    if (m == 0) {
        out.push_back({});
        return out;
    }
    standard_rec(shape, 1, m, t, out);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return column_word(a) < column_word(b);
    });
    return out;
}

long hook_length_count(const Partition& shape) {
    long m = shape.size();
    if (m == 0) return 1;
    // factorial(m) / product of hooks, computed without overflow at desk scale
    long long num = 1;
    for (long i = 2; i <= m; ++i) num *= i;
    for (int i = 1; i <= shape.length(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            long arm = shape.part(i) - j;
            long leg = 0;
            for (int k = i + 1; k <= shape.length(); ++k)
                if (shape.part(k) >= j) ++leg;
            num /= (arm + leg + 1);
        }
    }
    return static_cast<long>(num);
}

SpechtIntegral specht_integral(const Partition& shape) {
    SpechtIntegral sp;
    sp.shape = shape;
    sp.m = static_cast<int>(shape.size());
    sp.tableaux = standard_tableaux(shape);
    sp.dim = static_cast<long>(sp.tableaux.size());

    Straightener str(shape, sp.tableaux);
    for (int a = 1; a < sp.m; ++a) {
        MatI g(sp.dim, sp.dim);
        for (long col = 0; col < sp.dim; ++col) {
            Tableau moved = sp.tableaux[col];
            for (auto& row : moved)
                for (int& v : row) {
                    if (v == a)
                        v = a + 1;
                    else if (v == a + 1)
                        v = a;
                }
            auto coeffs = str.expand(moved);
            for (long r = 0; r < sp.dim; ++r) g.at(r, col) = coeffs[r];
        }
        sp.gens.push_back(std::move(g));
    }

    std::vector<std::map<Tableau, long long>> tab(sp.dim);
    for (long i = 0; i < sp.dim; ++i) tab[i] = tabloid_expansion(shape, sp.tableaux[i]);
    sp.gram = MatI(sp.dim, sp.dim);
    for (long i = 0; i < sp.dim; ++i)
        for (long j = i; j < sp.dim; ++j) {
            long long dot = 0;
            for (const auto& [key, c] : tab[i]) {
                auto it = tab[j].find(key);
                if (it != tab[j].end()) dot += c * it->second;
            }
            sp.gram.at(i, j) = dot;
            sp.gram.at(j, i) = dot;
        }
    return sp;
}

MatI specht_permutation_matrix(const SpechtIntegral& sp, const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != sp.m) throw error("permutation size mismatch");
    // sigma * s_{a1} * ... * s_{ak} = id via bubble sort, so
    // sigma = s_{ak} * ... * s_{a1}.
    std::vector<int> im = images;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a + 1 < sp.m; ++a) {
            if (im[a] > im[a + 1]) {
                std::swap(im[a], im[a + 1]);
                word.push_back(a);
                changed = true;
            }
        }
    }
    MatI out = mati_identity(sp.dim);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = mati_mul(out, sp.gens[*it]);
    return out;
}

std::vector<long long> straighten_polytabloid(const SpechtIntegral& sp, const Tableau& t) {
    Straightener str(sp.shape, sp.tableaux);
    return str.expand(t);
}

}  // namespace partalg
