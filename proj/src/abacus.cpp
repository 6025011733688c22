#include "partalg/abacus.hpp"

#include <algorithm>

#include "partalg/errors.hpp"

namespace partalg {

namespace {

// Mathematical mod: result in 0..m-1.
long pos_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

BetaSequence beta_sequence(const Partition& a, long b) {
    if (b < a.size())
        throw bead_count_too_small("bead count " + std::to_string(b) + " < |" + a.str() + "| = " +
                                   std::to_string(a.size()));
    BetaSequence s;
    s.beads = b;
    s.values.reserve(b);
    for (long i = 1; i <= b; ++i) s.values.push_back(a.part(static_cast<int>(i)) - i + b);
    return s;
}

Partition partition_of_beta(const BetaSequence& s) {
    std::vector<int> parts;
    const long b = s.beads;
    for (long i = 1; i <= b; ++i) {
        long v = s.values[i - 1] + i - b;
        if (v < 0) throw error("beta sequence is not strictly decreasing to 0");
        if (v > 0) parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

RunnerCounts gamma(const Partition& a, long b, int p) {
    RunnerCounts g;
    g.counts.assign(p, 0);
    for (long v : beta_sequence(a, b).values) g.counts[pos_mod(v, p)] += 1;
    return g;
}

Partition p_core(const Partition& a, int p) {
    long b = std::max<long>(a.size(), 1);
    RunnerCounts g = gamma(a, b, p);
    // Slide all beads to the top of their runners and read the partition back.
    BetaSequence slid;
    slid.beads = b;
    for (int r = 0; r < p; ++r)
        for (long j = 0; j < g.counts[r]; ++j) slid.values.push_back(r + j * static_cast<long>(p));
    std::sort(slid.values.begin(), slid.values.end(), std::greater<long>());
    return partition_of_beta(slid);
}

std::vector<long> beta_delta(const Partition& a, long b, long delta) {
    std::vector<long> out;
    out.reserve(b + 1);
    out.push_back(delta - a.size() + b);
    auto tail = beta_sequence(a, b);
    out.insert(out.end(), tail.values.begin(), tail.values.end());
    return out;
}

MarkedAbacus marked_abacus(const Partition& a, long b, long delta, int p) {
    MarkedAbacus m;
    m.p = p;
    m.beads = b;
    auto bd = beta_delta(a, b, delta);
    m.marker = static_cast<int>(pos_mod(bd[0], p));
    m.positions.assign(bd.begin() + 1, bd.end());
    return m;
}

RunnerCounts gamma_delta(const Partition& a, long b, long delta, int p) {
    RunnerCounts g = gamma(a, b, p);
    g.counts[marked_abacus(a, b, delta, p).marker] += 1;
    return g;
}

std::string render_abacus(const MarkedAbacus& m) {
    long maxpos = 0;
    for (long v : m.positions) maxpos = std::max(maxpos, v);
    long rows = (maxpos + 1 + m.p - 1) / m.p;
    if (rows == 0) rows = 1;
    std::vector<bool> bead(rows * m.p, false);
    for (long v : m.positions) bead[v] = true;

    std::string out;
    for (int j = 0; j < m.p; ++j) {
        if (j) out += ' ';
        out += (j == m.marker) ? 'v' : ' ';
    }
    out += '\n';
    for (long r = 0; r < rows; ++r) {
        for (int j = 0; j < m.p; ++j) {
            if (j) out += ' ';
            out += bead[r * m.p + j] ? 'o' : '|';
        }
        out += '\n';
    }
    return out;
}

}  // namespace partalg
