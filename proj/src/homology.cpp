#include "striphom/homology.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "striphom/morse.hpp"

namespace striphom {

namespace {

using boost::multiprecision::abs;

struct SmithOutcome {
    int rank = 0;
    std::vector<BigInt> divisors;  // only populated when requested
};

// Classic SNF on a small dense residue. Rows/cols are swapped freely; with
// want_divisors the pivot is forced to divide everything below-right before
// it is recorded, so divisors come out in chain order.
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>>& a, bool want_divisors) {
    std::vector<BigInt> divisors;
    int R = static_cast<int>(a.size());
    int C = R ? static_cast<int>(a[0].size()) : 0;
    for (int t = 0; t < R && t < C; ++t) {
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
        if (pj != t)
            for (int i = 0; i < R; ++i)
                std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
        bool again = true;
        while (again) {
            again = false;
            BigInt& piv = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
            for (int i = t + 1; i < R; ++i) {
                BigInt& lead = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (lead == 0) continue;
                BigInt q = lead / piv;  // truncating: remainder shrinks below |piv|
                if (q != 0)
                    for (int j = t; j < C; ++j)
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                            q * a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (lead != 0) {
                    std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(i)]);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (int j = t + 1; j < C; ++j) {
                BigInt lead = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (lead == 0) continue;
                BigInt q = lead / piv;
                if (q != 0)
                    for (int i = 0; i < R; ++i)
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                            q * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0) {
                    for (int i = 0; i < R; ++i)
                        std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            if (want_divisors) {
                for (int i = t + 1; i < R && !again; ++i)
                    for (int j = t + 1; j < C; ++j)
                        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % piv != 0) {
                            for (int jj = t; jj < C; ++jj)
                                a[static_cast<std::size_t>(t)][static_cast<std::size_t>(jj)] +=
                                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
                            again = true;
                            break;
                        }
            }
        }
        BigInt piv = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
        if (piv < 0) piv = -piv;
        divisors.push_back(piv);
    }
    return divisors;
}

SmithOutcome smith_engine(const SparseIntMatrix& m, bool want_divisors) {
    SmithOutcome out;
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return out;

    std::vector<std::unordered_map<int, BigInt>> row(static_cast<std::size_t>(m.rows));
    std::vector<std::unordered_set<int>> colrows(static_cast<std::size_t>(m.cols));
    for (const auto& [r, c, v] : m.entries) {
        if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
            throw std::invalid_argument("smith: entry out of bounds");
        auto& cell = row[static_cast<std::size_t>(r)][c];
        cell += v;
        if (cell == 0) {
            row[static_cast<std::size_t>(r)].erase(c);
            // colrows fixed below
        }
    }
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : row[static_cast<std::size_t>(r)])
            colrows[static_cast<std::size_t>(c)].insert(r);

    // Phase 1: eliminate with ±1 pivots, cheapest column first (lazy heap on
    // column fill; within a column the sparsest unit row wins). Each unit
    // pivot contributes an elementary divisor of 1.
    using QE = std::pair<int, int>;  // (nnz, col)
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> heap;
    for (int c = 0; c < m.cols; ++c)
        if (!colrows[static_cast<std::size_t>(c)].empty())
            heap.emplace(static_cast<int>(colrows[static_cast<std::size_t>(c)].size()), c);
    std::vector<int> deferred;
    bool progressed = true;

    while (true) {
        if (heap.empty()) {
            if (!deferred.empty() && progressed) {
                for (int c : deferred)
                    if (!colrows[static_cast<std::size_t>(c)].empty())
                        heap.emplace(static_cast<int>(colrows[static_cast<std::size_t>(c)].size()),
                                     c);
                deferred.clear();
                progressed = false;
                continue;
            }
            break;
        }
        auto [k, c] = heap.top();
        heap.pop();
        auto& rows_here = colrows[static_cast<std::size_t>(c)];
        if (rows_here.empty()) continue;
        if (static_cast<int>(rows_here.size()) != k) {
            heap.emplace(static_cast<int>(rows_here.size()), c);
            continue;
        }
        int pr = -1;
        std::size_t pr_len = 0;
        for (int r : rows_here) {
            const BigInt& v = row[static_cast<std::size_t>(r)].at(c);
            if (v == 1 || v == -1) {
                if (pr < 0 || row[static_cast<std::size_t>(r)].size() < pr_len) {
                    pr = r;
                    pr_len = row[static_cast<std::size_t>(r)].size();
                }
            }
        }
        if (pr < 0) {
            deferred.push_back(c);
            continue;
        }

        // eliminate column c with the unit pivot at (pr, c)
        BigInt pv = row[static_cast<std::size_t>(pr)].at(c);
        std::vector<std::pair<int, BigInt>> prow(row[static_cast<std::size_t>(pr)].begin(),
                                                 row[static_cast<std::size_t>(pr)].end());
        for (const auto& [pc, v] : prow) colrows[static_cast<std::size_t>(pc)].erase(pr);
        row[static_cast<std::size_t>(pr)].clear();
        std::vector<int> targets(rows_here.begin(), rows_here.end());
        for (int r2 : targets) {
            auto& mrow = row[static_cast<std::size_t>(r2)];
            BigInt q = mrow.at(c) * pv;  // value / pivot, pivot is ±1
            for (const auto& [pc, v] : prow) {
                auto it = mrow.find(pc);
                if (it == mrow.end()) {
                    mrow.emplace(pc, -q * v);
                    colrows[static_cast<std::size_t>(pc)].insert(r2);
                } else {
                    it->second -= q * v;
                    if (it->second == 0) {
                        mrow.erase(it);
                        colrows[static_cast<std::size_t>(pc)].erase(r2);
                    }
                }
            }
        }
        ++out.rank;
        progressed = true;
    }

    // Phase 2: whatever is left has no ±1 entries; finish densely.
    std::vector<int> live_rows, live_cols;
    {
        std::unordered_set<int> colset;
        for (int r = 0; r < m.rows; ++r)
            if (!row[static_cast<std::size_t>(r)].empty()) {
                live_rows.push_back(r);
                for (const auto& [c, v] : row[static_cast<std::size_t>(r)]) colset.insert(c);
            }
        live_cols.assign(colset.begin(), colset.end());
        std::sort(live_cols.begin(), live_cols.end());
    }
    if (want_divisors) out.divisors.assign(static_cast<std::size_t>(out.rank), BigInt(1));
    if (!live_rows.empty()) {
        std::unordered_map<int, int> colpos;
        for (std::size_t i = 0; i < live_cols.size(); ++i)
            colpos.emplace(live_cols[i], static_cast<int>(i));
        std::vector<std::vector<BigInt>> dense(
            live_rows.size(), std::vector<BigInt>(live_cols.size(), BigInt(0)));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : row[static_cast<std::size_t>(live_rows[i])])
                dense[i][static_cast<std::size_t>(colpos.at(c))] = v;
        std::vector<BigInt> rest = dense_snf(dense, want_divisors);
        out.rank += static_cast<int>(rest.size());
        if (want_divisors)
            out.divisors.insert(out.divisors.end(), rest.begin(), rest.end());
    }
    return out;
}

}  // namespace

std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m) {
    return smith_engine(m, true).divisors;
}

int matrix_rank(const SparseIntMatrix& m) { return smith_engine(m, false).rank; }

HomologySummary homology(const ComplexSpec& spec, bool want_torsion) {
    spec.validate();
    int maxd = max_dimension(spec);
    HomologySummary h;
    h.betti.assign(static_cast<std::size_t>(maxd) + 1, 0);
    h.torsion.assign(static_cast<std::size_t>(maxd) + 1, {});
    h.cells.assign(static_cast<std::size_t>(maxd) + 1, 0);
    h.ranks.assign(static_cast<std::size_t>(maxd) + 1, 0);  // ranks[j-1] = rank boundary_j

    CellIndex prev(spec, 0);
    h.cells[0] = prev.size();
    for (int j = 1; j <= maxd; ++j) {
        CellIndex cur(spec, j);
        h.cells[static_cast<std::size_t>(j)] = cur.size();
        SparseIntMatrix bd = boundary_matrix(spec, prev, cur);
        if (want_torsion) {
            std::vector<BigInt> div = smith_normal_form(bd);
            h.ranks[static_cast<std::size_t>(j) - 1] = static_cast<long long>(div.size());
            for (const BigInt& d : div)
                if (d > 1) h.torsion[static_cast<std::size_t>(j) - 1].push_back(d);
        } else {
            h.ranks[static_cast<std::size_t>(j) - 1] = matrix_rank(bd);
        }
        prev = std::move(cur);
    }
    for (int j = 0; j <= maxd; ++j) {
        long long down = j == 0 ? 0 : h.ranks[static_cast<std::size_t>(j) - 1];
        long long up = j == maxd ? 0 : h.ranks[static_cast<std::size_t>(j)];
        h.betti[static_cast<std::size_t>(j)] = h.cells[static_cast<std::size_t>(j)] - down - up;
    }
    return h;
}

Report verify_morse_counts(const ComplexSpec& spec) {
    Report rep;
    HomologySummary h = homology(spec, true);
    std::vector<long long> crit = critical_counts(spec);
    int maxd = max_dimension(spec);
    for (int j = 0; j <= maxd; ++j) {
        if (h.betti[static_cast<std::size_t>(j)] != crit[static_cast<std::size_t>(j)]) {
            std::ostringstream os;
            os << spec.str() << ": betti_" << j << " = " << h.betti[static_cast<std::size_t>(j)]
               << " but " << crit[static_cast<std::size_t>(j)] << " critical cells";
            rep.fail(os.str());
        }
        if (!h.torsion[static_cast<std::size_t>(j)].empty()) {
            std::ostringstream os;
            os << spec.str() << ": torsion in H_" << j;
            rep.fail(os.str());
        }
        if (spec.variant == Variant::descending) {
            bool allowed = (spec.w == 1) ? (j == 0) : (j % (spec.w - 1) == 0);
            if (!allowed && h.betti[static_cast<std::size_t>(j)] != 0) {
                std::ostringstream os;
                os << spec.str() << ": H_" << j << " nonzero but " << (spec.w - 1)
                   << " does not divide " << j;
                rep.fail(os.str());
            }
        }
    }
    std::ostringstream os;
    os << spec.str() << ": betti =";
    for (long long b : h.betti) os << ' ' << b;
    rep.note(os.str());
    return rep;
}

}  // namespace striphom
