#include "striphom/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace striphom {

int max_dimension(const ComplexSpec& spec) {
    spec.validate();
    int min_blocks = (spec.n + spec.w - 1) / spec.w;
    return spec.n - min_blocks;
}

std::vector<BigInt> cell_counts(const ComplexSpec& spec) {
    spec.validate();
    int n = spec.n, w = spec.w;
    // T[m][r] = ways to arrange m given labels into r ordered blocks of size
    // <= w (full: ordered contents; descending: contents forced).
    std::vector<std::vector<BigInt>> T(static_cast<std::size_t>(n) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    T[0][0] = 1;
    std::vector<std::vector<BigInt>> choose(static_cast<std::size_t>(n) + 1,
                                            std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    for (int m = 0; m <= n; ++m) {
        choose[static_cast<std::size_t>(m)][0] = 1;
        for (int k = 1; k <= m; ++k)
            choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                choose[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k) - 1] +
                choose[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k)];
    }
    std::vector<BigInt> ord(static_cast<std::size_t>(w) + 1, 1);
    if (spec.variant == Variant::full)
        for (int s = 2; s <= w; ++s)
            ord[static_cast<std::size_t>(s)] = ord[static_cast<std::size_t>(s) - 1] * s;
    for (int m = 1; m <= n; ++m) {
        for (int r = 1; r <= m; ++r) {
            BigInt acc = 0;
            for (int s = 1; s <= std::min(w, m); ++s)
                acc += choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] *
                       ord[static_cast<std::size_t>(s)] *
                       T[static_cast<std::size_t>(m - s)][static_cast<std::size_t>(r - 1)];
            T[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)] = acc;
        }
    }
    std::vector<BigInt> out;
    for (int d = 0; d <= max_dimension(spec); ++d)
        out.push_back(T[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - d)]);
    return out;
}

BigInt total_cell_count(const ComplexSpec& spec) {
    BigInt total = 0;
    for (const BigInt& c : cell_counts(spec)) total += c;
    return total;
}

namespace {

// Depth-first construction: peel the first block off the remaining label set.
void gen(const ComplexSpec& spec, std::vector<int>& remaining, int blocks_left,
         std::vector<std::vector<int>>& prefix, const std::function<void(const Symbol&)>& fn) {
    int m = static_cast<int>(remaining.size());
    if (m == 0) {
        fn(Symbol(prefix));
        return;
    }
    if (blocks_left <= 0 || m < blocks_left || m > blocks_left * spec.w) return;
    int maxs = std::min(spec.w, m);
    std::vector<int> subset;
    // enumerate size-s subsets of `remaining` (by index), ordered contents
    std::vector<int> idx;
    std::function<void(int, int)> pick = [&](int start, int need) {
        if (need == 0) {
            std::vector<int> chosen;
            chosen.reserve(idx.size());
            for (int i : idx) chosen.push_back(remaining[static_cast<std::size_t>(i)]);
            std::vector<int> rest;
            rest.reserve(remaining.size() - idx.size());
            std::size_t k = 0;
            for (int i = 0; i < m; ++i) {
                if (k < idx.size() && idx[k] == i) {
                    ++k;
                    continue;
                }
                rest.push_back(remaining[static_cast<std::size_t>(i)]);
            }
            auto recurse = [&](std::vector<int> block) {
                prefix.push_back(std::move(block));
                std::swap(remaining, rest);
                gen(spec, remaining, blocks_left - 1, prefix, fn);
                std::swap(remaining, rest);
                prefix.pop_back();
            };
            if (spec.variant == Variant::descending) {
                std::sort(chosen.begin(), chosen.end(), std::greater<int>());
                recurse(std::move(chosen));
            } else {
                std::sort(chosen.begin(), chosen.end());
                do {
                    recurse(chosen);
                } while (std::next_permutation(chosen.begin(), chosen.end()));
            }
            return;
        }
        for (int i = start; i <= m - need; ++i) {
            idx.push_back(i);
            pick(i + 1, need - 1);
            idx.pop_back();
        }
    };
    for (int s = 1; s <= maxs; ++s) {
        // remaining labels minus s must still be packable into blocks_left-1
        int rm = m - s, bl = blocks_left - 1;
        if (rm < bl || rm > bl * spec.w) continue;
        pick(0, s);
    }
}

}  // namespace

void for_each_cell(const ComplexSpec& spec, int dim,
                   const std::function<void(const Symbol&)>& fn) {
    spec.validate();
    if (dim < 0 || dim > max_dimension(spec)) return;
    int blocks = spec.n - dim;
    std::vector<int> labels;
    for (int v = 1; v <= spec.n; ++v) labels.push_back(v);
    std::vector<std::vector<int>> prefix;
    gen(spec, labels, blocks, prefix, fn);
}

std::vector<Symbol> enumerate_cells(const ComplexSpec& spec, int dim) {
    std::vector<Symbol> out;
    for_each_cell(spec, dim, [&out](const Symbol& s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), SymbolLess{});
    return out;
}

std::vector<Symbol> enumerate_cells(const ComplexSpec& spec) {
    std::vector<Symbol> out;
    for (int d = 0; d <= max_dimension(spec); ++d) {
        auto cells = enumerate_cells(spec, d);
        out.insert(out.end(), cells.begin(), cells.end());
    }
    return out;
}

CellIndex::CellIndex(const ComplexSpec& spec, int dim)
    : dim_(dim), cells_(enumerate_cells(spec, dim)) {
    lookup_.reserve(cells_.size() * 2);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        lookup_.emplace(cells_[i], static_cast<int>(i));
}

int CellIndex::index_of(const Symbol& s) const {
    auto it = lookup_.find(s);
    return it == lookup_.end() ? -1 : it->second;
}

SparseIntMatrix boundary_matrix(const ComplexSpec& spec, const CellIndex& rows,
                                const CellIndex& cols) {
    spec.validate();
    if (rows.dim() != cols.dim() - 1)
        throw std::invalid_argument("boundary_matrix: index dimensions must be adjacent");
    SparseIntMatrix m;
    m.rows = rows.size();
    m.cols = cols.size();
    for (int c = 0; c < cols.size(); ++c) {
        for (const auto& [f, sign] : signed_faces(cols.symbol_at(c))) {
            int r = rows.index_of(f);
            if (r < 0)
                throw std::logic_error("boundary_matrix: face escaped the complex: " + f.str());
            m.entries.emplace_back(r, c, sign);
        }
    }
    return m;
}

SparseIntMatrix boundary_matrix(const ComplexSpec& spec, int j) {
    spec.validate();
    if (j < 1) throw std::invalid_argument("boundary_matrix: j must be >= 1");
    CellIndex rows(spec, j - 1);
    if (j > max_dimension(spec)) {
        SparseIntMatrix m;
        m.rows = rows.size();
        m.cols = 0;
        return m;
    }
    CellIndex cols(spec, j);
    return boundary_matrix(spec, rows, cols);
}

std::string matrix_to_coo(const SparseIntMatrix& m) {
    auto entries = m.entries;
    std::sort(entries.begin(), entries.end());
    std::ostringstream os;
    os << m.rows << ' ' << m.cols << ' ' << entries.size() << '\n';
    for (const auto& [r, c, v] : entries) os << r + 1 << ' ' << c + 1 << ' ' << v << '\n';
    return os.str();
}

std::string matrix_to_json(const SparseIntMatrix& m) {
    auto entries = m.entries;
    std::sort(entries.begin(), entries.end());
    nlohmann::json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    auto& e = j["entries"] = nlohmann::json::array();
    for (const auto& [r, c, v] : entries) e.push_back({r + 1, c + 1, v});
    return j.dump();
}

}  // namespace striphom
