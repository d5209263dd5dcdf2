#include "striphom/symbol.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace striphom {

void ComplexSpec::validate() const {
    if (n < 1) throw std::invalid_argument("ComplexSpec: level n must be >= 1");
    if (w < 1) throw std::invalid_argument("ComplexSpec: width w must be >= 1");
}

std::string ComplexSpec::str() const {
    std::ostringstream os;
    os << (variant == Variant::full ? "cell" : "desc") << '(' << n << ',' << w << ')';
    return os.str();
}

std::string variant_name(Variant v) {
    return v == Variant::full ? "full" : "descending";
}

Variant variant_from_name(const std::string& name) {
    if (name == "full") return Variant::full;
    if (name == "descending" || name == "desc") return Variant::descending;
    throw std::invalid_argument("unknown variant: " + name);
}

Symbol::Symbol(const std::vector<std::vector<int>>& blocks) {
    for (const auto& b : blocks) {
        labels_.insert(labels_.end(), b.begin(), b.end());
        ends_.push_back(static_cast<int>(labels_.size()));
    }
    check();
}

void Symbol::check() const {
    if (ends_.empty()) throw std::invalid_argument("symbol: no blocks");
    int prev = 0;
    for (int e : ends_) {
        if (e <= prev) throw std::invalid_argument("symbol: empty block");
        prev = e;
    }
    if (prev != static_cast<int>(labels_.size()))
        throw std::invalid_argument("symbol: block bounds corrupt");
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1) throw std::invalid_argument("symbol: labels must be positive");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("symbol: duplicate label " + std::to_string(sorted[i]));
    }
}

Symbol Symbol::parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::string chunk;
    std::stringstream ss(text);
    bool any = false;
    while (std::getline(ss, chunk, '|')) {
        any = true;
        std::vector<int> block;
        std::istringstream bs(chunk);
        std::string tok;
        while (bs >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("symbol: bad label '" + tok + "'");
            }
            if (used != tok.size() || v < 1)
                throw std::invalid_argument("symbol: bad label '" + tok + "'");
            block.push_back(v);
        }
        if (block.empty()) throw std::invalid_argument("symbol: empty block in '" + text + "'");
        blocks.push_back(std::move(block));
    }
    if (!any || text.empty()) throw std::invalid_argument("symbol: empty text");
    if (!text.empty() && text.back() == '|')
        throw std::invalid_argument("symbol: empty block in '" + text + "'");
    return Symbol(blocks);
}

Symbol Symbol::parse(const std::string& text, int n) {
    Symbol s = parse(text);
    for (int v : s.labels_) {
        if (v > n)
            throw std::invalid_argument("symbol: label " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
    }
    if (s.label_count() != n) {
        // labels are distinct and <= n, so some label in 1..n is missing
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : s.labels_) seen[static_cast<std::size_t>(v)] = true;
        for (int v = 1; v <= n; ++v)
            if (!seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("symbol: missing label " + std::to_string(v));
    }
    return s;
}

std::span<const int> Symbol::block(int i) const {
    int begin = i == 0 ? 0 : ends_[static_cast<std::size_t>(i) - 1];
    return {labels_.data() + begin, static_cast<std::size_t>(ends_[static_cast<std::size_t>(i)] - begin)};
}

int Symbol::block_size(int i) const {
    int begin = i == 0 ? 0 : ends_[static_cast<std::size_t>(i) - 1];
    return ends_[static_cast<std::size_t>(i)] - begin;
}

bool Symbol::block_is_descending(int i) const {
    auto b = block(i);
    for (std::size_t p = 1; p < b.size(); ++p)
        if (b[p - 1] <= b[p]) return false;
    return true;
}

int Symbol::block_min(int i) const {
    auto b = block(i);
    return *std::min_element(b.begin(), b.end());
}

std::string Symbol::str() const {
    std::ostringstream os;
    for (int i = 0; i < block_count(); ++i) {
        if (i) os << '|';
        auto b = block(i);
        for (std::size_t p = 0; p < b.size(); ++p) {
            if (p) os << ' ';
            os << b[p];
        }
    }
    return os.str();
}

Symbol Symbol::split_block(int bi, unsigned mask) const {
    auto b = block(bi);
    Symbol out;
    int begin = bi == 0 ? 0 : ends_[static_cast<std::size_t>(bi) - 1];
    out.labels_.reserve(labels_.size());
    out.labels_.insert(out.labels_.end(), labels_.begin(), labels_.begin() + begin);
    for (std::size_t p = 0; p < b.size(); ++p)
        if (mask & (1u << p)) out.labels_.push_back(b[p]);
    int cut = static_cast<int>(out.labels_.size());
    for (std::size_t p = 0; p < b.size(); ++p)
        if (!(mask & (1u << p))) out.labels_.push_back(b[p]);
    out.labels_.insert(out.labels_.end(), labels_.begin() + ends_[static_cast<std::size_t>(bi)],
                       labels_.end());
    for (int i = 0; i < bi; ++i) out.ends_.push_back(ends_[static_cast<std::size_t>(i)]);
    out.ends_.push_back(cut);
    for (int i = bi; i < block_count(); ++i) out.ends_.push_back(ends_[static_cast<std::size_t>(i)]);
    return out;
}

Symbol Symbol::merge_blocks(int bi, unsigned mask) const {
    auto b1 = block(bi);
    auto b2 = block(bi + 1);
    Symbol out;
    int begin = bi == 0 ? 0 : ends_[static_cast<std::size_t>(bi) - 1];
    out.labels_.insert(out.labels_.end(), labels_.begin(), labels_.begin() + begin);
    std::size_t p1 = 0, p2 = 0;
    for (std::size_t p = 0; p < b1.size() + b2.size(); ++p) {
        if (mask & (1u << p))
            out.labels_.push_back(b1[p1++]);
        else
            out.labels_.push_back(b2[p2++]);
    }
    if (p1 != b1.size() || p2 != b2.size())
        throw std::invalid_argument("merge_blocks: mask popcount mismatch");
    out.labels_.insert(out.labels_.end(), labels_.begin() + ends_[static_cast<std::size_t>(bi) + 1],
                       labels_.end());
    for (int i = 0; i < block_count(); ++i)
        if (i != bi) out.ends_.push_back(ends_[static_cast<std::size_t>(i)]);
    return out;
}

Symbol Symbol::insert_singleton(int pos, int label) const {
    Symbol out;
    int begin = pos == 0 ? 0 : ends_[static_cast<std::size_t>(pos) - 1];
    out.labels_.insert(out.labels_.end(), labels_.begin(), labels_.begin() + begin);
    out.labels_.push_back(label);
    out.labels_.insert(out.labels_.end(), labels_.begin() + begin, labels_.end());
    for (int i = 0; i < pos; ++i) out.ends_.push_back(ends_[static_cast<std::size_t>(i)]);
    out.ends_.push_back(begin + 1);
    for (int i = pos; i < block_count(); ++i)
        out.ends_.push_back(ends_[static_cast<std::size_t>(i)] + 1);
    out.check();
    return out;
}

std::size_t hash_value(const Symbol& s) {
    // FNV-1a over labels and block ends
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    };
    for (int v : s.labels()) mix(v);
    mix(-1);
    for (int v : s.block_ends()) mix(v);
    return h;
}

bool labels_are_full(const Symbol& s, int n) {
    if (s.label_count() != n) return false;
    for (int v : s.labels())
        if (v > n) return false;  // distinct + count n + bounded => exactly {1..n}
    return true;
}

bool in_complex(const Symbol& s, const ComplexSpec& spec) {
    spec.validate();
    if (!labels_are_full(s, spec.n)) return false;
    for (int i = 0; i < s.block_count(); ++i) {
        if (s.block_size(i) > spec.w) return false;
        if (spec.variant == Variant::descending && !s.block_is_descending(i)) return false;
    }
    return true;
}

std::vector<std::pair<Symbol, int>> signed_faces(const Symbol& s) {
    std::vector<std::pair<Symbol, int>> out;
    int left_dim = 0;  // total dimension of the blocks left of bi
    for (int bi = 0; bi < s.block_count(); ++bi) {
        auto b = s.block(bi);
        int sz = static_cast<int>(b.size());
        if (bi > 0) left_dim += s.block_size(bi - 1) - 1;
        if (sz < 2) continue;
        int leibniz = (left_dim % 2 == 0) ? 1 : -1;  // graded Leibniz prefix
        unsigned full = (1u << sz) - 1;
        for (unsigned mask = 1; mask < full; ++mask) {
            // sign(sigma): inversions are exactly pairs (p in mask, q not in
            // mask, q < p) since sigma lists mask positions then the rest.
            int inv = 0;
            for (int p = 0; p < sz; ++p) {
                if (!(mask & (1u << p))) continue;
                for (int q = 0; q < p; ++q)
                    if (!(mask & (1u << q))) ++inv;
            }
            int sign = leibniz;
            if ((std::popcount(mask) + 1) % 2 != 0) sign = -sign;
            if (inv % 2 != 0) sign = -sign;
            out.emplace_back(s.split_block(bi, mask), sign);
        }
    }
    return out;
}

std::vector<Symbol> faces(const Symbol& s) {
    std::vector<Symbol> out;
    for (int bi = 0; bi < s.block_count(); ++bi) {
        int sz = s.block_size(bi);
        if (sz < 2) continue;
        unsigned full = (1u << sz) - 1;
        for (unsigned mask = 1; mask < full; ++mask) out.push_back(s.split_block(bi, mask));
    }
    return out;
}

std::vector<Symbol> cofaces(const Symbol& s, const ComplexSpec& spec) {
    spec.validate();
    if (!in_complex(s, spec))
        throw std::invalid_argument("cofaces: symbol not in " + spec.str());
    std::vector<Symbol> out;
    for (int bi = 0; bi + 1 < s.block_count(); ++bi) {
        int a = s.block_size(bi), b = s.block_size(bi + 1);
        if (a + b > spec.w) continue;
        if (spec.variant == Variant::descending) {
            // both blocks descend, so exactly one shuffle descends: the merge
            auto b1 = s.block(bi);
            auto b2 = s.block(bi + 1);
            unsigned mask = 0;
            std::size_t p1 = 0, p2 = 0;
            for (int p = 0; p < a + b; ++p) {
                bool take1 = p2 == b2.size() || (p1 < b1.size() && b1[p1] > b2[p2]);
                if (take1) {
                    mask |= 1u << p;
                    ++p1;
                } else {
                    ++p2;
                }
            }
            out.push_back(s.merge_blocks(bi, mask));
        } else {
            // all order-preserving shuffles: masks with popcount a
            unsigned total = 1u << (a + b);
            for (unsigned mask = 0; mask < total; ++mask) {
                if (std::popcount(mask) != a) continue;
                out.push_back(s.merge_blocks(bi, mask));
            }
        }
    }
    return out;
}

}  // namespace striphom
