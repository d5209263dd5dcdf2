#include "striphom/morse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "striphom/complex.hpp"

namespace striphom {

bool is_follower(const Symbol& s, int i) {
    if (i <= 0) return false;
    if (s.block_size(i - 1) != 1) return false;
    return s.block(i - 1)[0] < s.block_min(i);
}

Key key(const Symbol& s, int n) {
    Key k;
    k.entries.reserve(static_cast<std::size_t>(s.block_count()));
    for (int i = 0; i < s.block_count(); ++i) {
        int first = is_follower(s, i) ? 0 : n + 1 - s.block(i)[0];
        k.entries.emplace_back(first, s.block_size(i));
    }
    return k;
}

std::string Key::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << "; ";
        os << entries[i].first << ", " << entries[i].second;
    }
    os << ')';
    return os.str();
}

std::strong_ordering symbol_compare(const Symbol& a, const Symbol& b) {
    // Key-lexicographic with zero padding. The first component of a key entry
    // is (n+1 - first label) for non-followers and 0 for followers; n is the
    // same on both sides of any meaningful comparison, so we compare first
    // labels reversed instead of materializing n.
    int ca = a.block_count(), cb = b.block_count();
    int common = std::min(ca, cb);
    for (int i = 0; i < common; ++i) {
        bool fa = is_follower(a, i), fb = is_follower(b, i);
        if (fa != fb) return fa ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!fa) {
            // larger first label => smaller key entry
            int firsta = a.block(i)[0], firstb = b.block(i)[0];
            if (firsta != firstb)
                return firsta > firstb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        int sza = a.block_size(i), szb = b.block_size(i);
        if (sza != szb) return sza <=> szb;
    }
    // the shorter symbol's key is zero-padded; any real block entry beats it
    if (ca != cb) return ca <=> cb;
    // Keys equal: break ties by flattened label sequence, with the
    // lexicographically SMALLER sequence ranking as the GREATER cell. Equal
    // keys occur exactly when follower blocks of equal sizes differ in
    // content (e.g. 1|2 3 vs 1|3 2, both keyed (3,1; 0,2)), and the basis
    // reduction needs the ascending variant -- the critical cell -- to be the
    // maximum of its own cycle z(e); the ascending variant is the flattened-
    // lex-smaller one, mirroring the (n+1 - first label) inversion in keys.
    auto cmp = std::lexicographical_compare_three_way(a.labels().begin(), a.labels().end(),
                                                      b.labels().begin(), b.labels().end());
    if (cmp != 0) return cmp > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;  // equal key + equal labels => identical
}

namespace {

const Symbol* least(const std::vector<Symbol>& v) {
    return &*std::min_element(v.begin(), v.end(), SymbolLess{});
}

const Symbol* greatest(const std::vector<Symbol>& v) {
    return &*std::max_element(v.begin(), v.end(), SymbolLess{});
}

}  // namespace

MatchState match_state(const Symbol& s, const ComplexSpec& spec) {
    if (!in_complex(s, spec))
        throw std::invalid_argument("match_state: " + s.str() + " not in " + spec.str());
    auto up = cofaces(s, spec);
    if (!up.empty()) {
        const Symbol* g = least(up);
        auto gf = faces(*g);
        if (*greatest(gf) == s) return {MatchKind::paired_up, *g};
    }
    auto fs = faces(s);
    if (!fs.empty()) {
        const Symbol* f = greatest(fs);
        auto fc = cofaces(*f, spec);
        if (*least(fc) == s) return {MatchKind::paired_down, *f};
    }
    return {MatchKind::critical, std::nullopt};
}

bool is_critical(const Symbol& s, const ComplexSpec& spec) {
    if (!in_complex(s, spec))
        throw std::invalid_argument("is_critical: " + s.str() + " not in " + spec.str());
    if (spec.variant == Variant::full && spec.w > 2)
        throw std::invalid_argument("is_critical: no closed form for the full variant with w > 2");
    for (int i = 0; i + 1 < s.block_count(); ++i) {
        if (s.block_size(i) == 1 && s.block_size(i + 1) == 1 &&
            s.block(i)[0] < s.block(i + 1)[0])
            return false;  // consecutive singletons must decrease
    }
    for (int i = 0; i < s.block_count(); ++i) {
        int sz = s.block_size(i);
        if (sz < 2) continue;
        if (spec.variant == Variant::full) {
            // w <= 2 here; descending 2-blocks must be followers
            if (s.block(i)[0] > s.block(i)[1] && !is_follower(s, i)) return false;
        } else {
            if (sz != spec.w || !is_follower(s, i)) return false;
        }
    }
    return true;
}

std::vector<Symbol> critical_cells(const ComplexSpec& spec, int dim) {
    std::vector<Symbol> out;
    for (const Symbol& s : enumerate_cells(spec, dim))
        if (is_critical(s, spec)) out.push_back(s);
    return out;
}

std::vector<long long> critical_counts(const ComplexSpec& spec) {
    std::vector<long long> out;
    for (int d = 0; d <= max_dimension(spec); ++d)
        out.push_back(static_cast<long long>(critical_cells(spec, d).size()));
    return out;
}

Report verify_acyclic(const ComplexSpec& spec) {
    Report rep;
    spec.validate();
    bool predicate_defined = !(spec.variant == Variant::full && spec.w > 2);

    std::unordered_map<Symbol, MatchState, SymbolHash> state;
    std::vector<std::vector<Symbol>> by_dim;
    for (int d = 0; d <= max_dimension(spec); ++d) {
        by_dim.push_back(enumerate_cells(spec, d));
        for (const Symbol& s : by_dim.back()) state.emplace(s, match_state(s, spec));
    }

    long long pairs = 0, criticals = 0;
    for (const auto& [s, st] : state) {
        switch (st.kind) {
            case MatchKind::critical:
                ++criticals;
                break;
            case MatchKind::paired_up: {
                ++pairs;
                auto it = state.find(*st.partner);
                if (it == state.end() || it->second.kind != MatchKind::paired_down ||
                    *it->second.partner != s)
                    rep.fail("pairing not an involution at " + s.str());
                break;
            }
            case MatchKind::paired_down: {
                auto it = state.find(*st.partner);
                if (it == state.end() || it->second.kind != MatchKind::paired_up ||
                    *it->second.partner != s)
                    rep.fail("pairing not an involution at " + s.str());
                break;
            }
        }
        if (predicate_defined && (st.kind == MatchKind::critical) != is_critical(s, spec))
            rep.fail("criticality predicate disagrees with gradient field at " + s.str());
    }

    // Closed V-walk search: within each dimension, walk f -> f' where f' is a
    // face of f's partner, f' != f, and f' is itself paired up. A directed
    // cycle is exactly a closed V-walk.
    for (const auto& cells : by_dim) {
        std::vector<const Symbol*> ups;
        std::unordered_map<Symbol, int, SymbolHash> id;
        for (const Symbol& s : cells) {
            if (state.at(s).kind == MatchKind::paired_up) {
                id.emplace(s, static_cast<int>(ups.size()));
                ups.push_back(&s);
            }
        }
        std::vector<std::vector<int>> adj(ups.size());
        for (std::size_t i = 0; i < ups.size(); ++i) {
            const MatchState& st = state.at(*ups[i]);
            for (const Symbol& f : faces(*st.partner)) {
                if (f == *ups[i]) continue;
                auto it = id.find(f);
                if (it != id.end()) adj[i].push_back(it->second);
            }
        }
        // iterative DFS, colors: 0 fresh, 1 on stack, 2 done
        std::vector<int> color(ups.size(), 0);
        for (std::size_t start = 0; start < ups.size(); ++start) {
            if (color[start]) continue;
            std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(start), 0}};
            color[start] = 1;
            while (!stack.empty()) {
                auto& [u, next] = stack.back();
                if (next < adj[static_cast<std::size_t>(u)].size()) {
                    int v = adj[static_cast<std::size_t>(u)][next++];
                    if (color[static_cast<std::size_t>(v)] == 1) {
                        rep.fail("closed V-walk through " + ups[static_cast<std::size_t>(v)]->str());
                        color[static_cast<std::size_t>(v)] = 2;  // report once
                    } else if (color[static_cast<std::size_t>(v)] == 0) {
                        color[static_cast<std::size_t>(v)] = 1;
                        stack.emplace_back(v, 0);
                    }
                } else {
                    color[static_cast<std::size_t>(u)] = 2;
                    stack.pop_back();
                }
            }
        }
    }

    std::ostringstream os;
    os << spec.str() << ": " << pairs << " gradient pairs, " << criticals << " critical cells";
    rep.note(os.str());
    return rep;
}

}  // namespace striphom
