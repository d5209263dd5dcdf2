#include "striphom/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace striphom {

Chain Chain::unit(const Symbol& s, coeff_t c) {
    Chain out;
    out.add(s, c);
    return out;
}

void Chain::add(const Symbol& s, coeff_t c) {
    if (c == 0) return;
    if (!terms_.empty()) {
        const Symbol& probe = terms_.begin()->first;
        if (s.dimension() != probe.dimension())
            throw std::invalid_argument("chain: mixed dimensions (" + s.str() + ")");
        std::vector<int> la = s.labels(), lb = probe.labels();
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (la != lb) throw std::invalid_argument("chain: mixed label sets (" + s.str() + ")");
    }
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

coeff_t Chain::coeff(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
}

const Symbol& Chain::maximum() const {
    if (terms_.empty()) throw std::logic_error("chain: maximum of zero chain");
    return terms_.rbegin()->first;
}

int Chain::dimension() const {
    return terms_.empty() ? -1 : terms_.begin()->first.dimension();
}

std::vector<int> Chain::label_set() const {
    if (terms_.empty()) return {};
    std::vector<int> out = terms_.begin()->first.labels();
    std::sort(out.begin(), out.end());
    return out;
}

Chain& Chain::operator+=(const Chain& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

Chain& Chain::operator*=(coeff_t c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, v] : terms_) v *= c;
    return *this;
}

std::string Chain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print greatest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        coeff_t c = it->second;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        coeff_t a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << it->first.str();
    }
    return os.str();
}

Chain boundary(const Symbol& s) {
    Chain out;
    for (const auto& [f, sign] : signed_faces(s)) out.add(f, sign);
    return out;
}

Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [s, v] : c.terms())
        for (const auto& [f, sign] : signed_faces(s)) out.add(f, v * sign);
    return out;
}

Symbol relabel(const Symbol& s, const std::function<int(int)>& phi) {
    std::vector<std::vector<int>> blocks;
    std::set<int> seen;
    for (int i = 0; i < s.block_count(); ++i) {
        auto b = s.block(i);
        std::vector<int> nb;
        for (int v : b) {
            int img = phi(v);
            if (img < 1) throw std::invalid_argument("relabel: image must be positive");
            if (!seen.insert(img).second)
                throw std::invalid_argument("relabel: map not injective on labels");
            nb.push_back(img);
        }
        blocks.push_back(std::move(nb));
    }
    return Symbol(blocks);
}

Chain relabel(const Chain& c, const std::function<int(int)>& phi) {
    Chain out;
    for (const auto& [s, v] : c.terms()) out.add(relabel(s, phi), v);
    return out;
}

Chain relabel(const Chain& c, const std::vector<int>& sigma) {
    return relabel(c, [&sigma](int v) {
        if (v < 1 || v > static_cast<int>(sigma.size()))
            throw std::invalid_argument("relabel: label outside permutation domain");
        return sigma[static_cast<std::size_t>(v) - 1];
    });
}

Symbol concat(const Symbol& a, const Symbol& b) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < a.block_count(); ++i) {
        auto blk = a.block(i);
        blocks.emplace_back(blk.begin(), blk.end());
    }
    for (int i = 0; i < b.block_count(); ++i) {
        auto blk = b.block(i);
        blocks.emplace_back(blk.begin(), blk.end());
    }
    return Symbol(blocks);  // duplicate labels rejected by the constructor
}

Chain concat(const Chain& a, const Chain& b) {
    Chain out;
    for (const auto& [sa, va] : a.terms())
        for (const auto& [sb, vb] : b.terms()) out.add(concat(sa, sb), va * vb);
    return out;
}

std::pair<Symbol, int> desc_project(const Symbol& s) {
    std::vector<std::vector<int>> blocks;
    int sign = 1;
    for (int i = 0; i < s.block_count(); ++i) {
        auto b = s.block(i);
        // parity of the sort-to-descending permutation = number of ascending
        // pairs (p < q with b[p] < b[q])
        int inv = 0;
        for (std::size_t p = 0; p < b.size(); ++p)
            for (std::size_t q = p + 1; q < b.size(); ++q)
                if (b[p] < b[q]) ++inv;
        if (inv % 2 != 0) sign = -sign;
        std::vector<int> nb(b.begin(), b.end());
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        blocks.push_back(std::move(nb));
    }
    return {Symbol(blocks), sign};
}

Chain desc_project(const Chain& c) {
    Chain out;
    for (const auto& [s, v] : c.terms()) {
        auto [p, sign] = desc_project(s);
        out.add(p, v * sign);
    }
    return out;
}

std::string chain_to_json(const Chain& c, int n) {
    nlohmann::json j;
    j["n"] = n;
    j["dim"] = c.dimension();
    auto& terms = j["terms"] = nlohmann::json::array();
    for (const auto& [s, v] : c.terms())
        terms.push_back({{"symbol", s.str()}, {"coeff", v}});
    return j.dump(2);
}

Chain chain_from_json(const std::string& text, int* n_out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("chain file: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("chain file: missing 'n' or 'terms'");
    int n = j.at("n").get<int>();
    if (n_out) *n_out = n;
    Chain out;
    for (const auto& t : j.at("terms")) {
        Symbol s = Symbol::parse(t.at("symbol").get<std::string>());
        for (int v : s.labels())
            if (v > n)
                throw std::invalid_argument("chain file: label " + std::to_string(v) +
                                            " above level " + std::to_string(n));
        out.add(s, t.at("coeff").get<coeff_t>());
    }
    if (!out.empty() && j.contains("dim") && j.at("dim").get<int>() != out.dimension())
        throw std::invalid_argument("chain file: declared dim disagrees with terms");
    return out;
}

}  // namespace striphom
