#include "striphom/basis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace striphom {

int BarrierFactorization::barrier_count() const {
    int k = 0;
    for (const Factor& f : factors)
        if (f.kind != FactorKind::singleton) ++k;
    return k;
}

const Factor& BarrierFactorization::barrier(int k) const {
    int seen = 0;
    for (const Factor& f : factors) {
        if (f.kind != FactorKind::singleton && ++seen == k) return f;
    }
    throw std::out_of_range("barrier index " + std::to_string(k));
}

BarrierFactorization factorize(const Symbol& e, const ComplexSpec& spec) {
    if (!is_critical(e, spec))
        throw std::invalid_argument("factorize: " + e.str() + " is not critical in " + spec.str());
    BarrierFactorization out;
    int i = 0;
    while (i < e.block_count()) {
        if (e.block_size(i) == 1) {
            int u = e.block(i)[0];
            // criticality makes any following non-singleton descending block a
            // follower of u, so it binds into a wheel here
            if (i + 1 < e.block_count() && e.block_size(i + 1) >= 2 &&
                e.block_is_descending(i + 1) && u < e.block_min(i + 1)) {
                Factor f;
                f.kind = FactorKind::wheel;
                f.first_block = i;
                f.block_span = 2;
                f.labels.push_back(u);
                auto b = e.block(i + 1);
                f.labels.insert(f.labels.end(), b.begin(), b.end());
                std::sort(f.labels.begin(), f.labels.end());
                out.factors.push_back(std::move(f));
                i += 2;
                continue;
            }
            out.factors.push_back({FactorKind::singleton, {u}, i, 1});
            ++i;
        } else {
            // critical non-singleton block not claimed by a wheel: must be an
            // ascending 2-block of the full variant
            auto b = e.block(i);
            if (spec.variant != Variant::full || b.size() != 2 || b[0] > b[1])
                throw std::logic_error("factorize: unexpected block in critical cell " + e.str());
            out.factors.push_back({FactorKind::pair, {b[0], b[1]}, i, 1});
            ++i;
        }
    }
    return out;
}

namespace {

Chain factor_cycle(const Factor& f) {
    switch (f.kind) {
        case FactorKind::singleton:
            return Chain::unit(Symbol(std::vector<std::vector<int>>{{f.labels[0]}}));
        case FactorKind::pair: {
            Chain c;
            c.add(Symbol(std::vector<std::vector<int>>{{f.labels[0], f.labels[1]}}), 1);
            c.add(Symbol(std::vector<std::vector<int>>{{f.labels[1], f.labels[0]}}), 1);
            return c;
        }
        case FactorKind::wheel: {
            std::vector<int> desc(f.labels.rbegin(), f.labels.rend());
            return boundary(Symbol({desc}));
        }
    }
    throw std::logic_error("factor_cycle: bad kind");
}

}  // namespace

Chain z_cycle(const Symbol& e, const ComplexSpec& spec) {
    BarrierFactorization fac = factorize(e, spec);
    Chain acc = factor_cycle(fac.factors[0]);
    for (std::size_t i = 1; i < fac.factors.size(); ++i)
        acc = concat(acc, factor_cycle(fac.factors[i]));
    return acc;
}

Chain BasisCoordinates::expand() const {
    Chain acc;
    for (const auto& [e, a] : coords) acc += a * z_cycle(e, spec);
    return acc;
}

std::string BasisCoordinates::to_json() const {
    nlohmann::json j;
    j["n"] = spec.n;
    j["w"] = spec.w;
    j["variant"] = variant_name(spec.variant);
    j["dim"] = dim;
    auto& cs = j["coords"] = nlohmann::json::array();
    for (const auto& [e, a] : coords) cs.push_back({{"symbol", e.str()}, {"coeff", a}});
    return j.dump(2);
}

BasisCoordinates reduce_to_basis(const Chain& c, const ComplexSpec& spec) {
    spec.validate();
    BasisCoordinates out;
    out.spec = spec;
    out.dim = c.dimension();
    if (c.empty()) return out;
    for (const auto& [s, v] : c.terms())
        if (!in_complex(s, spec))
            throw std::invalid_argument("reduce_to_basis: " + s.str() + " not in " + spec.str());
    if (!boundary(c).empty())
        throw std::invalid_argument("reduce_to_basis: input chain is not a cycle");

    Chain r = c;
    while (!r.empty()) {
        const Symbol m = r.maximum();
        coeff_t a = r.coeff(m);
        MatchState st = match_state(m, spec);
        if (st.kind == MatchKind::critical) {
            Chain zm = z_cycle(m, spec);
            coeff_t eps = zm.coeff(m);  // ±1: e is the greatest term of z(e)
            coeff_t t = a * eps;
            r -= t * zm;
            out.coords[m] = t;
        } else if (st.kind == MatchKind::paired_up) {
            Chain bg = boundary(*st.partner);
            coeff_t eps = bg.coeff(m);  // ±1: m is the greatest face of its partner
            r -= (a * eps) * bg;
        } else {
            // a cycle's greatest term can never be the least coface of its own
            // greatest face (that face would survive in the boundary)
            throw std::logic_error("reduce_to_basis: greatest term " + m.str() +
                                   " is matched downward");
        }
        if (!r.empty() && !precedes(r.maximum(), m))
            throw std::logic_error("reduce_to_basis: no descent at " + m.str());
    }
    return out;
}

bool homologous(const Chain& a, const Chain& b, const ComplexSpec& spec) {
    if (a.empty() && b.empty()) return true;
    Chain diff = a - b;  // enforces matching dimension and label set
    if (diff.empty()) return true;
    return reduce_to_basis(diff, spec).is_zero();
}

}  // namespace striphom
