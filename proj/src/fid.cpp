#include "striphom/fid.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "striphom/chain.hpp"
#include "striphom/complex.hpp"
#include "striphom/homology.hpp"
#include "striphom/morse.hpp"

namespace striphom {

void FIdMorphism::validate() const {
    if (n < 0 || m < n) throw std::invalid_argument("morphism: need 0 <= n <= m");
    if (d < 1) throw std::invalid_argument("morphism: need d >= 1");
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("morphism: phi must list images of 1.." + std::to_string(n));
    std::set<int> image;
    for (int v : phi) {
        if (v < 1 || v > m) throw std::invalid_argument("morphism: image out of range");
        if (!image.insert(v).second) throw std::invalid_argument("morphism: phi not injective");
    }
    if (static_cast<int>(colors.size()) != m - n)
        throw std::invalid_argument("morphism: colors must cover exactly the missed targets");
    for (auto [k, c] : colors) {
        if (k < 1 || k > m || image.count(k))
            throw std::invalid_argument("morphism: color key " + std::to_string(k) +
                                        " is not a missed target");
        if (c < 0 || c >= d) throw std::invalid_argument("morphism: color out of range");
    }
}

std::string FIdMorphism::str() const {
    std::ostringstream os;
    os << "n=" << n << ";m=" << m << ";phi=";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << phi[i];
    os << ";colors=";
    bool first = true;
    for (auto [k, c] : colors) {
        os << (first ? "" : ",") << k << ':' << c;
        first = false;
    }
    os << ";d=" << d;
    return os.str();
}

FIdMorphism FIdMorphism::parse(const std::string& text) {
    FIdMorphism mor;
    bool saw_n = false, saw_m = false, saw_phi = false, saw_colors = false, saw_d = false;
    std::istringstream fields(text);
    std::string field;
    while (std::getline(fields, field, ';')) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("morphism: field without '=': " + field);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        auto parse_int = [&](const std::string& s) {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument("morphism: bad number " + s);
            return v;
        };
        if (key == "n") {
            mor.n = parse_int(value);
            saw_n = true;
        } else if (key == "m") {
            mor.m = parse_int(value);
            saw_m = true;
        } else if (key == "d") {
            mor.d = parse_int(value);
            saw_d = true;
        } else if (key == "phi") {
            saw_phi = true;
            std::istringstream parts(value);
            std::string part;
            while (std::getline(parts, part, ',')) mor.phi.push_back(parse_int(part));
        } else if (key == "colors") {
            saw_colors = true;
            std::istringstream parts(value);
            std::string part;
            while (std::getline(parts, part, ',')) {
                auto colon = part.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("morphism: color without ':': " + part);
                int k = parse_int(part.substr(0, colon));
                int c = parse_int(part.substr(colon + 1));
                if (!mor.colors.emplace(k, c).second)
                    throw std::invalid_argument("morphism: duplicate color key " + part);
            }
        } else {
            throw std::invalid_argument("morphism: unknown field " + key);
        }
    }
    if (!saw_n || !saw_m || !saw_phi || !saw_colors || !saw_d)
        throw std::invalid_argument("morphism: need n, m, phi, colors, d");
    mor.validate();
    return mor;
}

FIdMorphism identity_morphism(int n, int d) {
    FIdMorphism mor;
    mor.n = mor.m = n;
    mor.d = d;
    mor.phi.resize(n);
    std::iota(mor.phi.begin(), mor.phi.end(), 1);
    mor.validate();
    return mor;
}

FIdMorphism compose(const FIdMorphism& second, const FIdMorphism& first) {
    first.validate();
    second.validate();
    if (first.m != second.n)
        throw std::invalid_argument("compose: levels do not chain (" + std::to_string(first.m) +
                                    " vs " + std::to_string(second.n) + ")");
    if (first.d != second.d) throw std::invalid_argument("compose: color counts differ");
    FIdMorphism out;
    out.n = first.n;
    out.m = second.m;
    out.d = first.d;
    out.phi.reserve(out.n);
    for (int v : first.phi) out.phi.push_back(second.phi[v - 1]);
    std::set<int> image(out.phi.begin(), out.phi.end());
    // a missed target of the composite is either missed by the second map
    // (keeps its own color) or the second map's image of a target the first
    // map missed (inherits that color)
    std::vector<int> inverse(second.m + 1, 0);
    for (int i = 1; i <= second.n; ++i) inverse[second.phi[i - 1]] = i;
    for (int i = 1; i <= out.m; ++i) {
        if (image.count(i)) continue;
        int pre = inverse[i];
        out.colors[i] = pre ? first.colors.at(pre) : second.colors.at(i);
    }
    out.validate();
    return out;
}

Decomposition decompose(const FIdMorphism& mor) {
    mor.validate();
    Decomposition dec;
    dec.sigma = mor.phi;
    std::set<int> image(mor.phi.begin(), mor.phi.end());
    for (int i = 1; i <= mor.m; ++i)
        if (!image.count(i)) {
            dec.sigma.push_back(i);
            dec.colors.push_back(mor.colors.at(i));
        }
    return dec;
}

FIdMorphism recompose(const Decomposition& dec, int n, int d) {
    FIdMorphism mor;
    mor.n = n;
    mor.m = static_cast<int>(dec.sigma.size());
    mor.d = d;
    mor.phi.assign(dec.sigma.begin(), dec.sigma.begin() + n);
    for (int i = 0; i < mor.m - n; ++i) mor.colors[dec.sigma[n + i]] = dec.colors[i];
    mor.validate();
    return mor;
}

int color_count(const ComplexSpec& spec, int dim) {
    spec.validate();
    if (dim < 0) throw std::invalid_argument("color_count: negative dimension");
    if (spec.variant == Variant::full) return dim + 1;
    if (spec.w == 1) {
        if (dim != 0) throw std::invalid_argument("color_count: w=1 homology lives in degree 0");
        return 1;
    }
    if (dim % (spec.w - 1) != 0)
        throw std::invalid_argument("color_count: homology vanishes unless (w-1) | dim");
    return dim / (spec.w - 1) + 1;
}

HomologyClass unit_class(const Symbol& e, const ComplexSpec& spec) {
    if (!is_critical(e, spec))
        throw std::invalid_argument("unit_class: " + e.str() + " is not critical in " + spec.str());
    HomologyClass h;
    h.spec = spec;
    h.dim = e.dimension();
    h.d = color_count(spec, h.dim);
    h.coords[e] = 1;
    return h;
}

HomologyClass from_coordinates(const BasisCoordinates& bc) {
    HomologyClass h;
    h.spec = bc.spec;
    h.dim = bc.dim;
    h.d = color_count(bc.spec, bc.dim);
    h.coords = bc.coords;
    return h;
}

namespace {

void require_permutation(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("act_perm: permutation must have length n");
    std::vector<char> seen(n + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("act_perm: not a permutation");
        seen[v] = 1;
    }
}

}  // namespace

HomologyClass act_perm(const HomologyClass& h, const std::vector<int>& sigma) {
    require_permutation(sigma, h.spec.n);
    Chain total;
    for (const auto& [e, t] : h.coords) {
        Chain z = relabel(z_cycle(e, h.spec), sigma);
        if (h.spec.variant == Variant::descending) z = desc_project(z);
        total += t * z;
    }
    HomologyClass out;
    out.spec = h.spec;
    out.dim = h.dim;
    out.d = h.d;
    if (!total.empty()) out.coords = reduce_to_basis(total, h.spec).coords;
    return out;
}

HomologyClass act_insert(const HomologyClass& h, int k) {
    if (k < 0 || k >= h.d)
        throw std::invalid_argument("act_insert: color " + std::to_string(k) + " outside 0.." +
                                    std::to_string(h.d - 1));
    HomologyClass out;
    out.spec = ComplexSpec{h.spec.n + 1, h.spec.w, h.spec.variant};
    out.dim = h.dim;
    out.d = h.d;
    int fresh = h.spec.n + 1;
    for (const auto& [e, t] : h.coords) {
        BarrierFactorization fac = factorize(e, h.spec);
        int pos = 0;
        if (k > 0) {
            const Factor& b = fac.barrier(k);
            pos = b.first_block + b.block_span;
        }
        Symbol image = e.insert_singleton(pos, fresh);
        if (!is_critical(image, out.spec))
            throw std::logic_error("act_insert: image " + image.str() + " is not critical");
        out.coords[image] += t;
        if (out.coords[image] == 0) out.coords.erase(image);
    }
    return out;
}

HomologyClass act(const HomologyClass& h, const FIdMorphism& mor) {
    mor.validate();
    if (mor.n != h.spec.n)
        throw std::invalid_argument("act: morphism source level " + std::to_string(mor.n) +
                                    " does not match class level " + std::to_string(h.spec.n));
    if (mor.d != h.d)
        throw std::invalid_argument("act: morphism has " + std::to_string(mor.d) +
                                    " colors, class expects " + std::to_string(h.d));
    Decomposition dec = decompose(mor);
    HomologyClass cur = h;
    for (int c : dec.colors) cur = act_insert(cur, c);
    return act_perm(cur, dec.sigma);
}

namespace {

// all injections [n] -> [N] as image vectors, ascending-complement order
void for_each_injection(int n, int N, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> mask(N, 0);
    std::fill(mask.begin(), mask.begin() + n, 1);
    std::sort(mask.begin(), mask.end());  // lowest combinations first via next_permutation
    do {
        std::vector<int> chosen;
        for (int i = 0; i < N; ++i)
            if (mask[i]) chosen.push_back(i + 1);
        std::sort(chosen.begin(), chosen.end());
        do {
            fn(chosen);
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::next_permutation(mask.begin(), mask.end()));
}

FIdMorphism injection_morphism(const std::vector<int>& images, int N, int d,
                               const std::vector<int>& missed_colors) {
    FIdMorphism mor;
    mor.n = static_cast<int>(images.size());
    mor.m = N;
    mor.d = d;
    mor.phi = images;
    std::set<int> image(images.begin(), images.end());
    int idx = 0;
    for (int i = 1; i <= N; ++i)
        if (!image.count(i)) mor.colors[i] = missed_colors[idx++];
    mor.validate();
    return mor;
}

std::string class_str(const HomologyClass& h) {
    if (h.coords.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = h.coords.rbegin(); it != h.coords.rend(); ++it) {
        coeff_t c = it->second;
        if (first) {
            if (c == -1)
                os << '-';
            else if (c != 1)
                os << c << ' ';
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c != 1 && c != -1) os << (c < 0 ? -c : c) << ' ';
        }
        os << '[' << it->first.str() << ']';
        first = false;
    }
    return os.str();
}

}  // namespace

Report check_commute(const ComplexSpec& spec, int dim) {
    Report rep;
    int n = spec.n;
    std::vector<Symbol> cells = critical_cells(spec, dim);
    int d = color_count(spec, dim);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    long long checked = 0;
    do {
        std::vector<int> extended = sigma;
        extended.push_back(n + 1);  // fixes the inserted label
        for (const Symbol& e : cells) {
            HomologyClass h = unit_class(e, spec);
            HomologyClass after_perm = act_perm(h, sigma);
            for (int k = 0; k < d; ++k) {
                HomologyClass lhs = act_insert(after_perm, k);
                HomologyClass rhs = act_perm(act_insert(h, k), extended);
                ++checked;
                if (!lhs.same_coords(rhs)) {
                    std::ostringstream os;
                    os << "commute fails: e=" << e.str() << " sigma=";
                    for (int v : sigma) os << v << ' ';
                    os << "k=" << k << "  i_k.sigma = " << class_str(lhs)
                       << "  sigma~.i_k = " << class_str(rhs);
                    rep.fail(os.str());
                    if (rep.issues.size() >= 5) return rep;
                }
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::ostringstream os;
    os << spec.str() << " dim " << dim << ": [i_k][sigma] = [sigma~][i_k] on " << checked
       << " (cell, permutation, color) triples";
    rep.note(os.str());
    return rep;
}

Report check_unordered(const ComplexSpec& spec, int dim) {
    Report rep;
    int n = spec.n;
    std::vector<Symbol> cells = critical_cells(spec, dim);
    int d = color_count(spec, dim);
    std::vector<int> swap_last_two(n + 2);
    std::iota(swap_last_two.begin(), swap_last_two.end(), 1);
    std::swap(swap_last_two[n], swap_last_two[n + 1]);
    long long checked = 0;
    for (const Symbol& e : cells) {
        HomologyClass h = unit_class(e, spec);
        for (int k = 0; k < d; ++k) {
            HomologyClass ik = act_insert(h, k);
            for (int l = 0; l < d; ++l) {
                HomologyClass lhs = act_perm(act_insert(act_insert(h, l), k), swap_last_two);
                HomologyClass rhs = act_insert(ik, l);
                ++checked;
                if (!lhs.same_coords(rhs)) {
                    std::ostringstream os;
                    os << "unordered insertion fails: e=" << e.str() << " k=" << k << " l=" << l
                       << "  (n+1 n+2).i_k.i_l = " << class_str(lhs)
                       << "  i_l.i_k = " << class_str(rhs);
                    rep.fail(os.str());
                    if (rep.issues.size() >= 5) return rep;
                }
            }
        }
    }
    std::ostringstream os;
    os << spec.str() << " dim " << dim << ": [(n+1 n+2)][i_k][i_l] = [i_l][i_k] on " << checked
       << " (cell, k, l) triples";
    rep.note(os.str());
    return rep;
}

Report check_functoriality(const ComplexSpec& spec, int dim, int pairs, std::uint64_t seed) {
    Report rep;
    std::mt19937_64 rng(seed);
    std::vector<Symbol> cells = critical_cells(spec, dim);
    if (cells.empty()) {
        rep.fail("functoriality: no critical cells at dim " + std::to_string(dim));
        return rep;
    }
    int d = color_count(spec, dim);
    auto random_morphism = [&](int from, int to) {
        std::vector<int> targets(to);
        std::iota(targets.begin(), targets.end(), 1);
        std::shuffle(targets.begin(), targets.end(), rng);
        std::vector<int> images(targets.begin(), targets.begin() + from);
        std::vector<int> missed_colors;
        std::uniform_int_distribution<int> color(0, d - 1);
        for (int i = 0; i < to - from; ++i) missed_colors.push_back(color(rng));
        return injection_morphism(images, to, d, missed_colors);
    };
    for (int trial = 0; trial < pairs; ++trial) {
        int n = spec.n;
        std::uniform_int_distribution<int> up(0, 2);
        int m = n + up(rng);
        int p = m + up(rng);
        FIdMorphism m1 = random_morphism(n, m);
        FIdMorphism m2 = random_morphism(m, p);
        // random class: small combination of up to three basis cells
        HomologyClass h;
        h.spec = spec;
        h.dim = dim;
        h.d = d;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(cells.size()) - 1);
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (int j = 0; j < 3; ++j) {
            coeff_t c = coeff(rng);
            if (c == 0) continue;
            const Symbol& e = cells[pick(rng)];
            h.coords[e] += c;
            if (h.coords[e] == 0) h.coords.erase(e);
        }
        HomologyClass via_composite = act(h, compose(m2, m1));
        HomologyClass via_steps = act(act(h, m1), m2);
        if (!via_composite.same_coords(via_steps)) {
            std::ostringstream os;
            os << "functoriality fails: h=" << class_str(h) << " m1={" << m1.str() << "} m2={"
               << m2.str() << "}  composite: " << class_str(via_composite)
               << "  stepwise: " << class_str(via_steps);
            rep.fail(os.str());
            if (rep.issues.size() >= 5) return rep;
        }
    }
    std::ostringstream os;
    os << spec.str() << " dim " << dim << ": act(compose(m2,m1)) = act(m2).act(m1) on " << pairs
       << " random composable pairs (seed " << seed << ")";
    rep.note(os.str());
    return rep;
}

Report check_generation(Variant variant, int w, int dim, int max_level) {
    Report rep;
    if (dim <= 0) {
        rep.fail("generation: need dim >= 1");
        return rep;
    }
    // generator levels: every level through 3*dim can carry new generators in
    // the full variant; the descending variant is generated by the single
    // all-barrier level b(w+1)
    std::vector<int> generator_levels;
    if (variant == Variant::full) {
        for (int n0 = 2; n0 <= 3 * dim; ++n0) generator_levels.push_back(n0);
    } else {
        if (w < 2 || dim % (w - 1) != 0) {
            rep.fail("generation: descending variant needs (w-1) | dim");
            return rep;
        }
        generator_levels.push_back((dim / (w - 1)) * (w + 1));
    }
    int d = color_count(ComplexSpec{std::max(dim + 1, 2), w, variant}, dim);
    for (int N = generator_levels.front(); N <= max_level; ++N) {
        ComplexSpec target{N, w, variant};
        std::vector<Symbol> basis = critical_cells(target, dim);
        std::map<Symbol, int, SymbolLess> column;
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) column[basis[i]] = i;
        if (basis.empty()) continue;
        SparseIntMatrix mat;
        mat.cols = static_cast<int>(basis.size());
        mat.rows = 0;
        for (int n0 : generator_levels) {
            if (n0 > N) continue;
            ComplexSpec source{n0, w, variant};
            std::vector<Symbol> gens = critical_cells(source, dim);
            if (gens.empty()) continue;
            std::vector<std::vector<int>> colorings;  // all d^(N-n0) color words
            std::vector<int> word(N - n0, 0);
            while (true) {
                colorings.push_back(word);
                int i = 0;
                while (i < N - n0 && word[i] == d - 1) word[i++] = 0;
                if (i == N - n0) break;
                ++word[i];
            }
            for_each_injection(n0, N, [&](const std::vector<int>& images) {
                for (const std::vector<int>& colors : colorings) {
                    FIdMorphism mor = injection_morphism(images, N, d, colors);
                    for (const Symbol& g : gens) {
                        HomologyClass img = act(unit_class(g, source), mor);
                        int row = mat.rows++;
                        for (const auto& [e, t] : img.coords)
                            mat.entries.emplace_back(row, column.at(e), t);
                    }
                }
            });
        }
        std::vector<BigInt> divisors = smith_normal_form(mat);
        bool full_rank = static_cast<int>(divisors.size()) == mat.cols;
        bool all_unit = std::all_of(divisors.begin(), divisors.end(),
                                    [](const BigInt& v) { return v == 1; });
        if (!full_rank || !all_unit) {
            std::ostringstream os;
            os << "generation fails at " << target.str() << " dim " << dim << ": image matrix "
               << mat.rows << "x" << mat.cols << " has rank " << divisors.size() << " of "
               << mat.cols;
            if (!all_unit) {
                os << ", divisors";
                for (const BigInt& v : divisors)
                    if (v != 1) os << ' ' << v;
            }
            rep.fail(os.str());
        } else {
            std::ostringstream os;
            os << target.str() << " dim " << dim << ": generator images (" << mat.rows
               << " classes) span the full integer lattice Z^" << mat.cols;
            rep.note(os.str());
        }
    }
    return rep;
}

Report check_barriers(const ComplexSpec& spec, int dim) {
    Report rep;
    int n = spec.n;
    std::vector<Symbol> cells = critical_cells(spec, dim);

    // (1) permutation actions preserve barrier counts; every support cell of
    // act_perm([z(e)]) factors with as many barriers as e
    long long perm_checked = 0;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        for (const Symbol& e : cells) {
            int barriers = factorize(e, spec).barrier_count();
            HomologyClass moved = act_perm(unit_class(e, spec), sigma);
            for (const auto& [cell, t] : moved.coords) {
                ++perm_checked;
                int got = factorize(cell, spec).barrier_count();
                if (got != barriers) {
                    std::ostringstream os;
                    os << "barrier count changes under permutation: e=" << e.str() << " -> "
                       << cell.str() << " (" << barriers << " vs " << got << ")";
                    rep.fail(os.str());
                    if (rep.issues.size() >= 5) return rep;
                }
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    // (1') insertions preserve dimension and barrier count, raise level by 1,
    // and send basis elements to basis elements
    int d = color_count(spec, dim);
    ComplexSpec up{n + 1, spec.w, spec.variant};
    long long insert_checked = 0;
    for (const Symbol& e : cells) {
        int barriers = factorize(e, spec).barrier_count();
        for (int k = 0; k < d; ++k) {
            HomologyClass ins = act_insert(unit_class(e, spec), k);
            ++insert_checked;
            if (ins.coords.size() != 1 || ins.coords.begin()->second != 1) {
                rep.fail("insertion is not basis-to-basis on e=" + e.str() +
                         " k=" + std::to_string(k));
                continue;
            }
            const Symbol& image = ins.coords.begin()->first;
            if (image.dimension() != dim || image.label_count() != n + 1 ||
                factorize(image, up).barrier_count() != barriers) {
                rep.fail("insertion changes dim/level/barriers: " + e.str() + " -> " +
                         image.str());
            }
        }
    }

    // (2) only barriers obstruct singletons: barrier-free critical cells of
    // every level up to n admit a free singleton on either side, homologously
    long long swap_checked = 0;
    for (int level = 1; level <= n - 1; ++level) {
        ComplexSpec small{level, spec.w, spec.variant};
        ComplexSpec big{level + 1, spec.w, spec.variant};
        for (const Symbol& e : critical_cells(small, 0)) {  // barrier-free = all singletons
            Chain z = z_cycle(e, small);
            Chain fresh = Chain::unit(Symbol(std::vector<std::vector<int>>{{level + 1}}));
            Chain left = concat(fresh, z);
            Chain right = concat(z, fresh);
            ++swap_checked;
            if (!homologous(left, right, big)) {
                rep.fail("free singleton fails to pass a barrier-free cycle: e=" + e.str());
                if (rep.issues.size() >= 5) return rep;
            }
        }
    }

    // (3) critical cells concatenate after a trailing barrier: e1 ending with
    // a barrier, e2 critical on shifted-up labels, e1|e2 critical
    long long concat_checked = 0;
    int tail_levels = spec.variant == Variant::full ? 3 : spec.w + 1;
    for (const Symbol& e1 : cells) {
        BarrierFactorization fac = factorize(e1, spec);
        if (fac.factors.empty() || fac.factors.back().kind == FactorKind::singleton) continue;
        for (int n2 = 1; n2 <= tail_levels; ++n2) {
            ComplexSpec tail_spec{n2, spec.w, spec.variant};
            ComplexSpec joined{n + n2, spec.w, spec.variant};
            for (int d2 = 0; d2 <= max_dimension(tail_spec); ++d2) {
                for (const Symbol& e2 : critical_cells(tail_spec, d2)) {
                    Symbol shifted = relabel(e2, [&](int v) { return v + n; });
                    Symbol glued = concat(e1, shifted);
                    ++concat_checked;
                    if (!is_critical(glued, joined)) {
                        rep.fail("concatenation after a barrier is not critical: " + e1.str() +
                                 " | " + shifted.str());
                        if (rep.issues.size() >= 5) return rep;
                    }
                }
            }
        }
    }

    std::ostringstream os;
    os << spec.str() << " dim " << dim << ": barrier counts stable under " << perm_checked
       << " permutation images and " << insert_checked << " insertions; " << swap_checked
       << " singleton swaps homologous; " << concat_checked
       << " post-barrier concatenations critical";
    rep.note(os.str());
    return rep;
}

}  // namespace striphom
