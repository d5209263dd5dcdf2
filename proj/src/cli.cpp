#include "striphom/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "striphom/basis.hpp"
#include "striphom/chain.hpp"
#include "striphom/complex.hpp"
#include "striphom/fid.hpp"
#include "striphom/homology.hpp"
#include "striphom/morse.hpp"
#include "striphom/report.hpp"
#include "striphom/repro.hpp"
#include "striphom/symbol.hpp"

namespace striphom {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

constexpr const char* kCacheEnv = "STRIPHOM_CACHE";

struct CommandResult {
    int code = kExitOk;
    std::string output;
};

// ---------------------------------------------------------------- plumbing

std::string canonical_request(const std::string& command,
                              std::vector<std::pair<std::string, std::string>> fields) {
    std::sort(fields.begin(), fields.end());
    std::string s = command;
    for (const auto& [k, v] : fields) {
        s += '\n';
        s += k;
        s += '=';
        s += v;
    }
    return s;
}

std::string hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::optional<CommandResult> cache_load(const fs::path& file, const std::string& request,
                                        std::ostream& err) {
    if (!fs::exists(file)) return std::nullopt;
    try {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("unreadable");
        json j = json::parse(in);
        if (j.at("request").get<std::string>() != request)
            throw std::runtime_error("request mismatch");
        return CommandResult{j.at("exit").get<int>(), j.at("output").get<std::string>()};
    } catch (const std::exception& e) {
        err << "warning: corrupt cache entry " << file.string() << " (" << e.what()
            << "); recomputing\n";
        return std::nullopt;
    }
}

void cache_store(const fs::path& file, const std::string& request, const CommandResult& r,
                 std::ostream& err) {
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    std::ofstream out(file, std::ios::trunc);
    if (!out) {
        err << "warning: cannot write cache entry " << file.string() << "\n";
        return;
    }
    json j;
    j["request"] = request;
    j["exit"] = r.code;
    j["output"] = r.output;
    out << j.dump(2) << '\n';
}

json spec_json(const ComplexSpec& spec) {
    return json{{"n", spec.n}, {"w", spec.w}, {"variant", variant_name(spec.variant)}};
}

std::vector<std::pair<std::string, std::string>> spec_fields(const ComplexSpec& spec) {
    return {{"n", std::to_string(spec.n)},
            {"w", std::to_string(spec.w)},
            {"variant", variant_name(spec.variant)}};
}

// full variant with n > 8, or any complex estimated past 10^7 cells, is
// refused without --force
std::optional<std::string> guard_reason(const ComplexSpec& spec) {
    if (spec.variant == Variant::full && spec.n > 8)
        return "full variant with n = " + std::to_string(spec.n) + " > 8";
    BigInt total = total_cell_count(spec);
    if (total > 10000000)
        return "estimated cell count " + total.str() + " exceeds 10^7";
    return std::nullopt;
}

std::string report_block(const Report& rep, const std::string& title) {
    std::ostringstream os;
    os << title << ": " << (rep.ok() ? "ok" : "FAILED") << '\n';
    for (const std::string& n : rep.notes) os << "  note: " << n << '\n';
    for (const std::string& i : rep.issues) os << "  issue: " << i << '\n';
    return os.str();
}

json report_json(const Report& rep) {
    return json{{"ok", rep.ok()}, {"notes", rep.notes}, {"issues", rep.issues}};
}

std::string coords_lines(const std::map<Symbol, coeff_t, SymbolLess>& coords) {
    if (coords.empty()) return "  (zero)\n";
    std::ostringstream os;
    for (auto it = coords.rbegin(); it != coords.rend(); ++it)
        os << "  " << (it->second >= 0 ? "+" : "") << it->second << " z(" << it->first.str()
           << ")\n";
    return os.str();
}

json coords_json(const std::map<Symbol, coeff_t, SymbolLess>& coords) {
    json arr = json::array();
    for (auto it = coords.rbegin(); it != coords.rend(); ++it)
        arr.push_back({{"cell", it->first.str()}, {"coeff", it->second}});
    return arr;
}

// ---------------------------------------------------------------- commands

CommandResult cmd_complex_stats(const ComplexSpec& spec, int dim, const std::string& format) {
    std::vector<BigInt> counts = cell_counts(spec);
    int maxd = max_dimension(spec);
    BigInt total = 0, euler = 0;
    for (int d = 0; d <= maxd; ++d) {
        total += counts[static_cast<std::size_t>(d)];
        euler += (d % 2 == 0 ? 1 : -1) * counts[static_cast<std::size_t>(d)];
    }
    if (dim > maxd)
        throw std::invalid_argument("dimension " + std::to_string(dim) + " exceeds maximum " +
                                    std::to_string(maxd));
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "complex stats";
        j["spec"] = spec_json(spec);
        j["max_dimension"] = maxd;
        json cj = json::object();
        for (int d = 0; d <= maxd; ++d)
            if (dim < 0 || d == dim) cj[std::to_string(d)] = counts[static_cast<std::size_t>(d)].str();
        j["counts"] = cj;
        if (dim < 0) {
            j["total"] = total.str();
            j["euler_characteristic"] = euler.str();
        }
        os << j.dump(2) << '\n';
    } else {
        os << "complex: " << spec.str() << '\n';
        os << "max dimension: " << maxd << '\n';
        for (int d = 0; d <= maxd; ++d)
            if (dim < 0 || d == dim)
                os << "dim " << d << ": " << counts[static_cast<std::size_t>(d)] << " cells\n";
        if (dim < 0) {
            os << "total: " << total << '\n';
            os << "euler characteristic: " << euler << '\n';
        }
    }
    return {kExitOk, os.str()};
}

CommandResult cmd_homology(const ComplexSpec& spec, bool want_torsion, const std::string& format) {
    HomologySummary h = homology(spec, want_torsion);
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "homology betti";
        j["spec"] = spec_json(spec);
        j["betti"] = h.betti;
        j["cells"] = h.cells;
        j["boundary_ranks"] = h.ranks;
        j["torsion_computed"] = want_torsion;
        json tj = json::array();
        for (const auto& t : h.torsion) {
            json row = json::array();
            for (const BigInt& v : t) row.push_back(v.str());
            tj.push_back(row);
        }
        j["torsion"] = tj;
        os << j.dump(2) << '\n';
    } else {
        os << "homology: " << spec.str() << '\n';
        bool any_torsion = false;
        for (std::size_t d = 0; d < h.betti.size(); ++d) {
            os << "dim " << d << ": cells " << h.cells[d] << ", betti " << h.betti[d];
            if (want_torsion && !h.torsion[d].empty()) {
                any_torsion = true;
                os << ", torsion";
                for (const BigInt& v : h.torsion[d]) os << ' ' << v;
            }
            os << '\n';
        }
        if (!want_torsion)
            os << "torsion: not computed\n";
        else if (!any_torsion)
            os << "torsion: none\n";
    }
    return {kExitOk, os.str()};
}

CommandResult cmd_morse_critical(const ComplexSpec& spec, int dim, bool list,
                                 const std::string& format) {
    std::vector<long long> counts = critical_counts(spec);
    int maxd = max_dimension(spec);
    if (dim > maxd)
        throw std::invalid_argument("dimension " + std::to_string(dim) + " exceeds maximum " +
                                    std::to_string(maxd));
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "morse critical";
        j["spec"] = spec_json(spec);
        json cj = json::object();
        for (int d = 0; d <= maxd; ++d)
            if (dim < 0 || d == dim) cj[std::to_string(d)] = counts[static_cast<std::size_t>(d)];
        j["counts"] = cj;
        if (list) {
            json lj = json::object();
            for (int d = 0; d <= maxd; ++d) {
                if (dim >= 0 && d != dim) continue;
                json cells = json::array();
                for (const Symbol& s : critical_cells(spec, d)) cells.push_back(s.str());
                lj[std::to_string(d)] = cells;
            }
            j["cells"] = lj;
        }
        os << j.dump(2) << '\n';
    } else {
        os << "critical cells: " << spec.str() << '\n';
        long long total = 0;
        for (int d = 0; d <= maxd; ++d) {
            if (dim >= 0 && d != dim) continue;
            os << "dim " << d << ": " << counts[static_cast<std::size_t>(d)] << '\n';
            total += counts[static_cast<std::size_t>(d)];
            if (list)
                for (const Symbol& s : critical_cells(spec, d)) os << "  " << s.str() << '\n';
        }
        os << "total: " << total << '\n';
    }
    return {kExitOk, os.str()};
}

CommandResult cmd_morse_audit(const ComplexSpec& spec, bool with_homology,
                              const std::string& format) {
    Report acyclic = verify_acyclic(spec);
    std::optional<Report> cross;
    if (with_homology) cross = verify_morse_counts(spec);
    bool pass = acyclic.ok() && (!cross || cross->ok());
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "morse audit";
        j["spec"] = spec_json(spec);
        j["acyclicity"] = report_json(acyclic);
        j["homology_crosscheck"] = cross ? report_json(*cross) : json(nullptr);
        j["pass"] = pass;
        os << j.dump(2) << '\n';
    } else {
        os << "morse audit: " << spec.str() << '\n';
        os << report_block(acyclic, "acyclicity");
        if (cross) os << report_block(*cross, "homology cross-check");
        os << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return {pass ? kExitOk : kExitVerify, os.str()};
}

std::string factor_str(const Factor& f) {
    std::ostringstream os;
    switch (f.kind) {
        case FactorKind::singleton:
            os << "Singleton(" << f.labels[0] << ")";
            break;
        case FactorKind::pair:
            os << "Pair(" << f.labels[0] << ' ' << f.labels[1] << ")";
            break;
        case FactorKind::wheel: {
            os << "Wheel(" << f.labels[0] << ";";
            for (auto it = f.labels.rbegin(); it != f.labels.rend(); ++it)
                if (*it != f.labels[0]) os << ' ' << *it;
            os << ")";
            break;
        }
    }
    return os.str();
}

const char* factor_kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::singleton: return "singleton";
        case FactorKind::pair: return "pair";
        default: return "wheel";
    }
}

CommandResult cmd_basis_show(const ComplexSpec& spec, const std::string& cell,
                             const std::string& format) {
    Symbol e = Symbol::parse(cell, spec.n);
    if (!in_complex(e, spec))
        throw std::invalid_argument("cell " + e.str() + " is not in " + spec.str());
    BarrierFactorization fac = factorize(e, spec);  // rejects non-critical cells
    Chain z = z_cycle(e, spec);
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "basis show";
        j["spec"] = spec_json(spec);
        j["cell"] = e.str();
        j["dimension"] = e.dimension();
        j["barriers"] = fac.barrier_count();
        json fj = json::array();
        for (const Factor& f : fac.factors)
            fj.push_back({{"kind", factor_kind_name(f.kind)},
                          {"labels", f.labels},
                          {"first_block", f.first_block},
                          {"block_span", f.block_span}});
        j["factors"] = fj;
        j["z"] = json::parse(chain_to_json(z, spec.n));
        os << j.dump(2) << '\n';
    } else {
        os << "cell: " << e.str() << '\n';
        os << "complex: " << spec.str() << '\n';
        os << "dimension: " << e.dimension() << '\n';
        os << "factors:";
        for (std::size_t i = 0; i < fac.factors.size(); ++i)
            os << (i ? ", " : " ") << factor_str(fac.factors[i]);
        os << '\n';
        os << "barriers: " << fac.barrier_count() << '\n';
        os << "z(e) = " << z.str() << '\n';
        os << "terms: " << z.size() << '\n';
    }
    return {kExitOk, os.str()};
}

CommandResult cmd_basis_reduce(const ComplexSpec& spec, const std::string& chain_text,
                               const std::string& format) {
    int n = 0;
    Chain c = chain_from_json(chain_text, &n);
    if (n != spec.n)
        throw std::invalid_argument("chain is on n = " + std::to_string(n) +
                                    " labels, spec has n = " + std::to_string(spec.n));
    BasisCoordinates bc = reduce_to_basis(c, spec);
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "basis reduce";
        j["spec"] = spec_json(spec);
        j["input_terms"] = c.size();
        j["dimension"] = bc.dim;
        j["coordinates"] = coords_json(bc.coords);
        os << j.dump(2) << '\n';
    } else {
        os << "input: " << c.size() << " terms, dimension " << bc.dim << '\n';
        os << "coordinates (" << bc.coords.size() << " basis cycles):\n";
        os << coords_lines(bc.coords);
    }
    return {kExitOk, os.str()};
}

HomologyClass load_class(const std::string& text, const ComplexSpec& spec) {
    if (fs::exists(text)) {
        std::ifstream in(text);
        std::stringstream buf;
        buf << in.rdbuf();
        json j = json::parse(buf.str());
        ComplexSpec file_spec{j.at("n").get<int>(), j.at("w").get<int>(),
                              variant_from_name(j.at("variant").get<std::string>())};
        if (file_spec.n != spec.n || file_spec.w != spec.w || file_spec.variant != spec.variant)
            throw std::invalid_argument("class file is for " + file_spec.str() + ", spec is " +
                                        spec.str());
        int dim = j.at("dim").get<int>();
        HomologyClass h;
        h.spec = spec;
        h.dim = dim;
        h.d = color_count(spec, dim);
        for (const auto& entry : j.at("coords")) {
            Symbol e = Symbol::parse(entry.at("symbol").get<std::string>(), spec.n);
            if (!is_critical(e, spec))
                throw std::invalid_argument("coordinate cell " + e.str() + " is not critical");
            if (e.dimension() != dim)
                throw std::invalid_argument("coordinate cell " + e.str() + " has wrong dimension");
            coeff_t a = entry.at("coeff").get<coeff_t>();
            if (a != 0) h.coords[e] += a;
        }
        return h;
    }
    return unit_class(Symbol::parse(text, spec.n), spec);
}

CommandResult cmd_fid_act(const ComplexSpec& spec, const std::string& cls,
                          const std::string& morphism, const std::string& format) {
    HomologyClass h = load_class(cls, spec);
    FIdMorphism mor = FIdMorphism::parse(morphism);
    HomologyClass img = act(h, mor);
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "fid act";
        j["spec"] = spec_json(spec);
        j["dimension"] = h.dim;
        j["colors"] = h.d;
        j["class"] = coords_json(h.coords);
        j["morphism"] = mor.str();
        j["image_spec"] = spec_json(img.spec);
        j["image"] = coords_json(img.coords);
        os << j.dump(2) << '\n';
    } else {
        os << "class at level " << spec.n << " (dimension " << h.dim << ", " << h.d
           << " colors):\n";
        os << coords_lines(h.coords);
        os << "morphism: " << mor.str() << '\n';
        os << "image at level " << img.spec.n << ":\n";
        os << coords_lines(img.coords);
    }
    return {kExitOk, os.str()};
}

CommandResult cmd_fid_verify(const ComplexSpec& spec, int dim, const std::string& property,
                             int pairs, std::uint64_t seed, int max_level,
                             const std::string& format) {
    std::vector<std::pair<std::string, Report>> results;
    auto want = [&](const char* name) { return property == "all" || property == name; };
    if (want("commute")) results.emplace_back("commute", check_commute(spec, dim));
    if (want("unordered")) results.emplace_back("unordered", check_unordered(spec, dim));
    if (want("functor"))
        results.emplace_back("functor", check_functoriality(spec, dim, pairs, seed));
    if (want("generation"))
        results.emplace_back("generation",
                             check_generation(spec.variant, spec.w, dim,
                                              max_level > 0 ? max_level : spec.n));
    if (want("barriers")) results.emplace_back("barriers", check_barriers(spec, dim));
    if (results.empty()) throw std::invalid_argument("unknown property: " + property);
    bool pass = std::all_of(results.begin(), results.end(),
                            [](const auto& r) { return r.second.ok(); });
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "fid verify";
        j["spec"] = spec_json(spec);
        j["dimension"] = dim;
        j["seed"] = seed;
        json pj = json::object();
        for (const auto& [name, rep] : results) pj[name] = report_json(rep);
        j["properties"] = pj;
        j["pass"] = pass;
        os << j.dump(2) << '\n';
    } else {
        os << "fid verify: " << spec.str() << ", dim " << dim << '\n';
        for (const auto& [name, rep] : results) os << report_block(rep, name);
        os << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return {pass ? kExitOk : kExitVerify, os.str()};
}

CommandResult cmd_export_boundary(const ComplexSpec& spec, int dim, const std::string& format) {
    SparseIntMatrix m = boundary_matrix(spec, dim);
    if (format == "json") return {kExitOk, matrix_to_json(m) + "\n"};
    return {kExitOk, matrix_to_coo(m)};
}

CommandResult cmd_repro(int id, const std::string& format) {
    Report rep = repro_figure(id);
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = "repro figure";
        j["id"] = id;
        j["notes"] = rep.notes;
        j["issues"] = rep.issues;
        j["pass"] = rep.ok();
        os << j.dump(2) << '\n';
    } else {
        for (const std::string& n : rep.notes) os << "  " << n << '\n';
        for (const std::string& i : rep.issues) os << "  MISMATCH: " << i << '\n';
        os << "repro figure " << id << ": " << (rep.ok() ? "PASS" : "FAIL") << '\n';
    }
    return {rep.ok() ? kExitOk : kExitVerify, os.str()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"homology of disk-in-a-strip and no-k-equal complexes"};
    app.name("striphom");
    app.require_subcommand(1);

    std::string format = "table";
    std::string cache_dir;
    bool no_cache = false;
    bool force = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "coordinate-matrix"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir,
                   "result cache directory (default: $" + std::string(kCacheEnv) + ")");
    app.add_flag("--no-cache", no_cache, "bypass the result cache");
    app.add_flag("--force", force, "override the resource guard");

    // shared option targets
    int n = 0, w = 2, dim = -1, id = 0, pairs = 200, max_level = 0;
    std::uint64_t seed = 20260819ull;
    std::string variant = "full", cell, chain_text, chain_file, cls, morphism,
                property = "all";
    bool list = false, no_torsion = false, with_homology = false;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of labels")->required();
        cmd->add_option("--w", w, "maximum block size (strip width)")->capture_default_str();
        cmd->add_option("--variant", variant, "complex variant")
            ->check(CLI::IsMember({"full", "desc"}))
            ->capture_default_str();
        cmd->fallthrough();
    };

    enum class Selected {
        none, complex_stats, homology_betti, morse_critical, morse_audit,
        basis_show, basis_reduce, fid_act, fid_verify, export_boundary, repro_figure
    };
    Selected selected = Selected::none;

    CLI::App* complex_cmd = app.add_subcommand("complex", "cell enumeration");
    complex_cmd->require_subcommand(1);
    complex_cmd->fallthrough();
    CLI::App* stats = complex_cmd->add_subcommand("stats", "cell counts per dimension");
    add_spec(stats);
    stats->add_option("--dim", dim, "restrict to one dimension");
    stats->callback([&] { selected = Selected::complex_stats; });

    CLI::App* homology_cmd = app.add_subcommand("homology", "homology groups");
    homology_cmd->require_subcommand(1);
    homology_cmd->fallthrough();
    CLI::App* betti = homology_cmd->add_subcommand(
        "betti", "Betti numbers and torsion from the integer boundary matrices");
    add_spec(betti);
    betti->add_flag("--no-torsion", no_torsion, "skip elementary divisors (ranks only)");
    betti->callback([&] { selected = Selected::homology_betti; });

    CLI::App* morse_cmd = app.add_subcommand("morse", "discrete gradient field");
    morse_cmd->require_subcommand(1);
    morse_cmd->fallthrough();
    CLI::App* critical = morse_cmd->add_subcommand("critical", "critical cell counts");
    add_spec(critical);
    critical->add_option("--dim", dim, "restrict to one dimension");
    critical->add_flag("--list", list, "list the critical cells");
    critical->callback([&] { selected = Selected::morse_critical; });
    CLI::App* audit = morse_cmd->add_subcommand(
        "audit", "pairing involution, predicate agreement, acyclicity");
    add_spec(audit);
    audit->add_flag("--homology", with_homology,
                    "also cross-check critical counts against Betti numbers");
    audit->callback([&] { selected = Selected::morse_audit; });

    CLI::App* basis_cmd = app.add_subcommand("basis", "homology basis cycles");
    basis_cmd->require_subcommand(1);
    basis_cmd->fallthrough();
    CLI::App* show = basis_cmd->add_subcommand("show", "factorization and cycle of a critical cell");
    add_spec(show);
    show->add_option("--cell", cell, "critical cell, e.g. \"2|5 3|1 4\"")->required();
    show->callback([&] { selected = Selected::basis_show; });
    CLI::App* reduce = basis_cmd->add_subcommand("reduce", "write a cycle in basis coordinates");
    add_spec(reduce);
    reduce->add_option("--chain", chain_text, "chain as inline JSON");
    reduce->add_option("--chain-file", chain_file, "path to a chain JSON file");
    reduce->callback([&] { selected = Selected::basis_reduce; });

    CLI::App* fid_cmd = app.add_subcommand("fid", "colored-injection module structure");
    fid_cmd->require_subcommand(1);
    fid_cmd->fallthrough();
    CLI::App* act_cmd = fid_cmd->add_subcommand("act", "apply a morphism to a homology class");
    add_spec(act_cmd);
    act_cmd->add_option("--class", cls, "critical cell or coordinates JSON file")->required();
    act_cmd->add_option("--morphism", morphism,
                        "morphism text, e.g. \"n=3;m=5;phi=4,1,5;colors=2:2,3:1;d=3\"")
        ->required();
    act_cmd->callback([&] { selected = Selected::fid_act; });
    CLI::App* verify = fid_cmd->add_subcommand("verify", "module-structure verification sweeps");
    add_spec(verify);
    verify->add_option("--j,--dim", dim, "homology dimension")->required();
    verify->add_option("--property", property,
                       "commute | unordered | functor | generation | barriers | all")
        ->check(CLI::IsMember({"commute", "unordered", "functor", "generation", "barriers",
                               "all"}))
        ->capture_default_str();
    verify->add_option("--pairs", pairs, "random morphism pairs for functoriality")
        ->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--max-level", max_level,
                       "top level for the generation sweep (default: --n)");
    verify->callback([&] { selected = Selected::fid_verify; });

    CLI::App* export_cmd = app.add_subcommand("export", "machine-readable exports");
    export_cmd->require_subcommand(1);
    export_cmd->fallthrough();
    CLI::App* boundary_cmd = export_cmd->add_subcommand(
        "boundary", "boundary matrix in coordinate (row col value) triplet form");
    add_spec(boundary_cmd);
    boundary_cmd->add_option("--dim", dim, "boundary operator index j (maps j-cells)")->required();
    boundary_cmd->callback([&] { selected = Selected::export_boundary; });

    CLI::App* repro_cmd = app.add_subcommand("repro", "golden scenarios");
    repro_cmd->require_subcommand(1);
    repro_cmd->fallthrough();
    CLI::App* figure = repro_cmd->add_subcommand("figure", "run one numbered golden scenario");
    figure->fallthrough();
    {
        std::vector<std::string> id_names;
        for (int i : repro_ids()) id_names.push_back(std::to_string(i));
        figure->add_option("--id", id, "scenario id")
            ->required()
            ->check(CLI::IsMember(id_names));
    }
    figure->callback([&] { selected = Selected::repro_figure; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ComplexSpec spec{n, w == 0 ? 2 : w,
                         variant.empty() ? Variant::full : variant_from_name(variant)};
        bool needs_spec = selected != Selected::repro_figure;
        if (needs_spec) spec.validate();

        // canonical request for the cache digest
        std::string request;
        bool guarded = false;  // commands that enumerate whole complexes
        switch (selected) {
            case Selected::complex_stats:
                request = canonical_request("complex stats", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("dim", std::to_string(dim));
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            case Selected::homology_betti:
                guarded = true;
                request = canonical_request("homology betti", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("torsion", no_torsion ? "0" : "1");
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            case Selected::morse_critical:
                guarded = true;
                request = canonical_request("morse critical", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("dim", std::to_string(dim));
                    f.emplace_back("list", list ? "1" : "0");
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            case Selected::morse_audit:
                guarded = true;
                request = canonical_request("morse audit", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("homology", with_homology ? "1" : "0");
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            case Selected::basis_show:
                request = canonical_request("basis show", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("cell", cell);
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            case Selected::basis_reduce: {
                if (chain_text.empty() == chain_file.empty())
                    throw std::invalid_argument(
                        "basis reduce needs exactly one of --chain / --chain-file");
                if (!chain_file.empty()) {
                    std::ifstream in(chain_file);
                    if (!in) throw std::invalid_argument("cannot read " + chain_file);
                    std::stringstream buf;
                    buf << in.rdbuf();
                    chain_text = buf.str();
                }
                // normalize so inline and file input with the same content share
                // a cache entry
                int n_in = 0;
                std::string normalized = chain_to_json(chain_from_json(chain_text, &n_in), n_in);
                request = canonical_request("basis reduce", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("chain", normalized);
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            }
            case Selected::fid_act: {
                std::string class_key = cls;
                if (fs::exists(cls)) {
                    std::ifstream in(cls);
                    std::stringstream buf;
                    buf << in.rdbuf();
                    class_key = buf.str();
                }
                request = canonical_request("fid act", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("class", class_key);
                    f.emplace_back("morphism", morphism);
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            }
            case Selected::fid_verify:
                guarded = true;
                request = canonical_request("fid verify", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("dim", std::to_string(dim));
                    f.emplace_back("property", property);
                    f.emplace_back("pairs", std::to_string(pairs));
                    f.emplace_back("seed", std::to_string(seed));
                    f.emplace_back("max_level", std::to_string(max_level));
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            case Selected::export_boundary:
                guarded = true;
                request = canonical_request("export boundary", [&] {
                    auto f = spec_fields(spec);
                    f.emplace_back("dim", std::to_string(dim));
                    f.emplace_back("format", format);
                    return f;
                }());
                break;
            case Selected::repro_figure:
                request = canonical_request("repro figure", {{"id", std::to_string(id)},
                                                             {"format", format}});
                break;
            case Selected::none:
                throw std::logic_error("no subcommand selected");
        }

        if (guarded && !force) {
            if (auto reason = guard_reason(spec)) {
                err << "resource guard: " << *reason << " (use --force to override)\n";
                return kExitGuard;
            }
        }

        std::string dir = cache_dir;
        if (dir.empty() && !no_cache) {
            if (const char* env = std::getenv(kCacheEnv)) dir = env;
        }
        bool use_cache = !no_cache && !dir.empty();
        fs::path entry;
        if (use_cache) {
            entry = fs::path(dir) / (hex16(fnv1a64(request)) + ".json");
            if (auto hit = cache_load(entry, request, err)) {
                out << hit->output;
                return hit->code;
            }
        }

        CommandResult result;
        switch (selected) {
            case Selected::complex_stats: result = cmd_complex_stats(spec, dim, format); break;
            case Selected::homology_betti: result = cmd_homology(spec, !no_torsion, format); break;
            case Selected::morse_critical:
                result = cmd_morse_critical(spec, dim, list, format);
                break;
            case Selected::morse_audit: result = cmd_morse_audit(spec, with_homology, format); break;
            case Selected::basis_show: result = cmd_basis_show(spec, cell, format); break;
            case Selected::basis_reduce: result = cmd_basis_reduce(spec, chain_text, format); break;
            case Selected::fid_act: result = cmd_fid_act(spec, cls, morphism, format); break;
            case Selected::fid_verify:
                result = cmd_fid_verify(spec, dim, property, pairs, seed, max_level, format);
                break;
            case Selected::export_boundary:
                result = cmd_export_boundary(spec, dim, format);
                break;
            case Selected::repro_figure: result = cmd_repro(id, format); break;
            case Selected::none: throw std::logic_error("no subcommand selected");
        }

        out << result.output;
        if (use_cache && result.code <= kExitVerify) cache_store(entry, request, result, err);
        return result.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace striphom
