// mutau - local singularity invariants of power series defined by
// polynomial data, and completed-fibre scans of families over Z and k[t].

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mutau/fibres.hpp"

using nlohmann::ordered_json;
using namespace mutau;

namespace {

struct RingArgs {
    std::string vars = "x,y";
    std::string field = "Q";
    std::string ordering = "ds";
};

struct IoArgs {
    std::vector<std::string> exprs;
    std::string file;
    std::string format = "text";
    std::uint64_t max_steps = 1'000'000;
};

void add_ring_options(CLI::App* cmd, RingArgs& ring) {
    cmd->add_option("--vars", ring.vars, "comma-separated variable names")->capture_default_str();
    cmd->add_option("--field", ring.field, "coefficient field: Q, F:<p>, Qt, Ft:<p>")
        ->capture_default_str();
    cmd->add_option("--ordering", ring.ordering, "local ordering: ds or ls")->capture_default_str();
}

void add_io_options(CLI::App* cmd, IoArgs& io, bool multi) {
    cmd->add_option("expr", io.exprs, multi ? "generators" : "polynomial")->expected(-1);
    cmd->add_option("--file", io.file, "read generators from a file, one per line");
    cmd->add_option("--format", io.format, "output format: text or json")->capture_default_str();
    cmd->add_option("--max-steps", io.max_steps, "reduction step budget")->capture_default_str();
}

std::vector<std::string> gather_inputs(const IoArgs& io) {
    if (!io.file.empty() && !io.exprs.empty())
        throw InputError("give either inline expressions or --file, not both");
    if (!io.file.empty()) {
        std::ifstream in(io.file);
        if (!in) throw InputError("cannot open '" + io.file + "'");
        std::vector<std::string> out;
        std::string line;
        while (std::getline(in, line)) {
            std::size_t a = line.find_first_not_of(" \t\r\n");
            if (a == std::string::npos) continue;
            if (line[a] == '#') continue;
            out.push_back(line);
        }
        if (out.empty()) throw InputError("'" + io.file + "' contains no expressions");
        return out;
    }
    if (io.exprs.empty()) throw InputError("no input given (inline expression or --file)");
    return io.exprs;
}

OrdKind parse_ordering(const std::string& s) {
    if (s == "ds") return OrdKind::Ds;
    if (s == "ls") return OrdKind::Ls;
    throw InputError("unknown ordering '" + s + "' (expected ds or ls)");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

ordered_json dim_json(const Dim& d) {
    if (d.is_infinite()) return "infinite";
    return d.value();
}

ordered_json report_json(const InvariantReport& rep) {
    ordered_json j;
    j["field"] = rep.field;
    j["nvars"] = rep.nvars;
    j["ngens"] = rep.ngens;
    j["mu"] = rep.mu ? dim_json(*rep.mu) : ordered_json(nullptr);
    j["tau"] = rep.tau ? dim_json(*rep.tau) : ordered_json(nullptr);
    j["dim_T_I"] = dim_json(rep.dim_T_I);
    j["ord"] = rep.ord;
    j["determinacy_bound"] =
        rep.determinacy_bound ? ordered_json(*rep.determinacy_bound) : ordered_json(nullptr);
    j["is_CI"] = rep.is_ci ? ordered_json(*rep.is_ci) : ordered_json(nullptr);
    j["isolated"] = rep.isolated ? ordered_json(*rep.isolated) : ordered_json(nullptr);
    j["warnings"] = rep.warnings;
    return j;
}

void print_report_text(const InvariantReport& rep, std::ostream& out) {
    auto opt_dim = [](const std::optional<Dim>& d) { return d ? d->str() : std::string("n/a"); };
    out << "field: " << rep.field << "\n";
    out << "generators: " << rep.ngens << " in " << rep.nvars << " variables\n";
    out << "mu: " << opt_dim(rep.mu) << "\n";
    out << "tau: " << opt_dim(rep.tau) << "\n";
    out << "dim T_I: " << rep.dim_T_I.str() << "\n";
    out << "ord: " << rep.ord << "\n";
    out << "determinacy bound: "
        << (rep.determinacy_bound ? std::to_string(*rep.determinacy_bound) : std::string("n/a"))
        << "\n";
    out << "complete intersection: " << (rep.is_ci ? (*rep.is_ci ? "true" : "false") : "n/a") << "\n";
    out << "isolated singularity: " << (rep.isolated ? (*rep.isolated ? "true" : "false") : "n/a")
        << "\n";
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
}

// Runs fn over the ring selected by the --field/--vars/--ordering flags.
template <class Fn>
int dispatch_field(const RingArgs& ra, Fn&& fn) {
    FieldDescriptor fd = parse_field_descriptor(ra.field);
    auto vars = split_commas(ra.vars);
    OrdKind ord = parse_ordering(ra.ordering);
    switch (fd.tag) {
        case FieldTag::Q: return fn(make_ring(QField{}, vars, ord));
        case FieldTag::Fp: return fn(make_ring(FpField(fd.p), vars, ord));
        case FieldTag::Qt: return fn(make_ring(QtField{}, vars, ord));
        case FieldTag::Fpt: return fn(make_ring(FptField(fd.p), vars, ord));
    }
    throw InputError("unknown field");
}

ordered_json base_doc(const std::string& command, const RingArgs& ra,
                      const std::vector<std::string>& inputs) {
    ordered_json j;
    j["command"] = command;
    j["field"] = ra.field;
    j["vars"] = split_commas(ra.vars);
    j["ordering"] = ra.ordering;
    j["input"] = inputs;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- expression-based subcommands ----

int run_single_dim_command(const std::string& command, const RingArgs& ra, const IoArgs& io) {
    auto inputs = gather_inputs(io);
    if (inputs.size() != 1) throw InputError(command + " takes exactly one polynomial");
    MoraOptions opts{io.max_steps, false};
    return dispatch_field(ra, [&](auto ring) {
        auto f = parse_polynomial(inputs[0], ring);
        std::vector<std::string> warnings;
        Dim d = command == "milnor" ? milnor_number(f, opts, &warnings)
                                    : tjurina_number(f, opts, &warnings);
        if (io.format == "json") {
            ordered_json j = base_doc(command, ra, inputs);
            j["values"] = {{command, dim_json(d)}};
            j["warnings"] = warnings;
            emit(j);
        } else {
            std::cout << d.str() << "\n";
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        }
        return 0;
    });
}

int run_report(const RingArgs& ra, const IoArgs& io) {
    auto inputs = gather_inputs(io);
    MoraOptions opts{io.max_steps, false};
    return dispatch_field(ra, [&](auto ring) {
        std::vector<decltype(parse_polynomial(inputs[0], ring))> gens;
        for (const auto& s : inputs) gens.push_back(parse_polynomial(s, ring));
        InvariantReport rep = full_report(gens, opts);
        if (io.format == "json") {
            ordered_json j = base_doc("report", ra, inputs);
            j["values"] = report_json(rep);
            emit(j);
        } else {
            print_report_text(rep, std::cout);
        }
        return 0;
    });
}

int run_determinacy(const RingArgs& ra, const IoArgs& io) {
    auto inputs = gather_inputs(io);
    MoraOptions opts{io.max_steps, false};
    return dispatch_field(ra, [&](auto ring) {
        std::vector<decltype(parse_polynomial(inputs[0], ring))> gens;
        for (const auto& s : inputs) gens.push_back(parse_polynomial(s, ring));
        std::uint64_t bound = determinacy_bound(gens, opts);
        std::vector<std::string> warnings;
        if (ring->field.characteristic() != 0)
            warnings.push_back(
                "FiniteFieldDeterminacy: bound computed over a finite field, where finite "
                "determinacy itself is only guaranteed for hypersurfaces");
        if (io.format == "json") {
            ordered_json j = base_doc("determinacy", ra, inputs);
            j["values"] = {{"determinacy_bound", bound}};
            j["warnings"] = warnings;
            emit(j);
        } else {
            std::cout << bound << "\n";
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        }
        return 0;
    });
}

int run_ci_check(const RingArgs& ra, const IoArgs& io) {
    auto inputs = gather_inputs(io);
    MoraOptions opts{io.max_steps, false};
    return dispatch_field(ra, [&](auto ring) {
        std::vector<decltype(parse_polynomial(inputs[0], ring))> gens;
        for (const auto& s : inputs) gens.push_back(parse_polynomial(s, ring));
        std::vector<std::string> warnings;
        bool ci = is_complete_intersection(gens, opts, &warnings);
        if (io.format == "json") {
            ordered_json j = base_doc("ci-check", ra, inputs);
            j["values"] = {{"is_CI", ci}};
            j["warnings"] = warnings;
            emit(j);
        } else {
            std::cout << (ci ? "true" : "false") << "\n";
        }
        return 0;
    });
}

int run_sing_locus(const RingArgs& ra, const IoArgs& io) {
    auto inputs = gather_inputs(io);
    MoraOptions opts{io.max_steps, false};
    return dispatch_field(ra, [&](auto ring) {
        std::vector<decltype(parse_polynomial(inputs[0], ring))> gens;
        for (const auto& s : inputs) gens.push_back(parse_polynomial(s, ring));
        std::vector<std::string> warnings;
        auto sing = singular_locus_ideal(gens, opts, &warnings);
        if (io.format == "json") {
            ordered_json j = base_doc("sing-locus", ra, inputs);
            std::vector<std::string> out;
            for (const auto& g : sing) out.push_back(g.str());
            j["values"] = {{"generators", out}};
            j["warnings"] = warnings;
            emit(j);
        } else {
            for (const auto& g : sing) std::cout << g.str() << "\n";
        }
        return 0;
    });
}

int run_std_basis(const RingArgs& ra, const IoArgs& io) {
    auto inputs = gather_inputs(io);
    MoraOptions opts{io.max_steps, false};
    return dispatch_field(ra, [&](auto ring) {
        std::vector<decltype(parse_polynomial(inputs[0], ring))> gens;
        for (const auto& s : inputs) gens.push_back(parse_polynomial(s, ring));
        bool all_zero = true;
        for (const auto& g : gens)
            if (!g.is_zero()) all_zero = false;
        if (all_zero) throw ZeroIdealError("all generators are zero");
        auto sb = standard_basis(gens, opts);
        std::vector<std::string> elems, leads;
        for (const auto& e : sb.elements) elems.push_back(e.comp[0].str());
        for (const auto& m : sb.leading[0]) {
            std::string mono;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ring->vars[i];
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            leads.push_back(mono.empty() ? "1" : mono);
        }
        if (io.format == "json") {
            ordered_json j = base_doc("std-basis", ra, inputs);
            j["values"] = {{"basis", elems}, {"leading_ideal", leads}};
            emit(j);
        } else {
            for (const auto& e : elems) std::cout << e << "\n";
            std::cout << "leading ideal:";
            for (const auto& l : leads) std::cout << " " << l;
            std::cout << "\n";
        }
        return 0;
    });
}

int run_dim(const RingArgs& ra, const IoArgs& io) {
    auto inputs = gather_inputs(io);
    MoraOptions opts{io.max_steps, false};
    return dispatch_field(ra, [&](auto ring) {
        std::vector<decltype(parse_polynomial(inputs[0], ring))> gens;
        for (const auto& s : inputs) gens.push_back(parse_polynomial(s, ring));
        bool all_zero = true;
        for (const auto& g : gens)
            if (!g.is_zero()) all_zero = false;
        if (all_zero) throw ZeroIdealError("all generators are zero");
        auto sb = standard_basis(gens, opts);
        Dim vdim = vector_space_dimension(sb);
        int kdim = krull_dimension(sb);
        if (io.format == "json") {
            ordered_json j = base_doc("dim", ra, inputs);
            j["values"] = {{"vector_space_dimension", dim_json(vdim)}, {"krull_dimension", kdim}};
            emit(j);
        } else {
            std::cout << "vector-space dimension: " << vdim.str() << "\n";
            std::cout << "Krull dimension: " << kdim << "\n";
        }
        return 0;
    });
}

// ---- family-based subcommands ----

int run_fibre_dim(const std::string& family_path, const std::string& point, const IoArgs& io) {
    FamilySpec fam = load_family_file(family_path);
    FibrePoint pt = parse_fibre_point(point, fam);
    MoraOptions opts{io.max_steps, false};
    Dim d = completed_fibre_dimension(fam, pt, opts);
    if (io.format == "json") {
        ordered_json j;
        j["command"] = "fibre-dim";
        j["family"] = family_path;
        j["base"] = fam.base_str();
        j["point"] = pt.str();
        j["fibre_field"] = fibre_field_name(fam, pt);
        j["values"] = {{"fibre_dim", dim_json(d)}};
        emit(j);
    } else {
        std::cout << d.str() << "\n";
    }
    return 0;
}

int run_modular_scan(const RingArgs& ra, const IoArgs& io, const std::string& family_path,
                     const std::string& primes_arg) {
    FamilySpec fam = [&] {
        if (!family_path.empty()) {
            if (!io.exprs.empty()) throw InputError("give either --family or an expression, not both");
            return load_family_file(family_path);
        }
        auto inputs = gather_inputs(io);
        return family_over_z(inputs, split_commas(ra.vars), parse_ordering(ra.ordering),
                             inputs.size() == 1 ? FamilyKind::Hypersurface : FamilyKind::Ideal);
    }();
    std::vector<std::uint64_t> primes;
    for (const auto& s : split_commas(primes_arg)) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s.c_str(), &end, 10);
        if (end != s.c_str() + s.size() || v == 0) throw InputError("bad prime '" + s + "'");
        primes.push_back(v);
    }
    MoraOptions opts{io.max_steps, false};
    ModularReport rep = modular_scan(fam, primes, opts);
    if (io.format == "json") {
        ordered_json j;
        j["command"] = "modular-scan";
        j["family"] = family_path.empty() ? ordered_json(io.exprs) : ordered_json(family_path);
        j["base"] = fam.base_str();
        j["quantity"] = scan_quantity_name(rep.quantity);
        j["generic"] = dim_json(rep.generic_value);
        ordered_json per;
        for (const auto& e : rep.entries) {
            if (e.status == ScanEntry::Status::Ok)
                per[std::to_string(e.prime)] = dim_json(e.value);
            else
                per[std::to_string(e.prime)] = "bad: " + e.note;
        }
        j["primes"] = per;
        j["lucky"] = rep.lucky;
        ordered_json bad = ordered_json::array();
        for (const auto& [p, reason] : rep.bad) bad.push_back({{"prime", p}, {"reason", reason}});
        j["bad"] = bad;
        j["violations"] = rep.violations;
        emit(j);
    } else {
        std::cout << "quantity: " << scan_quantity_name(rep.quantity) << "\n";
        std::cout << "generic: " << rep.generic_value.str() << "\n";
        for (const auto& e : rep.entries) {
            std::cout << "p=" << e.prime << ": ";
            if (e.status == ScanEntry::Status::Ok) {
                std::cout << e.value.str();
                if (e.value == rep.generic_value) std::cout << "  (lucky)";
            } else {
                std::cout << "bad (" << e.note << ")";
            }
            std::cout << "\n";
        }
        std::cout << "lucky:";
        for (auto p : rep.lucky) std::cout << " " << p;
        std::cout << "\nviolations:";
        if (rep.violations.empty())
            std::cout << " none";
        else
            for (auto p : rep.violations) std::cout << " " << p;
        std::cout << "\n";
    }
    return rep.violations.empty() ? 0 : 1;
}

int run_semicont_check(const std::string& family_path, const std::string& special_arg,
                       const std::string& nearby_arg, const IoArgs& io) {
    FamilySpec fam = load_family_file(family_path);
    FibrePoint special = parse_fibre_point(special_arg, fam);
    std::vector<FibrePoint> nearby;
    for (const auto& s : split_commas(nearby_arg)) nearby.push_back(parse_fibre_point(s, fam));
    if (nearby.empty()) throw InputError("no nearby points given");
    MoraOptions opts{io.max_steps, false};
    SemicontReport rep = semicontinuity_check(fam, special, nearby, opts);
    if (io.format == "json") {
        ordered_json j;
        j["command"] = "semicont-check";
        j["family"] = family_path;
        j["quantity"] = scan_quantity_name(rep.quantity);
        j["special"] = rep.special.str();
        j["special_value"] = rep.special_value ? dim_json(*rep.special_value) : ordered_json(nullptr);
        j["vacuous"] = rep.vacuous;
        ordered_json comps = ordered_json::array();
        for (const auto& c : rep.comparisons) {
            ordered_json cj;
            cj["point"] = c.point.str();
            cj["value"] = c.value ? dim_json(*c.value) : ordered_json(nullptr);
            cj["status"] = c.status;
            cj["hard"] = c.hard;
            if (!c.note.empty()) cj["note"] = c.note;
            comps.push_back(cj);
        }
        j["comparisons"] = comps;
        j["ok"] = rep.ok;
        emit(j);
    } else {
        std::cout << "quantity: " << scan_quantity_name(rep.quantity) << "\n";
        std::cout << "special " << rep.special.str() << ": "
                  << (rep.special_value ? rep.special_value->str() : "?")
                  << (rep.vacuous ? " (vacuous)" : "") << "\n";
        for (const auto& c : rep.comparisons) {
            std::cout << "  " << c.point.str() << ": " << (c.value ? c.value->str() : "?") << "  "
                      << c.status << (c.hard ? " (hard)" : "");
            if (!c.note.empty()) std::cout << "  - " << c.note;
            std::cout << "\n";
        }
        std::cout << (rep.ok ? "OK" : "FAILED") << "\n";
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local singularity invariants and completed-fibre scans"};
    app.require_subcommand(1);

    struct Cmd {
        RingArgs ring;
        IoArgs io;
    };

    Cmd milnor_args, tjurina_args, report_args, det_args, ci_args, sing_args, sb_args, dim_args;
    auto* c_milnor = app.add_subcommand("milnor", "Milnor number of a hypersurface");
    auto* c_tjurina = app.add_subcommand("tjurina", "Tjurina number of a hypersurface");
    auto* c_report = app.add_subcommand("report", "full invariant report for an ideal");
    auto* c_det = app.add_subcommand("determinacy", "contact determinacy bound");
    auto* c_ci = app.add_subcommand("ci-check", "complete intersection test");
    auto* c_sing = app.add_subcommand("sing-locus", "generators of the singular locus ideal");
    auto* c_sb = app.add_subcommand("std-basis", "standard basis w.r.t. the local ordering");
    auto* c_dim = app.add_subcommand("dim", "vector-space and Krull dimension of the quotient");
    for (auto [cmd, args] : {std::pair{c_milnor, &milnor_args}, {c_tjurina, &tjurina_args},
                             {c_report, &report_args}, {c_det, &det_args}, {c_ci, &ci_args},
                             {c_sing, &sing_args}, {c_sb, &sb_args}, {c_dim, &dim_args}}) {
        add_ring_options(cmd, args->ring);
        add_io_options(cmd, args->io, cmd != c_milnor && cmd != c_tjurina);
    }

    IoArgs fd_io;
    std::string fd_family, fd_point;
    auto* c_fd = app.add_subcommand("fibre-dim", "completed fibre dimension of a family");
    c_fd->add_option("--family", fd_family, "family file")->required();
    c_fd->add_option("--point", fd_point, "fibre point: generic, p=<prime>, t=<value>")->required();
    c_fd->add_option("--format", fd_io.format, "output format: text or json")->capture_default_str();
    c_fd->add_option("--max-steps", fd_io.max_steps, "reduction step budget")->capture_default_str();

    RingArgs ms_ring;
    IoArgs ms_io;
    std::string ms_family, ms_primes;
    auto* c_ms = app.add_subcommand("modular-scan", "scan a Z-family over primes and compare");
    c_ms->add_option("expr", ms_io.exprs, "hypersurface over Z")->expected(-1);
    c_ms->add_option("--family", ms_family, "family file over base Z");
    c_ms->add_option("--primes", ms_primes, "comma-separated primes")->required();
    add_ring_options(c_ms, ms_ring);
    c_ms->add_option("--format", ms_io.format, "output format: text or json")->capture_default_str();
    c_ms->add_option("--max-steps", ms_io.max_steps, "reduction step budget")->capture_default_str();

    IoArgs sc_io;
    std::string sc_family, sc_special, sc_nearby;
    auto* c_sc = app.add_subcommand("semicont-check", "semicontinuity comparisons for a family");
    c_sc->add_option("--family", sc_family, "family file")->required();
    c_sc->add_option("--special", sc_special, "special point")->required();
    c_sc->add_option("--nearby", sc_nearby, "comma-separated nearby points")->required();
    c_sc->add_option("--format", sc_io.format, "output format: text or json")->capture_default_str();
    c_sc->add_option("--max-steps", sc_io.max_steps, "reduction step budget")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_milnor->parsed()) return run_single_dim_command("milnor", milnor_args.ring, milnor_args.io);
        if (c_tjurina->parsed())
            return run_single_dim_command("tjurina", tjurina_args.ring, tjurina_args.io);
        if (c_report->parsed()) return run_report(report_args.ring, report_args.io);
        if (c_det->parsed()) return run_determinacy(det_args.ring, det_args.io);
        if (c_ci->parsed()) return run_ci_check(ci_args.ring, ci_args.io);
        if (c_sing->parsed()) return run_sing_locus(sing_args.ring, sing_args.io);
        if (c_sb->parsed()) return run_std_basis(sb_args.ring, sb_args.io);
        if (c_dim->parsed()) return run_dim(dim_args.ring, dim_args.io);
        if (c_fd->parsed()) return run_fibre_dim(fd_family, fd_point, fd_io);
        if (c_ms->parsed()) return run_modular_scan(ms_ring, ms_io, ms_family, ms_primes);
        if (c_sc->parsed()) return run_semicont_check(sc_family, sc_special, sc_nearby, sc_io);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
