#include "mutau/fibres.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

namespace mutau {

std::string FamilySpec::base_str() const {
    switch (base) {
        case BaseRing::Z: return "Z";
        case BaseRing::Qt: return "Q[t]";
        case BaseRing::Fpt: return "F" + std::to_string(base_p) + "[t]";
    }
    return "?";
}

std::string scan_quantity_name(ScanQuantity q) {
    switch (q) {
        case ScanQuantity::Mu: return "mu";
        case ScanQuantity::CokerDim: return "fibre-dim";
        case ScanQuantity::TjurinaModuleDim: return "dim-T";
    }
    return "?";
}

ScanQuantity default_scan_quantity(FamilyKind kind) {
    return kind == FamilyKind::Hypersurface ? ScanQuantity::Mu : ScanQuantity::CokerDim;
}

ScanQuantity default_semicont_quantity(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Hypersurface: return ScanQuantity::Mu;
        case FamilyKind::Ideal: return ScanQuantity::TjurinaModuleDim;
        case FamilyKind::Presentation: return ScanQuantity::CokerDim;
    }
    return ScanQuantity::Mu;
}

// ---- family file format ----

namespace {

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

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

BaseRing parse_base(const std::string& text, std::uint64_t& p) {
    if (text == "Z") return BaseRing::Z;
    if (text == "Q[t]") return BaseRing::Qt;
    if (text.size() > 4 && text.front() == 'F' && text.substr(text.size() - 3) == "[t]") {
        std::string num = text.substr(1, text.size() - 4);
        char* end = nullptr;
        unsigned long long v = std::strtoull(num.c_str(), &end, 10);
        if (end != num.c_str() + num.size() || v == 0)
            throw InputError("bad base ring '" + text + "'");
        validate_prime_modulus(v);
        p = v;
        return BaseRing::Fpt;
    }
    throw InputError("unknown base ring '" + text + "' (expected Z, Q[t], or F<p>[t])");
}

}  // namespace

FamilySpec parse_family_text(const std::string& text, const std::string& source_name) {
    FamilySpec fam;
    bool have_base = false, have_vars = false, have_kind = false;
    std::vector<std::string> entry_texts;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        auto fail = [&](const std::string& msg) {
            throw InputError(source_name + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (key == "base") {
            fam.base = parse_base(rest, fam.base_p);
            have_base = true;
        } else if (key == "vars") {
            fam.vars = split_commas(rest);
            if (fam.vars.empty()) fail("no variables given");
            have_vars = true;
        } else if (key == "ordering") {
            if (rest == "ds")
                fam.ord = OrdKind::Ds;
            else if (rest == "ls")
                fam.ord = OrdKind::Ls;
            else
                fail("unknown ordering '" + rest + "'");
        } else if (key == "kind") {
            std::istringstream ks(rest);
            std::string kname;
            ks >> kname;
            if (kname == "hypersurface") {
                fam.kind = FamilyKind::Hypersurface;
            } else if (kname == "ideal") {
                fam.kind = FamilyKind::Ideal;
            } else if (kname == "presentation") {
                fam.kind = FamilyKind::Presentation;
                if (!(ks >> fam.rows >> fam.cols) || fam.rows < 1 || fam.cols < 1)
                    fail("presentation needs positive rows and cols");
                if (fam.rows > kMaxGenerators) fail("presentation rank too large");
            } else {
                fail("unknown kind '" + kname + "'");
            }
            have_kind = true;
        } else if (key == "entry") {
            if (rest.empty()) fail("empty entry");
            entry_texts.push_back(rest);
        } else {
            fail("unknown directive '" + key + "'");
        }
    }

    if (!have_base) throw InputError(source_name + ": missing 'base' line");
    if (!have_vars) throw InputError(source_name + ": missing 'vars' line");
    if (!have_kind) throw InputError(source_name + ": missing 'kind' line");

    std::size_t expected = fam.kind == FamilyKind::Hypersurface ? 1
                           : fam.kind == FamilyKind::Presentation
                               ? static_cast<std::size_t>(fam.rows) * static_cast<std::size_t>(fam.cols)
                               : entry_texts.size();
    if (fam.kind == FamilyKind::Ideal && entry_texts.empty())
        throw InputError(source_name + ": an ideal family needs at least one entry");
    if (fam.kind == FamilyKind::Ideal && entry_texts.size() > static_cast<std::size_t>(kMaxGenerators))
        throw InputError(source_name + ": too many generators");
    if (entry_texts.size() != expected)
        throw InputError(source_name + ": expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(entry_texts.size()));

    switch (fam.base) {
        case BaseRing::Z: {
            auto ring = make_ring(QField{}, fam.vars, fam.ord);
            std::vector<Poly<QField>> es;
            for (const auto& s : entry_texts) {
                auto f = parse_polynomial<QField>(s, ring);
                for (const auto& t : f.terms())
                    if (!t.c.is_integer())
                        throw InputError(source_name + ": entry '" + s +
                                         "' has a non-integer coefficient over base Z");
                es.push_back(std::move(f));
            }
            fam.entries = std::move(es);
            break;
        }
        case BaseRing::Qt: {
            auto ring = make_ring(QtField{}, fam.vars, fam.ord);
            std::vector<Poly<QtField>> es;
            for (const auto& s : entry_texts) {
                auto f = parse_polynomial<QtField>(s, ring);
                for (const auto& t : f.terms())
                    if (!t.c.is_polynomial())
                        throw InputError(source_name + ": entry '" + s +
                                         "' has a denominator in t; base Q[t] wants polynomial coefficients");
                es.push_back(std::move(f));
            }
            fam.entries = std::move(es);
            break;
        }
        case BaseRing::Fpt: {
            auto ring = make_ring(FptField(fam.base_p), fam.vars, fam.ord);
            std::vector<Poly<FptField>> es;
            for (const auto& s : entry_texts) {
                auto f = parse_polynomial<FptField>(s, ring);
                for (const auto& t : f.terms())
                    if (!t.c.is_polynomial())
                        throw InputError(source_name + ": entry '" + s +
                                         "' has a denominator in t; base F_p[t] wants polynomial coefficients");
                es.push_back(std::move(f));
            }
            fam.entries = std::move(es);
            break;
        }
    }
    return fam;
}

FamilySpec load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open family file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_family_text(buf.str(), path);
}

std::string serialize_family(const FamilySpec& fam) {
    std::string out;
    out += "base " + fam.base_str() + "\n";
    out += "vars ";
    for (std::size_t i = 0; i < fam.vars.size(); ++i) out += (i ? "," : "") + fam.vars[i];
    out += "\n";
    out += std::string("ordering ") + (fam.ord == OrdKind::Ds ? "ds" : "ls") + "\n";
    switch (fam.kind) {
        case FamilyKind::Hypersurface: out += "kind hypersurface\n"; break;
        case FamilyKind::Ideal: out += "kind ideal\n"; break;
        case FamilyKind::Presentation:
            out += "kind presentation " + std::to_string(fam.rows) + " " + std::to_string(fam.cols) + "\n";
            break;
    }
    std::visit(
        [&](const auto& es) {
            for (const auto& e : es) out += "entry " + e.str() + "\n";
        },
        fam.entries);
    return out;
}

FamilySpec family_over_z(const std::vector<std::string>& exprs, const std::vector<std::string>& vars,
                         OrdKind ord, FamilyKind kind) {
    std::string text = "base Z\nvars ";
    for (std::size_t i = 0; i < vars.size(); ++i) text += (i ? "," : "") + vars[i];
    text += std::string("\nordering ") + (ord == OrdKind::Ds ? "ds" : "ls") + "\n";
    text += kind == FamilyKind::Hypersurface ? "kind hypersurface\n" : "kind ideal\n";
    for (const auto& e : exprs) text += "entry " + e + "\n";
    return parse_family_text(text, "<expression>");
}

void validate_point(const FamilySpec& fam, const FibrePoint& pt) {
    switch (pt.kind) {
        case FibrePoint::Kind::Generic: return;
        case FibrePoint::Kind::Prime:
            if (fam.base != BaseRing::Z)
                throw InputError("prime points only make sense over base Z");
            validate_prime_modulus(pt.prime);
            return;
        case FibrePoint::Kind::Value:
            if (fam.base == BaseRing::Z)
                throw InputError("parameter values only make sense over base k[t]");
            return;
    }
}

FibrePoint parse_fibre_point(const std::string& text, const FamilySpec& fam) {
    std::string s = trim(text);
    if (s == "generic") return FibrePoint::generic();
    auto eq = s.find('=');
    if (eq == std::string::npos)
        throw InputError("bad point '" + s + "' (expected generic, p=<prime>, or t=<value>)");
    std::string lhs = trim(s.substr(0, eq));
    std::string rhs = trim(s.substr(eq + 1));
    if (lhs == "p") {
        char* end = nullptr;
        unsigned long long v = std::strtoull(rhs.c_str(), &end, 10);
        if (end != rhs.c_str() + rhs.size() || v == 0) throw InputError("bad prime in point '" + s + "'");
        FibrePoint pt = FibrePoint::at_prime(v);
        validate_point(fam, pt);
        return pt;
    }
    if (lhs == "t") {
        bool neg = false;
        std::string body = rhs;
        if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
            neg = body[0] == '-';
            body = body.substr(1);
        }
        auto slash = body.find('/');
        try {
            BigInt num(slash == std::string::npos ? body : body.substr(0, slash));
            BigInt den(slash == std::string::npos ? std::string("1") : body.substr(slash + 1));
            FibrePoint pt = FibrePoint::at_value(Rational(neg ? -num : num, den));
            validate_point(fam, pt);
            return pt;
        } catch (const std::exception& e) {
            if (dynamic_cast<const Error*>(&e)) throw;
            throw InputError("bad value in point '" + s + "'");
        }
    }
    throw InputError("bad point '" + s + "' (expected generic, p=<prime>, or t=<value>)");
}

std::string fibre_field_name(const FamilySpec& fam, const FibrePoint& pt) {
    switch (fam.base) {
        case BaseRing::Z:
            return pt.kind == FibrePoint::Kind::Prime ? "F:" + std::to_string(pt.prime) : "Q";
        case BaseRing::Qt:
            return pt.kind == FibrePoint::Kind::Value ? "Q" : "Qt";
        case BaseRing::Fpt:
            return pt.kind == FibrePoint::Kind::Value ? "F:" + std::to_string(fam.base_p)
                                                      : "Ft:" + std::to_string(fam.base_p);
    }
    return "?";
}

// ---- specialization ----

namespace {

template <class SrcF, class DstF, class CoeffMap>
std::vector<Poly<DstF>> map_entries(const std::vector<Poly<SrcF>>& src, const RingP<DstF>& ring,
                                    CoeffMap&& cm) {
    std::vector<Poly<DstF>> out;
    out.reserve(src.size());
    for (const auto& f : src) {
        std::vector<typename Poly<DstF>::Term> terms;
        terms.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            auto c = cm(t.c);
            if (!c.is_zero()) terms.push_back({std::move(c), t.m});
        }
        out.push_back(Poly<DstF>::from_terms(ring, std::move(terms)));
    }
    return out;
}

}  // namespace

std::vector<Poly<FpField>> specialize_z_at_prime(const FamilySpec& fam, std::uint64_t p) {
    auto ring = make_ring(FpField(p), fam.vars, fam.ord);
    return map_entries(fam.entries_z(), ring, [p](const Rational& c) { return reduce_mod_p(c, p); });
}

std::vector<Poly<QField>> specialize_z_generic(const FamilySpec& fam) { return fam.entries_z(); }

std::vector<Poly<QField>> specialize_qt_at_value(const FamilySpec& fam, const Rational& c) {
    auto ring = make_ring(QField{}, fam.vars, fam.ord);
    return map_entries(fam.entries_qt(), ring, [&c](const RatFunQ& r) {
        Rational num = uni_eval(r.num(), c, Rational(0));
        Rational den = uni_eval(r.den(), c, Rational(0));
        if (den.is_zero()) throw BadPrimeError("parameter value t=" + c.str() + " hits a denominator");
        return num / den;
    });
}

std::vector<Poly<QtField>> specialize_qt_generic(const FamilySpec& fam) { return fam.entries_qt(); }

std::vector<Poly<FpField>> specialize_fpt_at_value(const FamilySpec& fam, const Rational& c) {
    auto ring = make_ring(FpField(fam.base_p), fam.vars, fam.ord);
    Fp cv = reduce_mod_p(c, fam.base_p);
    Fp zero{0, fam.base_p};
    return map_entries(fam.entries_fpt(), ring, [&](const RatFunFp& r) {
        Fp num = uni_eval(r.num(), cv, zero);
        Fp den = uni_eval(r.den(), cv, zero);
        if (den.is_zero()) throw BadPrimeError("parameter value t=" + c.str() + " hits a denominator");
        return num / den;
    });
}

std::vector<Poly<FptField>> specialize_fpt_generic(const FamilySpec& fam) { return fam.entries_fpt(); }

// ---- per-fibre computations ----

namespace {

template <class F>
Dim quantity_kernel(const FamilySpec& fam, ScanQuantity q, const std::vector<Poly<F>>& polys,
                    const MoraOptions& opts) {
    switch (q) {
        case ScanQuantity::Mu:
            return milnor_number(polys.at(0), opts, nullptr);
        case ScanQuantity::TjurinaModuleDim:
            return tjurina_module_dimension(polys, opts);
        case ScanQuantity::CokerDim: {
            RingP<F> ring = polys.front().ring();
            int rank = fam.kind == FamilyKind::Presentation ? fam.rows : 1;
            std::vector<Vec<F>> gens;
            if (fam.kind == FamilyKind::Presentation) {
                for (int c = 0; c < fam.cols; ++c) {
                    Vec<F> v = Vec<F>::zero(ring, rank);
                    for (int r = 0; r < fam.rows; ++r)
                        v.comp[static_cast<std::size_t>(r)] =
                            polys[static_cast<std::size_t>(r * fam.cols + c)];
                    gens.push_back(std::move(v));
                }
            } else {
                for (const auto& p : polys) gens.push_back(Vec<F>::from_poly(p));
            }
            return vector_space_dimension(standard_basis(gens, rank, opts));
        }
    }
    throw MathError("internal: unknown scan quantity");
}

template <class Fn>
auto with_fibre(const FamilySpec& fam, const FibrePoint& pt, Fn&& fn) {
    validate_point(fam, pt);
    switch (fam.base) {
        case BaseRing::Z:
            if (pt.kind == FibrePoint::Kind::Prime) return fn(specialize_z_at_prime(fam, pt.prime));
            return fn(specialize_z_generic(fam));
        case BaseRing::Qt:
            if (pt.kind == FibrePoint::Kind::Value) return fn(specialize_qt_at_value(fam, pt.value));
            return fn(specialize_qt_generic(fam));
        case BaseRing::Fpt:
            if (pt.kind == FibrePoint::Kind::Value) return fn(specialize_fpt_at_value(fam, pt.value));
            return fn(specialize_fpt_generic(fam));
    }
    throw MathError("internal: unknown base ring");
}

}  // namespace

Dim fibre_quantity(const FamilySpec& fam, const FibrePoint& pt, ScanQuantity q,
                   const MoraOptions& opts) {
    return with_fibre(fam, pt,
                      [&](const auto& polys) { return quantity_kernel(fam, q, polys, opts); });
}

Dim completed_fibre_dimension(const FamilySpec& fam, const FibrePoint& pt, const MoraOptions& opts) {
    return fibre_quantity(fam, pt, ScanQuantity::CokerDim, opts);
}

ModularReport modular_scan(const FamilySpec& fam, std::vector<std::uint64_t> primes,
                           const MoraOptions& opts, bool parallel) {
    if (fam.base != BaseRing::Z) throw InputError("modular scans run over base Z");
    if (primes.empty()) throw InputError("no primes given");
    for (auto p : primes)
        if (!is_prime_u64(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    ModularReport rep;
    rep.quantity = default_scan_quantity(fam.kind);
    rep.generic_value = fibre_quantity(fam, FibrePoint::generic(), rep.quantity, opts);

    auto run_one = [&](std::uint64_t p) -> ScanEntry {
        ScanEntry e;
        e.prime = p;
        try {
            e.value = fibre_quantity(fam, FibrePoint::at_prime(p), rep.quantity, opts);
            e.status = ScanEntry::Status::Ok;
        } catch (const ResourceExhaustedError& ex) {
            e.status = ScanEntry::Status::Exhausted;
            e.note = ex.what();
        } catch (const BadPrimeError& ex) {
            e.status = ScanEntry::Status::Bad;
            e.note = ex.what();
        }
        return e;
    };

    if (parallel && primes.size() > 1) {
        std::vector<std::future<ScanEntry>> futs;
        futs.reserve(primes.size());
        for (auto p : primes)
            futs.push_back(std::async(std::launch::async, run_one, p));
        for (auto& f : futs) rep.entries.push_back(f.get());
    } else {
        for (auto p : primes) rep.entries.push_back(run_one(p));
    }

    for (const auto& e : rep.entries) {
        if (e.status != ScanEntry::Status::Ok) {
            rep.bad.push_back({e.prime, e.note});
            continue;
        }
        if (e.value == rep.generic_value) rep.lucky.push_back(e.prime);
        if (e.value.is_finite() && e.value < rep.generic_value) rep.violations.push_back(e.prime);
    }
    return rep;
}

SemicontReport semicontinuity_check(const FamilySpec& fam, const FibrePoint& special,
                                    const std::vector<FibrePoint>& nearby, const MoraOptions& opts) {
    SemicontReport rep;
    rep.quantity = default_semicont_quantity(fam.kind);
    rep.special = special;
    rep.special_value = fibre_quantity(fam, special, rep.quantity, opts);
    rep.vacuous = rep.special_value->is_infinite();

    for (const auto& pt : nearby) {
        SemicontComparison cmp;
        cmp.point = pt;
        cmp.hard = pt.kind == FibrePoint::Kind::Generic;
        try {
            Dim v = fibre_quantity(fam, pt, rep.quantity, opts);
            cmp.value = v;
            if (rep.vacuous) {
                cmp.status = "VACUOUS";
                cmp.note = "special value is infinite; inequality holds trivially";
            } else if (v <= *rep.special_value) {
                cmp.status = "PASS";
            } else if (cmp.hard) {
                cmp.status = "FAIL";
                cmp.note = "the generic point lies in every neighbourhood";
                rep.ok = false;
            } else {
                cmp.status = "EXCUSED";
                cmp.note = "closed point may lie outside the neighbourhood U";
            }
        } catch (const MathError& ex) {
            cmp.status = "ERROR";
            cmp.note = ex.what();
        }
        rep.comparisons.push_back(std::move(cmp));
    }
    return rep;
}

std::vector<FibreReport> fibre_invariant_scan(const FamilySpec& fam,
                                              const std::vector<FibrePoint>& points,
                                              const MoraOptions& opts) {
    if (fam.kind == FamilyKind::Presentation)
        throw InputError("invariant scans need generators (hypersurface or ideal family)");
    std::vector<FibreReport> out;
    for (const auto& pt : points) {
        FibreReport fr;
        fr.point = pt;
        fr.fibre_field = fibre_field_name(fam, pt);
        try {
            with_fibre(fam, pt, [&](const auto& polys) {
                try {
                    fr.d_hat = tjurina_module_dimension(polys, opts);
                } catch (const MathError& ex) {
                    fr.note = ex.what();
                }
                try {
                    fr.invariants = full_report(polys, opts);
                } catch (const MathError& ex) {
                    fr.note = fr.note.empty() ? ex.what() : fr.note + "; " + ex.what();
                }
                return 0;
            });
        } catch (const MathError& ex) {
            fr.note = ex.what();
        }
        out.push_back(std::move(fr));
    }
    return out;
}

}  // namespace mutau
