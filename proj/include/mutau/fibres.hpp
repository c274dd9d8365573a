#ifndef MUTAU_FIBRES_HPP
#define MUTAU_FIBRES_HPP

#include <variant>

#include "mutau/invariants.hpp"
#include "mutau/parser.hpp"

namespace mutau {

enum class BaseRing { Z, Qt, Fpt };
enum class FamilyKind { Hypersurface, Ideal, Presentation };

// A prime of the base ring: a prime number, a parameter value t = c, or the
// generic point <0>.
struct FibrePoint {
    enum class Kind { Generic, Prime, Value };
    Kind kind = Kind::Generic;
    std::uint64_t prime = 0;
    Rational value;

    static FibrePoint generic() { return {}; }
    static FibrePoint at_prime(std::uint64_t p) {
        FibrePoint pt;
        pt.kind = Kind::Prime;
        pt.prime = p;
        return pt;
    }
    static FibrePoint at_value(Rational c) {
        FibrePoint pt;
        pt.kind = Kind::Value;
        pt.value = std::move(c);
        return pt;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Generic: return "generic";
            case Kind::Prime: return "p=" + std::to_string(prime);
            case Kind::Value: return "t=" + value.str();
        }
        return "?";
    }
};

// A family over Z or k[t]: polynomial data with base-ring coefficients,
// read as a hypersurface, an ideal, or a presentation matrix (row-major,
// rows x cols) whose cokernel is the module of interest.
struct FamilySpec {
    BaseRing base = BaseRing::Z;
    std::uint64_t base_p = 0;  // modulus for F_p[t] bases
    std::vector<std::string> vars;
    OrdKind ord = OrdKind::Ds;
    FamilyKind kind = FamilyKind::Hypersurface;
    int rows = 1;
    int cols = 1;

    std::variant<std::vector<Poly<QField>>, std::vector<Poly<QtField>>, std::vector<Poly<FptField>>>
        entries;

    std::string base_str() const;
    int nvars() const { return static_cast<int>(vars.size()); }

    const std::vector<Poly<QField>>& entries_z() const { return std::get<0>(entries); }
    const std::vector<Poly<QtField>>& entries_qt() const { return std::get<1>(entries); }
    const std::vector<Poly<FptField>>& entries_fpt() const { return std::get<2>(entries); }
};

// Family file format (one directive per line, '#' comments):
//   base Z | base Q[t] | base F<p>[t]
//   vars x,y
//   ordering ds|ls          (optional, default ds)
//   kind hypersurface | kind ideal | kind presentation <rows> <cols>
//   entry <polynomial>      (repeated; presentation entries row-major)
FamilySpec parse_family_text(const std::string& text, const std::string& source_name = "<input>");
FamilySpec load_family_file(const std::string& path);
std::string serialize_family(const FamilySpec& fam);

// Builds a one-entry hypersurface/ideal family over Z from expressions.
FamilySpec family_over_z(const std::vector<std::string>& exprs, const std::vector<std::string>& vars,
                         OrdKind ord, FamilyKind kind);

FibrePoint parse_fibre_point(const std::string& text, const FamilySpec& fam);
void validate_point(const FamilySpec& fam, const FibrePoint& pt);

std::string fibre_field_name(const FamilySpec& fam, const FibrePoint& pt);

// ---- specialization: residue maps applied coefficient-wise ----

std::vector<Poly<FpField>> specialize_z_at_prime(const FamilySpec& fam, std::uint64_t p);
std::vector<Poly<QField>> specialize_z_generic(const FamilySpec& fam);
std::vector<Poly<QField>> specialize_qt_at_value(const FamilySpec& fam, const Rational& c);
std::vector<Poly<QtField>> specialize_qt_generic(const FamilySpec& fam);
std::vector<Poly<FpField>> specialize_fpt_at_value(const FamilySpec& fam, const Rational& c);
std::vector<Poly<FptField>> specialize_fpt_generic(const FamilySpec& fam);

// Which number a scan compares across fibres.
enum class ScanQuantity { Mu, CokerDim, TjurinaModuleDim };
std::string scan_quantity_name(ScanQuantity q);
ScanQuantity default_scan_quantity(FamilyKind kind);
ScanQuantity default_semicont_quantity(FamilyKind kind);

// Completed fibre dimension: the k(p)-dimension of the cokernel of the
// specialized presentation (for hypersurface/ideal families, of the cyclic
// quotient).
Dim completed_fibre_dimension(const FamilySpec& fam, const FibrePoint& pt,
                              const MoraOptions& opts = {});

Dim fibre_quantity(const FamilySpec& fam, const FibrePoint& pt, ScanQuantity q,
                   const MoraOptions& opts = {});

struct ScanEntry {
    std::uint64_t prime = 0;
    enum class Status { Ok, Bad, Exhausted } status = Status::Ok;
    Dim value;       // meaningful for Ok
    std::string note;  // reason for Bad/Exhausted
};

struct ModularReport {
    ScanQuantity quantity = ScanQuantity::Mu;
    Dim generic_value;
    std::vector<ScanEntry> entries;               // sorted by prime
    std::vector<std::uint64_t> lucky;             // value == generic value
    std::vector<std::pair<std::uint64_t, std::string>> bad;
    std::vector<std::uint64_t> violations;        // finite value < generic value
};

// Scans a Z-family over the given primes plus the generic point. The
// generic value is computed exactly over Q, never reconstructed from the
// modular values. Per-prime computations run concurrently; the report is
// merged in prime order, so the output is deterministic.
ModularReport modular_scan(const FamilySpec& fam, std::vector<std::uint64_t> primes,
                           const MoraOptions& opts = {}, bool parallel = true);

struct SemicontComparison {
    FibrePoint point;
    std::string status;  // PASS | FAIL | EXCUSED | VACUOUS | ERROR
    bool hard = false;   // generic-point comparisons are hard assertions
    std::optional<Dim> value;
    std::string note;
};

struct SemicontReport {
    ScanQuantity quantity = ScanQuantity::Mu;
    FibrePoint special;
    std::optional<Dim> special_value;
    bool vacuous = false;
    std::vector<SemicontComparison> comparisons;
    bool ok = true;  // no hard failure
};

// Checks value(q) <= value(special) for each nearby point. A violating
// closed point is only EXCUSED (it may fall outside the open neighbourhood
// the theory provides); the generic point lies in every neighbourhood, so a
// generic violation is a hard FAIL.
SemicontReport semicontinuity_check(const FamilySpec& fam, const FibrePoint& special,
                                    const std::vector<FibrePoint>& nearby,
                                    const MoraOptions& opts = {});

struct FibreReport {
    FibrePoint point;
    std::string fibre_field;
    std::optional<Dim> d_hat;  // dim of the Tjurina module at this fibre
    std::optional<InvariantReport> invariants;
    std::string note;
};

// Full invariant report per fibre for an ideal (or hypersurface) family.
// Degenerate fibres (zero or unit generators) are reported, not thrown.
std::vector<FibreReport> fibre_invariant_scan(const FamilySpec& fam,
                                              const std::vector<FibrePoint>& points,
                                              const MoraOptions& opts = {});

}  // namespace mutau

#endif
