#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hml/derived.hpp"
#include "hml/k3.hpp"

namespace hml {

using Json = nlohmann::json;

// ---- scalar/matrix encodings ----
// rationals serialize as reduced "p/q" strings (q > 0), prime-field scalars
// as integer residues; the field tag travels in a "field" header

Json scalarToJson(const Scalar& s);
Scalar scalarFromJson(Field f, const Json& j);
Json matToJson(const Mat& m);
Mat matFromJson(Field f, const Json& j);
Json intMatToJson(const IntMat& m);
IntMat intMatFromJson(const Json& j);
Json ratToJson(const mpq_class& q);
mpq_class ratFromJson(const Json& j);

/// Canonical rendering used everywhere: 2-space indent, sorted keys,
/// trailing newline.
std::string dumpJson(const Json& j);

// ---- CLI argument encodings ----

/// "r,(c1,...),s" with rational entries.
MukaiElementQ parseElementQ(const std::string& text);
/// Integral variant; rejects fractions.
MukaiElement parseElement(const std::string& text);
/// "(a,b,...)" integers.
std::vector<mpz_class> parseIntVector(const std::string& text);

Json elementToJson(const MukaiElementQ& e);

/// A loaded object: typed payload plus the reference names it was declared
/// with, so serialization reproduces the source document.
struct Doc {
    std::string kind;
    std::string name;
    std::string sourceFile;
    std::map<std::string, std::string> refs;

    std::optional<AlgebraPtr> algebra;
    std::optional<FDModule> module;
    std::optional<ModuleMap> moduleMap;
    std::optional<AlgebraMap> algebraMap;
    std::optional<Complex> complex;
    std::optional<ChainMap> chainMap;
    std::optional<Triangle> triangle;
    std::optional<EvenLattice> lattice; // kinds "lattice" and "extended"
    std::optional<HodgePeriod> period;
    std::optional<EvenLattice> periodLattice;
    std::optional<IntMat> isometry;
    std::optional<EvenLattice> isometryLattice;
    std::optional<Mat> fmkernel;
};

/// Named registry of loaded objects. Everything is validated when built;
/// names must be unique across files and every reference must resolve.
class Workspace {
public:
    explicit Workspace(Field defaultField) : defaultField_(defaultField) {}

    /// Registers the file's object; returns its name (explicit "name" field
    /// or the file stem). Validation happens in finalize().
    std::string addFile(const std::string& path);
    std::string addJson(const Json& j, const std::string& fallbackName,
                        const std::string& provenance);

    /// Builds and validates every registered object.
    void finalize();

    bool has(const std::string& name) const { return docs_.count(name) > 0; }
    const Doc& doc(const std::string& name) const;
    std::vector<std::string> names() const;

    AlgebraPtr algebra(const std::string& name) const;
    FDModule module(const std::string& name) const;
    /// A module lifts to its one-entry complex in degree 0.
    Complex complexOf(const std::string& name) const;
    ModuleMap moduleMap(const std::string& name) const;
    /// A module map lifts to a chain map of one-entry complexes.
    ChainMap chainMapOf(const std::string& name) const;
    AlgebraMap algebraMapOf(const std::string& name) const;
    Triangle triangleOf(const std::string& name) const;
    EvenLattice latticeOf(const std::string& name) const;
    HodgePeriod periodOf(const std::string& name, EvenLattice* h2Out = nullptr) const;
    IntMat isometryOf(const std::string& name, EvenLattice* h2Out = nullptr) const;
    Mat fmkernelOf(const std::string& name) const;

    /// Canonical re-serialization of a loaded object (same refs, same form).
    Json serialize(const std::string& name) const;

    Field defaultField() const { return defaultField_; }

private:
    Field defaultField_;
    std::map<std::string, Json> raw_;
    std::map<std::string, Doc> docs_;
    mutable std::vector<std::string> building_; // cycle guard

    void build(const std::string& name);
    const Doc& built(const std::string& name) const;

    AlgebraPtr resolveAlgebra(const Json& j, Doc& owner, const std::string& slot);
    FDModule resolveModule(const Json& j, Doc& owner, const std::string& slot);
    Complex resolveComplexRef(const Json& j, Doc& owner, const std::string& slot);
    EvenLattice resolveLattice(const Json& j, Doc& owner, const std::string& slot);
    Doc& buildAlgebraDoc(const Json& j, Doc& d);
    Doc& buildModuleDoc(const Json& j, Doc& d);
    Doc& buildComplexDoc(const Json& j, Doc& d);
};

// serializers for inline payloads (no name, no refs)
Json algebraToJson(const AlgebraPtr& a);
Json moduleToJson(const FDModule& m, const std::optional<std::string>& algebraRef);
Json complexToJson(const Complex& c, const Doc* refSource);
Json latticeToJson(const EvenLattice& l);

struct CommandResult {
    enum class Status { Ok = 0, Violation = 1, ParseError = 2, NonConvergent = 3 };
    Status status = Status::Ok;
    Json payload;
    std::vector<std::string> diagnostics;
    int exitCode() const { return static_cast<int>(status); }
};

} // namespace hml
