#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hml/complex.hpp"

namespace hml {

/// A free (degrees ≤ 0 relative to the target) or injective (degrees ≥ 0)
/// replacement with a quasi-isomorphism augmentation and a depth bound.
/// `truncated` records whether construction stopped at the depth limit with
/// work remaining; the augmentation is a quasi-isomorphism strictly inside
/// the constructed window either way.
struct Resolution {
    enum class Kind { Free, Injective };
    Kind kind;
    Complex complex;
    ChainMap augmentation; // Free: complex → target; Injective: target → complex
    Complex target;
    int depth;
    bool truncated;
};

/// How covers pick module generators. Greedy is the deterministic default;
/// FullBasis covers by every standard basis vector and exists so tests can
/// produce genuinely different resolutions of the same module.
enum class CoverStrategy { Greedy, FullBasis };

Resolution freeResolution(const FDModule& m, int depth,
                          CoverStrategy cs = CoverStrategy::Greedy);
Resolution injectiveResolution(const FDModule& m, int depth,
                               CoverStrategy cs = CoverStrategy::Greedy);
Resolution resolveComplex(const Complex& c, Resolution::Kind kind, int depth,
                          CoverStrategy cs = CoverStrategy::Greedy);

/// Lift of f: M → N to the given resolutions (matching kinds, same depth).
/// With a perturbation seed, a random element of the solution space is mixed
/// in at every degree; all outputs are homotopic.
ChainMap liftMap(const ModuleMap& f, const Resolution& rm, const Resolution& rn,
                 std::optional<std::uint64_t> perturbSeed = {});

// ---- derived functors ----

enum class ExtRoute { Projective, Injective };

struct ExtTable {
    ExtRoute route = ExtRoute::Projective;
    int maxDegree = 0;
    int minReported = 0, maxReported = -1; // valid window actually reported
    std::map<int, int> dims;               // zero entries omitted
    bool truncated = false;
    int dimAt(int i) const;
};

ExtTable ext(const Complex& c, const Complex& d, int maxDegree, ExtRoute route,
             std::optional<int> depthOverride = {});
ExtTable ext(const FDModule& m, const FDModule& n, int maxDegree,
             ExtRoute route = ExtRoute::Projective);

/// Tor_i = H^{−i} of (free replacement of c) ⊗ d, reported for 0 ≤ i ≤ max.
ExtTable tor(const Complex& c, const Complex& d, int maxDegree,
             std::optional<int> depthOverride = {});
ExtTable tor(const FDModule& m, const FDModule& n, int maxDegree);

// ---- verdicts ----

struct CheckFailure {
    std::string spot;
    std::string detail;
};

struct Verdict {
    bool ok = true;
    std::vector<CheckFailure> failures;
    void fail(const std::string& spot, const std::string& detail) {
        ok = false;
        failures.push_back({spot, detail});
    }
};

struct LESEntry {
    int degree;
    std::string name;
    int dim;
};

struct LESReport {
    Verdict verdict;
    std::vector<LESEntry> sequence;
};

/// Rolls the triangle out to ⋯ → H^i(C) → H^i(D) → H^i(E) → H^{i+1}(C) → ⋯
/// and verifies exactness at every spot by rank equalities.
LESReport cohomologyLES(const Triangle& t);

enum class HomSide { First, Second };

/// Ext long exact sequence of 0 → C → D → E → 0 against `fixedArg`, built
/// from the Hom complexes of a resolution and the snake connecting map.
LESReport derivedFunctorLES(const ModuleMap& inc, const ModuleMap& prj,
                            const FDModule& fixedArg, HomSide side, int maxDegree);

struct SesToTriangle {
    Verdict verdict;
    ChainMap coneToQuotient; // Cone(inc) → E
};

SesToTriangle sesToTriangleCheck(const ChainMap& inc, const ChainMap& prj);
SesToTriangle sesToTriangleCheck(const ModuleMap& inc, const ModuleMap& prj);

/// TR2 on a strict cone triangle: builds C[1] → Cone(j) and verifies it is a
/// quasi-isomorphism.
Verdict tr2Rotate(const Triangle& t);

/// TR3: completes (c, d) to e: Cone(f) → Cone(f′) using a homotopy witness
/// for d∘f ≃ f′∘c.
ChainMap tr3Complete(const ChainMap& c, const ChainMap& d, const ChainMap& f,
                     const ChainMap& fPrime);

struct OctahedronResult {
    ChainMap coneFToConeGF;
    ChainMap coneGFToConeG;
    Verdict verdict;
};

OctahedronResult octahedron(const ChainMap& f, const ChainMap& g);

struct WindmillReport {
    Verdict verdict;
    std::vector<int> dims; // ker f, ker gf, ker g, coker f, coker gf, coker g
};

WindmillReport windmillCheck(const ModuleMap& f, const ModuleMap& g);

/// Alternating sum of Ext dims 0..bound; requires the last
/// max(2, bound/4) dims (or `tailWindow`) to vanish, else NonConvergent.
long long eulerChi(const FDModule& m, const FDModule& n, int bound,
                   std::optional<int> tailWindow = {});

/// Ext(M,M) dims match the two-point pattern 1, 0…0, 1(at d), 0…0.
bool spherelikeCheck(const FDModule& m, int d, int bound);

Verdict adjunctionCheck(const AlgebraMap& phi, const FDModule& m, const FDModule& n,
                        int maxDegree);

Verdict projectionFormulaCheck(const AlgebraMap& phi, const Complex& e, const Complex& f,
                               int maxDegree);

Verdict flatBaseChangeCheck(const AlgebraMap& phiF, const AlgebraMap& phiU,
                            const FDModule& m, int maxDegree);

} // namespace hml
