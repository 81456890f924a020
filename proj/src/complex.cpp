#include "hml/complex.hpp"

#include <algorithm>

#include "hml/linsys.hpp"

namespace hml {

namespace {

int parity(int n) { return ((n % 2) + 2) % 2; }

Scalar signScalar(Field f, int n) {
    return parity(n) == 0 ? Scalar::one(f) : -Scalar::one(f);
}

} // namespace

Complex::Complex(AlgebraPtr a) : algebra_(std::move(a)) {}

Complex Complex::single(const FDModule& m, int degree) {
    std::map<int, FDModule> entries;
    if (m.dim() > 0) entries.emplace(degree, m);
    return build(m.algebra(), std::move(entries), {});
}

Complex Complex::build(AlgebraPtr a, std::map<int, FDModule> entries,
                       std::map<int, Mat> diffs) {
    Complex c(std::move(a));
    for (auto& [deg, mod] : entries) {
        if (!sameAlgebra(mod.algebra(), c.algebra_))
            inputFail("mixed-algebras", "complex entry at degree " + std::to_string(deg) +
                                            " is over a different algebra");
        if (mod.dim() > 0) c.entries_.emplace(deg, std::move(mod));
    }
    for (auto& [deg, m] : diffs) {
        if (c.dimAt(deg) == 0 || c.dimAt(deg + 1) == 0) {
            if (!m.isZero() && m.rows() > 0 && m.cols() > 0)
                inputFail("not-a-complex", "differential at degree " + std::to_string(deg) +
                                               " touches a zero entry");
            continue;
        }
        c.diffs_.emplace(deg, std::move(m));
    }
    // equivariance (via the ModuleMap constructor) and shape
    for (const auto& [deg, m] : c.diffs_)
        ModuleMap(c.entry(deg), c.entry(deg + 1), m);
    // d∘d = 0
    for (const auto& [deg, m] : c.diffs_) {
        auto next = c.diffs_.find(deg + 1);
        if (next != c.diffs_.end() && !(next->second * m).isZero())
            inputFail("not-a-complex", "d∘d ≠ 0 at degree " + std::to_string(deg));
    }
    return c;
}

FDModule Complex::entry(int i) const {
    auto it = entries_.find(i);
    if (it != entries_.end()) return it->second;
    return FDModule::zero(algebra_);
}

int Complex::dimAt(int i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0 : it->second.dim();
}

Mat Complex::diffMatrix(int i) const {
    auto it = diffs_.find(i);
    if (it != diffs_.end()) return it->second;
    return Mat(algebra_->field(), dimAt(i + 1), dimAt(i));
}

ModuleMap Complex::diff(int i) const {
    return ModuleMap(entry(i), entry(i + 1), diffMatrix(i));
}

int Complex::minDeg() const { return entries_.empty() ? 0 : entries_.begin()->first; }

int Complex::maxDeg() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }

bool operator==(const Complex& a, const Complex& b) {
    if (!sameAlgebra(a.algebra_, b.algebra_)) return false;
    if (a.entries_ != b.entries_) return false;
    // compare differentials through the zero-extension
    int lo = std::min(a.minDeg(), b.minDeg()) - 1;
    int hi = std::max(a.maxDeg(), b.maxDeg()) + 1;
    for (int i = lo; i <= hi; ++i)
        if (a.diffMatrix(i) != b.diffMatrix(i)) return false;
    return true;
}

Complex shift(const Complex& c, int n) {
    std::map<int, FDModule> entries;
    std::map<int, Mat> diffs;
    for (const auto& [deg, mod] : c.entries()) entries.emplace(deg - n, mod);
    Scalar s = signScalar(c.algebra()->field(), n);
    for (const auto& [deg, m] : c.diffs()) diffs.emplace(deg - n, m.scaled(s));
    return Complex::build(c.algebra(), std::move(entries), std::move(diffs));
}

ChainMap::ChainMap(Complex source, Complex target, std::map<int, Mat> components)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!sameAlgebra(source_.algebra(), target_.algebra()))
        inputFail("mixed-algebras", "chain map between complexes over different algebras");
    for (auto& [deg, m] : components) {
        if (source_.dimAt(deg) == 0 || target_.dimAt(deg) == 0) {
            if (!m.isZero() && m.rows() > 0 && m.cols() > 0)
                inputFail("shape-mismatch", "chain map component at degree " +
                                                std::to_string(deg) + " touches a zero entry");
            continue;
        }
        comps_.emplace(deg, std::move(m));
    }
    for (const auto& [deg, m] : comps_)
        ModuleMap(source_.entry(deg), target_.entry(deg), m); // shape + equivariance
    int lo = std::min(source_.minDeg(), target_.minDeg()) - 1;
    int hi = std::max(source_.maxDeg(), target_.maxDeg()) + 1;
    for (int i = lo; i <= hi; ++i) {
        Mat lhs = component(i + 1) * source_.diffMatrix(i);
        Mat rhs = target_.diffMatrix(i) * component(i);
        if (lhs != rhs)
            inputFail("not-a-chain-map", "square at degree " + std::to_string(i) + " does not commute");
    }
}

ChainMap ChainMap::zero(Complex source, Complex target) {
    return ChainMap(std::move(source), std::move(target), {});
}

ChainMap ChainMap::identity(const Complex& c) {
    std::map<int, Mat> comps;
    for (const auto& [deg, mod] : c.entries())
        comps.emplace(deg, Mat::identity(c.algebra()->field(), mod.dim()));
    return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::single(const ModuleMap& f, int degree) {
    std::map<int, Mat> comps;
    if (f.source().dim() > 0 && f.target().dim() > 0) comps.emplace(degree, f.matrix());
    return ChainMap(Complex::single(f.source(), degree), Complex::single(f.target(), degree),
                    std::move(comps));
}

Mat ChainMap::component(int i) const {
    auto it = comps_.find(i);
    if (it != comps_.end()) return it->second;
    return Mat(source_.algebra()->field(), target_.dimAt(i), source_.dimAt(i));
}

ChainMap ChainMap::compose(const ChainMap& inner) const {
    if (!(inner.target_ == source_))
        inputFail("shape-mismatch", "chain map composition mismatch");
    std::map<int, Mat> comps;
    int lo = std::min(inner.source_.minDeg(), target_.minDeg());
    int hi = std::max(inner.source_.maxDeg(), target_.maxDeg());
    for (int i = lo; i <= hi; ++i) {
        if (inner.source_.dimAt(i) == 0 || target_.dimAt(i) == 0) continue;
        comps.emplace(i, component(i) * inner.component(i));
    }
    return ChainMap(inner.source_, target_, std::move(comps));
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_))
        inputFail("shape-mismatch", "chain map addition mismatch");
    std::map<int, Mat> comps;
    int lo = std::min(source_.minDeg(), target_.minDeg());
    int hi = std::max(source_.maxDeg(), target_.maxDeg());
    for (int i = lo; i <= hi; ++i) {
        if (source_.dimAt(i) == 0 || target_.dimAt(i) == 0) continue;
        comps.emplace(i, component(i) + o.component(i));
    }
    return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + (-o); }

ChainMap ChainMap::operator-() const {
    std::map<int, Mat> comps;
    for (const auto& [deg, m] : comps_) comps.emplace(deg, -m);
    return ChainMap(source_, target_, std::move(comps));
}

bool ChainMap::isZero() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const auto& kv) { return kv.second.isZero(); });
}

ChainMap shift(const ChainMap& f, int n) {
    std::map<int, Mat> comps;
    for (const auto& [deg, m] : f.components()) comps.emplace(deg - n, m);
    return ChainMap(shift(f.source(), n), shift(f.target(), n), std::move(comps));
}

Mat Homotopy::component(int i, const Complex& src, const Complex& tgt) const {
    auto it = comps.find(i);
    if (it != comps.end()) return it->second;
    return Mat(src.algebra()->field(), tgt.dimAt(i - 1), src.dimAt(i));
}

Triangle::Triangle(Complex c_, Complex d_, Complex e_, ChainMap f_, ChainMap g_, ChainMap h_)
    : c(std::move(c_)), d(std::move(d_)), e(std::move(e_)), f(std::move(f_)),
      g(std::move(g_)), h(std::move(h_)) {
    if (!(f.source() == c) || !(f.target() == d) || !(g.source() == d) || !(g.target() == e) ||
        !(h.source() == e) || !(h.target() == shift(c, 1)))
        inputFail("shape-mismatch", "triangle maps do not line up as C → D → E → C[1]");
}

CohomologyAt cohomology(const Complex& c, int i) {
    Field f = c.algebra()->field();
    Mat k = kernelBasis(c.diffMatrix(i));
    Mat boundaries = solveRequired(k, c.diffMatrix(i - 1) * Mat::identity(f, c.dimAt(i - 1)),
                                   "image is not contained in the kernel");
    QuotientPresentation pres = quotientByColumnSpace(boundaries, k.cols());
    // induced action: restrict to the kernel, then descend to the quotient
    const FDModule ambient = c.entry(i);
    std::vector<Mat> action;
    action.reserve(c.algebra()->dim());
    for (int a = 0; a < c.algebra()->dim(); ++a) {
        Mat onKernel = solveRequired(k, ambient.action(a) * k, "kernel is not invariant");
        action.push_back(pres.project * onKernel * pres.section);
    }
    CohomologyAt out{FDModule(c.algebra(), std::move(action)), k, k * pres.section,
                     pres.project};
    return out;
}

Mat CohomologyAt::classOf(const Mat& cycleColumns) const {
    return projectCycles * solveRequired(cycleBasis, cycleColumns, "column is not a cycle");
}

std::map<int, int> cohomologyDims(const Complex& c) {
    std::map<int, int> dims;
    for (int i = c.minDeg(); i <= c.maxDeg(); ++i) {
        int d = cohomology(c, i).module.dim();
        if (d > 0) dims[i] = d;
    }
    return dims;
}

ModuleMap inducedCohomologyMap(const ChainMap& f, int i) {
    CohomologyAt hs = cohomology(f.source(), i);
    CohomologyAt ht = cohomology(f.target(), i);
    Mat m = ht.classOf(f.component(i) * hs.lift);
    return ModuleMap(hs.module, ht.module, std::move(m));
}

bool isQuasiIso(const ChainMap& f) {
    int lo = std::min(f.source().minDeg(), f.target().minDeg());
    int hi = std::max(f.source().maxDeg(), f.target().maxDeg());
    for (int i = lo; i <= hi; ++i) {
        ModuleMap m = inducedCohomologyMap(f, i);
        if (m.source().dim() != m.target().dim()) return false;
        if (rankOf(m.matrix()) != m.source().dim()) return false;
    }
    return true;
}

ConeData cone(const ChainMap& f) {
    const Complex& c = f.source();
    const Complex& d = f.target();
    const AlgebraPtr& a = c.algebra();
    Field fl = a->field();

    int lo = std::min(c.minDeg() - 1, d.minDeg());
    int hi = std::max(c.maxDeg() - 1, d.maxDeg());

    std::map<int, FDModule> entries;
    for (int i = lo; i <= hi; ++i) {
        DirectSum ds = directSum(a, {c.entry(i + 1), d.entry(i)});
        if (ds.module.dim() > 0) entries.emplace(i, ds.module);
    }
    std::map<int, Mat> diffs;
    for (int i = lo; i <= hi; ++i) {
        int rows = c.dimAt(i + 2) + d.dimAt(i + 1);
        int cols = c.dimAt(i + 1) + d.dimAt(i);
        if (rows == 0 || cols == 0) continue;
        Mat m(fl, rows, cols);
        m.setBlock(0, 0, -c.diffMatrix(i + 1));
        m.setBlock(c.dimAt(i + 2), 0, f.component(i + 1));
        m.setBlock(c.dimAt(i + 2), c.dimAt(i + 1), d.diffMatrix(i));
        diffs.emplace(i, std::move(m));
    }
    Complex cn = Complex::build(a, std::move(entries), std::move(diffs));

    std::map<int, Mat> inc, prj;
    for (int i = lo; i <= hi; ++i) {
        if (cn.dimAt(i) == 0) continue;
        if (d.dimAt(i) > 0) {
            Mat m(fl, cn.dimAt(i), d.dimAt(i));
            m.setBlock(c.dimAt(i + 1), 0, Mat::identity(fl, d.dimAt(i)));
            inc.emplace(i, std::move(m));
        }
        if (c.dimAt(i + 1) > 0) {
            Mat m(fl, c.dimAt(i + 1), cn.dimAt(i));
            m.setBlock(0, 0, Mat::identity(fl, c.dimAt(i + 1)));
            prj.emplace(i, std::move(m));
        }
    }
    ChainMap include(d, cn, std::move(inc));
    ChainMap project(cn, shift(c, 1), std::move(prj));
    Triangle tri(c, d, cn, f, include, project);
    return {std::move(cn), std::move(include), std::move(project), std::move(tri)};
}

std::optional<Homotopy> findHomotopy(const ChainMap& f, const ChainMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        inputFail("shape-mismatch", "findHomotopy needs maps with the same source and target");
    const Complex& c = f.source();
    const Complex& d = f.target();
    const AlgebraPtr& a = c.algebra();
    Field fl = a->field();
    ChainMap diff = f - g;

    MatrixSystem sys(fl);
    std::map<int, int> blockOf; // degree i → unknown id of h^i: C^i → D^{i−1}
    int lo = std::min(c.minDeg(), d.minDeg());
    int hi = std::max(c.maxDeg(), d.maxDeg()) + 1;
    for (int i = lo; i <= hi; ++i) {
        if (c.dimAt(i) == 0 || d.dimAt(i - 1) == 0) continue;
        int id = sys.addUnknown(d.dimAt(i - 1), c.dimAt(i));
        blockOf[i] = id;
        // A-linearity of each component
        for (int t = 0; t < a->dim(); ++t)
            sys.addEquation({{id, Mat::identity(fl, d.dimAt(i - 1)), c.entry(i).action(t)},
                             {id, -d.entry(i - 1).action(t), Mat::identity(fl, c.dimAt(i))}},
                            Mat(fl, d.dimAt(i - 1), c.dimAt(i)));
    }
    for (int i = lo; i <= hi; ++i) {
        if (c.dimAt(i) == 0 || d.dimAt(i) == 0) continue;
        std::vector<MatrixSystem::Term> terms;
        if (auto it = blockOf.find(i + 1); it != blockOf.end())
            terms.push_back({it->second, Mat::identity(fl, d.dimAt(i)), c.diffMatrix(i)});
        if (auto it = blockOf.find(i); it != blockOf.end())
            terms.push_back({it->second, d.diffMatrix(i - 1), Mat::identity(fl, c.dimAt(i))});
        sys.addEquation(terms, diff.component(i));
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    Homotopy h;
    for (const auto& [deg, id] : blockOf)
        if (!(*sol)[id].isZero()) h.comps.emplace(deg, (*sol)[id]);
    return h;
}

bool nullHomotopic(const ChainMap& f) {
    return findHomotopy(f, ChainMap::zero(f.source(), f.target())).has_value();
}

FDModule kModule(Field f, int d) {
    return FDModule(Algebra::ground(f), {Mat::identity(f, d)});
}

HomComplexData homComplex(const Complex& c, const Complex& d) {
    if (!sameAlgebra(c.algebra(), d.algebra()))
        inputFail("mixed-algebras", "homComplex over different algebras");
    Field fl = c.algebra()->field();
    AlgebraPtr ground = Algebra::ground(fl);

    HomComplexData out{Complex(ground), {}, {}};
    if (c.isZero() || d.isZero()) return out;

    std::map<int, FDModule> entries;
    for (int n = d.minDeg() - c.maxDeg(); n <= d.maxDeg() - c.minDeg(); ++n) {
        std::vector<std::pair<int, HomSpace>> blocks;
        std::vector<int> offsets;
        int total = 0;
        for (int i = std::max(c.minDeg(), d.minDeg() - n); i <= std::min(c.maxDeg(), d.maxDeg() - n); ++i) {
            if (c.dimAt(i) == 0 || d.dimAt(i + n) == 0) continue;
            HomSpace hs = homModule(c.entry(i), d.entry(i + n));
            if (hs.module.dim() == 0) continue;
            offsets.push_back(total);
            total += hs.module.dim();
            blocks.emplace_back(i, std::move(hs));
        }
        if (total == 0) continue;
        entries.emplace(n, kModule(fl, total));
        out.blocks.emplace(n, std::move(blocks));
        out.offsets.emplace(n, std::move(offsets));
    }

    auto blockIndex = [&](int n, int i) -> int {
        auto it = out.blocks.find(n);
        if (it == out.blocks.end()) return -1;
        for (size_t t = 0; t < it->second.size(); ++t)
            if (it->second[t].first == i) return static_cast<int>(t);
        return -1;
    };
    auto dimOf = [&](int n) {
        auto it = entries.find(n);
        return it == entries.end() ? 0 : it->second.dim();
    };

    std::map<int, Mat> diffs;
    for (const auto& [n, blocks] : out.blocks) {
        if (dimOf(n + 1) == 0) continue;
        Mat dm(fl, dimOf(n + 1), dimOf(n));
        Scalar precomposeSign = -signScalar(fl, n); // d(F) = d_D∘F − (−1)^n F∘d_C
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            int i = blocks[bi].first;
            const HomSpace& hs = blocks[bi].second;
            int colOff = out.offsets.at(n)[bi];
            for (int t = 0; t < hs.module.dim(); ++t) {
                Mat post = d.diffMatrix(i + n) * hs.basis[t];
                if (!post.isZero()) {
                    int tb = blockIndex(n + 1, i);
                    if (tb < 0) inputFail("internal-error", "hom differential misses its block");
                    const HomSpace& target = out.blocks.at(n + 1)[tb].second;
                    dm.setBlock(out.offsets.at(n + 1)[tb], colOff + t, homCoordinatesOf(target, post));
                }
                Mat pre = (hs.basis[t] * c.diffMatrix(i - 1)).scaled(precomposeSign);
                if (!pre.isZero()) {
                    int tb = blockIndex(n + 1, i - 1);
                    if (tb < 0) inputFail("internal-error", "hom differential misses its block");
                    const HomSpace& target = out.blocks.at(n + 1)[tb].second;
                    Mat coords = homCoordinatesOf(target, pre);
                    Mat existing = dm.block(out.offsets.at(n + 1)[tb], colOff + t, coords.rows(), 1);
                    dm.setBlock(out.offsets.at(n + 1)[tb], colOff + t, existing + coords);
                }
            }
        }
        diffs.emplace(n, std::move(dm));
    }
    out.total = Complex::build(ground, std::move(entries), std::move(diffs));
    return out;
}

namespace {

ChainMap homComplexTransport(const HomComplexData& src, const HomComplexData& tgt,
                             const ChainMap& u, bool push) {
    Field fl = u.source().algebra()->field();
    std::map<int, Mat> comps;
    for (const auto& [n, blocks] : src.blocks) {
        if (tgt.total.dimAt(n) == 0 || src.total.dimAt(n) == 0) continue;
        Mat m(fl, tgt.total.dimAt(n), src.total.dimAt(n));
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            int i = blocks[bi].first;
            const HomSpace& hs = blocks[bi].second;
            int colOff = src.offsets.at(n)[bi];
            for (int t = 0; t < hs.module.dim(); ++t) {
                Mat mapped = push ? u.component(i + n) * hs.basis[t]
                                  : hs.basis[t] * u.component(i);
                if (mapped.isZero()) continue;
                auto it = tgt.blocks.find(n);
                int tb = -1;
                if (it != tgt.blocks.end())
                    for (size_t s = 0; s < it->second.size(); ++s)
                        if (it->second[s].first == i) tb = static_cast<int>(s);
                if (tb < 0) inputFail("internal-error", "hom transport misses its block");
                const HomSpace& target = it->second[tb].second;
                m.setBlock(tgt.offsets.at(n)[tb], colOff + t, homCoordinatesOf(target, mapped));
            }
        }
        comps.emplace(n, std::move(m));
    }
    return ChainMap(src.total, tgt.total, std::move(comps));
}

} // namespace

ChainMap homComplexPush(const HomComplexData& src, const HomComplexData& tgt, const ChainMap& u) {
    return homComplexTransport(src, tgt, u, true);
}

ChainMap homComplexPull(const HomComplexData& src, const HomComplexData& tgt, const ChainMap& u) {
    return homComplexTransport(src, tgt, u, false);
}

TensorComplexData tensorComplex(const Complex& c, const Complex& d) {
    if (!sameAlgebra(c.algebra(), d.algebra()))
        inputFail("mixed-algebras", "tensorComplex over different algebras");
    const AlgebraPtr& a = c.algebra();
    Field fl = a->field();

    TensorComplexData out{Complex(a), {}, {}};
    if (c.isZero() || d.isZero()) return out;

    std::map<int, FDModule> entries;
    for (int n = c.minDeg() + d.minDeg(); n <= c.maxDeg() + d.maxDeg(); ++n) {
        std::vector<std::pair<int, TensorSpace>> blocks;
        std::vector<int> offsets;
        std::vector<FDModule> parts;
        int total = 0;
        for (int i = std::max(c.minDeg(), n - d.maxDeg()); i <= std::min(c.maxDeg(), n - d.minDeg()); ++i) {
            if (c.dimAt(i) == 0 || d.dimAt(n - i) == 0) continue;
            TensorSpace ts = tensorModule(c.entry(i), d.entry(n - i));
            if (ts.module.dim() == 0) continue;
            offsets.push_back(total);
            total += ts.module.dim();
            parts.push_back(ts.module);
            blocks.emplace_back(i, std::move(ts));
        }
        if (total == 0) continue;
        entries.emplace(n, directSum(a, parts).module);
        out.blocks.emplace(n, std::move(blocks));
        out.offsets.emplace(n, std::move(offsets));
    }

    auto blockIndex = [&](int n, int i) -> int {
        auto it = out.blocks.find(n);
        if (it == out.blocks.end()) return -1;
        for (size_t t = 0; t < it->second.size(); ++t)
            if (it->second[t].first == i) return static_cast<int>(t);
        return -1;
    };
    auto dimOf = [&](int n) {
        auto it = entries.find(n);
        return it == entries.end() ? 0 : it->second.dim();
    };

    std::map<int, Mat> diffs;
    for (const auto& [n, blocks] : out.blocks) {
        if (dimOf(n + 1) == 0) continue;
        Mat dm(fl, dimOf(n + 1), dimOf(n));
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            int i = blocks[bi].first;
            int j = n - i;
            const TensorSpace& ts = blocks[bi].second;
            int colOff = out.offsets.at(n)[bi];
            int tb = blockIndex(n + 1, i + 1); // d_C ⊗ id
            if (tb >= 0) {
                const TensorSpace& target = out.blocks.at(n + 1)[tb].second;
                Mat m = tensorInducedMatrix(ts, target, c.diffMatrix(i), Mat::identity(fl, d.dimAt(j)));
                dm.setBlock(out.offsets.at(n + 1)[tb], colOff, m);
            }
            tb = blockIndex(n + 1, i); // (−1)^i id ⊗ d_D
            if (tb >= 0) {
                const TensorSpace& target = out.blocks.at(n + 1)[tb].second;
                Mat m = tensorInducedMatrix(ts, target, Mat::identity(fl, c.dimAt(i)), d.diffMatrix(j))
                            .scaled(signScalar(fl, i));
                dm.setBlock(out.offsets.at(n + 1)[tb], colOff, m);
            }
        }
        diffs.emplace(n, std::move(dm));
    }
    out.total = Complex::build(a, std::move(entries), std::move(diffs));
    return out;
}

Complex dualComplex(const Complex& c) {
    std::map<int, FDModule> entries;
    std::map<int, Mat> diffs;
    for (const auto& [deg, mod] : c.entries()) entries.emplace(-deg, dualModule(mod));
    for (const auto& [deg, m] : c.diffs()) diffs.emplace(-deg - 1, m.transpose());
    return Complex::build(c.algebra(), std::move(entries), std::move(diffs));
}

ChainMap dualChainMap(const ChainMap& f) {
    std::map<int, Mat> comps;
    for (const auto& [deg, m] : f.components()) comps.emplace(-deg, m.transpose());
    return ChainMap(dualComplex(f.target()), dualComplex(f.source()), std::move(comps));
}

Complex restrictComplex(const AlgebraMap& phi, const Complex& c) {
    std::map<int, FDModule> entries;
    std::map<int, Mat> diffs;
    for (const auto& [deg, mod] : c.entries()) entries.emplace(deg, restrictScalars(phi, mod));
    for (const auto& [deg, m] : c.diffs()) diffs.emplace(deg, m);
    return Complex::build(phi.source(), std::move(entries), std::move(diffs));
}

Complex extendComplex(const AlgebraMap& phi, const Complex& c) {
    std::map<int, ExtendedScalars> ext;
    for (const auto& [deg, mod] : c.entries()) ext.emplace(deg, extendScalars(phi, mod));
    std::map<int, FDModule> entries;
    std::map<int, Mat> diffs;
    for (const auto& [deg, e] : ext)
        if (e.module.dim() > 0) entries.emplace(deg, e.module);
    for (const auto& [deg, e] : ext) {
        auto next = ext.find(deg + 1);
        if (next == ext.end()) continue;
        diffs.emplace(deg, extendScalarsInducedMatrix(phi, e, next->second, c.diffMatrix(deg)));
    }
    return Complex::build(phi.target(), std::move(entries), std::move(diffs));
}

} // namespace hml
