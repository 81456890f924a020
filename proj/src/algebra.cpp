#include "hml/algebra.hpp"

#include <algorithm>

namespace hml {

namespace {

std::string triple(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::string pair(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

AlgebraPtr Algebra::make(Field f, std::vector<std::string> labels,
                         std::vector<std::vector<std::vector<Scalar>>> structure,
                         std::vector<Scalar> unit) {
    auto alg = std::shared_ptr<Algebra>(new Algebra());
    int n = static_cast<int>(structure.size());
    alg->field_ = f;
    alg->dim_ = n;
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    if (static_cast<int>(labels.size()) != n)
        inputFail("shape-mismatch", "algebra labels/dim mismatch");
    if (static_cast<int>(unit.size()) != n)
        inputFail("shape-mismatch", "algebra unit vector has wrong length");
    for (const auto& row : structure) {
        if (static_cast<int>(row.size()) != n)
            inputFail("shape-mismatch", "structure constant table is not n×n×n");
        for (const auto& cell : row)
            if (static_cast<int>(cell.size()) != n)
                inputFail("shape-mismatch", "structure constant table is not n×n×n");
    }
    alg->labels_ = std::move(labels);
    alg->c_ = std::move(structure);
    alg->unit_ = std::move(unit);

    // left multiplication matrices: column j of L_i is b_i·b_j
    alg->leftMult_.reserve(n);
    for (int i = 0; i < n; ++i) {
        Mat L(f, n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) L.at(k, j) = alg->c_[i][j][k];
        alg->leftMult_.push_back(std::move(L));
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < n; ++k)
                if (alg->c_[i][j][k] != alg->c_[j][i][k])
                    inputFail("not-commutative", "b_i·b_j ≠ b_j·b_i at " + pair(i, j));

    Mat u(f, n, 1);
    for (int i = 0; i < n; ++i) u.at(i, 0) = alg->unit_[i];
    if (!alg->leftMultBy(u).isIdentity())
        inputFail("no-unit", "declared unit vector does not act as identity");

    // (b_i b_j) b_k = b_i (b_j b_k), expanded through the structure constants
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat cij(f, n, 1);
            for (int l = 0; l < n; ++l) cij.at(l, 0) = alg->c_[i][j][l];
            for (int k = 0; k < n; ++k) {
                Mat lhs = alg->leftMultBy(cij).col(k); // ... applied to e_k
                Mat rhs = alg->leftMult_[i] * alg->leftMult_[j].col(k);
                if (lhs != rhs)
                    inputFail("not-associative", "associativity fails at " + triple(i, j, k));
            }
        }
    return alg;
}

AlgebraPtr Algebra::ground(Field f) {
    std::vector<std::vector<std::vector<Scalar>>> c{{{Scalar::one(f)}}};
    return make(f, {"1"}, std::move(c), {Scalar::one(f)});
}

const Scalar& Algebra::structureConstant(int i, int j, int k) const { return c_[i][j][k]; }

Mat Algebra::leftMultBy(const Mat& coords) const {
    Mat out(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (coords.at(i, 0).isZero()) continue;
        out = out + leftMult_[i].scaled(coords.at(i, 0));
    }
    return out;
}

Mat Algebra::multiply(const Mat& x, const Mat& y) const { return leftMultBy(x) * y; }

Mat Algebra::unitColumnVec() const {
    Mat u(field_, dim_, 1);
    for (int i = 0; i < dim_; ++i) u.at(i, 0) = unit_[i];
    return u;
}

bool Algebra::structurallyEqual(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_ && unit_ == o.unit_;
}

bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->structurallyEqual(*b);
}

FDModule::FDModule(AlgebraPtr algebra, std::vector<Mat> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
    int n = algebra_->dim();
    if (static_cast<int>(action_.size()) != n)
        inputFail("bad-module", "module needs one action matrix per algebra basis element");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const Mat& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == algebra_->field()))
            inputFail("bad-module", "module action matrices must be square over the algebra's field");
    if (!actionOf(algebra_->unitColumnVec()).isIdentity())
        inputFail("bad-module", "unit does not act as identity on module");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            Mat lhs = action_[i] * action_[j];
            Mat rhs(algebra_->field(), dim_, dim_);
            for (int k = 0; k < n; ++k) {
                const Scalar& c = algebra_->structureConstant(i, j, k);
                if (!c.isZero()) rhs = rhs + action_[k].scaled(c);
            }
            if (lhs != rhs)
                inputFail("bad-module", "module action violates structure constant at " + pair(i, j));
        }
}

FDModule FDModule::zero(AlgebraPtr algebra) {
    std::vector<Mat> action(algebra->dim(), Mat(algebra->field(), 0, 0));
    return FDModule(std::move(algebra), std::move(action));
}

Mat FDModule::actionOf(const Mat& coords) const {
    Mat out(algebra_->field(), dim_, dim_);
    for (int i = 0; i < algebra_->dim(); ++i) {
        if (coords.at(i, 0).isZero()) continue;
        out = out + action_[i].scaled(coords.at(i, 0));
    }
    return out;
}

bool operator==(const FDModule& a, const FDModule& b) {
    return sameAlgebra(a.algebra_, b.algebra_) && a.dim_ == b.dim_ && a.action_ == b.action_;
}

ModuleMap::ModuleMap(FDModule source, FDModule target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
    if (!sameAlgebra(source_.algebra(), target_.algebra()))
        inputFail("mixed-algebras", "module map between modules over different algebras");
    if (m_.rows() != target_.dim() || m_.cols() != source_.dim())
        inputFail("shape-mismatch", "module map matrix has wrong shape");
    for (int i = 0; i < source_.algebra()->dim(); ++i)
        if (m_ * source_.action(i) != target_.action(i) * m_)
            inputFail("not-equivariant", "map does not commute with b_" + std::to_string(i));
}

ModuleMap ModuleMap::zero(FDModule source, FDModule target) {
    Mat m(source.algebra()->field(), target.dim(), source.dim());
    return ModuleMap(std::move(source), std::move(target), std::move(m));
}

ModuleMap ModuleMap::identity(FDModule m) {
    Mat id = Mat::identity(m.algebra()->field(), m.dim());
    FDModule copy = m;
    return ModuleMap(std::move(copy), std::move(m), std::move(id));
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
    if (inner.target() != source_)
        inputFail("shape-mismatch", "module map composition mismatch");
    return ModuleMap(inner.source(), target_, m_ * inner.m_);
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    return ModuleMap(source_, target_, m_ + o.m_);
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
    return ModuleMap(source_, target_, m_ - o.m_);
}

ModuleMap ModuleMap::operator-() const { return ModuleMap(source_, target_, -m_); }

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
    if (m_.rows() != target_->dim() || m_.cols() != source_->dim())
        inputFail("shape-mismatch", "algebra map matrix has wrong shape");
    if (m_ * source_->unitColumnVec() != target_->unitColumnVec())
        inputFail("no-unit", "algebra map does not preserve the unit");
    for (int i = 0; i < source_->dim(); ++i)
        for (int j = 0; j <= i; ++j) {
            Mat cij(source_->field(), source_->dim(), 1);
            for (int k = 0; k < source_->dim(); ++k) cij.at(k, 0) = source_->structureConstant(i, j, k);
            if (m_ * cij != target_->multiply(m_.col(i), m_.col(j)))
                inputFail("not-multiplicative", "algebra map breaks multiplication at " + pair(i, j));
        }
}

AlgebraMap AlgebraMap::identity(AlgebraPtr a) {
    Mat id = Mat::identity(a->field(), a->dim());
    return AlgebraMap(a, a, std::move(id));
}

FDModule freeModule(const AlgebraPtr& a, int n) {
    if (n < 0) inputFail("shape-mismatch", "free module of negative rank");
    int d = a->dim();
    std::vector<Mat> action;
    action.reserve(d);
    for (int i = 0; i < d; ++i) {
        Mat m(a->field(), n * d, n * d);
        for (int j = 0; j < n; ++j) m.setBlock(j * d, j * d, a->leftMult(i));
        action.push_back(std::move(m));
    }
    return FDModule(a, std::move(action));
}

Mat freeModuleGenerators(const AlgebraPtr& a, int n) {
    int d = a->dim();
    Mat g(a->field(), n * d, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < d; ++i) g.at(j * d + i, j) = a->unit()[i];
    return g;
}

ModuleMap freeCover(const FDModule& m, const Mat& gens) {
    const AlgebraPtr& a = m.algebra();
    int d = a->dim(), n = gens.cols();
    Mat mat(a->field(), m.dim(), n * d);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < d; ++i)
            mat.setBlock(0, j * d + i, m.action(i) * gens.col(j));
    return ModuleMap(freeModule(a, n), m, std::move(mat));
}

std::vector<int> moduleGenerators(const FDModule& m) {
    const AlgebraPtr& a = m.algebra();
    Field f = a->field();
    std::vector<int> gens;
    Mat span(f, m.dim(), 0);
    int curRank = 0;
    for (int j = 0; j < m.dim() && curRank < m.dim(); ++j) {
        Mat ej = unitColumn(f, m.dim(), j);
        if (rankOf(hstack(span, ej)) == curRank) continue;
        gens.push_back(j);
        for (int i = 0; i < a->dim(); ++i) span = hstack(span, m.action(i) * ej);
        span = imageBasis(span);
        curRank = span.cols();
    }
    // prune generators subsumed by the submodule the others generate (an
    // early pick can become redundant once a later one arrives)
    for (size_t g = 0; g < gens.size();) {
        Mat rest(f, m.dim(), 0);
        for (size_t o = 0; o < gens.size(); ++o) {
            if (o == g) continue;
            for (int i = 0; i < a->dim(); ++i)
                rest = hstack(rest, m.action(i) * unitColumn(f, m.dim(), gens[o]));
        }
        rest = imageBasis(rest);
        if (rankOf(hstack(rest, unitColumn(f, m.dim(), gens[g]))) == rest.cols())
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(g));
        else
            ++g;
    }
    return gens;
}

ModuleMap submoduleInclusion(const FDModule& ambient, const Mat& basis) {
    const AlgebraPtr& a = ambient.algebra();
    if (rankOf(basis) != basis.cols())
        inputFail("internal-error", "submodule basis is not independent");
    std::vector<Mat> action;
    action.reserve(a->dim());
    for (int i = 0; i < a->dim(); ++i)
        action.push_back(solveRequired(basis, ambient.action(i) * basis,
                                       "subspace not invariant under the action"));
    FDModule sub(a, std::move(action));
    return ModuleMap(std::move(sub), ambient, basis);
}

QuotientModule quotientModule(const FDModule& ambient, const Mat& basis) {
    const AlgebraPtr& a = ambient.algebra();
    QuotientPresentation pres = quotientByColumnSpace(basis, ambient.dim());
    std::vector<Mat> action;
    action.reserve(a->dim());
    for (int i = 0; i < a->dim(); ++i)
        action.push_back(pres.project * ambient.action(i) * pres.section);
    FDModule quo(a, std::move(action));
    return {ModuleMap(ambient, std::move(quo), pres.project), pres.section};
}

KernelImageCokernel kernelImageCokernel(const ModuleMap& f) {
    Mat k = kernelBasis(f.matrix());
    Mat b = imageBasis(f.matrix());
    return {submoduleInclusion(f.source(), k), submoduleInclusion(f.target(), b),
            quotientModule(f.target(), b).projection};
}

HomSpace homModule(const FDModule& m, const FDModule& n) {
    if (!sameAlgebra(m.algebra(), n.algebra()))
        inputFail("mixed-algebras", "homModule over different algebras");
    const AlgebraPtr& a = m.algebra();
    Field f = a->field();
    int dm = m.dim(), dn = n.dim(), na = a->dim();
    // unknowns: F (dn × dm) flattened row-major; constraints F·A_i = B_i·F
    Mat sys(f, na * dn * dm, dn * dm);
    for (int i = 0; i < na; ++i) {
        const Mat& A = m.action(i);
        const Mat& B = n.action(i);
        int base = i * dn * dm;
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dm; ++c) {
                int row = base + r * dm + c;
                for (int s = 0; s < dm; ++s)
                    sys.at(row, r * dm + s) += A.at(s, c);
                for (int s = 0; s < dn; ++s)
                    sys.at(row, s * dm + c) -= B.at(r, s);
            }
    }
    Mat sol = kernelBasis(sys);
    int h = sol.cols();
    std::vector<Mat> basis;
    basis.reserve(h);
    for (int t = 0; t < h; ++t) {
        Mat F(f, dn, dm);
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dm; ++c) F.at(r, c) = sol.at(r * dm + c, t);
        basis.push_back(std::move(F));
    }
    // action by post-composition with the action on N
    std::vector<Mat> action;
    action.reserve(na);
    for (int i = 0; i < na; ++i) {
        Mat act(f, h, h);
        for (int t = 0; t < h; ++t) {
            Mat g = n.action(i) * basis[t];
            Mat gv(f, dn * dm, 1);
            for (int r = 0; r < dn; ++r)
                for (int c = 0; c < dm; ++c) gv.at(r * dm + c, 0) = g.at(r, c);
            act.setBlock(0, t, solveRequired(sol, gv, "hom action lands outside the hom space"));
        }
        action.push_back(std::move(act));
    }
    return {FDModule(a, std::move(action)), std::move(basis)};
}

Mat homCoordinatesOf(const HomSpace& hom, const Mat& map) {
    Field f = map.field();
    int h = static_cast<int>(hom.basis.size());
    if (h == 0) {
        if (!map.isZero()) inputFail("internal-error", "nonzero map in a zero hom space");
        return Mat(f, 0, 1);
    }
    int dn = hom.basis[0].rows(), dm = hom.basis[0].cols();
    Mat sol(f, dn * dm, h);
    for (int t = 0; t < h; ++t)
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dm; ++c) sol.at(r * dm + c, t) = hom.basis[t].at(r, c);
    Mat gv(f, dn * dm, 1);
    for (int r = 0; r < dn; ++r)
        for (int c = 0; c < dm; ++c) gv.at(r * dm + c, 0) = map.at(r, c);
    return solveRequired(sol, gv, "map is not in the hom space");
}

TensorSpace tensorModule(const FDModule& m, const FDModule& n) {
    if (!sameAlgebra(m.algebra(), n.algebra()))
        inputFail("mixed-algebras", "tensorModule over different algebras");
    const AlgebraPtr& a = m.algebra();
    Field f = a->field();
    int dm = m.dim(), dn = n.dim(), na = a->dim();
    Mat rel(f, dm * dn, dm * na * dn);
    for (int mu = 0; mu < dm; ++mu)
        for (int al = 0; al < na; ++al)
            for (int nu = 0; nu < dn; ++nu) {
                int colIdx = (mu * na + al) * dn + nu;
                Mat lhs = kron(m.action(al).col(mu), unitColumn(f, dn, nu));
                Mat rhs = kron(unitColumn(f, dm, mu), n.action(al).col(nu));
                rel.setBlock(0, colIdx, lhs - rhs);
            }
    QuotientPresentation pres = quotientByColumnSpace(rel, dm * dn);
    std::vector<Mat> action;
    action.reserve(na);
    Mat idN = Mat::identity(f, dn);
    for (int i = 0; i < na; ++i)
        action.push_back(pres.project * kron(m.action(i), idN) * pres.section);
    return {FDModule(a, std::move(action)), pres.project, pres.section};
}

Mat tensorInducedMatrix(const TensorSpace& src, const TensorSpace& tgt,
                        const Mat& f, const Mat& g) {
    return tgt.projection * kron(f, g) * src.section;
}

FDModule dualModule(const FDModule& m) {
    std::vector<Mat> action;
    action.reserve(m.algebra()->dim());
    for (int i = 0; i < m.algebra()->dim(); ++i) action.push_back(m.action(i).transpose());
    return FDModule(m.algebra(), std::move(action));
}

ModuleMap dualMap(const ModuleMap& f) {
    return ModuleMap(dualModule(f.target()), dualModule(f.source()), f.matrix().transpose());
}

FDModule restrictScalars(const AlgebraMap& phi, const FDModule& n) {
    if (!sameAlgebra(phi.target(), n.algebra()))
        inputFail("mixed-algebras", "restrictScalars: module is not over the map's target");
    std::vector<Mat> action;
    action.reserve(phi.source()->dim());
    for (int i = 0; i < phi.source()->dim(); ++i)
        action.push_back(n.actionOf(phi.matrix().col(i)));
    return FDModule(phi.source(), std::move(action));
}

ExtendedScalars extendScalars(const AlgebraMap& phi, const FDModule& m) {
    if (!sameAlgebra(phi.source(), m.algebra()))
        inputFail("mixed-algebras", "extendScalars: module is not over the map's source");
    const AlgebraPtr& b = phi.target();
    Field f = b->field();
    int db = b->dim(), dm = m.dim(), na = phi.source()->dim();
    // relations b·φ(a) ⊗ m − b ⊗ a·m inside B ⊗_k M
    Mat rel(f, db * dm, db * na * dm);
    for (int be = 0; be < db; ++be)
        for (int al = 0; al < na; ++al)
            for (int mu = 0; mu < dm; ++mu) {
                int colIdx = (be * na + al) * dm + mu;
                Mat lhs = kron(b->leftMultBy(phi.matrix().col(al)).col(be), unitColumn(f, dm, mu));
                Mat rhs = kron(unitColumn(f, db, be), m.action(al).col(mu));
                rel.setBlock(0, colIdx, lhs - rhs);
            }
    QuotientPresentation pres = quotientByColumnSpace(rel, db * dm);
    std::vector<Mat> action;
    action.reserve(db);
    Mat idM = Mat::identity(f, dm);
    for (int j = 0; j < db; ++j)
        action.push_back(pres.project * kron(b->leftMult(j), idM) * pres.section);
    return {FDModule(b, std::move(action)), pres.project, pres.section};
}

Mat extendScalarsInducedMatrix(const AlgebraMap& phi, const ExtendedScalars& src,
                               const ExtendedScalars& tgt, const Mat& f) {
    Mat idB = Mat::identity(phi.target()->field(), phi.target()->dim());
    return tgt.projection * kron(idB, f) * src.section;
}

DirectSum directSum(const AlgebraPtr& a, const std::vector<FDModule>& parts) {
    Field f = a->field();
    int total = 0;
    for (const auto& p : parts) {
        if (!sameAlgebra(p.algebra(), a)) inputFail("mixed-algebras", "directSum over different algebras");
        total += p.dim();
    }
    std::vector<Mat> action;
    action.reserve(a->dim());
    for (int i = 0; i < a->dim(); ++i) {
        Mat m(f, total, total);
        int off = 0;
        for (const auto& p : parts) {
            m.setBlock(off, off, p.action(i));
            off += p.dim();
        }
        action.push_back(std::move(m));
    }
    DirectSum out{FDModule(a, std::move(action)), {}, {}};
    int off = 0;
    for (const auto& p : parts) {
        Mat e(f, total, p.dim());
        Mat pr(f, p.dim(), total);
        for (int j = 0; j < p.dim(); ++j) {
            e.at(off + j, j) = Scalar::one(f);
            pr.at(j, off + j) = Scalar::one(f);
        }
        out.embed.push_back(std::move(e));
        out.project.push_back(std::move(pr));
        off += p.dim();
    }
    return out;
}

PushoutAlgebra pushoutAlgebra(const AlgebraMap& phiB, const AlgebraMap& phiC) {
    if (!sameAlgebra(phiB.source(), phiC.source()))
        inputFail("mixed-algebras", "pushout legs must share the source algebra");
    const AlgebraPtr& b = phiB.target();
    const AlgebraPtr& c = phiC.target();
    Field f = b->field();
    int db = b->dim(), dc = c->dim();
    FDModule rb = restrictScalars(phiB, freeModule(b, 1));
    FDModule rc = restrictScalars(phiC, freeModule(c, 1));
    TensorSpace t = tensorModule(rb, rc);
    int q = t.module.dim();

    // product of pure-tensor coordinate vectors, bilinearly extended
    auto multiplyVecs = [&](const Mat& x, const Mat& y) {
        Mat z(f, db * dc, 1);
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < dc; ++j) {
                Scalar xi = x.at(i * dc + j, 0);
                if (xi.isZero()) continue;
                for (int i2 = 0; i2 < db; ++i2)
                    for (int j2 = 0; j2 < dc; ++j2) {
                        Scalar yi = y.at(i2 * dc + j2, 0);
                        if (yi.isZero()) continue;
                        Mat prod = kron(b->leftMult(i).col(i2), c->leftMult(j).col(j2));
                        z = z + prod.scaled(xi * yi);
                    }
            }
        return z;
    };

    std::vector<std::vector<std::vector<Scalar>>> structure(
        q, std::vector<std::vector<Scalar>>(q, std::vector<Scalar>(q, Scalar::zero(f))));
    for (int s = 0; s < q; ++s)
        for (int u = 0; u <= s; ++u) {
            Mat z = t.projection * multiplyVecs(t.section.col(s), t.section.col(u));
            for (int k = 0; k < q; ++k) {
                structure[s][u][k] = z.at(k, 0);
                structure[u][s][k] = z.at(k, 0);
            }
        }
    Mat unit = t.projection * kron(b->unitColumnVec(), c->unitColumnVec());
    std::vector<Scalar> unitVec;
    for (int k = 0; k < q; ++k) unitVec.push_back(unit.at(k, 0));

    std::vector<std::string> labels;
    for (int k = 0; k < q; ++k) {
        // name quotient coordinates by their pure-tensor representative
        int idx = -1;
        for (int r = 0; r < t.section.rows(); ++r)
            if (!t.section.at(r, k).isZero()) { idx = r; break; }
        labels.push_back(b->labels()[idx / dc] + "*" + c->labels()[idx % dc]);
    }

    AlgebraPtr d = Algebra::make(f, std::move(labels), std::move(structure), std::move(unitVec));

    Mat fromB(f, q, db);
    for (int i = 0; i < db; ++i)
        fromB.setBlock(0, i, t.projection * kron(unitColumn(f, db, i), c->unitColumnVec()));
    Mat fromC(f, q, dc);
    for (int j = 0; j < dc; ++j)
        fromC.setBlock(0, j, t.projection * kron(b->unitColumnVec(), unitColumn(f, dc, j)));
    return {d, AlgebraMap(b, d, std::move(fromB)), AlgebraMap(c, d, std::move(fromC))};
}

} // namespace hml
