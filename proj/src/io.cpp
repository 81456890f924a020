#include "hml/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hml {

namespace {

[[noreturn]] void parseFail(const std::string& what) {
    throw InputError("parse-error", what);
}

std::string fileStem(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

} // namespace

Json scalarToJson(const Scalar& s) {
    if (s.field().isRational()) return Json(s.str());
    return Json(s.residue());
}

Scalar scalarFromJson(Field f, const Json& j) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned())
        return Scalar::of(f, static_cast<long>(j.get<long long>()));
    parseFail("scalar must be a string or an integer, got " + j.dump());
}

Json matToJson(const Mat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalarToJson(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matFromJson(Field f, const Json& j) {
    if (!j.is_array()) parseFail("matrix must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) parseFail("matrix row must be an array");
        std::vector<Scalar> out;
        for (const Json& v : row) out.push_back(scalarFromJson(f, v));
        rows.push_back(std::move(out));
    }
    return Mat::fromRows(f, rows);
}

Json ratToJson(const mpq_class& q) { return Json(q.get_str()); }

mpq_class ratFromJson(const Json& j) {
    try {
        if (j.is_string()) {
            mpq_class q(j.get<std::string>());
            q.canonicalize();
            return q;
        }
        if (j.is_number_integer() || j.is_number_unsigned())
            return mpq_class(static_cast<long>(j.get<long long>()));
    } catch (const std::invalid_argument&) {
    }
    parseFail("rational must be \"p/q\" or an integer, got " + j.dump());
}

namespace {

Json intToJson(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

mpz_class intFromJson(const Json& j) {
    try {
        if (j.is_string()) return mpz_class(j.get<std::string>());
        if (j.is_number_integer() || j.is_number_unsigned()) return mpz_class(static_cast<long>(j.get<long long>()));
    } catch (const std::invalid_argument&) {
    }
    parseFail("integer expected, got " + j.dump());
}

} // namespace

Json intMatToJson(const IntMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(intToJson(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat intMatFromJson(const Json& j) {
    if (!j.is_array()) parseFail("integer matrix must be an array of rows");
    std::vector<std::vector<mpz_class>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) parseFail("matrix row must be an array");
        std::vector<mpz_class> out;
        for (const Json& v : row) out.push_back(intFromJson(v));
        rows.push_back(std::move(out));
    }
    return IntMat::fromRows(rows);
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

// ---- CLI argument encodings ----

namespace {

std::vector<std::string> splitList(const std::string& inner) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : inner) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

mpq_class ratFromText(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        parseFail("cannot parse rational '" + s + "'");
    }
}

} // namespace

MukaiElementQ parseElementQ(const std::string& text) {
    size_t open = text.find('(');
    size_t close = text.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        parseFail("element must look like r,(c1,...),s");
    std::string rPart = text.substr(0, open);
    std::string cPart = text.substr(open + 1, close - open - 1);
    std::string sPart = text.substr(close + 1);
    auto stripComma = [](std::string v) {
        std::string out;
        for (char ch : v)
            if (ch != ',' && !isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
        return out;
    };
    MukaiElementQ e;
    e.r = ratFromText(stripComma(rPart));
    if (!cPart.empty())
        for (const std::string& v : splitList(cPart)) e.c.push_back(ratFromText(v));
    e.s = ratFromText(stripComma(sPart));
    return e;
}

MukaiElement parseElement(const std::string& text) {
    MukaiElementQ q = parseElementQ(text);
    MukaiElement e;
    auto whole = [](const mpq_class& v) {
        if (v.get_den() != 1) parseFail("integral element expected");
        return v.get_num();
    };
    e.r = whole(q.r);
    for (const auto& v : q.c) e.c.push_back(whole(v));
    e.s = whole(q.s);
    return e;
}

std::vector<mpz_class> parseIntVector(const std::string& text) {
    size_t open = text.find('(');
    size_t close = text.find(')');
    std::string inner = (open != std::string::npos && close != std::string::npos && close > open)
                            ? text.substr(open + 1, close - open - 1)
                            : text;
    std::vector<mpz_class> out;
    if (inner.empty()) return out;
    for (const std::string& v : splitList(inner)) {
        mpq_class q = ratFromText(v);
        if (q.get_den() != 1) parseFail("integral vector expected");
        out.push_back(q.get_num());
    }
    return out;
}

Json elementToJson(const MukaiElementQ& e) {
    Json c = Json::array();
    for (const auto& v : e.c) c.push_back(ratToJson(v));
    return Json{{"c", std::move(c)}, {"kind", "element"}, {"r", ratToJson(e.r)},
                {"s", ratToJson(e.s)}};
}

// ---- workspace ----

std::string Workspace::addFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) parseFail("cannot read file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        parseFail(std::string("malformed JSON in '") + path + "': " + e.what());
    }
    return addJson(j, fileStem(path), path);
}

std::string Workspace::addJson(const Json& j, const std::string& fallbackName,
                               const std::string& provenance) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        parseFail("object in '" + provenance + "' needs a \"kind\" field");
    std::string name = fallbackName;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) parseFail("\"name\" must be a string");
        name = j.at("name").get<std::string>();
    }
    Json stored = j;
    stored["__source"] = provenance;
    if (auto it = raw_.find(name); it != raw_.end()) {
        Json a = it->second, b = stored;
        a.erase("__source");
        b.erase("__source");
        if (a == b) return name; // the same document loaded twice is fine
        inputFail("duplicate-name", "object name '" + name + "' appears more than once");
    }
    raw_.emplace(name, std::move(stored));
    return name;
}

void Workspace::finalize() {
    for (const auto& [name, j] : raw_) build(name);
}

const Doc& Workspace::doc(const std::string& name) const {
    auto it = docs_.find(name);
    if (it == docs_.end()) inputFail("unknown-ref", "no object named '" + name + "'");
    return it->second;
}

std::vector<std::string> Workspace::names() const {
    std::vector<std::string> out;
    for (const auto& [name, j] : raw_) out.push_back(name);
    return out;
}

const Doc& Workspace::built(const std::string& name) const {
    auto it = docs_.find(name);
    if (it == docs_.end())
        inputFail("unknown-ref", "reference to '" + name + "' does not resolve");
    return it->second;
}

AlgebraPtr Workspace::resolveAlgebra(const Json& j, Doc& owner, const std::string& slot) {
    if (j.is_string()) {
        std::string ref = j.get<std::string>();
        owner.refs[slot] = ref;
        build(ref);
        const Doc& d = built(ref);
        if (!d.algebra) inputFail("bad-ref", "'" + ref + "' is not an algebra");
        return *d.algebra;
    }
    Doc scratch;
    return *buildAlgebraDoc(j, scratch).algebra;
}

FDModule Workspace::resolveModule(const Json& j, Doc& owner, const std::string& slot) {
    if (j.is_string()) {
        std::string ref = j.get<std::string>();
        owner.refs[slot] = ref;
        build(ref);
        const Doc& d = built(ref);
        if (!d.module) inputFail("bad-ref", "'" + ref + "' is not a module");
        return *d.module;
    }
    Doc scratch;
    return *buildModuleDoc(j, scratch).module;
}

Complex Workspace::resolveComplexRef(const Json& j, Doc& owner, const std::string& slot) {
    if (j.is_string()) {
        std::string ref = j.get<std::string>();
        owner.refs[slot] = ref;
        build(ref);
        const Doc& d = built(ref);
        if (d.complex) return *d.complex;
        if (d.module) return Complex::single(*d.module);
        inputFail("bad-ref", "'" + ref + "' is not a complex");
    }
    Doc scratch;
    return *buildComplexDoc(j, scratch).complex;
}

EvenLattice Workspace::resolveLattice(const Json& j, Doc& owner, const std::string& slot) {
    if (j.is_string()) {
        std::string ref = j.get<std::string>();
        owner.refs[slot] = ref;
        build(ref);
        const Doc& d = built(ref);
        if (!d.lattice) inputFail("bad-ref", "'" + ref + "' is not a lattice");
        return *d.lattice;
    }
    if (j.is_object() && j.contains("h2")) {
        // nested extended-lattice form
        return resolveLattice(j.at("h2"), owner, slot);
    }
    return EvenLattice::fromGram(intMatFromJson(j.at("gram")));
}

} // namespace hml

// out-of-line doc builders; member helpers keep the header slim
namespace hml {

Doc& Workspace::buildAlgebraDoc(const Json& j, Doc& d) {
    Field f = j.contains("field") ? Field::parse(j.at("field").get<std::string>())
                                  : defaultField_;
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const Json& l : j.at("labels")) labels.push_back(l.get<std::string>());
    const Json& st = j.at("structure");
    std::vector<std::vector<std::vector<Scalar>>> structure;
    for (const Json& row : st) {
        std::vector<std::vector<Scalar>> r;
        for (const Json& cell : row) {
            std::vector<Scalar> c;
            for (const Json& v : cell) c.push_back(scalarFromJson(f, v));
            r.push_back(std::move(c));
        }
        structure.push_back(std::move(r));
    }
    std::vector<Scalar> unit;
    for (const Json& v : j.at("unit")) unit.push_back(scalarFromJson(f, v));
    if (static_cast<int>(structure.size()) != dim)
        inputFail("validation-error", "algebra \"dim\" disagrees with the structure table");
    d.kind = "algebra";
    d.algebra = Algebra::make(f, std::move(labels), std::move(structure), std::move(unit));
    return d;
}

Doc& Workspace::buildModuleDoc(const Json& j, Doc& d) {
    AlgebraPtr a = resolveAlgebra(j.at("algebra"), d, "algebra");
    std::vector<Mat> action;
    for (const Json& m : j.at("action")) action.push_back(matFromJson(a->field(), m));
    FDModule mod(a, std::move(action));
    if (j.contains("dim") && j.at("dim").get<int>() != mod.dim())
        inputFail("validation-error", "module \"dim\" disagrees with the action matrices");
    d.kind = "module";
    d.module = std::move(mod);
    return d;
}

Doc& Workspace::buildComplexDoc(const Json& j, Doc& d) {
    AlgebraPtr a = resolveAlgebra(j.at("algebra"), d, "algebra");
    std::map<int, FDModule> entries;
    if (j.contains("entries"))
        for (const auto& [key, val] : j.at("entries").items())
            entries.emplace(std::stoi(key), resolveModule(val, d, "entry." + key));
    std::map<int, Mat> diffs;
    if (j.contains("differentials"))
        for (const auto& [key, val] : j.at("differentials").items())
            diffs.emplace(std::stoi(key), matFromJson(a->field(), val));
    d.kind = "complex";
    d.complex = Complex::build(a, std::move(entries), std::move(diffs));
    return d;
}

void Workspace::build(const std::string& name) {
    if (docs_.count(name)) return;
    if (std::find(building_.begin(), building_.end(), name) != building_.end())
        inputFail("circular-ref", "objects reference each other in a cycle at '" + name + "'");
    auto rawIt = raw_.find(name);
    if (rawIt == raw_.end())
        inputFail("unknown-ref", "reference to '" + name + "' does not resolve");
    building_.push_back(name);
    const Json& j = rawIt->second;
    Doc d;
    d.name = name;
    d.sourceFile = j.value("__source", "");
    if (j.contains("name")) d.refs["__explicitName"] = "yes";
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "algebra") {
            buildAlgebraDoc(j, d);
        } else if (kind == "module") {
            buildModuleDoc(j, d);
        } else if (kind == "map") {
            FDModule src = resolveModule(j.at("source"), d, "source");
            FDModule tgt = resolveModule(j.at("target"), d, "target");
            Mat m = matFromJson(src.algebra()->field(), j.at("matrix"));
            d.kind = "map";
            d.moduleMap = ModuleMap(std::move(src), std::move(tgt), std::move(m));
        } else if (kind == "algebramap") {
            AlgebraPtr src = resolveAlgebra(j.at("source"), d, "source");
            AlgebraPtr tgt = resolveAlgebra(j.at("target"), d, "target");
            Mat m = matFromJson(src->field(), j.at("matrix"));
            d.kind = "algebramap";
            d.algebraMap = AlgebraMap(std::move(src), std::move(tgt), std::move(m));
        } else if (kind == "complex") {
            buildComplexDoc(j, d);
        } else if (kind == "chainmap") {
            Complex src = resolveComplexRef(j.at("source"), d, "source");
            Complex tgt = resolveComplexRef(j.at("target"), d, "target");
            std::map<int, Mat> comps;
            if (j.contains("components"))
                for (const auto& [key, val] : j.at("components").items())
                    comps.emplace(std::stoi(key), matFromJson(src.algebra()->field(), val));
            d.kind = "chainmap";
            d.chainMap = ChainMap(std::move(src), std::move(tgt), std::move(comps));
        } else if (kind == "triangle") {
            Complex c = resolveComplexRef(j.at("c"), d, "c");
            Complex dd = resolveComplexRef(j.at("d"), d, "d");
            Complex e = resolveComplexRef(j.at("e"), d, "e");
            Field f = c.algebra()->field();
            auto comps = [&](const char* key) {
                std::map<int, Mat> out;
                for (const auto& [deg, val] : j.at(key).items())
                    out.emplace(std::stoi(deg), matFromJson(f, val));
                return out;
            };
            ChainMap fm(c, dd, comps("f"));
            ChainMap gm(dd, e, comps("g"));
            ChainMap hm(e, shift(c, 1), comps("h"));
            d.kind = "triangle";
            d.triangle = Triangle(c, dd, e, std::move(fm), std::move(gm), std::move(hm));
        } else if (kind == "lattice") {
            EvenLattice l = EvenLattice::fromGram(intMatFromJson(j.at("gram")));
            if (j.contains("rank") && j.at("rank").get<int>() != l.rank)
                inputFail("validation-error", "lattice \"rank\" disagrees with the Gram matrix");
            d.kind = "lattice";
            d.lattice = std::move(l);
        } else if (kind == "extended") {
            d.kind = "extended";
            d.lattice = resolveLattice(j.at("h2"), d, "h2");
        } else if (kind == "period") {
            EvenLattice h2 = resolveLattice(j.at("h2"), d, "h2");
            std::vector<mpq_class> re, im;
            for (const Json& v : j.at("re")) re.push_back(ratFromJson(v));
            for (const Json& v : j.at("im")) im.push_back(ratFromJson(v));
            d.kind = "period";
            d.period = HodgePeriod::make(h2, std::move(re), std::move(im));
            d.periodLattice = std::move(h2);
        } else if (kind == "isometry") {
            EvenLattice h2 = resolveLattice(j.at("h2"), d, "h2");
            IntMat m = intMatFromJson(j.at("matrix"));
            ExtendedLattice ext(h2);
            if (!isIsometry(ext, m))
                inputFail("validation-error",
                          "isometry matrix does not preserve the Mukai pairing");
            d.kind = "isometry";
            d.isometry = std::move(m);
            d.isometryLattice = std::move(h2);
        } else if (kind == "fmkernel") {
            d.kind = "fmkernel";
            d.fmkernel = matFromJson(Field::rationals(), j.at("matrix"));
        } else {
            parseFail("unknown kind '" + kind + "'");
        }
    } catch (const Json::exception& e) {
        building_.pop_back();
        parseFail("while loading '" + name + "': " + e.what());
    } catch (...) {
        building_.pop_back();
        throw;
    }
    building_.pop_back();
    docs_.emplace(name, std::move(d));
}

AlgebraPtr Workspace::algebra(const std::string& name) const {
    const Doc& d = doc(name);
    if (!d.algebra) inputFail("bad-ref", "'" + name + "' is not an algebra");
    return *d.algebra;
}

FDModule Workspace::module(const std::string& name) const {
    const Doc& d = doc(name);
    if (!d.module) inputFail("bad-ref", "'" + name + "' is not a module");
    return *d.module;
}

Complex Workspace::complexOf(const std::string& name) const {
    const Doc& d = doc(name);
    if (d.complex) return *d.complex;
    if (d.module) return Complex::single(*d.module);
    inputFail("bad-ref", "'" + name + "' is not a complex or module");
}

ModuleMap Workspace::moduleMap(const std::string& name) const {
    const Doc& d = doc(name);
    if (!d.moduleMap) inputFail("bad-ref", "'" + name + "' is not a module map");
    return *d.moduleMap;
}

ChainMap Workspace::chainMapOf(const std::string& name) const {
    const Doc& d = doc(name);
    if (d.chainMap) return *d.chainMap;
    if (d.moduleMap) return ChainMap::single(*d.moduleMap);
    inputFail("bad-ref", "'" + name + "' is not a chain map or module map");
}

AlgebraMap Workspace::algebraMapOf(const std::string& name) const {
    const Doc& d = doc(name);
    if (!d.algebraMap) inputFail("bad-ref", "'" + name + "' is not an algebra map");
    return *d.algebraMap;
}

Triangle Workspace::triangleOf(const std::string& name) const {
    const Doc& d = doc(name);
    if (!d.triangle) inputFail("bad-ref", "'" + name + "' is not a triangle");
    return *d.triangle;
}

EvenLattice Workspace::latticeOf(const std::string& name) const {
    const Doc& d = doc(name);
    if (!d.lattice) inputFail("bad-ref", "'" + name + "' is not a lattice");
    return *d.lattice;
}

HodgePeriod Workspace::periodOf(const std::string& name, EvenLattice* h2Out) const {
    const Doc& d = doc(name);
    if (!d.period) inputFail("bad-ref", "'" + name + "' is not a period");
    if (h2Out) *h2Out = *d.periodLattice;
    return *d.period;
}

IntMat Workspace::isometryOf(const std::string& name, EvenLattice* h2Out) const {
    const Doc& d = doc(name);
    if (!d.isometry) inputFail("bad-ref", "'" + name + "' is not an isometry");
    if (h2Out) *h2Out = *d.isometryLattice;
    return *d.isometry;
}

Mat Workspace::fmkernelOf(const std::string& name) const {
    const Doc& d = doc(name);
    if (!d.fmkernel) inputFail("bad-ref", "'" + name + "' is not a kernel");
    return *d.fmkernel;
}

// ---- serialization ----

Json algebraToJson(const AlgebraPtr& a) {
    Json structure = Json::array();
    for (int i = 0; i < a->dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a->dim(); ++j) {
            Json cell = Json::array();
            for (int k = 0; k < a->dim(); ++k)
                cell.push_back(scalarToJson(a->structureConstant(i, j, k)));
            row.push_back(std::move(cell));
        }
        structure.push_back(std::move(row));
    }
    Json labels = Json::array();
    for (const auto& l : a->labels()) labels.push_back(l);
    Json unit = Json::array();
    for (const auto& u : a->unit()) unit.push_back(scalarToJson(u));
    return Json{{"dim", a->dim()},   {"field", a->field().name()}, {"kind", "algebra"},
                {"labels", labels},  {"structure", structure},     {"unit", unit}};
}

Json moduleToJson(const FDModule& m, const std::optional<std::string>& algebraRef) {
    Json action = Json::array();
    for (int i = 0; i < m.algebra()->dim(); ++i) action.push_back(matToJson(m.action(i)));
    Json a = algebraRef ? Json(*algebraRef) : algebraToJson(m.algebra());
    return Json{{"action", action}, {"algebra", a}, {"dim", m.dim()}, {"kind", "module"}};
}

Json complexToJson(const Complex& c, const Doc* refSource) {
    Json entries = Json::object();
    for (const auto& [deg, mod] : c.entries()) {
        std::string key = std::to_string(deg);
        std::optional<std::string> ref;
        if (refSource) {
            auto it = refSource->refs.find("entry." + key);
            if (it != refSource->refs.end()) ref = it->second;
        }
        entries[key] = ref ? Json(*ref) : moduleToJson(mod, std::nullopt);
    }
    Json diffs = Json::object();
    for (const auto& [deg, m] : c.diffs()) diffs[std::to_string(deg)] = matToJson(m);
    std::optional<std::string> algRef;
    if (refSource) {
        auto it = refSource->refs.find("algebra");
        if (it != refSource->refs.end()) algRef = it->second;
    }
    Json a = algRef ? Json(*algRef) : algebraToJson(c.algebra());
    return Json{{"algebra", a}, {"differentials", diffs}, {"entries", entries},
                {"kind", "complex"}};
}

Json latticeToJson(const EvenLattice& l) {
    return Json{{"gram", intMatToJson(l.gram)}, {"kind", "lattice"}, {"rank", l.rank}};
}

namespace {

Json refOr(const Doc& d, const std::string& slot, const Json& inlineJson) {
    auto it = d.refs.find(slot);
    if (it != d.refs.end()) return Json(it->second);
    return inlineJson;
}

Json componentsToJson(const ChainMap& f) {
    Json out = Json::object();
    for (const auto& [deg, m] : f.components()) out[std::to_string(deg)] = matToJson(m);
    return out;
}

} // namespace

Json Workspace::serialize(const std::string& name) const {
    const Doc& d = doc(name);
    Json j;
    if (d.kind == "algebra") {
        j = algebraToJson(*d.algebra);
    } else if (d.kind == "module") {
        j = moduleToJson(*d.module, std::nullopt);
        j["algebra"] = refOr(d, "algebra", algebraToJson(d.module->algebra()));
    } else if (d.kind == "map") {
        j = Json{{"kind", "map"},
                 {"matrix", matToJson(d.moduleMap->matrix())},
                 {"source", refOr(d, "source", moduleToJson(d.moduleMap->source(), std::nullopt))},
                 {"target", refOr(d, "target", moduleToJson(d.moduleMap->target(), std::nullopt))}};
    } else if (d.kind == "algebramap") {
        j = Json{{"kind", "algebramap"},
                 {"matrix", matToJson(d.algebraMap->matrix())},
                 {"source", refOr(d, "source", algebraToJson(d.algebraMap->source()))},
                 {"target", refOr(d, "target", algebraToJson(d.algebraMap->target()))}};
    } else if (d.kind == "complex") {
        j = complexToJson(*d.complex, &d);
    } else if (d.kind == "chainmap") {
        j = Json{{"components", componentsToJson(*d.chainMap)},
                 {"kind", "chainmap"},
                 {"source", refOr(d, "source", complexToJson(d.chainMap->source(), nullptr))},
                 {"target", refOr(d, "target", complexToJson(d.chainMap->target(), nullptr))}};
    } else if (d.kind == "triangle") {
        j = Json{{"c", refOr(d, "c", complexToJson(d.triangle->c, nullptr))},
                 {"d", refOr(d, "d", complexToJson(d.triangle->d, nullptr))},
                 {"e", refOr(d, "e", complexToJson(d.triangle->e, nullptr))},
                 {"f", componentsToJson(d.triangle->f)},
                 {"g", componentsToJson(d.triangle->g)},
                 {"h", componentsToJson(d.triangle->h)},
                 {"kind", "triangle"}};
    } else if (d.kind == "lattice") {
        j = latticeToJson(*d.lattice);
    } else if (d.kind == "extended") {
        j = Json{{"h2", refOr(d, "h2", latticeToJson(*d.lattice))}, {"kind", "extended"}};
    } else if (d.kind == "period") {
        Json re = Json::array(), im = Json::array();
        for (const auto& v : d.period->re) re.push_back(ratToJson(v));
        for (const auto& v : d.period->im) im.push_back(ratToJson(v));
        j = Json{{"h2", refOr(d, "h2", latticeToJson(*d.periodLattice))},
                 {"im", im},
                 {"kind", "period"},
                 {"re", re}};
    } else if (d.kind == "isometry") {
        j = Json{{"h2", refOr(d, "h2", latticeToJson(*d.isometryLattice))},
                 {"kind", "isometry"},
                 {"matrix", intMatToJson(*d.isometry)}};
    } else if (d.kind == "fmkernel") {
        j = Json{{"kind", "fmkernel"}, {"matrix", matToJson(*d.fmkernel)}};
    } else {
        inputFail("internal-error", "cannot serialize kind '" + d.kind + "'");
    }
    if (d.refs.count("__explicitName")) j["name"] = d.name;
    return j;
}

} // namespace hml
