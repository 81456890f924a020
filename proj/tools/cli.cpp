#include "cli.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace hml::cli {

namespace {

Field fieldFromEnv(const std::string& flag) {
    if (!flag.empty()) return Field::parse(flag);
    const char* env = std::getenv("HML_FIELD");
    if (env && *env) return Field::parse(env);
    return Field::rationals();
}

Json verdictToJson(const Verdict& v) {
    Json failures = Json::array();
    for (const auto& f : v.failures)
        failures.push_back(Json{{"detail", f.detail}, {"spot", f.spot}});
    return Json{{"failures", failures}, {"ok", v.ok}};
}

Json extTableToJson(const ExtTable& t) {
    Json dims = Json::array();
    for (int i = t.minReported; i <= t.maxReported; ++i) dims.push_back(t.dimAt(i));
    return Json{{"dims", dims},
                {"maxDegree", t.maxDegree},
                {"minDegree", t.minReported},
                {"route", t.route == ExtRoute::Projective ? "projective" : "injective"},
                {"truncated", t.truncated}};
}

Json lesToJson(const LESReport& rep) {
    Json seq = Json::array();
    for (const auto& e : rep.sequence)
        seq.push_back(Json{{"degree", e.degree}, {"dim", e.dim}, {"name", e.name}});
    Json j = verdictToJson(rep.verdict);
    j["sequence"] = seq;
    return j;
}

Json dimsByDegree(const Complex& c) {
    Json out = Json::array();
    for (int i = c.minDeg(); i <= c.maxDeg(); ++i)
        out.push_back(Json::array({i, c.dimAt(i)}));
    return out;
}

struct CommandContext {
    Workspace ws;
    explicit CommandContext(Field f) : ws(f) {}

    std::string load(const std::string& path) { return ws.addFile(path); }
};

// builds the standard cone triangle of a chain-map file
Triangle coneTriangleOf(Workspace& ws, const std::string& name) {
    return cone(ws.chainMapOf(name)).triangle;
}

Json chainComponentsToJson(const ChainMap& f) {
    Json out = Json::object();
    for (const auto& [deg, m] : f.components()) out[std::to_string(deg)] = matToJson(m);
    return out;
}

void settleVerdict(CommandResult& res, const Verdict& v) {
    if (!v.ok) res.status = CommandResult::Status::Violation;
}

} // namespace

CommandResult runCommand(const std::vector<std::string>& args) {
    CommandResult res;
    CLI::App app{"hml — exact homological algebra and K3 Mukai-lattice workbench"};
    app.require_subcommand(1);

    std::string fieldFlag;
    bool jsonOut = false;
    std::vector<std::string> extraLoads;
    app.add_option("--field", fieldFlag, "default scalar field: Q or Fp:<p>");
    app.add_flag("--json", jsonOut, "emit machine-readable JSON");
    app.add_option("--load", extraLoads, "additional object files")->expected(-1);

    // file options shared by subcommands
    std::string fAlgebra, fM, fN, fComplex, fF, fG, fC, fD, fFp, fPhi, fPhiF, fPhiU, fE,
        fTriangle, fModule, fH2, fH2Dst, fGfile, fSigma, fSigmaDst, fKernel;
    std::string route = "projective", kind = "free", side = "second";
    std::string fSesF, fSesG, fArg;
    std::string vText, wText, rkText, c1Text, c2Text, ampleText, betaText;
    int maxDegree = 4, depth = -1, bound = 4, degree = INT_MIN, dPattern = 1, sign = 1;
    int tail = -1;
    bool useDiagonal = false;

    CLI::App* ext = app.add_subcommand("ext", "Ext table of two modules or complexes");
    ext->add_option("--algebra", fAlgebra);
    ext->add_option("--m", fM)->required();
    ext->add_option("--n", fN)->required();
    ext->add_option("--max-degree", maxDegree);
    ext->add_option("--route", route)->check(CLI::IsMember({"projective", "injective"}));
    ext->add_option("--depth", depth);

    CLI::App* torCmd = app.add_subcommand("tor", "Tor table of two modules or complexes");
    torCmd->add_option("--algebra", fAlgebra);
    torCmd->add_option("--m", fM)->required();
    torCmd->add_option("--n", fN)->required();
    torCmd->add_option("--max-degree", maxDegree);
    torCmd->add_option("--depth", depth);

    CLI::App* coh = app.add_subcommand("cohomology", "cohomology dimensions of a complex");
    coh->add_option("--algebra", fAlgebra);
    coh->add_option("--complex", fComplex)->required();
    coh->add_option("--degree", degree);

    CLI::App* coneCmd = app.add_subcommand("cone", "mapping cone of a (chain) map");
    coneCmd->add_option("--algebra", fAlgebra);
    coneCmd->add_option("--f", fF)->required();

    CLI::App* hom = app.add_subcommand("homotopy", "find a homotopy witness between two maps");
    hom->add_option("--algebra", fAlgebra);
    hom->add_option("--f", fF)->required();
    hom->add_option("--g", fG)->required();

    CLI::App* resolveCmd = app.add_subcommand("resolve", "free or injective resolution");
    resolveCmd->add_option("--algebra", fAlgebra);
    resolveCmd->add_option("--module", fModule)->required();
    resolveCmd->add_option("--kind", kind)->check(CLI::IsMember({"free", "injective"}));
    resolveCmd->add_option("--depth", depth);

    CLI::App* chi = app.add_subcommand("chi", "Euler characteristic from Ext dims");
    chi->add_option("--algebra", fAlgebra);
    chi->add_option("--m", fM)->required();
    chi->add_option("--n", fN)->required();
    chi->add_option("--bound", bound);
    chi->add_option("--tail", tail);

    CLI::App* sph = app.add_subcommand("spherelike", "two-point Ext pattern check");
    sph->add_option("--algebra", fAlgebra);
    sph->add_option("--m", fM)->required();
    sph->add_option("--d", dPattern);
    sph->add_option("--bound", bound);

    CLI::App* check = app.add_subcommand("check", "triangulated-structure checkers");
    check->require_subcommand(1);
    CLI::App* tr2 = check->add_subcommand("tr2", "rotate the cone triangle of f");
    tr2->add_option("--algebra", fAlgebra);
    tr2->add_option("--f", fF)->required();
    CLI::App* tr3 = check->add_subcommand("tr3", "complete a homotopy-commuting square");
    tr3->add_option("--algebra", fAlgebra);
    tr3->add_option("--c", fC)->required();
    tr3->add_option("--d", fD)->required();
    tr3->add_option("--f", fF)->required();
    tr3->add_option("--fp", fFp)->required();
    CLI::App* oct = check->add_subcommand("octahedron", "cone triangle of a composition");
    oct->add_option("--algebra", fAlgebra);
    oct->add_option("--f", fF)->required();
    oct->add_option("--g", fG)->required();
    CLI::App* wind = check->add_subcommand("windmill", "six-term kernel/cokernel sequence");
    wind->add_option("--algebra", fAlgebra);
    wind->add_option("--f", fF)->required();
    wind->add_option("--g", fG)->required();
    CLI::App* les = check->add_subcommand("les", "long exact cohomology sequence");
    les->add_option("--algebra", fAlgebra);
    les->add_option("--triangle", fTriangle);
    les->add_option("--f", fF);
    les->add_option("--ses-f", fSesF, "SES inclusion: Ext LES against --arg");
    les->add_option("--ses-g", fSesG, "SES projection");
    les->add_option("--arg", fArg, "fixed module argument for the Ext LES");
    les->add_option("--side", side)->check(CLI::IsMember({"first", "second"}));
    les->add_option("--max-degree", maxDegree);
    CLI::App* sesTri = check->add_subcommand("ses-triangle", "SES gives a cone triangle");
    sesTri->add_option("--algebra", fAlgebra);
    sesTri->add_option("--f", fF)->required();
    sesTri->add_option("--g", fG)->required();
    CLI::App* adj = check->add_subcommand("adjunction", "extension ⊣ restriction, derived");
    adj->add_option("--algebra", fAlgebra);
    adj->add_option("--phi", fPhi)->required();
    adj->add_option("--m", fM)->required();
    adj->add_option("--n", fN)->required();
    adj->add_option("--max-degree", maxDegree);
    CLI::App* proj = check->add_subcommand("projection", "projection formula, derived");
    proj->add_option("--algebra", fAlgebra);
    proj->add_option("--phi", fPhi)->required();
    proj->add_option("--e", fE)->required();
    proj->add_option("--f", fF)->required();
    proj->add_option("--max-degree", maxDegree);
    CLI::App* bc = check->add_subcommand("base-change", "flat base change over the pushout");
    bc->add_option("--algebra", fAlgebra);
    bc->add_option("--phi-f", fPhiF)->required();
    bc->add_option("--phi-u", fPhiU)->required();
    bc->add_option("--m", fM)->required();
    bc->add_option("--max-degree", maxDegree);

    CLI::App* k3 = app.add_subcommand("k3", "Mukai-lattice toolkit");
    k3->require_subcommand(1);
    CLI::App* k3pair = k3->add_subcommand("pair", "Mukai pairing of two elements");
    k3pair->add_option("--h2", fH2)->required();
    k3pair->add_option("--v", vText)->required();
    k3pair->add_option("--w", wText)->required();
    CLI::App* k3vec = k3->add_subcommand("vector", "Mukai vector from rk, c1, c2");
    k3vec->add_option("--h2", fH2)->required();
    k3vec->add_option("--rk", rkText)->required();
    k3vec->add_option("--c1", c1Text)->required();
    k3vec->add_option("--c2", c2Text)->required();
    CLI::App* k3chi = k3->add_subcommand("chi", "Euler characteristic −⟨v,w⟩");
    k3chi->add_option("--h2", fH2)->required();
    k3chi->add_option("--v", vText)->required();
    k3chi->add_option("--w", wText)->required();
    CLI::App* k3twist = k3->add_subcommand("twist", "reflection along a (−2)-element");
    k3twist->add_option("--h2", fH2)->required();
    k3twist->add_option("--v", vText)->required();
    CLI::App* k3iso = k3->add_subcommand("isometry", "does the matrix preserve the pairing?");
    k3iso->add_option("--h2", fH2);
    k3iso->add_option("--g", fGfile)->required();
    CLI::App* k3hodge = k3->add_subcommand("hodge", "is the isometry a Hodge isometry?");
    k3hodge->add_option("--h2", fH2);
    k3hodge->add_option("--g", fGfile)->required();
    k3hodge->add_option("--sigma", fSigma)->required();
    k3hodge->add_option("--sigma-dst", fSigmaDst);
    CLI::App* k3ns = k3->add_subcommand("ns", "Néron–Severi sublattice of a period");
    k3ns->add_option("--h2", fH2);
    k3ns->add_option("--sigma", fSigma)->required();
    CLI::App* k3orient = k3->add_subcommand("orient", "orientation of the positive 4-plane");
    k3orient->add_option("--h2", fH2);
    k3orient->add_option("--g", fGfile)->required();
    k3orient->add_option("--ample", ampleText)->required();
    k3orient->add_option("--sigma", fSigma)->required();
    CLI::App* k3fm = k3->add_subcommand("fm", "cohomological Fourier–Mukai transform");
    k3fm->add_option("--h2", fH2)->required();
    k3fm->add_option("--h2-dst", fH2Dst);
    k3fm->add_option("--kernel", fKernel);
    k3fm->add_flag("--diagonal", useDiagonal);
    k3fm->add_option("--beta", betaText)->required();
    CLI::App* k3sign = k3->add_subcommand("sign", "±identity on the degree-2 block");
    k3sign->add_option("--h2", fH2)->required();
    k3sign->add_option("--sign", sign);

    // let --json/--field/--load appear after the subcommand too
    std::function<void(CLI::App*)> enableFallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enableFallthrough(sub);
        }
    };
    enableFallthrough(&app);

    std::vector<std::string> argvCopy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("hml");
        for (const auto& a : argvCopy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        res.payload = Json{{"help", app.help("", CLI::AppFormatMode::All)}};
        return res;
    } catch (const CLI::ParseError& e) {
        res.status = CommandResult::Status::ParseError;
        res.diagnostics.push_back(e.what());
        return res;
    }

    try {
        CommandContext ctx(fieldFromEnv(fieldFlag));
        Workspace& ws = ctx.ws;
        auto loadOpt = [&](const std::string& path) -> std::string {
            return path.empty() ? std::string() : ctx.load(path);
        };
        std::string nAlgebra = loadOpt(fAlgebra);
        for (const auto& extra : extraLoads) ctx.load(extra);
        std::string nM = loadOpt(fM), nN = loadOpt(fN), nComplex = loadOpt(fComplex);
        std::string nF = loadOpt(fF), nG = loadOpt(fG), nC = loadOpt(fC), nD = loadOpt(fD);
        std::string nFp = loadOpt(fFp), nPhi = loadOpt(fPhi), nPhiF = loadOpt(fPhiF);
        std::string nPhiU = loadOpt(fPhiU), nE = loadOpt(fE), nTriangle = loadOpt(fTriangle);
        std::string nModule = loadOpt(fModule), nH2 = loadOpt(fH2), nH2Dst = loadOpt(fH2Dst);
        std::string nSesF = loadOpt(fSesF), nSesG = loadOpt(fSesG), nArg = loadOpt(fArg);
        std::string nGfile = loadOpt(fGfile), nSigma = loadOpt(fSigma);
        std::string nSigmaDst = loadOpt(fSigmaDst), nKernel = loadOpt(fKernel);
        ws.finalize();

        auto latticeArg = [&]() -> EvenLattice {
            if (!nH2.empty()) return ws.latticeOf(nH2);
            if (!nSigma.empty()) {
                EvenLattice h2{};
                ws.periodOf(nSigma, &h2);
                return h2;
            }
            if (!nGfile.empty()) {
                EvenLattice h2{};
                ws.isometryOf(nGfile, &h2);
                return h2;
            }
            inputFail("parse-error", "no lattice given (--h2)");
        };

        if (*ext || *torCmd) {
            Complex cm = ws.complexOf(nM);
            Complex cn = ws.complexOf(nN);
            std::optional<int> depthOv;
            if (depth >= 0) depthOv = depth;
            ExtTable t = *ext ? hml::ext(cm, cn, maxDegree,
                                         route == "projective" ? ExtRoute::Projective
                                                               : ExtRoute::Injective,
                                         depthOv)
                              : hml::tor(cm, cn, maxDegree, depthOv);
            res.payload = extTableToJson(t);
        } else if (*coh) {
            Complex c = ws.complexOf(nComplex);
            Json dims = Json::array();
            if (degree != INT_MIN) {
                dims.push_back(Json::array({degree, cohomology(c, degree).module.dim()}));
            } else {
                for (int i = c.minDeg(); i <= c.maxDeg(); ++i)
                    dims.push_back(Json::array({i, cohomology(c, i).module.dim()}));
            }
            res.payload = Json{{"dims", dims}};
        } else if (*coneCmd) {
            ConeData cd = cone(ws.chainMapOf(nF));
            res.payload = Json{{"cone", complexToJson(cd.cone, nullptr)},
                               {"dims", dimsByDegree(cd.cone)}};
        } else if (*hom) {
            auto h = findHomotopy(ws.chainMapOf(nF), ws.chainMapOf(nG));
            Json comps = Json::object();
            if (h)
                for (const auto& [deg, m] : h->comps) comps[std::to_string(deg)] = matToJson(m);
            res.payload = Json{{"components", comps}, {"found", h.has_value()}};
        } else if (*resolveCmd) {
            int d = depth >= 0 ? depth : 6;
            Resolution r = kind == "free" ? freeResolution(ws.module(nModule), d)
                                          : injectiveResolution(ws.module(nModule), d);
            res.payload = Json{{"complex", complexToJson(r.complex, nullptr)},
                               {"depth", r.depth},
                               {"dims", dimsByDegree(r.complex)},
                               {"kind", kind},
                               {"truncated", r.truncated}};
        } else if (*chi) {
            std::optional<int> tailOv;
            if (tail >= 0) tailOv = tail;
            long long value = eulerChi(ws.module(nM), ws.module(nN), bound, tailOv);
            res.payload = Json{{"bound", bound}, {"chi", value}};
        } else if (*sph) {
            bool ok = spherelikeCheck(ws.module(nM), dPattern, bound);
            res.payload = Json{{"bound", bound}, {"d", dPattern}, {"spherelike", ok}};
        } else if (*tr2) {
            Verdict v = tr2Rotate(cone(ws.chainMapOf(nF)).triangle);
            res.payload = verdictToJson(v);
            settleVerdict(res, v);
        } else if (*tr3) {
            ChainMap e = tr3Complete(ws.chainMapOf(nC), ws.chainMapOf(nD), ws.chainMapOf(nF),
                                     ws.chainMapOf(nFp));
            res.payload = Json{{"e", chainComponentsToJson(e)}, {"ok", true}};
        } else if (*oct) {
            OctahedronResult o = octahedron(ws.chainMapOf(nF), ws.chainMapOf(nG));
            res.payload = verdictToJson(o.verdict);
            settleVerdict(res, o.verdict);
        } else if (*wind) {
            WindmillReport w = windmillCheck(ws.moduleMap(nF), ws.moduleMap(nG));
            Json j = verdictToJson(w.verdict);
            j["dims"] = w.dims;
            res.payload = j;
            settleVerdict(res, w.verdict);
        } else if (*les) {
            LESReport rep;
            if (!nSesF.empty()) {
                // Ext long exact sequence of a module SES against --arg
                rep = derivedFunctorLES(ws.moduleMap(nSesF), ws.moduleMap(nSesG),
                                        ws.module(nArg),
                                        side == "first" ? HomSide::First : HomSide::Second,
                                        maxDegree);
            } else {
                Triangle t = !nTriangle.empty() ? ws.triangleOf(nTriangle)
                                                : coneTriangleOf(ws, nF);
                rep = cohomologyLES(t);
            }
            res.payload = lesToJson(rep);
            settleVerdict(res, rep.verdict);
        } else if (*sesTri) {
            SesToTriangle st = sesToTriangleCheck(ws.chainMapOf(nF), ws.chainMapOf(nG));
            res.payload = verdictToJson(st.verdict);
            settleVerdict(res, st.verdict);
        } else if (*adj) {
            Verdict v = adjunctionCheck(ws.algebraMapOf(nPhi), ws.module(nM), ws.module(nN),
                                        maxDegree);
            res.payload = verdictToJson(v);
            settleVerdict(res, v);
        } else if (*proj) {
            Verdict v = projectionFormulaCheck(ws.algebraMapOf(nPhi), ws.complexOf(nE),
                                               ws.complexOf(nF), maxDegree);
            res.payload = verdictToJson(v);
            settleVerdict(res, v);
        } else if (*bc) {
            Verdict v = flatBaseChangeCheck(ws.algebraMapOf(nPhiF), ws.algebraMapOf(nPhiU),
                                            ws.module(nM), maxDegree);
            res.payload = verdictToJson(v);
            settleVerdict(res, v);
        } else if (*k3pair || *k3chi) {
            ExtendedLattice l(latticeArg());
            MukaiElement v = parseElement(vText);
            MukaiElement w = parseElement(wText);
            mpz_class value = *k3pair ? mukaiPairing(l, v, w) : eulerChiLattice(l, v, w);
            res.payload = Json{{"value", value.fits_slong_p() ? Json(value.get_si())
                                                              : Json(value.get_str())}};
        } else if (*k3vec) {
            ExtendedLattice l(latticeArg());
            mpq_class rk = ratFromJson(Json(rkText));
            mpq_class c2 = ratFromJson(Json(c2Text));
            if (rk.get_den() != 1 || c2.get_den() != 1)
                inputFail("parse-error", "rk and c2 must be integers");
            MukaiElement v = mukaiVector(l, rk.get_num(), parseIntVector(c1Text), c2.get_num());
            res.payload = elementToJson(MukaiElementQ::of(v));
        } else if (*k3twist) {
            ExtendedLattice l(latticeArg());
            LatticeIsometry t = reflectionTwist(l, parseElement(vText));
            res.payload = Json{{"kind", "isometry"}, {"matrix", intMatToJson(t.matrix)}};
        } else if (*k3iso) {
            EvenLattice h2{};
            IntMat g = ws.isometryOf(nGfile, &h2);
            ExtendedLattice l(nH2.empty() ? h2 : ws.latticeOf(nH2));
            res.payload = Json{{"isometry", isIsometry(l, g)}};
        } else if (*k3hodge) {
            EvenLattice h2{};
            IntMat g = ws.isometryOf(nGfile, &h2);
            EvenLattice sigmaLat{};
            HodgePeriod src = ws.periodOf(nSigma, &sigmaLat);
            HodgePeriod dst = nSigmaDst.empty() ? src : ws.periodOf(nSigmaDst);
            ExtendedLattice l(nH2.empty() ? sigmaLat : ws.latticeOf(nH2));
            HodgeWitness w = isHodgeIsometry(l, g, src, dst);
            res.payload = Json{{"a", ratToJson(w.a)}, {"b", ratToJson(w.b)}, {"hodge", w.ok}};
        } else if (*k3ns) {
            EvenLattice h2{};
            HodgePeriod sigma = ws.periodOf(nSigma, &h2);
            ExtendedLattice l(nH2.empty() ? h2 : ws.latticeOf(nH2));
            Sublattice ns = neronSeveri(l, sigma);
            res.payload = Json{{"basis", intMatToJson(ns.basis)},
                               {"gram", intMatToJson(ns.gram)},
                               {"rank", ns.basis.cols()}};
        } else if (*k3orient) {
            EvenLattice h2{};
            IntMat g = ws.isometryOf(nGfile, &h2);
            EvenLattice sigmaLat{};
            HodgePeriod sigma = ws.periodOf(nSigma, &sigmaLat);
            ExtendedLattice l(nH2.empty() ? sigmaLat : ws.latticeOf(nH2));
            Orientation o = orientationCheck(l, g, parseIntVector(ampleText), sigma);
            res.payload =
                Json{{"orientation", o == Orientation::Preserves ? "preserves" : "reverses"}};
        } else if (*k3fm) {
            ExtendedLattice lx(ws.latticeOf(nH2));
            ExtendedLattice ly(nH2Dst.empty() ? ws.latticeOf(nH2) : ws.latticeOf(nH2Dst));
            Mat kernel = useDiagonal ? diagonalKernel(lx) : ws.fmkernelOf(nKernel);
            MukaiElementQ out = cohomFM(lx, ly, kernel, parseElementQ(betaText));
            res.payload = elementToJson(out);
        } else if (*k3sign) {
            ExtendedLattice l(latticeArg());
            LatticeIsometry m = extendByH2Sign(l, sign);
            res.payload = Json{{"kind", "isometry"}, {"matrix", intMatToJson(m.matrix)}};
        }
    } catch (const NonConvergentError& e) {
        res.status = CommandResult::Status::NonConvergent;
        res.diagnostics.push_back(e.what());
    } catch (const CheckError& e) {
        res.status = CommandResult::Status::Violation;
        res.diagnostics.push_back(std::string(e.code()) + ": " + e.what());
    } catch (const InputError& e) {
        res.status = CommandResult::Status::ParseError;
        res.diagnostics.push_back(std::string(e.code()) + ": " + e.what());
    } catch (const std::exception& e) {
        res.status = CommandResult::Status::ParseError;
        res.diagnostics.push_back(e.what());
    }
    return res;
}

std::string renderText(const std::string&, const Json& payload) {
    std::ostringstream os;
    if (payload.is_object() && payload.contains("help"))
        return payload.at("help").get<std::string>();
    if (payload.is_object() && payload.contains("dims") && payload.at("dims").is_array() &&
        !payload.at("dims").empty() && payload.at("dims").front().is_array()) {
        os << "degree  dim\n";
        for (const Json& pair : payload.at("dims"))
            os << std::setw(6) << pair.at(0).get<int>() << "  " << pair.at(1).get<int>() << "\n";
        for (const auto& [key, value] : payload.items())
            if (key != "dims") os << key << ": " << value.dump() << "\n";
        return os.str();
    }
    if (payload.is_object() && payload.contains("dims") && payload.at("dims").is_array() &&
        payload.contains("minDegree")) {
        int d = payload.at("minDegree").get<int>();
        os << "degree  dim\n";
        for (const Json& v : payload.at("dims"))
            os << std::setw(6) << d++ << "  " << v.get<int>() << "\n";
        for (const auto& [key, value] : payload.items())
            if (key != "dims" && key != "minDegree") os << key << ": " << value.dump() << "\n";
        return os.str();
    }
    if (payload.is_object() && payload.contains("sequence")) {
        os << (payload.at("ok").get<bool>() ? "exact\n" : "NOT EXACT\n");
        for (const Json& e : payload.at("sequence"))
            os << "  " << e.at("name").get<std::string>() << "  dim " << e.at("dim").get<int>()
               << "\n";
        for (const Json& f : payload.at("failures"))
            os << "  failure at " << f.at("spot").get<std::string>() << ": "
               << f.at("detail").get<std::string>() << "\n";
        return os.str();
    }
    if (payload.is_object() && payload.contains("ok")) {
        os << (payload.at("ok").get<bool>() ? "ok\n" : "VIOLATION\n");
        for (const Json& f : payload.value("failures", Json::array()))
            os << "  " << f.at("spot").get<std::string>() << ": "
               << f.at("detail").get<std::string>() << "\n";
        for (const auto& [key, value] : payload.items())
            if (key != "ok" && key != "failures") os << key << ": " << value.dump() << "\n";
        return os.str();
    }
    if (payload.is_object()) {
        for (const auto& [key, value] : payload.items())
            os << key << ": " << value.dump() << "\n";
        return os.str();
    }
    os << payload.dump(2) << "\n";
    return os.str();
}

int runMain(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    std::string command = args.empty() ? "" : args[0];
    CommandResult res = runCommand(args);
    for (const auto& d : res.diagnostics) std::cerr << d << "\n";
    bool jsonOut = std::find(args.begin(), args.end(), "--json") != args.end();
    if (jsonOut) {
        Json out{{"payload", res.payload},
                 {"status", res.status == CommandResult::Status::Ok            ? "ok"
                            : res.status == CommandResult::Status::Violation   ? "violation"
                            : res.status == CommandResult::Status::ParseError ? "parse-error"
                                                                              : "non-convergent"}};
        std::cout << dumpJson(out);
    } else if (res.status == CommandResult::Status::Ok ||
               res.status == CommandResult::Status::Violation) {
        std::cout << renderText(command, res.payload);
    }
    return res.exitCode();
}

} // namespace hml::cli
