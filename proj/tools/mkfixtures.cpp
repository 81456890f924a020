// Regenerates the shipped JSON fixtures in canonical serialized form.
// Usage: hml-mkfixtures [outdir]   (default: fixtures)

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hml/io.hpp"

using namespace hml;
namespace fs = std::filesystem;

namespace {

Json dualAlgebraJson() {
    return Json{{"dim", 2},
                {"field", "Q"},
                {"kind", "algebra"},
                {"labels", Json::array({"1", "x"})},
                {"name", "dual"},
                {"structure",
                 Json::array({Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})}),
                              Json::array({Json::array({"0", "1"}), Json::array({"0", "0"})})})},
                {"unit", Json::array({"1", "0"})}};
}

Json groundAlgebraJson() {
    return Json{{"dim", 1},
                {"field", "Q"},
                {"kind", "algebra"},
                {"labels", Json::array({"1"})},
                {"name", "ground"},
                {"structure", Json::array({Json::array({Json::array({"1"})})})},
                {"unit", Json::array({"1"})}};
}

void writeCanonical(const fs::path& dir, const std::string& file,
                    const std::vector<Json>& deps, const Json& obj) {
    Workspace ws(Field::rationals());
    for (const Json& d : deps) ws.addJson(d, d.value("name", "dep"), "mkfixtures");
    std::string name = ws.addJson(obj, obj.value("name", file), "mkfixtures");
    ws.finalize();
    std::ofstream out(dir / file);
    out << dumpJson(ws.serialize(name));
    std::cout << "wrote " << (dir / file).string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    fs::path dir = argc > 1 ? argv[1] : "fixtures";
    fs::create_directories(dir);
    fs::create_directories(dir / "malformed");

    Json dual = dualAlgebraJson();
    Json ground = groundAlgebraJson();

    writeCanonical(dir, "dual.json", {}, dual);
    writeCanonical(dir, "ground.json", {}, ground);

    Json kMod{{"action", Json::array({Json::array({Json::array({"1"})}),
                                      Json::array({Json::array({"0"})})})},
              {"algebra", "dual"},
              {"dim", 1},
              {"kind", "module"},
              {"name", "k"}};
    writeCanonical(dir, "k.json", {dual}, kMod);

    Json aMod{{"action",
               Json::array({Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})}),
                            Json::array({Json::array({"0", "0"}), Json::array({"1", "0"})})})},
              {"algebra", "dual"},
              {"dim", 2},
              {"kind", "module"},
              {"name", "A"}};
    writeCanonical(dir, "A.json", {dual}, aMod);

    Json kGround{{"action", Json::array({Json::array({Json::array({"1"})})})},
                 {"algebra", "ground"},
                 {"dim", 1},
                 {"kind", "module"},
                 {"name", "k-ground"}};
    writeCanonical(dir, "k-ground.json", {ground}, kGround);

    Json phi{{"kind", "algebramap"},
             {"matrix", Json::array({Json::array({"1", "0"})})},
             {"name", "phi"},
             {"source", "dual"},
             {"target", "ground"}};
    writeCanonical(dir, "phi.json", {dual, ground}, phi);

    Json inc{{"kind", "map"},
             {"matrix", Json::array({Json::array({"0"}), Json::array({"1"})})},
             {"name", "inc"},
             {"source", "k"},
             {"target", "A"}};
    writeCanonical(dir, "inc.json", {dual, kMod, aMod}, inc);

    Json prj{{"kind", "map"},
             {"matrix", Json::array({Json::array({"1", "0"})})},
             {"name", "prj"},
             {"source", "A"},
             {"target", "k"}};
    writeCanonical(dir, "prj.json", {dual, kMod, aMod}, prj);

    Json byx{{"kind", "map"},
             {"matrix", Json::array({Json::array({"0", "0"}), Json::array({"1", "0"})})},
             {"name", "byx"},
             {"source", "A"},
             {"target", "A"}};
    writeCanonical(dir, "byx.json", {dual, aMod}, byx);

    Json xc{{"algebra", "dual"},
            {"differentials",
             Json{{"0", Json::array({Json::array({"0", "0"}), Json::array({"1", "0"})})}}},
            {"entries", Json{{"0", "A"}, {"1", "A"}}},
            {"kind", "complex"},
            {"name", "xc"}};
    writeCanonical(dir, "xcomplex.json", {dual, aMod}, xc);

    // lattices
    Json curves{{"gram", Json::array({Json::array({-2, 1}), Json::array({1, -2})})},
                {"kind", "lattice"},
                {"name", "rational-curves"},
                {"rank", 2}};
    writeCanonical(dir, "rational-curves.json", {}, curves);

    Json u{{"gram", Json::array({Json::array({0, 1}), Json::array({1, 0})})},
           {"kind", "lattice"},
           {"name", "U"},
           {"rank", 2}};
    writeCanonical(dir, "u.json", {}, u);

    Json minus2{{"gram", Json::array({Json::array({-2})})},
                {"kind", "lattice"},
                {"name", "minus2"},
                {"rank", 1}};
    writeCanonical(dir, "minus2.json", {}, minus2);

    Json sig31{{"gram", Json::array({Json::array({2, 0, 0, 0}), Json::array({0, 2, 0, 0}),
                                     Json::array({0, 0, 2, 0}), Json::array({0, 0, 0, -2})})},
               {"kind", "lattice"},
               {"name", "sig31"},
               {"rank", 4}};
    writeCanonical(dir, "sig31.json", {}, sig31);

    Json sigma{{"h2", "sig31"},
               {"im", Json::array({"0", "1", "0", "0"})},
               {"kind", "period"},
               {"name", "sigma31"},
               {"re", Json::array({"1", "0", "0", "0"})}};
    writeCanonical(dir, "sigma31.json", {sig31}, sigma);

    auto identity6 = [] {
        Json rows = Json::array();
        for (int r = 0; r < 6; ++r) {
            Json row = Json::array();
            for (int c = 0; c < 6; ++c) row.push_back(r == c ? 1 : 0);
            rows.push_back(row);
        }
        return rows;
    }();
    Json isomId{{"h2", "sig31"}, {"kind", "isometry"}, {"matrix", identity6},
                {"name", "isom-id"}};
    writeCanonical(dir, "isom-id.json", {sig31}, isomId);

    Json flip = identity6;
    for (int i = 1; i <= 4; ++i) flip[i][i] = -1;
    Json isomFlip{{"h2", "sig31"}, {"kind", "isometry"}, {"matrix", flip},
                  {"name", "isom-flip"}};
    writeCanonical(dir, "isom-flip.json", {sig31}, isomFlip);

    // a non-exact but well-formed triangle: zero maps between nonzero complexes
    Json kc{{"algebra", "ground"},
            {"differentials", Json::object()},
            {"entries", Json{{"0", "k-ground"}}},
            {"kind", "complex"},
            {"name", "kc"}};
    writeCanonical(dir, "kcomplex.json", {ground, kGround}, kc);

    Json groundInline = groundAlgebraJson();
    groundInline.erase("name");
    Json kGroundInline{{"action", Json::array({Json::array({Json::array({"1"})})})},
                       {"algebra", groundInline},
                       {"dim", 1},
                       {"kind", "module"}};
    Json kcInline{{"algebra", groundInline},
                  {"differentials", Json::object()},
                  {"entries", Json{{"0", kGroundInline}}},
                  {"kind", "complex"}};
    Json badTriangle{{"c", kcInline},      {"d", kcInline},
                     {"e", kcInline},      {"f", Json::object()},
                     {"g", Json::object()}, {"h", Json::object()},
                     {"kind", "triangle"},  {"name", "zero-triangle"}};
    writeCanonical(dir, "zero-triangle.json", {}, badTriangle);

    // malformed inputs for the exit-code contract
    {
        std::ofstream bad(dir / "malformed" / "bad-syntax.json");
        bad << "{ \"kind\": \"algebra\", \"dim\": 2, ";
    }
    {
        // x·x = x contradicts the declared structure table's unit row
        Json badMod{{"action", Json::array({Json::array({Json::array({"1"})}),
                                            Json::array({Json::array({"1"})})})},
                    {"algebra", dualAlgebraJson()},
                    {"dim", 1},
                    {"kind", "module"},
                    {"name", "bad-module"}};
        std::ofstream bad(dir / "malformed" / "bad-module.json");
        bad << dumpJson(badMod);
    }
    {
        Json dupA{{"gram", Json::array({Json::array({0, 1}), Json::array({1, 0})})},
                  {"kind", "lattice"},
                  {"name", "twin"},
                  {"rank", 2}};
        Json dupB{{"gram", Json::array({Json::array({-2})})},
                  {"kind", "lattice"},
                  {"name", "twin"},
                  {"rank", 1}};
        std::ofstream a(dir / "malformed" / "dup-a.json");
        a << dumpJson(dupA);
        std::ofstream b(dir / "malformed" / "dup-b.json");
        b << dumpJson(dupB);
    }
    return 0;
}
