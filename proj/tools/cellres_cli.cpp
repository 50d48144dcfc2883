// Command-line front end: constructors, conversions and checks for labeled
// cell complexes, wired together through JSON on stdin/stdout so the usual
// interactive workflow maps onto shell pipelines, e.g.
//
//   cellres taylor -i ideal.json | cellres check
//   cellres space rpn --dim 3 --field Fp:2 | cellres homology

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <cellres/cellres.hpp>

namespace {

using cellres::Json;

std::string readAll(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string readInput(const std::string& path) {
    if (path.empty() || path == "-") return readAll(std::cin);
    std::ifstream file(path);
    if (!file) throw cellres::ParseError("cannot open input file '" + path + "'");
    return readAll(file);
}

Json readJson(const std::string& path) {
    try {
        return Json::parse(readInput(path));
    } catch (const nlohmann::json::exception& e) {
        throw cellres::ParseError(std::string("JSON parse error: ") + e.what());
    }
}

void writeOutput(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw cellres::ParseError("cannot open output file '" + path + "'");
    file << text;
}

void writeJson(const std::string& path, const Json& j) { writeOutput(path, j.dump(2) + "\n"); }

cellres::MonomialIdeal readIdeal(const std::string& path) {
    size_t dropped = 0;
    cellres::MonomialIdeal I = cellres::idealFromJson(readJson(path), &dropped);
    if (dropped > 0)
        std::cerr << "warning: dropped " << dropped
                  << " redundant generator(s) while minimalizing\n";
    return I;
}

cellres::CellComplex readComplex(const std::string& path) {
    return cellres::complexFromJson(readJson(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cellres: cell complexes supporting resolutions of monomial ideals"};
    app.require_subcommand(1);

    std::string in, out;
    app.add_option("-i,--in", in, "input file (default: stdin)")->capture_default_str();
    app.add_option("-o,--out", out, "output file (default: stdout)")->capture_default_str();

    auto* taylorCmd = app.add_subcommand("taylor", "Taylor complex of a monomial ideal");
    auto* scarfCmd = app.add_subcommand("scarf", "Scarf complex of a monomial ideal");

    auto* hullCmd = app.add_subcommand("hull", "hull complex of a monomial ideal");
    std::string hullT;
    bool hullStability = false;
    hullCmd->add_option("--t", hullT, "base t (default (n+1)!+1)");
    hullCmd->add_flag("--check-stability", hullStability,
                      "also build the complex at t+1 and require identical output");

    auto* spaceCmd = app.add_subcommand("space", "sphere/rpn/torus cell complexes");
    std::string spaceKind, spaceField = "Q";
    int spaceDim = 0;
    spaceCmd->add_option("kind", spaceKind, "sphere | rpn | torus")->required();
    spaceCmd->add_option("--dim", spaceDim, "dimension (>= 1)")->required();
    spaceCmd->add_option("--field", spaceField, "Q or Fp:<p> (default Q)");

    auto* frompolyCmd =
        app.add_subcommand("frompoly", "cell complex from a polyhedron or polyhedral complex");
    std::string polyLabels, polyRing;
    frompolyCmd->add_option("--labels", polyLabels, "labels file (ring + vertex labels)");
    frompolyCmd->add_option("--ring", polyRing, "ring file (when no labels are given)");

    auto* relabelCmd = app.add_subcommand("relabel", "replace vertex labels, recompute the rest");
    std::string relabelFile;
    relabelCmd->add_option("--labels", relabelFile, "labels file {\"labels\": {id: monomial}}")
        ->required();

    auto* checkCmd = app.add_subcommand("check", "isResolution / isMinimal report");

    auto* bettiCmd = app.add_subcommand("betti", "Betti table of a minimal cellular resolution");
    bool bettiNoShift = false;
    bettiCmd->add_flag("--no-shift", bettiNoShift, "index by cell dimension (resolve the ideal)");

    auto* homologyCmd = app.add_subcommand("homology", "homology of the cell complex");
    std::string coeffText;
    bool graded = false, noReduced = false;
    homologyCmd->add_option("--coeff", coeffText, "Q | Fp:<p> | Z (default: the ring's field)");
    homologyCmd->add_flag("--graded", graded, "multigraded homology over the lcm lattice");
    homologyCmd->add_flag("--no-reduced", noReduced, "drop the augmentation");

    auto* chainCmd = app.add_subcommand("chain", "chain complex with symbolic differentials");
    int chainShift = 0;
    bool chainNoReduced = false;
    chainCmd->add_option("--shift", chainShift, "re-index homological degrees by -s");
    chainCmd->add_flag("--no-reduced", chainNoReduced, "drop the augmentation");

    auto* posetCmd = app.add_subcommand("poset", "face poset relation matrix");
    auto* validateCmd = app.add_subcommand("validate", "report invariant violations");

    auto* genCmd = app.add_subcommand("gen-random-ideal", "seeded random ideal for testing");
    unsigned long long genSeed = 1;
    unsigned long genVars = 3, genGens = 4, genMaxExp = 4;
    bool genGeneric = false;
    genCmd->add_option("--seed", genSeed, "RNG seed");
    genCmd->add_option("--vars", genVars, "number of variables");
    genCmd->add_option("--gens", genGens, "number of generators to draw");
    genCmd->add_option("--max-exp", genMaxExp, "maximum exponent");
    genCmd->add_flag("--generic", genGeneric, "rejection-sample a generic ideal");

    // let -i/--in and -o/--out appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (taylorCmd->parsed()) {
            writeJson(out, cellres::complexToJson(cellres::taylorComplex(readIdeal(in))));
        } else if (scarfCmd->parsed()) {
            writeJson(out, cellres::complexToJson(cellres::scarfComplex(readIdeal(in))));
        } else if (hullCmd->parsed()) {
            std::optional<cellres::Integer> t;
            if (!hullT.empty()) {
                cellres::Integer z;
                if (z.set_str(hullT, 10) != 0)
                    throw cellres::ParseError("--t: bad integer '" + hullT + "'");
                t = z;
            }
            cellres::MonomialIdeal I = readIdeal(in);
            Json result = cellres::complexToJson(cellres::hullComplex(I, t));
            if (hullStability) {
                size_t n = I.ring()->variables.size();
                cellres::Integer base =
                    t ? *t : cellres::factorial(static_cast<unsigned long>(n) + 1) + 1;
                if (cellres::complexToJson(cellres::hullComplex(I, base + 1)) != result)
                    throw cellres::DomainError("hull: face structure changed at t+1 "
                                               "(t below the stability threshold)");
            }
            writeJson(out, result);
        } else if (spaceCmd->parsed()) {
            auto ring = cellres::makeRing({}, cellres::parseField(spaceField));
            cellres::CellComplex X = [&] {
                if (spaceKind == "sphere") return cellres::sphereComplex(ring, spaceDim);
                if (spaceKind == "rpn") return cellres::rpnComplex(ring, spaceDim);
                if (spaceKind == "torus") return cellres::torusComplex(ring, spaceDim);
                throw cellres::ParseError("space: unknown kind '" + spaceKind + "'");
            }();
            writeJson(out, cellres::complexToJson(X));
        } else if (frompolyCmd->parsed()) {
            Json j = readJson(in);
            std::optional<std::map<cellres::RationalPoint, cellres::Monomial>> labels;
            cellres::RingPtr ring;
            if (!polyLabels.empty()) {
                auto parsed = cellres::polyhedralLabelsFromJson(readJson(polyLabels));
                ring = parsed.ring;
                labels = parsed.byVertex;
            }
            if (!polyRing.empty()) {
                auto explicitRing = cellres::ringFromJson(readJson(polyRing));
                if (ring && !cellres::sameRing(ring, explicitRing))
                    throw cellres::DomainError("frompoly: --ring disagrees with the labels file");
                ring = explicitRing;
            }
            if (!ring)
                throw cellres::DomainError("frompoly: a ring is required (--ring or --labels)");
            cellres::CellComplex X = j.is_array()
                ? cellres::cellComplexFromPolyhedralComplex(
                      ring,
                      [&] {
                          std::vector<cellres::Polyhedron> members;
                          for (const auto& p : j) members.push_back(cellres::polyhedronFromJson(p));
                          return cellres::polyhedralComplex(members);
                      }(),
                      labels)
                : cellres::cellComplexFromPolyhedron(ring, cellres::polyhedronFromJson(j), labels);
            writeJson(out, cellres::complexToJson(X));
        } else if (relabelCmd->parsed()) {
            cellres::CellComplex X = readComplex(in);
            auto map = cellres::relabelMapFromJson(readJson(relabelFile), X.ring());
            writeJson(out, cellres::complexToJson(cellres::relabelCellComplex(X, map)));
        } else if (checkCmd->parsed()) {
            cellres::CellComplex X = readComplex(in);
            writeJson(out,
                      cellres::resolutionCheckToJson(cellres::isResolution(X),
                                                     cellres::isMinimal(X)));
        } else if (bettiCmd->parsed()) {
            writeOutput(out, cellres::bettiTable(readComplex(in), !bettiNoShift).renderText());
        } else if (homologyCmd->parsed()) {
            cellres::CellComplex X = readComplex(in);
            if (graded) {
                writeOutput(out,
                            cellres::gradedHomology(X, std::nullopt, !noReduced).render());
            } else {
                cellres::Coefficients coeff =
                    coeffText.empty()
                        ? cellres::Coefficients::overField(X.ring()->field)
                        : (coeffText == "Z"
                               ? cellres::Coefficients::integers()
                               : cellres::Coefficients::overField(cellres::parseField(coeffText)));
                writeOutput(out, cellres::coefficientHomology(X, coeff, !noReduced).render());
            }
        } else if (chainCmd->parsed()) {
            auto C = cellres::chainComplex(readComplex(in), !chainNoReduced);
            writeJson(out, cellres::chainToJson(cellres::shiftComplex(C, chainShift)));
        } else if (posetCmd->parsed()) {
            writeJson(out, cellres::posetToJson(readComplex(in)));
        } else if (validateCmd->parsed()) {
            auto [ring, raw] = cellres::rawComplexFromJson(readJson(in));
            auto violations = cellres::validateRaw(ring, raw);
            writeJson(out, cellres::violationsToJson(violations));
            return violations.empty() ? 0 : 1;
        } else if (genCmd->parsed()) {
            cellres::RandomSource rnd(genSeed);
            std::vector<std::string> vars;
            for (unsigned long i = 1; i <= genVars; ++i) vars.push_back("x" + std::to_string(i));
            auto ring = cellres::makeRing(vars);
            cellres::MonomialIdeal I =
                genGeneric ? cellres::randomGenericIdeal(rnd, ring, genGens, genMaxExp)
                           : cellres::randomIdeal(rnd, ring, genGens, genMaxExp);
            writeJson(out, cellres::idealToJson(I));
        }
    } catch (const cellres::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cellres::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
