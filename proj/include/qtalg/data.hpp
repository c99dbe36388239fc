#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qtalg/element.hpp"

namespace qtalg {

// one entry of the normal ordering table: [O_row, O_col]_{q^c} = s X, row after col
struct TableEntry {
    int row = 0, col = 0, c = 0, sign = 1;
    FreeElement x;
};

struct NamedElement {
    std::string name;
    FreeElement element;
    Word lead;  // first-listed word, kept for the Groebner relators
};

// Everything the algebra needs: table, Groebner relators, J-relators, Casimir.
struct AlgebraData {
    std::array<std::array<int, kNumGens>, kNumGens> c{};
    std::vector<TableEntry> table;
    std::vector<NamedElement> g;
    std::vector<NamedElement> rho;
    NamedElement casimir;
};

// generator images keyed by section name ("d1", "d1_inv", ...)
using ImageTable = std::map<std::string, std::map<int, FreeElement>>;

struct CharvarData {
    std::map<int, std::string> psi;                 // generator -> group word
    std::vector<std::pair<std::string, std::string>> phi;         // word -> expression
    std::vector<std::pair<std::string, std::string>> identities;  // trace word -> expression
    std::map<std::string, std::string> relations;   // r0, r1
    std::vector<std::tuple<std::string, std::string, std::string>> pi1;  // twist, letter, word
};

// directory holding the data files: $QTALG_DATA, else the compiled-in default
std::string data_dir();

// text transcriptions
AlgebraData load_text_data(const std::string& dir);
ImageTable load_images(const std::string& path);
CharvarData load_charvar(const std::string& path);

// the 18 J-relators built from the three families
std::vector<NamedElement> build_rhos();

// JSON bundle
nlohmann::json element_to_json(const FreeElement& e);
FreeElement element_from_json(const nlohmann::json& j);
nlohmann::json laurent_to_json(const QTLaurent& c);
QTLaurent laurent_from_json(const nlohmann::json& j);
nlohmann::json bundle_to_json(const AlgebraData& d);
AlgebraData bundle_from_json(const nlohmann::json& j);
AlgebraData load_bundle(const std::string& path);

}  // namespace qtalg
