#include "qtalg/data.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qtalg/errors.hpp"
#include "qtalg/expr.hpp"

#ifndef QTALG_DEFAULT_DATA_DIR
#define QTALG_DEFAULT_DATA_DIR "data"
#endif

namespace qtalg {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        out.push_back(trim(line));
    }
    return out;
}

FreeElement parse_data_expr(const std::string& s, const std::string& where) {
    try {
        return parse_free(s);
    } catch (const SyntaxError& e) {
        throw DataError(where + ": " + e.what());
    }
}

int need_gen(const std::string& s, const std::string& where) {
    auto g = gen_from_name(s);
    if (!g) throw DataError(where + ": unknown generator '" + s + "'");
    return *g;
}

FreeElement G(int g) { return FreeElement::gen(g); }
FreeElement Q(int quarters) { return FreeElement(QTLaurent::q(quarters)); }

// q^{1/2} t^{-1/2} + q^{-1/2} t^{1/2}
FreeElement qt_sum() {
    return FreeElement(QTLaurent::monomial(1, 2, -2) + QTLaurent::monomial(1, -2, 2));
}

}  // namespace

std::string data_dir() {
    if (const char* e = std::getenv("QTALG_DATA"); e && *e) return e;
    return QTALG_DEFAULT_DATA_DIR;
}

AlgebraData load_text_data(const std::string& dir) {
    AlgebraData d;
    int n = 0;
    for (const auto& line : read_lines(dir + "/table.txt")) {
        ++n;
        if (line.empty()) continue;
        std::string where = "table.txt:" + std::to_string(n);
        std::istringstream ss(line);
        std::string r, c, entry;
        ss >> r >> c >> entry;
        std::string rest;
        std::getline(ss, rest);
        rest = trim(rest);
        TableEntry t;
        t.row = need_gen(r, where);
        t.col = need_gen(c, where);
        if (t.row <= t.col) throw DataError(where + ": row must come after column");
        if (entry == "+0") {
            t.c = 0;
            t.sign = 1;
        } else if (entry == "-0") {
            t.c = 0;
            t.sign = -1;
        } else {
            try {
                t.c = std::stoi(entry);
            } catch (const std::exception&) {
                throw DataError(where + ": bad entry '" + entry + "'");
            }
            t.sign = t.c < 0 ? -1 : 1;
        }
        if (t.c < -2 || t.c > 2) throw DataError(where + ": c out of range");
        if (rest.empty() != (entry == "0")) throw DataError(where + ": X present iff entry is nonzero");
        if (!rest.empty()) t.x = parse_data_expr(rest, where);
        if (d.c[t.row][t.col] != 0 || d.c[t.col][t.row] != 0) throw DataError(where + ": duplicate entry");
        d.c[t.row][t.col] = t.c;
        d.c[t.col][t.row] = -t.c;
        for (const auto& o : d.table)
            if (o.row == t.row && o.col == t.col) throw DataError(where + ": duplicate entry");
        d.table.push_back(std::move(t));
    }

    n = 0;
    for (const auto& line : read_lines(dir + "/groebner.txt")) {
        ++n;
        if (line.empty()) continue;
        std::string where = "groebner.txt:" + std::to_string(n);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw DataError(where + ": missing '='");
        std::string rhs = line.substr(eq + 1);
        NamedElement g{trim(line.substr(0, eq)), parse_data_expr(rhs, where), {}};
        // the leading monomial is the first summand
        auto ex = parse_expr(rhs);
        const Expr& first = ex->kind == Expr::Sum ? *ex->kids[0] : *ex;
        FreeElement f = to_free(first);
        if (f.terms().size() != 1) throw DataError(where + ": first summand must be a single monomial");
        g.lead = f.terms().begin()->first;
        d.g.push_back(std::move(g));
    }

    std::string cas;
    for (const auto& line : read_lines(dir + "/casimir.txt")) cas += line + " ";
    d.casimir = {"rho0", parse_data_expr(cas, "casimir.txt"), {}};
    d.rho = build_rhos();
    return d;
}

std::vector<NamedElement> build_rhos() {
    std::vector<NamedElement> out(18);
    for (int i = 1; i <= 6; ++i) {
        FreeElement a = Q(-2) * G(single(i + 2)) * G(single(i + 4)) +
                        Q(2) * G(single(i + 3)) * G(triple_gen(i + 2)) -
                        G(pair_gen(i + 2)) * G(pair_gen(i + 3)) - qt_sum() * G(single(i));
        FreeElement b = -(Q(-4) * G(single(i + 3)) * G(pair_gen(i + 5))) -
                        G(single(i + 4)) * G(pair_gen(i + 1)) +
                        Q(-2) * G(pair_gen(i + 3)) * G(triple_gen(i + 1)) -
                        qt_sum() * (G(pair_gen(i)) - Q(-1) * G(single(i)) * G(single(i + 1)));
        FreeElement inner = -(FreeElement(QTLaurent::q(4) - QTLaurent(1) + QTLaurent::q(-4)) *
                              G(triple_gen(i + 2))) +
                            Q(-3) * G(single(i + 1)) * G(pair_gen(i + 5)) +
                            Q(3) * G(single(i + 5)) * G(pair_gen(i)) -
                            G(single(i)) * G(single(i + 1)) * G(single(i + 5));
        FreeElement c = -(Q(2) * G(pair_gen(i + 1)) * G(pair_gen(i + 4))) +
                        G(triple_gen(i)) * G(triple_gen(i + 1)) - Q(-2) * G(single(i)) * G(single(i + 3)) -
                        qt_sum() * inner;
        out[i - 1] = {"rho" + std::to_string(i), a, {}};
        out[5 + i] = {"rho" + std::to_string(6 + i), b, {}};
        out[11 + i] = {"rho" + std::to_string(12 + i), c, {}};
    }
    return out;
}

ImageTable load_images(const std::string& path) {
    ImageTable t;
    std::string section;
    int n = 0;
    for (const auto& line : read_lines(path)) {
        ++n;
        if (line.empty()) continue;
        std::string where = path + ":" + std::to_string(n);
        if (line.front() == '[') {
            if (line.back() != ']') throw DataError(where + ": bad section header");
            section = line.substr(1, line.size() - 2);
            t[section];
            continue;
        }
        if (section.empty()) throw DataError(where + ": entry outside a section");
        auto eq = line.find('=');
        if (eq == std::string::npos) throw DataError(where + ": missing '='");
        int g = need_gen(trim(line.substr(0, eq)), where);
        t[section][g] = parse_data_expr(line.substr(eq + 1), where);
    }
    return t;
}

CharvarData load_charvar(const std::string& path) {
    CharvarData d;
    std::string section;
    int n = 0;
    for (const auto& line : read_lines(path)) {
        ++n;
        if (line.empty()) continue;
        std::string where = path + ":" + std::to_string(n);
        if (line.front() == '[') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw DataError(where + ": missing '='");
        std::string lhs = trim(line.substr(0, eq)), rhs = trim(line.substr(eq + 1));
        if (section == "psi") {
            d.psi[need_gen(lhs, where)] = rhs;
        } else if (section == "phi") {
            d.phi.emplace_back(lhs, rhs);
        } else if (section == "identities") {
            if (lhs.size() < 6 || lhs.compare(0, 4, "tau[") != 0 || lhs.back() != ']')
                throw DataError(where + ": identity must start with tau[...]");
            d.identities.emplace_back(lhs.substr(4, lhs.size() - 5), rhs);
        } else if (section == "relations") {
            d.relations[lhs] = rhs;
        } else if (section == "pi1") {
            std::istringstream ss(lhs);
            std::string tw, letter;
            ss >> tw >> letter;
            if (letter.empty()) throw DataError(where + ": expected '<twist> <letter> = <word>'");
            d.pi1.emplace_back(tw, letter, rhs);
        } else {
            throw DataError(where + ": unknown section '" + section + "'");
        }
    }
    if (d.psi.size() != kNumGens) throw DataError(path + ": psi must list all 15 generators");
    return d;
}

json laurent_to_json(const QTLaurent& c) {
    json out = json::array();
    // descending, matching the text rendering
    const auto& t = c.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        if (Laurent::field(it->key, Laurent::V12) || Laurent::field(it->key, Laurent::V23) ||
            Laurent::field(it->key, Laurent::V13))
            throw DataError("coefficient with X variables cannot be serialized");
        out.push_back({{"q", Laurent::qexp(it->key)},
                       {"t", Laurent::texp(it->key)},
                       {"num", it->c.num_str()},
                       {"den", it->c.den_str()}});
    }
    return out;
}

QTLaurent laurent_from_json(const json& j) {
    QTLaurent r;
    for (const auto& t : j) {
        Rational c = Rational::parse(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
        r += QTLaurent::monomial(c, t.at("q").get<int>(), t.at("t").get<int>());
    }
    return r;
}

json element_to_json(const FreeElement& e) {
    json out = json::array();
    for (const auto& [w, c] : e.terms()) {
        json term;
        if (std::is_sorted(w.begin(), w.end())) {
            Monomial m = sorted_monomial(w);
            std::vector<int> ex(kNumGens);
            for (int i = 0; i < kNumGens; ++i) ex[i] = m[i];
            term["exps"] = ex;
        } else {
            std::vector<std::string> names;
            for (auto g : w) names.push_back(gen_name(g));
            term["word"] = names;
        }
        term["coeff"] = laurent_to_json(c);
        out.push_back(term);
    }
    return out;
}

FreeElement element_from_json(const json& j) {
    FreeElement r;
    for (const auto& term : j) {
        Word w;
        if (term.contains("exps")) {
            const auto& ex = term.at("exps");
            if (ex.size() != kNumGens) throw DataError("exps must have 15 entries");
            Monomial m;
            for (int i = 0; i < kNumGens; ++i) m.set(i, ex[i].get<int>());
            w = monomial_word(m);
        } else {
            for (const auto& n : term.at("word")) {
                auto g = gen_from_name(n.get<std::string>());
                if (!g) throw DataError("unknown generator in bundle");
                w.push_back(static_cast<std::uint8_t>(*g));
            }
        }
        r.add(w, laurent_from_json(term.at("coeff")));
    }
    return r;
}

json bundle_to_json(const AlgebraData& d) {
    json j;
    json cm = json::array();
    for (const auto& row : d.c) cm.push_back(std::vector<int>(row.begin(), row.end()));
    j["c_matrix"] = cm;
    json rhs = json::array();
    for (const auto& t : d.table)
        rhs.push_back({{"row", gen_name(t.row)},
                       {"col", gen_name(t.col)},
                       {"c", t.c},
                       {"sign", t.sign},
                       {"element", element_to_json(t.x)}});
    j["rhs"] = rhs;
    auto named = [](const std::vector<NamedElement>& v) {
        json a = json::array();
        for (const auto& e : v) a.push_back({{"name", e.name}, {"element", element_to_json(e.element)}});
        return a;
    };
    json gs = named(d.g);
    for (std::size_t i = 0; i < d.g.size(); ++i) {
        std::vector<std::string> names;
        for (auto g : d.g[i].lead) names.push_back(gen_name(g));
        gs[i]["lead"] = names;
    }
    j["relators_g"] = gs;
    j["relators_rho"] = named(d.rho);
    j["casimir"] = {{"name", d.casimir.name}, {"element", element_to_json(d.casimir.element)}};
    return j;
}

AlgebraData bundle_from_json(const json& j) {
    AlgebraData d;
    try {
        const auto& cm = j.at("c_matrix");
        if (cm.size() != kNumGens) throw DataError("c_matrix must be 15x15");
        for (int r = 0; r < kNumGens; ++r) {
            if (cm[r].size() != kNumGens) throw DataError("c_matrix must be 15x15");
            for (int c = 0; c < kNumGens; ++c) d.c[r][c] = cm[r][c].get<int>();
        }
        for (const auto& e : j.at("rhs")) {
            TableEntry t;
            auto r = gen_from_name(e.at("row").get<std::string>());
            auto c = gen_from_name(e.at("col").get<std::string>());
            if (!r || !c) throw DataError("bad generator in rhs");
            t.row = *r;
            t.col = *c;
            t.c = e.at("c").get<int>();
            t.sign = e.at("sign").get<int>();
            t.x = element_from_json(e.at("element"));
            d.table.push_back(std::move(t));
        }
        for (const auto& e : j.at("relators_g")) {
            NamedElement g{e.at("name").get<std::string>(), element_from_json(e.at("element")), {}};
            for (const auto& n : e.at("lead")) {
                auto x = gen_from_name(n.get<std::string>());
                if (!x) throw DataError("unknown generator in relator lead");
                g.lead.push_back(static_cast<std::uint8_t>(*x));
            }
            d.g.push_back(std::move(g));
        }
        for (const auto& e : j.at("relators_rho"))
            d.rho.push_back({e.at("name").get<std::string>(), element_from_json(e.at("element")), {}});
        d.casimir = {j.at("casimir").at("name").get<std::string>(),
                     element_from_json(j.at("casimir").at("element")), {}};
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed bundle: ") + e.what());
    }
    return d;
}

AlgebraData load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError(path + ": " + e.what());
    }
    return bundle_from_json(j);
}

}  // namespace qtalg
