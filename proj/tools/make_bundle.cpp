// Regenerates data/bundle.json from the text transcriptions.
#include <fstream>
#include <iostream>

#include "qtalg/data.hpp"
#include "qtalg/errors.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : qtalg::data_dir();
    std::string out = argc > 2 ? argv[2] : dir + "/bundle.json";
    try {
        auto d = qtalg::load_text_data(dir);
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return 1;
        }
        // one array element per line keeps diffs readable
        auto j = qtalg::bundle_to_json(d);
        f << "{\n";
        bool first = true;
        for (auto& [k, v] : j.items()) {
            f << (first ? "" : ",\n") << " \"" << k << "\": ";
            first = false;
            if (!v.is_array()) {
                f << v.dump();
                continue;
            }
            f << "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) f << "  " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
            f << " ]";
        }
        f << "\n}\n";
        std::cout << "wrote " << out << ": " << d.table.size() << " table entries, " << d.g.size()
                  << " relators, " << d.rho.size() << " J-relators\n";
    } catch (const qtalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
