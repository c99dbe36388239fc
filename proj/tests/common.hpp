#pragma once

#include <memory>

#include "qtalg/data.hpp"
#include "qtalg/groebner.hpp"

namespace qtalg::test {

inline std::shared_ptr<const Algebra> algebra() {
    static auto a = Algebra::load(data_dir());
    return a;
}

inline const ImageTable& images() {
    static ImageTable t = load_images(data_dir() + "/mcg.txt");
    return t;
}

inline const CharvarData& charvar() {
    static CharvarData d = load_charvar(data_dir() + "/charvar.txt");
    return d;
}

}  // namespace qtalg::test
