#include "qtalg/charvar.hpp"

#include <algorithm>
#include <cctype>

#include "qtalg/errors.hpp"
#include "qtalg/mcg.hpp"

namespace qtalg {

std::uint64_t Fp::pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t Fp::inv(std::uint64_t a) const {
    if (a % p == 0) throw DomainError("inverse of zero modulo p");
    return pow(a, p - 2);
}

std::uint64_t Fp::from(long long v) const {
    long long m = v % static_cast<long long>(p);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p) : m);
}

bool Fp::is_square(std::uint64_t a) const {
    a %= p;
    return a == 0 || p == 2 || pow(a, (p - 1) / 2) == 1;
}

std::optional<std::uint64_t> Fp::sqrt(std::uint64_t a) const {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (!is_square(a)) return std::nullopt;
    // p - 1 = s * 2^e
    std::uint64_t s = p - 1;
    int e = 0;
    while (!(s & 1)) {
        s >>= 1;
        ++e;
    }
    std::uint64_t z = 2;
    while (is_square(z)) ++z;
    std::uint64_t x = pow(a, (s + 1) / 2), b = pow(a, s), g = pow(z, s);
    int r = e;
    while (b != 1) {
        int m = 0;
        for (std::uint64_t t = b; t != 1; t = mul(t, t)) ++m;
        std::uint64_t gs = g;
        for (int i = 0; i < r - m - 1; ++i) gs = mul(gs, gs);
        x = mul(x, gs);
        g = mul(gs, gs);
        b = mul(b, g);
        r = m;
    }
    return x;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    Fp f{n};
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = f.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s && comp; ++i) {
            x = f.mul(x, x);
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

SL2 sl2_identity() { return {1, 0, 0, 1}; }

SL2 sl2_mul(const Fp& f, const SL2& x, const SL2& y) {
    return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
}

SL2 sl2_inv(const Fp& f, const SL2& x) { return {x[3], f.neg(x[1]), f.neg(x[2]), x[0]}; }

std::uint64_t sl2_trace(const Fp& f, const SL2& x) { return f.add(x[0], x[3]); }

std::uint64_t sl2_det(const Fp& f, const SL2& x) { return f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2])); }

namespace {

const char* const kLetters[] = {"X1", "Y1", "X2", "Y2"};

SL2 sl2_pow(const Fp& f, const SL2& x, int n) {
    SL2 b = n < 0 ? sl2_inv(f, x) : x, r = sl2_identity();
    for (int i = 0; i < std::abs(n); ++i) r = sl2_mul(f, r, b);
    return r;
}

// letters with exponent +-1, freely and cyclically reduced
std::vector<int> reduced_letters(const GroupWord& w) {
    std::vector<int> s;  // letter * 2 + (inverse ? 1 : 0)
    for (const auto& l : w) {
        int code = l.letter * 2 + (l.power < 0 ? 1 : 0);
        for (int i = 0; i < std::abs(l.power); ++i) {
            if (!s.empty() && s.back() == (code ^ 1)) s.pop_back();
            else s.push_back(code);
        }
    }
    std::size_t a = 0, b = s.size();
    while (b - a >= 2 && s[a] == (s[b - 1] ^ 1)) {
        ++a;
        --b;
    }
    return {s.begin() + a, s.begin() + b};
}

}  // namespace

GroupWord parse_group_word(const std::string& s) {
    GroupWord w;
    std::size_t i = 0;
    auto expect_letter = [&] {
        for (int l = 0; l < 4; ++l) {
            if (s.compare(i, 2, kLetters[l]) == 0) {
                i += 2;
                return l;
            }
        }
        throw SyntaxError(i, "X1, Y1, X2 or Y2", "bad group word '" + s + "'");
    };
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size() || s.substr(i) == "1") return w;
    for (;;) {
        int l = expect_letter();
        int pw = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t st = i;
            if (i < s.size() && s[i] == '-') ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == st || (i == st + 1 && s[st] == '-')) throw SyntaxError(i, "integer", "bad exponent");
            pw = std::stoi(s.substr(st, i - st));
        }
        if (pw) w.push_back({l, pw});
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i == s.size()) break;
        if (s[i] != '.') throw SyntaxError(i, "'.'", "letters are separated by '.'");
        ++i;
    }
    return w;
}

std::string group_word_str(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ".";
        s += kLetters[l.letter];
        if (l.power != 1) s += "^" + std::to_string(l.power);
    }
    return s;
}

std::string trace_key(const GroupWord& w) {
    std::vector<int> s = reduced_letters(w);
    if (s.empty()) return "";
    std::vector<int> inv(s.rbegin(), s.rend());
    for (auto& c : inv) c ^= 1;
    std::string best;
    for (const auto* v : {&s, &inv}) {
        for (std::size_t r = 0; r < v->size(); ++r) {
            std::string k;
            for (std::size_t i = 0; i < v->size(); ++i) k += static_cast<char>('a' + (*v)[(r + i) % v->size()]);
            if (best.empty() || k < best) best = k;
        }
    }
    return best;
}

SL2 SurfaceRep::eval(const GroupWord& w) const {
    Fp f{p};
    SL2 r = sl2_identity();
    for (const auto& l : w) r = sl2_mul(f, r, sl2_pow(f, m[l.letter], l.power));
    return r;
}

bool SurfaceRep::satisfies_relation() const {
    return eval(parse_group_word("X1.Y1.X1^-1.Y1^-1.X2.Y2.X2^-1.Y2^-1")) == sl2_identity();
}

SurfaceRep SurfaceRep::trivial(std::uint64_t p) {
    SurfaceRep r;
    r.p = p;
    r.m.fill(sl2_identity());
    return r;
}

namespace {

std::uint64_t uniform(const Fp& f, std::mt19937_64& rng) {
    return std::uniform_int_distribution<std::uint64_t>(0, f.p - 1)(rng);
}

SL2 random_sl2(const Fp& f, std::mt19937_64& rng) {
    for (;;) {
        std::uint64_t a = uniform(f, rng), b = uniform(f, rng), c = uniform(f, rng);
        if (!a) continue;
        return {a, b, c, f.mul(f.add(1, f.mul(b, c)), f.inv(a))};
    }
}

// basis of {v : M v = 0} for a 4x4 matrix
std::vector<std::array<std::uint64_t, 4>> nullspace(const Fp& f, std::array<std::array<std::uint64_t, 4>, 4> m) {
    int row = 0;
    std::array<int, 4> pivot_col{-1, -1, -1, -1};
    std::array<bool, 4> is_pivot{};
    for (int c = 0; c < 4 && row < 4; ++c) {
        int piv = -1;
        for (int r = row; r < 4; ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        std::uint64_t iv = f.inv(m[row][c]);
        for (auto& x : m[row]) x = f.mul(x, iv);
        for (int r = 0; r < 4; ++r) {
            if (r == row || !m[r][c]) continue;
            std::uint64_t k = m[r][c];
            for (int j = 0; j < 4; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[row][j]));
        }
        pivot_col[row] = c;
        is_pivot[c] = true;
        ++row;
    }
    std::vector<std::array<std::uint64_t, 4>> basis;
    for (int free = 0; free < 4; ++free) {
        if (is_pivot[free]) continue;
        std::array<std::uint64_t, 4> v{};
        v[free] = 1;
        for (int r = 0; r < row; ++r) v[pivot_col[r]] = f.neg(m[r][free]);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

std::optional<SurfaceRep> complete_rep(const Fp& f, const SL2& x1, const SL2& y1, std::mt19937_64& rng, int tries) {
    SL2 c = sl2_mul(f, sl2_mul(f, x1, y1), sl2_mul(f, sl2_inv(f, x1), sl2_inv(f, y1)));
    SL2 cinv = sl2_inv(f, c);
    std::uint64_t T = sl2_trace(f, cinv);
    if (T == 2 || T == f.p - 2) return std::nullopt;
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::uint64_t x = uniform(f, rng), y = uniform(f, rng);
        // z^2 - xy z + (x^2 + y^2 - 2 - T) = 0
        std::uint64_t xy = f.mul(x, y);
        std::uint64_t c0 = f.sub(f.sub(f.add(f.mul(x, x), f.mul(y, y)), 2), T);
        auto sq = f.sqrt(f.sub(f.mul(xy, xy), f.mul(4, c0)));
        if (!sq) continue;
        std::uint64_t z = f.mul(f.add(xy, *sq), f.inv(2));
        // zeta + 1/zeta = z
        auto sz = f.sqrt(f.sub(f.mul(z, z), 4));
        if (!sz) continue;
        std::uint64_t zeta = f.mul(f.add(z, *sz), f.inv(2));
        if (!zeta) continue;
        SL2 A{x, f.neg(1), 1, 0};
        SL2 B{0, zeta, f.neg(f.inv(zeta)), y};
        SL2 K = sl2_mul(f, sl2_mul(f, A, B), sl2_mul(f, sl2_inv(f, A), sl2_inv(f, B)));
        if (sl2_trace(f, K) != T) throw Error("trace identity failed in sampling");
        if (K[1] == 0 && K[2] == 0 && K[0] == K[3]) continue;
        // g K = C^-1 g, unknowns g row-major
        std::array<std::array<std::uint64_t, 4>, 4> M{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) {
                        std::uint64_t v = 0;
                        if (a == i) v = f.add(v, K[2 * b + j]);
                        if (b == j) v = f.sub(v, cinv[2 * i + a]);
                        M[2 * i + j][2 * a + b] = v;
                    }
        auto ker = nullspace(f, M);
        if (ker.empty()) continue;
        for (int k = 0; k < 8; ++k) {
            SL2 g{};
            for (const auto& v : ker) {
                std::uint64_t s = uniform(f, rng);
                for (int i = 0; i < 4; ++i) g[i] = f.add(g[i], f.mul(s, v[i]));
            }
            auto root = f.sqrt(sl2_det(f, g));
            if (!root || *root == 0) continue;
            std::uint64_t ir = f.inv(*root);
            for (auto& e : g) e = f.mul(e, ir);
            SurfaceRep r;
            r.p = f.p;
            r.m = {x1, y1, sl2_mul(f, sl2_mul(f, g, A), sl2_inv(f, g)), sl2_mul(f, sl2_mul(f, g, B), sl2_inv(f, g))};
            if (!r.satisfies_relation()) throw Error("sampled representation violates the surface relation");
            return r;
        }
    }
    return std::nullopt;
}

SurfaceRep sample_rep(std::uint64_t p, std::mt19937_64& rng, int retries) {
    if (p <= 3 || !is_prime(p)) throw DomainError("sampling needs a prime p > 3");
    Fp f{p};
    for (int i = 0; i < retries; ++i) {
        SL2 x1 = random_sl2(f, rng), y1 = random_sl2(f, rng);
        if (auto r = complete_rep(f, x1, y1, rng, 8)) return *r;
    }
    throw RetryExhausted("no surface group representation found in " + std::to_string(retries) + " attempts");
}

GroupWord apply_map(const GroupMap& m, const GroupWord& w) {
    GroupWord r;
    for (const auto& l : w) {
        const GroupWord& img = m[l.letter];
        for (int k = 0; k < std::abs(l.power); ++k) {
            if (l.power > 0) {
                r.insert(r.end(), img.begin(), img.end());
            } else {
                for (auto it = img.rbegin(); it != img.rend(); ++it) r.push_back({it->letter, -it->power});
            }
        }
    }
    return r;
}

CharVariety::CharVariety(const CharvarData& d) {
    for (int g = 0; g < kNumGens; ++g) {
        auto it = d.psi.find(g);
        if (it == d.psi.end()) throw DataError(std::string("no trace word for ") + gen_name(g));
        psi_[g] = parse_group_word(it->second);
    }
    for (const auto& [w, e] : d.phi) phi_.push_back({w, parse_group_word(w), parse_free(e)});
    ParseOptions tau{true};
    for (const auto& [w, e] : d.identities) ids_.push_back({w, parse_group_word(w), parse_expr(e, tau)});
    for (const auto& [n, e] : d.relations) rels_.emplace_back(n, parse_expr(e, tau));
    for (int t = 0; t < 6; ++t)
        for (int l = 0; l < 4; ++l) pi1_[t][l] = {{l, 1}};
    for (const auto& [tw, letter, word] : d.pi1) {
        int t = -1;
        if (tw == "I") t = 0;
        else if (tw.size() == 2 && tw[0] == 'd' && tw[1] >= '1' && tw[1] <= '5') t = tw[1] - '0';
        GroupWord lw = parse_group_word(letter);
        if (t < 0 || lw.size() != 1 || lw[0].power != 1) throw DataError("bad fundamental group action line " + tw);
        pi1_[t][lw[0].letter] = parse_group_word(word);
    }
}

TraceAssignment CharVariety::psi_eval(const SurfaceRep& r) const {
    Fp f{r.p};
    TraceAssignment a;
    for (int g = 0; g < kNumGens; ++g) a[g] = sl2_trace(f, r.eval(psi_[g]));
    return a;
}

std::uint64_t CharVariety::trace(const SurfaceRep& r, const std::string& word) const {
    return sl2_trace(Fp{r.p}, r.eval(parse_group_word(word)));
}

std::uint64_t CharVariety::eval_trace_expr(const Expr& e, const SurfaceRep& r) const {
    ModEnv env;
    env.p = r.p;
    env.gen = [&](int g) { return sl2_trace(Fp{r.p}, r.eval(psi_[g])); };
    env.tau = [&](const std::string& w) { return trace(r, w); };
    return eval_mod(e, env);
}

namespace {

std::uint64_t coeff_mod(const QTLaurent& c, const Fp& f) { return c.eval_mod(f.p, {1, 1, 1, 1, 1}); }

}  // namespace

std::uint64_t CharVariety::eval_element(const NormalElement& e, const TraceAssignment& a, const Fp& f) {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : e.terms()) {
        std::uint64_t v = coeff_mod(c, f);
        for (int g = 0; g < kNumGens; ++g) v = f.mul(v, f.pow(a[g], m[g]));
        acc = f.add(acc, v);
    }
    return acc;
}

std::uint64_t CharVariety::eval_free(const FreeElement& e, const TraceAssignment& a, const Fp& f) {
    std::uint64_t acc = 0;
    for (const auto& [w, c] : e.terms()) {
        std::uint64_t v = coeff_mod(c, f);
        for (auto g : w) v = f.mul(v, a[g]);
        acc = f.add(acc, v);
    }
    return acc;
}

FreeElement CharVariety::phi_of_trace(const std::string& word) const {
    std::string key = trace_key(parse_group_word(word));
    for (const auto& p : phi_)
        if (trace_key(p.gw) == key) return p.image;
    throw DataError("trace word " + word + " is not one of the trace generators");
}

FreeElement CharVariety::phi_iota_psi(int g) const {
    std::string key = trace_key(psi_[g]);
    for (const auto& p : phi_)
        if (trace_key(p.gw) == key) return p.image;
    for (const auto& id : ids_)
        if (trace_key(id.gw) == key)
            return to_free(*id.expr, [this](const std::string& w) { return phi_of_trace(w); });
    throw DataError(std::string("no trace expression for ") + gen_name(g));
}

namespace {

struct Named {
    std::string name;
    FreeElement e;  // commutative q = t = 1 polynomial
};

// every q = t = 1 relation that must vanish on trace assignments
std::vector<Named> vanishing_elements(const Algebra& alg) {
    std::vector<Named> v;
    auto sp = [](const FreeElement& e) { return e.specialize(Laurent::Spec::both_to_1); };
    for (const auto& g : alg.relators()) v.push_back({g.name, sp(FreeElement::from_normal(g.full))});
    for (const auto& r : alg.data().rho) v.push_back({r.name, sp(r.element)});
    v.push_back({alg.data().casimir.name, sp(alg.data().casimir.element)});
    return v;
}

// per-sample checks against one representation; the layout of names is fixed
struct SampleChecker {
    const CharVariety& cv;
    const std::vector<Named>& vanish;
    Mcg* mcg = nullptr;

    std::vector<std::string> names() const {
        std::vector<std::string> n = {"surface relation", "conjugation invariance"};
        for (const auto& v : vanish) n.push_back(v.name + " vanishes");
        for (const auto& [name, e] : cv.relations()) n.push_back("Psi(" + name + ") vanishes");
        for (const auto& id : cv.identities()) n.push_back("identity for tau[" + id.word + "]");
        for (const auto& p : cv.phi()) n.push_back("Phi round trip for tau[" + p.word + "]");
        if (mcg)
            for (int tw = 0; tw <= 5; ++tw)
                for (int g = 0; g < kNumGens; ++g)
                    n.push_back(std::string(tw ? "d" + std::to_string(tw) : "I") + "-equivariance on " + gen_name(g));
        return n;
    }

    std::vector<char> run(const SurfaceRep& rep, std::mt19937_64* rng) const {
        Fp f{rep.p};
        std::vector<char> ok;
        ok.push_back(rep.satisfies_relation());
        TraceAssignment a = cv.psi_eval(rep);
        if (rng) {
            SL2 h = random_sl2(f, *rng), hi = sl2_inv(f, h);
            SurfaceRep c = rep;
            for (auto& m : c.m) m = sl2_mul(f, sl2_mul(f, h, m), hi);
            ok.push_back(cv.psi_eval(c) == a);
        } else {
            ok.push_back(true);
        }
        for (const auto& v : vanish) ok.push_back(CharVariety::eval_free(v.e, a, f) == 0);
        for (const auto& [name, e] : cv.relations()) ok.push_back(cv.eval_trace_expr(*e, rep) == 0);
        for (const auto& id : cv.identities())
            ok.push_back(sl2_trace(f, rep.eval(id.gw)) == cv.eval_trace_expr(*id.expr, rep));
        for (const auto& p : cv.phi())
            ok.push_back(sl2_trace(f, rep.eval(p.gw)) == CharVariety::eval_free(p.image, a, f));
        if (mcg) {
            for (int tw = 0; tw <= 5; ++tw) {
                for (int g = 0; g < kNumGens; ++g) {
                    std::uint64_t lhs = CharVariety::eval_element(mcg->image(McgLetter{tw, false}, g), a, f);
                    std::uint64_t rhs = sl2_trace(f, rep.eval(apply_map(cv.pi1_action(tw), cv.psi_word(g))));
                    ok.push_back(lhs == rhs);
                }
            }
        }
        return ok;
    }
};

}  // namespace

Report verify_on_reps(std::shared_ptr<const Algebra> alg, const CharvarData& cd, const ImageTable& images,
                      const SampleOptions& opt, int threads) {
    CharVariety cv(cd);
    std::vector<Named> vanish = vanishing_elements(*alg);
    // the commutative images are read-only once built
    Engine eng(alg, Mode::QT1);
    Mcg mcg(eng, images);
    SampleChecker chk{cv, vanish, &mcg};
    std::vector<std::string> names = chk.names();
    std::vector<std::vector<char>> res(opt.n);
    parallel_for(opt.n, threads, [&](int i, int) {
        std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(i)};
        std::mt19937_64 rng(seq);
        SurfaceRep rep = sample_rep(opt.p, rng);
        res[i] = chk.run(rep, &rng);
    });
    Report r;
    r.suite = "character variety samples (p = " + std::to_string(opt.p) + ", n = " + std::to_string(opt.n) + ")";
    for (std::size_t k = 0; k < names.size(); ++k) {
        int pass = 0, first = -1;
        for (int i = 0; i < opt.n; ++i) {
            if (res[i][k]) ++pass;
            else if (first < 0) first = i;
        }
        std::string detail = std::to_string(pass) + "/" + std::to_string(opt.n) + " samples";
        if (first >= 0)
            detail += ", first failure at sample " + std::to_string(first) + " (seed " + std::to_string(opt.seed) + ")";
        r.add(names[k], first < 0, detail);
    }
    return r;
}

Report verify_trivial(std::shared_ptr<const Algebra> alg, const CharvarData& cd, std::uint64_t p) {
    CharVariety cv(cd);
    std::vector<Named> vanish = vanishing_elements(*alg);
    SampleChecker chk{cv, vanish, nullptr};
    SurfaceRep rep = SurfaceRep::trivial(p);
    std::vector<std::string> names = chk.names();
    std::vector<char> ok = chk.run(rep, nullptr);
    Report r;
    r.suite = "trivial representation";
    TraceAssignment a = cv.psi_eval(rep);
    r.add("all trace coordinates equal 2", std::all_of(a.begin(), a.end(), [](auto v) { return v == 2; }));
    for (std::size_t k = 0; k < names.size(); ++k) r.add(names[k], ok[k]);
    return r;
}

Report verify_symbolic_roundtrip(std::shared_ptr<const Algebra> alg, const CharvarData& cd) {
    CharVariety cv(cd);
    Engine eng(alg, Mode::QT1);
    Report r;
    r.suite = "symbolic Phi round trip (q = t = 1)";
    for (int g = 0; g < kNumGens; ++g) {
        NormalElement e = eng.canonical(cv.phi_iota_psi(g));
        bool ok = e == NormalElement::gen(g);
        r.add("Phi(iota(Psi(" + std::string(gen_name(g)) + "))) = " + gen_name(g), ok, ok ? "" : eng.str(e));
    }
    return r;
}

}  // namespace qtalg
