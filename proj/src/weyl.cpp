#include "g2ps/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace g2ps {

TorusPoint act(const IntMat& m, const TorusPoint& t) {
    TorusPoint r;
    for (int i = 0; i < 2; ++i) {
        Scalar v = Scalar::one();
        for (int j = 0; j < 2; ++j) v *= t[j].pow(Frac(m.at(i, j)));
        r[i] = v;
    }
    return r;
}

std::array<long long, 2> apply(const IntMat& m, const std::array<long long, 2>& v) {
    return {m.at(0, 0) * v[0] + m.at(0, 1) * v[1], m.at(1, 0) * v[0] + m.at(1, 1) * v[1]};
}

WeylGroup::WeylGroup() {
    const IntMat gens[2] = {gen_a(), gen_b()};
    const std::string letters = "ab";
    IntMat id = IntMat::identity(2);
    word_[id] = "e";
    elements_.push_back(id);
    std::deque<IntMat> queue{id};
    while (!queue.empty()) {
        IntMat cur = queue.front();
        queue.pop_front();
        std::string w = word_.at(cur);
        if (w == "e") w.clear();
        for (int g = 0; g < 2; ++g) {
            IntMat nxt = cur * gens[g];
            if (word_.count(nxt)) continue;
            word_[nxt] = w + letters[g];
            elements_.push_back(nxt);
            queue.push_back(nxt);
            if (elements_.size() > 64) throw std::logic_error("WeylGroup: closure did not stop");
        }
    }
    build_classes();
    build_roots();
}

const std::string& WeylGroup::word(const IntMat& m) const {
    auto it = word_.find(m);
    if (it == word_.end()) throw std::invalid_argument("WeylGroup::word: not a group element");
    return it->second;
}

IntMat WeylGroup::element(const std::string& w) const {
    IntMat m = IntMat::identity(2);
    if (w == "e" || w.empty()) return m;
    for (char ch : w) {
        if (ch == 'a')
            m = m * gen_a();
        else if (ch == 'b')
            m = m * gen_b();
        else
            throw std::invalid_argument("WeylGroup::element: bad letter in word");
    }
    return m;
}

IntMat WeylGroup::inv(const IntMat& m) const {
    for (const IntMat& x : elements_)
        if ((m * x).is_identity()) return x;
    throw std::invalid_argument("WeylGroup::inv: not a group element");
}

int WeylGroup::order(const IntMat& m) const {
    IntMat p = m;
    for (int k = 1; k <= size(); ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    throw std::invalid_argument("WeylGroup::order: not a group element");
}

bool WeylGroup::is_reflection(const IntMat& m) const {
    if (!(m * m).is_identity()) return false;
    return !m.is_identity() && !(-m).is_identity();
}

bool WeylGroup::word_less(const IntMat& x, const IntMat& y) const {
    const std::string &wx = word(x), &wy = word(y);
    size_t lx = wx == "e" ? 0 : wx.size(), ly = wy == "e" ? 0 : wy.size();
    if (lx != ly) return lx < ly;
    return wx < wy;
}

std::vector<IntMat> WeylGroup::sorted(std::vector<IntMat> v) const {
    std::sort(v.begin(), v.end(), [this](const IntMat& x, const IntMat& y) { return word_less(x, y); });
    return v;
}

std::vector<std::vector<IntMat>> WeylGroup::classes_in(const std::vector<IntMat>& sub) const {
    std::vector<std::vector<IntMat>> out;
    std::vector<IntMat> todo = sorted(sub);
    std::vector<IntMat> seen;
    for (const IntMat& x : todo) {
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
        std::vector<IntMat> cls;
        for (const IntMat& g : sub) {
            IntMat y = g * x * inv(g);
            if (std::find(cls.begin(), cls.end(), y) == cls.end()) cls.push_back(y);
        }
        cls = sorted(cls);
        seen.insert(seen.end(), cls.begin(), cls.end());
        out.push_back(cls);
    }
    return out;
}

std::vector<IntMat> WeylGroup::centralizer_in(const std::vector<IntMat>& sub, const IntMat& m) const {
    std::vector<IntMat> out;
    for (const IntMat& g : sub)
        if (g * m == m * g) out.push_back(g);
    return sorted(out);
}

std::vector<IntMat> WeylGroup::centralizer(const IntMat& m) const {
    return centralizer_in(elements_, m);
}

void WeylGroup::build_classes() {
    auto det = [](const IntMat& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); };
    std::vector<std::vector<IntMat>> all = classes_in(elements_);
    std::stable_sort(all.begin(), all.end(),
                     [&](const std::vector<IntMat>& x, const std::vector<IntMat>& y) {
                         int dx = det(x[0]) == 1 ? 0 : 1, dy = det(y[0]) == 1 ? 0 : 1;
                         if (dx != dy) return dx < dy;
                         return word_less(x[0], y[0]);
                     });
    classes_ = std::move(all);
}

namespace {

std::string span_label(long long c1, long long c2) {
    std::string s;
    auto term = [&s](long long c, const char* name) {
        if (c == 0) return;
        if (!s.empty()) s += "+";
        if (c != 1) s += std::to_string(c);
        s += name;
    };
    term(c1, "alpha");
    term(c2, "beta");
    return s;
}

} // namespace

void WeylGroup::build_roots() {
    std::vector<IntMat> refl;
    for (const IntMat& m : elements_)
        if (is_reflection(m)) refl.push_back(m);
    refl = sorted(refl);

    auto derive = [this](const IntMat& m) {
        RootDatum rd;
        rd.word = word(m);
        // Root: primitive kernel vector of m + 1 (the (-1)-eigenspace).
        SmithResult s = smith(m + IntMat::identity(2));
        int zero = -1;
        for (int i = 0; i < 2; ++i)
            if (s.D.at(i, i) == 0) zero = i;
        if (zero < 0) throw std::logic_error("root: reflection has no (-1)-eigenvector");
        std::array<long long, 2> g{s.V.at(0, zero), s.V.at(1, zero)};
        // Pairing vector from e_j - m.e_j = n_j * g, solved exactly.
        std::array<long long, 2> n{};
        for (int j = 0; j < 2; ++j) {
            std::array<long long, 2> d{(j == 0 ? 1 : 0) - m.at(0, j), (j == 1 ? 1 : 0) - m.at(1, j)};
            long long nj = 0;
            if (g[0] != 0)
                nj = d[0] / g[0];
            else
                nj = d[1] / g[1];
            if (d[0] != nj * g[0] || d[1] != nj * g[1])
                throw std::logic_error("root: lattice displacement not a root multiple");
            n[j] = nj;
        }
        // Sign convention: pairing vector lexicographically positive.
        long long lead = n[0] != 0 ? n[0] : n[1];
        if (lead < 0) {
            g = {-g[0], -g[1]};
            n = {-n[0], -n[1]};
        }
        rd.root = g;
        rd.pairing = n;
        return rd;
    };

    for (const IntMat& m : refl) roots_.push_back(derive(m));

    // Labels: coordinates of each root in the basis of the two simple roots
    // (the roots of the generators a and b).
    const std::array<long long, 2> ra = roots_[0].root, rb = roots_[1].root;
    long long det = ra[0] * rb[1] - rb[0] * ra[1];
    if (det == 0) throw std::logic_error("root: simple roots are collinear");
    for (RootDatum& rd : roots_) {
        long long x = rd.root[0], y = rd.root[1];
        long long c1n = x * rb[1] - rb[0] * y, c2n = ra[0] * y - x * ra[1];
        if (c1n % det || c2n % det) throw std::logic_error("root: non-integral simple coordinates");
        rd.label = span_label(c1n / det, c2n / det);
    }
}

const RootDatum& WeylGroup::root_of(const IntMat& reflection) const {
    const std::string& w = word(reflection);
    for (const RootDatum& rd : roots_)
        if (rd.word == w) return rd;
    throw std::invalid_argument("WeylGroup::root_of: not a reflection");
}

} // namespace g2ps
