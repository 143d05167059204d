#include "z2z4/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "z2z4/code.hpp"

namespace z2z4 {

Permutation::Permutation(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    Permutation p(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i];
        if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[v - 1])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[v - 1] = true;
        p.img_[i] = v - 1;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

BinaryVector Permutation::apply(const BinaryVector& v) const {
    if (v.size() != img_.size()) throw std::invalid_argument("permutation degree mismatch");
    BinaryVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(img_[i])] = v[i];
    return out;
}

MixedVector Permutation::apply_mixed(const MixedVector& v) const {
    if (v.alpha + v.beta != img_.size())
        throw std::invalid_argument("permutation degree mismatch (mixed)");
    MixedVector out(v.alpha, v.beta);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        std::size_t j = static_cast<std::size_t>(img_[i]);
        if ((i < v.alpha) != (j < v.alpha))
            throw std::invalid_argument("permutation crosses the binary/quaternary boundary");
        if (i < v.alpha)
            out.bits[j] = v.bits[i];
        else
            out.quats[j - v.alpha] = v.quats[i - v.alpha];
    }
    return out;
}

Permutation Permutation::inverse() const {
    Permutation p(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> images(p.degree());
    for (std::size_t i = 0; i < p.degree(); ++i)
        images[i] = p.map(q.map(static_cast<int>(i) + 1));
    return Permutation::from_images(images);
}

Permutation parse_cycles(const std::string& text, std::size_t n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> seen(n, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ')') {  // "()" is the identity
            ++pos;
            skip_ws();
            continue;
        }
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("cycle notation: expected index");
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 1 || static_cast<std::size_t>(v) > n)
                throw std::invalid_argument("cycle notation: index out of range");
            if (seen[v - 1]) throw std::invalid_argument("cycle notation: repeated symbol");
            seen[v - 1] = true;
            cyc.push_back(v);
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            throw std::invalid_argument("cycle notation: expected ',' or ')'");
        }
        for (std::size_t i = 0; i < cyc.size(); ++i)
            images[static_cast<std::size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation::from_images(images);
}

std::string format_cycles(const Permutation& p) {
    std::ostringstream os;
    std::vector<bool> done(p.degree(), false);
    bool any = false;
    for (std::size_t i = 1; i <= p.degree(); ++i) {
        if (done[i - 1] || p.map(static_cast<int>(i)) == static_cast<int>(i)) continue;
        os << "(";
        int j = static_cast<int>(i);
        bool first = true;
        do {
            os << (first ? "" : ",") << j;
            first = false;
            done[static_cast<std::size_t>(j) - 1] = true;
            j = p.map(j);
        } while (j != static_cast<int>(i));
        os << ")";
        any = true;
    }
    return any ? os.str() : "()";
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::size_t cap) {
    if (generators.empty()) return {};
    std::size_t n = generators[0].degree();
    for (const auto& g : generators)
        if (g.degree() != n) throw std::invalid_argument("generators of mixed degree");
    std::set<Permutation> group{Permutation(n)};
    std::vector<Permutation> frontier{Permutation(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& f : frontier) {
            for (const auto& g : generators) {
                Permutation h = compose(g, f);
                if (group.insert(h).second) {
                    if (group.size() > cap) throw std::runtime_error("generate_group: cap exceeded");
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

Permutation induced_binary_perm(const Permutation& mixed, std::size_t alpha) {
    std::size_t m = mixed.degree();
    std::size_t beta = m - alpha;
    std::vector<int> images(alpha + 2 * beta);
    for (std::size_t i = 1; i <= m; ++i) {
        int j = mixed.map(static_cast<int>(i));
        if (i <= alpha) {
            images[i - 1] = j;
        } else {
            images[static_cast<std::size_t>(phi1(alpha, static_cast<int>(i))) - 1] = phi1(alpha, j);
            images[static_cast<std::size_t>(phi2(alpha, static_cast<int>(i))) - 1] = phi2(alpha, j);
        }
    }
    return Permutation::from_images(images);
}

bool is_automorphism(const Permutation& p, const Z2Z4Code& C) {
    if (p.degree() != C.length())
        throw std::invalid_argument("is_automorphism: permutation degree != code length");
    for (const auto& x : C.gray_codewords())
        if (!C.contains(p.apply(x))) return false;
    return true;
}

}  // namespace z2z4
