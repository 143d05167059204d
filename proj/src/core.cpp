#include "z2z4/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace z2z4 {

MixedVector::MixedVector(std::size_t a, std::size_t b)
    : alpha(a), beta(b), bits(a, 0), quats(b, 0) {}

MixedVector::MixedVector(std::vector<std::uint8_t> bits_, std::vector<std::uint8_t> quats_)
    : alpha(bits_.size()), beta(quats_.size()), bits(std::move(bits_)), quats(std::move(quats_)) {
    for (auto b : bits)
        if (b > 1) throw std::invalid_argument("binary entry out of {0,1}");
    for (auto q : quats)
        if (q > 3) throw std::invalid_argument("quaternary entry out of {0..3}");
}

bool MixedVector::is_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](auto x) { return x == 0; }) &&
           std::all_of(quats.begin(), quats.end(), [](auto x) { return x == 0; });
}

bool MixedVector::has_order_at_most_two() const {
    return std::all_of(quats.begin(), quats.end(), [](auto x) { return x % 2 == 0; });
}

static void check_shape(const MixedVector& u, const MixedVector& v) {
    if (u.alpha != v.alpha || u.beta != v.beta)
        throw std::invalid_argument("mixed vector shape mismatch");
}

MixedVector operator+(const MixedVector& u, const MixedVector& v) {
    check_shape(u, v);
    MixedVector r = u;
    for (std::size_t i = 0; i < r.alpha; ++i) r.bits[i] = (r.bits[i] + v.bits[i]) % 2;
    for (std::size_t i = 0; i < r.beta; ++i) r.quats[i] = (r.quats[i] + v.quats[i]) % 4;
    return r;
}

MixedVector negate(const MixedVector& v) {
    MixedVector r = v;
    for (auto& q : r.quats) q = (4 - q) % 4;
    return r;
}

MixedVector operator-(const MixedVector& u, const MixedVector& v) { return u + negate(v); }

MixedVector scaled(const MixedVector& v, int s) {
    MixedVector r = v;
    for (auto& b : r.bits) b = static_cast<std::uint8_t>((b * (s % 2 + 2)) % 2);
    for (auto& q : r.quats) q = static_cast<std::uint8_t>((q * (s % 4 + 4)) % 4);
    return r;
}

BinaryVector gray(const MixedVector& v) {
    static constexpr std::uint8_t phi[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    BinaryVector out;
    out.reserve(v.alpha + 2 * v.beta);
    out.insert(out.end(), v.bits.begin(), v.bits.end());
    for (auto q : v.quats) {
        out.push_back(phi[q][0]);
        out.push_back(phi[q][1]);
    }
    return out;
}

MixedVector gray_inverse(const BinaryVector& v, std::size_t alpha) {
    if (alpha > v.size() || (v.size() - alpha) % 2 != 0)
        throw std::invalid_argument("gray_inverse: quaternary part has odd length");
    MixedVector r(alpha, (v.size() - alpha) / 2);
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(alpha), r.bits.begin());
    static constexpr std::uint8_t inv[2][2] = {{0, 1}, {3, 2}};  // inv[b1][b2]
    for (std::size_t i = 0; i < r.beta; ++i)
        r.quats[i] = inv[v[alpha + 2 * i]][v[alpha + 2 * i + 1]];
    return r;
}

std::size_t hamming_weight(const BinaryVector& v) {
    std::size_t w = 0;
    for (auto b : v) w += b != 0;
    return w;
}

std::size_t hamming_distance(const BinaryVector& u, const BinaryVector& v) {
    return hamming_weight(add(u, v));
}

std::size_t lee_weight(const MixedVector& v) {
    static constexpr std::size_t lee[4] = {0, 1, 2, 1};
    std::size_t w = 0;
    for (auto b : v.bits) w += b != 0;
    for (auto q : v.quats) w += lee[q];
    return w;
}

std::size_t lee_distance(const MixedVector& u, const MixedVector& v) { return lee_weight(u - v); }

int inner_product(const MixedVector& u, const MixedVector& v) {
    check_shape(u, v);
    int s = 0;
    for (std::size_t i = 0; i < u.alpha; ++i) s += 2 * u.bits[i] * v.bits[i];
    for (std::size_t i = 0; i < u.beta; ++i) s += u.quats[i] * v.quats[i];
    return s % 4;
}

BinaryVector add(const BinaryVector& u, const BinaryVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("binary vector length mismatch");
    BinaryVector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] ^ v[i];
    return r;
}

BinaryVector restrict_to(const BinaryVector& v, const CoordSet& I) {
    validate_coord_set(I, v.size());
    BinaryVector r;
    r.reserve(I.size());
    for (int i : I) r.push_back(v[static_cast<std::size_t>(i) - 1]);
    return r;
}

int phi1(std::size_t alpha, int j) {
    return static_cast<int>(alpha) + 2 * (j - static_cast<int>(alpha)) - 1;
}

int phi2(std::size_t alpha, int j) { return phi1(alpha, j) + 1; }

void validate_coord_set(const CoordSet& I, std::size_t n) {
    int prev = 0;
    for (int i : I) {
        if (i <= prev) throw std::invalid_argument("coordinate set not strictly increasing");
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw std::invalid_argument("coordinate index out of range");
        prev = i;
    }
}

std::string format_binary(const BinaryVector& v) {
    std::string s;
    s.reserve(v.size());
    for (auto b : v) s.push_back(static_cast<char>('0' + b));
    return s;
}

BinaryVector parse_binary(const std::string& text) {
    BinaryVector v;
    v.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1')
            v.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("bad binary digit '") + c + "'");
    }
    return v;
}

std::string format_mixed(const MixedVector& v) {
    std::ostringstream os;
    if (v.alpha == 0) {
        os << "-";
    } else {
        for (std::size_t i = 0; i < v.alpha; ++i) os << (i ? " " : "") << int(v.bits[i]);
    }
    os << " |";
    if (v.beta == 0) {
        os << " -";
    } else {
        for (auto q : v.quats) os << " " << int(q);
    }
    return os.str();
}

MixedVector parse_mixed(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("mixed vector: missing '|'");
    auto parse_side = [](const std::string& part, int max) {
        std::vector<std::uint8_t> out;
        std::istringstream is(part);
        std::string tok;
        while (is >> tok) {
            if (tok == "-") continue;
            if (tok.size() != 1 || tok[0] < '0' || tok[0] > char('0' + max))
                throw std::invalid_argument("mixed vector: bad digit '" + tok + "'");
            out.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
        }
        return out;
    };
    return MixedVector(parse_side(text.substr(0, bar), 1), parse_side(text.substr(bar + 1), 3));
}

}  // namespace z2z4
