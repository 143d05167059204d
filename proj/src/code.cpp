#include "z2z4/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace z2z4 {

void validate_type(const CodeType& ct) {
    if (ct.kappa > ct.alpha || ct.kappa > ct.gamma)
        throw std::invalid_argument("type: kappa must be <= min(alpha, gamma)");
    if (ct.gamma + ct.delta > ct.beta + ct.kappa)
        throw std::invalid_argument("type: gamma + delta must be <= beta + kappa");
}

CodeType dual_type(const CodeType& ct) {
    validate_type(ct);
    return {ct.alpha, ct.beta, ct.alpha + ct.gamma - 2 * ct.kappa,
            ct.beta - ct.gamma - ct.delta + ct.kappa, ct.alpha - ct.kappa};
}

namespace {

// r -= c * p, componentwise mod 2 / mod 4.
void subtract_multiple(MixedVector& r, int c, const MixedVector& p) {
    for (std::size_t i = 0; i < r.alpha; ++i)
        r.bits[i] = static_cast<std::uint8_t>(((r.bits[i] - c * p.bits[i]) % 2 + 2) % 2);
    for (std::size_t i = 0; i < r.beta; ++i)
        r.quats[i] = static_cast<std::uint8_t>(((r.quats[i] - c * p.quats[i]) % 4 + 4) % 4);
}

}  // namespace

StandardForm standard_form(std::size_t alpha, std::size_t beta,
                           const std::vector<MixedVector>& generators) {
    if (generators.empty()) throw std::invalid_argument("standard_form: no generator rows");
    std::vector<MixedVector> rows;
    for (const auto& g : generators) {
        if (g.alpha != alpha || g.beta != beta)
            throw std::invalid_argument("standard_form: generator shape mismatch");
        rows.push_back(g);
    }
    std::vector<bool> used(rows.size(), false);

    // Phase 1: unit pivots over the quaternary part, columns scanned
    // rightmost-first so trailing identity blocks stay in place.
    std::vector<std::pair<std::size_t, std::size_t>> unit_pivots;  // (row, col)
    for (std::size_t col = beta; col-- > 0;) {
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            if (used[ri] || rows[ri].quats[col] % 2 == 0) continue;
            if (rows[ri].quats[col] == 3) rows[ri] = scaled(rows[ri], 3);
            used[ri] = true;
            for (std::size_t rj = 0; rj < rows.size(); ++rj)
                if (rj != ri && rows[rj].quats[col] != 0)
                    subtract_multiple(rows[rj], rows[rj].quats[col], rows[ri]);
            unit_pivots.emplace_back(ri, col);
            break;
        }
    }
    std::sort(unit_pivots.begin(), unit_pivots.end(),
              [](auto& a, auto& b) { return a.second < b.second; });
    const std::size_t delta = unit_pivots.size();

    // Phase 2: binary pivots among the remaining (order-two) rows,
    // leftmost-first.
    std::vector<std::pair<std::size_t, std::size_t>> bin_pivots;
    for (std::size_t col = 0; col < alpha; ++col) {
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            if (used[ri] || rows[ri].bits[col] == 0) continue;
            used[ri] = true;
            for (std::size_t rj = 0; rj < rows.size(); ++rj)
                if (rj != ri && rows[rj].bits[col] == 1) subtract_multiple(rows[rj], 1, rows[ri]);
            bin_pivots.emplace_back(ri, col);
            break;
        }
    }
    const std::size_t kappa = bin_pivots.size();

    // Phase 3: order-two pivots (entry 2) in the non-unit quaternary
    // columns, rightmost-first; entries 2 and 3 elsewhere drop mod 2 so the
    // R block lands in {0,1}.
    std::vector<bool> is_unit_col(beta, false);
    for (auto& [ri, col] : unit_pivots) is_unit_col[col] = true;
    std::vector<std::pair<std::size_t, std::size_t>> two_pivots;
    for (std::size_t col = beta; col-- > 0;) {
        if (is_unit_col[col]) continue;
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            if (used[ri] || rows[ri].quats[col] != 2) continue;
            used[ri] = true;
            for (std::size_t rj = 0; rj < rows.size(); ++rj)
                if (rj != ri && rows[rj].quats[col] >= 2) subtract_multiple(rows[rj], 1, rows[ri]);
            two_pivots.emplace_back(ri, col);
            break;
        }
    }
    std::sort(two_pivots.begin(), two_pivots.end(),
              [](auto& a, auto& b) { return a.second < b.second; });
    const std::size_t gamma = kappa + two_pivots.size();

    for (std::size_t ri = 0; ri < rows.size(); ++ri)
        if (!used[ri] && !rows[ri].is_zero())
            throw std::logic_error("standard_form: unreduced residual row");
    if (gamma == 0 && delta == 0) throw std::invalid_argument("standard_form: empty code");

    CodeType ct{alpha, beta, gamma, delta, kappa};
    validate_type(ct);

    // Column orders: pivot columns move to their Eq-pattern positions, all
    // other columns keep their relative order.
    std::vector<std::size_t> bin_order, q_order;
    std::vector<bool> is_bin_pivot(alpha, false);
    for (auto& [ri, col] : bin_pivots) bin_order.push_back(col), is_bin_pivot[col] = true;
    for (std::size_t c = 0; c < alpha; ++c)
        if (!is_bin_pivot[c]) bin_order.push_back(c);
    std::vector<bool> is_two_col(beta, false);
    for (auto& [ri, col] : two_pivots) is_two_col[col] = true;
    for (std::size_t c = 0; c < beta; ++c)
        if (!is_unit_col[c] && !is_two_col[c]) q_order.push_back(c);
    for (auto& [ri, col] : two_pivots) q_order.push_back(col);
    for (auto& [ri, col] : unit_pivots) q_order.push_back(col);

    std::vector<std::size_t> row_order;
    for (auto& [ri, col] : bin_pivots) row_order.push_back(ri);
    for (auto& [ri, col] : two_pivots) row_order.push_back(ri);
    for (auto& [ri, col] : unit_pivots) row_order.push_back(ri);

    StandardForm sf;
    sf.type = ct;
    for (std::size_t ri : row_order) {
        MixedVector r(alpha, beta);
        for (std::size_t j = 0; j < alpha; ++j) r.bits[j] = rows[ri].bits[bin_order[j]];
        for (std::size_t j = 0; j < beta; ++j) r.quats[j] = rows[ri].quats[q_order[j]];
        sf.rows.push_back(std::move(r));
    }

    std::vector<int> images(alpha + beta);
    for (std::size_t j = 0; j < alpha; ++j) images[bin_order[j]] = static_cast<int>(j) + 1;
    for (std::size_t j = 0; j < beta; ++j)
        images[alpha + q_order[j]] = static_cast<int>(alpha + j) + 1;
    sf.col_perm = Permutation::from_images(images);

    const std::size_t b0 = beta + kappa - gamma - delta;
    auto bit_slice = [](const std::vector<std::uint8_t>& v, std::size_t from, std::size_t count) {
        return std::vector<std::uint8_t>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                         v.begin() + static_cast<std::ptrdiff_t>(from + count));
    };
    auto halved = [](std::vector<std::uint8_t> v) {
        for (auto& x : v) x /= 2;
        return v;
    };
    for (std::size_t i = 0; i < kappa; ++i) {
        sf.Tb.push_back(bit_slice(sf.rows[i].bits, kappa, alpha - kappa));
        sf.T2.push_back(halved(bit_slice(sf.rows[i].quats, 0, b0)));
    }
    for (std::size_t i = kappa; i < gamma; ++i)
        sf.T1.push_back(halved(bit_slice(sf.rows[i].quats, 0, b0)));
    for (std::size_t i = gamma; i < gamma + delta; ++i) {
        sf.Sb.push_back(bit_slice(sf.rows[i].bits, kappa, alpha - kappa));
        sf.Sq.push_back(bit_slice(sf.rows[i].quats, 0, b0));
        sf.R.push_back(bit_slice(sf.rows[i].quats, b0, gamma - kappa));
    }
    return sf;
}

std::vector<MixedVector> dual(const StandardForm& sf) {
    const auto& ct = sf.type;
    const std::size_t alpha = ct.alpha, kappa = ct.kappa, gamma = ct.gamma, delta = ct.delta;
    const std::size_t b0 = ct.beta + kappa - gamma - delta;
    std::vector<MixedVector> H;

    for (std::size_t i = 0; i < alpha - kappa; ++i) {  // [Tb^t I | 0 0 2Sb^t]
        MixedVector h(ct.alpha, ct.beta);
        for (std::size_t r = 0; r < kappa; ++r) h.bits[r] = sf.Tb[r][i];
        h.bits[kappa + i] = 1;
        for (std::size_t j = 0; j < delta; ++j)
            h.quats[b0 + (gamma - kappa) + j] = static_cast<std::uint8_t>((2 * sf.Sb[j][i]) % 4);
        H.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < gamma - kappa; ++i) {  // [0 0 | 0 2I 2R^t]
        MixedVector h(ct.alpha, ct.beta);
        h.quats[b0 + i] = 2;
        for (std::size_t j = 0; j < delta; ++j)
            h.quats[b0 + (gamma - kappa) + j] = static_cast<std::uint8_t>((2 * sf.R[j][i]) % 4);
        H.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < b0; ++i) {  // [T2^t 0 | I T1^t -(Sq+R T1)^t]
        MixedVector h(ct.alpha, ct.beta);
        for (std::size_t r = 0; r < kappa; ++r) h.bits[r] = sf.T2[r][i];
        h.quats[i] = 1;
        for (std::size_t r = 0; r < gamma - kappa; ++r) h.quats[b0 + r] = sf.T1[r][i];
        for (std::size_t j = 0; j < delta; ++j) {
            int v = sf.Sq[j][i];
            for (std::size_t r = 0; r < gamma - kappa; ++r) v += sf.R[j][r] * sf.T1[r][i];
            h.quats[b0 + (gamma - kappa) + j] = static_cast<std::uint8_t>(((-v) % 4 + 4) % 4);
        }
        H.push_back(std::move(h));
    }
    return H;
}

Z2Z4Code::Z2Z4Code(std::size_t alpha, std::size_t beta, std::vector<MixedVector> generators,
                   std::size_t enum_cap)
    : alpha_(alpha),
      beta_(beta),
      enum_cap_(enum_cap),
      generators_(std::move(generators)),
      std_(standard_form(alpha, beta, generators_)),
      parity_(dual(std_)),
      gray_perm_(induced_binary_perm(std_.col_perm, alpha)) {}

std::size_t Z2Z4Code::size() const {
    std::size_t k = std_.type.gamma + 2 * std_.type.delta;
    if (k >= 8 * sizeof(std::size_t)) throw std::runtime_error("code too large to size");
    return std::size_t(1) << k;
}

bool Z2Z4Code::contains(const BinaryVector& x) const {
    if (x.size() != length()) throw std::invalid_argument("contains: length mismatch");
    return contains_mixed(gray_inverse(x, alpha_));
}

bool Z2Z4Code::contains_mixed(const MixedVector& v) const {
    for (const auto& h : parity_)
        if (inner_product(h, v) != 0) return false;
    return true;
}

const std::vector<MixedVector>& Z2Z4Code::codewords() const {
    if (!codewords_.empty()) return codewords_;
    const std::size_t gamma = std_.type.gamma, delta = std_.type.delta;
    std::size_t count = size();
    if (count > enum_cap_) throw std::runtime_error("codeword enumeration cap exceeded");
    codewords_.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        MixedVector w(alpha_, beta_);
        std::size_t rem = idx;
        for (std::size_t i = 0; i < gamma; ++i, rem /= 2)
            if (rem % 2) w = w + std_.rows[i];
        for (std::size_t j = 0; j < delta; ++j, rem /= 4)
            if (rem % 4) w = w + scaled(std_.rows[gamma + j], static_cast<int>(rem % 4));
        codewords_.push_back(std::move(w));
    }
    return codewords_;
}

const std::vector<BinaryVector>& Z2Z4Code::gray_codewords() const {
    if (gray_codewords_.empty()) {
        for (const auto& w : codewords()) gray_codewords_.push_back(gray(w));
        std::sort(gray_codewords_.begin(), gray_codewords_.end());
    }
    return gray_codewords_;
}

std::size_t Z2Z4Code::min_distance() const {
    if (min_distance_ == 0) {
        std::size_t best = length() + 1;
        for (const auto& w : codewords())
            if (!w.is_zero()) best = std::min(best, lee_weight(w));
        min_distance_ = best;
    }
    return min_distance_;
}

bool Z2Z4Code::is_binary_linear() const {
    if (linear_ < 0) {
        const std::size_t gamma = std_.type.gamma, delta = std_.type.delta;
        bool ok = true;
        for (std::size_t j = 0; ok && j < delta; ++j) {
            for (std::size_t k = j + 1; ok && k < delta; ++k) {
                const auto& vj = std_.rows[gamma + j];
                const auto& vk = std_.rows[gamma + k];
                MixedVector prod(alpha_, beta_);
                for (std::size_t i = 0; i < alpha_; ++i) prod.bits[i] = vj.bits[i] & vk.bits[i];
                for (std::size_t i = 0; i < beta_; ++i)
                    prod.quats[i] = static_cast<std::uint8_t>(vj.quats[i] * vk.quats[i] % 4);
                ok = contains_mixed(scaled(prod, 2));
            }
        }
        linear_ = ok ? 1 : 0;
    }
    return linear_ == 1;
}

BinaryVector Z2Z4Code::to_standard_frame(const BinaryVector& original) const {
    return gray_perm_.apply(original);
}

BinaryVector Z2Z4Code::from_standard_frame(const BinaryVector& standard) const {
    return gray_perm_.inverse().apply(standard);
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
    throw std::runtime_error("code file, line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Z2Z4Code parse_code(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) parse_fail(lineno, "missing 'alpha ... beta ...'");
    std::istringstream h1(line);
    std::string kw1, kw2;
    std::size_t alpha = 0, beta = 0;
    if (!(h1 >> kw1 >> alpha >> kw2 >> beta) || kw1 != "alpha" || kw2 != "beta")
        parse_fail(lineno, "expected 'alpha <a> beta <b>'");
    if (!next_content_line(in, line, lineno)) parse_fail(lineno, "missing 'rows <k>'");
    std::istringstream h2(line);
    std::size_t k = 0;
    if (!(h2 >> kw1 >> k) || kw1 != "rows") parse_fail(lineno, "expected 'rows <k>'");
    std::vector<MixedVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
        if (!next_content_line(in, line, lineno)) parse_fail(lineno, "missing generator row");
        MixedVector r;
        try {
            r = parse_mixed(line);
        } catch (const std::exception& e) {
            parse_fail(lineno, e.what());
        }
        if (r.alpha != alpha || r.beta != beta)
            parse_fail(lineno, "row shape does not match alpha/beta header");
        rows.push_back(std::move(r));
    }
    try {
        return Z2Z4Code(alpha, beta, std::move(rows));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("code file: ") + e.what());
    }
}

void write_code(std::ostream& out, const Z2Z4Code& c) {
    out << "alpha " << c.alpha() << " beta " << c.beta() << "\n";
    out << "rows " << c.generators().size() << "\n";
    for (const auto& r : c.generators()) out << format_mixed(r) << "\n";
}

}  // namespace z2z4
