#include "z2z4/decode.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "z2z4/encode.hpp"

namespace z2z4 {

MixedVector syndrome(const Z2Z4Code& C, const BinaryVector& y) {
    if (y.size() != C.length()) throw std::invalid_argument("syndrome: length mismatch");
    MixedVector m = gray_inverse(y, C.alpha());
    MixedVector s(0, C.parity().size());
    for (std::size_t j = 0; j < C.parity().size(); ++j)
        s.quats[j] = static_cast<std::uint8_t>(inner_product(C.parity()[j], m));
    return s;
}

namespace {

// Runs both decoders' shared scan: identity first, then the PD-set order.
template <typename Accept>
DecodeOutcome scan_decode(const Z2Z4Code& C, const PDSet& S, const BinaryVector& y,
                          Accept accept) {
    const CoordSet J = standard_info_set(C.type());
    Permutation id(C.length());
    auto attempt = [&](const Permutation& p) -> std::optional<DecodeOutcome> {
        BinaryVector z = p.apply(y);
        if (!accept(z)) return std::nullopt;
        BinaryVector shifted = encode(restrict_to(z, J), C);
        DecodeOutcome out;
        out.status = DecodeStatus::decoded;
        out.perm_used = p;
        out.codeword = p.inverse().apply(shifted);
        out.info = restrict_to(out.codeword, J);
        out.errors_corrected = hamming_distance(y, out.codeword);
        return out;
    };
    if (auto out = attempt(id)) return *out;
    for (const auto& p : S.perms) {
        if (p.is_identity()) continue;
        if (auto out = attempt(p)) return *out;
    }
    DecodeOutcome fail;
    fail.status = DecodeStatus::failure;
    fail.perm_used = id;
    return fail;
}

}  // namespace

DecodeOutcome decode_syndrome(const Z2Z4Code& C, const PDSet& S, const BinaryVector& y) {
    if (C.type().gamma != C.type().kappa && !C.is_binary_linear())
        throw std::invalid_argument(
            "syndrome decoding is only valid when gamma = kappa or the Gray image is linear");
    const int t = C.t();
    return scan_decode(C, S, y, [&](const BinaryVector& z) {
        return lee_weight(syndrome(C, z)) <= static_cast<std::size_t>(t);
    });
}

bool info_correct(const Z2Z4Code& C, const BinaryVector& y) {
    if (y.size() != C.length()) throw std::invalid_argument("info_correct: length mismatch");
    const CoordSet J = standard_info_set(C.type());
    BinaryVector fx = encode(restrict_to(y, J), C);
    return hamming_distance(y, fx) <= static_cast<std::size_t>(C.t());
}

DecodeOutcome decode_alternative(const Z2Z4Code& C, const PDSet& S, const BinaryVector& y) {
    return scan_decode(C, S, y, [&](const BinaryVector& z) { return info_correct(C, z); });
}

namespace {

// Visits the supports of all error patterns with 1 <= wt <= radius, in
// weight-ascending then lexicographic order over `positions`. Stops early
// when the visitor returns false.
template <typename Visit>
void for_each_support(const std::vector<int>& positions, int radius, Visit visit) {
    for (int w = 1; w <= radius; ++w) {
        if (static_cast<std::size_t>(w) > positions.size()) break;
        std::vector<std::size_t> idx(static_cast<std::size_t>(w));
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        while (true) {
            std::vector<int> support;
            for (auto i : idx) support.push_back(positions[i]);
            if (!visit(support)) return;
            // next combination
            std::size_t k = idx.size();
            while (k > 0 && idx[k - 1] == positions.size() - idx.size() + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

PDVerifyResult verify_pd_set(const PDSet& S, std::size_t n) {
    validate_coord_set(S.info_set, n);
    std::vector<bool> in_I(n + 1, false);
    for (int i : S.info_set) in_I[static_cast<std::size_t>(i)] = true;
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i) + 1;

    PDVerifyResult res;
    res.ok = true;
    for_each_support(all, S.radius, [&](const std::vector<int>& support) {
        bool displaced = false;
        for (const auto& p : S.perms) {
            bool off = true;
            for (int pos : support)
                if (in_I[static_cast<std::size_t>(p.map(pos))]) {
                    off = false;
                    break;
                }
            if (off) {
                displaced = true;
                break;
            }
        }
        if (!displaced) {
            res.ok = false;
            res.witness.assign(n, 0);
            for (int pos : support) res.witness[static_cast<std::size_t>(pos) - 1] = 1;
            return false;
        }
        return true;
    });
    return res;
}

std::optional<PDSet> search_pd_set(const std::vector<Permutation>& candidates, const CoordSet& I,
                                   int radius, std::size_t n) {
    validate_coord_set(I, n);
    std::vector<bool> in_I(n + 1, false);
    for (int i : I) in_I[static_cast<std::size_t>(i)] = true;
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i) + 1;

    auto displaces = [&](const Permutation& p, const std::vector<int>& support) {
        for (int pos : support)
            if (in_I[static_cast<std::size_t>(p.map(pos))]) return false;
        return true;
    };

    Permutation id(n);
    std::vector<std::vector<int>> pending;
    for_each_support(all, radius, [&](const std::vector<int>& support) {
        if (!displaces(id, support)) pending.push_back(support);
        return true;
    });

    PDSet S{{id}, I, radius};
    std::vector<const Permutation*> pool;
    for (const auto& c : candidates)
        if (!c.is_identity()) pool.push_back(&c);

    while (!pending.empty()) {
        const Permutation* best = nullptr;
        std::size_t best_count = 0;
        for (const Permutation* c : pool) {
            std::size_t count = 0;
            for (const auto& support : pending)
                if (displaces(*c, support)) ++count;
            if (count > best_count) {
                best_count = count;
                best = c;
            }
        }
        if (!best) return std::nullopt;  // remaining patterns cannot be displaced
        S.perms.push_back(*best);
        std::erase_if(pending, [&](const std::vector<int>& s) { return displaces(*best, s); });
        std::erase_if(pool, [&](const Permutation* c) { return c == best; });
    }
    return S;
}

std::optional<BinaryVector> find_syndrome_counterexample(const Z2Z4Code& C) {
    const CodeType& ct = C.type();
    const int t = C.t();
    const std::size_t n = C.length();
    const CoordSet J = standard_info_set(ct);
    std::vector<bool> in_J(n + 1, false);
    for (int i : J) in_J[static_cast<std::size_t>(i)] = true;

    // Complement of J with the L3 positions (second Gray bit over the
    // 2I_{gamma-kappa} columns) listed first: the violations live there.
    std::vector<int> ordered;
    for (std::size_t i = 1; i <= ct.gamma - ct.kappa; ++i)
        ordered.push_back(phi2(
            ct.alpha, static_cast<int>(ct.alpha + ct.beta + ct.kappa - ct.gamma - ct.delta + i)));
    for (std::size_t pos = 1; pos <= n; ++pos)
        if (!in_J[pos] && std::find(ordered.begin(), ordered.end(), static_cast<int>(pos)) ==
                              ordered.end())
            ordered.push_back(static_cast<int>(pos));

    std::optional<BinaryVector> witness;
    for_each_support(ordered, t, [&](const std::vector<int>& support) {
        BinaryVector e(n, 0);
        for (int pos : support) e[static_cast<std::size_t>(pos) - 1] = 1;
        if (lee_weight(syndrome(C, e)) > static_cast<std::size_t>(t)) {
            witness = e;
            return false;
        }
        return true;
    });
    return witness;
}

PDSet parse_pd_set(std::istream& in, std::size_t n) {
    PDSet S;
    bool have_info = false, have_t = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto fail = [&](const std::string& what) -> void {
            throw std::runtime_error("pd-set file, line " + std::to_string(lineno) + ": " + what);
        };
        if (line.compare(first, 9, "info_set:") == 0) {
            std::string rest = line.substr(first + 9);
            std::replace(rest.begin(), rest.end(), ',', ' ');
            std::istringstream is(rest);
            int v;
            while (is >> v) S.info_set.push_back(v);
            try {
                validate_coord_set(S.info_set, n);
            } catch (const std::exception& e) {
                fail(e.what());
            }
            have_info = true;
        } else if (line.compare(first, 2, "t:") == 0) {
            std::istringstream is(line.substr(first + 2));
            if (!(is >> S.radius) || S.radius < 0) fail("bad radius");
            have_t = true;
        } else {
            try {
                S.perms.push_back(parse_cycles(line, n));
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
    }
    if (!have_info) throw std::runtime_error("pd-set file: missing 'info_set:' header");
    if (!have_t) throw std::runtime_error("pd-set file: missing 't:' header");
    bool has_id = std::any_of(S.perms.begin(), S.perms.end(),
                              [](const Permutation& p) { return p.is_identity(); });
    if (!has_id) S.perms.insert(S.perms.begin(), Permutation(n));
    return S;
}

void write_pd_set(std::ostream& out, const PDSet& S) {
    out << "info_set: ";
    for (std::size_t i = 0; i < S.info_set.size(); ++i) out << (i ? "," : "") << S.info_set[i];
    out << "\n"
        << "t: " << S.radius << "\n";
    for (const auto& p : S.perms) out << format_cycles(p) << "\n";
}

}  // namespace z2z4
