// Z2Z4-additive codes: standard-form reduction of a generator matrix,
// the dual / parity-check matrix, type arithmetic, membership, minimum
// Lee distance and the binary-linearity criterion.
//
// A code built from an arbitrary generator matrix is reduced to standard
// form once at construction; the encoder and decoders work in the
// standard-form coordinate frame, and col_perm (plus the frame helpers
// below) relates it to the coordinates the generators were given in.

#ifndef Z2Z4_CODE_HPP
#define Z2Z4_CODE_HPP

#include <iosfwd>
#include <vector>

#include "z2z4/core.hpp"
#include "z2z4/perm.hpp"

namespace z2z4 {

struct CodeType {
    std::size_t alpha = 0, beta = 0, gamma = 0, delta = 0, kappa = 0;
    bool operator==(const CodeType&) const = default;
};

/// Throws unless kappa <= min(alpha, gamma) and gamma + delta <= beta + kappa.
void validate_type(const CodeType& ct);

/// Dual type: (alpha, beta; alpha+gamma-2kappa, beta-gamma-delta+kappa; alpha-kappa).
CodeType dual_type(const CodeType& ct);

using BlockMatrix = std::vector<std::vector<std::uint8_t>>;

/// Generator matrix in standard form: row blocks
///   [ I_k  Tb | 2T2  0        0   ]      (kappa rows, order two)
///   [ 0    0  | 2T1  2I_{g-k} 0   ]      (gamma-kappa rows, order two)
///   [ 0    Sb | Sq   R        I_d ]      (delta rows, order four)
/// Tb, Sb over Z2; T1, T2, R over Z4 with entries in {0,1}; Sq over Z4.
struct StandardForm {
    CodeType type;
    std::vector<MixedVector> rows;  // kappa + (gamma-kappa) + delta rows
    Permutation col_perm;           // mixed coords; standard frame = col_perm(original)
    BlockMatrix Tb, Sb, T1, T2, R, Sq;
};

/// Reduces an arbitrary generator matrix by row operations (scaling by the
/// unit 3 allowed) and within-alphabet column permutations. Unit pivots and
/// order-two pivots are scanned rightmost-first so an already-standard
/// matrix comes back unchanged with identity col_perm; binary pivots are
/// scanned leftmost-first. Throws std::invalid_argument on an empty or
/// all-zero matrix.
StandardForm standard_form(std::size_t alpha, std::size_t beta,
                           const std::vector<MixedVector>& generators);

/// Rows of the parity-check matrix
///   [ Tb^t  I | 0  0         2Sb^t        ]
///   [ 0     0 | 0  2I_{g-k}  2R^t         ]
///   [ T2^t  0 | I  T1^t      -(Sq+R T1)^t ]
/// in standard-form coordinates; every row is orthogonal to every
/// standard-form generator row.
std::vector<MixedVector> dual(const StandardForm& sf);

class Z2Z4Code {
  public:
    /// Builds the code and its standard form. Minimum distance, codeword
    /// list and the linearity flag are computed on demand at first use and
    /// require |C| = 2^{gamma+2delta} <= enum_cap.
    Z2Z4Code(std::size_t alpha, std::size_t beta, std::vector<MixedVector> generators,
             std::size_t enum_cap = std::size_t(1) << 24);

    std::size_t alpha() const { return alpha_; }
    std::size_t beta() const { return beta_; }
    /// Binary length of the Gray image, alpha + 2*beta.
    std::size_t length() const { return alpha_ + 2 * beta_; }
    const std::vector<MixedVector>& generators() const { return generators_; }
    const StandardForm& standard() const { return std_; }
    const CodeType& type() const { return std_.type; }
    /// Parity-check rows in standard-form coordinates.
    const std::vector<MixedVector>& parity() const { return parity_; }
    /// |C| = 2^{gamma+2delta}.
    std::size_t size() const;

    /// Membership of a binary vector (standard frame) via the parity rows.
    bool contains(const BinaryVector& x) const;
    /// Membership of a mixed vector (standard frame, additive code).
    bool contains_mixed(const MixedVector& v) const;

    /// All codewords of the additive code, standard frame.
    const std::vector<MixedVector>& codewords() const;
    /// Their Gray images, sorted.
    const std::vector<BinaryVector>& gray_codewords() const;

    /// Minimum Lee weight over nonzero codewords (= minimum Hamming
    /// distance of the Gray image).
    std::size_t min_distance() const;
    int t() const { return static_cast<int>((min_distance() - 1) / 2); }

    /// 2(v_j * v_k) is a codeword for every pair of order-four generator
    /// rows (componentwise product); equivalent to the Gray image being
    /// closed under binary addition.
    bool is_binary_linear() const;

    BinaryVector to_standard_frame(const BinaryVector& original) const;
    BinaryVector from_standard_frame(const BinaryVector& standard) const;

  private:
    std::size_t alpha_, beta_, enum_cap_;
    std::vector<MixedVector> generators_;
    StandardForm std_;
    std::vector<MixedVector> parity_;
    Permutation gray_perm_;  // induced binary col_perm
    // Enumeration caches, filled on first use.
    mutable std::vector<MixedVector> codewords_;
    mutable std::vector<BinaryVector> gray_codewords_;
    mutable std::size_t min_distance_ = 0;
    mutable int linear_ = -1;
};

/// Code file format (text, '#' starts a comment):
///   alpha <a> beta <b>
///   rows <k>
///   k generator lines, e.g. "1 1 | 2 0 0"  (alpha = 0 writes "- | ...")
/// Throws std::runtime_error with a line number on malformed input.
Z2Z4Code parse_code(std::istream& in);
void write_code(std::ostream& out, const Z2Z4Code& c);

}  // namespace z2z4

#endif
