// Mixed-alphabet vectors over Z2^alpha x Z4^beta, the Gray map and the
// weight/distance functions built on it. Everything here is a pure value;
// coordinate indices in public interfaces are 1-based.

#ifndef Z2Z4_CORE_HPP
#define Z2Z4_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace z2z4 {

/// Binary vector; entry values are 0 or 1.
using BinaryVector = std::vector<std::uint8_t>;

/// Ordered set of 1-based coordinate positions, strictly increasing.
using CoordSet = std::vector<int>;

/// Element of Z2^alpha x Z4^beta.
struct MixedVector {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::vector<std::uint8_t> bits;   // alpha entries in {0,1}
    std::vector<std::uint8_t> quats;  // beta entries in {0,1,2,3}

    MixedVector() = default;
    MixedVector(std::size_t a, std::size_t b);
    MixedVector(std::vector<std::uint8_t> bits_, std::vector<std::uint8_t> quats_);

    bool is_zero() const;
    /// True iff 2*v = 0, i.e. every quaternary entry lies in {0,2}.
    bool has_order_at_most_two() const;

    bool operator==(const MixedVector&) const = default;
};

MixedVector operator+(const MixedVector& u, const MixedVector& v);
MixedVector operator-(const MixedVector& u, const MixedVector& v);
MixedVector negate(const MixedVector& v);
/// Componentwise scalar multiple: bits by (s mod 2), quats by (s mod 4).
MixedVector scaled(const MixedVector& v, int s);

/// Gray map: binary part copied, each quat mapped by
/// phi(0)=(0,0), phi(1)=(0,1), phi(2)=(1,1), phi(3)=(1,0).
BinaryVector gray(const MixedVector& v);

/// Inverse Gray map; the first `alpha` coordinates become the binary part.
/// Throws std::invalid_argument when v.size() - alpha is odd.
MixedVector gray_inverse(const BinaryVector& v, std::size_t alpha);

std::size_t hamming_weight(const BinaryVector& v);
std::size_t hamming_distance(const BinaryVector& u, const BinaryVector& v);

/// Lee weight: Hamming weight of the binary part plus the componentwise
/// Lee weights wtL(0)=0, wtL(1)=wtL(3)=1, wtL(2)=2 of the quaternary part.
std::size_t lee_weight(const MixedVector& v);
std::size_t lee_distance(const MixedVector& u, const MixedVector& v);

/// <u,v> = 2*sum(binary part) + sum(quaternary part) mod 4, the binary
/// entries embedded into Z4 as 0/1. Throws on shape mismatch.
int inner_product(const MixedVector& u, const MixedVector& v);

BinaryVector add(const BinaryVector& u, const BinaryVector& v);

/// v restricted to the coordinates in I (1-based, strictly increasing).
BinaryVector restrict_to(const BinaryVector& v, const CoordSet& I);

/// Binary coordinates of quaternary coordinate j (1-based mixed coordinate,
/// alpha < j <= alpha+beta): phi1 = alpha + 2(j-alpha) - 1, phi2 = phi1 + 1.
int phi1(std::size_t alpha, int j);
int phi2(std::size_t alpha, int j);

/// Checks 1-based positions, strict increase; throws std::invalid_argument.
void validate_coord_set(const CoordSet& I, std::size_t n);

// Text forms. Binary vectors are contiguous bit strings ("01010101");
// mixed vectors are "bits | quats" with space-separated digits and a "-"
// marking an empty side, e.g. "- | 3 2 1 0".
std::string format_binary(const BinaryVector& v);
BinaryVector parse_binary(const std::string& text);
std::string format_mixed(const MixedVector& v);
MixedVector parse_mixed(const std::string& text);

}  // namespace z2z4

#endif
