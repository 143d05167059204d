// Permutations on {1..n}, their action on binary vectors by coordinate
// permutation pi(v)_i = v_{pi^-1(i)}, cycle-notation text form, and group
// closure from generators.

#ifndef Z2Z4_PERM_HPP
#define Z2Z4_PERM_HPP

#include <string>
#include <vector>

#include "z2z4/core.hpp"

namespace z2z4 {

class Z2Z4Code;

class Permutation {
  public:
    /// Identity on {1..n}.
    explicit Permutation(std::size_t n = 0);
    /// images[i-1] = pi(i), 1-based; must be a bijection of {1..n}.
    static Permutation from_images(const std::vector<int>& images);

    std::size_t degree() const { return img_.size(); }
    /// pi(i), 1-based.
    int map(int i) const { return img_[static_cast<std::size_t>(i) - 1] + 1; }
    bool is_identity() const;

    BinaryVector apply(const BinaryVector& v) const;
    /// Action on mixed coordinates {1..alpha+beta}; must not move a binary
    /// coordinate to a quaternary position or vice versa.
    MixedVector apply_mixed(const MixedVector& v) const;

    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    /// Total order so permutations can live in sorted containers.
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

  private:
    std::vector<int> img_;  // 0-based: img_[i] = pi(i+1)-1
};

/// (p*q)(i) = p(q(i)), so apply(p*q, v) = apply(p, apply(q, v)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Parses disjoint-cycle notation like "(1,3,5,7)(2,4,6,8)"; the empty
/// string is the identity. Throws on malformed text, repeats, index > n.
Permutation parse_cycles(const std::string& text, std::size_t n);

/// Canonical cycle form: cycles sorted by smallest element, fixed points
/// omitted; identity prints as "()".
std::string format_cycles(const Permutation& p);

/// Closure of the generators under composition (breadth-first); throws
/// std::runtime_error if the group grows past `cap` elements.
std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::size_t cap = std::size_t(1) << 20);

/// The permutation on {1..alpha+2beta} of binary coordinates induced by a
/// mixed-coordinate permutation (each quaternary coordinate carries its
/// Gray pair along in order).
Permutation induced_binary_perm(const Permutation& mixed, std::size_t alpha);

/// Membership in PAut(C): apply(p, x) is a codeword for every codeword x
/// of the Gray image. Exhaustive over |C| codewords.
bool is_automorphism(const Permutation& p, const Z2Z4Code& C);

}  // namespace z2z4

#endif
