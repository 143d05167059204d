// Permutation decoding: the classical syndrome algorithm (valid when
// gamma = kappa or the Gray image is linear) and the alternative algorithm
// that tests the systematic coordinates by re-encoding. Includes PD-set
// verification/search and the counterexample finder showing why the
// syndrome test breaks when gamma > kappa. All vectors are in the code's
// standard-form frame.

#ifndef Z2Z4_DECODE_HPP
#define Z2Z4_DECODE_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "z2z4/code.hpp"
#include "z2z4/core.hpp"
#include "z2z4/perm.hpp"

namespace z2z4 {

struct PDSet {
    std::vector<Permutation> perms;  // scanned in order; identity first by convention
    CoordSet info_set;
    int radius = 0;  // t
};

enum class DecodeStatus { decoded, failure };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::failure;
    BinaryVector codeword;
    BinaryVector info;
    Permutation perm_used;
    std::size_t errors_corrected = 0;
};

/// Components <h_j, Phi^-1(y)> over the parity rows, packed as a pure
/// quaternary MixedVector so its Lee weight is wtL(H Phi^-1(y)^T).
/// Zero exactly on codewords.
MixedVector syndrome(const Z2Z4Code& C, const BinaryVector& y);

/// Classical permutation decoding driven by the Lee-weight syndrome test.
/// Rejects codes with gamma != kappa whose Gray image is nonlinear (the
/// test is provably wrong there); throws std::invalid_argument for them.
DecodeOutcome decode_syndrome(const Z2Z4Code& C, const PDSet& S, const BinaryVector& y);

/// wt(y + f(y_J)) <= t: the systematic coordinates of y are correct.
bool info_correct(const Z2Z4Code& C, const BinaryVector& y);

/// Alternative permutation decoding: test info_correct on y, then on
/// pi(y) over the PD-set; failure means more than t errors.
DecodeOutcome decode_alternative(const Z2Z4Code& C, const PDSet& S, const BinaryVector& y);

struct PDVerifyResult {
    bool ok = false;
    BinaryVector witness;  // first failing error pattern when !ok
};

/// Exhaustive over all error patterns of weight <= radius: each must be
/// moved entirely off the information set by some permutation in S.
/// Patterns are scanned weight-ascending, positions lexicographic, so the
/// reported witness is deterministic.
PDVerifyResult verify_pd_set(const PDSet& S, std::size_t n);

/// Greedy cover: repeatedly adds the candidate displacing the most
/// still-uncovered error patterns; returns std::nullopt when the
/// candidates jointly fail to cover everything. Candidates are expected to
/// be automorphisms (checked by the caller / CLI).
std::optional<PDSet> search_pd_set(const std::vector<Permutation>& candidates, const CoordSet& I,
                                   int radius, std::size_t n);

/// Searches error patterns e with wt(e) <= t and wt(e_J) = 0 whose Lee
/// syndrome weight exceeds t, i.e. violations of the syndrome test;
/// positions in L3 (second Gray bit of the 2I_{gamma-kappa} columns) are
/// tried first. Returns std::nullopt when no violation exists.
std::optional<BinaryVector> find_syndrome_counterexample(const Z2Z4Code& C);

/// PD-set file format: header lines "info_set: i1,i2,..." and "t: <t>",
/// then one permutation per line in cycle notation; '#' starts a comment.
PDSet parse_pd_set(std::istream& in, std::size_t n);
void write_pd_set(std::ostream& out, const PDSet& S);

}  // namespace z2z4

#endif
