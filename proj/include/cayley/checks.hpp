#ifndef CAYLEY_CHECKS_HPP
#define CAYLEY_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/check_result.hpp"
#include "cayley/construction.hpp"
#include "cayley/group_engine.hpp"

namespace cayley {

// Every check comes in two forms: one taking the instance parameter, which
// builds the construction itself, and one taking a Construction, so that
// tests can feed deliberately corrupted tables.

/// x, y, z are nontrivial involutions.
CheckResult verify_involutions(const Construction& c);
CheckResult verify_involutions(int m);

/// x, y, z and every R-generator are even permutations.
CheckResult verify_alt_containment(const Construction& c);
CheckResult verify_alt_containment(int m);

/// Exhaustive enumeration of Aut(H); pass iff every automorphism is even.
/// Throws std::invalid_argument for m > 5 (outside brute-force scope).
CheckResult verify_aut_h_alternating(int m);

// ---------------------------------------------------------------------------
// Arrow chains: explicit orbit segments of x, y, z on cosets of U.
//
// Terms are written as a^i b^j v c_{m-k}... with v one of u, u^x, u^y, u^xy.
// Each step names a word over {x, y, z} and the claimed image of the previous
// term under that word.

enum class ChainForm {
  /// The chains exactly as originally stated.
  printed,
  /// With the known transcription error in the odd-m chains repaired.
  corrected
};

struct ArrowFailure {
  std::string family;
  std::string source;
  std::string word;
  std::string target;
  Point u;
  Point actual;
  Point claimed;
};

struct ArrowTally {
  std::size_t quantified = 0;     // |U| (odd m) or |U ∩ H_1| (even m)
  std::size_t steps_checked = 0;  // individual arrows evaluated
  std::vector<ArrowFailure> failures;
};

/// Names of the chain families that apply to m, in evaluation order.
std::vector<std::string> arrow_families(int m);

/// Evaluates every arrow of the selected families for every quantified u.
/// Each arrow is checked from its stated source, so one wrong claim fails at
/// most the arrow into it and the arrow out of it.
ArrowTally evaluate_arrow_chains(const Construction& c, ChainForm form,
                                 const std::vector<std::string>& families);

/// Families whose coset bookkeeping collapses at m = 4 (c_{m-4} = c_{m-5} = 1).
bool arrow_family_degenerate_at_m4(const std::string& family);

/// Asserts the corrected chains; at m = 4 the degenerate families are
/// evaluated and reported only. Deviations of the printed form are listed
/// under details["errata"].
CheckResult verify_arrow_chains(const Construction& c);
CheckResult verify_arrow_chains(int m);

// ---------------------------------------------------------------------------

/// Cycle structure of (xyz)^8: exact 3-cycle decomposition for odd m; for even
/// m >= 6 the decomposition on H_1 c_{m-3}, the restriction identity on H_1 and
/// the fixed-point count 5*2^{m-3}. At m = 4 everything is reported.
CheckResult verify_xyz8_cycles(const Construction& c);
CheckResult verify_xyz8_cycles(int m);

/// The permutation (xyz)^8 predicted for odd m, as a permutation of H.
Permutation predicted_xyz8_odd(int m);

/// <x, y, z> is transitive on H \ {1} and fixes 1.
CheckResult verify_transitive_hstar(const Construction& c);
CheckResult verify_transitive_hstar(int m);

/// Every g outside U reaches c_{m-3} (odd m) or h (even m) under <x, y, z>.
CheckResult verify_word_witnesses(const Construction& c);
CheckResult verify_word_witnesses(int m);

enum class AltStrategy { automatic, chain, jordan };

struct AltOptions {
  AltStrategy strategy = AltStrategy::automatic;
  std::size_t degree_cap = 256;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
};

/// <x, y, R(H)> = Alt(H), by stabilizer chain order or by Jordan certificate.
/// automatic picks the chain when 2^m <= degree_cap. Throws
/// DegreeCapExceeded when the chain is requested above the cap.
CheckResult verify_full_alternating(const Construction& c, const AltOptions& options = {});
CheckResult verify_full_alternating(int m, const AltOptions& options = {});

/// Double coset size 3*2^m, x normalizes R(H), the y-conjugation intersection
/// equals R(K), and the x- and y-double cosets are disjoint. Throws
/// ClosureCapExceeded above the cap.
CheckResult verify_cubic(const Construction& c, std::size_t closure_cap = std::size_t{1} << 20);
CheckResult verify_cubic(int m, std::size_t closure_cap = std::size_t{1} << 20);

// ---------------------------------------------------------------------------
// Fixed-point patterns ruling out an automorphism swapping y and z.

/// Fixed points of p on H \ {1}, sorted.
std::vector<Point> fix_star(const Permutation& p);

struct FixPatternAnalysis {
  int m = 0;
  /// Names such as "Fix(y)" for the closed-form set; empty when none applies.
  std::string closed_form_set;
  bool closed_form_holds = true;
  std::size_t closed_form_size = 0;
  std::string empty_side;     // e.g. "Fix(y) ∩ Fix(xyx)"
  std::size_t empty_side_size = 0;
  std::string witness_side;
  std::size_t witness_side_size = 0;
  HElement printed_witness = HElement::identity(kMinM);
  bool printed_witness_in = false;
  HElement corrected_witness = HElement::identity(kMinM);
  bool corrected_witness_in = false;
  bool translation_holds = false;  // y R(a) z^{-1} in R(H)
};

FixPatternAnalysis analyze_fix_patterns(const Construction& c);

/// Asserts closed form, empty side, the corrected witness, differing sizes
/// and the translation fact; a failing printed witness is listed under
/// details["errata"].
CheckResult verify_fix_patterns(const Construction& c);
CheckResult verify_fix_patterns(int m);

/// Transitivity of <chi, psi, omega> on Z_2^ell (ell even, >= 2). Throws
/// std::invalid_argument otherwise.
CheckResult verify_vector_transitivity(int ell);

/// The three generators on Z_2^ell (vectors encoded as bit masks, bit i-1 for
/// e_i), in the order chi, psi, omega.
std::vector<Permutation> vector_generators(int ell);

}  // namespace cayley

#endif  // CAYLEY_CHECKS_HPP
