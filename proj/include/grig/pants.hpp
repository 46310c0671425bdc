#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "grig/binary_word.hpp"
#include "grig/gen_word.hpp"
#include "grig/portrait.hpp"

namespace grig {

// Sign convention: a right-handed Dehn twist counts +1, a left-handed one -1.

/// Local mapping class of one pair of pants: whether the cuffs are
/// exchanged, plus signed twist counts on (waist, left cuff, right cuff).
struct PantsClass {
    bool swap = false;
    std::array<std::int64_t, 3> twists{0, 0, 0};

    friend bool operator==(const PantsClass&, const PantsClass&) = default;
};

inline constexpr PantsClass kPantsIdentity{};
/// Fixes the waist pointwise and exchanges the cuffs.
inline constexpr PantsClass kSigma{true, {0, 0, 0}};
/// sigma^2: left-handed twist on the waist, right-handed twists on both cuffs.
inline constexpr std::array<std::int64_t, 3> kSigmaSquaredTwists{-1, +1, +1};

/// (v1,s1)(v2,s2) = (v1 + s1.v2 + kappa(s1,s2), s1 xor s2), where s.v swaps
/// the cuff entries when s is set and kappa(1,1) = (-1,+1,+1).
PantsClass pants_mul(const PantsClass& p, const PantsClass& q);

/// Finite model of the lifted group. A depth-n element describes the pants
/// P_w for every vertex |w| <= n+1: a swap bit per pants (a portrait of
/// tree depth n+2) and an integer twist on the waist annulus of each P_w.
/// The waist of P_w0 is glued to the left cuff of P_w, so a cuff twist of
/// P_w is recorded at the child vertex. Cuff twists of the bottom pants
/// (level n+2) are outside the model.
class LiftedElement {
public:
    LiftedElement() : LiftedElement(0) {}
    explicit LiftedElement(int depth);

    static LiftedElement identity(int depth) { return LiftedElement(depth); }

    int depth() const noexcept { return depth_; }
    const Portrait& portrait() const noexcept { return portrait_; }

    /// Twist on the waist of P_w; throws IndexOutOfRange unless |w| <= depth+1.
    std::int64_t twist_at(const BinaryWord& w) const;
    /// Non-zero twists in lexicographic vertex order.
    std::map<BinaryWord, std::int64_t> twists() const;
    bool twists_zero() const noexcept;

    /// Restriction to a smaller depth: portrait and twists on W_{<=depth+1}.
    LiftedElement truncated(int depth) const;

    friend LiftedElement lifted_mul(const LiftedElement& h1, const LiftedElement& h2);
    friend LiftedElement lift_gen(Gen g, int depth);

    friend bool operator==(const LiftedElement&, const LiftedElement&) = default;

private:
    int depth_ = 0;
    Portrait portrait_;
    std::vector<std::int64_t> twists_; // by heap index
};

/// Lift of a generator: swaps at its swap vertices, no twists.
LiftedElement lift_gen(Gen g, int depth);

/// h1 . h2 (h2 acts first). Twist at w: h2(w) + h1(h2 w), plus the cocycle
/// (-1 at v, +1 at both children) at every v where h2 swaps at v and h1
/// swaps at h2(v). Throws DepthMismatch.
LiftedElement lifted_mul(const LiftedElement& h1, const LiftedElement& h2);

/// Product of generator lifts, rightmost acting first.
LiftedElement lift_word(const GenWord& gw, int depth);

/// Twist vector of a relator's lift. Throws NotARelator if gw is nontrivial.
std::map<BinaryWord, std::int64_t> kernel_vector(const GenWord& gw, int depth);

struct CommutationCheck {
    std::size_t first = 0;
    std::size_t second = 0;
    bool commutes = false;
};

struct KernelReport {
    int depth = 0;
    std::vector<GenWord> relators;
    std::vector<bool> portrait_trivial;
    std::vector<CommutationCheck> pairs;
    bool all_commute = true;
};

/// Lifts every relator and tests all pairs (i < j) for commutation.
/// Throws NotARelator if any word is nontrivial in G.
KernelReport check_kernel_abelian(const std::vector<GenWord>& relators, int depth);

/// Seeded relators: conjugates w r w^-1 (|w| <= 6) of (ad)^4, (ac)^8 and
/// (ab)^16, and products of two conjugated generator squares, in rotation.
std::vector<GenWord> sample_relators(std::size_t count, std::uint64_t seed);

} // namespace grig
