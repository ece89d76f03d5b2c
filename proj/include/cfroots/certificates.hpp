#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfroots/homography.hpp"
#include "cfroots/reduction.hpp"
#include "cfroots/tensor_poly.hpp"

namespace cfroots {

enum class VerdictKind { Empty, UniqueRoot, Unknown };

enum class EmptyReason {
    AllSameSign,           // one transformed polynomial is sign-definite
    IntervalSignConstant,  // interval evaluation of an original polynomial excludes zero
    EmptyBoundsIntersection,
    BoundSentinel,
};

struct TestVerdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<EmptyReason> reason;
    int poly = -1;  // witness polynomial index, when applicable
    int axis = -1;  // witness axis, when applicable

    static TestVerdict empty(EmptyReason r, int poly = -1, int axis = -1) {
        return {VerdictKind::Empty, r, poly, axis};
    }
    static TestVerdict unique_root() { return {VerdictKind::UniqueRoot, std::nullopt, -1, -1}; }
    static TestVerdict unknown() { return {VerdictKind::Unknown, std::nullopt, -1, -1}; }
};

std::string to_string(EmptyReason r);

/// Sign-definite with nonzero constant coefficient: the polynomial cannot
/// vanish at any finite point of the closed positive orthant.  This is the
/// closed-box-sound form of coefficient sign inspection.
bool sign_excludes(const TensorPoly& transformed);

/// Exclusion test on a transformed system: (a) coefficient sign inspection,
/// (b) interval evaluation of the original polynomials over the represented
/// box (bounded boxes only), (c) envelope bound sentinels and empty bound
/// intersections.  An Empty verdict certifies that no zero of the original
/// system lies in the box, boundary points owned by this state included.
TestVerdict exclusion_test(const std::vector<TensorPoly>& transformed,
                           const std::vector<TensorPoly>& originals, const Homography& map,
                           const BoundsOptions& bounds_opts = {});

/// Strict sign of a face polynomial over the closed face, +1/-1, or 0 when
/// not sign-definite there.  Sign-definite means one-signed coefficients
/// with every corner coefficient (all indices at 0 or at declared degree)
/// nonzero, which is equivalent to the face function having no zero on the
/// closed face including its boundary at infinity.
int strict_face_sign(const TensorPoly& face);

/// Miranda existence test on the 0-1 opposition matrix, decided by bipartite
/// perfect matching (entry (i,j): faces of poly i along axis j are strictly
/// sign-definite and opposite).  True certifies at least one root strictly
/// inside the box.  Requires a square system.
bool miranda_test(const std::vector<TensorPoly>& transformed);

/// True when a perfect matching exists in the 0-1 matrix (rows to columns).
bool has_perfect_matching(const std::vector<std::vector<int>>& matrix);

/// True when det J of the original system has provably constant sign over
/// the box: symbolic determinant + interval evaluation for n <= 3 (the
/// determinant polynomial may be supplied precomputed), interval Gaussian
/// elimination for larger systems.  Sound, possibly conservative.
bool jacobian_sign_constant(const std::vector<TensorPoly>& originals, const DomainBox& box,
                            const TensorPoly* det_jacobian = nullptr);

/// Symbolic Jacobian determinant (cofactor expansion), any square size.
TensorPoly jacobian_determinant(const std::vector<TensorPoly>& originals);

/// UniqueRoot iff miranda_test and jacobian_sign_constant; Unknown otherwise.
TestVerdict inclusion_test(const std::vector<TensorPoly>& transformed,
                           const std::vector<TensorPoly>& originals, const Homography& map,
                           const TensorPoly* det_jacobian = nullptr);

}  // namespace cfroots
